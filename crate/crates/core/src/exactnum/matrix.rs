//! Dense matrices over a cyclotomic field.

use std::fmt;

use num_bigint::BigInt;

use super::{CycloNumber, CyclotomicField, ExactError, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct CycloMatrix {
    rows: usize,
    cols: usize,
    field: CyclotomicField,
    entries: Vec<CycloNumber>,
}

impl CycloMatrix {
    /// Row-major constructor. All entries must live in `field`.
    pub fn new(
        field: &CyclotomicField,
        rows: usize,
        cols: usize,
        entries: Vec<CycloNumber>,
    ) -> Result<Self, ExactError> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(ExactError::Shape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| e.field() != field) {
            return Err(ExactError::ConductorMismatch {
                left: field.conductor(),
                right: bad.conductor(),
            });
        }
        Ok(CycloMatrix {
            rows,
            cols,
            field: field.clone(),
            entries,
        })
    }

    pub fn from_fn(
        field: &CyclotomicField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> CycloNumber,
    ) -> Self {
        assert!(rows > 0 && cols > 0, "empty matrix");
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let e = f(r, c);
                assert!(e.field() == field, "entry ({r},{c}) in the wrong field");
                entries.push(e);
            }
        }
        CycloMatrix {
            rows,
            cols,
            field: field.clone(),
            entries,
        }
    }

    /// Rational matrix from rows of rationals, in Q(zeta_1).
    pub fn from_rationals(rows: &[Vec<Rational>]) -> Result<Self, ExactError> {
        let field = CyclotomicField::rationals();
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(ExactError::Shape("ragged rows".into()));
        }
        let entries = rows
            .iter()
            .flatten()
            .map(|q| field.from_rational(q.clone()))
            .collect();
        Self::new(&field, rows.len(), cols, entries)
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self, ExactError> {
        let rows: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| Rational::from_integer(BigInt::from(v)))
                    .collect()
            })
            .collect();
        Self::from_rationals(&rows)
    }

    pub fn identity(field: &CyclotomicField, size: usize) -> Self {
        Self::from_fn(field, size, size, |r, c| {
            if r == c {
                field.one()
            } else {
                field.zero()
            }
        })
    }

    pub fn diagonal(field: &CyclotomicField, diag: &[CycloNumber]) -> Self {
        Self::from_fn(field, diag.len(), diag.len(), |r, c| {
            if r == c {
                diag[r].clone()
            } else {
                field.zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &CycloNumber {
        &self.entries[r * self.cols + c]
    }

    pub fn entries(&self) -> &[CycloNumber] {
        &self.entries
    }

    pub fn lift(&self, target: &CyclotomicField) -> Result<Self, ExactError> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.lift(target))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CycloMatrix {
            rows: self.rows,
            cols: self.cols,
            field: target.clone(),
            entries,
        })
    }

    pub fn scale(&self, factor: &CycloNumber) -> Self {
        Self::from_fn(&self.field, self.rows, self.cols, |r, c| {
            self.get(r, c) * factor
        })
    }

    pub fn mul(&self, other: &CycloMatrix) -> Result<Self, ExactError> {
        if self.cols != other.rows {
            return Err(ExactError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.field != other.field {
            return Err(ExactError::ConductorMismatch {
                left: self.field.conductor(),
                right: other.field.conductor(),
            });
        }
        Ok(Self::from_fn(&self.field, self.rows, other.cols, |r, c| {
            (0..self.cols).fold(self.field.zero(), |acc, k| {
                acc + self.get(r, k) * other.get(k, c)
            })
        }))
    }

    pub fn trace(&self) -> Result<CycloNumber, ExactError> {
        self.require_square()?;
        Ok((0..self.rows).fold(self.field.zero(), |acc, k| acc + self.get(k, k)))
    }

    fn require_square(&self) -> Result<(), ExactError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(ExactError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    fn to_rows(&self) -> Vec<Vec<CycloNumber>> {
        self.entries
            .chunks(self.cols)
            .map(<[CycloNumber]>::to_vec)
            .collect()
    }

    /// Exact determinant by Gaussian elimination over the field.
    pub fn det(&self) -> Result<CycloNumber, ExactError> {
        self.require_square()?;
        let n = self.rows;
        let mut a = self.to_rows();
        let mut det = self.field.one();
        for k in 0..n {
            let Some(pivot_row) = (k..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(self.field.zero());
            };
            if pivot_row != k {
                a.swap(pivot_row, k);
                det = -det;
            }
            let pivot_inv = a[k][k].inv()?;
            det *= &a[k][k];
            let (top, bottom) = a.split_at_mut(k + 1);
            let pivot = &top[k];
            for row in bottom.iter_mut() {
                if row[k].is_zero() {
                    continue;
                }
                let factor = &row[k] * &pivot_inv;
                for c in k + 1..n {
                    let delta = &factor * &pivot[c];
                    row[c] -= &delta;
                }
                row[k] = self.field.zero();
            }
        }
        Ok(det)
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        self.require_square()?;
        let n = self.rows;
        let mut a = self.to_rows();
        let mut inv = Self::identity(&self.field, n).to_rows();
        for k in 0..n {
            let pivot_row = (k..n)
                .find(|&r| !a[r][k].is_zero())
                .ok_or(ExactError::Singular)?;
            a.swap(pivot_row, k);
            inv.swap(pivot_row, k);
            let pivot_inv = a[k][k].inv()?;
            for c in 0..n {
                a[k][c] = &a[k][c] * &pivot_inv;
                inv[k][c] = &inv[k][c] * &pivot_inv;
            }
            for r in 0..n {
                if r == k || a[r][k].is_zero() {
                    continue;
                }
                let factor = a[r][k].clone();
                for c in 0..n {
                    let da = &factor * &a[k][c];
                    let di = &factor * &inv[k][c];
                    a[r][c] -= &da;
                    inv[r][c] -= &di;
                }
            }
        }
        Ok(Self::from_fn(&self.field, n, n, |r, c| inv[r][c].clone()))
    }

    /// Characteristic polynomial `det(xI - A)`, coefficients low degree first
    /// (monic, length `n + 1`). Faddeev-LeVerrier recursion.
    pub fn char_poly(&self) -> Result<Vec<CycloNumber>, ExactError> {
        self.require_square()?;
        let n = self.rows;
        let mut coeffs = vec![self.field.zero(); n + 1];
        coeffs[n] = self.field.one();
        // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
        let mut m = Self::identity(&self.field, n);
        for k in 1..=n {
            let am = self.mul(&m)?;
            let trace = am.trace()?;
            let c = trace.scale(&Rational::new(BigInt::from(-1), BigInt::from(k as i64)));
            coeffs[n - k] = c.clone();
            m = Self::from_fn(&self.field, n, n, |r, col| {
                if r == col {
                    am.get(r, col) + &c
                } else {
                    am.get(r, col).clone()
                }
            });
        }
        Ok(coeffs)
    }

    /// Block matrix from a grid of equally sized blocks.
    pub fn from_blocks(blocks: &[Vec<CycloMatrix>]) -> Result<Self, ExactError> {
        let first = blocks
            .first()
            .and_then(|row| row.first())
            .ok_or(ExactError::Shape("no blocks".into()))?;
        let (br, bc) = (first.rows, first.cols);
        let field = first.field.clone();
        let grid_cols = blocks[0].len();
        for row in blocks {
            if row.len() != grid_cols {
                return Err(ExactError::Shape("ragged block grid".into()));
            }
            for b in row {
                if b.rows != br || b.cols != bc {
                    return Err(ExactError::Shape("blocks of different sizes".into()));
                }
                if b.field != field {
                    return Err(ExactError::ConductorMismatch {
                        left: field.conductor(),
                        right: b.field.conductor(),
                    });
                }
            }
        }
        Ok(Self::from_fn(
            &field,
            br * blocks.len(),
            bc * grid_cols,
            |r, c| blocks[r / br][c / bc].get(r % br, c % bc).clone(),
        ))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(CycloNumber::is_zero)
    }
}

/// Exact determinant of a square matrix.
pub fn det_exact(m: &CycloMatrix) -> Result<CycloNumber, ExactError> {
    m.det()
}

impl fmt::Debug for CycloMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}x{} over Q(zeta_{}):",
            self.rows,
            self.cols,
            self.field.conductor()
        )?;
        for row in self.entries.chunks(self.cols) {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Display for CycloMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.chunks(self.cols).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
