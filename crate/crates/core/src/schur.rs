//! Evaluation of GL_N characters at an explicit list of eigenvalues.
//!
//! Two engines: the bialternant (Weyl numerator over Vandermonde), valid at
//! regular points, and the Jacobi-Trudi determinant in complete homogeneous
//! symmetric values, valid everywhere. Weights with negative entries are
//! handled by a determinant shift: `Theta_lambda = (prod x)^s Theta_{lambda - s}`
//! with `s = min(lambda_N, 0)`.

use thiserror::Error;

use crate::exactnum::{CycloMatrix, CycloNumber, CyclotomicField, ExactError};
use crate::weights::{add_staircase, pairwise_distinct, Weight};

/// A character value; always an element of the eigenvalues' field.
pub type CharacterValue = CycloNumber;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchurError {
    #[error("weight has {weight} entries but {points} eigenvalues were given")]
    LengthMismatch { weight: usize, points: usize },
    #[error("eigenvalues are not pairwise distinct; the bialternant is undefined")]
    IrregularPoint,
    #[error("weight has negative entries and eigenvalue {0} is zero")]
    ZeroEigenvalue(usize),
    #[error("negative exponent {0}; det-shift the weight first")]
    NegativeExponent(i64),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

fn common_field(xs: &[CycloNumber]) -> Result<CyclotomicField, SchurError> {
    let field = xs
        .first()
        .ok_or(SchurError::LengthMismatch {
            weight: 0,
            points: 0,
        })?
        .field()
        .clone();
    if let Some(bad) = xs.iter().find(|x| *x.field() != field) {
        return Err(ExactError::ConductorMismatch {
            left: field.conductor(),
            right: bad.conductor(),
        }
        .into());
    }
    Ok(field)
}

fn check_lengths(lambda: &Weight, xs: &[CycloNumber]) -> Result<CyclotomicField, SchurError> {
    if lambda.len() != xs.len() {
        return Err(SchurError::LengthMismatch {
            weight: lambda.len(),
            points: xs.len(),
        });
    }
    common_field(xs)
}

/// Generalized Vandermonde `det(x_c^{(lambda + delta)_r})`.
pub fn weyl_numerator(lambda: &Weight, xs: &[CycloNumber]) -> Result<CycloNumber, SchurError> {
    let field = check_lengths(lambda, xs)?;
    let exponents = add_staircase(lambda);
    if let Some(&e) = exponents.iter().find(|&&e| e < 0) {
        return Err(SchurError::NegativeExponent(e));
    }
    let n = xs.len();
    let m = CycloMatrix::from_fn(&field, n, n, |r, c| xs[c].pow_u(exponents[r] as u64));
    Ok(m.det()?)
}

/// `prod_{r < s} (x_r - x_s)`, equal to `weyl_numerator(0, xs)`.
pub fn weyl_denominator(xs: &[CycloNumber]) -> Result<CycloNumber, SchurError> {
    let field = common_field(xs)?;
    let mut acc = field.one();
    for (r, a) in xs.iter().enumerate() {
        for b in &xs[r + 1..] {
            acc *= &(a - b);
        }
    }
    Ok(acc)
}

/// Splits `lambda` into a polynomial weight and the power of `prod xs` to
/// multiply back in.
fn det_shift(
    lambda: &Weight,
    xs: &[CycloNumber],
) -> Result<(Weight, Option<CycloNumber>), SchurError> {
    let s = lambda.last().min(0);
    if s == 0 {
        return Ok((lambda.clone(), None));
    }
    if let Some(i) = xs.iter().position(CycloNumber::is_zero) {
        return Err(SchurError::ZeroEigenvalue(i));
    }
    let field = xs[0].field();
    let det = xs.iter().fold(field.one(), |acc, x| acc * x);
    Ok((lambda.shifted(-s), Some(det.pow(s)?)))
}

fn apply_shift(value: CycloNumber, factor: Option<CycloNumber>) -> CycloNumber {
    match factor {
        Some(f) => value * f,
        None => value,
    }
}

pub fn char_bialternant(lambda: &Weight, xs: &[CycloNumber]) -> Result<CharacterValue, SchurError> {
    check_lengths(lambda, xs)?;
    if !pairwise_distinct(xs) {
        return Err(SchurError::IrregularPoint);
    }
    let (shifted, factor) = det_shift(lambda, xs)?;
    let numerator = weyl_numerator(&shifted, xs)?;
    let denominator = weyl_denominator(xs)?;
    Ok(apply_shift(numerator.checked_div(&denominator)?, factor))
}

/// `h_0, ..., h_max` from the truncated product of `1 / (1 - x u)`.
fn complete_homogeneous(
    xs: &[CycloNumber],
    max: usize,
    field: &CyclotomicField,
) -> Vec<CycloNumber> {
    let mut h = vec![field.zero(); max + 1];
    h[0] = field.one();
    for x in xs {
        // multiply the series by 1 / (1 - x u): h'_k = h_k + x h'_{k-1}
        for k in 1..=max {
            let carry = x * &h[k - 1];
            h[k] += &carry;
        }
    }
    h
}

pub fn char_jacobi_trudi(
    lambda: &Weight,
    xs: &[CycloNumber],
) -> Result<CharacterValue, SchurError> {
    let field = check_lengths(lambda, xs)?;
    let (shifted, factor) = det_shift(lambda, xs)?;
    let n = xs.len();
    let parts = shifted.entries();
    let max = (parts[0] as usize) + n;
    let h = complete_homogeneous(xs, max, &field);
    let m = CycloMatrix::from_fn(&field, n, n, |r, c| {
        let k = parts[r] - r as i64 + c as i64;
        if k < 0 {
            field.zero()
        } else {
            h[k as usize].clone()
        }
    });
    Ok(apply_shift(m.det()?, factor))
}

/// Bialternant at regular points, Jacobi-Trudi otherwise.
pub fn character_at(lambda: &Weight, xs: &[CycloNumber]) -> Result<CharacterValue, SchurError> {
    check_lengths(lambda, xs)?;
    if pairwise_distinct(xs) {
        char_bialternant(lambda, xs)
    } else {
        char_jacobi_trudi(lambda, xs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::rational;

    fn ints(vals: &[i64]) -> Vec<CycloNumber> {
        let q = CyclotomicField::rationals();
        vals.iter().map(|&v| q.from_int(v)).collect()
    }

    fn w(entries: &[i64]) -> Weight {
        Weight::new(entries.to_vec()).unwrap()
    }

    fn q(v: i64) -> CycloNumber {
        CyclotomicField::rationals().from_int(v)
    }

    // e_2 by summing the pairwise products
    fn e2(vals: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..vals.len() {
            for j in i + 1..vals.len() {
                s += vals[i] * vals[j];
            }
        }
        s
    }

    #[test]
    fn numerator_examples() {
        // lambda = 0: plain Vandermonde
        assert_eq!(weyl_numerator(&w(&[0, 0]), &ints(&[5, 2])).unwrap(), q(3));
        assert!(weyl_numerator(&w(&[3, 1, 0]), &ints(&[2, 2, 7]))
            .unwrap()
            .is_zero());
        assert!(matches!(
            weyl_numerator(&w(&[0, -2]), &ints(&[1, 2])),
            Err(SchurError::NegativeExponent(-2))
        ));
    }

    #[test]
    fn numerator_matches_full_expansion() {
        // det[x_c^{a_r}] for a = (4,3,1,0), x = (1,2,-1,-2), by permutation expansion
        let a = [4u32, 3, 1, 0];
        let x = [1i64, 2, -1, -2];
        let mut total = 0i64;
        let perms = permutations(4);
        for p in &perms {
            let sign = permutation_sign(p);
            total += sign * (0..4).map(|r| x[p[r]].pow(a[r])).product::<i64>();
        }
        assert_eq!(
            weyl_numerator(&w(&[1, 1, 0, 0]), &ints(&x)).unwrap(),
            q(total)
        );
        let den = weyl_denominator(&ints(&x)).unwrap();
        assert_eq!(den, q(-72));
        assert_eq!(total, -5 * -72);
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn permutation_sign(p: &[usize]) -> i64 {
        let mut inversions = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn denominator_examples() {
        // prod_{r<s}(x_r - x_s) at (1,2,-1,-2): (-1)(2)(3)(3)(4)(1)
        assert_eq!(weyl_denominator(&ints(&[1, 2, -1, -2])).unwrap(), q(-72));
        assert!(weyl_denominator(&ints(&[4, 4])).unwrap().is_zero());
        assert_eq!(weyl_denominator(&ints(&[3, 1])).unwrap(), q(2));
        assert_eq!(weyl_denominator(&ints(&[1, 2, 3, 4])).unwrap(), q(12));
    }

    #[test]
    fn bialternant_examples() {
        let xs = ints(&[1, 2, -1, -2]);
        assert!(char_bialternant(&Weight::zero(4), &xs).unwrap().is_one());
        assert_eq!(
            char_bialternant(&w(&[1, 0, 0, 0]), &ints(&[3, 5, -7, 2])).unwrap(),
            q(3)
        );
        assert_eq!(e2(&[1, 2, -1, -2]), -5);
        assert_eq!(char_bialternant(&w(&[1, 1, 0, 0]), &xs).unwrap(), q(-5));
        assert!(matches!(
            char_bialternant(&w(&[1, 0]), &ints(&[2, 2])),
            Err(SchurError::IrregularPoint)
        ));
        assert!(matches!(
            char_bialternant(&w(&[0, -1]), &ints(&[0, 2])),
            Err(SchurError::ZeroEigenvalue(0))
        ));
    }

    #[test]
    fn jacobi_trudi_examples() {
        // h_2 = e_1^2 - e_2 with e_1 = 0, e_2 = -5
        assert_eq!(
            char_jacobi_trudi(&w(&[2, 0, 0, 0]), &ints(&[1, 2, -1, -2])).unwrap(),
            q(5)
        );
        // s_{11}(x, x) = x^2
        assert_eq!(
            char_jacobi_trudi(&w(&[1, 1]), &ints(&[7, 7])).unwrap(),
            q(49)
        );
        assert!(char_jacobi_trudi(&Weight::zero(3), &ints(&[0, 0, 0]))
            .unwrap()
            .is_one());
        assert!(matches!(
            char_jacobi_trudi(&w(&[0, -1]), &ints(&[1, 0])),
            Err(SchurError::ZeroEigenvalue(1))
        ));
    }

    #[test]
    fn dispatcher_examples() {
        assert_eq!(
            character_at(&w(&[1, 1, 0, 0]), &ints(&[1, 2, -1, -2])).unwrap(),
            q(-5)
        );
        assert_eq!(character_at(&w(&[1, 0]), &ints(&[2, 2])).unwrap(), q(4));
        // s_{31}(x,y) = x^3 y + x^2 y^2 + x y^3 at (1,2)
        assert_eq!(
            character_at(&w(&[3, 1]), &ints(&[1, 2])).unwrap(),
            q(2 + 4 + 8)
        );
        assert!(matches!(
            character_at(&w(&[1, 0]), &ints(&[1, 2, 3])),
            Err(SchurError::LengthMismatch {
                weight: 2,
                points: 3
            })
        ));
    }

    #[test]
    fn laurent_weights() {
        // det^{-1} of GL_2 at (2, 3) is 1/6
        let f = CyclotomicField::rationals();
        let xs = ints(&[2, 3]);
        assert_eq!(
            character_at(&w(&[-1, -1]), &xs).unwrap(),
            f.from_rational(rational(1, 6))
        );
        // (1, -1): dual-twisted adjoint, x/y + 1 + y/x
        let expect = f.from_rational(rational(2, 3) + rational(1, 1) + rational(3, 2));
        assert_eq!(char_bialternant(&w(&[1, -1]), &xs).unwrap(), expect);
        assert_eq!(char_jacobi_trudi(&w(&[1, -1]), &xs).unwrap(), expect);
    }

    #[test]
    fn engines_agree_over_cyclotomics() {
        let f = CyclotomicField::new(5).unwrap();
        let xs: Vec<_> = (0..4)
            .map(|k| &f.root_of_unity(k) + &f.from_int(k + 1))
            .collect();
        for lambda in [w(&[3, 1, 1, 0]), w(&[2, 2, -1, -3]), w(&[4, 0, 0, 0])] {
            assert_eq!(
                char_bialternant(&lambda, &xs).unwrap(),
                char_jacobi_trudi(&lambda, &xs).unwrap()
            );
        }
    }
}
