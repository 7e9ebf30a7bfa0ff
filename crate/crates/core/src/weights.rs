//! Highest weights of GL_N, staircase shifts, residue classes, and the
//! eigenvalues of a twisted element `t . c_n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactnum::{lcm, CycloNumber, CyclotomicField, ExactError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("weight must have at least one entry")]
    Empty,
    #[error("weight entries must be weakly decreasing: {0:?}")]
    NotDominant(Vec<i64>),
    #[error("cannot parse weight {0:?}")]
    Parse(String),
    #[error("weight has length {actual}, expected m*n = {expected}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("m and n must be positive")]
    ZeroShape,
    #[error("twisted point needs at least one t value and a positive twist order")]
    EmptyPoint,
    #[error("t values must be nonzero (t_{0} = 0)")]
    ZeroEigenvalue(usize),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// A dominant weight of GL_N: a weakly decreasing integer tuple, entries may
/// be negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(entries: Vec<i64>) -> Result<Self, WeightError> {
        if entries.is_empty() {
            return Err(WeightError::Empty);
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(WeightError::NotDominant(entries));
        }
        Ok(Weight(entries))
    }

    pub fn zero(len: usize) -> Self {
        Weight(vec![0; len.max(1)])
    }

    /// `(k, 0, ..., 0)`: the weight of `Sym^k`.
    pub fn symmetric_power(k: i64, len: usize) -> Self {
        let mut entries = vec![0; len.max(1)];
        entries[0] = k;
        Weight::new(entries).expect("k >= 0")
    }

    /// `(1^k, 0^{len-k})`: the weight of `Lambda^k`.
    pub fn exterior_power(k: usize, len: usize) -> Self {
        Weight((0..len.max(1)).map(|i| i64::from(i < k)).collect())
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> i64 {
        *self.0.last().expect("non-empty")
    }

    pub fn first(&self) -> i64 {
        self.0[0]
    }

    /// `lambda + c (1, ..., 1)`.
    pub fn shifted(&self, c: i64) -> Weight {
        Weight(self.0.iter().map(|v| v + c).collect())
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let entries = Vec::<i64>::deserialize(deserializer)?;
        Weight::new(entries).map_err(serde::de::Error::custom)
    }
}

impl FromStr for Weight {
    type Err = WeightError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let entries = s
            .split(',')
            .map(|part| part.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| WeightError::Parse(s.to_string()))?;
        Weight::new(entries)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The staircase `delta_a = (a-1, a-2, ..., 1, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Staircase(pub usize);

impl Staircase {
    pub fn entries(self) -> Vec<i64> {
        (0..self.0).rev().map(|v| v as i64).collect()
    }
}

/// `lambda + delta_N`; strictly decreasing.
pub fn add_staircase(lambda: &Weight) -> Vec<i64> {
    let n = lambda.len();
    lambda
        .entries()
        .iter()
        .enumerate()
        .map(|(k, v)| v + (n - 1 - k) as i64)
        .collect()
}

/// Entries of `lambda + delta` grouped by residue mod `n`. `classes[i]` lists the
/// entries congruent to `i` (non-negative representative), in decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ResidueClasses {
    classes: Vec<Vec<i64>>,
}

impl ResidueClasses {
    pub fn modulus(&self) -> usize {
        self.classes.len()
    }

    pub fn class(&self, residue: usize) -> &[i64] {
        &self.classes[residue]
    }

    pub fn classes(&self) -> &[Vec<i64>] {
        &self.classes
    }

    pub fn total(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }
}

pub fn residue_classes(values: &[i64], n: usize) -> ResidueClasses {
    let mut classes = vec![Vec::new(); n];
    for &a in values {
        classes[a.rem_euclid(n as i64) as usize].push(a);
    }
    ResidueClasses { classes }
}

/// Whether `lambda + delta_mn` meets every residue class mod `n` exactly `m`
/// times. The classes are returned either way.
pub fn residue_condition(
    lambda: &Weight,
    m: usize,
    n: usize,
) -> Result<(bool, ResidueClasses), WeightError> {
    check_shape(lambda, m, n)?;
    let classes = residue_classes(&add_staircase(lambda), n);
    let holds = classes.classes.iter().all(|c| c.len() == m);
    Ok((holds, classes))
}

pub(crate) fn check_shape(lambda: &Weight, m: usize, n: usize) -> Result<(), WeightError> {
    if m == 0 || n == 0 {
        return Err(WeightError::ZeroShape);
    }
    if lambda.len() != m * n {
        return Err(WeightError::LengthMismatch {
            expected: m * n,
            actual: lambda.len(),
        });
    }
    Ok(())
}

/// Central character: the integer by which scalars act, `sum lambda_i`.
pub fn central_character(lambda: &Weight) -> i64 {
    lambda.entries().iter().sum()
}

/// The element `t . c_n` of GL_mn: `m` nonzero scalars and a twist order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedPoint {
    t: Vec<CycloNumber>,
    twist_order: usize,
}

impl TwistedPoint {
    pub fn new(t: Vec<CycloNumber>, twist_order: usize) -> Result<Self, WeightError> {
        if t.is_empty() || twist_order == 0 {
            return Err(WeightError::EmptyPoint);
        }
        let field = t[0].field().clone();
        if let Some(bad) = t.iter().find(|x| *x.field() != field) {
            return Err(ExactError::ConductorMismatch {
                left: field.conductor(),
                right: bad.conductor(),
            }
            .into());
        }
        if let Some(i) = t.iter().position(CycloNumber::is_zero) {
            return Err(WeightError::ZeroEigenvalue(i));
        }
        Ok(TwistedPoint { t, twist_order })
    }

    pub fn from_rationals(t: &[Rational], twist_order: usize) -> Result<Self, WeightError> {
        let q = CyclotomicField::rationals();
        Self::new(
            t.iter().map(|v| q.from_rational(v.clone())).collect(),
            twist_order,
        )
    }

    pub fn from_ints(t: &[i64], twist_order: usize) -> Result<Self, WeightError> {
        let q = CyclotomicField::rationals();
        Self::new(t.iter().map(|&v| q.from_int(v)).collect(), twist_order)
    }

    pub fn t(&self) -> &[CycloNumber] {
        &self.t
    }

    pub fn m(&self) -> usize {
        self.t.len()
    }

    pub fn twist_order(&self) -> usize {
        self.twist_order
    }

    /// Field holding the eigenvalues: Q(zeta_lcm(L, n)).
    pub fn eigenvalue_field(&self) -> Result<CyclotomicField, ExactError> {
        CyclotomicField::new(lcm(self.t[0].conductor(), self.twist_order as u64))
    }

    /// `(t_1^n, ..., t_m^n)` in the field of `t`.
    pub fn nth_powers(&self) -> Vec<CycloNumber> {
        self.t
            .iter()
            .map(|x| x.pow_u(self.twist_order as u64))
            .collect()
    }
}

/// The `mn` eigenvalues `t_i zeta_n^j`, `j` outer and `i` inner.
pub fn eigenvalues_of_twisted_point(p: &TwistedPoint) -> Result<Vec<CycloNumber>, WeightError> {
    let field = p.eigenvalue_field()?;
    let n = p.twist_order;
    let step = (field.conductor() / n as u64) as i64;
    let lifted =
        p.t.iter()
            .map(|x| x.lift(&field))
            .collect::<Result<Vec<_>, _>>()?;
    let mut out = Vec::with_capacity(n * p.m());
    for j in 0..n as i64 {
        let omega_j = field.root_of_unity(j * step);
        out.extend(lifted.iter().map(|x| x * &omega_j));
    }
    Ok(out)
}

/// True when the `t_i^n` are pairwise distinct, i.e. all `mn` eigenvalues are.
pub fn is_regular(p: &TwistedPoint) -> bool {
    pairwise_distinct(&p.nth_powers())
}

pub(crate) fn pairwise_distinct(xs: &[CycloNumber]) -> bool {
    xs.iter()
        .enumerate()
        .all(|(i, a)| xs[i + 1..].iter().all(|b| a != b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(entries: &[i64]) -> Weight {
        Weight::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(add_staircase(&w(&[0, 0, 0, 0])), vec![3, 2, 1, 0]);
        assert_eq!(add_staircase(&w(&[1, 1, 0, 0])), vec![4, 3, 1, 0]);
        assert_eq!(add_staircase(&w(&[2, 0, 0, 0])), vec![5, 2, 1, 0]);
        assert_eq!(Staircase(4).entries(), vec![3, 2, 1, 0]);
    }

    #[test]
    fn residue_examples() {
        for (m, n) in [(1, 1), (2, 3), (3, 2), (1, 5)] {
            assert!(residue_condition(&Weight::zero(m * n), m, n).unwrap().0);
        }
        let (holds, classes) = residue_condition(&w(&[1, 0]), 1, 2).unwrap();
        assert!(!holds);
        assert_eq!(classes.class(0), &[2, 0]);
        assert!(classes.class(1).is_empty());
        let (holds, classes) = residue_condition(&w(&[1, 1, 0, 0]), 2, 2).unwrap();
        assert!(holds);
        assert_eq!(classes.class(0), &[4, 0]);
        assert_eq!(classes.class(1), &[3, 1]);
        assert_eq!(classes.total(), 4);
    }

    #[test]
    fn negative_entries_use_nonnegative_residue() {
        let (holds, classes) = residue_condition(&w(&[0, -3]), 1, 2).unwrap();
        // lambda + delta = (1, -3): both odd
        assert!(!holds);
        assert_eq!(classes.class(1), &[1, -3]);
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(
            residue_condition(&w(&[1, 0, 0]), 2, 2),
            Err(WeightError::LengthMismatch {
                expected: 4,
                actual: 3
            })
        ));
        assert!(matches!(
            residue_condition(&w(&[0]), 0, 1),
            Err(WeightError::ZeroShape)
        ));
    }

    #[test]
    fn weight_validation_and_text() {
        assert!(matches!(Weight::new(vec![]), Err(WeightError::Empty)));
        assert!(matches!(
            Weight::new(vec![0, 1]),
            Err(WeightError::NotDominant(_))
        ));
        let lambda: Weight = "1,1,0,0".parse().unwrap();
        assert_eq!(lambda, w(&[1, 1, 0, 0]));
        assert_eq!(lambda.to_string(), "1,1,0,0");
        assert_eq!(" 3, -1 ,-2".parse::<Weight>().unwrap(), w(&[3, -1, -2]));
        assert!("1,,0".parse::<Weight>().is_err());
        assert!("0,1".parse::<Weight>().is_err());
        assert_eq!(serde_json::to_string(&lambda).unwrap(), "[1,1,0,0]");
        assert!(serde_json::from_str::<Weight>("[0,2]").is_err());
    }

    #[test]
    fn central_characters() {
        assert_eq!(central_character(&w(&[0, 0, 0, 0])), 0);
        assert_eq!(central_character(&w(&[1, 1, 0, 0])), 2);
        assert_eq!(central_character(&w(&[2, 0, 0, 0])), 2);
    }

    #[test]
    fn eigenvalue_examples() {
        let p = TwistedPoint::from_ints(&[1], 2).unwrap();
        let q2 = CyclotomicField::new(2).unwrap();
        assert_eq!(
            eigenvalues_of_twisted_point(&p).unwrap(),
            vec![q2.from_int(1), q2.from_int(-1)]
        );

        let p = TwistedPoint::from_ints(&[1, 2], 2).unwrap();
        let expect: Vec<_> = [1, 2, -1, -2].iter().map(|&v| q2.from_int(v)).collect();
        assert_eq!(eigenvalues_of_twisted_point(&p).unwrap(), expect);

        let p = TwistedPoint::from_ints(&[1], 3).unwrap();
        let q3 = CyclotomicField::new(3).unwrap();
        let expect: Vec<_> = (0..3).map(|k| q3.root_of_unity(k)).collect();
        assert_eq!(eigenvalues_of_twisted_point(&p).unwrap(), expect);
    }

    #[test]
    fn eigenvalues_lift_to_common_conductor() {
        // t in Q(zeta_4), twist 6 -> conductor 12
        let f4 = CyclotomicField::new(4).unwrap();
        let p = TwistedPoint::new(vec![f4.root_of_unity(1), f4.from_int(3)], 6).unwrap();
        let eig = eigenvalues_of_twisted_point(&p).unwrap();
        assert_eq!(eig.len(), 12);
        assert!(eig.iter().all(|e| e.conductor() == 12));
        let f12 = CyclotomicField::new(12).unwrap();
        assert_eq!(eig[2], f12.root_of_unity(3 + 2));
    }

    #[test]
    fn regularity() {
        assert!(is_regular(&TwistedPoint::from_ints(&[1, 2], 2).unwrap()));
        assert!(!is_regular(&TwistedPoint::from_ints(&[1, -1], 2).unwrap()));
        assert!(is_regular(&TwistedPoint::from_ints(&[1], 1).unwrap()));
        assert!(matches!(
            TwistedPoint::from_ints(&[1, 0], 2),
            Err(WeightError::ZeroEigenvalue(1))
        ));
        assert!(matches!(
            TwistedPoint::from_ints(&[], 2),
            Err(WeightError::EmptyPoint)
        ));
    }
}
