//! Exact arithmetic in the cyclotomic field Q(zeta_L).
//!
//! Elements are stored as coefficient vectors in the power basis
//! `1, zeta, ..., zeta^{phi(L)-1}`, reduced modulo the cyclotomic polynomial
//! `Phi_L`. The basis is linearly independent over Q, so two elements are equal
//! exactly when their coefficient vectors are equal.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{cyclotomic_polynomial, inverse_mod, IntPolynomial};
use super::rational::{display_rational, format_rational, parse_rational};
use super::{ExactError, Rational};

struct FieldData {
    conductor: u64,
    phi: IntPolynomial,
    /// `reduction[k]` holds `x^k mod Phi_L` for `0 <= k < L`.
    reduction: Vec<Vec<BigInt>>,
}

/// Handle to Q(zeta_L). Cheap to clone; elements share it.
#[derive(Clone)]
pub struct CyclotomicField(Arc<FieldData>);

impl CyclotomicField {
    pub fn new(conductor: u64) -> Result<Self, ExactError> {
        let phi = cyclotomic_polynomial(conductor)?;
        let degree = phi.degree();
        let mut reduction = Vec::with_capacity(conductor as usize);
        let mut power = vec![BigInt::zero(); degree];
        power[0] = BigInt::one();
        for _ in 0..conductor {
            reduction.push(power.clone());
            // multiply by x and reduce with the monic Phi_L
            let carry = power.pop().unwrap_or_default();
            power.insert(0, BigInt::zero());
            if !carry.is_zero() {
                for (j, c) in phi.coeffs()[..degree].iter().enumerate() {
                    power[j] -= &carry * c;
                }
            }
        }
        Ok(CyclotomicField(Arc::new(FieldData {
            conductor,
            phi,
            reduction,
        })))
    }

    /// Q itself, as Q(zeta_1).
    pub fn rationals() -> Self {
        Self::new(1).expect("conductor 1 is valid")
    }

    pub fn conductor(&self) -> u64 {
        self.0.conductor
    }

    pub fn degree(&self) -> usize {
        self.0.phi.degree()
    }

    pub fn modulus(&self) -> &IntPolynomial {
        &self.0.phi
    }

    pub fn zero(&self) -> CycloNumber {
        CycloNumber {
            field: self.clone(),
            coeffs: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> CycloNumber {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, value: Rational) -> CycloNumber {
        let mut x = self.zero();
        x.coeffs[0] = value;
        x
    }

    pub fn from_int(&self, value: i64) -> CycloNumber {
        self.from_rational(Rational::from_integer(BigInt::from(value)))
    }

    /// `zeta_L^k`, for any integer `k`.
    pub fn root_of_unity(&self, k: i64) -> CycloNumber {
        let l = self.conductor() as i64;
        let idx = k.rem_euclid(l) as usize;
        let coeffs = self.0.reduction[idx]
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        CycloNumber {
            field: self.clone(),
            coeffs,
        }
    }

    /// Builds an element from raw coefficients of `zeta^0, zeta^1, ...`; any
    /// length is accepted and reduced.
    pub fn from_power_coeffs(&self, raw: &[Rational]) -> CycloNumber {
        let l = self.conductor() as usize;
        let mut folded = vec![Rational::zero(); l];
        for (k, c) in raw.iter().enumerate() {
            folded[k % l] += c;
        }
        self.reduce(folded)
    }

    /// Reduces a length-L vector of coefficients of `zeta^k` (`k mod L`).
    fn reduce(&self, folded: Vec<Rational>) -> CycloNumber {
        let degree = self.degree();
        let mut coeffs = vec![Rational::zero(); degree];
        for (k, c) in folded.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < degree {
                coeffs[k] += c;
                continue;
            }
            for (j, r) in self.0.reduction[k].iter().enumerate() {
                if !r.is_zero() {
                    coeffs[j] += &c * r;
                }
            }
        }
        CycloNumber {
            field: self.clone(),
            coeffs,
        }
    }

    fn same(&self, other: &CyclotomicField) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.conductor() == other.conductor()
    }
}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.conductor())
    }
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for CyclotomicField {}

/// The L-th cyclotomic polynomial.
pub fn cyclotomic(conductor: u64) -> Result<IntPolynomial, ExactError> {
    cyclotomic_polynomial(conductor)
}

/// `zeta_L^k` in a freshly built Q(zeta_L).
pub fn root_of_unity(conductor: u64, k: i64) -> Result<CycloNumber, ExactError> {
    Ok(CyclotomicField::new(conductor)?.root_of_unity(k))
}

/// An exact element of Q(zeta_L).
#[derive(Clone)]
pub struct CycloNumber {
    field: CyclotomicField,
    coeffs: Vec<Rational>,
}

impl CycloNumber {
    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn conductor(&self) -> u64 {
        self.field.conductor()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational, if it lies in Q.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_field(&self, other: &CycloNumber) {
        if !self.field.same(&other.field) {
            panic!(
                "{}",
                ExactError::ConductorMismatch {
                    left: self.conductor(),
                    right: other.conductor()
                }
            );
        }
    }

    pub fn try_add(&self, other: &CycloNumber) -> Result<CycloNumber, ExactError> {
        self.require_same(other)?;
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &CycloNumber) -> Result<CycloNumber, ExactError> {
        self.require_same(other)?;
        Ok(self * other)
    }

    fn require_same(&self, other: &CycloNumber) -> Result<(), ExactError> {
        if self.field.same(&other.field) {
            Ok(())
        } else {
            Err(ExactError::ConductorMismatch {
                left: self.conductor(),
                right: other.conductor(),
            })
        }
    }

    pub fn scale(&self, factor: &Rational) -> CycloNumber {
        CycloNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Multiplicative inverse, by extended gcd against Phi_L.
    pub fn inv(&self) -> Result<CycloNumber, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if let Some(q) = self.to_rational() {
            return Ok(self.field.from_rational(q.recip()));
        }
        let modulus: Vec<Rational> = self
            .field
            .modulus()
            .coeffs()
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let inverse = inverse_mod(&self.coeffs, &modulus).ok_or(ExactError::DivisionByZero)?;
        Ok(self.field.from_power_coeffs(&inverse))
    }

    pub fn checked_div(&self, other: &CycloNumber) -> Result<CycloNumber, ExactError> {
        self.require_same(other)?;
        Ok(self * &other.inv()?)
    }

    /// `self^exp` for any integer exponent.
    pub fn pow(&self, exp: i64) -> Result<CycloNumber, ExactError> {
        if exp < 0 {
            return Ok(self.inv()?.pow_u(exp.unsigned_abs()));
        }
        Ok(self.pow_u(exp as u64))
    }

    pub fn pow_u(&self, mut exp: u64) -> CycloNumber {
        let mut result = self.field.one();
        let mut square = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = &result * &square;
            }
            exp >>= 1;
            if exp > 0 {
                square = &square * &square;
            }
        }
        result
    }

    /// The same value viewed in Q(zeta_{L'}); requires `L | L'`.
    pub fn lift(&self, target: &CyclotomicField) -> Result<CycloNumber, ExactError> {
        let from = self.conductor();
        let to = target.conductor();
        if !to.is_multiple_of(from) {
            return Err(ExactError::NotDivisible { from, to });
        }
        if from == to {
            return Ok(CycloNumber {
                field: target.clone(),
                coeffs: self.coeffs.clone(),
            });
        }
        let step = (to / from) as usize;
        let mut raw = vec![Rational::zero(); step * self.coeffs.len()];
        for (k, c) in self.coeffs.iter().enumerate() {
            raw[k * step] = c.clone();
        }
        Ok(target.from_power_coeffs(&raw))
    }
}

/// Lifts `x` into Q(zeta_{L'}).
pub fn lift_conductor(x: &CycloNumber, conductor: u64) -> Result<CycloNumber, ExactError> {
    x.lift(&CyclotomicField::new(conductor)?)
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        self.conductor() == other.conductor() && self.coeffs == other.coeffs
    }
}

impl Eq for CycloNumber {}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in Q(zeta_{})", self.conductor())
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", display_rational(&magnitude))?,
                _ if magnitude.is_one() => write!(f, "z{}^{k}", self.conductor())?,
                _ => write!(
                    f,
                    "{}*z{}^{k}",
                    display_rational(&magnitude),
                    self.conductor()
                )?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: &'a CycloNumber) -> CycloNumber {
        self.check_field(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycloNumber {
            field: self.field.clone(),
            coeffs,
        }
    }
}

impl<'a> Sub<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: &'a CycloNumber) -> CycloNumber {
        self.check_field(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycloNumber {
            field: self.field.clone(),
            coeffs,
        }
    }
}

impl<'a> Mul<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: &'a CycloNumber) -> CycloNumber {
        self.check_field(rhs);
        if let Some(q) = self.to_rational() {
            return rhs.scale(&q);
        }
        if let Some(q) = rhs.to_rational() {
            return self.scale(&q);
        }
        let l = self.conductor() as usize;
        let mut folded = vec![Rational::zero(); l];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    folded[(i + j) % l] += a * b;
                }
            }
        }
        self.field.reduce(folded)
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        -&self
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign:ident) => {
        impl $trait<CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: CycloNumber) -> CycloNumber {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: &'a CycloNumber) -> CycloNumber {
                (&self).$method(rhs)
            }
        }
        impl<'a> $assign_trait<&'a CycloNumber> for CycloNumber {
            fn $assign(&mut self, rhs: &'a CycloNumber) {
                *self = (&*self).$method(rhs);
            }
        }
    };
}

owned_binop!(Add, add, AddAssign, add_assign);
owned_binop!(Sub, sub, SubAssign, sub_assign);
owned_binop!(Mul, mul, MulAssign, mul_assign);

#[derive(Serialize, Deserialize)]
struct CycloWire {
    conductor: u64,
    coeffs: Vec<String>,
}

impl Serialize for CycloNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CycloWire {
            conductor: self.conductor(),
            coeffs: self.coeffs.iter().map(format_rational).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CycloNumber {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let wire = CycloWire::deserialize(deserializer)?;
        let field = CyclotomicField::new(wire.conductor).map_err(D::Error::custom)?;
        if wire.coeffs.len() != field.degree() {
            return Err(D::Error::custom(format!(
                "conductor {} needs {} coefficients, got {}",
                wire.conductor,
                field.degree(),
                wire.coeffs.len()
            )));
        }
        let coeffs = wire
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Ok(CycloNumber { field, coeffs })
    }
}
