//! Dense univariate polynomials, coefficients stored low degree first.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExactError, Rational};

/// Integer polynomial; used for cyclotomic polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    /// Exact division by a monic divisor. Panics if the divisor is not monic or
    /// does not divide `self`.
    pub fn div_exact_monic(&self, divisor: &IntPolynomial) -> IntPolynomial {
        assert!(
            divisor.coeffs.last().unwrap().is_one(),
            "divisor must be monic"
        );
        let d = divisor.degree();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
            return IntPolynomial::new(vec![BigInt::zero()]);
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let lead = rem[k + d].clone();
            if lead.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &lead * c;
            }
            quot[k] = lead;
        }
        assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
        IntPolynomial::new(quot)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && !(first && k == 0) {
                continue;
            }
            let negative = c.is_negative();
            let magnitude = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            match (k, magnitude.is_one()) {
                (0, _) => write!(f, "{magnitude}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{magnitude}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{magnitude}x^{k}")?,
            }
        }
        Ok(())
    }
}

/// The L-th cyclotomic polynomial, computed as `(x^L - 1) / prod_{d | L, d < L} Phi_d`.
pub fn cyclotomic_polynomial(conductor: u64) -> Result<IntPolynomial, ExactError> {
    if conductor == 0 {
        return Err(ExactError::ZeroConductor);
    }
    let mut x_l_minus_1 = vec![BigInt::zero(); conductor as usize + 1];
    x_l_minus_1[0] = BigInt::from(-1);
    x_l_minus_1[conductor as usize] = BigInt::one();
    let mut result = IntPolynomial::new(x_l_minus_1);
    for d in 1..conductor {
        if conductor.is_multiple_of(d) {
            result = result.div_exact_monic(&cyclotomic_polynomial(d)?);
        }
    }
    Ok(result)
}

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if rest > 1 {
        result -= result / rest;
    }
    result
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

// Rational polynomial helpers for inversion modulo Phi_L.

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn sub_scaled_shifted(
    target: &mut Vec<Rational>,
    source: &[Rational],
    scale: &Rational,
    shift: usize,
) {
    if target.len() < source.len() + shift {
        target.resize(source.len() + shift, Rational::zero());
    }
    for (j, c) in source.iter().enumerate() {
        target[j + shift] -= scale * c;
    }
    trim(target);
}

fn poly_divrem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = num.to_vec();
    trim(&mut rem);
    let dlen = den.len();
    let lead_inv = den[dlen - 1].recip();
    let mut quot = vec![Rational::zero(); rem.len().saturating_sub(dlen - 1).max(1)];
    while rem.len() >= dlen {
        let shift = rem.len() - dlen;
        let factor = &rem[rem.len() - 1] * &lead_inv;
        sub_scaled_shifted(&mut rem, den, &factor, shift);
        quot[shift] = factor;
    }
    trim(&mut quot);
    (quot, rem)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Inverse of `value` modulo `modulus` via the extended Euclidean algorithm.
/// Returns `None` when `value` is zero modulo `modulus` (or not coprime to it).
pub(crate) fn inverse_mod(value: &[Rational], modulus: &[Rational]) -> Option<Vec<Rational>> {
    let mut old_r = modulus.to_vec();
    let mut r = value.to_vec();
    trim(&mut old_r);
    trim(&mut r);
    // Invariant: s_i * value == r_i (mod modulus).
    let mut old_s: Vec<Rational> = Vec::new();
    let mut s: Vec<Rational> = vec![Rational::one()];
    while !r.is_empty() {
        let (q, rem) = poly_divrem(&old_r, &r);
        old_r = std::mem::replace(&mut r, rem);
        let next_s = poly_sub(&old_s, &poly_mul(&q, &s));
        old_s = std::mem::replace(&mut s, next_s);
    }
    // old_r is the gcd; it must be a nonzero constant.
    if old_r.len() != 1 {
        return None;
    }
    let scale = old_r[0].recip();
    let mut inv: Vec<Rational> = old_s.into_iter().map(|c| c * &scale).collect();
    let (_, reduced) = poly_divrem(&inv, modulus);
    inv = reduced;
    Some(inv)
}
