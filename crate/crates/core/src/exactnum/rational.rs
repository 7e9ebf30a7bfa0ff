//! Rational helpers on top of `BigRational`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ExactError;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (`0/1` for zero).
pub type Rational = BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    assert!(denom != 0, "zero denominator");
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    BigRational::from_integer(BigInt::from(value))
}

/// Parses `"p/q"` or `"p"` with decimal integers.
pub fn parse_rational(text: &str) -> Result<Rational, ExactError> {
    let text = text.trim();
    let bad = || ExactError::Parse(format!("not a rational: {text:?}"));
    let (numer, denom) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let numer = BigInt::from_str(numer).map_err(|_| bad())?;
    let denom = BigInt::from_str(denom).map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(ExactError::DivisionByZero);
    }
    Ok(BigRational::new(numer, denom))
}

/// Canonical wire form: always `"p/q"`, including `"0/1"` and `"-5/1"`.
pub fn format_rational(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Human form: `"p"` for integers, `"p/q"` otherwise.
pub fn display_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// `base^exp` for any integer exponent; zero to a negative power is an error.
pub fn rational_pow(base: &Rational, exp: i64) -> Result<Rational, ExactError> {
    if exp < 0 {
        if base.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        return rational_pow(&base.recip(), -exp);
    }
    let mut result = Rational::one();
    let mut square = base.clone();
    let mut e = exp as u64;
    while e > 0 {
        if e & 1 == 1 {
            result *= &square;
        }
        e >>= 1;
        if e > 0 {
            square = &square * &square;
        }
    }
    Ok(result)
}

/// Serde adapter for `Vec<Rational>` as a list of `"p/q"` strings.
pub mod serde_vec {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(values: &[Rational], serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(values.iter().map(format_rational))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(deserializer)?
            .iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("6/-4").unwrap(), rational(-3, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert_eq!(format_rational(&int(-5)), "-5/1");
        assert_eq!(format_rational(&Rational::zero()), "0/1");
        assert_eq!(display_rational(&rational(2, 4)), "1/2");
        assert!(matches!(
            parse_rational("1/0"),
            Err(ExactError::DivisionByZero)
        ));
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(rational_pow(&rational(2, 3), 3).unwrap(), rational(8, 27));
        assert_eq!(rational_pow(&rational(2, 3), -2).unwrap(), rational(9, 4));
        assert_eq!(rational_pow(&int(0), 0).unwrap(), int(1));
        assert!(rational_pow(&int(0), -1).is_err());
    }
}
