//! Exact rational scalars.
//!
//! Values are always kept reduced with a positive denominator (the
//! invariant maintained by [`num_rational::Ratio`]). Text form is `p/q` or a
//! bare integer; decimal notation is rejected everywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// `numer / denom`, reduced. Panics on a zero denominator.
pub fn frac(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = |why: &str| Error::parse(0, format!("invalid rational `{text}`: {why}"));
    if text.is_empty() {
        return Err(bad("empty"));
    }
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let parse_int = |s: &str| -> Result<BigInt> {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("expected `p/q` or an integer"));
        }
        s.parse::<BigInt>().map_err(|_| bad("integer overflow"))
    };
    let numer = parse_int(numer)?;
    let denom = parse_int(denom)?;
    if denom.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(numer, denom))
}

pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// The value as an `i64` if it is an integer that fits.
pub fn to_i64(value: &Rational) -> Option<i64> {
    if !value.is_integer() {
        return None;
    }
    i64::try_from(value.numer()).ok()
}

/// Sign of a rational as -1, 0 or 1.
pub fn signum(value: &Rational) -> i8 {
    if value.is_zero() {
        0
    } else if value.is_positive() {
        1
    } else {
        -1
    }
}

/// Scale `v` so that its first non-zero entry is one. Zero vectors are left alone.
pub fn normalize_leading(v: &mut [Rational]) {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        if !lead.is_one() {
            for x in v.iter_mut() {
                *x /= &lead;
            }
        }
    }
}

pub fn format_vector(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-4/6").unwrap(), frac(-2, 3));
        assert_eq!(parse_rational("2/-4").unwrap(), frac(-1, 2));
        assert_eq!(parse_rational(" 0/5 ").unwrap(), int(0));
    }

    #[test]
    fn rejects_decimals_and_garbage() {
        for bad in ["1.5", "", "1/0", "a/2", "1/", "/2", "--1", "1e3"] {
            assert!(parse_rational(bad).is_err(), "{bad} should be rejected");
        }
    }

    #[test]
    fn display_is_reduced() {
        assert_eq!(format_rational(&frac(6, -4)), "-3/2");
        assert_eq!(format_rational(&int(-7)), "-7");
    }

    #[test]
    fn normalization_scales_first_nonzero() {
        let mut v = vec![int(0), int(-2), int(4)];
        normalize_leading(&mut v);
        assert_eq!(v, vec![int(0), int(1), int(-2)]);
    }
}
