//! Scalar field: arbitrary-precision rationals, plus the string encoding
//! ("num" or "num/den", lowest terms) used by every JSON interface.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Rational = BigRational;

/// `rat(n, d)` = n/d. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RationalParseError {
    #[error("malformed rational {0:?}: expected \"num\" or \"num/den\"")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// Parses "n" or "n/d" (optional leading '-'). Input need not be reduced;
/// the result always is.
pub fn parse_rational(s: &str) -> Result<Rational, RationalParseError> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: BigInt = num_str
        .parse()
        .map_err(|_| RationalParseError::Malformed(s.to_string()))?;
    let den: BigInt = match den_str {
        Some(d) => d
            .parse()
            .map_err(|_| RationalParseError::Malformed(s.to_string()))?,
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return Err(RationalParseError::ZeroDenominator(s.to_string()));
    }
    Ok(Rational::new(num, den))
}

/// Lowest-terms string form: "3", "-1/2", "0".
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().expect("rational out of f64 range")
}

/// Exact square root of a nonnegative rational, if one exists.
pub fn sqrt_exact(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer().sqrt();
    let den = r.denom().sqrt();
    if &(&num * &num) == r.numer() && &(&den * &den) == r.denom() {
        Some(Rational::new(num, den))
    } else {
        None
    }
}

/// Uniform half-integer in {-range, ..., range} / 2 — the coordinate
/// distribution used by all seeded random sampling.
pub fn random_half_integer<R: rand::Rng>(rng: &mut R, range: i64) -> Rational {
    let k = rng.gen_range(-range..=range);
    rat(k, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "3", "-3", "1/2", "-7/3", "22/7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
    }

    #[test]
    fn parse_reduces() {
        assert_eq!(parse_rational("4/8").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(matches!(
            parse_rational("a/b"),
            Err(RationalParseError::Malformed(_))
        ));
        assert!(matches!(
            parse_rational("1/0"),
            Err(RationalParseError::ZeroDenominator(_))
        ));
        assert!(parse_rational("1/2/3").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn sqrt_exact_detects_squares() {
        assert_eq!(sqrt_exact(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(sqrt_exact(&rat(0, 1)), Some(rat(0, 1)));
        assert_eq!(sqrt_exact(&rat(3, 16)), None);
        assert_eq!(sqrt_exact(&rat(-1, 4)), None);
        // 1/4 * 3/4 at t = 1/2: (1/2)(1/2) = 1/4 is a square
        assert_eq!(sqrt_exact(&rat(1, 4)), Some(rat(1, 2)));
    }

    #[test]
    fn random_half_integer_stays_in_range() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let r = random_half_integer(&mut rng, 3);
            assert!(r >= rat(-3, 2) && r <= rat(3, 2));
            assert!((r * int(2)).is_integer());
        }
    }
}
