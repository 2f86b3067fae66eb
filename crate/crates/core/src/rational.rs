//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("malformed rational {0:?}")]
    Malformed(String),
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d`; panics when `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    int(1)
}

/// Parses `"p"` or `"p/q"` with optional surrounding whitespace and sign.
pub fn parse(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let bad = || ParseRationalError::Malformed(s.to_string());
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(ParseRationalError::ZeroDenominator(s.to_string()));
    }
    Ok(Rational::new(n, d))
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format(q: &Rational) -> String {
    q.to_string()
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        let n = q.numer().to_f64().unwrap_or(f64::NAN);
        let d = q.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

pub fn sign(q: &Rational) -> Ordering {
    q.cmp(&Rational::zero())
}

/// Exact square root when `q` is the square of a rational.
pub fn sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer();
    let d = q.denom();
    let rn = n.sqrt();
    let rd = d.sqrt();
    if &(&rn * &rn) == n && &(&rd * &rd) == d {
        Some(Rational::new(rn, rd))
    } else {
        None
    }
}

/// Least common multiple of the denominators of `xs`.
pub fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    xs.into_iter()
        .fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()))
}

/// Greatest common divisor of the numerators of `xs` (0 for an all-zero list).
pub fn common_numerator<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    xs.into_iter()
        .fold(BigInt::zero(), |acc, x| acc.gcd(x.numer()))
}

/// Rescales a nonzero vector to coprime integer entries, keeping its direction.
pub fn primitive(v: &[Rational]) -> Vec<Rational> {
    let l = common_denominator(v);
    let scaled: Vec<Rational> = v
        .iter()
        .map(|x| x * Rational::from_integer(l.clone()))
        .collect();
    let g = common_numerator(&scaled);
    if g.is_zero() {
        return scaled;
    }
    let g = Rational::from_integer(g);
    scaled.into_iter().map(|x| x / &g).collect()
}

/// Serde adapters writing rationals as canonical strings.
pub mod serde_str {
    use super::Rational;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format(q))
    }

    pub mod option {
        use super::Rational;
        use serde::Serializer;

        pub fn serialize<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match q {
                Some(q) => s.serialize_some(&super::super::format(q)),
                None => s.serialize_none(),
            }
        }
    }

    pub mod vec {
        use super::Rational;
        use serde::Serializer;

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            s.collect_seq(v.iter().map(super::super::format))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse("3").unwrap(), int(3));
        assert_eq!(parse(" -6/4 ").unwrap(), frac(-3, 2));
        assert_eq!(parse("1/-2").unwrap(), frac(-1, 2));
        assert!(matches!(parse("1/0"), Err(ParseRationalError::ZeroDenominator(_))));
        assert!(matches!(parse("x"), Err(ParseRationalError::Malformed(_))));
        assert!(matches!(parse(""), Err(ParseRationalError::Empty)));
    }

    #[test]
    fn format_round_trip() {
        for q in [int(0), int(-7), frac(22, 7), frac(-1, 3)] {
            assert_eq!(parse(&format(&q)).unwrap(), q);
        }
        assert_eq!(format(&frac(4, 2)), "2");
    }

    #[test]
    fn square_roots() {
        assert_eq!(sqrt(&frac(9, 4)), Some(frac(3, 2)));
        assert_eq!(sqrt(&int(2)), None);
        assert_eq!(sqrt(&int(-4)), None);
        assert_eq!(sqrt(&int(0)), Some(int(0)));
    }

    #[test]
    fn primitive_vectors() {
        assert_eq!(
            primitive(&[frac(1, 2), frac(-3, 4), int(0)]),
            vec![int(2), int(-3), int(0)]
        );
    }
}
