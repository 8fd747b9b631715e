//! Exact rational scalars.
//!
//! Scalars are arbitrary-precision rationals, always stored reduced with a
//! positive denominator (the backing type maintains both invariants). They
//! print and parse as `p/q`, or just `p` when the denominator is one, which
//! is also the wire format used by every fixture in this crate.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat(value: i64) -> Rational {
    BigRational::from_integer(BigInt::from(value))
}

/// Rational `p/q`. Panics on `q = 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn is_zero(value: &Rational) -> bool {
    value.is_zero()
}

/// Parse the `p/q` (or `p`) wire format.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational `{text}`")))?;
            let q: BigInt = q
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational `{text}`")))?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{text}`")));
            }
            Ok(BigRational::new(p, q))
        }
        None => {
            let p: BigInt = t
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational `{text}`")))?;
            Ok(BigRational::from_integer(p))
        }
    }
}

/// Render in the `p/q` wire format (`p` when the denominator is one).
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Least common multiple of the denominators of a slice of rationals.
pub fn denominator_lcm(values: &[Rational]) -> BigInt {
    let mut acc = BigInt::one();
    for v in values {
        let d = v.denom().abs();
        let g = num::integer::gcd(acc.clone(), d.clone());
        acc = acc / g * d;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wire_format_round_trip() {
        for (text, canonical) in [("3/6", "1/2"), ("-4/2", "-2"), ("5", "5"), ("0/7", "0")] {
            let v = parse_rational(text).unwrap();
            assert_eq!(format_rational(&v), canonical);
            assert_eq!(parse_rational(&format_rational(&v)).unwrap(), v);
        }
    }

    #[test]
    fn canonical_invariants() {
        let v = ratio(6, -4);
        assert_eq!(format_rational(&v), "-3/2");
        assert!(v.denom() > &BigInt::from(0));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn denominator_lcm_examples() {
        let vals = vec![ratio(1, 2), ratio(1, 3), ratio(5, 6)];
        assert_eq!(denominator_lcm(&vals), BigInt::from(6));
        assert_eq!(denominator_lcm(&[]), BigInt::from(1));
    }
}
