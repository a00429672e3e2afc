//! Exact rational scalars.
//!
//! All coefficient arithmetic in this crate runs over `BigRational`, which
//! keeps numerator and denominator reduced with a positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics on `d = 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical string form `p/q`, or `p` when the denominator is one.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `p/q`, or a decimal-free signed integer string.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let mk_err = || Error::Parse(format!("invalid rational: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| mk_err())?;
        let d: BigInt = d.trim().parse().map_err(|_| mk_err())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(Rat::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| mk_err())?;
        Ok(Rat::from_integer(n))
    }
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Rounds to f64, for numeric (non-certified) output only.
pub fn rat_to_f64(r: &Rat) -> f64 {
    let n = r.numer();
    let d = r.denom();
    // Exact conversion when both fit; otherwise scale down in tandem.
    match (n.to_string().parse::<f64>(), d.to_string().parse::<f64>()) {
        (Ok(nf), Ok(df)) if nf.is_finite() && df.is_finite() && df != 0.0 => nf / df,
        _ => {
            let bits = n.bits().max(d.bits()) as i64 - 500;
            let shifted_n = n >> bits.max(0) as u64;
            let shifted_d = d >> bits.max(0) as u64;
            let nf: f64 = shifted_n.to_string().parse().unwrap_or(f64::NAN);
            let df: f64 = shifted_d.to_string().parse().unwrap_or(f64::NAN);
            nf / df
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        for s in ["3", "-4/7", "0", "22/7"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(rat_to_string(&r), s);
        }
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        // non-reduced input canonicalizes
        assert_eq!(rat_to_string(&parse_rat("4/6").unwrap()), "2/3");
    }

    #[test]
    fn f64_conversion() {
        assert_eq!(rat_to_f64(&ratio(1, 2)), 0.5);
        assert!((rat_to_f64(&ratio(1, 3)) - 1.0 / 3.0).abs() < 1e-15);
    }
}
