//! Exact rational scalars.
//!
//! The field is always ℚ. `BigRational` keeps every value in lowest terms
//! with a positive denominator, so structural equality is value equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parse `"p"`, `"-p"` or `"p/q"`. The denominator must be nonzero.
pub fn parse(s: &str) -> Result<Scalar> {
    let t = s.trim();
    let bad = || {
        Error::format(
            "scalar",
            format!("`{s}` is not a rational of the form p or p/q"),
        )
    };
    match t.split_once('/') {
        None => t
            .parse::<BigInt>()
            .map(Scalar::from_integer)
            .map_err(|_| bad()),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::format(
                    "scalar",
                    format!("`{s}` has zero denominator"),
                ));
            }
            Ok(Scalar::new(n, d))
        }
    }
}

/// Canonical text: `"p"` for integers, `"p/q"` otherwise, always reduced.
pub fn format(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn basis(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![zero(); n];
    v[i] = one();
    v
}

pub fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(c: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| c * x).collect()
}

pub fn neg_vec(a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| -x).collect()
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).fold(zero(), |acc, (x, y)| acc + x * y)
}

/// Sum of absolute values; only used for human-readable summaries.
pub fn l1(v: &[Scalar]) -> Scalar {
    v.iter().fold(zero(), |acc, x| acc + x.abs())
}
