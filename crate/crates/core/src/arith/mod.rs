//! Exact arithmetic: rationals, polynomials over `Q`, `Z` and `F_p`,
//! factorization and rational roots.

mod expr;
mod factor;
pub mod ntheory;
mod poly;
mod poly_fp;
mod roots;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

pub use expr::parse_poly;
pub use factor::{factor_over_q, is_irreducible, Factorization, MAX_FACTOR_DEGREE};
pub use ntheory::{fourth_power_free_part, is_square_rational, squarefree_part};
pub use poly::{PolyQ, PolyZ};
pub use poly_fp::PolyFp;
pub use roots::rational_roots;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("zero input: {0}")]
    ZeroInput(&'static str),
    #[error("division by zero")]
    DivisionByZero,
    #[error("division is not exact")]
    NotExact,
    #[error("degree {degree} exceeds the supported limit {limit}")]
    DegreeLimit { degree: usize, limit: usize },
    #[error("cannot parse {0}")]
    Parse(String),
}

/// Parse `"a"` or `"a/b"`.
pub fn parse_rational(s: &str) -> Result<BigRational, ArithError> {
    let s = s.trim();
    let bad = || ArithError::Parse(s.to_string());
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(s.parse::<BigInt>().map_err(|_| bad())?)),
        Some((n, d)) => {
            let n = n.trim().parse::<BigInt>().map_err(|_| bad())?;
            let d = d.trim().parse::<BigInt>().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// `"a/b"` in lowest terms, or `"a"` for integers.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Serde adapter writing a rational as `"a/b"`.
pub mod rational_string {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for a list of rationals as `"a/b"` strings.
pub mod rational_vec {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(super::format_rational).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter().map(|s| super::parse_rational(s).map_err(serde::de::Error::custom)).collect()
    }
}
