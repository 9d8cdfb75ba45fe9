//! Elliptic curves over `Q` in long Weierstrass form.

mod divpoly;
mod local;
mod torsion;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{format_rational, ArithError, PolyQ};

pub use divpoly::{division_poly, primitive_division_poly, DivisionPoly};
pub use local::{ap, order_ext, FpCurve, FpPoint, LocalData};
pub use torsion::{is_mazur_shape, local_injection_check, torsion_over_q, InjectionEntry, InjectionReport, InjectionStatus};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("singular curve (discriminant 0)")]
    Singular,
    #[error("order {0} outside the supported range 2..=64")]
    OrderOutOfRange(u32),
    #[error("bad reduction at {0}")]
    BadReduction(u64),
    #[error("j-invariant is not 1728")]
    NotJ1728,
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeierstrassCurve {
    a: [BigRational; 5],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveInvariants {
    pub b2: BigRational,
    pub b4: BigRational,
    pub b6: BigRational,
    pub b8: BigRational,
    pub c4: BigRational,
    pub c6: BigRational,
    pub discriminant: BigRational,
    pub j: BigRational,
}

impl fmt::Debug for WeierstrassCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.a.iter().map(format_rational).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl WeierstrassCurve {
    /// Coefficients in the order `[a1, a2, a3, a4, a6]`.
    pub fn new(a: [BigRational; 5]) -> Result<Self, CurveError> {
        let e = WeierstrassCurve { a };
        if e.b_invariants().discriminant().is_zero() {
            return Err(CurveError::Singular);
        }
        Ok(e)
    }

    pub fn from_ints(a: [i64; 5]) -> Result<Self, CurveError> {
        Self::new(a.map(q))
    }

    /// `y^2 = x^3 + A x + B`.
    pub fn short(a: BigRational, b: BigRational) -> Result<Self, CurveError> {
        Self::new([q(0), q(0), q(0), a, b])
    }

    pub fn coeffs(&self) -> &[BigRational; 5] {
        &self.a
    }

    fn b_invariants(&self) -> BInv {
        let [a1, a2, a3, a4, a6] = &self.a;
        let b2 = a1 * a1 + q(4) * a2;
        let b4 = q(2) * a4 + a1 * a3;
        let b6 = a3 * a3 + q(4) * a6;
        let b8 = a1 * a1 * a6 + q(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        BInv { b2, b4, b6, b8 }
    }

    pub fn invariants(&self) -> CurveInvariants {
        let b = self.b_invariants();
        let c4 = &b.b2 * &b.b2 - q(24) * &b.b4;
        let c6 = -(&b.b2 * &b.b2 * &b.b2) + q(36) * &b.b2 * &b.b4 - q(216) * &b.b6;
        let d = b.discriminant();
        let j = &c4 * &c4 * &c4 / &d;
        CurveInvariants { b2: b.b2, b4: b.b4, b6: b.b6, b8: b.b8, c4, c6, discriminant: d, j }
    }

    pub fn j_invariant(&self) -> BigRational {
        self.invariants().j
    }

    pub fn discriminant(&self) -> BigRational {
        self.b_invariants().discriminant()
    }

    /// `4x^3 + b2 x^2 + 2 b4 x + b6`, whose roots are the x-coordinates of
    /// the points of order 2; it equals `(2y + a1 x + a3)^2` on the curve.
    pub fn two_torsion_poly(&self) -> PolyQ {
        let b = self.b_invariants();
        PolyQ::new(vec![b.b6, q(2) * b.b4, b.b2, q(4)])
    }

    /// The model `u`-rescaled (`a_i -> u^i a_i`) to have integer coefficients,
    /// with the least such positive integer `u`.
    pub fn integral_model(&self) -> [BigInt; 5] {
        let weights = [1u32, 2, 3, 4, 6];
        let mut u = BigInt::one();
        for (c, &w) in self.a.iter().zip(&weights) {
            let den = c.denom();
            if den.is_one() {
                continue;
            }
            // For each prime of the denominator, u needs exponent ceil(e / w).
            let mut need = BigInt::one();
            for (p, e) in crate::arith::ntheory::factor_biguint(den.magnitude()) {
                need *= BigInt::from(p).pow(e.div_ceil(w));
            }
            u = u.lcm(&need);
        }
        let mut out: [BigInt; 5] = Default::default();
        for (k, (c, &w)) in self.a.iter().zip(&weights).enumerate() {
            let scaled = c * BigRational::from_integer(u.pow(w));
            debug_assert!(scaled.is_integer());
            out[k] = scaled.to_integer();
        }
        out
    }

    /// `y^2 = x^3 - 27 c4 x - 54 c6`, isomorphic over `Q`.
    pub fn short_model_coeffs(&self) -> (BigRational, BigRational) {
        let inv = self.invariants();
        (-q(27) * inv.c4, -q(54) * inv.c6)
    }

    pub fn is_on_curve(&self, x: &BigRational, y: &BigRational) -> bool {
        let [a1, a2, a3, a4, a6] = &self.a;
        y * y + a1 * x * y + a3 * y == x * x * x + a2 * x * x + a4 * x + a6
    }
}

struct BInv {
    b2: BigRational,
    b4: BigRational,
    b6: BigRational,
    b8: BigRational,
}

impl BInv {
    fn discriminant(&self) -> BigRational {
        let (b2, b4, b6, b8) = (&self.b2, &self.b4, &self.b6, &self.b8);
        -(b2 * b2 * b8) - q(8) * b4 * b4 * b4 - q(27) * b6 * b6 + q(9) * b2 * b4 * b6
    }
}

/// A representative curve with the given j-invariant.
pub fn curve_from_j(j: &BigRational) -> WeierstrassCurve {
    if j.is_zero() {
        return WeierstrassCurve::from_ints([0, 0, 0, 0, 1]).unwrap();
    }
    if *j == q(1728) {
        return WeierstrassCurve::from_ints([0, 0, 0, 1, 0]).unwrap();
    }
    let k = q(1728) - j;
    let a = q(3) * j * &k;
    let b = q(2) * j * &k * &k;
    WeierstrassCurve::short(a, b).expect("nonsingular away from 0 and 1728")
}

/// Fourth-power-free integer `d` with `E ~ y^2 = x^3 + d x` over `Q`.
pub fn quartic_twist_parameter(e: &WeierstrassCurve) -> Result<BigInt, CurveError> {
    let inv = e.invariants();
    if !inv.c6.is_zero() {
        return Err(CurveError::NotJ1728);
    }
    Ok(crate::arith::fourth_power_free_part(&(-q(27) * inv.c4))?)
}
