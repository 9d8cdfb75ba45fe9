//! Division polynomials.
//!
//! Parity convention: `F_n = psi_n` for odd `n` and `F_n = psi_n / psi_2` for
//! even `n`, where `psi_2 = 2y + a1 x + a3` and `psi_2^2 = Psi(x) =
//! 4x^3 + b2 x^2 + 2 b4 x + b6`.  Every `F_n` is a polynomial in `x` alone.
//! The polynomial whose roots are the x-coordinates of all nonzero
//! `n`-torsion points is `F_n` for odd `n` and `F_n Psi` for even `n`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{CurveError, WeierstrassCurve};
use crate::arith::ntheory::{divisors, moebius};
use crate::arith::PolyQ;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionPoly {
    pub curve: WeierstrassCurve,
    pub n: u32,
    /// `F_n` for `division_poly`; monic `h_n` for `primitive_division_poly`.
    pub x_part: PolyQ,
    pub primitive: bool,
}

impl DivisionPoly {
    /// Monic polynomial whose roots are the x-coordinates of the nonzero
    /// `n`-torsion points (all of them, or those of exact order `n` when
    /// primitive), each with multiplicity one.
    pub fn root_poly(&self) -> PolyQ {
        if self.primitive {
            return self.x_part.clone();
        }
        root_poly_of(&self.curve, &self.x_part, self.n)
    }
}

fn root_poly_of(e: &WeierstrassCurve, f: &PolyQ, n: u32) -> PolyQ {
    if n % 2 == 0 {
        (f * &e.two_torsion_poly()).monic()
    } else {
        f.monic()
    }
}

fn qi(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

struct Recurrence {
    base: [PolyQ; 5],
    psi_sq: PolyQ,
    memo: HashMap<u32, PolyQ>,
}

impl Recurrence {
    fn new(e: &WeierstrassCurve) -> Self {
        let inv = e.invariants();
        let (b2, b4, b6, b8) = (&inv.b2, &inv.b4, &inv.b6, &inv.b8);
        let f3 = PolyQ::new(vec![b8.clone(), qi(3) * b6, qi(3) * b4, b2.clone(), qi(3)]);
        let f4 = PolyQ::new(vec![
            b4 * b8 - b6 * b6,
            b2 * b8 - b4 * b6,
            qi(10) * b8,
            qi(10) * b6,
            qi(5) * b4,
            b2.clone(),
            qi(2),
        ]);
        Recurrence {
            base: [PolyQ::zero(), PolyQ::one(), PolyQ::one(), f3, f4],
            psi_sq: e.two_torsion_poly(),
            memo: HashMap::new(),
        }
    }

    fn get(&mut self, n: u32) -> PolyQ {
        if n <= 4 {
            return self.base[n as usize].clone();
        }
        if let Some(f) = self.memo.get(&n) {
            return f.clone();
        }
        let m = n / 2;
        let f = if n % 2 == 1 {
            let a = &self.get(m + 2) * &self.get(m).pow(3);
            let b = &self.get(m - 1) * &self.get(m + 1).pow(3);
            let w = self.psi_sq.pow(2);
            if m % 2 == 0 {
                &(&w * &a) - &b
            } else {
                &a - &(&w * &b)
            }
        } else {
            let a = &self.get(m + 2) * &self.get(m - 1).pow(2);
            let b = &self.get(m - 2) * &self.get(m + 1).pow(2);
            &self.get(m) * &(&a - &b)
        };
        self.memo.insert(n, f.clone());
        f
    }
}

fn check_order(n: u32) -> Result<(), CurveError> {
    if !(2..=64).contains(&n) {
        return Err(CurveError::OrderOutOfRange(n));
    }
    Ok(())
}

/// `F_n` by the standard recurrence.
pub fn division_poly(e: &WeierstrassCurve, n: u32) -> Result<DivisionPoly, CurveError> {
    check_order(n)?;
    let mut r = Recurrence::new(e);
    let x_part = r.get(n);
    let expected = if n % 2 == 1 { (n * n - 1) / 2 } else { (n * n - 4) / 2 };
    if x_part.deg() != expected as usize {
        return Err(CurveError::Internal(format!(
            "F_{n} has degree {} instead of {expected}",
            x_part.deg()
        )));
    }
    Ok(DivisionPoly { curve: e.clone(), n, x_part, primitive: false })
}

/// Monic `h_n = prod_{d | n} R_d^mu(n/d)` where `R_d` is the monic root
/// polynomial of the `d`-torsion; roots are exactly the x-coordinates of the
/// points of exact order `n`.
pub fn primitive_division_poly(e: &WeierstrassCurve, n: u32) -> Result<DivisionPoly, CurveError> {
    check_order(n)?;
    let mut r = Recurrence::new(e);
    let mut num = PolyQ::one();
    let mut den = PolyQ::one();
    for d in divisors(n as u64) {
        let d = d as u32;
        if d == 1 {
            continue;
        }
        let mu = moebius((n / d) as u64);
        if mu == 0 {
            continue;
        }
        let rd = root_poly_of(e, &r.get(d), d);
        if mu == 1 {
            num = &num * &rd;
        } else {
            den = &den * &rd;
        }
    }
    let h = num
        .exact_div(&den)
        .map_err(|_| CurveError::Internal(format!("Moebius quotient for h_{n} is not exact")))?;
    Ok(DivisionPoly { curve: e.clone(), n, x_part: h.monic(), primitive: true })
}
