//! Torsion over `Q` and local consistency of claimed torsion over the
//! compositum of cubic fields.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use super::divpoly::primitive_division_poly;
use super::local::{ap, order_ext};
use super::{CurveError, WeierstrassCurve};
use crate::arith::ntheory::next_prime;
use crate::arith::{is_square_rational, rational_roots};
use crate::shape::{TorsionShape, MAZUR15};

pub fn is_mazur_shape(t: &TorsionShape) -> bool {
    MAZUR15.contains(t)
}

/// `E(Q)_tors`: the gcd of `#E(F_p)` over five good odd primes bounds the
/// order, then the points of each candidate order are found from rational
/// roots of the primitive division polynomials.
pub fn torsion_over_q(e: &WeierstrassCurve) -> Result<TorsionShape, CurveError> {
    let mut bound = 0u64;
    let mut p = 2;
    let mut used = 0;
    while used < 5 {
        p = next_prime(p);
        let l = ap(e, p);
        if let Some(a) = l.trace {
            bound = bound.gcd(&((p as i64 + 1 - a) as u64));
            used += 1;
        }
    }
    let psi = e.two_torsion_poly();
    let mut order = 1u64;
    let mut exponent = 1u64;
    for d in 2..=12u64 {
        if bound % d != 0 {
            continue;
        }
        let xs = if d == 2 {
            rational_roots(&psi)?
        } else {
            rational_roots(&primitive_division_poly(e, d as u32)?.x_part)?
        };
        let mut found = 0;
        for x in xs {
            let v = psi.eval(&x);
            if v.is_zero() {
                found += 1;
            } else if is_square_rational(&v) {
                found += 2;
            }
        }
        if found > 0 {
            order += found;
            exponent = exponent.max(d);
        }
    }
    let t = TorsionShape::from_order_exponent(order, exponent).ok_or_else(|| {
        CurveError::Internal(format!("torsion count {order} with exponent {exponent}"))
    })?;
    if !is_mazur_shape(&t) {
        return Err(CurveError::Internal(format!("torsion {t} is not on Mazur's list")));
    }
    Ok(t)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum InjectionStatus {
    /// `|T'|` divides `#E(F_{p^6})`.
    Pass { prime_to_p_order: u64, group_order: String },
    Fail { prime_to_p_order: u64, group_order: String },
    Skipped { note: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InjectionEntry {
    pub p: u64,
    #[serde(flatten)]
    pub status: InjectionStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InjectionReport {
    pub shape: TorsionShape,
    pub entries: Vec<InjectionEntry>,
}

impl InjectionReport {
    pub fn passed(&self) -> bool {
        !self.entries.iter().any(|e| matches!(e.status, InjectionStatus::Fail { .. }))
    }

    pub fn checked(&self) -> usize {
        self.entries.iter().filter(|e| !matches!(e.status, InjectionStatus::Skipped { .. })).count()
    }
}

/// Points over the compositum reduce into `E(F_{p^6})` at good `p`, so the
/// prime-to-`p` part of a claimed torsion group must divide its order.
pub fn local_injection_check(e: &WeierstrassCurve, t: &TorsionShape, primes: &[u64]) -> InjectionReport {
    let entries = primes
        .iter()
        .map(|&p| {
            let status = if p < 5 {
                InjectionStatus::Skipped { note: "prime below 5".into() }
            } else {
                match ap(e, p).trace {
                    None => InjectionStatus::Skipped { note: "bad reduction".into() },
                    Some(a) => {
                        let n = order_ext(a, p, 6);
                        let tp = t.prime_to(p).order();
                        let group_order = n.to_string();
                        if (&n % BigInt::from(tp)).is_zero() {
                            InjectionStatus::Pass { prime_to_p_order: tp, group_order }
                        } else {
                            InjectionStatus::Fail { prime_to_p_order: tp, group_order }
                        }
                    }
                }
            };
            InjectionEntry { p, status }
        })
        .collect();
    InjectionReport { shape: *t, entries }
}
