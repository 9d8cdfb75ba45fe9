//! Subgroups of `GL2(Z/n)`.

use std::collections::HashSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::element::{GroupElement, ModMatrix};
use super::finite::Group;
use super::GroupError;
use crate::arith::ntheory::prime_factors_u64;
use crate::shape::TorsionShape;

pub type MatrixGroup = Group<ModMatrix>;

pub const MAX_MODULUS: u32 = 1024;

/// JSON form: `{"modulus": n, "gens": [[a,b,c,d], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub modulus: u32,
    pub gens: Vec<[i64; 4]>,
}

impl GroupSpec {
    pub fn of(g: &MatrixGroup) -> Self {
        GroupSpec {
            modulus: g.modulus(),
            gens: g.gens().iter().map(|m| m.entries().map(|x| x as i64)).collect(),
        }
    }

    pub fn build(&self) -> Result<MatrixGroup, GroupError> {
        let gens: Vec<ModMatrix> =
            self.gens.iter().map(|e| ModMatrix::from_entries(self.modulus, *e)).collect();
        close(&gens, self.modulus)
    }
}

/// Parse `"a,b,c,d;a,b,c,d;..."`.
pub fn parse_gens(s: &str, n: u32) -> Result<Vec<ModMatrix>, GroupError> {
    let mut out = Vec::new();
    for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let v: Result<Vec<i64>, _> = part.split(',').map(|x| x.trim().parse::<i64>()).collect();
        match v {
            Ok(v) if v.len() == 4 => out.push(ModMatrix::new(n, v[0], v[1], v[2], v[3])),
            _ => return Err(GroupError::Parse(part.to_string())),
        }
    }
    Ok(out)
}

fn check_modulus(n: u32) -> Result<(), GroupError> {
    if !(2..=MAX_MODULUS).contains(&n) {
        return Err(GroupError::ModulusOutOfRange(n));
    }
    Ok(())
}

/// The group generated by `gens` inside `GL2(Z/n)`.
pub fn close(gens: &[ModMatrix], n: u32) -> Result<MatrixGroup, GroupError> {
    check_modulus(n)?;
    for g in gens {
        if g.n != n {
            return Err(GroupError::ModulusMismatch);
        }
        if !g.has_unit_det() {
            return Err(GroupError::NotUnitDeterminant(*g));
        }
    }
    Ok(Group::generate(gens, ModMatrix::identity(n)))
}

pub fn gl2_order(n: u64) -> u64 {
    let mut o = n.pow(4);
    for (p, _) in prime_factors_u64(n) {
        o = o / p * (p - 1);
        o = o / (p * p) * (p * p - 1);
    }
    o
}

fn all_matrices(n: u32, keep: impl Fn(&ModMatrix) -> bool) -> Vec<ModMatrix> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let m = ModMatrix { n, a, b, c, d };
                    if keep(&m) {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

pub fn gl2(n: u32) -> MatrixGroup {
    Group::from_elements(all_matrices(n, |m| m.has_unit_det()))
}

pub fn sl2(n: u32) -> MatrixGroup {
    Group::from_elements(all_matrices(n, |m| m.det() == 1 % n))
}

/// Upper-triangular invertible matrices.
pub fn borel(n: u32) -> MatrixGroup {
    Group::from_elements(all_matrices(n, |m| m.c == 0 && m.has_unit_det()))
}

/// Diagonal invertible matrices.
pub fn split_cartan(n: u32) -> MatrixGroup {
    Group::from_elements(all_matrices(n, |m| m.b == 0 && m.c == 0 && m.has_unit_det()))
}

impl MatrixGroup {
    pub fn modulus(&self) -> u32 {
        self.elements()[0].n
    }

    pub fn contains_minus_identity(&self) -> bool {
        self.contains(&ModMatrix::minus_identity(self.modulus()))
    }

    /// Image under reduction modulo a divisor `m` of the modulus.
    pub fn reduce_mod(&self, m: u32) -> MatrixGroup {
        let gens: Vec<ModMatrix> = self.gens().iter().map(|g| g.reduce(m)).collect();
        Group::generate(&gens, ModMatrix::identity(m))
    }

    /// Full preimage of `self` under reduction from `Z/big` to its modulus.
    pub fn preimage_in(&self, big: u32) -> MatrixGroup {
        let m = self.modulus();
        Group::from_elements(all_matrices(big, |x| x.has_unit_det() && self.contains(&x.reduce(m))))
    }
}

pub fn det_surjective(g: &MatrixGroup) -> bool {
    let n = g.modulus();
    let dets: HashSet<u32> = g.elements().iter().map(|x| x.det()).collect();
    let units = (0..n).filter(|u| u.gcd(&n) == 1).count();
    dets.len() == units
}

/// Some element with trace 0 and determinant -1 fixing a vector of order n.
pub fn has_cc_element(g: &MatrixGroup) -> bool {
    let n = g.modulus();
    g.elements().iter().any(|m| {
        m.trace() == 0
            && m.det() == n - 1
            && (0..n).any(|x| {
                (0..n).any(|y| x.gcd(&y).gcd(&n) == 1 && m.apply((x, y)) == (x, y))
            })
    })
}

/// The subgroup of `(Z/n)^2` fixed by every element, as `Z/m1 + Z/m2`.
pub fn fixed_submodule(g: &MatrixGroup, n: u32) -> TorsionShape {
    let mut count = 0u64;
    let mut exponent = 1u64;
    for x in 0..n {
        for y in 0..n {
            if g.gens().iter().all(|m| m.reduce_or_self(n).apply((x, y)) == (x, y)) {
                count += 1;
                let ord = n / x.gcd(&y).gcd(&n);
                exponent = exponent.max(ord as u64);
            }
        }
    }
    TorsionShape::from_order_exponent(count, exponent).expect("submodule of (Z/n)^2 has rank <= 2")
}

impl ModMatrix {
    fn reduce_or_self(&self, n: u32) -> ModMatrix {
        if self.n == n {
            *self
        } else {
            debug_assert_eq!(self.n % n, 0);
            self.reduce(n)
        }
    }
}

/// Smallest `m | n` such that `G` is the full preimage of its image mod `m`.
pub fn level_of(g: &MatrixGroup) -> u32 {
    let n = g.modulus();
    let total = gl2_order(n as u64);
    for m in 1..=n {
        if n % m != 0 {
            continue;
        }
        let image = if m == 1 { 1 } else { g.reduce_mod(m).order() as u64 };
        let kernel = total / if m == 1 { 1 } else { gl2_order(m as u64) };
        if g.order() as u64 == image * kernel {
            return m;
        }
    }
    n
}

/// A conjugator `x` with `x G x^-1` inside the subgroup cut out by `inside`.
fn conjugate_into(g: &MatrixGroup, inside: impl Fn(&ModMatrix) -> bool) -> Option<ModMatrix> {
    let n = g.modulus();
    all_matrices(n, |m| m.has_unit_det())
        .into_iter()
        .find(|x| g.gens().iter().all(|h| inside(&h.conj_by(x))))
}

pub fn is_borel_conjugate(g: &MatrixGroup) -> Option<ModMatrix> {
    conjugate_into(g, |m| m.is_upper_triangular())
}

pub fn is_split_cartan_conjugate(g: &MatrixGroup) -> Option<ModMatrix> {
    conjugate_into(g, |m| m.is_diagonal())
}

/// A conjugator `x` with `x G x^-1` contained in `h` (same modulus).
pub fn conjugate_into_group(g: &MatrixGroup, h: &MatrixGroup) -> Option<ModMatrix> {
    conjugate_into(g, |m| h.contains(m))
}
