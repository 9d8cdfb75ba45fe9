//! Finite abelian groups of rank at most two, `Z/m1 + Z/m2` with `m1 | m2`.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[u64; 2]", try_from = "[u64; 2]")]
pub struct TorsionShape {
    pub m1: u64,
    pub m2: u64,
}

impl TorsionShape {
    /// Panics unless `m1 | m2` and both are positive.
    pub const fn new(m1: u64, m2: u64) -> Self {
        assert!(m1 > 0 && m2 > 0 && m2 % m1 == 0, "shape needs m1 | m2");
        TorsionShape { m1, m2 }
    }

    pub fn try_new(m1: u64, m2: u64) -> Option<Self> {
        (m1 > 0 && m2 > 0 && m2 % m1 == 0).then_some(TorsionShape { m1, m2 })
    }

    /// The shape of an abelian group of order `order` and exponent `exponent`
    /// known to have rank at most two.
    pub fn from_order_exponent(order: u64, exponent: u64) -> Option<Self> {
        if exponent == 0 || order % exponent != 0 {
            return None;
        }
        Self::try_new(order / exponent, exponent)
    }

    pub fn order(&self) -> u64 {
        self.m1 * self.m2
    }

    pub fn exponent(&self) -> u64 {
        self.m2
    }

    /// `Z/m1 + Z/m2` embeds in `Z/M1 + Z/M2` iff `m1 | M1` and `m2 | M2`.
    pub fn is_contained_in(&self, other: &TorsionShape) -> bool {
        other.m1 % self.m1 == 0 && other.m2 % self.m2 == 0
    }

    /// The part of order prime to `p`.
    pub fn prime_to(&self, p: u64) -> TorsionShape {
        let strip = |mut m: u64| {
            while m % p == 0 {
                m /= p;
            }
            m
        };
        TorsionShape { m1: strip(self.m1), m2: strip(self.m2) }
    }
}

/// `true` iff `t1` is isomorphic to a subgroup of `t2`.
pub fn shape_contains(t1: &TorsionShape, t2: &TorsionShape) -> bool {
    t1.is_contained_in(t2)
}

impl fmt::Display for TorsionShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m1, self.m2)
    }
}

impl From<TorsionShape> for [u64; 2] {
    fn from(t: TorsionShape) -> Self {
        [t.m1, t.m2]
    }
}

impl TryFrom<[u64; 2]> for TorsionShape {
    type Error = String;
    fn try_from(v: [u64; 2]) -> Result<Self, String> {
        TorsionShape::try_new(v[0], v[1]).ok_or_else(|| format!("invalid shape {v:?}: need m1 | m2"))
    }
}

const fn s(m1: u64, m2: u64) -> TorsionShape {
    TorsionShape::new(m1, m2)
}

/// The twenty groups that occur as torsion over the compositum of all cubic
/// fields, for elliptic curves over `Q`.
pub const CLASS20: [TorsionShape; 20] = [
    s(2, 2), s(2, 4), s(2, 8), s(2, 10), s(2, 14), s(2, 16), s(2, 26),
    s(4, 4), s(4, 8), s(4, 16), s(4, 28),
    s(6, 6), s(6, 12), s(6, 18), s(6, 30), s(6, 42),
    s(8, 8), s(12, 12), s(14, 14), s(18, 18),
];

/// `(Z/8 + Z/16) + (Z/9 + Z/9) + Z/5 + (Z/7 + Z/7) + Z/13`.
pub const T_MAX: TorsionShape = s(8 * 9 * 7, 16 * 9 * 5 * 7 * 13);

/// Torsion groups of elliptic curves over `Q`.
pub const MAZUR15: [TorsionShape; 15] = [
    s(1, 1), s(1, 2), s(1, 3), s(1, 4), s(1, 5), s(1, 6), s(1, 7), s(1, 8), s(1, 9), s(1, 10),
    s(1, 12), s(2, 2), s(2, 4), s(2, 6), s(2, 8),
];
