//! Group elements: 2x2 matrices over `Z/n`, small permutations, and pairs.

use std::fmt;
use std::hash::Hash;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

/// An element of some finite group, carrying enough data to form the
/// identity of its own group.
pub trait GroupElement: Copy + Eq + Ord + Hash + fmt::Debug {
    fn op(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    fn identity_like(&self) -> Self;
    /// Injective key within the family of groups this element belongs to,
    /// below `code_bound`.
    fn code(&self) -> u64;
    fn code_bound(&self) -> u64;

    fn is_identity(&self) -> bool {
        *self == self.identity_like()
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut acc = self.identity_like();
        let mut base = *self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.op(&base);
            }
            base = base.op(&base);
            e >>= 1;
        }
        acc
    }

    fn order(&self) -> u64 {
        let mut k = 1;
        let mut x = *self;
        while !x.is_identity() {
            x = x.op(self);
            k += 1;
        }
        k
    }

    fn conj_by(&self, x: &Self) -> Self {
        x.op(self).op(&x.inverse())
    }
}

/// `[[a, b], [c, d]]` with entries reduced mod `n`.  Ordering is
/// lexicographic on `(n, a, b, c, d)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModMatrix {
    pub n: u32,
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl fmt::Debug for ModMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]/{}", self.a, self.b, self.c, self.d, self.n)
    }
}

impl ModMatrix {
    pub fn new(n: u32, a: i64, b: i64, c: i64, d: i64) -> Self {
        let r = |x: i64| x.rem_euclid(n as i64) as u32;
        ModMatrix { n, a: r(a), b: r(b), c: r(c), d: r(d) }
    }

    pub fn from_entries(n: u32, e: [i64; 4]) -> Self {
        Self::new(n, e[0], e[1], e[2], e[3])
    }

    pub fn entries(&self) -> [u32; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn identity(n: u32) -> Self {
        Self::new(n, 1, 0, 0, 1)
    }

    pub fn minus_identity(n: u32) -> Self {
        Self::new(n, -1, 0, 0, -1)
    }

    pub fn det(&self) -> u32 {
        let n = self.n as u64;
        ((self.a as u64 * self.d as u64 + n * n - (self.b as u64 * self.c as u64) % (n * n)) % n) as u32
    }

    pub fn trace(&self) -> u32 {
        (self.a + self.d) % self.n
    }

    pub fn has_unit_det(&self) -> bool {
        self.det().gcd(&self.n) == 1
    }

    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.n, o.n);
        let n = self.n as u64;
        let (a, b, c, d) = (self.a as u64, self.b as u64, self.c as u64, self.d as u64);
        let (e, f, g, h) = (o.a as u64, o.b as u64, o.c as u64, o.d as u64);
        ModMatrix {
            n: self.n,
            a: ((a * e + b * g) % n) as u32,
            b: ((a * f + b * h) % n) as u32,
            c: ((c * e + d * g) % n) as u32,
            d: ((c * f + d * h) % n) as u32,
        }
    }

    /// Inverse; the determinant must be a unit.
    pub fn inv(&self) -> Self {
        let n = self.n as i64;
        let det = self.det() as i64;
        let e = det.extended_gcd(&n);
        assert_eq!(e.gcd, 1, "matrix {self:?} is not invertible");
        let di = e.x.rem_euclid(n);
        Self::new(
            self.n,
            self.d as i64 * di,
            -(self.b as i64) * di,
            -(self.c as i64) * di,
            self.a as i64 * di,
        )
    }

    /// Reduction modulo a divisor `m` of `n`.
    pub fn reduce(&self, m: u32) -> Self {
        debug_assert_eq!(self.n % m, 0);
        Self::new(m, self.a as i64, self.b as i64, self.c as i64, self.d as i64)
    }

    pub fn apply(&self, v: (u32, u32)) -> (u32, u32) {
        let n = self.n as u64;
        let (x, y) = (v.0 as u64, v.1 as u64);
        (
            ((self.a as u64 * x + self.b as u64 * y) % n) as u32,
            ((self.c as u64 * x + self.d as u64 * y) % n) as u32,
        )
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.c == 0
    }

    pub fn is_diagonal(&self) -> bool {
        self.b == 0 && self.c == 0
    }

    pub fn code_of(&self) -> u64 {
        let n = self.n as u64;
        ((self.a as u64 * n + self.b as u64) * n + self.c as u64) * n + self.d as u64
    }

    pub fn from_code(n: u32, code: u64) -> Self {
        let m = n as u64;
        let d = code % m;
        let c = (code / m) % m;
        let b = (code / (m * m)) % m;
        let a = code / (m * m * m);
        ModMatrix { n, a: a as u32, b: b as u32, c: c as u32, d: d as u32 }
    }
}

impl GroupElement for ModMatrix {
    fn op(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn inverse(&self) -> Self {
        self.inv()
    }
    fn identity_like(&self) -> Self {
        Self::identity(self.n)
    }
    fn code(&self) -> u64 {
        self.code_of()
    }
    fn code_bound(&self) -> u64 {
        (self.n as u64).pow(4)
    }
}

/// Permutation of `{0, .., deg-1}` with `deg <= 8`, composed right to left:
/// `(p.op(q))(i) = p(q(i))`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm {
    deg: u8,
    img: [u8; 8],
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", &self.img[..self.deg as usize])
    }
}

impl Perm {
    pub fn new(images: &[u8]) -> Self {
        let deg = images.len();
        assert!(deg <= 8, "degree at most 8");
        let mut seen = [false; 8];
        let mut img = [0u8; 8];
        for (i, &x) in images.iter().enumerate() {
            assert!((x as usize) < deg && !seen[x as usize], "not a permutation: {images:?}");
            seen[x as usize] = true;
            img[i] = x;
        }
        for (i, slot) in img.iter_mut().enumerate().skip(deg) {
            *slot = i as u8;
        }
        Perm { deg: deg as u8, img }
    }

    pub fn identity(deg: u8) -> Self {
        let v: Vec<u8> = (0..deg).collect();
        Self::new(&v)
    }

    pub fn degree(&self) -> u8 {
        self.deg
    }

    pub fn image(&self, i: u8) -> u8 {
        self.img[i as usize]
    }

    /// All permutations of the given degree, sorted.
    pub fn all(deg: u8) -> Vec<Perm> {
        fn rec(prefix: &mut Vec<u8>, deg: u8, out: &mut Vec<Perm>) {
            if prefix.len() == deg as usize {
                out.push(Perm::new(prefix));
                return;
            }
            for x in 0..deg {
                if !prefix.contains(&x) {
                    prefix.push(x);
                    rec(prefix, deg, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), deg, &mut out);
        out.sort();
        out
    }
}

impl GroupElement for Perm {
    fn op(&self, other: &Self) -> Self {
        debug_assert_eq!(self.deg, other.deg);
        let mut img = [0u8; 8];
        for (i, slot) in img.iter_mut().enumerate() {
            *slot = self.img[other.img[i] as usize];
        }
        Perm { deg: self.deg, img }
    }
    fn inverse(&self) -> Self {
        let mut img = [0u8; 8];
        for i in 0..8 {
            img[self.img[i] as usize] = i as u8;
        }
        Perm { deg: self.deg, img }
    }
    fn identity_like(&self) -> Self {
        Perm::identity(self.deg)
    }
    fn code(&self) -> u64 {
        self.img[..self.deg as usize].iter().fold(0u64, |acc, &x| acc * 8 + x as u64)
    }
    fn code_bound(&self) -> u64 {
        8u64.pow(self.deg as u32)
    }
}

impl<A: GroupElement, B: GroupElement> GroupElement for (A, B) {
    fn op(&self, other: &Self) -> Self {
        (self.0.op(&other.0), self.1.op(&other.1))
    }
    fn inverse(&self) -> Self {
        (self.0.inverse(), self.1.inverse())
    }
    fn identity_like(&self) -> Self {
        (self.0.identity_like(), self.1.identity_like())
    }
    fn code(&self) -> u64 {
        self.0.code() * self.1.code_bound() + self.1.code()
    }
    fn code_bound(&self) -> u64 {
        self.0.code_bound().saturating_mul(self.1.code_bound())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_inverse() {
        let m = ModMatrix::new(9, 2, 3, 1, 4);
        assert!(m.mul(&m.inv()).is_identity());
        assert_eq!(ModMatrix::from_code(9, m.code()), m);
    }

    #[test]
    fn perms_compose() {
        let s = Perm::new(&[1, 0, 2]);
        let r = Perm::new(&[1, 2, 0]);
        assert_eq!(r.order(), 3);
        assert_eq!(s.op(&r).order(), 2);
        assert_eq!(s.op(&r).op(&s), r.inverse());
        assert_eq!(Perm::all(3).len(), 6);
    }
}
