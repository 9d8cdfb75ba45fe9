//! Dense univariate polynomials over a prime field `F_p`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;

use super::ntheory::{inv_mod, mul_mod};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyFp {
    /// Coefficients, lowest degree first, no trailing zeros.
    coeffs: Vec<u64>,
    p: u64,
}

impl fmt::Debug for PolyFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyFp{:?} mod {}", self.coeffs, self.p)
    }
}

impl PolyFp {
    pub fn new(mut coeffs: Vec<u64>, p: u64) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyFp { coeffs, p }
    }

    pub fn from_i64(coeffs: &[i64], p: u64) -> Self {
        let v = coeffs.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect();
        Self::new(v, p)
    }

    pub fn zero(p: u64) -> Self {
        PolyFp { coeffs: Vec::new(), p }
    }

    pub fn one(p: u64) -> Self {
        Self::new(vec![1], p)
    }

    pub fn x(p: u64) -> Self {
        Self::new(vec![0, 1], p)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn deg_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.lc(), self.p);
        self.scale(inv)
    }

    pub fn scale(&self, k: u64) -> Self {
        let p = self.p;
        Self::new(self.coeffs.iter().map(|&c| mul_mod(c, k, p)).collect(), p)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = o.coeffs.get(i).copied().unwrap_or(0);
                (a + b) % self.p
            })
            .collect();
        Self::new(v, self.p)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = o.coeffs.get(i).copied().unwrap_or(0);
                (a + self.p - b) % self.p
            })
            .collect();
        Self::new(v, self.p)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p as u128;
        let mut acc = vec![0u128; self.coeffs.len() + o.coeffs.len() - 1];
        // Products of two residues below 2^64 fit u128; reduce every term
        // to keep the accumulator bounded.
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + (a as u128) * (b as u128)) % p;
            }
        }
        Self::new(acc.into_iter().map(|c| c as u64).collect(), self.p)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let p = self.p;
        let dd = d.deg_or_zero();
        if self.coeffs.len() <= dd {
            return (Self::zero(p), self.clone());
        }
        let inv = inv_mod(d.lc(), p);
        let mut r = self.coeffs.clone();
        let mut q = vec![0u64; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = mul_mod(r[k + dd], inv, p);
            q[k] = c;
            if c == 0 {
                continue;
            }
            for (i, &dc) in d.coeffs.iter().enumerate() {
                let t = mul_mod(c, dc, p);
                r[k + i] = (r[k + i] + p - t) % p;
            }
        }
        r.truncate(dd);
        (Self::new(q, p), Self::new(r, p))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Monic gcd (zero only if both inputs are zero).
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn xgcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = inv_mod(r0.lc(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
            .collect();
        Self::new(v, p)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0;
        for &c in self.coeffs.iter().rev() {
            acc = (mul_mod(acc, x, self.p) + c) % self.p;
        }
        acc
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let mut acc = Self::one(self.p).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    fn pow_mod_u64(&self, e: u64, m: &Self) -> Self {
        self.pow_mod(&BigUint::from(e), m)
    }

    pub fn is_squarefree(&self) -> bool {
        if self.deg_or_zero() == 0 {
            return !self.is_zero();
        }
        self.gcd(&self.derivative()).deg_or_zero() == 0
    }

    /// The product of the distinct monic irreducible factors.
    pub fn radical(&self) -> Self {
        assert!(!self.is_zero(), "radical of the zero polynomial");
        let f = self.monic();
        if f.deg_or_zero() == 0 {
            return Self::one(self.p);
        }
        let df = f.derivative();
        if df.is_zero() {
            return f.pth_root().radical();
        }
        let g = f.gcd(&df);
        let w = f.divrem(&g).0;
        let mut c = g;
        loop {
            let y = c.gcd(&w);
            if y.deg_or_zero() == 0 {
                break;
            }
            c = c.divrem(&y).0;
        }
        if c.deg_or_zero() == 0 {
            w
        } else {
            w.mul(&c.pth_root().radical())
        }
    }

    /// For `f = g(x^p)`, returns `h` with `h^p = f`; coefficients are fixed by
    /// Frobenius on the prime field.
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        let v = self.coeffs.iter().step_by(p).copied().collect();
        Self::new(v, self.p)
    }

    /// Distinct-degree factorization of a squarefree polynomial: pairs
    /// `(d, g_d)` where `g_d` is the product of all irreducible factors of
    /// degree `d`.
    pub fn ddf(&self) -> Vec<(usize, Self)> {
        let p = self.p;
        let mut f = self.monic();
        let mut out = Vec::new();
        let x = Self::x(p);
        let mut h = x.rem(&f);
        let mut d = 0;
        while f.deg_or_zero() >= 2 * (d + 1) {
            d += 1;
            h = h.pow_mod_u64(p, &f);
            let g = h.sub(&x).gcd(&f);
            if g.deg_or_zero() > 0 {
                f = f.divrem(&g).0;
                h = h.rem(&f);
                out.push((d, g));
            }
        }
        if f.deg_or_zero() > 0 {
            out.push((f.deg_or_zero(), f));
        }
        out
    }

    /// Degrees of the irreducible factors of the radical, as
    /// `(degree, count)` pairs sorted by degree.
    pub fn ddf_degrees(&self) -> Vec<(usize, usize)> {
        self.radical()
            .ddf()
            .into_iter()
            .map(|(d, g)| (d, g.deg_or_zero() / d))
            .collect()
    }

    /// Equal-degree splitting of a squarefree product of degree-`d`
    /// irreducibles into its monic factors.
    pub fn edf<R: Rng>(&self, d: usize, rng: &mut R) -> Vec<Self> {
        let f = self.monic();
        let n = f.deg_or_zero();
        if n == 0 {
            return Vec::new();
        }
        if n == d {
            return vec![f];
        }
        let p = self.p;
        loop {
            let a = Self::new((0..n).map(|_| rng.gen_range(0..p)).collect(), p);
            if a.deg_or_zero() == 0 {
                continue;
            }
            let b = if p == 2 {
                let mut t = a.clone();
                let mut acc = a.clone();
                for _ in 1..d {
                    t = t.mul(&t).rem(&f);
                    acc = acc.add(&t);
                }
                acc
            } else {
                let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) >> 1;
                a.pow_mod(&e, &f).sub(&Self::one(p))
            };
            let g = b.gcd(&f);
            let gd = g.deg_or_zero();
            if gd > 0 && gd < n {
                let mut out = g.edf(d, rng);
                out.extend(f.divrem(&g).0.edf(d, rng));
                out.sort_by(|x, y| x.coeffs.cmp(&y.coeffs));
                return out;
            }
        }
    }

    /// Monic irreducible factors of a squarefree polynomial.
    pub fn factor_squarefree<R: Rng>(&self, rng: &mut R) -> Vec<Self> {
        let mut out = Vec::new();
        for (d, g) in self.ddf() {
            out.extend(g.edf(d, rng));
        }
        out
    }

    /// Distinct roots in `F_p`, ascending.
    pub fn roots<R: Rng>(&self, rng: &mut R) -> Vec<u64> {
        if self.is_zero() {
            return Vec::new();
        }
        let p = self.p;
        let f = self.monic();
        if f.deg_or_zero() == 0 {
            return Vec::new();
        }
        let x = Self::x(p);
        let xp = x.pow_mod_u64(p, &f);
        let g = xp.sub(&x).gcd(&f);
        let mut r: Vec<u64> = g
            .edf(1, rng)
            .into_iter()
            .map(|l| (p - l.coeffs[0] % p) % p)
            .collect();
        r.sort_unstable();
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn x4_plus_1_over_f3_splits_into_quadratics() {
        let f = PolyFp::from_i64(&[1, 0, 0, 0, 1], 3);
        assert_eq!(f.ddf_degrees(), vec![(2, 2)]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let fs = f.factor_squarefree(&mut rng);
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].mul(&fs[1]), f);
    }

    #[test]
    fn radical_handles_pth_powers() {
        // (x^3 + 2)^3 (x+1)^2 over F_3: (x^3+2) = (x+2)^3
        let p = 3;
        let a = PolyFp::from_i64(&[2, 0, 0, 1], p);
        let b = PolyFp::from_i64(&[1, 1], p);
        let f = a.mul(&a).mul(&a).mul(&b).mul(&b);
        let rad = f.radical();
        assert_eq!(rad, PolyFp::from_i64(&[2, 1], p).mul(&b));
    }

    #[test]
    fn roots_of_split_poly() {
        let p = 1_000_003;
        let mut f = PolyFp::one(p);
        for r in [5u64, 17, 999_999] {
            f = f.mul(&PolyFp::new(vec![p - r, 1], p));
        }
        f = f.mul(&PolyFp::from_i64(&[1, 0, 1], p)); // x^2 + 1, irreducible: p = 3 mod 4
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        assert_eq!(f.roots(&mut rng), vec![5, 17, 999_999]);
    }

    #[test]
    fn xgcd_identity() {
        let p = 101;
        let a = PolyFp::from_i64(&[3, 1, 4, 1, 5], p);
        let b = PolyFp::from_i64(&[9, 2, 6], p);
        let (g, s, t) = a.xgcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }
}
