//! Dense univariate polynomials over `Q` and `Z`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ntheory::{rational_mod, reduce_mod};
use super::poly_fp::PolyFp;
use super::ArithError;

/// Polynomial with rational coefficients, lowest degree first, normalized so
/// the leading coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(into = "Vec<String>", try_from = "Vec<String>")]
pub struct PolyQ {
    coeffs: Vec<BigRational>,
}

impl fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl From<PolyQ> for Vec<String> {
    fn from(p: PolyQ) -> Self {
        p.coeffs.iter().map(super::format_rational).collect()
    }
}

impl TryFrom<Vec<String>> for PolyQ {
    type Error = ArithError;
    fn try_from(v: Vec<String>) -> Result<Self, ArithError> {
        Ok(PolyQ::new(v.iter().map(|s| super::parse_rational(s)).collect::<Result<_, _>>()?))
    }
}

impl PolyQ {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `c x^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut v = vec![BigRational::zero(); k];
        v.push(c);
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().recip())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn divrem(&self, d: &Self) -> Result<(Self, Self), ArithError> {
        if d.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let dd = d.deg();
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let inv = d.lc().recip();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &inv;
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    r[k + i] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Self) -> Result<Self, ArithError> {
        let (q, r) = self.divrem(d)?;
        if !r.is_zero() {
            return Err(ArithError::NotExact);
        }
        Ok(q)
    }

    pub fn rem(&self, d: &Self) -> Result<Self, ArithError> {
        Ok(self.divrem(d)?.1)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &Self) -> Self {
        // Work on primitive integer representatives to damp coefficient growth.
        let (mut a, mut b) = (self.primitive_z(), o.primitive_z());
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.to_q().monic()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Self::constant(c.clone());
        }
        acc
    }

    /// Common denominator of the coefficients times the gcd of the
    /// numerators, signed so the primitive part has positive leading
    /// coefficient: `self = content * primitive_z()`.
    pub fn content(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let mut num = BigInt::zero();
        for c in &self.coeffs {
            num = num.gcd(&(c.numer() * (&den / c.denom())));
        }
        let mut content = BigRational::new(num, den);
        if self.lc().is_negative() {
            content = -content;
        }
        content
    }

    /// Primitive integer polynomial with positive leading coefficient and
    /// the same roots.
    pub fn primitive_z(&self) -> PolyZ {
        if self.is_zero() {
            return PolyZ::zero();
        }
        let c = self.content();
        PolyZ::new(
            self.coeffs
                .iter()
                .map(|x| {
                    let q = x / &c;
                    debug_assert!(q.is_integer());
                    q.to_integer()
                })
                .collect(),
        )
    }

    /// Image in `F_p[x]`, or `None` if `p` divides some denominator.
    pub fn reduce_mod(&self, p: u64) -> Option<PolyFp> {
        let mut v = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            v.push(rational_mod(c, p)?);
        }
        Some(PolyFp::new(v, p))
    }

    /// Squarefree part (product of distinct irreducible factors), monic.
    pub fn squarefree(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::ZeroInput("squarefree part of zero"));
        }
        let g = self.gcd(&self.derivative());
        Ok(self.exact_div(&g)?.monic())
    }

    /// Yun's squarefree decomposition: monic `(a_i, i)` with
    /// `self = lc * prod a_i^i`.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Self, u32)>, ArithError> {
        if self.is_zero() {
            return Err(ArithError::ZeroInput("squarefree decomposition of zero"));
        }
        let f = self.monic();
        let mut out = Vec::new();
        if f.deg() == 0 {
            return Ok(out);
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0)?;
        let mut c = df.exact_div(&a0)?;
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.deg() > 0 {
            let a = b.gcd(&d);
            b = b.exact_div(&a)?;
            c = d.exact_div(&a)?;
            d = &c - &b.derivative();
            if a.deg() > 0 {
                out.push((a, i));
            }
            i += 1;
        }
        Ok(out)
    }

    /// Substitute `x -> x^k`.
    pub fn inflate(&self, k: usize) -> Self {
        let mut v = vec![BigRational::zero(); self.coeffs.len().saturating_sub(1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * k] = c.clone();
        }
        Self::new(v)
    }
}

impl Add for &PolyQ {
    type Output = PolyQ;
    fn add(self, o: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyQ::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &PolyQ {
    type Output = PolyQ;
    fn sub(self, o: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyQ::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &PolyQ {
    type Output = PolyQ;
    fn mul(self, o: &PolyQ) -> PolyQ {
        if self.is_zero() || o.is_zero() {
            return PolyQ::zero();
        }
        // Multiply over Z with a common denominator: much cheaper than
        // normalizing a rational at every step.
        let (ca, za) = (self.content(), self.primitive_z());
        let (cb, zb) = (o.content(), o.primitive_z());
        let z = za.mul(&zb);
        z.to_q().scale(&(ca * cb))
    }
}

/// Polynomial with integer coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyZ {
    coeffs: Vec<BigInt>,
}

impl PolyZ {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyZ { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero() -> Self {
        PolyZ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::new(vec![BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn to_q(&self) -> PolyQ {
        PolyQ::from_bigints(&self.coeffs)
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Self::new(v)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    /// Pseudo-remainder `lc(d)^k self mod d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.deg();
        let ld = d.lc();
        let mut r = self.clone();
        while !r.is_zero() && r.deg() >= dd {
            let shift = r.deg() - dd;
            let lr = r.lc();
            let mut v = r.scale(&ld).coeffs;
            for (i, c) in d.coeffs.iter().enumerate() {
                v[i + shift] -= &lr * c;
            }
            r = Self::new(v);
        }
        r
    }

    /// Exact quotient over `Z`, if `d` divides `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.deg() < d.deg() {
            return None;
        }
        let dd = d.deg();
        let ld = d.lc();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let (c, rem) = r[k + dd].div_rem(&ld);
            if !rem.is_zero() {
                return None;
            }
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    r[k + i] -= &c * dc;
                }
            }
            q[k] = c;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(q))
    }

    /// `sum c_i a^i b^(n-i)`, which vanishes iff `a/b` is a root (`b != 0`).
    pub fn eval_homogeneous(&self, a: &BigInt, b: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut bpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c * &bpow;
            bpow *= b;
        }
        acc
    }

    pub fn eval_mod(&self, x: &BigInt, m: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = (acc * x + c).mod_floor(m);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn reduce_mod_p(&self, p: u64) -> PolyFp {
        PolyFp::new(self.coeffs.iter().map(|c| reduce_mod(c, p)).collect(), p)
    }

    /// Largest coefficient magnitude.
    pub fn max_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
    }

    /// Strip the largest power of `x` dividing `self`; returns the power.
    pub fn strip_x(&self) -> (Self, usize) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (Self::new(self.coeffs[k..].to_vec()), k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ntheory::rat;

    #[test]
    fn divrem_roundtrip() {
        let a = PolyQ::from_ints(&[1, 2, 3, 4, 5]);
        let b = PolyQ::new(vec![rat(1, 2), rat(-3, 1), rat(2, 3)]);
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.deg() < b.deg());
    }

    #[test]
    fn gcd_of_shared_factor() {
        let f = PolyQ::from_ints(&[-1, 1]); // x - 1
        let g = PolyQ::from_ints(&[2, 0, 1]);
        let h = PolyQ::from_ints(&[0, 3, 1]);
        assert_eq!((&f * &g).gcd(&(&f * &h)), f);
    }

    #[test]
    fn yun_decomposition() {
        let a = PolyQ::from_ints(&[1, 1]);
        let b = PolyQ::from_ints(&[-2, 0, 1]);
        let f = (&a.pow(3) * &b).scale(&rat(5, 1));
        let d = f.squarefree_decomposition().unwrap();
        assert_eq!(d, vec![(b.clone(), 1), (a.clone(), 3)]);
        assert_eq!(f.squarefree().unwrap(), &a * &b);
    }

    #[test]
    fn homogeneous_eval() {
        let f = PolyZ::from_ints(&[-3, 2]); // 2x - 3
        assert!(f.eval_homogeneous(&BigInt::from(3), &BigInt::from(2)).is_zero());
        let g = PolyZ::from_ints(&[6, -5, 1]); // (x-2)(x-3)
        assert!(g.eval_homogeneous(&BigInt::from(4), &BigInt::from(2)).is_zero());
        assert!(!g.eval_homogeneous(&BigInt::from(5), &BigInt::from(2)).is_zero());
    }
}
