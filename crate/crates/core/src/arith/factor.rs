//! Factorization over `Q`: squarefree decomposition, then Zassenhaus
//! (modular factorization, multifactor Hensel lifting, recombination).

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::ntheory::next_prime;
use super::poly::{PolyQ, PolyZ};
use super::poly_fp::PolyFp;
use super::ArithError;

pub const MAX_FACTOR_DEGREE: usize = 64;

/// `f = unit * prod factor_i^mult_i` with monic irreducible factors sorted by
/// degree, then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: BigRational,
    pub factors: Vec<(PolyQ, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> PolyQ {
        let mut acc = PolyQ::constant(self.unit.clone());
        for (g, e) in &self.factors {
            acc = &acc * &g.pow(*e);
        }
        acc
    }
}

const FACTOR_SEED: u64 = 0x5eed_fac7;

/// Factor a nonzero polynomial of degree at most 64 over `Q`.
pub fn factor_over_q(f: &PolyQ) -> Result<Factorization, ArithError> {
    if f.is_zero() {
        return Err(ArithError::ZeroInput("factorization of zero"));
    }
    if f.deg() > MAX_FACTOR_DEGREE {
        return Err(ArithError::DegreeLimit { degree: f.deg(), limit: MAX_FACTOR_DEGREE });
    }
    let unit = f.lc();
    let mut factors = Vec::new();
    let parts = if is_squarefree_by_reduction(&f.primitive_z()) {
        if f.deg() == 0 { Vec::new() } else { vec![(f.monic(), 1)] }
    } else {
        f.squarefree_decomposition()?
    };
    let mut rng = ChaCha8Rng::seed_from_u64(FACTOR_SEED);
    for (part, mult) in parts {
        let (z, k) = part.primitive_z().strip_x();
        if k > 0 {
            factors.push((PolyQ::x(), mult));
        }
        if z.deg() > 0 {
            for g in zassenhaus(&z, &mut rng) {
                factors.push((g.to_q().monic(), mult));
            }
        }
    }
    factors.sort_by(|(a, _), (b, _)| {
        a.deg().cmp(&b.deg()).then_with(|| format!("{a}").cmp(&format!("{b}")))
    });
    Ok(Factorization { unit, factors })
}

/// Squarefree over `Q` is certified by one prime of squarefree reduction.
pub(crate) fn is_squarefree_by_reduction(z: &PolyZ) -> bool {
    if z.deg() == 0 {
        return true;
    }
    let lc = z.lc();
    let mut p = 1u64 << 30;
    for _ in 0..6 {
        p = next_prime(p);
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        if z.reduce_mod_p(p).is_squarefree() {
            return true;
        }
    }
    false
}

fn sym_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn reduce(f: &PolyZ, m: &BigInt) -> PolyZ {
    PolyZ::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn mul_mod(a: &PolyZ, b: &PolyZ, m: &BigInt) -> PolyZ {
    reduce(&a.mul(b), m)
}

/// Division by a monic polynomial modulo `m`.
fn divrem_monic(a: &PolyZ, b: &PolyZ, m: &BigInt) -> (PolyZ, PolyZ) {
    let db = b.deg();
    let mut r: Vec<BigInt> = reduce(a, m).coeffs().to_vec();
    if r.len() <= db {
        return (PolyZ::zero(), PolyZ::new(r));
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db].mod_floor(m);
        if !c.is_zero() {
            for (i, bc) in b.coeffs().iter().enumerate() {
                r[k + i] = (&r[k + i] - &c * bc).mod_floor(m);
            }
        }
        q[k] = c;
    }
    r.truncate(db);
    (PolyZ::new(q), reduce(&PolyZ::new(r), m))
}

fn fp_to_z(f: &PolyFp) -> PolyZ {
    PolyZ::new(f.coeffs().iter().map(|&c| BigInt::from(c)).collect())
}

/// One quadratic Hensel step: from `f = g h (mod m)`, `s g + t h = 1 (mod m)`
/// with `h` monic, produce the same identities modulo `m^2`.
fn hensel_step(
    f: &PolyZ,
    g: &PolyZ,
    h: &PolyZ,
    s: &PolyZ,
    t: &PolyZ,
    m2: &BigInt,
) -> (PolyZ, PolyZ, PolyZ, PolyZ) {
    let e = reduce(&f.sub(&g.mul(h)), m2);
    let (q, r) = divrem_monic(&mul_mod(s, &e, m2), h, m2);
    let g2 = reduce(&g.add(&t.mul(&e)).add(&q.mul(g)), m2);
    let h2 = reduce(&h.add(&r), m2);
    let b = reduce(&s.mul(&g2).add(&t.mul(&h2)).sub(&PolyZ::one()), m2);
    let (c, d) = divrem_monic(&mul_mod(s, &b, m2), &h2, m2);
    let s2 = reduce(&s.sub(&d), m2);
    let t2 = reduce(&t.sub(&t.mul(&b)).sub(&c.mul(&g2)), m2);
    (g2, h2, s2, t2)
}

/// Lift the monic modular factors of `f` (mod `p`) to monic factors modulo
/// `p^(2^j) >= target`.  Returns the factors and the final modulus.
fn multifactor_lift(f: &PolyZ, facs: &[PolyFp], p: u64, target: &BigInt) -> (Vec<PolyZ>, BigInt) {
    let mut m = BigInt::from(p);
    while m < *target {
        m = &m * &m;
    }
    let mut out = Vec::with_capacity(facs.len());
    lift_rec(&reduce(f, &m), facs, p, &m, &mut out);
    (out, m)
}

fn lift_rec(f: &PolyZ, facs: &[PolyFp], p: u64, modulus: &BigInt, out: &mut Vec<PolyZ>) {
    if facs.len() == 1 {
        let inv = f.lc().modinv(modulus).expect("leading coefficient is a unit");
        out.push(reduce(&f.scale(&inv), modulus));
        return;
    }
    let half = facs.len() / 2;
    let lc_p = {
        let l = f.lc().mod_floor(&BigInt::from(p));
        num_traits::ToPrimitive::to_u64(&l).unwrap()
    };
    let mut g0 = PolyFp::new(vec![lc_p], p);
    for u in &facs[..half] {
        g0 = g0.mul(u);
    }
    let mut h0 = PolyFp::one(p);
    for u in &facs[half..] {
        h0 = h0.mul(u);
    }
    let (one, s0, t0) = g0.xgcd(&h0);
    debug_assert_eq!(one, PolyFp::one(p));
    let (mut g, mut h, mut s, mut t) = (fp_to_z(&g0), fp_to_z(&h0), fp_to_z(&s0), fp_to_z(&t0));
    let mut m = BigInt::from(p);
    while m < *modulus {
        m = &m * &m;
        let fm = reduce(f, &m);
        (g, h, s, t) = hensel_step(&fm, &g, &h, &s, &t, &m);
    }
    let g = reduce(&g, modulus);
    let h = reduce(&h, modulus);
    lift_rec(&g, &facs[..half], p, modulus, out);
    lift_rec(&h, &facs[half..], p, modulus, out);
}

/// Degrees `d` that some product of a sub-multiset of the given factor
/// degrees attains.
fn subset_sums(degrees: &[usize]) -> BTreeSet<usize> {
    let mut s = BTreeSet::from([0usize]);
    for &d in degrees {
        let next: Vec<usize> = s.iter().map(|x| x + d).collect();
        s.extend(next);
    }
    s
}

/// Irreducible factors (primitive, positive leading coefficient) of a
/// primitive squarefree integer polynomial with nonzero constant term.
fn zassenhaus(f: &PolyZ, rng: &mut ChaCha8Rng) -> Vec<PolyZ> {
    let f = f.primitive();
    let n = f.deg();
    if n <= 1 {
        return vec![f];
    }
    let lc = f.lc();
    // Sample several good primes; the degree pattern of each restricts the
    // possible factor degrees, and the prime with the fewest factors is used
    // for lifting.
    let mut allowed: Option<BTreeSet<usize>> = None;
    let mut best: Option<(u64, usize)> = None;
    let mut p = 1u64 << 15;
    let mut good = 0;
    while good < 8 {
        p = next_prime(p);
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = f.reduce_mod_p(p);
        if !fp.is_squarefree() {
            continue;
        }
        good += 1;
        let degs: Vec<usize> = fp
            .ddf()
            .into_iter()
            .flat_map(|(d, g)| std::iter::repeat(d).take(g.degree().unwrap_or(0) / d))
            .collect();
        let sums = subset_sums(&degs);
        allowed = Some(match allowed {
            None => sums,
            Some(a) => a.intersection(&sums).copied().collect(),
        });
        if best.is_none_or(|(_, c)| degs.len() < c) {
            best = Some((p, degs.len()));
        }
        if degs.len() == 1 || allowed.as_ref().is_some_and(|a| a.len() == 2) {
            return vec![f];
        }
    }
    let allowed = allowed.unwrap();
    let (p, _) = best.unwrap();
    let fp = f.reduce_mod_p(p);
    let mut modular = fp.factor_squarefree(rng);
    modular.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));

    // Mignotte-type bound on the coefficients of any factor, times lc.
    let bound = BigInt::from(2).pow(n as u32) * BigInt::from(n + 1) * f.max_norm() * lc.abs();
    let target = bound * 2 + 1;
    let (lifted, m) = multifactor_lift(&f, &modular, p, &target);

    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut f_cur = f.clone();
    let mut out = Vec::new();
    let mut s = 1;
    'outer: while 2 * s <= remaining.len() {
        let b = f_cur.lc();
        let bf0 = &b * f_cur.coeff(0);
        let mut comb: Vec<usize> = (0..s).collect();
        loop {
            let subset: Vec<usize> = comb.iter().map(|&i| remaining[i]).collect();
            let deg: usize = subset.iter().map(|&i| lifted[i].deg()).sum();
            if allowed.contains(&deg) {
                // Constant-term pretest before forming the product.
                let mut c0 = b.clone();
                for &i in &subset {
                    c0 = (c0 * lifted[i].coeff(0)).mod_floor(&m);
                }
                let c0 = sym_mod(&c0, &m);
                if !c0.is_zero() && (&bf0 % &c0).is_zero() {
                    let mut g = PolyZ::new(vec![b.clone()]);
                    for &i in &subset {
                        g = mul_mod(&g, &lifted[i], &m);
                    }
                    let g = PolyZ::new(g.coeffs().iter().map(|c| sym_mod(c, &m)).collect())
                        .primitive();
                    if let Some(q) = f_cur.div_exact(&g) {
                        out.push(g);
                        f_cur = q.primitive();
                        remaining = remaining
                            .iter()
                            .enumerate()
                            .filter(|(j, _)| !comb.contains(j))
                            .map(|(_, &i)| i)
                            .collect();
                        continue 'outer;
                    }
                }
            }
            if !next_combination(&mut comb, remaining.len()) {
                break;
            }
        }
        s += 1;
    }
    if f_cur.deg() > 0 {
        out.push(f_cur);
    }
    out
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] != i + n - k {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

pub fn is_irreducible(f: &PolyQ) -> Result<bool, ArithError> {
    let fac = factor_over_q(f)?;
    Ok(fac.factors.len() == 1 && fac.factors[0].1 == 1)
}
