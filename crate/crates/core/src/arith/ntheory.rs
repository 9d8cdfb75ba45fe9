//! Elementary number theory on machine words and big integers.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ArithError;

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo a prime `p`; `a` must be nonzero mod `p`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut t, mut nt) = (0i128, 1i128);
    let (mut r, mut nr) = (p as i128, (a % p) as i128);
    while nr != 0 {
        let q = r / nr;
        (t, nt) = (nt, t - q * nt);
        (r, nr) = (nr, r - q * nr);
    }
    debug_assert_eq!(r, 1, "inv_mod of a non-unit");
    t.rem_euclid(p as i128) as u64
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn next_prime(n: u64) -> u64 {
    let mut c = n + 1;
    while !is_prime_u64(c) {
        c += 1;
    }
    c
}

/// Primes `p` with `lo <= p < hi`.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo..hi).filter(|&n| is_prime_u64(n)).collect()
}

pub fn moebius(n: u64) -> i32 {
    let mut n = n;
    let mut mu = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    out.sort_unstable();
    out
}

pub fn prime_factors_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn big_pow_mod(b: &BigUint, e: &BigUint, m: &BigUint) -> BigUint {
    b.modpow(e, m)
}

/// Miller-Rabin with fixed bases; exact below 3.3e24 and overwhelmingly
/// reliable above.
pub fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let a = BigUint::from(a);
        if (n % &a).is_zero() {
            return false;
        }
        let mut x = big_pow_mod(&a, &d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: &BigUint, c: u64) -> Option<BigUint> {
    let c = BigUint::from(c);
    let f = |x: &BigUint| (x * x + &c) % n;
    let mut y = BigUint::from(2u32);
    let mut r: u64 = 1;
    let mut q = BigUint::one();
    let m: u64 = 128;
    let mut g = BigUint::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    let absdiff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..m.min(r - k) {
                y = f(&y);
                q = (&q * absdiff(&x, &y)) % n;
            }
            g = q.gcd(n);
            k += m;
        }
        r *= 2;
        if r > (1 << 26) {
            return None;
        }
    }
    if &g == n {
        loop {
            ys = f(&ys);
            g = absdiff(&x, &ys).gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    if &g == n {
        None
    } else {
        Some(g)
    }
}

fn split_into(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(&n) {
        out.push(n);
        return;
    }
    let r = n.sqrt();
    if &r * &r == n {
        split_into(r.clone(), out);
        split_into(r, out);
        return;
    }
    for c in 1..64u64 {
        if let Some(d) = pollard_brent(&n, c) {
            let other = &n / &d;
            split_into(d, out);
            split_into(other, out);
            return;
        }
    }
    // Unreachable for composites of the sizes this crate produces.
    out.push(n);
}

/// Prime factorization of `|n|`, primes ascending.
pub fn factor_biguint(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut n = n.clone();
    let mut primes: Vec<BigUint> = Vec::new();
    let mut p = 2u32;
    while p < 20_000 {
        let bp = BigUint::from(p);
        while (&n % &bp).is_zero() {
            n /= &bp;
            primes.push(bp.clone());
        }
        if BigUint::from(p) * BigUint::from(p) > n {
            break;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > BigUint::one() {
        split_into(n, &mut primes);
    }
    primes.sort();
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    for q in primes {
        match out.last_mut() {
            Some((last, e)) if *last == q => *e += 1,
            _ => out.push((q, 1)),
        }
    }
    out
}

/// The unique `k`-th-power-free integer `s` with `n = s * r^k` for some `r`.
pub fn power_free_part(n: &BigInt, k: u32) -> BigInt {
    if n.is_zero() {
        return BigInt::zero();
    }
    let mut s = BigInt::one();
    for (p, e) in factor_biguint(n.magnitude()) {
        let r = e % k;
        s *= BigInt::from(p).pow(r);
    }
    if n.is_negative() {
        -s
    } else {
        s
    }
}

/// Squarefree integer `s` with `q = s * r^2`, `r` rational.
pub fn squarefree_part(q: &BigRational) -> Result<BigInt, ArithError> {
    if q.is_zero() {
        return Err(ArithError::ZeroInput("squarefree part of zero"));
    }
    Ok(power_free_part(&(q.numer() * q.denom()), 2))
}

/// Fourth-power-free integer `s` with `q = s * r^4`, `r` rational.
pub fn fourth_power_free_part(q: &BigRational) -> Result<BigInt, ArithError> {
    if q.is_zero() {
        return Err(ArithError::ZeroInput("fourth-power-free part of zero"));
    }
    Ok(power_free_part(&(q.numer() * q.denom().pow(3)), 4))
}

pub fn is_square_int(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

pub fn is_square_rational(q: &BigRational) -> bool {
    is_square_int(q.numer()) && is_square_int(q.denom())
}

/// Reduce a big integer into `[0, p)`.
pub fn reduce_mod(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits")
}

/// Image of a rational in `F_p`, or `None` when `p` divides the denominator.
pub fn rational_mod(q: &BigRational, p: u64) -> Option<u64> {
    let d = reduce_mod(q.denom(), p);
    if d == 0 {
        return None;
    }
    Some(mul_mod(reduce_mod(q.numer(), p), inv_mod(d, p), p))
}

/// Rational reconstruction: the fraction `a/b` with `|a| <= num_bound`,
/// `0 < b <= den_bound` and `a = b r (mod m)`, if any.  Unique whenever
/// `2 num_bound den_bound < m`.
pub fn rational_reconstruct(
    r: &BigInt,
    m: &BigInt,
    num_bound: &BigInt,
    den_bound: &BigInt,
) -> Option<(BigInt, BigInt)> {
    let (mut r0, mut r1) = (m.clone(), r.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > *num_bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > *den_bound {
        return None;
    }
    let (a, b) = if t1.is_negative() { (-r1, -t1) } else { (r1, t1) };
    if !a.gcd(&b).is_one() {
        return None;
    }
    Some((a, b))
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
