//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use cubic_torsion::arith::ntheory::{is_prime_u64, reduce_mod};
use cubic_torsion::arith::{factor_over_q, rational_roots, PolyQ};
use cubic_torsion::TorsionShape;

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Characteristic polynomial of a square matrix (Faddeev-LeVerrier).
pub fn charpoly(a: &[Vec<BigRational>]) -> PolyQ {
    let n = a.len();
    let mut c = vec![BigRational::zero(); n + 1];
    c[n] = BigRational::one();
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // m <- a*m + c[n-k+1] I
        let mut next = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigRational::zero();
                for l in 0..n {
                    s += &a[i][l] * &m[l][j];
                }
                if i == j {
                    s += &c[n - k + 1];
                }
                next[i][j] = s;
            }
        }
        m = next;
        let mut tr = BigRational::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &a[i][l] * &m[l][i];
            }
        }
        c[n - k] = -tr / q(k as i64);
    }
    PolyQ::new(c)
}

/// Matrix of multiplication by `f` on `Q[x]/(h)`, basis `1, x, ..`.
pub fn mult_matrix(f: &PolyQ, h: &PolyQ) -> Vec<Vec<BigRational>> {
    let n = h.deg();
    let mut cols = Vec::new();
    let mut basis = PolyQ::one();
    for _ in 0..n {
        cols.push((&basis * f).rem(h).unwrap());
        basis = &basis * &PolyQ::x();
    }
    (0..n).map(|i| (0..n).map(|j| cols[j].coeff(i)).collect()).collect()
}

/// Resolvent cubic of a monic quartic.
pub fn resolvent_cubic(g: &PolyQ) -> PolyQ {
    let g = g.monic();
    let (a, b, c, e) = (g.coeff(3), g.coeff(2), g.coeff(1), g.coeff(0));
    PolyQ::new(vec![
        -(&a * &a * &e - q(4) * &b * &e + &c * &c),
        &a * &c - q(4) * &e,
        -b,
        q(1),
    ])
}

/// All factors mod `p` have degree at most 2, at `primes` good primes.
pub fn frobenius_exponent_two(g: &PolyQ, primes: usize) -> bool {
    let z = g.primitive_z();
    let mut p = 1_000u64;
    let mut used = 0;
    while used < primes {
        p += 1;
        if !is_prime_u64(p) || reduce_mod(&z.lc(), p) == 0 {
            continue;
        }
        let gp = z.reduce_mod_p(p);
        if !gp.is_squarefree() {
            continue;
        }
        used += 1;
        if gp.ddf_degrees().iter().any(|(d, _)| *d > 2) {
            return false;
        }
    }
    true
}

/// Is the splitting field of the irreducible `g` multiquadratic?
fn multiquadratic_factor(g: &PolyQ) -> bool {
    match g.deg() {
        1 | 2 => true,
        4 => {
            let r = rational_roots(&resolvent_cubic(g)).unwrap();
            let split = r.len() == 3 || {
                // repeated roots of the resolvent: count with multiplicity
                let f = factor_over_q(&resolvent_cubic(g)).unwrap();
                f.factors.iter().all(|(p, _)| p.deg() == 1)
            };
            split && frobenius_exponent_two(g, 60)
        }
        8 => frobenius_exponent_two(g, 200),
        _ => false,
    }
}

/// 4-torsion type over `Q(3^inf)` of `y^2 = x^3 + d x`, decided from the
/// 4-division field: its Galois group is a 2-group, so it embeds in a power
/// of `S3` exactly when it has exponent 2.
pub fn j1728_oracle(d: i64) -> TorsionShape {
    let dq = q(d);
    // points of exact order 4: x^6 + 5d x^4 - 5d^2 x^2 - d^3
    let h4 = PolyQ::new(vec![-q(d * d * d), q(0), -q(5 * d * d), q(0), q(5 * d), q(0), q(1)]);
    let f = PolyQ::new(vec![q(0), dq, q(0), q(1)]);
    let chi = charpoly(&mult_matrix(&f, &h4));
    let ys = chi.compose(&PolyQ::new(vec![q(0), q(0), q(1)]));
    let mut ok = true;
    for poly in [&h4, &ys] {
        for (g, _) in factor_over_q(poly).unwrap().factors {
            ok &= multiquadratic_factor(&g);
        }
    }
    if ok {
        TorsionShape::new(4, 4)
    } else {
        TorsionShape::new(2, 2)
    }
}

pub fn is_fourth_power_free(d: i64) -> bool {
    d != 0 && (2..=4i64).all(|p| d % p.pow(4) != 0)
}
