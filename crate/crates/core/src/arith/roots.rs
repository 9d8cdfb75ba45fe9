//! Rational roots of rational polynomials.
//!
//! Roots are found modulo one large prime of squarefree reduction, lifted
//! p-adically by Newton iteration, recovered by rational reconstruction and
//! then checked exactly.  A root `a/b` in lowest terms satisfies `a | c_0`
//! and `b | c_n`, which fixes the precision needed for reconstruction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::factor::is_squarefree_by_reduction;
use super::ntheory::{next_prime, rational_reconstruct};
use super::poly::{PolyQ, PolyZ};
use super::ArithError;

const ROOT_SEED: u64 = 0x0007_1007;

/// All distinct rational roots, ascending.
pub fn rational_roots(f: &PolyQ) -> Result<Vec<BigRational>, ArithError> {
    if f.is_zero() {
        return Err(ArithError::ZeroInput("roots of the zero polynomial"));
    }
    let (mut z, k) = f.primitive_z().strip_x();
    let mut roots = Vec::new();
    if k > 0 {
        roots.push(BigRational::zero());
    }
    if z.deg() == 0 {
        return Ok(roots);
    }
    if !is_squarefree_by_reduction(&z) {
        z = z.to_q().squarefree()?.primitive_z();
    }
    roots.extend(nonzero_roots_squarefree(&z));
    roots.sort();
    Ok(roots)
}

fn nonzero_roots_squarefree(z: &PolyZ) -> Vec<BigRational> {
    let lc = z.lc();
    let c0 = z.coeff(0);
    if z.deg() == 1 {
        return vec![BigRational::new(-c0, lc)];
    }
    let mut p = (1u64 << 31) - 1;
    let zp = loop {
        p = next_prime(p);
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let zp = z.reduce_mod_p(p);
        if zp.is_squarefree() {
            break zp;
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(ROOT_SEED);
    let modular = zp.roots(&mut rng);
    if modular.is_empty() {
        return Vec::new();
    }
    let num_bound = c0.abs();
    let den_bound = lc.abs();
    let target = &num_bound * &den_bound * 2;
    let dz = z.derivative();
    let mut out = Vec::new();
    for r in modular {
        let mut m = BigInt::from(p);
        let mut x = BigInt::from(r);
        while m <= target {
            m = &m * &m;
            let fx = z.eval_mod(&x, &m);
            let dfx = dz.eval_mod(&x, &m);
            // Simple root mod p, so the derivative stays a unit.
            let inv = dfx.modinv(&m).expect("simple root");
            x = (&x - fx * inv).mod_floor(&m);
        }
        if let Some((a, b)) = rational_reconstruct(&x, &m, &num_bound, &den_bound) {
            if z.eval_homogeneous(&a, &b).is_zero() {
                out.push(BigRational::new(a, b));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ntheory::rat;

    #[test]
    fn two_rational_roots_of_quartic() {
        let f = PolyQ::from_ints(&[-2, 1]); // x - 2
        let g = PolyQ::from_ints(&[1, 3]); // 3x + 1
        let h = PolyQ::from_ints(&[1, 0, 1]);
        let p = &(&f * &g) * &h;
        assert_eq!(rational_roots(&p).unwrap(), vec![rat(-1, 3), rat(2, 1)]);
    }

    #[test]
    fn repeated_and_zero_roots() {
        let f = &PolyQ::from_ints(&[0, 0, 1]) * &PolyQ::from_ints(&[5, -7]).pow(3);
        assert_eq!(rational_roots(&f).unwrap(), vec![rat(0, 1), rat(5, 7)]);
    }

    #[test]
    fn zero_polynomial_is_an_error() {
        assert!(rational_roots(&PolyQ::zero()).is_err());
    }

    #[test]
    fn large_root() {
        let r = BigRational::new(
            "-38575685889".parse::<BigInt>().unwrap(),
            BigInt::from(16384),
        );
        let lin = PolyQ::new(vec![-r.clone(), BigRational::from_integer(1.into())]);
        let f = &lin * &PolyQ::from_ints(&[3, 0, 0, 1, 7]);
        assert_eq!(rational_roots(&f).unwrap(), vec![r]);
    }
}
