//! Division polynomials of a curve, their factorization over Q, rational
//! torsion, and the local check of a claimed torsion shape over Q(3^inf).
//!
//!     cargo run --release --example division_field -- 0,0,0,-2,0

use cubic_torsion::arith::factor_over_q;
use cubic_torsion::arith::ntheory::primes_in;
use cubic_torsion::classify::classify_curve;
use cubic_torsion::cli::parse_curve;
use cubic_torsion::curve::{ap, local_injection_check, primitive_division_poly, torsion_over_q};

fn main() {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "0,0,1,-1,0".into());
    let e = parse_curve(&spec).unwrap_or_else(|m| panic!("{spec}: {m}"));
    println!("E = {e:?}, j = {}", e.j_invariant());
    println!("E(Q)_tors = {}", torsion_over_q(&e).unwrap());
    for n in [2, 3, 4, 5, 7, 9] {
        let h = primitive_division_poly(&e, n).unwrap().x_part;
        let degs: Vec<String> =
            factor_over_q(&h).unwrap().factors.iter().map(|(g, m)| if *m == 1 { g.deg().to_string() } else { format!("{}^{m}", g.deg()) }).collect();
        println!("h_{n}: degree {:>2}, factor degrees [{}]", h.deg(), degs.join(", "));
    }
    let r = classify_curve(&e).unwrap();
    println!("E(Q(3^inf))_tors = {}", r.torsion);
    let primes: Vec<u64> = primes_in(5, 200).into_iter().filter(|&p| ap(&e, p).trace.is_some()).take(10).collect();
    let rep = local_injection_check(&e, &r.torsion, &primes);
    println!("local check at {} good primes: {}", rep.checked(), if rep.passed() { "pass" } else { "FAIL" });
}
