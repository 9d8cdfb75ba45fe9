//! Index, elliptic points, cusps and genus of congruence subgroups: the
//! printed groups, then `Gamma_0(p)`-type Borel groups for small primes.
//!
//!     cargo run --release --example modular_genus

use cubic_torsion::group::borel;
use cubic_torsion::modcurve::{psl2_invariants, PRINTED_GROUPS};

fn main() {
    println!("{:<26} {:>6} {:>4} {:>6} {:>3} {:>3} {:>5} {:>5}", "group", "label", "mu", "e2", "e3", "cusps", "g", "want");
    for p in &PRINTED_GROUPS {
        let c = psl2_invariants(&p.group().unwrap()).unwrap();
        println!(
            "{:<26} {:>6} {:>4} {:>6} {:>3} {:>3} {:>5} {:>5}",
            p.name, p.label, c.index, c.e2, c.e3, c.cusps, c.genus, p.genus
        );
    }
    println!();
    for p in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        let c = psl2_invariants(&borel(p)).unwrap();
        println!("Borel mod {p:>2}: index {:>2}, genus {}", c.index, c.genus);
    }
}
