//! The one-sided Monte Carlo test applied to polynomials in x: a factor degree
//! mod p that does not divide 6 rules out an S3-type splitting field.
//!
//!     cargo run --release --example s3_filter -- "x^5 - x - 1" "x^4 + 1"

use cubic_torsion::arith::parse_poly;
use cubic_torsion::classify::{mc_s3_filter, FilterVerdict};

fn main() {
    let mut polys: Vec<String> = std::env::args().skip(1).collect();
    if polys.is_empty() {
        polys = ["x^2 - 2", "x^3 - 2", "x^4 + 1", "x^4 - 2", "x^5 - x - 1", "x^7 - 2", "(x^3 - 3x + 1)(x^2 + 3)"]
            .map(String::from)
            .to_vec();
    }
    let seed = 7;
    for s in &polys {
        let g = match parse_poly(s, 'x') {
            Ok(g) => g,
            Err(e) => {
                eprintln!("{s}: {e}");
                continue;
            }
        };
        let r = mc_s3_filter(&g, 30, seed).unwrap();
        match r.verdict {
            FilterVerdict::RuledOut { prime, degree } => {
                println!("{s:<26} ruled out: degree-{degree} factor mod {prime} (trial {})", r.trials)
            }
            FilterVerdict::Plausible => println!("{s:<26} plausible after {} primes", r.trials),
        }
    }
    println!("seed {seed}");
}
