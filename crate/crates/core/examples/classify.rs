//! Classify `E(Q(3^inf))_tors` for j-invariants given on the command line,
//! or for a few sample values.
//!
//!     cargo run --release --example classify -- 2268945/128 -35937/4 5/3

use cubic_torsion::arith::parse_rational;
use cubic_torsion::classify::{classify_curve, classify_j, ClassifyError, Witness};
use cubic_torsion::curve::WeierstrassCurve;

fn main() {
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        args = ["2268945/128", "0", "351/4", "2375/8", "-7/3", "1728"].map(String::from).to_vec();
    }
    for a in &args {
        let j = match parse_rational(a) {
            Ok(j) => j,
            Err(e) => {
                eprintln!("{a}: {e}");
                continue;
            }
        };
        match classify_j(&j) {
            Ok(r) => {
                println!("j = {a}: {}", r.torsion);
                for m in &r.matched {
                    let w: Vec<String> = m
                        .witnesses
                        .iter()
                        .map(|w| match w {
                            Witness::Parameter { function, t } => format!("f{function}(t = {t})"),
                            Witness::Listed => "listed".into(),
                            Witness::QuarticTwist { d } => format!("d = {d}"),
                        })
                        .collect();
                    println!("    in family {} via {}", m.shape, w.join(", "));
                }
            }
            Err(ClassifyError::CurveRequired) => {
                println!("j = {a}: depends on the curve; the quartic twists y^2 = x^3 + d x give");
                for d in [1, -1, 2, -4, 3, 5] {
                    let e = WeierstrassCurve::from_ints([0, 0, 0, d, 0]).unwrap();
                    println!("    d = {d:>2}: {}", classify_curve(&e).unwrap().torsion);
                }
            }
            Err(e) => println!("j = {a}: error: {e}"),
        }
    }
}
