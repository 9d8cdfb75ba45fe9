//! Run every named verification suite and print its report.
//!
//!     cargo run --release --example verify_all

use std::time::Instant;

use cubic_torsion::cli::{registry_names, run_check, VerifyContext};

fn main() {
    let ctx = VerifyContext { deadline: None, seed: 1, fixtures: None };
    let mut failed = 0;
    for name in registry_names() {
        let start = Instant::now();
        let r = run_check(name, &ctx).unwrap();
        println!("[{}] {name} ({:.2} s)", if r.passed { "ok" } else { "FAIL" }, start.elapsed().as_secs_f64());
        for l in &r.lines {
            println!("    {l}");
        }
        failed += !r.passed as usize;
    }
    std::process::exit(failed.min(1) as i32);
}
