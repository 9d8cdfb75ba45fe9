//! The table of parameterizations as data, and curves read from a fixture
//! file.
//!
//!     cargo run --release --example table_and_fixtures -- path/to/curves.csv

use std::path::PathBuf;

use cubic_torsion::arith::format_rational;
use cubic_torsion::classify::{classify_curve, export_table1_json, table1_data};
use cubic_torsion::cli::{default_fixture_path, ingest_fixtures};

fn main() {
    for rec in table1_data() {
        let js: Vec<String> = rec.finite_js.iter().map(format_rational).collect();
        println!(
            "{:<8} {} function(s) {}",
            rec.shape.to_string(),
            rec.functions.len(),
            if js.is_empty() { String::new() } else { format!("and j in {{{}}}", js.join(", ")) }
        );
    }
    println!("JSON export: {} bytes", export_table1_json().len());

    let path = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(default_fixture_path);
    let (set, warnings) = ingest_fixtures(&path).unwrap_or_else(|e| panic!("{e}"));
    for w in warnings {
        eprintln!("warning: {w}");
    }
    println!("\n{}:", path.display());
    for (label, e) in &set.curves {
        println!("{label:<8} {e:?} -> {}", classify_curve(e).unwrap().torsion);
    }
}
