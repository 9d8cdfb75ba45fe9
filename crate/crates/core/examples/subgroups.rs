//! Generalized S3-type subgroups of `GL2(Z/n)` up to conjugacy, and the
//! maximal images compatible with a prescribed torsion shape.
//!
//!     cargo run --release --example subgroups -- 8

use std::collections::BTreeMap;

use cubic_torsion::group::{
    det_surjective, enumerate_table, gl2, maximal_images_for_t, table_is_s3_type, EnumerationOptions, ModMatrix,
    Subgroup, TableGroup,
};
use cubic_torsion::TorsionShape;

fn main() {
    let n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let t = TableGroup::new(&gl2(n)).expect("GL2(Z/n) too large or not solvable");
    let pred = |t: &TableGroup<ModMatrix>, s: &Subgroup| table_is_s3_type(t, s);
    let opts = EnumerationOptions { hereditary: Some(&pred), ..Default::default() };
    let classes = enumerate_table(&t, &opts).unwrap();
    let mut by_order: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for s in &classes {
        let e = by_order.entry(s.order).or_default();
        e.0 += 1;
        e.1 += det_surjective(&t.to_group(s)) as usize;
    }
    println!("GL2(Z/{n}): order {}, {} S3-type classes", t.order(), classes.len());
    println!("{:>6} {:>8} {:>14}", "order", "classes", "det surjective");
    for (o, (c, d)) in by_order {
        println!("{o:>6} {c:>8} {d:>14}");
    }

    println!();
    for (m, shape) in [(2, TorsionShape::new(2, 2)), (3, TorsionShape::new(3, 3)), (4, TorsionShape::new(4, 4))] {
        let r = maximal_images_for_t(m, &shape, None).unwrap();
        println!("maximal images mod {m} fixing {shape}:");
        for g in r {
            println!("    order {:>3}, level {}, gens {:?}", g.order, g.level, g.group.gens);
        }
    }
}
