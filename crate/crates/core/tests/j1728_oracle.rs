mod common;

use common::{is_fourth_power_free, j1728_oracle};
use cubic_torsion::classify::{classify_curve, j1728_shape};
use cubic_torsion::curve::WeierstrassCurve;

#[test]
fn twist_rule_matches_division_field_oracle() {
    let mut seen = [0, 0];
    for d in -50i64..=50 {
        if !is_fourth_power_free(d) {
            continue;
        }
        let oracle = j1728_oracle(d);
        let e = WeierstrassCurve::from_ints([0, 0, 0, d, 0]).unwrap();
        let rule = classify_curve(&e).unwrap().torsion;
        assert_eq!(rule, oracle, "d = {d}");
        assert_eq!(rule, j1728_shape(&d.into()));
        seen[(oracle.m1 == 4) as usize] += 1;
    }
    assert!(seen[0] > 0 && seen[1] > 0, "{seen:?}");
}
