//! Maximal candidate images `G <= GL2(Z/n)` for a torsion shape `T`: groups
//! that could be a mod-`n` image of a rational curve (surjective determinant,
//! a complex-conjugation element, `-I` adjoined) and whose S3-residual fixes
//! exactly `T`.

use std::time::Instant;

use serde::Serialize;

use super::element::ModMatrix;
use super::enumerate::{enumerate_table, table_conjugate_into, EnumerationOptions, TableGroup};
use super::finite::s3_residual;
use super::matrix::{det_surjective, fixed_submodule, gl2, has_cc_element, level_of, GroupSpec, MatrixGroup};
use super::GroupError;
use crate::shape::TorsionShape;

pub const MAXIMAL_IMAGE_MODULI: [u32; 7] = [2, 3, 4, 6, 8, 9, 12];

#[derive(Clone, Debug, Serialize)]
pub struct MaximalImage {
    pub order: usize,
    pub level: u32,
    pub group: GroupSpec,
}

pub fn maximal_images_for_t(
    n: u32,
    t: &TorsionShape,
    deadline: Option<Instant>,
) -> Result<Vec<MaximalImage>, GroupError> {
    if !MAXIMAL_IMAGE_MODULI.contains(&n) {
        return Err(GroupError::UnsupportedModulus(n));
    }
    let ambient = gl2(n);
    let table = TableGroup::new(&ambient)?;
    let minus = ambient.elements().binary_search(&ModMatrix::minus_identity(n)).unwrap();
    let cheap = |_: &TableGroup<ModMatrix>, s: &super::Subgroup| s.contains(minus);
    let opts = EnumerationOptions { hereditary: None, filter: Some(&cheap), up_to_conjugacy: true, deadline };
    let classes = enumerate_table(&table, &opts)?;
    let mut good = Vec::new();
    for s in classes {
        let g = table.to_group(&s);
        if det_surjective(&g) && has_cc_element(&g) && fixed_submodule(&s3_residual(&g), n) == *t {
            good.push((s, g));
        }
    }
    let mut out = Vec::new();
    for (i, (s, g)) in good.iter().enumerate() {
        let dominated = good
            .iter()
            .enumerate()
            .any(|(j, (l, _))| j != i && l.order > s.order && table_conjugate_into(&table, s, l));
        if !dominated {
            out.push(image(g));
        }
    }
    out.sort_by(|a, b| (a.level, a.order).cmp(&(b.level, b.order)));
    Ok(out)
}

fn image(g: &MatrixGroup) -> MaximalImage {
    MaximalImage { order: g.order(), level: level_of(g), group: GroupSpec::of(g) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod_2_full_two_torsion() {
        let r = maximal_images_for_t(2, &TorsionShape::new(2, 2), None).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!((r[0].level, r[0].order), (1, 6));
    }

    #[test]
    fn rejects_other_moduli() {
        assert!(matches!(
            maximal_images_for_t(5, &TorsionShape::new(1, 1), None),
            Err(GroupError::UnsupportedModulus(5))
        ));
    }
}
