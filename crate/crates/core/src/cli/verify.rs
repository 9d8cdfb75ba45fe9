//! Named verification suites.

use std::path::PathBuf;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::fixtures::ingest_fixtures;
use crate::arith::{format_rational, parse_rational};
use crate::classify::{classify_curve, classify_j, table1_data};
use crate::curve::{torsion_over_q, WeierstrassCurve};
use crate::group::{
    det_surjective, enumerate_table, gl2, is_borel_conjugate, is_generalized_s3_type, is_split_cartan_conjugate,
    maximal_images_for_t, s3_residual, table_is_s3_type, conjugate_into_group, EnumerationOptions, GroupError,
    ModMatrix, Subgroup, TableGroup,
};
use crate::modcurve::{psl2_invariants, printed_group, PRINTED_GROUPS};
use crate::shape::TorsionShape;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub lines: Vec<String>,
}

pub struct VerifyContext {
    pub deadline: Option<Instant>,
    pub seed: u64,
    pub fixtures: Option<PathBuf>,
}

type CheckFn = fn(&VerifyContext, &mut Vec<String>) -> Result<bool, String>;

pub const REGISTRY: [(&str, &str, CheckFn); 12] = [
    ("gl2of3-borel", "S3-type subgroups of GL2(Z/3) are the Borel-conjugate ones", gl2of3_borel),
    ("gl2of8-elem2", "S3-type subgroups of GL2(Z/8) with surjective det are elementary 2-groups", gl2of8_elem2),
    ("gl2of9-dichotomy", "S3-type subgroups of GL2(Z/9): split Cartan mod 3 or inside the level-9 group", gl2of9),
    ("genus-labels", "genera of the printed congruence subgroups", genus_labels),
    ("table1-regression", "classification of the finite-list and named j-invariants", table1_regression),
    ("edelta-torsion", "rational torsion of the auxiliary curves", edelta_torsion),
    ("max-images-2-22", "maximal images for (2,2) mod 2", max_images_2),
    ("max-images-3-33", "maximal images for (3,3) mod 3", max_images_3),
    ("max-images-4-44", "maximal images for (4,4) mod 4", max_images_4),
    ("j1728-anchors", "j = 1728 fixtures 256b1 and 32a1", j1728_anchors),
    ("s3-fastpath-gl2of6", "fast S3-type test against the residual on all subgroups of GL2(Z/6)", fastpath_gl2of6),
    ("family-containment", "sampled family members classify into a containing shape", family_containment),
];

pub fn registry_names() -> Vec<&'static str> {
    REGISTRY.iter().map(|(n, _, _)| *n).collect()
}

pub fn run_check(name: &str, ctx: &VerifyContext) -> Option<CheckReport> {
    let (_, _, f) = REGISTRY.iter().find(|(n, _, _)| *n == name)?;
    let mut lines = Vec::new();
    let passed = match f(ctx, &mut lines) {
        Ok(p) => p,
        Err(e) => {
            lines.push(format!("error: {e}"));
            false
        }
    };
    Some(CheckReport { name: name.to_string(), passed, lines })
}

fn gerr(e: GroupError) -> String {
    e.to_string()
}

fn s3_classes(n: u32, ctx: &VerifyContext, all: bool) -> Result<(TableGroup<ModMatrix>, Vec<Subgroup>), String> {
    let t = TableGroup::new(&gl2(n)).map_err(gerr)?;
    let pred = |t: &TableGroup<ModMatrix>, s: &Subgroup| table_is_s3_type(t, s);
    let opts = EnumerationOptions { hereditary: Some(&pred), filter: None, up_to_conjugacy: !all, deadline: ctx.deadline };
    let c = enumerate_table(&t, &opts).map_err(gerr)?;
    Ok((t, c))
}

fn gl2of3_borel(ctx: &VerifyContext, out: &mut Vec<String>) -> Result<bool, String> {
    let t = TableGroup::new(&gl2(3)).map_err(gerr)?;
    let opts = EnumerationOptions { up_to_conjugacy: false, deadline: ctx.deadline, ..Default::default() };
    let all = enumerate_table(&t, &opts).map_err(gerr)?;
    let mut ok = true;
    let mut s3 = 0;
    for s in &all {
        let g = t.to_group(s);
        let fast = table_is_s3_type(&t, s);
        let oracle = s3_residual(&g).is_trivial();
        let borel = is_borel_conjugate(&g).is_some();
        s3 += fast as usize;
        if fast != oracle || fast != borel {
            ok = false;
            out.push(format!("mismatch: order {} fast {fast} residual {oracle} borel {borel}", s.order));
        }
    }
    out.push(format!("{} subgroups, {s3} of S3-type, all Borel-conjugate exactly when S3-type: {ok}", all.len()));
    Ok(ok)
}

fn gl2of8_elem2(ctx: &VerifyContext, out: &mut Vec<String>) -> Result<bool, String> {
    let (t, classes) = s3_classes(8, ctx, false)?;
    let mut ok = true;
    let mut checked = 0;
    for s in &classes {
        let g = t.to_group(s);
        if !det_surjective(&g) {
            continue;
        }
        checked += 1;
        if g.exponent() > 2 || !g.is_abelian() {
            ok = false;
            out.push(format!("counterexample of order {}: {:?}", g.order(), g.gens()));
        }
    }
    out.push(format!("{} S3-type classes, {checked} with surjective det, all elementary abelian: {ok}", classes.len()));
    Ok(ok)
}

fn gl2of9(ctx: &VerifyContext, out: &mut Vec<String>) -> Result<bool, String> {
    let h = printed_group("level9-full-9-torsion").unwrap().group().map_err(gerr)?;
    let (t, classes) = s3_classes(9, ctx, false)?;
    let (mut cartan, mut inside, mut ok) = (0, 0, true);
    for s in &classes {
        let g = t.to_group(s);
        if is_split_cartan_conjugate(&g.reduce_mod(3)).is_some() {
            cartan += 1;
        } else if conjugate_into_group(&g, &h).is_some() {
            inside += 1;
        } else {
            ok = false;
            out.push(format!("neither branch: order {} gens {:?}", g.order(), g.gens()));
        }
    }
    out.push(format!("{} S3-type classes: {cartan} split Cartan mod 3, {inside} others inside H", classes.len()));
    Ok(ok)
}

fn genus_labels(_: &VerifyContext, out: &mut Vec<String>) -> Result<bool, String> {
    let mut ok = true;
    for p in &PRINTED_GROUPS {
        let g = p.group().map_err(gerr)?;
        let c = psl2_invariants(&g).map_err(|e| e.to_string())?;
        let pass = c.genus == p.genus;
        ok &= pass;
        out.push(format!(
            "{} ({}): index {} e2 {} e3 {} cusps {} genus {} expected {} {}",
            p.name,
            p.label,
            c.index,
            c.e2,
            c.e3,
            c.cusps,
            c.genus,
            p.genus,
            if pass { "ok" } else { "FAIL" }
        ));
    }
    Ok(ok)
}

pub const NAMED_J: [(&str, TorsionShape); 12] = [
    ("351/4", TorsionShape::new(4, 28)),
    ("-38575685889/16384", TorsionShape::new(4, 28)),
    ("-121945/32", TorsionShape::new(6, 30)),
    ("46969655/32768", TorsionShape::new(6, 30)),
    ("3375/2", TorsionShape::new(6, 42)),
    ("-140625/8", TorsionShape::new(6, 42)),
    ("-1159088625/2097152", TorsionShape::new(6, 42)),
    ("-189613868625/128", TorsionShape::new(6, 42)),
    ("2268945/128", TorsionShape::new(14, 14)),
    ("-35937/4", TorsionShape::new(12, 12)),
    ("109503/64", TorsionShape::new(12, 12)),
    ("0", TorsionShape::new(18, 18)),
];

fn table1_regression(_: &VerifyContext, out: &mut Vec<String>) -> Result<bool, String> {
    let mut ok = true;
    for (j, want) in NAMED_J {
        let got = classify_j(&parse_rational(j).unwrap()).map_err(|e| e.to_string())?.torsion;
        ok &= got == want;
        out.push(format!("j = {j}: {got} expected {want}"));
    }
    Ok(ok)
}

pub const AUX_CURVES: [(&str, [i64; 5]); 3] = [
    ("y^2 = x(x^2 - 6x + 13)", [0, -6, 0, 13, 0]),
    ("y^2 = x(x^2 - 22x + 125)", [0, -22, 0, 125, 0]),
    ("y^2 = (x + 3)(x^2 - 3x + 9)", [0, 0, 0, 0, 27]),
];

fn edelta_torsion(_: &VerifyContext, out: &mut Vec<String>) -> Result<bool, String> {
    let mut ok = true;
    for (name, a) in AUX_CURVES {
        let e = WeierstrassCurve::from_ints(a).map_err(|e| e.to_string())?;
        let t = torsion_over_q(&e).map_err(|e| e.to_string())?;
        ok &= t == TorsionShape::new(1, 2);
        out.push(format!("{name}: {t}"));
    }
    Ok(ok)
}

fn max_images(n: u32, t: TorsionShape, want: &[u32], ctx: &VerifyContext, out: &mut Vec<String>) -> Result<bool, String> {
    let r = maximal_images_for_t(n, &t, ctx.deadline).map_err(gerr)?;
    let mut levels: Vec<u32> = r.iter().map(|m| m.level).collect();
    levels.sort_unstable();
    for m in &r {
        out.push(format!("order {} level {} gens {:?}", m.order, m.level, m.group.gens));
    }
    out.push(format!("levels {levels:?} expected {want:?}"));
    Ok(levels == want)
}

fn max_images_2(ctx: &VerifyContext, out: &mut Vec<String>) -> Result<bool, String> {
    max_images(2, TorsionShape::new(2, 2), &[1], ctx, out)
}

fn max_images_3(ctx: &VerifyContext, out: &mut Vec<String>) -> Result<bool, String> {
    let r = maximal_images_for_t(3, &TorsionShape::new(3, 3), ctx.deadline).map_err(gerr)?;
    let ok = r.len() == 1 && {
        let g = r[0].group.build().map_err(gerr)?;
        g.order() == 12 && is_borel_conjugate(&g).is_some()
    };
    out.push(format!("{} classes; Borel mod 3: {ok}", r.len()));
    Ok(ok)
}

fn max_images_4(ctx: &VerifyContext, out: &mut Vec<String>) -> Result<bool, String> {
    max_images(4, TorsionShape::new(4, 4), &[2, 4, 4], ctx, out)
}

pub fn default_fixture_path() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/j1728.csv"))
}

fn j1728_anchors(ctx: &VerifyContext, out: &mut Vec<String>) -> Result<bool, String> {
    let path = ctx.fixtures.clone().unwrap_or_else(default_fixture_path);
    let (set, _) = ingest_fixtures(&path).map_err(|e| e.to_string())?;
    let mut ok = true;
    for (label, want) in [("256b1", TorsionShape::new(2, 2)), ("32a1", TorsionShape::new(4, 4))] {
        let e = set.get(label).ok_or_else(|| format!("fixture {label} missing from {}", path.display()))?;
        let got = classify_curve(e).map_err(|e| e.to_string())?.torsion;
        ok &= got == want;
        out.push(format!("{label}: {got} expected {want}"));
    }
    Ok(ok)
}

fn fastpath_gl2of6(ctx: &VerifyContext, out: &mut Vec<String>) -> Result<bool, String> {
    let t = TableGroup::new(&gl2(6)).map_err(gerr)?;
    let opts = EnumerationOptions { up_to_conjugacy: false, deadline: ctx.deadline, ..Default::default() };
    let all = enumerate_table(&t, &opts).map_err(gerr)?;
    let mut bad = 0;
    for s in &all {
        let g = t.to_group(s);
        let residual = s3_residual(&g).is_trivial();
        if table_is_s3_type(&t, s) != residual || is_generalized_s3_type(&g) != residual {
            bad += 1;
        }
    }
    out.push(format!("{} subgroups, {bad} disagreements", all.len()));
    Ok(bad == 0)
}

/// A random rational of height at most `h`.
pub fn random_height(rng: &mut impl Rng, h: i64) -> BigRational {
    let n = rng.gen_range(-h..=h);
    let d = rng.gen_range(1..=h);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn family_containment(ctx: &VerifyContext, out: &mut Vec<String>) -> Result<bool, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let (mut total, mut good) = (0, 0);
    let j1728 = BigRational::from_integer(1728.into());
    for rec in table1_data().iter().filter(|r| !r.functions.is_empty()) {
        let mut done = 0;
        while done < 10 {
            let f = &rec.functions[done % rec.functions.len()];
            let t = random_height(&mut rng, 50);
            let Some(j) = f.eval(&t) else { continue };
            if j == j1728 {
                continue;
            }
            done += 1;
            total += 1;
            let got = classify_j(&j).map_err(|e| e.to_string())?.torsion;
            if rec.shape.is_contained_in(&got) {
                good += 1;
            } else {
                out.push(format!("{}: t = {} gives {got}", rec.shape, format_rational(&t)));
            }
        }
    }
    out.push(format!("{good}/{total} contained (seed {})", ctx.seed));
    Ok(good == total)
}
