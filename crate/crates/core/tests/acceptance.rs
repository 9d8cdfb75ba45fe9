//! Acceptance run: one PASS/FAIL line per criterion, with wall-clock limits.
//! Plain `main` so the lines are visible without `--nocapture`.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{is_fourth_power_free, j1728_oracle};
use cubic_torsion::arith::ntheory::{is_prime_u64, primes_in, rational_mod};
use cubic_torsion::arith::{factor_over_q, parse_rational, squarefree_part};
use cubic_torsion::classify::{classify_curve, classify_j, mc_s3_filter, table1_data, FilterVerdict};
use cubic_torsion::cli::{default_fixture_path, ingest_fixtures, random_height, AUX_CURVES, NAMED_J};
use cubic_torsion::curve::{
    ap, curve_from_j, local_injection_check, primitive_division_poly, torsion_over_q, FpCurve, FpPoint,
    WeierstrassCurve,
};
use cubic_torsion::group::{
    det_surjective, enumerate_table, gl2, is_generalized_s3_type, is_split_cartan_conjugate, maximal_images_for_t,
    conjugate_into_group, s3_residual, table_is_s3_type, EnumerationOptions, MatrixGroup, ModMatrix, TableGroup,
};
use cubic_torsion::modcurve::{printed_group, psl2_invariants, PRINTED_GROUPS};
use cubic_torsion::TorsionShape;

const SEED: u64 = 20_240_601;

/// Classifications produced along the way, rechecked locally at the end.
#[derive(Default)]
struct Ctx {
    classified: Vec<(String, WeierstrassCurve, TorsionShape)>,
}

type Outcome = Result<(bool, String), String>;

struct Criterion {
    id: &'static str,
    what: &'static str,
    limit: Duration,
    run: fn(&mut Ctx) -> Outcome,
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}

fn named_classifications(ctx: &mut Ctx) -> Outcome {
    let mut bad = Vec::new();
    for (j, want) in NAMED_J {
        let jq = parse_rational(j).map_err(e)?;
        let got = classify_j(&jq).map_err(e)?.torsion;
        if got != want {
            bad.push(format!("{j} -> {got}, want {want}"));
        }
        ctx.classified.push((format!("j = {j}"), curve_from_j(&jq), got));
    }
    Ok((bad.is_empty(), format!("{}/{} exact {}", NAMED_J.len() - bad.len(), NAMED_J.len(), bad.join("; "))))
}

fn family_containment(ctx: &mut Ctx) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let j1728 = BigRational::from_integer(1728.into());
    let (mut total, mut good, mut families) = (0, 0, 0);
    let mut bad = Vec::new();
    for rec in table1_data().iter().filter(|r| !r.functions.is_empty()) {
        families += 1;
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
            let got = classify_j(&j).map_err(e)?.torsion;
            if rec.shape.is_contained_in(&got) {
                good += 1;
            } else {
                bad.push(format!("{} at t = {t}: {got}", rec.shape));
            }
            ctx.classified.push((format!("{} at t = {t}", rec.shape), curve_from_j(&j), got));
        }
    }
    let ok = families == 16 && good == total && total == 160;
    Ok((ok, format!("{families} families, {good}/{total} contained {}", bad.join("; "))))
}

fn j1728_anchors(ctx: &mut Ctx) -> Outcome {
    let (set, _) = ingest_fixtures(&default_fixture_path()).map_err(e)?;
    let mut ok = true;
    let mut notes = Vec::new();
    for (label, want) in [("256b1", TorsionShape::new(2, 2)), ("32a1", TorsionShape::new(4, 4))] {
        let curve = set.get(label).ok_or(format!("fixture {label} missing"))?;
        let got = classify_curve(curve).map_err(e)?.torsion;
        ok &= got == want;
        notes.push(format!("{label} -> {got}"));
        ctx.classified.push((label.to_string(), curve.clone(), got));
    }
    let (mut agree, mut total) = (0, 0);
    for d in -50i64..=50 {
        if !is_fourth_power_free(d) {
            continue;
        }
        total += 1;
        let curve = WeierstrassCurve::from_ints([0, 0, 0, d, 0]).map_err(e)?;
        let got = classify_curve(&curve).map_err(e)?.torsion;
        if got == j1728_oracle(d) {
            agree += 1;
        } else {
            notes.push(format!("d = {d} disagrees"));
        }
        ctx.classified.push((format!("y^2 = x^3 + {d}x"), curve, got));
    }
    ok &= agree == total;
    Ok((ok, format!("{}; twist rule agrees with oracle on {agree}/{total} d", notes.join(", "))))
}

/// A group over `F_3` is Borel-conjugate exactly when it stabilizes a line.
fn fixes_line_mod3(g: &MatrixGroup) -> bool {
    [(1u32, 0u32), (0, 1), (1, 1), (1, 2)].iter().any(|&v| {
        g.elements().iter().all(|m| {
            let w = m.apply(v);
            (1..3).any(|k| w == ((v.0 * k) % 3, (v.1 * k) % 3))
        })
    })
}

fn gl2of3(_: &mut Ctx) -> Outcome {
    let t = TableGroup::new(&gl2(3)).map_err(e)?;
    let opts = EnumerationOptions { up_to_conjugacy: false, ..Default::default() };
    let all = enumerate_table(&t, &opts).map_err(e)?;
    let mut bad = 0;
    let mut s3 = 0;
    for s in &all {
        let g = t.to_group(s);
        let s3_type = s3_residual(&g).is_trivial();
        s3 += s3_type as usize;
        if s3_type != fixes_line_mod3(&g) || s3_type != table_is_s3_type(&t, s) {
            bad += 1;
        }
    }
    Ok((bad == 0 && all.len() == 55, format!("{} subgroups, {s3} of S3-type, {bad} mismatches", all.len())))
}

fn s3_classes(n: u32, budget: Duration) -> Result<(TableGroup<ModMatrix>, Vec<MatrixGroup>), String> {
    let t = TableGroup::new(&gl2(n)).map_err(e)?;
    let pred = |t: &TableGroup<ModMatrix>, s: &_| table_is_s3_type(t, s);
    let opts = EnumerationOptions {
        hereditary: Some(&pred),
        deadline: Some(Instant::now() + budget),
        ..Default::default()
    };
    let classes = enumerate_table(&t, &opts).map_err(e)?;
    let groups = classes.iter().map(|s| t.to_group(s)).collect();
    Ok((t, groups))
}

fn gl2of8(_: &mut Ctx) -> Outcome {
    let (_, classes) = s3_classes(8, secs(30 * 60))?;
    let surj: Vec<_> = classes.iter().filter(|g| det_surjective(g)).collect();
    let bad = surj.iter().filter(|g| g.exponent() > 2 || !g.is_abelian()).count();
    Ok((bad == 0 && !surj.is_empty(), format!("{} classes, {} with surjective det, {bad} not elementary 2-abelian", classes.len(), surj.len())))
}

fn gl2of9(_: &mut Ctx) -> Outcome {
    let h = printed_group("level9-full-9-torsion").unwrap().group().map_err(e)?;
    let (_, classes) = s3_classes(9, secs(60 * 60))?;
    let (mut cartan, mut inside, mut neither) = (0, 0, 0);
    for g in &classes {
        if is_split_cartan_conjugate(&g.reduce_mod(3)).is_some() {
            cartan += 1;
        } else if conjugate_into_group(g, &h).is_some() {
            inside += 1;
        } else {
            neither += 1;
        }
    }
    Ok((neither == 0, format!("{} classes: {cartan} split Cartan mod 3, {inside} inside H, {neither} neither", classes.len())))
}

fn levels(n: u32, t: TorsionShape) -> Result<Vec<u32>, String> {
    let mut l: Vec<u32> = maximal_images_for_t(n, &t, None).map_err(e)?.iter().map(|m| m.level).collect();
    l.sort_unstable();
    Ok(l)
}

fn max_images_44(_: &mut Ctx) -> Outcome {
    let l = levels(4, TorsionShape::new(4, 4))?;
    Ok((l == [2, 4, 4], format!("levels {l:?}")))
}

fn max_images_22(_: &mut Ctx) -> Outcome {
    let l = levels(2, TorsionShape::new(2, 2))?;
    Ok((l == [1], format!("levels {l:?}")))
}

fn genera(_: &mut Ctx) -> Outcome {
    let mut bad = Vec::new();
    for p in &PRINTED_GROUPS {
        let g = psl2_invariants(&p.group().map_err(e)?).map_err(e)?.genus;
        if g != p.genus {
            bad.push(format!("{}: {g} not {}", p.name, p.genus));
        }
    }
    Ok((bad.is_empty(), format!("{}/{} genera reproduced {}", PRINTED_GROUPS.len() - bad.len(), PRINTED_GROUPS.len(), bad.join("; "))))
}

fn aux_torsion(_: &mut Ctx) -> Outcome {
    let mut got = Vec::new();
    for (_, a) in AUX_CURVES {
        got.push(torsion_over_q(&WeierstrassCurve::from_ints(a).map_err(e)?).map_err(e)?);
    }
    let ok = got.iter().all(|t| *t == TorsionShape::new(1, 2));
    Ok((ok, format!("{}", got.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(", "))))
}

fn random_curve(rng: &mut impl Rng, h: i64) -> WeierstrassCurve {
    loop {
        let a = [0; 5].map(|_| rng.gen_range(-h..=h));
        if let Ok(c) = WeierstrassCurve::from_ints(a) {
            return c;
        }
    }
}

fn square_class_law(_: &mut Ctx) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let j1728 = BigRational::from_integer(1728.into());
    let (mut n, mut bad) = (0, 0);
    while n < 50 {
        let c = random_curve(&mut rng, 30);
        let j = c.j_invariant();
        if j == j1728 {
            continue;
        }
        n += 1;
        if squarefree_part(&c.discriminant()).map_err(e)? != squarefree_part(&(&j - &j1728)).map_err(e)? {
            bad += 1;
        }
    }
    Ok((bad == 0, format!("{}/{n} curves", n - bad)))
}

fn eval_mod(coeffs: &[u64], x: u64, p: u64) -> u64 {
    coeffs.iter().rev().fold(0, |acc, c| (acc * x + c) % p)
}

fn divpoly_point_orders(_: &mut Ctx) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let (mut curves, mut bad) = (0, 0);
    while curves < 20 {
        let c = random_curve(&mut rng, 20);
        let p = loop {
            let p = rng.gen_range(13..200);
            if is_prime_u64(p) {
                break p;
            }
        };
        let Some(fc) = FpCurve::reduce(&c, p) else { continue };
        let mut hs = Vec::new();
        for n in 2..=12u32 {
            let h = primitive_division_poly(&c, n).map_err(e)?.x_part;
            let red: Option<Vec<u64>> = (0..=h.deg()).map(|i| rational_mod(&h.coeff(i), p)).collect();
            hs.push(red);
        }
        let Some(hs): Option<Vec<Vec<u64>>> = hs.into_iter().collect() else { continue };
        curves += 1;
        let pts = fc.points();
        for (k, h) in hs.iter().enumerate() {
            let n = k as u64 + 2;
            let by_order: BTreeSet<u64> = pts
                .iter()
                .filter(|&&pt| fc.order(pt) == n)
                .filter_map(|pt| match pt {
                    FpPoint::Affine(x, _) => Some(*x),
                    FpPoint::Infinity => None,
                })
                .collect();
            let xs: BTreeSet<u64> = pts
                .iter()
                .filter_map(|pt| match pt {
                    FpPoint::Affine(x, _) => Some(*x),
                    FpPoint::Infinity => None,
                })
                .collect();
            let by_root: BTreeSet<u64> = xs.into_iter().filter(|&x| eval_mod(h, x, p) == 0).collect();
            if by_order != by_root {
                bad += 1;
            }
        }
    }
    Ok((bad == 0, format!("20 curves, n = 2..12, {bad} disagreements")))
}

fn fastpath_gl2of6(_: &mut Ctx) -> Outcome {
    let t = TableGroup::new(&gl2(6)).map_err(e)?;
    let opts = EnumerationOptions { up_to_conjugacy: false, ..Default::default() };
    let all = enumerate_table(&t, &opts).map_err(e)?;
    let mut bad = 0;
    for s in &all {
        let g = t.to_group(s);
        let r = s3_residual(&g).is_trivial();
        if table_is_s3_type(&t, s) != r || is_generalized_s3_type(&g) != r {
            bad += 1;
        }
    }
    Ok((bad == 0, format!("{} subgroups, {bad} disagreements", all.len())))
}

fn injection(ctx: &mut Ctx) -> Outcome {
    let primes = primes_in(5, 500);
    let mut bad = Vec::new();
    for (what, curve, t) in &ctx.classified {
        let good: Vec<u64> = primes.iter().copied().filter(|&p| ap(curve, p).trace.is_some()).take(10).collect();
        let r = local_injection_check(curve, t, &good);
        if good.len() < 10 || r.checked() < 10 || !r.passed() {
            bad.push(what.clone());
        }
    }
    Ok((bad.is_empty(), format!("{}/{} classifications {}", ctx.classified.len() - bad.len(), ctx.classified.len(), bad.join("; "))))
}

fn maximal_prime_powers(m: u64) -> Vec<u32> {
    cubic_torsion::arith::ntheory::prime_factors_u64(m).into_iter().map(|(p, k)| p.pow(k) as u32).collect()
}

fn mc_filter_consistency(_: &mut Ctx) -> Outcome {
    let mut bad = Vec::new();
    let mut tried = 0;
    for (j, t) in NAMED_J {
        let curve = curve_from_j(&parse_rational(j).map_err(e)?);
        for q in maximal_prime_powers(t.exponent()) {
            let h = primitive_division_poly(&curve, q).map_err(e)?.x_part;
            let mut plausible = false;
            for (g, _) in factor_over_q(&h).map_err(e)?.factors {
                if mc_s3_filter(&g, 30, SEED).map_err(e)?.verdict == FilterVerdict::Plausible {
                    plausible = true;
                    break;
                }
            }
            tried += 1;
            if !plausible {
                bad.push(format!("j = {j}, q = {q}"));
            }
        }
    }
    Ok((bad.is_empty(), format!("{tried} (j, q) pairs, {} contradicted {}", bad.len(), bad.join("; "))))
}

const CRITERIA: [Criterion; 15] = [
    Criterion { id: "1", what: "named j-invariants classify exactly", limit: Duration::from_secs(60), run: named_classifications },
    Criterion { id: "2", what: "sampled family members classify into a containing shape", limit: Duration::from_secs(600), run: family_containment },
    Criterion { id: "3", what: "j = 1728 fixtures and twist-rule oracle", limit: Duration::from_secs(300), run: j1728_anchors },
    Criterion { id: "4a", what: "S3-type subgroups of GL2(Z/3) are Borel-conjugate", limit: Duration::from_secs(60), run: gl2of3 },
    Criterion { id: "4b", what: "S3-type subgroups of GL2(Z/8) with surjective det", limit: Duration::from_secs(1800), run: gl2of8 },
    Criterion { id: "4c", what: "S3-type subgroups of GL2(Z/9) dichotomy", limit: Duration::from_secs(3600), run: gl2of9 },
    Criterion { id: "4d", what: "maximal images for (4,4) mod 4", limit: Duration::from_secs(300), run: max_images_44 },
    Criterion { id: "4e", what: "maximal images for (2,2) mod 2", limit: Duration::from_secs(1), run: max_images_22 },
    Criterion { id: "5", what: "genera of printed congruence subgroups", limit: Duration::from_secs(600), run: genera },
    Criterion { id: "6", what: "rational torsion of auxiliary curves", limit: Duration::from_secs(60), run: aux_torsion },
    Criterion { id: "7a", what: "square class of discriminant equals that of j - 1728", limit: Duration::from_secs(1800), run: square_class_law },
    Criterion { id: "7b", what: "division polynomial roots match point orders mod p", limit: Duration::from_secs(1800), run: divpoly_point_orders },
    Criterion { id: "7c", what: "fast S3-type test matches residual on GL2(Z/6)", limit: Duration::from_secs(1800), run: fastpath_gl2of6 },
    Criterion { id: "7d", what: "local injection on every classification above", limit: Duration::from_secs(1800), run: injection },
    Criterion { id: "7e", what: "Monte Carlo filter never contradicts named classifications", limit: Duration::from_secs(1800), run: mc_filter_consistency },
];

fn report(ok: bool, id: &str, what: &str, note: &str, took: Duration, limit: Duration) -> bool {
    let ok = ok && took <= limit;
    println!(
        "{} {:<3} {} | {} | {:.2} s (limit {} s)",
        if ok { "PASS" } else { "FAIL" },
        id,
        what,
        note.trim(),
        took.as_secs_f64(),
        limit.as_secs()
    );
    ok
}

fn main() -> ExitCode {
    let mut ctx = Ctx::default();
    let mut failed = 0;
    let mut property_time = Duration::ZERO;
    for c in &CRITERIA {
        let start = Instant::now();
        let (ok, note) = match (c.run)(&mut ctx) {
            Ok(r) => r,
            Err(msg) => (false, format!("error: {msg}")),
        };
        let took = start.elapsed();
        if c.id.starts_with('7') {
            property_time += took;
        }
        failed += !report(ok, c.id, c.what, &note, took, c.limit) as usize;
    }
    failed += !report(true, "7", "property suites in total", "", property_time, secs(1800)) as usize;
    println!("{} checks, {failed} failed", CRITERIA.len() + 1);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
