//! Classification of `E(Q(3^inf))_tors` from `j(E)` through the table of
//! parameterizations, and for `j = 1728` from the quartic twist class.

mod filter;
mod table;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::ntheory::is_square_int;
use crate::arith::{format_rational, rational_roots, ArithError};
use crate::curve::{quartic_twist_parameter, CurveError, WeierstrassCurve};
use crate::shape::TorsionShape;

pub use filter::{mc_s3_filter, FilterReport, FilterVerdict, FILTER_PRIME_RANGE};
pub use table::{export_table1_json, table1_data, table1_record, FamilyRecord, JFunction};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("curve required: j = 1728 does not determine the torsion")]
    CurveRequired,
    #[error("no unique maximal shape among {0:?}")]
    NonUniqueMaximal(Vec<TorsionShape>),
    #[error("witness t = {0} does not reproduce j")]
    BadWitness(String),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Witness {
    /// `j = f(t)` for the `function`-th function of the record.
    Parameter {
        function: usize,
        #[serde(with = "crate::arith::rational_string")]
        t: BigRational,
    },
    /// `j` is on the record's finite list.
    Listed,
    /// `j = 1728` with quartic twist class `d`.
    QuarticTwist { d: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Match {
    pub shape: TorsionShape,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "table")]
    Table,
    #[serde(rename = "j1728-rule")]
    J1728Rule,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationResult {
    #[serde(with = "crate::arith::rational_string")]
    pub input_j: BigRational,
    pub torsion: TorsionShape,
    pub matched: Vec<Match>,
    pub method: Method,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

fn j1728() -> BigRational {
    BigRational::from_integer(BigInt::from(1728))
}

/// Every record whose image contains `j0`, with verified witnesses.
pub fn family_membership(j0: &BigRational) -> Result<Vec<Match>, ClassifyError> {
    let mut out = Vec::new();
    for rec in table1_data() {
        let mut witnesses = Vec::new();
        if rec.finite_js.contains(j0) {
            witnesses.push(Witness::Listed);
        }
        for (i, f) in rec.functions.iter().enumerate() {
            let p = &f.numerator - &f.denominator.scale(j0);
            if p.is_zero() {
                continue;
            }
            for t in rational_roots(&p)? {
                match f.eval(&t) {
                    None => continue,
                    Some(v) if v == *j0 => witnesses.push(Witness::Parameter { function: i, t }),
                    Some(_) => return Err(ClassifyError::BadWitness(format_rational(&t))),
                }
            }
        }
        if !witnesses.is_empty() {
            out.push(Match { shape: rec.shape, witnesses });
        }
    }
    Ok(out)
}

fn unique_maximal(matched: &[Match]) -> Result<TorsionShape, ClassifyError> {
    let shapes: Vec<TorsionShape> = matched.iter().map(|m| m.shape).collect();
    let maximal: Vec<TorsionShape> = shapes
        .iter()
        .copied()
        .filter(|s| !shapes.iter().any(|o| o != s && s.is_contained_in(o)))
        .collect();
    match maximal.as_slice() {
        [one] => Ok(*one),
        _ => Err(ClassifyError::NonUniqueMaximal(maximal)),
    }
}

pub fn classify_j(j0: &BigRational) -> Result<ClassificationResult, ClassifyError> {
    if *j0 == j1728() {
        return Err(ClassifyError::CurveRequired);
    }
    let matched = family_membership(j0)?;
    let torsion = unique_maximal(&matched)?;
    Ok(ClassificationResult { input_j: j0.clone(), torsion, matched, method: Method::Table, seed: None })
}

/// For `y^2 = x^3 + d x`: full 4-torsion over `Q(3^inf)` exactly when `d`
/// or `-d` is a square.
pub fn j1728_shape(d: &BigInt) -> TorsionShape {
    if is_square_int(d) || is_square_int(&-d) {
        TorsionShape::new(4, 4)
    } else {
        TorsionShape::new(2, 2)
    }
}

pub fn classify_curve(e: &WeierstrassCurve) -> Result<ClassificationResult, ClassifyError> {
    let j = e.j_invariant();
    if j != j1728() {
        return classify_j(&j);
    }
    let d = quartic_twist_parameter(e)?;
    let torsion = j1728_shape(&d);
    let twist = Witness::QuarticTwist { d: d.to_string() };
    let mut matched = vec![Match { shape: TorsionShape::new(2, 2), witnesses: vec![twist.clone()] }];
    if torsion != TorsionShape::new(2, 2) {
        matched.push(Match { shape: torsion, witnesses: vec![twist] });
    }
    Ok(ClassificationResult { input_j: j, torsion, matched, method: Method::J1728Rule, seed: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ntheory::rat;
    use crate::arith::parse_rational;
    use crate::curve::curve_from_j;

    fn shape_of(j: &str) -> TorsionShape {
        classify_j(&parse_rational(j).unwrap()).unwrap().torsion
    }

    #[test]
    fn named_values() {
        assert_eq!(shape_of("2268945/128"), TorsionShape::new(14, 14));
        assert_eq!(shape_of("0"), TorsionShape::new(18, 18));
        assert_eq!(shape_of("351/4"), TorsionShape::new(4, 28));
        assert_eq!(shape_of("-121945/32"), TorsionShape::new(6, 30));
    }

    #[test]
    fn membership_witnesses() {
        let m = family_membership(&rat(2375, 8)).unwrap();
        let hit = m.iter().find(|m| m.shape == TorsionShape::new(6, 18)).unwrap();
        assert!(hit.witnesses.contains(&Witness::Parameter { function: 1, t: rat(-2, 1) }));
        assert!(m.iter().any(|m| m.shape == TorsionShape::new(2, 2)));
    }

    #[test]
    fn j1728_needs_curve() {
        assert_eq!(classify_j(&rat(1728, 1)), Err(ClassifyError::CurveRequired));
        let r = classify_curve(&WeierstrassCurve::from_ints([0, 0, 0, 1, 0]).unwrap()).unwrap();
        assert_eq!((r.torsion, r.method), (TorsionShape::new(4, 4), Method::J1728Rule));
        let r = classify_curve(&WeierstrassCurve::from_ints([0, 0, 0, 2, 0]).unwrap()).unwrap();
        assert_eq!(r.torsion, TorsionShape::new(2, 2));
    }

    #[test]
    fn curve_path_and_json() {
        let r = classify_curve(&curve_from_j(&rat(2268945, 128))).unwrap();
        assert_eq!(r.torsion, TorsionShape::new(14, 14));
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.contains(r#""torsion":[14,14]"#) && s.contains(r#""method":"table""#));
        assert_eq!(serde_json::from_str::<ClassificationResult>(&s).unwrap(), r);
    }
}
