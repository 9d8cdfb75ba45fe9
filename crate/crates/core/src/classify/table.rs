//! The parameterizations `j(t)`, one record per torsion shape.

use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{parse_poly, parse_rational, PolyQ};
use crate::shape::TorsionShape;

/// `j(t) = numerator(t) / denominator(t)` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JFunction {
    pub numerator: PolyQ,
    pub denominator: PolyQ,
}

impl JFunction {
    /// `None` at poles.
    pub fn eval(&self, t: &BigRational) -> Option<BigRational> {
        let d = self.denominator.eval(t);
        (!d.is_zero()).then(|| self.numerator.eval(t) / d)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub shape: TorsionShape,
    pub functions: Vec<JFunction>,
    #[serde(with = "crate::arith::rational_vec")]
    pub finite_js: Vec<BigRational>,
}

type Row = (TorsionShape, &'static [(&'static str, &'static str)], &'static [&'static str]);

const fn s(m1: u64, m2: u64) -> TorsionShape {
    TorsionShape::new(m1, m2)
}

const ROWS: [Row; 20] = [
    (s(2, 2), &[("t", "1")], &[]),
    (s(2, 4), &[("(t^2+16t+16)^3", "t(t+16)")], &[]),
    (s(2, 8), &[("(t^4-16t^2+16)^3", "t^2(t^2-16)")], &[]),
    (s(2, 10), &[("(t^4-12t^3+14t^2+12t+1)^3", "t^5(t^2-11t-1)")], &[]),
    (s(2, 14), &[("(t^2+13t+49)(t^2+5t+1)^3", "t")], &[]),
    (
        s(2, 16),
        &[(
            "(t^16-8t^14+12t^12+8t^10-10t^8+8t^6+12t^4-8t^2+1)^3",
            "t^16(t^4-6t^2+1)(t^2+1)^2(t^2-1)^4",
        )],
        &[],
    ),
    (
        s(2, 26),
        &[("(t^4-t^3+5t^2+t+1)(t^8-5t^7+7t^6-5t^5+5t^3+7t^2+5t+1)^3", "t^13(t^2-3t-1)")],
        &[],
    ),
    (
        s(4, 4),
        &[
            ("(t^2+192)^3", "(t^2-64)^2"),
            ("-16(t^4-14t^2+1)^3", "t^2(t^2+1)^4"),
            ("-4(t^2+2t-2)^3(t^2+10t-2)", "t^4"),
        ],
        &[],
    ),
    (
        s(4, 8),
        &[
            ("16(t^4+4t^3+20t^2+32t+16)^3", "t^4(t+1)^2(t+2)^4"),
            ("-4(t^8-60t^6+134t^4-60t^2+1)^3", "t^2(t^2-1)^2(t^2+1)^8"),
        ],
        &[],
    ),
    (
        s(4, 16),
        &[(
            "(t^16-8t^14+12t^12+8t^10+230t^8+8t^6+12t^4-8t^2+1)^3",
            "t^8(t^2-1)^8(t^2+1)^4(t^4-6t^2+1)^2",
        )],
        &[],
    ),
    (s(4, 28), &[], &["351/4", "-38575685889/16384"]),
    (s(6, 6), &[("(t+27)(t+3)^3", "t")], &[]),
    (s(6, 12), &[("(t^2-3)^3(t^6-9t^4+3t^2-3)^3", "t^4(t^2-9)(t^2-1)^3")], &[]),
    (
        s(6, 18),
        &[
            ("(t+3)^3(t^3+9t^2+27t+3)^3", "t(t^2+9t+27)"),
            ("(t+3)(t^2-3t+9)(t^3+3)^3", "t^3"),
        ],
        &[],
    ),
    (s(6, 30), &[], &["-121945/32", "46969655/32768"]),
    (s(6, 42), &[], &["3375/2", "-140625/8", "-1159088625/2097152", "-189613868625/128"]),
    (s(8, 8), &[("(t^8+224t^4+256)^3", "t^4(t^4-16)^4")], &[]),
    (
        s(12, 12),
        &[("(t^2+3)^3(t^6-15t^4+75t^2+3)^3", "t^2(t^2-9)^2(t^2-1)^6")],
        &["-35937/4", "109503/64"],
    ),
    (s(14, 14), &[], &["2268945/128"]),
    (
        s(18, 18),
        &[
            ("27t^3(8-t^3)^3", "(t^3+1)^3"),
            (
                "432t(t^2-9)(t^2+3)^3(t^3-9t+12)^3(t^3+9t^2+27t+3)^3(5t^3-9t^2-9t-3)^3",
                "(t^3-3t^2-9t+3)^9(t^3+3t^2-9t-3)^3",
            ),
        ],
        &[],
    ),
];

fn build() -> Vec<FamilyRecord> {
    ROWS.iter()
        .map(|(shape, fs, js)| FamilyRecord {
            shape: *shape,
            functions: fs
                .iter()
                .map(|(n, d)| JFunction {
                    numerator: parse_poly(n, 't').expect("table numerator"),
                    denominator: parse_poly(d, 't').expect("table denominator"),
                })
                .collect(),
            finite_js: js.iter().map(|j| parse_rational(j).expect("table j")).collect(),
        })
        .collect()
}

pub fn table1_data() -> &'static [FamilyRecord] {
    static DATA: OnceLock<Vec<FamilyRecord>> = OnceLock::new();
    DATA.get_or_init(build)
}

pub fn table1_record(shape: &TorsionShape) -> Option<&'static FamilyRecord> {
    table1_data().iter().find(|r| r.shape == *shape)
}

pub fn export_table1_json() -> String {
    serde_json::to_string_pretty(table1_data()).expect("table serializes")
}
