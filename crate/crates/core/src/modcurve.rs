//! Invariants of the congruence subgroup attached to `H <= GL2(Z/n)`: index,
//! elliptic points, cusps and genus, from the right coset action of
//! `SL2(Z/n)` on `<H ∩ SL2, -I>`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{close, GroupElement, GroupError, MatrixGroup, ModMatrix};

pub const MAX_LEVEL: u32 = 32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModcurveError {
    #[error("modulus {0} exceeds {MAX_LEVEL}")]
    ModulusTooLarge(u32),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceInvariants {
    pub index: u64,
    pub e2: u64,
    pub e3: u64,
    pub cusps: u64,
    pub genus: u64,
}

/// Permutation action of `S`, `U`, `T` on the right cosets.
struct CosetAction {
    s: Vec<u32>,
    u: Vec<u32>,
    t: Vec<u32>,
}

fn coset_action(h: &MatrixGroup) -> Result<CosetAction, ModcurveError> {
    let n = h.modulus();
    if n > MAX_LEVEL {
        return Err(ModcurveError::ModulusTooLarge(n));
    }
    let mut hp: Vec<ModMatrix> = Vec::new();
    for g in h.elements().iter().filter(|g| g.det() == 1 % n) {
        hp.push(*g);
        hp.push(g.op(&ModMatrix::minus_identity(n)));
    }
    hp.sort();
    hp.dedup();
    let bound = (n as usize).pow(4);
    let mut label = vec![u32::MAX; bound];
    let mut reps: Vec<ModMatrix> = Vec::new();
    for code in 0..bound as u64 {
        let g = ModMatrix::from_code(n, code);
        if g.det() != 1 % n || label[code as usize] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        for x in &hp {
            label[x.op(&g).code() as usize] = id;
        }
        reps.push(g);
    }
    let act = |m: ModMatrix| -> Vec<u32> { reps.iter().map(|r| label[r.op(&m).code() as usize]).collect() };
    Ok(CosetAction {
        s: act(ModMatrix::new(n, 0, -1, 1, 0)),
        u: act(ModMatrix::new(n, 0, -1, 1, 1)),
        t: act(ModMatrix::new(n, 1, 1, 0, 1)),
    })
}

fn fixed_points(p: &[u32]) -> u64 {
    p.iter().enumerate().filter(|(i, &j)| *i as u32 == j).count() as u64
}

fn cycle_count(p: &[u32]) -> u64 {
    let mut seen = vec![false; p.len()];
    let mut count = 0;
    for i in 0..p.len() {
        if seen[i] {
            continue;
        }
        count += 1;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = p[j] as usize;
        }
    }
    count
}

pub fn psl2_invariants(h: &MatrixGroup) -> Result<CongruenceInvariants, ModcurveError> {
    let a = coset_action(h)?;
    let index = a.s.len() as u64;
    let e2 = fixed_points(&a.s);
    let e3 = fixed_points(&a.u);
    let cusps = cycle_count(&a.t);
    let twelve_g = 12 + index as i64 - 3 * e2 as i64 - 4 * e3 as i64 - 6 * cusps as i64;
    assert!(
        twelve_g >= 0 && twelve_g % 12 == 0,
        "genus formula not integral: index {index}, e2 {e2}, e3 {e3}, cusps {cusps}"
    );
    Ok(CongruenceInvariants { index, e2, e3, cusps, genus: (twelve_g / 12) as u64 })
}

pub fn genus(h: &MatrixGroup) -> Result<u64, ModcurveError> {
    Ok(psl2_invariants(h)?.genus)
}

/// A group given by explicit generators together with the genus of its
/// modular curve as labelled in the Cummins-Pauli tables (or the
/// Rouse-Zureick-Brown label for the level-4 group).
#[derive(Clone, Copy, Debug)]
pub struct PrintedGroup {
    pub name: &'static str,
    pub label: &'static str,
    pub modulus: u32,
    pub gens: &'static [[i64; 4]],
    pub genus: u64,
}

impl PrintedGroup {
    pub fn group(&self) -> Result<MatrixGroup, GroupError> {
        let gens: Vec<ModMatrix> = self.gens.iter().map(|e| ModMatrix::from_entries(self.modulus, *e)).collect();
        close(&gens, self.modulus)
    }
}

pub const PRINTED_GROUPS: [PrintedGroup; 11] = [
    PrintedGroup {
        name: "level9-no-9x27",
        label: "9H1",
        modulus: 9,
        gens: &[[1, 3, 0, 1], [1, 0, 0, 2], [8, 0, 0, 1]],
        genus: 1,
    },
    PrintedGroup {
        name: "level9-full-9-torsion",
        label: "9J0",
        modulus: 9,
        gens: &[[1, 2, 3, 1], [1, 3, 0, 1], [1, 0, 0, 8], [2, 0, 0, 2]],
        genus: 0,
    },
    PrintedGroup {
        name: "level9-3x9-h1",
        label: "9B0",
        modulus: 9,
        gens: &[[1, 1, 0, 1], [2, 0, 0, 1], [2, 0, 0, 2]],
        genus: 0,
    },
    PrintedGroup {
        name: "level9-3x9-h2",
        label: "9C0",
        modulus: 9,
        gens: &[[1, 2, 3, 1], [2, 0, 0, 1], [2, 0, 0, 2]],
        genus: 0,
    },
    PrintedGroup {
        name: "level9-3x9-h3",
        label: "9A1",
        modulus: 9,
        gens: &[[1, 1, 3, 1], [2, 0, 0, 1], [2, 0, 0, 2]],
        genus: 1,
    },
    PrintedGroup {
        name: "level9-one-isogeny-h1",
        label: "9C0",
        modulus: 9,
        gens: &[[1, 0, 0, 2], [2, 0, 0, 1], [1, 3, 0, 1], [1, 1, 6, 1]],
        genus: 0,
    },
    PrintedGroup {
        name: "level9-one-isogeny-h2",
        label: "9A1",
        modulus: 9,
        gens: &[[1, 0, 0, 2], [2, 0, 0, 1], [1, 3, 0, 1], [1, 1, 3, 1]],
        genus: 1,
    },
    PrintedGroup {
        name: "level9-one-isogeny-h3",
        label: "9A1",
        modulus: 9,
        gens: &[[1, 0, 0, 2], [2, 0, 0, 1], [1, 3, 0, 1]],
        genus: 1,
    },
    PrintedGroup {
        name: "level27-no-27-h3",
        label: "27A4",
        modulus: 27,
        gens: &[[1, 2, 9, 1], [1, 0, 0, 2], [8, 0, 0, 1]],
        genus: 4,
    },
    PrintedGroup {
        name: "level27-no-27-h4",
        label: "27A2",
        modulus: 27,
        gens: &[[1, 1, 9, 1], [1, 0, 0, 2], [2, 0, 0, 1]],
        genus: 2,
    },
    PrintedGroup {
        name: "level4-odd-4-torsion",
        label: "X20a",
        modulus: 4,
        gens: &[[3, 1, 0, 1], [0, 3, 1, 3], [3, 0, 0, 3]],
        genus: 0,
    },
];

pub fn printed_group(name: &str) -> Option<&'static PrintedGroup> {
    PRINTED_GROUPS.iter().find(|g| g.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{borel, gl2};

    fn inv(h: &MatrixGroup) -> (u64, u64, u64, u64, u64) {
        let c = psl2_invariants(h).unwrap();
        (c.index, c.e2, c.e3, c.cusps, c.genus)
    }

    #[test]
    fn classical_groups() {
        assert_eq!(inv(&gl2(2)), (1, 1, 1, 1, 0));
        assert_eq!(inv(&borel(2)), (3, 1, 0, 2, 0));
        // Gamma_0(11) has genus 1; Gamma_0(3): index 4, e3 = 1, two cusps
        assert_eq!(inv(&borel(11)).4, 1);
        assert_eq!(inv(&borel(3)), (4, 0, 1, 2, 0));
    }

    #[test]
    fn full_group_genus_zero() {
        for n in 2..=12 {
            assert_eq!(inv(&gl2(n)), (1, 1, 1, 1, 0));
        }
    }

    #[test]
    fn printed_genera() {
        for p in &PRINTED_GROUPS {
            let c = psl2_invariants(&p.group().unwrap()).unwrap();
            assert_eq!(c.genus, p.genus, "{} {:?}", p.name, c);
        }
    }

    #[test]
    fn bound() {
        let h = close(&[], 33).unwrap();
        assert_eq!(psl2_invariants(&h), Err(ModcurveError::ModulusTooLarge(33)));
    }
}
