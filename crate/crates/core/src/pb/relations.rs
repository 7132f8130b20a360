use std::fmt;

use serde::Serialize;

use super::word::{pb_shift, pb_shift_by, v_of_1, Letter, PBWord};
use crate::error::Result;
use crate::term::Term;

/// The defining relation families, with indices `(i, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Schema {
    /// `σ_j σ_i = σ_i σ_j`, `j ≥ i+2`
    SigmaCommute,
    /// `a_j σ_i = σ_i a_j`, `j ≥ i+2`
    ASigmaCommute,
    /// `a_j σ_i = σ_{i+1} a_j`, `j ≤ i-1`
    ASigmaShift,
    /// `a_j a_i = a_{i+1} a_j`, `j ≤ i-1`
    AAShift,
    /// `σ_j σ_i σ_j = σ_i σ_j σ_i`, `j = i+1`
    Braid,
    /// `σ_i σ_j a_i = a_j σ_i`, `j = i+1`
    SigmaSigmaA,
    /// `σ_j σ_i a_j = a_i σ_i`, `j = i+1`
    SigmaSigmaARev,
}

impl Schema {
    pub const ALL: [Schema; 7] = [
        Schema::SigmaCommute,
        Schema::ASigmaCommute,
        Schema::ASigmaShift,
        Schema::AAShift,
        Schema::Braid,
        Schema::SigmaSigmaA,
        Schema::SigmaSigmaARev,
    ];

    pub fn admits(self, i: u32, j: u32) -> bool {
        if i == 0 || j == 0 {
            return false;
        }
        match self {
            Schema::SigmaCommute | Schema::ASigmaCommute => j >= i + 2,
            Schema::ASigmaShift | Schema::AAShift => j < i,
            Schema::Braid | Schema::SigmaSigmaA | Schema::SigmaSigmaARev => j == i + 1,
        }
    }
}

impl fmt::Display for Schema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Schema::SigmaCommute => "s_j s_i = s_i s_j (j >= i+2)",
            Schema::ASigmaCommute => "a_j s_i = s_i a_j (j >= i+2)",
            Schema::ASigmaShift => "a_j s_i = s_(i+1) a_j (j <= i-1)",
            Schema::AAShift => "a_j a_i = a_(i+1) a_j (j <= i-1)",
            Schema::Braid => "s_j s_i s_j = s_i s_j s_i (j = i+1)",
            Schema::SigmaSigmaA => "s_i s_j a_i = a_j s_i (j = i+1)",
            Schema::SigmaSigmaARev => "s_j s_i a_j = a_i s_i (j = i+1)",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationInstance {
    pub lhs: PBWord,
    pub rhs: PBWord,
    pub family: Schema,
    pub i: u32,
    pub j: u32,
}

impl RelationInstance {
    pub fn new(family: Schema, i: u32, j: u32) -> Option<RelationInstance> {
        if !family.admits(i, j) {
            return None;
        }
        let s = Letter::sigma;
        let a = Letter::a;
        let (lhs, rhs) = match family {
            Schema::SigmaCommute => (vec![s(j), s(i)], vec![s(i), s(j)]),
            Schema::ASigmaCommute => (vec![a(j), s(i)], vec![s(i), a(j)]),
            Schema::ASigmaShift => (vec![a(j), s(i)], vec![s(i + 1), a(j)]),
            Schema::AAShift => (vec![a(j), a(i)], vec![a(i + 1), a(j)]),
            Schema::Braid => (vec![s(j), s(i), s(j)], vec![s(i), s(j), s(i)]),
            Schema::SigmaSigmaA => (vec![s(i), s(j), a(i)], vec![a(j), s(i)]),
            Schema::SigmaSigmaARev => (vec![s(j), s(i), a(j)], vec![a(i), s(i)]),
        };
        Some(RelationInstance {
            lhs: PBWord::new(lhs).expect("indices are positive"),
            rhs: PBWord::new(rhs).expect("indices are positive"),
            family,
            i,
            j,
        })
    }
}

/// Every instance with `i, j ≤ max_index`.
pub fn relation_instances(max_index: u32) -> Vec<RelationInstance> {
    let mut out = Vec::new();
    for family in Schema::ALL {
        for i in 1..=max_index {
            for j in 1..=max_index {
                out.extend(RelationInstance::new(family, i, j));
            }
        }
    }
    out
}

fn splice(w: &[Letter], at: usize, len: usize, with: &[Letter]) -> PBWord {
    let mut v = w[..at].to_vec();
    v.extend_from_slice(with);
    v.extend_from_slice(&w[at + len..]);
    PBWord::new(v).expect("indices stay positive")
}

/// Words one elementary step away from `w`: a relation applied to a
/// factor in either direction (also in inverted form), a free cancellation,
/// or an insertion of `l l^{-1}` for letters of index at most one above the
/// largest index of `w`.
pub fn pb_relation_neighbors(w: &PBWord) -> Vec<PBWord> {
    let letters = w.letters();
    let top = w.max_index() + 1;
    let mut out = Vec::new();
    for inst in relation_instances(top + 1) {
        let pairs = [
            (inst.lhs.clone(), inst.rhs.clone()),
            (inst.rhs.clone(), inst.lhs.clone()),
            (inst.lhs.inverse(), inst.rhs.inverse()),
            (inst.rhs.inverse(), inst.lhs.inverse()),
        ];
        for (from, to) in pairs {
            let f = from.letters();
            if f.len() > letters.len() {
                continue;
            }
            for at in 0..=letters.len() - f.len() {
                if &letters[at..at + f.len()] == f {
                    out.push(splice(letters, at, f.len(), to.letters()));
                }
            }
        }
    }
    for at in 0..letters.len().saturating_sub(1) {
        if letters[at + 1] == letters[at].inverse() {
            out.push(splice(letters, at, 2, &[]));
        }
    }
    for at in 0..=letters.len() {
        for index in 1..=top {
            for l in [Letter::sigma(index), Letter::a(index)] {
                for l in [l, l.inverse()] {
                    out.push(splice(letters, at, 0, &[l, l.inverse()]));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// `v(1) · ∂b` against `∂^p b · v(1)` with `p = size(v)`.
pub fn check_shift_commutation(
    v: &Term,
    b: &PBWord,
    eq: &dyn Fn(&PBWord, &PBWord) -> bool,
) -> Result<bool> {
    let (lhs, rhs) = shift_commutation_sides(v, b)?;
    Ok(eq(&lhs, &rhs))
}

pub fn shift_commutation_sides(v: &Term, b: &PBWord) -> Result<(PBWord, PBWord)> {
    let v1 = v_of_1(v)?;
    let lhs = v1.concat(&pb_shift(b));
    let rhs = pb_shift_by(b, v.size() as u32).concat(&v1);
    Ok((lhs, rhs))
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditEntry {
    pub equation: String,
    pub z: Option<PBWord>,
    pub lhs: PBWord,
    pub rhs: PBWord,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub entries: Vec<AuditEntry>,
}

impl AuditReport {
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| e.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AuditEntry> {
        self.entries.iter().filter(|e| !e.holds)
    }
}

fn word(s: &str) -> PBWord {
    s.parse().expect("fixed word")
}

/// The seven word equations equivalent to the ALD laws on the subgroup
/// generated by the `σ_i` and `a_i`, the `z`-dependent ones at every sample.
pub fn ald_word_equations(z_samples: &[PBWord]) -> Vec<(String, Option<PBWord>, PBWord, PBWord)> {
    let mut out = Vec::new();
    out.push((
        "braid".to_string(),
        None,
        word("s1 s2 s1"),
        word("s2 s1 s2"),
    ));
    out.push(("a1-s1".to_string(), None, word("a1 s1"), word("s2 s1 a2")));
    out.push(("a2-s1".to_string(), None, word("a2 s1"), word("s1 s2 a1")));
    for z in z_samples {
        let d1 = pb_shift(z);
        let d2 = pb_shift_by(z, 2);
        let eqs = [
            (
                "z-braid",
                PBWord::product([&d2, &word("s2 s1")]),
                PBWord::product([&word("s1"), &d2, &word("s2 s1 S2")]),
            ),
            ("z-s1", d2.concat(&word("s1")), word("s1").concat(&d2)),
            (
                "z-a1-s1",
                d2.concat(&word("s2 s1")),
                PBWord::product([&word("a1"), &d1, &word("s1 A2")]),
            ),
            ("z-a1", d2.concat(&word("a1")), word("a1").concat(&d1)),
        ];
        for (name, lhs, rhs) in eqs {
            out.push((name.to_string(), Some(z.clone()), lhs, rhs));
        }
    }
    out
}

pub fn audit_ald_equations(
    eq: &(dyn Fn(&PBWord, &PBWord) -> bool + Sync),
    z_samples: &[PBWord],
) -> AuditReport {
    use rayon::prelude::*;
    let entries = ald_word_equations(z_samples)
        .into_par_iter()
        .map(|(equation, z, lhs, rhs)| {
            let holds = eq(&lhs, &rhs);
            AuditEntry {
                equation,
                z,
                lhs,
                rhs,
                holds,
            }
        })
        .collect();
    AuditReport { entries }
}
