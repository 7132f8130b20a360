use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::term::{Op, Term, TermSeq};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    Sigma,
    A,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub family: Family,
    pub index: u32,
    pub positive: bool,
}

impl Letter {
    pub fn sigma(index: u32) -> Letter {
        Letter {
            family: Family::Sigma,
            index,
            positive: true,
        }
    }

    pub fn a(index: u32) -> Letter {
        Letter {
            family: Family::A,
            index,
            positive: true,
        }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            positive: !self.positive,
            ..self
        }
    }

    pub fn shifted(self, k: u32) -> Letter {
        Letter {
            index: self.index + k,
            ..self
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match (self.family, self.positive) {
            (Family::Sigma, true) => 's',
            (Family::Sigma, false) => 'S',
            (Family::A, true) => 'a',
            (Family::A, false) => 'A',
        };
        write!(f, "{c}{}", self.index)
    }
}

/// A word in the generators `σ_i^{±1}`, `a_i^{±1}` of the parenthesized
/// braid group. Text form: `s1 S2 a1 A3`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PBWord(Vec<Letter>);

impl PBWord {
    pub fn identity() -> PBWord {
        PBWord(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Result<PBWord> {
        if letters.iter().any(|l| l.index == 0) {
            return Err(Error::ZeroIndex);
        }
        Ok(PBWord(letters))
    }

    pub fn sigma(i: u32) -> PBWord {
        assert!(i >= 1);
        PBWord(vec![Letter::sigma(i)])
    }

    pub fn a(i: u32) -> PBWord {
        assert!(i >= 1);
        PBWord(vec![Letter::a(i)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_index(&self) -> u32 {
        self.0.iter().map(|l| l.index).max().unwrap_or(0)
    }

    pub fn a_count(&self) -> usize {
        self.0.iter().filter(|l| l.family == Family::A).count()
    }

    pub fn inverse(&self) -> PBWord {
        PBWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &PBWord) -> PBWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        PBWord(v)
    }

    pub fn push(&mut self, l: Letter) {
        assert!(l.index >= 1);
        self.0.push(l);
    }

    /// Concatenation of several words.
    pub fn product<'a>(parts: impl IntoIterator<Item = &'a PBWord>) -> PBWord {
        PBWord(
            parts
                .into_iter()
                .flat_map(|w| w.0.iter().copied())
                .collect(),
        )
    }

    /// Cancel adjacent inverse pairs.
    pub fn free_reduce(&self) -> PBWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        PBWord(out)
    }
}

impl fmt::Display for PBWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl Serialize for PBWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for PBWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<PBWord> {
        let mut letters = Vec::new();
        let mut offset = 0;
        for tok in s.split_whitespace() {
            let pos = s[offset..].find(tok).map_or(offset, |p| p + offset);
            offset = pos + tok.len();
            let (family, positive) = match tok.as_bytes()[0] {
                b's' => (Family::Sigma, true),
                b'S' => (Family::Sigma, false),
                b'a' => (Family::A, true),
                b'A' => (Family::A, false),
                _ => {
                    return Err(Error::Syntax {
                        pos,
                        msg: format!("expected one of s/S/a/A followed by an index, found `{tok}`"),
                    })
                }
            };
            let index: u32 = tok[1..].parse().map_err(|_| Error::Syntax {
                pos: pos + 1,
                msg: format!("bad generator index in `{tok}`"),
            })?;
            if index == 0 {
                return Err(Error::Syntax {
                    pos: pos + 1,
                    msg: "generator indices start at 1".into(),
                });
            }
            letters.push(Letter {
                family,
                index,
                positive,
            });
        }
        Ok(PBWord(letters))
    }
}

/// The shift endomorphism: every index goes up by one.
pub fn pb_shift(w: &PBWord) -> PBWord {
    pb_shift_by(w, 1)
}

pub fn pb_shift_by(w: &PBWord, k: u32) -> PBWord {
    PBWord(w.0.iter().map(|l| l.shifted(k)).collect())
}

/// `b · ∂c · σ1 · ∂b⁻¹`, unsimplified.
pub fn pb_star(b: &PBWord, c: &PBWord) -> PBWord {
    let mut out = b.clone();
    out.0.extend(pb_shift(c).0);
    out.0.push(Letter::sigma(1));
    out.0.extend(pb_shift(&b.inverse()).0);
    out
}

/// `b · ∂c · a1`, unsimplified.
pub fn pb_circ(b: &PBWord, c: &PBWord) -> PBWord {
    let mut out = b.clone();
    out.0.extend(pb_shift(c).0);
    out.0.push(Letter::a(1));
    out
}

/// Evaluate a one-variable term at `g` with [`pb_star`] and [`pb_circ`].
pub fn pb_eval_term(t: &Term, g: &PBWord) -> Result<PBWord> {
    if !t.is_one_variable() {
        return Err(Error::MultiVariable(t.to_string()));
    }
    fn go(t: &Term, g: &PBWord) -> PBWord {
        match t {
            Term::Var(_) => g.clone(),
            Term::Node(Op::Star, l, r) => pb_star(&go(l, g), &go(r, g)),
            Term::Node(Op::Circ, l, r) => pb_circ(&go(l, g), &go(r, g)),
        }
    }
    Ok(go(t, g))
}

/// `v(1)`: the value of a `o`-term at the identity, a word in the `a_i`.
pub fn v_of_1(v: &Term) -> Result<PBWord> {
    if !v.is_circ_term() || !v.is_one_variable() {
        return Err(Error::NotCircTerm(v.to_string()));
    }
    pb_eval_term(v, &PBWord::identity())
}

/// `t_1(g) · ∂t_2(g) ⋯ ∂^{p-1} t_p(g) · v(1)`.
pub fn pb_eval_closed(v: &Term, ts: &TermSeq, g: &PBWord) -> Result<PBWord> {
    if v.size() != ts.len() {
        return Err(Error::LengthMismatch {
            expected: v.size(),
            got: ts.len(),
        });
    }
    let mut out = PBWord::identity();
    for (k, t) in ts.iter().enumerate() {
        if !t.is_one_variable_star_term() {
            return Err(Error::NotStarTerm(t.to_string()));
        }
        out.0.extend(pb_shift_by(&pb_eval_term(t, g)?, k as u32).0);
    }
    out.0.extend(v_of_1(v)?.0);
    Ok(out)
}
