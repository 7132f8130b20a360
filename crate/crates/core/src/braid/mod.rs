//! Words in Artin's braid group on infinitely many strands.
//!
//! A letter is a nonzero `i32`: `+i` is `σ_i`, `-i` is `σ_i^{-1}`.

mod garside;
mod handle;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::term::{Op, Term};

pub use garside::{garside_equal, garside_normal_form, GarsideNormalForm};
pub use handle::{braid_compare, braid_equal, handle_reduce, is_handle_free, main_sign};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord(Vec<i32>);

impl BraidWord {
    pub fn identity() -> Self {
        BraidWord(Vec::new())
    }

    /// Builds a word from signed indices; zero is rejected.
    pub fn new(letters: Vec<i32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::ZeroIndex);
        }
        Ok(BraidWord(letters))
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<i32>) -> Self {
        debug_assert!(!letters.contains(&0));
        BraidWord(letters)
    }

    pub fn sigma(i: u32) -> Self {
        assert!(i >= 1, "braid generators start at 1");
        BraidWord(vec![i as i32])
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<i32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest generator index used, 0 for the empty word.
    pub fn max_index(&self) -> u32 {
        self.0.iter().map(|l| l.unsigned_abs()).max().unwrap_or(0)
    }

    pub fn min_index(&self) -> Option<u32> {
        self.0.iter().map(|l| l.unsigned_abs()).min()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord(self.0.iter().rev().map(|l| -l).collect())
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        BraidWord(v)
    }

    pub fn push(&mut self, letter: i32) {
        assert!(letter != 0);
        self.0.push(letter);
    }

    pub fn extend_from(&mut self, other: &BraidWord) {
        self.0.extend_from_slice(&other.0);
    }

    /// Permutation induced on strands `0..n`: `perm[p]` is the final position
    /// of the strand starting at position `p`.
    pub fn permutation(&self, n: usize) -> Vec<usize> {
        let mut at: Vec<usize> = (0..n).collect(); // at[position] = strand
        for &l in &self.0 {
            let i = l.unsigned_abs() as usize;
            assert!(i < n, "σ_{i} needs at least {} strands", i + 1);
            at.swap(i - 1, i);
        }
        let mut perm = vec![0; n];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if *l > 0 {
                write!(f, "s{l}")?;
            } else {
                write!(f, "S{}", -l)?;
            }
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Whitespace-separated `s<i>` / `S<i>`; the empty string is the identity.
    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut offset = 0;
        for tok in s.split_whitespace() {
            let pos = s[offset..].find(tok).map(|p| p + offset).unwrap_or(offset);
            offset = pos + tok.len();
            let (sign, rest) = match tok.as_bytes()[0] {
                b's' => (1, &tok[1..]),
                b'S' => (-1, &tok[1..]),
                _ => {
                    return Err(Error::Syntax {
                        pos,
                        msg: format!("expected `s<i>` or `S<i>`, found `{tok}`"),
                    })
                }
            };
            let idx: i32 = rest.parse().map_err(|_| Error::Syntax {
                pos: pos + 1,
                msg: format!("bad generator index in `{tok}`"),
            })?;
            if idx < 1 {
                return Err(Error::Syntax {
                    pos: pos + 1,
                    msg: "generator indices start at 1".into(),
                });
            }
            letters.push(sign * idx);
        }
        Ok(BraidWord(letters))
    }
}

/// Cancel adjacent `σ_i σ_i^{-1}` and `σ_i^{-1} σ_i` until none remain.
pub fn free_reduce(w: &BraidWord) -> BraidWord {
    BraidWord(free_reduce_letters(&w.0))
}

pub(crate) fn free_reduce_letters(letters: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(letters.len());
    for &l in letters {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Shift endomorphism: `σ_i ↦ σ_{i+k}`.
pub fn braid_shift(w: &BraidWord, k: u32) -> BraidWord {
    let k = k as i32;
    BraidWord(
        w.0.iter()
            .map(|&l| if l > 0 { l + k } else { l - k })
            .collect(),
    )
}

/// The self-distributive operation `b * c = b · sh(c) · σ_1 · sh(b)^{-1}`.
pub fn braid_ld(b: &BraidWord, c: &BraidWord) -> BraidWord {
    let mut out = Vec::with_capacity(2 * b.len() + c.len() + 1);
    out.extend_from_slice(&b.0);
    out.extend(c.0.iter().map(|&l| if l > 0 { l + 1 } else { l - 1 }));
    out.push(1);
    out.extend(
        b.0.iter()
            .rev()
            .map(|&l| if l > 0 { -(l + 1) } else { -l + 1 }),
    );
    BraidWord(out)
}

/// Evaluate a one-variable `*`-term at `g` under [`braid_ld`].
pub fn eval_star_braid(t: &Term, g: &BraidWord) -> Result<BraidWord> {
    if !t.is_one_variable_star_term() {
        return Err(Error::NotStarTerm(t.to_string()));
    }
    fn go(t: &Term, g: &BraidWord) -> BraidWord {
        match t {
            Term::Var(_) => g.clone(),
            Term::Node(Op::Star, l, r) => braid_ld(&go(l, g), &go(r, g)),
            Term::Node(Op::Circ, ..) => unreachable!("checked star term"),
        }
    }
    Ok(go(t, g))
}
