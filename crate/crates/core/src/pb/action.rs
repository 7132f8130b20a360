//! Partial right action of words on `o`-terms.
//!
//! A term is read as its blocks `v_1 o v_2 o ... o v_m` along the right
//! spine. `a_i` merges blocks `i` and `i+1`, `a_i^{-1}` splits a compound
//! block `i`, and `σ_i^{±1}` swaps blocks `i` and `i+1`. Each letter needs
//! its blocks to lie strictly before the last one.

use serde::Serialize;

use super::word::{Family, Letter, PBWord};
use crate::enumerate::enumerate_terms;
use crate::term::{x_power, Op, Term};

fn blocks(v: &Term) -> Vec<Term> {
    let mut out = Vec::new();
    let mut cur = v;
    while let Term::Node(Op::Circ, l, r) = cur {
        out.push((**l).clone());
        cur = r;
    }
    out.push(cur.clone());
    out
}

fn from_blocks(mut bs: Vec<Term>) -> Term {
    let last = bs.pop().expect("at least one block");
    bs.into_iter().rev().fold(last, |acc, b| Term::circ(b, acc))
}

fn act_letter(bs: &mut Vec<Term>, l: Letter) -> bool {
    let i = l.index as usize - 1;
    match (l.family, l.positive) {
        (Family::Sigma, _) => {
            if bs.len() < i + 3 {
                return false;
            }
            bs.swap(i, i + 1);
        }
        (Family::A, true) => {
            if bs.len() < i + 3 {
                return false;
            }
            let right = bs.remove(i + 1);
            let left = std::mem::replace(&mut bs[i], Term::x());
            bs[i] = Term::circ(left, right);
        }
        (Family::A, false) => {
            if i + 1 >= bs.len() {
                return false;
            }
            match bs[i].clone() {
                Term::Node(Op::Circ, l, r) => {
                    bs[i] = *l;
                    bs.insert(i + 1, *r);
                }
                _ => return false,
            }
        }
    }
    true
}

/// `v · w`, or `None` when some letter is not applicable.
pub fn pb_act_term(v: &Term, w: &PBWord) -> Option<Term> {
    let mut bs = blocks(v);
    for &l in w.letters() {
        if !act_letter(&mut bs, l) {
            return None;
        }
    }
    Some(from_blocks(bs))
}

/// Evidence that a word lies outside the image of the shift: a start term
/// whose first block the word changes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftCertificate {
    pub start: String,
    pub result: String,
    pub first_block_before: String,
    pub first_block_after: String,
}

pub fn default_shift_power(w: &PBWord) -> usize {
    w.a_count() + w.max_index() as usize + 3
}

fn first_block(t: &Term) -> &Term {
    match t {
        Term::Node(Op::Circ, l, _) => l,
        other => other,
    }
}

/// One-sided test for `w ∉ Im ∂`.
///
/// Shifted words never touch the first block, so any start term on which
/// `w` is defined and changes the first block is a certificate. Start terms
/// are `x^[N]` and then `u o x^[N]` for small `o`-terms `u`, which lets
/// words beginning with `a_i^{-1}` act.
pub fn not_in_image_shift(w: &PBWord, n: Option<usize>) -> Option<ShiftCertificate> {
    let n = n.unwrap_or_else(|| default_shift_power(w)).max(1);
    let tail = x_power(n).expect("n >= 1");
    let max_u = (w.a_count() + 1).clamp(1, 5);
    let starts = std::iter::once(tail.clone()).chain(
        enumerate_terms(1, &[Op::Circ], max_u)
            .into_iter()
            .filter(|u| u.size() >= 2)
            .map(|u| Term::circ(u, tail.clone())),
    );
    for start in starts {
        if let Some(result) = pb_act_term(&start, w) {
            let before = first_block(&start);
            let after = first_block(&result);
            if before != after {
                return Some(ShiftCertificate {
                    start: start.to_string(),
                    result: result.to_string(),
                    first_block_before: before.to_string(),
                    first_block_after: after.to_string(),
                });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pb::word::{pb_shift, v_of_1};
    use crate::term::parse_term;

    fn w(s: &str) -> PBWord {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    #[test]
    fn action_examples() {
        assert_eq!(
            pb_act_term(&p("x o (x o x)"), &w("a1")),
            Some(p("(x o x) o x"))
        );
        assert_eq!(
            pb_act_term(&p("(x o x) o (x o (x o x))"), &w("s1")),
            Some(p("x o ((x o x) o (x o x))"))
        );
        assert_eq!(pb_act_term(&p("x o x"), &w("a2")), None);
        assert_eq!(pb_act_term(&p("x o x"), &w("s1")), None);
        assert_eq!(
            pb_act_term(&p("(x o x) o x"), &w("A1")),
            Some(p("x o (x o x)"))
        );
        assert_eq!(pb_act_term(&p("x o x"), &w("A1")), None);
    }

    #[test]
    fn v_of_1_builds_v_from_the_comb() {
        for v in ["x o x", "(x o x) o x", "x o (x o x)", "((x o x) o x) o x"] {
            let v = p(v);
            let start = x_power(v.size() + 3).unwrap();
            let out = pb_act_term(&start, &v_of_1(&v).unwrap()).unwrap();
            assert_eq!(first_block(&out), &v);
        }
    }

    #[test]
    fn shift_certificates() {
        let c = not_in_image_shift(&w("a1"), Some(8)).unwrap();
        assert_eq!(c.first_block_after, "x1 o x1");
        assert!(not_in_image_shift(&w("s2"), Some(8)).is_none());
        assert!(not_in_image_shift(&pb_shift(&w("s1 a2 A1")), None).is_none());
        let u1 = v_of_1(&p("x o x")).unwrap();
        let v1 = v_of_1(&p("(x o x) o x")).unwrap();
        assert!(not_in_image_shift(&u1.inverse().concat(&v1), Some(8)).is_some());
    }
}
