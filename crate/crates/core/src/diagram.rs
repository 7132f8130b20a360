//! Tree-braid-tree diagrams modelling the parenthesized braid group.
//!
//! A diagram `(dom, b, cod)` has `n` strands: `dom` and `cod` are binary
//! trees with `n` leaves and `b` is a braid word with indices below `n`.
//! The rightmost leaf stands for the infinite tail, and its strand never crosses.
//! Diagrams are read top to bottom, so `d1 · d2` stacks `d2` under `d1`.
//!
//! Splitting a strand into two parallel strands adds a caret to the
//! matching leaves of both trees and cables the braid. Two diagrams are
//! equal when they have a common splitting. Comparing both after splitting
//! up to the union of their domains is exact, because cabling is injective
//! and splittings commute.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::braid::{
    braid_equal, braid_shift, free_reduce, garside_normal_form, BraidWord, GarsideNormalForm,
};
use crate::error::{Error, Result};
use crate::pb::{Family, PBWord};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree {
    Leaf,
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn caret(l: Tree, r: Tree) -> Tree {
        Tree::Node(Box::new(l), Box::new(r))
    }

    /// The right comb with `n` leaves, the shape of `x o (x o ... )`.
    pub fn right_comb(n: usize) -> Tree {
        assert!(n >= 1);
        (1..n).fold(Tree::Leaf, |acc, _| Tree::caret(Tree::Leaf, acc))
    }

    pub fn leaves(&self) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    pub fn carets(&self) -> usize {
        self.leaves() - 1
    }

    /// Replace leaf `k` (0-based) by a caret.
    pub fn split_leaf(&self, k: usize) -> Tree {
        fn go(t: &Tree, k: usize) -> (Tree, usize) {
            match t {
                Tree::Leaf if k == 0 => (Tree::caret(Tree::Leaf, Tree::Leaf), 1),
                Tree::Leaf => (Tree::Leaf, 1),
                Tree::Node(l, r) => {
                    let (l2, nl) = go(l, k);
                    if k < nl {
                        (Tree::Node(Box::new(l2), r.clone()), nl + r.leaves())
                    } else {
                        let (r2, nr) = go(r, k - nl);
                        (Tree::Node(l.clone(), Box::new(r2)), nl + nr)
                    }
                }
            }
        }
        assert!(k < self.leaves(), "leaf {k} out of range");
        go(self, k).0
    }

    /// Collapse the caret over leaves `k, k+1`, if they are siblings.
    pub fn merge_at(&self, k: usize) -> Option<Tree> {
        fn go(t: &Tree, k: usize) -> Option<Tree> {
            match t {
                Tree::Leaf => None,
                Tree::Node(l, r) => {
                    if k == 0 && **l == Tree::Leaf && **r == Tree::Leaf {
                        return Some(Tree::Leaf);
                    }
                    let nl = l.leaves();
                    if k < nl {
                        go(l, k).map(|l2| Tree::Node(Box::new(l2), r.clone()))
                    } else {
                        go(r, k - nl).map(|r2| Tree::Node(l.clone(), Box::new(r2)))
                    }
                }
            }
        }
        go(self, k)
    }

    /// Left leaf indices of the carets whose children are both leaves.
    pub fn sibling_pairs(&self) -> Vec<usize> {
        fn go(t: &Tree, offset: usize, out: &mut Vec<usize>) -> usize {
            match t {
                Tree::Leaf => 1,
                Tree::Node(l, r) => {
                    if **l == Tree::Leaf && **r == Tree::Leaf {
                        out.push(offset);
                    }
                    let nl = go(l, offset, out);
                    nl + go(r, offset + nl, out)
                }
            }
        }
        let mut out = Vec::new();
        go(self, 0, &mut out);
        out
    }

    /// Smallest tree containing both.
    pub fn union(&self, other: &Tree) -> Tree {
        match (self, other) {
            (Tree::Leaf, t) | (t, Tree::Leaf) => t.clone(),
            (Tree::Node(a, b), Tree::Node(c, d)) => Tree::caret(a.union(c), b.union(d)),
        }
    }

    /// First leaf of `self` under which `target` has a caret; `target` must
    /// contain `self`.
    fn first_missing_leaf(&self, target: &Tree) -> Option<usize> {
        fn go(t: &Tree, target: &Tree, offset: usize) -> std::result::Result<usize, usize> {
            match (t, target) {
                (Tree::Leaf, Tree::Leaf) => Err(1),
                (Tree::Leaf, Tree::Node(..)) => Ok(offset),
                (Tree::Node(..), Tree::Leaf) => panic!("target does not contain tree"),
                (Tree::Node(a, b), Tree::Node(c, d)) => {
                    let na = match go(a, c, offset) {
                        Ok(k) => return Ok(k),
                        Err(na) => na,
                    };
                    match go(b, d, offset + na) {
                        Ok(k) => Ok(k),
                        Err(nb) => Err(na + nb),
                    }
                }
            }
        }
        go(self, target, 0).ok()
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf => f.write_str("x"),
            Tree::Node(l, r) => write!(f, "({l}{r})"),
        }
    }
}

impl FromStr for Tree {
    type Err = Error;

    /// `x` is a leaf, `(AB)` a caret; whitespace is ignored.
    fn from_str(s: &str) -> Result<Tree> {
        let chars: Vec<(usize, char)> = s
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        fn parse(chars: &[(usize, char)], i: &mut usize, end: usize) -> Result<Tree> {
            match chars.get(*i) {
                Some((_, 'x')) => {
                    *i += 1;
                    Ok(Tree::Leaf)
                }
                Some((_, '(')) => {
                    *i += 1;
                    let l = parse(chars, i, end)?;
                    let r = parse(chars, i, end)?;
                    match chars.get(*i) {
                        Some((_, ')')) => {
                            *i += 1;
                            Ok(Tree::caret(l, r))
                        }
                        Some(&(pos, c)) => Err(Error::Syntax {
                            pos,
                            msg: format!("expected `)`, found `{c}`"),
                        }),
                        None => Err(Error::Syntax {
                            pos: end,
                            msg: "expected `)`".into(),
                        }),
                    }
                }
                Some(&(pos, c)) => Err(Error::Syntax {
                    pos,
                    msg: format!("expected `x` or `(`, found `{c}`"),
                }),
                None => Err(Error::Syntax {
                    pos: end,
                    msg: "unexpected end of tree".into(),
                }),
            }
        }
        let mut i = 0;
        let t = parse(&chars, &mut i, s.len())?;
        if let Some(&(pos, c)) = chars.get(i) {
            return Err(Error::Syntax {
                pos,
                msg: format!("trailing `{c}`"),
            });
        }
        Ok(t)
    }
}

// ---------------------------------------------------------------------------
// Braid surgery

/// Double the strand starting at position `p` (0-based).
pub fn cable(b: &BraidWord, p: usize) -> BraidWord {
    let mut pos = p as i32 + 1;
    let mut out = Vec::with_capacity(b.len() + 8);
    for &l in b.letters() {
        let k = l.abs();
        let s = l.signum();
        if k == pos {
            out.extend([s * (pos + 1), s * pos]);
            pos += 1;
        } else if k + 1 == pos {
            out.extend([s * k, s * (k + 1)]);
            pos = k;
        } else if k > pos {
            out.push(s * (k + 1));
        } else {
            out.push(l);
        }
    }
    BraidWord::new(out).expect("indices stay positive")
}

/// Remove the strand starting at position `p` (0-based).
pub fn delete_strand(b: &BraidWord, p: usize) -> BraidWord {
    let mut pos = p as i32 + 1;
    let mut out = Vec::with_capacity(b.len());
    for &l in b.letters() {
        let k = l.abs();
        if k == pos {
            pos += 1;
        } else if k + 1 == pos {
            pos = k;
        } else if k > pos {
            out.push(l.signum() * (k - 1));
        } else {
            out.push(l);
        }
    }
    BraidWord::new(out).expect("indices stay positive")
}

// ---------------------------------------------------------------------------
// Diagrams

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PBDiagram {
    dom: Tree,
    braid: BraidWord,
    cod: Tree,
}

/// A caret of `dom` over leaves `(p, p+1)` whose strands end on the caret
/// of `cod` over `(q, q+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionSite {
    pub dom_pair: usize,
    pub cod_pair: usize,
}

impl PBDiagram {
    pub fn new(dom: Tree, braid: BraidWord, cod: Tree) -> Result<PBDiagram> {
        let n = dom.leaves();
        if cod.leaves() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: cod.leaves(),
            });
        }
        if braid.max_index() as usize >= n {
            return Err(Error::StrandOutOfRange {
                index: braid.max_index() as usize,
                strands: n,
            });
        }
        Ok(PBDiagram { dom, braid, cod })
    }

    /// Parse the three text parts, e.g. `("(x(xx))", "s1", "((xx)x)")`.
    pub fn from_parts(dom: &str, braid: &str, cod: &str) -> Result<PBDiagram> {
        PBDiagram::new(dom.parse()?, braid.parse()?, cod.parse()?)
    }

    pub fn identity() -> PBDiagram {
        PBDiagram {
            dom: Tree::Leaf,
            braid: BraidWord::identity(),
            cod: Tree::Leaf,
        }
    }

    pub fn dom(&self) -> &Tree {
        &self.dom
    }

    pub fn cod(&self) -> &Tree {
        &self.cod
    }

    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    pub fn strands(&self) -> usize {
        self.dom.leaves()
    }

    pub fn permutation(&self) -> Vec<usize> {
        self.braid.permutation(self.strands())
    }

    fn split_at(&self, p: usize) -> PBDiagram {
        let q = self.permutation()[p];
        PBDiagram {
            dom: self.dom.split_leaf(p),
            braid: cable(&self.braid, p),
            cod: self.cod.split_leaf(q),
        }
    }

    /// Split until `dom` equals `target`, which must contain it.
    fn refine_dom_to(&self, target: &Tree) -> PBDiagram {
        let mut d = self.clone();
        while let Some(p) = d.dom.first_missing_leaf(target) {
            d = d.split_at(p);
        }
        d
    }

    pub fn reduction_sites(&self) -> Vec<ReductionSite> {
        let perm = self.permutation();
        let cod_pairs = self.cod.sibling_pairs();
        self.dom
            .sibling_pairs()
            .into_iter()
            .filter(|&p| perm[p] + 1 == perm[p + 1] && cod_pairs.contains(&perm[p]))
            .map(|p| ReductionSite {
                dom_pair: p,
                cod_pair: perm[p],
            })
            .collect()
    }

    /// The merged diagram, if the two strands of the site run parallel.
    pub fn reduce_at(&self, site: ReductionSite) -> Option<PBDiagram> {
        let p = site.dom_pair;
        let merged = free_reduce(&delete_strand(&self.braid, p + 1));
        let recabled = cable(&merged, p);
        let parallel = free_reduce(&recabled) == free_reduce(&self.braid)
            || braid_equal(&recabled, &self.braid);
        parallel.then(|| PBDiagram {
            dom: self.dom.merge_at(p).expect("site is a caret of dom"),
            braid: merged,
            cod: self
                .cod
                .merge_at(site.cod_pair)
                .expect("site is a caret of cod"),
        })
    }
}

impl fmt::Display for PBDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}] {}", self.dom, self.braid, self.cod)
    }
}

impl Serialize for PBDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Parts {
            dom: String,
            braid: String,
            cod: String,
        }
        Parts {
            dom: self.dom.to_string(),
            braid: self.braid.to_string(),
            cod: self.cod.to_string(),
        }
        .serialize(s)
    }
}

pub fn gen_sigma(i: u32) -> Result<PBDiagram> {
    if i == 0 {
        return Err(Error::ZeroIndex);
    }
    let comb = Tree::right_comb(i as usize + 2);
    Ok(PBDiagram {
        dom: comb.clone(),
        braid: BraidWord::sigma(i),
        cod: comb,
    })
}

pub fn gen_a(i: u32) -> Result<PBDiagram> {
    if i == 0 {
        return Err(Error::ZeroIndex);
    }
    Ok(PBDiagram {
        dom: Tree::right_comb(i as usize + 2),
        braid: BraidWord::identity(),
        cod: Tree::right_comb(i as usize + 1).split_leaf(i as usize - 1),
    })
}

/// Split the strand starting at `dom` leaf `k` (1-based).
pub fn split_strand(d: &PBDiagram, k: usize) -> Result<PBDiagram> {
    if k == 0 || k > d.strands() {
        return Err(Error::StrandOutOfRange {
            index: k,
            strands: d.strands(),
        });
    }
    Ok(d.split_at(k - 1))
}

pub fn diagram_inverse(d: &PBDiagram) -> PBDiagram {
    PBDiagram {
        dom: d.cod.clone(),
        braid: d.braid.inverse(),
        cod: d.dom.clone(),
    }
}

pub fn diagram_multiply(d1: &PBDiagram, d2: &PBDiagram) -> PBDiagram {
    let mid = d1.cod.union(&d2.dom);
    let e1 = diagram_inverse(&diagram_inverse(d1).refine_dom_to(&mid));
    let e2 = d2.refine_dom_to(&mid);
    PBDiagram {
        dom: e1.dom,
        braid: free_reduce(&e1.braid.concat(&e2.braid)),
        cod: e2.cod,
    }
}

/// Model of the shift: a new strand on the left.
pub fn diagram_shift(d: &PBDiagram) -> PBDiagram {
    PBDiagram {
        dom: Tree::caret(Tree::Leaf, d.dom.clone()),
        braid: braid_shift(&d.braid, 1),
        cod: Tree::caret(Tree::Leaf, d.cod.clone()),
    }
}

pub fn word_to_diagram(w: &PBWord) -> PBDiagram {
    w.letters().iter().fold(PBDiagram::identity(), |acc, l| {
        let g = match l.family {
            Family::Sigma => gen_sigma(l.index),
            Family::A => gen_a(l.index),
        }
        .expect("word indices are positive");
        let g = if l.positive { g } else { diagram_inverse(&g) };
        diagram_multiply(&acc, &g)
    })
}

fn reduce_with(d: &PBDiagram, from_right: bool) -> PBDiagram {
    let mut cur = PBDiagram {
        braid: free_reduce(&d.braid),
        ..d.clone()
    };
    'outer: loop {
        let mut sites = cur.reduction_sites();
        if from_right {
            sites.reverse();
        }
        for site in sites {
            if let Some(next) = cur.reduce_at(site) {
                cur = next;
                continue 'outer;
            }
        }
        return cur;
    }
}

/// Merge parallel strand pairs until none is left.
pub fn diagram_reduce(d: &PBDiagram) -> PBDiagram {
    reduce_with(d, false)
}

/// [`diagram_reduce`] trying sites from the right; used to test confluence.
pub fn diagram_reduce_from_right(d: &PBDiagram) -> PBDiagram {
    reduce_with(d, true)
}

/// Exact equality: split both to the union of their domains, then compare
/// codomains and braids.
pub fn diagram_equal(d1: &PBDiagram, d2: &PBDiagram) -> bool {
    let top = d1.dom.union(&d2.dom);
    let e1 = d1.refine_dom_to(&top);
    let e2 = d2.refine_dom_to(&top);
    e1.cod == e2.cod && braid_equal(&e1.braid, &e2.braid)
}

pub fn pb_words_equal(u: &PBWord, v: &PBWord) -> bool {
    diagram_equal(&word_to_diagram(u), &word_to_diagram(v))
}

/// Reduced trees plus the Garside normal form of the reduced braid.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramKey {
    pub dom: Tree,
    pub cod: Tree,
    pub braid: GarsideNormalForm,
}

pub fn diagram_key(d: &PBDiagram) -> DiagramKey {
    let r = diagram_reduce(d);
    let n = r.strands();
    DiagramKey {
        braid: garside_normal_form(&r.braid, n),
        dom: r.dom,
        cod: r.cod,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tree {
        s.parse().unwrap()
    }

    fn b(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn pw(s: &str) -> PBWord {
        s.parse().unwrap()
    }

    #[test]
    fn tree_text_and_shape() {
        assert_eq!(t("(x(xx))"), Tree::right_comb(3));
        assert_eq!(Tree::right_comb(3).to_string(), "(x(xx))");
        assert_eq!(t("x"), Tree::Leaf);
        assert!("(xx".parse::<Tree>().is_err());
        assert!("(xxx)".parse::<Tree>().is_err());
        assert_eq!(t("((xx)(xx))").sibling_pairs(), vec![0, 2]);
        assert_eq!(t("(x(xx))").merge_at(1), Some(t("(xx)")));
        assert_eq!(t("(x(xx))").merge_at(0), None);
        assert_eq!(t("(xx)").split_leaf(1), t("(x(xx))"));
    }

    #[test]
    fn cabling_examples() {
        // a doubled strand crosses its partner twice
        assert_eq!(cable(&b("s1"), 0), b("s2 s1"));
        assert_eq!(cable(&b("s1"), 1), b("s1 s2"));
        assert_eq!(cable(&b("S1 s2"), 2), b("S1 s2 s3"));
        assert_eq!(
            delete_strand(&cable(&b("s1 S2 s1 s3"), 1), 2),
            b("s1 S2 s1 s3")
        );
        assert!(delete_strand(&b("s1 s2"), 0).is_empty());
        assert_eq!(delete_strand(&b("s1 s2"), 1), b("s1"));
    }

    #[test]
    fn generators() {
        let a1 = gen_a(1).unwrap();
        assert_eq!(
            (a1.dom().to_string(), a1.cod().to_string()),
            ("(x(xx))".into(), "((xx)x)".into())
        );
        assert!(a1.braid().is_empty());
        let s1 = gen_sigma(1).unwrap();
        assert_eq!(s1.strands(), 3);
        assert_eq!(s1.braid(), &b("s1"));
        assert_eq!(gen_sigma(2).unwrap().strands(), 4);
        assert!(gen_a(0).is_err());
    }

    #[test]
    fn splitting() {
        let id = split_strand(&PBDiagram::identity(), 1).unwrap();
        assert_eq!(id, PBDiagram::from_parts("(xx)", "", "(xx)").unwrap());
        let s = split_strand(&gen_sigma(1).unwrap(), 1).unwrap();
        assert_eq!(s.strands(), 4);
        assert_eq!(s.braid(), &b("s2 s1"));
        assert!(diagram_equal(&s, &gen_sigma(1).unwrap()));
        assert_eq!(diagram_reduce(&s), gen_sigma(1).unwrap());
        assert!(split_strand(&s, 5).is_err());
    }

    #[test]
    fn products_and_inverses() {
        let s1 = gen_sigma(1).unwrap();
        let s2 = gen_sigma(2).unwrap();
        let a1 = gen_a(1).unwrap();
        let id = PBDiagram::identity();
        assert!(diagram_equal(&diagram_multiply(&s1, &id), &s1));
        assert!(diagram_equal(
            &diagram_multiply(&a1, &diagram_inverse(&a1)),
            &id
        ));
        let lhs = diagram_multiply(&diagram_multiply(&s1, &s2), &s1);
        let rhs = diagram_multiply(&s2, &diagram_multiply(&s1, &s2));
        assert!(diagram_equal(&lhs, &rhs));
        assert!(!diagram_equal(&s1, &a1));
        assert!(!diagram_equal(&s1, &s2));
    }

    #[test]
    fn shift_matches_generators() {
        let id = PBDiagram::identity();
        assert!(diagram_equal(&diagram_shift(&id), &id));
        assert_eq!(diagram_reduce(&diagram_shift(&id)), id);
        assert!(diagram_equal(
            &diagram_shift(&gen_sigma(1).unwrap()),
            &gen_sigma(2).unwrap()
        ));
        assert!(diagram_equal(
            &diagram_shift(&gen_a(1).unwrap()),
            &gen_a(2).unwrap()
        ));
    }

    #[test]
    fn word_examples() {
        assert_eq!(word_to_diagram(&pw("")), PBDiagram::identity());
        assert!(diagram_equal(
            &word_to_diagram(&pw("s1")),
            &gen_sigma(1).unwrap()
        ));
        assert!(diagram_equal(
            &word_to_diagram(&pw("s1 S1")),
            &PBDiagram::identity()
        ));
        let comb = PBDiagram::from_parts("(x(x(x(xx))))", "", "(x(x(x(xx))))").unwrap();
        assert_eq!(diagram_reduce(&comb), PBDiagram::identity());
        assert!(pb_words_equal(&pw("s2 s1 S2"), &pw("S1 s2 s1")));
    }

    #[test]
    fn keys_separate_sigma_and_a() {
        let k1 = diagram_key(&gen_sigma(1).unwrap());
        let k2 = diagram_key(&gen_a(1).unwrap());
        assert_ne!(k1, k2);
        assert_eq!(
            k1,
            diagram_key(&split_strand(&gen_sigma(1).unwrap(), 2).unwrap())
        );
    }
}
