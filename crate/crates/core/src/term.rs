//! Binary terms over `*` and `o`, sequences of terms, and the syntactic
//! relations used by the decision procedures.
//!
//! Omitted parentheses associate to the right: `x*x*x` is `x*(x*x)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The two binary operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    /// The self-distributive operation `*`.
    Star,
    /// The composition-like operation `o`.
    Circ,
}

impl Op {
    fn symbol(self) -> &'static str {
        match self {
            Op::Star => "*",
            Op::Circ => " o ",
        }
    }
}

/// A term of the absolutely free algebra on variables `x1, x2, ...`.
///
/// The derived `Ord` puts variables first, then compounds by operator,
/// left child and right child.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(u32),
    Node(Op, Box<Term>, Box<Term>),
}

/// One step of a root-to-node path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    L,
    R,
}

/// A root-to-node path in a term tree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position(pub Vec<Side>);

impl Position {
    pub fn root() -> Self {
        Position(Vec::new())
    }

    pub fn child(&self, side: Side) -> Self {
        let mut steps = self.0.clone();
        steps.push(side);
        Position(steps)
    }

    pub fn left(&self) -> Self {
        self.child(Side::L)
    }

    pub fn right(&self) -> Self {
        self.child(Side::R)
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    /// True when every step goes right, i.e. the node lies on the rightmost branch.
    pub fn on_right_spine(&self) -> bool {
        self.0.iter().all(|s| *s == Side::R)
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("root");
        }
        for s in &self.0 {
            f.write_str(match s {
                Side::L => "L",
                Side::R => "R",
            })?;
        }
        Ok(())
    }
}

impl FromStr for Position {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "root" {
            return Ok(Position::root());
        }
        s.chars()
            .map(|c| match c {
                'L' | 'l' => Ok(Side::L),
                'R' | 'r' => Ok(Side::R),
                _ => Err(Error::BadPosition(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(Position)
    }
}

impl Term {
    /// The variable `x_i`; `i` must be at least 1.
    pub fn var(i: u32) -> Result<Term> {
        if i == 0 {
            return Err(Error::ZeroIndex);
        }
        Ok(Term::Var(i))
    }

    /// The variable `x` (alias of `x1`).
    pub fn x() -> Term {
        Term::Var(1)
    }

    pub fn node(op: Op, left: Term, right: Term) -> Term {
        Term::Node(op, Box::new(left), Box::new(right))
    }

    pub fn star(left: Term, right: Term) -> Term {
        Term::node(Op::Star, left, right)
    }

    pub fn circ(left: Term, right: Term) -> Term {
        Term::node(Op::Circ, left, right)
    }

    pub fn is_var(&self) -> bool {
        matches!(self, Term::Var(_))
    }

    pub fn op(&self) -> Option<Op> {
        match self {
            Term::Var(_) => None,
            Term::Node(op, _, _) => Some(*op),
        }
    }

    pub fn children(&self) -> Option<(&Term, &Term)> {
        match self {
            Term::Var(_) => None,
            Term::Node(_, l, r) => Some((l, r)),
        }
    }

    /// Number of variable occurrences.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::Node(_, l, r) => l.size() + r.size(),
        }
    }

    /// Length of the rightmost branch.
    pub fn ht_r(&self) -> usize {
        let mut t = self;
        let mut h = 0;
        while let Term::Node(_, _, r) = t {
            h += 1;
            t = r;
        }
        h
    }

    /// Depth of the tree (a variable has depth 0).
    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::Node(_, l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    pub fn contains_op(&self, op: Op) -> bool {
        match self {
            Term::Var(_) => false,
            Term::Node(o, l, r) => *o == op || l.contains_op(op) || r.contains_op(op),
        }
    }

    pub fn max_var(&self) -> u32 {
        match self {
            Term::Var(i) => *i,
            Term::Node(_, l, r) => l.max_var().max(r.max_var()),
        }
    }

    /// Sorted, deduplicated variable indices.
    pub fn variables(&self) -> Vec<u32> {
        fn walk(t: &Term, out: &mut Vec<u32>) {
            match t {
                Term::Var(i) => out.push(*i),
                Term::Node(_, l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn rightmost_var(&self) -> u32 {
        let mut t = self;
        loop {
            match t {
                Term::Var(i) => return *i,
                Term::Node(_, _, r) => t = r,
            }
        }
    }

    /// True when the only variable occurring is `x1`.
    pub fn is_one_variable(&self) -> bool {
        match self {
            Term::Var(i) => *i == 1,
            Term::Node(_, l, r) => l.is_one_variable() && r.is_one_variable(),
        }
    }

    /// Member of `T^*`: no `o` anywhere.
    pub fn is_star_term(&self) -> bool {
        !self.contains_op(Op::Circ)
    }

    /// Member of `T_1^o`: only `o` and `x1`.
    pub fn is_circ_term(&self) -> bool {
        self.is_one_variable() && !self.contains_op(Op::Star)
    }

    /// Member of `T_1^*`.
    pub fn is_one_variable_star_term(&self) -> bool {
        self.is_one_variable() && self.is_star_term()
    }

    pub fn subterm(&self, pos: &Position) -> Option<&Term> {
        let mut t = self;
        for side in &pos.0 {
            match t {
                Term::Var(_) => return None,
                Term::Node(_, l, r) => {
                    t = match side {
                        Side::L => l,
                        Side::R => r,
                    }
                }
            }
        }
        Some(t)
    }

    fn subterm_mut(&mut self, pos: &Position) -> Option<&mut Term> {
        let mut t = self;
        for side in &pos.0 {
            match t {
                Term::Var(_) => return None,
                Term::Node(_, l, r) => {
                    t = match side {
                        Side::L => l.as_mut(),
                        Side::R => r.as_mut(),
                    }
                }
            }
        }
        Some(t)
    }

    /// Copy of `self` with the subterm at `pos` replaced.
    pub fn replace_at(&self, pos: &Position, replacement: Term) -> Result<Term> {
        let mut out = self.clone();
        let slot = out
            .subterm_mut(pos)
            .ok_or_else(|| Error::BadPosition(pos.to_string()))?;
        *slot = replacement;
        Ok(out)
    }

    /// All node positions in preorder.
    pub fn positions(&self) -> Vec<Position> {
        fn walk(t: &Term, here: Position, out: &mut Vec<Position>) {
            if let Term::Node(_, l, r) = t {
                walk(l, here.left(), out);
                walk(r, here.right(), out);
            }
            out.push(here);
        }
        let mut out = Vec::new();
        walk(self, Position::root(), &mut out);
        out.reverse();
        out
    }

    /// Rename every variable to `x1`.
    pub fn collapse_variables(&self) -> Term {
        match self {
            Term::Var(_) => Term::x(),
            Term::Node(op, l, r) => Term::node(*op, l.collapse_variables(), r.collapse_variables()),
        }
    }

    /// Leaves from left to right.
    pub fn leaves(&self) -> Vec<u32> {
        fn walk(t: &Term, out: &mut Vec<u32>) {
            match t {
                Term::Var(i) => out.push(*i),
                Term::Node(_, l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(i) => write!(f, "x{i}"),
            Term::Node(op, l, r) => {
                if l.is_var() {
                    write!(f, "{l}")?;
                } else {
                    write!(f, "({l})")?;
                }
                write!(f, "{}{r}", op.symbol())
            }
        }
    }
}

pub fn render_term(t: &Term) -> String {
    t.to_string()
}

// ---------------------------------------------------------------------------
// Parsing

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self, c: char) {
        self.pos += c.len_utf8();
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn term(&mut self) -> Result<Term> {
        let left = self.primary()?;
        match self.peek() {
            Some(c @ '*') => {
                self.bump(c);
                Ok(Term::star(left, self.term()?))
            }
            Some(c @ ('o' | '∘')) => {
                self.bump(c);
                Ok(Term::circ(left, self.term()?))
            }
            _ => Ok(left),
        }
    }

    fn primary(&mut self) -> Result<Term> {
        match self.peek() {
            Some('(') => {
                self.bump('(');
                let t = self.term()?;
                match self.peek() {
                    Some(')') => {
                        self.bump(')');
                        Ok(t)
                    }
                    Some(c) => self.err(format!("expected `)`, found `{c}`")),
                    None => self.err("expected `)`, found end of input"),
                }
            }
            Some('x') => {
                self.bump('x');
                let start = self.pos;
                let digits: String = self.src[start..]
                    .chars()
                    .take_while(|c| c.is_ascii_digit())
                    .collect();
                if digits.is_empty() {
                    return Ok(Term::x());
                }
                self.pos += digits.len();
                match digits.parse::<u32>() {
                    Ok(0) => Err(Error::Syntax {
                        pos: start,
                        msg: "variable indices start at 1".into(),
                    }),
                    Ok(i) => Ok(Term::Var(i)),
                    Err(_) => Err(Error::Syntax {
                        pos: start,
                        msg: "variable index too large".into(),
                    }),
                }
            }
            Some(c) => self.err(format!("expected a variable or `(`, found `{c}`")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parse a term; `*` and `o` share one precedence level and associate right.
pub fn parse_term(text: &str) -> Result<Term> {
    let mut p = Parser { src: text, pos: 0 };
    let t = p.term()?;
    match p.peek() {
        None => Ok(t),
        Some(c) => p.err(format!("unexpected `{c}`")),
    }
}

impl FromStr for Term {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_term(s)
    }
}

// ---------------------------------------------------------------------------
// Sequences

/// A nonempty finite sequence of terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TermSeq(Vec<Term>);

impl TermSeq {
    pub fn new(entries: Vec<Term>) -> Result<TermSeq> {
        if entries.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(TermSeq(entries))
    }

    pub fn single(t: Term) -> TermSeq {
        TermSeq(vec![t])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    // A TermSeq is never empty; provided for clippy's len_without_is_empty.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[Term] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Term> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Term> {
        self.0.iter()
    }

    /// `s1 * (s2 * (... * (s_l * t)))`.
    pub fn star_prefix(&self, t: &Term) -> Term {
        self.0
            .iter()
            .rev()
            .fold(t.clone(), |acc, s| Term::star(s.clone(), acc))
    }

    /// Sum of entry sizes.
    pub fn total_size(&self) -> usize {
        self.0.iter().map(Term::size).sum()
    }
}

impl fmt::Display for TermSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, t) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str(")")
    }
}

/// The sequence operation: the k-th entry is `s1*...*s_l*t_k`, right-parenthesized.
pub fn seq_star(s: &TermSeq, t: &TermSeq) -> TermSeq {
    TermSeq(t.0.iter().map(|tk| s.star_prefix(tk)).collect())
}

pub fn seq_concat(s: &TermSeq, t: &TermSeq) -> TermSeq {
    let mut out = s.0.clone();
    out.extend(t.0.iter().cloned());
    TermSeq(out)
}

// ---------------------------------------------------------------------------
// Special terms

/// `v[t]`: replace the leaves of the o-term `v` left to right by the entries of `t`.
pub fn substitute(v: &Term, t: &TermSeq) -> Result<Term> {
    if !v.is_circ_term() {
        return Err(Error::NotCircTerm(v.to_string()));
    }
    if v.size() != t.len() {
        return Err(Error::LengthMismatch {
            expected: v.size(),
            got: t.len(),
        });
    }
    fn go(v: &Term, entries: &mut std::slice::Iter<'_, Term>) -> Term {
        match v {
            Term::Var(_) => entries.next().expect("length checked").clone(),
            Term::Node(op, l, r) => {
                let l = go(l, entries);
                let r = go(r, entries);
                Term::node(*op, l, r)
            }
        }
    }
    Ok(go(v, &mut t.0.iter()))
}

/// Split a special term into its o-skeleton and its *-components.
///
/// Returns `None` when some `o` lies below a `*`.
pub fn decompose_special(t: &Term) -> Option<(Term, TermSeq)> {
    fn go(t: &Term, parts: &mut Vec<Term>) -> Option<Term> {
        match t {
            Term::Node(Op::Circ, l, r) => {
                let l = go(l, parts)?;
                let r = go(r, parts)?;
                Some(Term::circ(l, r))
            }
            _ if t.is_star_term() => {
                parts.push(t.clone());
                Some(Term::x())
            }
            _ => None,
        }
    }
    let mut parts = Vec::new();
    let skeleton = go(t, &mut parts)?;
    Some((skeleton, TermSeq(parts)))
}

pub fn is_special(t: &Term) -> bool {
    decompose_special(t).is_some()
}

/// The linear order on `T_1^o`: `x` is least, compounds compare left parts
/// first and right parts on a tie.
pub fn circ_cmp(u: &Term, v: &Term) -> Result<Ordering> {
    for w in [u, v] {
        if !w.is_circ_term() {
            return Err(Error::NotCircTerm(w.to_string()));
        }
    }
    Ok(circ_cmp_unchecked(u, v))
}

pub(crate) fn circ_cmp_unchecked(u: &Term, v: &Term) -> Ordering {
    match (u, v) {
        (Term::Var(_), Term::Var(_)) => Ordering::Equal,
        (Term::Var(_), Term::Node(..)) => Ordering::Less,
        (Term::Node(..), Term::Var(_)) => Ordering::Greater,
        (Term::Node(_, u1, u2), Term::Node(_, v1, v2)) => {
            circ_cmp_unchecked(u1, v1).then_with(|| circ_cmp_unchecked(u2, v2))
        }
    }
}

pub fn circ_less(u: &Term, v: &Term) -> Result<bool> {
    Ok(circ_cmp(u, v)? == Ordering::Less)
}

/// `s ⊏ t`: `t = (...((s*t1)*t2)...)*tp` for some `p >= 1`.
pub fn is_iter_left_subterm(s: &Term, t: &Term) -> bool {
    let mut cur = t;
    while let Term::Node(Op::Star, l, _) = cur {
        if l.as_ref() == s {
            return true;
        }
        cur = l;
    }
    false
}

/// Sequence version of `⊏`: equal lengths, equal entries before some `k`,
/// and `s_k ⊏ t_k`.
pub fn seq_sq(s: &TermSeq, t: &TermSeq) -> bool {
    if s.len() != t.len() {
        return false;
    }
    match s.iter().zip(t.iter()).find(|(a, b)| a != b) {
        Some((a, b)) => is_iter_left_subterm(a, b),
        None => false,
    }
}

/// The right comb `x o (x o (... o x))` with `n` leaves.
pub fn x_power(n: usize) -> Result<Term> {
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    Ok((1..n).fold(Term::x(), |acc, _| Term::circ(Term::x(), acc)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    #[test]
    fn parses_worked_example() {
        let t = p("x1*((x2*x3)o x4)");
        let expected = Term::star(
            Term::Var(1),
            Term::circ(Term::star(Term::Var(2), Term::Var(3)), Term::Var(4)),
        );
        assert_eq!(t, expected);
        assert_eq!(t.size(), 4);
    }

    #[test]
    fn bare_x_is_x1_and_right_association() {
        assert_eq!(p("x"), Term::Var(1));
        assert_eq!(p("x*(x*x)"), p("x*x*x"));
        assert_eq!(
            p("x o x * x"),
            Term::circ(Term::x(), Term::star(Term::x(), Term::x()))
        );
        assert_eq!(p("x ∘ x"), p("xox"));
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert!(matches!(
            parse_term("x*"),
            Err(Error::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_term("(x*x"),
            Err(Error::Syntax { pos: 4, .. })
        ));
        assert!(matches!(
            parse_term("x0"),
            Err(Error::Syntax { pos: 1, .. })
        ));
        assert!(matches!(
            parse_term("x y"),
            Err(Error::Syntax { pos: 2, .. })
        ));
        assert!(matches!(parse_term(""), Err(Error::Syntax { pos: 0, .. })));
    }

    #[test]
    fn renders_minimal_parentheses() {
        assert_eq!(p("x1*((x2*x3)o x4)").to_string(), "x1*(x2*x3) o x4");
        assert_eq!(p("(x1*x2) o x3").to_string(), "(x1*x2) o x3");
        assert_eq!(p("(x*x)*x").to_string(), "(x1*x1)*x1");
        assert_eq!(p("x*(x*x)").to_string(), "x1*x1*x1");
    }

    #[test]
    fn size_and_ht_r() {
        assert_eq!(p("x").size(), 1);
        assert_eq!(p("x o (x o x)").size(), 3);
        assert_eq!(p("x").ht_r(), 0);
        assert_eq!(p("(x*x) o x").ht_r(), 1);
        assert_eq!(p("x*(x*x)").ht_r(), 2);
        assert_eq!(p("(x o x)*x").ht_r(), 1);
    }

    #[test]
    fn seq_star_examples() {
        let s1 = p("x1");
        let s2 = p("x2");
        let t1 = p("x3");
        let t2 = p("x4");
        let one = TermSeq::single(s1.clone());
        assert_eq!(
            seq_star(&one, &TermSeq::single(t1.clone())),
            TermSeq::single(Term::star(s1.clone(), t1.clone()))
        );
        let two = TermSeq::new(vec![s1.clone(), s2.clone()]).unwrap();
        assert_eq!(
            seq_star(&two, &TermSeq::single(t1.clone())),
            TermSeq::single(p("x1*(x2*x3)"))
        );
        let ts = TermSeq::new(vec![t1, t2]).unwrap();
        assert_eq!(
            seq_star(&one, &ts),
            TermSeq::new(vec![p("x1*x3"), p("x1*x4")]).unwrap()
        );
    }

    #[test]
    fn seq_concat_lengths_and_associativity() {
        let a = TermSeq::single(p("x1"));
        let b = TermSeq::single(p("x2"));
        let c = TermSeq::single(p("x3"));
        assert_eq!(seq_concat(&a, &b).entries(), &[p("x1"), p("x2")]);
        assert_eq!(
            seq_concat(&seq_concat(&a, &b), &c),
            seq_concat(&a, &seq_concat(&b, &c))
        );
        let two = seq_concat(&a, &b);
        let three = seq_concat(&two, &c);
        assert_eq!(seq_concat(&two, &three).len(), 5);
        assert!(TermSeq::new(vec![]).is_err());
    }

    #[test]
    fn substitution_examples() {
        let t1 = p("x1*(x2*x3)");
        let t2 = p("x1*x4");
        let seq = TermSeq::new(vec![t1.clone(), t2.clone()]).unwrap();
        assert_eq!(
            substitute(&p("x o x"), &seq).unwrap(),
            p("(x1*(x2*x3)) o (x1*x4)")
        );
        assert_eq!(
            substitute(&p("x"), &TermSeq::single(t1.clone())).unwrap(),
            t1
        );
        assert_eq!(
            substitute(&p("x o x"), &TermSeq::single(t1.clone())),
            Err(Error::LengthMismatch {
                expected: 2,
                got: 1
            })
        );
        assert!(matches!(
            substitute(&p("x*x"), &seq),
            Err(Error::NotCircTerm(_))
        ));
    }

    #[test]
    fn decompose_examples() {
        let (v, seq) = decompose_special(&p("(x1*x2) o x1")).unwrap();
        assert_eq!(v, p("x o x"));
        assert_eq!(seq.entries(), &[p("x1*x2"), p("x1")]);
        assert!(decompose_special(&p("x1*(x2 o x3)")).is_none());
        let (v, seq) = decompose_special(&p("x1*x2")).unwrap();
        assert_eq!(v, p("x"));
        assert_eq!(seq.entries(), &[p("x1*x2")]);
    }

    #[test]
    fn circ_order_examples() {
        assert!(circ_less(&p("x"), &p("x o x")).unwrap());
        assert!(circ_less(&p("x o (x o x)"), &p("(x o x) o x")).unwrap());
        assert!(!circ_less(&p("x o x"), &p("x o x")).unwrap());
        assert!(circ_less(&p("x*x"), &p("x")).is_err());
    }

    #[test]
    fn iter_left_subterm_examples() {
        let s = p("x2 o x1");
        let t = Term::star(Term::star(s.clone(), p("x3")), p("x4"));
        assert!(is_iter_left_subterm(&s, &t));
        assert!(!is_iter_left_subterm(&s, &s));
        assert!(!is_iter_left_subterm(&s, &Term::star(p("x3"), s.clone())));
    }

    #[test]
    fn seq_sq_examples() {
        let a = p("x2");
        let s = p("x1");
        let t = Term::star(Term::star(s.clone(), p("x3")), p("x4"));
        let left = TermSeq::new(vec![a.clone(), s]).unwrap();
        let right = TermSeq::new(vec![a.clone(), t]).unwrap();
        assert!(seq_sq(&left, &right));
        let short = TermSeq::single(a.clone());
        let long = TermSeq::new(vec![a.clone(), p("x3")]).unwrap();
        assert!(!seq_sq(&short, &long));
        assert!(!seq_sq(&long, &long));
    }

    #[test]
    fn x_power_examples() {
        assert_eq!(x_power(1).unwrap(), p("x"));
        assert_eq!(x_power(3).unwrap(), p("x o (x o x)"));
        for n in 1..10 {
            assert_eq!(x_power(n).unwrap().size(), n);
        }
        assert!(x_power(0).is_err());
    }

    #[test]
    fn positions_and_replacement() {
        let t = p("x1*(x2 o x3)");
        let pos: Position = "R".parse().unwrap();
        assert_eq!(t.subterm(&pos), Some(&p("x2 o x3")));
        assert_eq!(t.replace_at(&pos, p("x4")).unwrap(), p("x1*x4"));
        assert_eq!(t.positions().len(), 5);
        assert!(t.subterm(&"LL".parse().unwrap()).is_none());
    }
}
