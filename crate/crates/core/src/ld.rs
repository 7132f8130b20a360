//! LD-equivalence of `*`-terms.
//!
//! One-variable terms are decided (and ordered) by evaluating them at the
//! trivial braid: the `*`-closure of a braid is a free LD-system of rank 1,
//! so evaluation is a complete invariant and the braid order transfers.
//! Other terms get a bounded bidirectional search.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Mutex;

use serde::Serialize;

use crate::braid::{braid_compare, eval_star_braid, BraidWord};
use crate::error::{Error, Result};
use crate::rewrite::{neighbors_for, Law};
use crate::term::{is_iter_left_subterm, Op, Term, TermSeq};

pub const DEFAULT_STEP_CAP: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum LdVerdict {
    Equal,
    Less,
    Greater,
    /// Proven different without an order (variable-set or rightmost-variable filter).
    NotEqual,
    /// Search budget exhausted; carries the number of expansions spent.
    Unknown(usize),
}

impl LdVerdict {
    pub fn from_ordering(o: Ordering) -> Self {
        match o {
            Ordering::Less => LdVerdict::Less,
            Ordering::Equal => LdVerdict::Equal,
            Ordering::Greater => LdVerdict::Greater,
        }
    }

    pub fn is_equal(self) -> bool {
        self == LdVerdict::Equal
    }

    /// True for every definite "different" answer.
    pub fn is_different(self) -> bool {
        matches!(
            self,
            LdVerdict::Less | LdVerdict::Greater | LdVerdict::NotEqual
        )
    }

    pub fn is_unknown(self) -> bool {
        matches!(self, LdVerdict::Unknown(_))
    }

    pub fn ordering(self) -> Option<Ordering> {
        match self {
            LdVerdict::Less => Some(Ordering::Less),
            LdVerdict::Equal => Some(Ordering::Equal),
            LdVerdict::Greater => Some(Ordering::Greater),
            _ => None,
        }
    }
}

impl fmt::Display for LdVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LdVerdict::Equal => f.write_str("Equal"),
            LdVerdict::Less => f.write_str("Less"),
            LdVerdict::Greater => f.write_str("Greater"),
            LdVerdict::NotEqual => f.write_str("NotEqual"),
            LdVerdict::Unknown(n) => write!(f, "Unknown({n})"),
        }
    }
}

/// Something that decides (or bounds) LD-equivalence of `*`-terms.
pub trait LdOracle: Send + Sync {
    fn compare(&self, s: &Term, t: &Term) -> LdVerdict;
}

impl<O: LdOracle + ?Sized> LdOracle for &O {
    fn compare(&self, s: &Term, t: &Term) -> LdVerdict {
        (**self).compare(s, t)
    }
}

/// The braid evaluation of a one-variable `*`-term at the identity.
pub fn ld_braid(t: &Term) -> Result<BraidWord> {
    eval_star_braid(t, &BraidWord::identity())
}

/// Complete decision and comparison for one-variable `*`-terms.
pub fn decide_ld_1var(s: &Term, t: &Term) -> Result<Ordering> {
    let bs = ld_braid(s)?;
    let bt = ld_braid(t)?;
    Ok(braid_compare(&bs, &bt))
}

/// Necessary conditions for LD-equivalence: same variable set and same
/// rightmost variable. Returns false when they certainly differ.
pub fn ld_filters_agree(s: &Term, t: &Term) -> bool {
    s.rightmost_var() == t.rightmost_var() && s.variables() == t.variables()
}

pub fn default_size_cap(s: &Term, t: &Term) -> usize {
    2 * s.size().max(t.size()) + 3
}

/// Bounded bidirectional closure under LD steps.
///
/// `Equal` only when a rewriting path inside the caps joins `s` and `t`;
/// `NotEqual` when a cheap invariant separates them; `Unknown` otherwise.
pub fn decide_ld_bounded(s: &Term, t: &Term, size_cap: usize, step_cap: usize) -> LdVerdict {
    if s == t {
        return LdVerdict::Equal;
    }
    if !ld_filters_agree(s, t) {
        return LdVerdict::NotEqual;
    }
    let mut seen: [HashSet<Term>; 2] = [HashSet::new(), HashSet::new()];
    let mut queue: [VecDeque<Term>; 2] = [VecDeque::new(), VecDeque::new()];
    seen[0].insert(s.clone());
    seen[1].insert(t.clone());
    queue[0].push_back(s.clone());
    queue[1].push_back(t.clone());
    let mut spent = 0usize;
    while spent < step_cap {
        let side = match (queue[0].is_empty(), queue[1].is_empty()) {
            (true, true) => break,
            (false, true) => 0,
            (true, false) => 1,
            (false, false) => usize::from(queue[1].len() < queue[0].len()),
        };
        let cur = queue[side].pop_front().expect("nonempty side");
        spent += 1;
        for (_, next) in neighbors_for(&cur, &[Law::LD]) {
            if next.size() > size_cap || seen[side].contains(&next) {
                continue;
            }
            if seen[1 - side].contains(&next) {
                return LdVerdict::Equal;
            }
            seen[side].insert(next.clone());
            queue[side].push_back(next);
        }
        if queue[side].is_empty() && queue[1 - side].is_empty() {
            break;
        }
    }
    LdVerdict::Unknown(spent)
}

/// Breadth-first LD-closure of `t` within the caps, in discovery order.
/// The flag reports whether the closure finished before `step_cap`.
pub fn ld_closure(t: &Term, size_cap: usize, step_cap: usize) -> (Vec<Term>, bool) {
    let mut order = vec![t.clone()];
    let mut seen: HashSet<Term> = HashSet::from([t.clone()]);
    let mut head = 0;
    while head < order.len() {
        if head >= step_cap {
            return (order, false);
        }
        let cur = order[head].clone();
        head += 1;
        for (_, next) in neighbors_for(&cur, &[Law::LD]) {
            if next.size() <= size_cap && seen.insert(next.clone()) {
                order.push(next);
            }
        }
    }
    (order, true)
}

/// Sequences agree when lengths match and every entry pair is `Equal`.
/// `None` when some pair is undecided and none is definitely different.
pub fn seq_ld_equal(s: &TermSeq, t: &TermSeq, oracle: &dyn LdOracle) -> Option<bool> {
    if s.len() != t.len() {
        return Some(false);
    }
    let mut unknown = false;
    for (a, b) in s.iter().zip(t.iter()) {
        let v = oracle.compare(a, b);
        if v.is_different() {
            return Some(false);
        }
        if v.is_unknown() {
            unknown = true;
        }
    }
    if unknown {
        None
    } else {
        Some(true)
    }
}

/// LD-representatives `(s', t')` of `s` and `t` related syntactically by `⊏`:
/// `s' ⊏ t'` when `s < t`, and `t' ⊏ s'` when `s > t`.
pub fn find_sq_witness(
    s: &Term,
    t: &Term,
    size_cap: usize,
    step_cap: usize,
) -> Result<Option<(Term, Term)>> {
    let order = decide_ld_1var(s, t)?;
    let (lower, upper) = match order {
        Ordering::Equal => return Err(Error::EqualInputs),
        Ordering::Less => (s, t),
        Ordering::Greater => (t, s),
    };
    let (low_closure, _) = ld_closure(lower, size_cap, step_cap);
    let low_set: HashSet<&Term> = low_closure.iter().collect();
    let (up_closure, _) = ld_closure(upper, size_cap, step_cap);
    for candidate in &up_closure {
        let mut cur = candidate;
        while let Term::Node(Op::Star, l, _) = cur {
            if let Some(&found) = low_set.get(l.as_ref()) {
                debug_assert!(is_iter_left_subterm(found, candidate));
                let (lo, up) = (found.clone(), candidate.clone());
                return Ok(Some(match order {
                    Ordering::Less => (lo, up),
                    _ => (up, lo),
                }));
            }
            cur = l;
        }
    }
    Ok(None)
}

/// Braid-evaluation oracle; total on one-variable `*`-terms, `Unknown(0)` elsewhere.
#[derive(Clone, Copy, Debug, Default)]
pub struct BraidOracle;

impl LdOracle for BraidOracle {
    fn compare(&self, s: &Term, t: &Term) -> LdVerdict {
        match decide_ld_1var(s, t) {
            Ok(o) => LdVerdict::from_ordering(o),
            Err(_) if !ld_filters_agree(s, t) => LdVerdict::NotEqual,
            Err(_) => LdVerdict::Unknown(0),
        }
    }
}

/// Bounded-search oracle with explicit caps (`size_cap = None` picks
/// [`default_size_cap`] per pair).
#[derive(Clone, Copy, Debug)]
pub struct BoundedOracle {
    pub size_cap: Option<usize>,
    pub step_cap: usize,
}

impl Default for BoundedOracle {
    fn default() -> Self {
        BoundedOracle {
            size_cap: None,
            step_cap: DEFAULT_STEP_CAP,
        }
    }
}

impl LdOracle for BoundedOracle {
    fn compare(&self, s: &Term, t: &Term) -> LdVerdict {
        let cap = self.size_cap.unwrap_or_else(|| default_size_cap(s, t));
        decide_ld_bounded(s, t, cap, self.step_cap)
    }
}

/// Braid evaluation for one-variable pairs, bounded search for the rest.
#[derive(Clone, Copy, Debug, Default)]
pub struct DefaultOracle {
    pub bounded: BoundedOracle,
}

impl LdOracle for DefaultOracle {
    fn compare(&self, s: &Term, t: &Term) -> LdVerdict {
        if s.is_one_variable_star_term() && t.is_one_variable_star_term() {
            BraidOracle.compare(s, t)
        } else {
            self.bounded.compare(s, t)
        }
    }
}

/// Memoizing wrapper; safe to share between threads.
pub struct CachedOracle<O> {
    inner: O,
    cache: Mutex<HashMap<(Term, Term), LdVerdict>>,
}

impl<O: LdOracle> CachedOracle<O> {
    pub fn new(inner: O) -> Self {
        CachedOracle {
            inner,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn len(&self) -> usize {
        self.cache.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl<O: LdOracle> LdOracle for CachedOracle<O> {
    fn compare(&self, s: &Term, t: &Term) -> LdVerdict {
        let key = (s.clone(), t.clone());
        if let Some(v) = self.cache.lock().expect("cache lock").get(&key) {
            return *v;
        }
        let v = self.inner.compare(s, t);
        let mut cache = self.cache.lock().expect("cache lock");
        cache.insert(key, v);
        let flipped = match v {
            LdVerdict::Less => LdVerdict::Greater,
            LdVerdict::Greater => LdVerdict::Less,
            other => other,
        };
        cache.insert((t.clone(), s.clone()), flipped);
        v
    }
}
