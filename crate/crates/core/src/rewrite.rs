//! Single rewriting steps of the three laws.
//!
//! | law  | expand                          | contract                       |
//! |------|---------------------------------|--------------------------------|
//! | LD   | `a*(b*c)  -> (a*b)*(a*c)`       | `(a*b)*(a*c) -> a*(b*c)`       |
//! | ALD1 | `(a o b)*c -> a*(b*c)`          | `a*(b*c) -> (a o b)*c`         |
//! | ALD2 | `a*(b o c) -> (a*b) o (a*c)`    | `(a*b) o (a*c) -> a*(b o c)`   |

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::term::{Op, Position, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Law {
    LD,
    ALD1,
    ALD2,
}

impl Law {
    pub const ALL: [Law; 3] = [Law::LD, Law::ALD1, Law::ALD2];
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Law::LD => "LD",
            Law::ALD1 => "ALD1",
            Law::ALD2 => "ALD2",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Direction {
    Expand,
    Contract,
}

impl Direction {
    pub fn flipped(self) -> Direction {
        match self {
            Direction::Expand => Direction::Contract,
            Direction::Contract => Direction::Expand,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Expand => "expand",
            Direction::Contract => "contract",
        })
    }
}

/// One law applied at one position, naming the root of the redex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LawInstance {
    pub law: Law,
    pub position: Position,
    pub direction: Direction,
}

impl LawInstance {
    pub fn new(law: Law, position: Position, direction: Direction) -> Self {
        LawInstance {
            law,
            position,
            direction,
        }
    }

    pub fn flipped(&self) -> LawInstance {
        LawInstance {
            law: self.law,
            position: self.position.clone(),
            direction: self.direction.flipped(),
        }
    }
}

impl fmt::Display for LawInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} at {}", self.law, self.direction, self.position)
    }
}

fn split(t: &Term, op: Op) -> Option<(&Term, &Term)> {
    match t {
        Term::Node(o, l, r) if *o == op => Some((l, r)),
        _ => None,
    }
}

/// Rewrite a redex root; `None` when the pattern does not match.
pub fn rewrite_root(t: &Term, law: Law, direction: Direction) -> Option<Term> {
    use Direction::*;
    use Law::*;
    match (law, direction) {
        (LD, Expand) => {
            let (a, bc) = split(t, Op::Star)?;
            let (b, c) = split(bc, Op::Star)?;
            Some(Term::star(
                Term::star(a.clone(), b.clone()),
                Term::star(a.clone(), c.clone()),
            ))
        }
        (LD, Contract) => {
            let (ab, ac) = split(t, Op::Star)?;
            let (a, b) = split(ab, Op::Star)?;
            let (a2, c) = split(ac, Op::Star)?;
            (a == a2).then(|| Term::star(a.clone(), Term::star(b.clone(), c.clone())))
        }
        (ALD1, Expand) => {
            let (ab, c) = split(t, Op::Star)?;
            let (a, b) = split(ab, Op::Circ)?;
            Some(Term::star(a.clone(), Term::star(b.clone(), c.clone())))
        }
        (ALD1, Contract) => {
            let (a, bc) = split(t, Op::Star)?;
            let (b, c) = split(bc, Op::Star)?;
            Some(Term::star(Term::circ(a.clone(), b.clone()), c.clone()))
        }
        (ALD2, Expand) => {
            let (a, bc) = split(t, Op::Star)?;
            let (b, c) = split(bc, Op::Circ)?;
            Some(Term::circ(
                Term::star(a.clone(), b.clone()),
                Term::star(a.clone(), c.clone()),
            ))
        }
        (ALD2, Contract) => {
            let (ab, ac) = split(t, Op::Circ)?;
            let (a, b) = split(ab, Op::Star)?;
            let (a2, c) = split(ac, Op::Star)?;
            (a == a2).then(|| Term::star(a.clone(), Term::circ(b.clone(), c.clone())))
        }
    }
}

pub fn apply_law(t: &Term, inst: &LawInstance) -> Result<Term> {
    let sub = t
        .subterm(&inst.position)
        .ok_or_else(|| Error::BadPosition(inst.position.to_string()))?;
    let rewritten =
        rewrite_root(sub, inst.law, inst.direction).ok_or_else(|| Error::PatternMismatch {
            law: inst.law.to_string(),
            direction: inst.direction.to_string(),
            position: inst.position.to_string(),
        })?;
    t.replace_at(&inst.position, rewritten)
}

/// Every applicable instance, restricted to the given laws.
pub fn redexes_for(t: &Term, laws: &[Law]) -> Vec<LawInstance> {
    let mut out = Vec::new();
    for pos in t.positions() {
        let sub = t.subterm(&pos).expect("position from positions()");
        if sub.is_var() {
            continue;
        }
        for &law in laws {
            for dir in [Direction::Expand, Direction::Contract] {
                if rewrite_root(sub, law, dir).is_some() {
                    out.push(LawInstance::new(law, pos.clone(), dir));
                }
            }
        }
    }
    out
}

pub fn redexes(t: &Term) -> Vec<LawInstance> {
    redexes_for(t, &Law::ALL)
}

/// Terms reachable in one step, paired with the instance used.
pub fn neighbors_for(t: &Term, laws: &[Law]) -> Vec<(LawInstance, Term)> {
    redexes_for(t, laws)
        .into_iter()
        .map(|inst| {
            let next = apply_law(t, &inst).expect("redex enumerated as applicable");
            (inst, next)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::parse_term;

    fn p(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    fn at_root(law: Law, dir: Direction) -> LawInstance {
        LawInstance::new(law, Position::root(), dir)
    }

    #[test]
    fn root_examples() {
        assert_eq!(
            apply_law(&p("x*(x*x)"), &at_root(Law::LD, Direction::Expand)).unwrap(),
            p("(x*x)*(x*x)")
        );
        assert_eq!(
            apply_law(&p("x*(x*x)"), &at_root(Law::ALD1, Direction::Contract)).unwrap(),
            p("(x o x)*x")
        );
        assert_eq!(
            apply_law(&p("x*(x o x)"), &at_root(Law::ALD2, Direction::Expand)).unwrap(),
            p("(x*x) o (x*x)")
        );
    }

    #[test]
    fn mismatches_are_errors() {
        assert!(matches!(
            apply_law(&p("x o x"), &at_root(Law::LD, Direction::Expand)),
            Err(Error::PatternMismatch { .. })
        ));
        // contraction needs the duplicated factor to agree
        assert!(apply_law(
            &p("(x1*x2)*(x3*x2)"),
            &at_root(Law::LD, Direction::Contract)
        )
        .is_err());
        let deep = LawInstance::new(Law::LD, "LL".parse().unwrap(), Direction::Expand);
        assert!(matches!(
            apply_law(&p("x*x"), &deep),
            Err(Error::BadPosition(_))
        ));
    }

    #[test]
    fn steps_at_inner_positions() {
        let t = p("x1 o (x2*(x3*x4))");
        let inst = LawInstance::new(Law::LD, "R".parse().unwrap(), Direction::Expand);
        assert_eq!(apply_law(&t, &inst).unwrap(), p("x1 o ((x2*x3)*(x2*x4))"));
    }

    #[test]
    fn every_redex_is_undone_by_its_flip() {
        let t = p("(x1 o x2)*(x3*(x1 o x4))");
        let found = redexes(&t);
        assert!(!found.is_empty());
        for inst in found {
            let u = apply_law(&t, &inst).unwrap();
            assert_eq!(apply_law(&u, &inst.flipped()).unwrap(), t, "{inst}");
        }
    }
}
