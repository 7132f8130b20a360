//! Terms with a left-self-distributive `*` and an associative-like `o`,
//! their normal forms, braid-based decision procedures and the
//! parenthesized braid group.

pub mod ald;
pub mod braid;
pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod experiment;
pub mod ld;
pub mod pb;
pub mod rewrite;
pub mod term;

pub use ald::{decide_ald, derive_special, invariants, specialize, AldClassKey, Verdict};
pub use braid::{braid_compare, braid_equal, handle_reduce, BraidWord};
pub use diagram::{diagram_equal, word_to_diagram, PBDiagram};
pub use error::{Error, Result};
pub use ld::{DefaultOracle, LdOracle, LdVerdict};
pub use pb::{pb_eval_term, PBWord};
pub use rewrite::{Direction, Law, LawInstance};
pub use term::{parse_term, Op, Position, Term, TermSeq};
