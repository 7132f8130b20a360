//! Exhaustive enumeration of terms by size.

use rand::Rng;

use crate::term::{Op, Term};

/// All terms over `x1..x{n_vars}` using the given operators, of each size
/// from 1 to `max_size`.
///
/// Output is ordered by size, then by the split point of the root, then by
/// operator, then left and right subterms in their own enumeration order.
pub fn enumerate_terms(n_vars: u32, ops: &[Op], max_size: usize) -> Vec<Term> {
    terms_by_size(n_vars, ops, max_size)
        .into_iter()
        .flatten()
        .collect()
}

/// `result[s - 1]` holds every term of size exactly `s`.
pub fn terms_by_size(n_vars: u32, ops: &[Op], max_size: usize) -> Vec<Vec<Term>> {
    let mut ops: Vec<Op> = ops.to_vec();
    ops.sort();
    ops.dedup();
    let mut by_size: Vec<Vec<Term>> = Vec::with_capacity(max_size);
    for size in 1..=max_size {
        let mut level = Vec::new();
        if size == 1 {
            level.extend((1..=n_vars).map(Term::Var));
        } else {
            for left_size in 1..size {
                let right_size = size - left_size;
                for &op in &ops {
                    for l in &by_size[left_size - 1] {
                        for r in &by_size[right_size - 1] {
                            level.push(Term::node(op, l.clone(), r.clone()));
                        }
                    }
                }
            }
        }
        by_size.push(level);
    }
    by_size
}

/// Iterator form of [`enumerate_terms`].
pub fn term_stream(n_vars: u32, ops: &[Op], max_size: usize) -> impl Iterator<Item = Term> {
    enumerate_terms(n_vars, ops, max_size).into_iter()
}

/// A random term with exactly `size` leaves. Split points, operators and
/// variables are drawn uniformly, so shapes are not uniform over all trees.
pub fn random_term<R: Rng>(rng: &mut R, size: usize, n_vars: u32, ops: &[Op]) -> Term {
    assert!(size >= 1 && n_vars >= 1 && !ops.is_empty());
    if size == 1 {
        return Term::Var(rng.gen_range(1..=n_vars));
    }
    let left = rng.gen_range(1..size);
    let op = ops[rng.gen_range(0..ops.len())];
    Term::node(
        op,
        random_term(rng, left, n_vars, ops),
        random_term(rng, size - left, n_vars, ops),
    )
}

/// `Catalan(size - 1) * |ops|^(size - 1) * n_vars^size`, the number of terms
/// of exactly that size.
pub fn count_terms(n_vars: u64, n_ops: u64, size: u32) -> u64 {
    let internal = size as u64 - 1;
    catalan(internal) * n_ops.pow(internal as u32) * n_vars.pow(size)
}

pub fn catalan(n: u64) -> u64 {
    // C(2n, n) / (n + 1), computed incrementally to stay exact.
    let mut c: u64 = 1;
    for k in 0..n {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}
