//! Handle reduction.
//!
//! A σ_i-handle is a factor `σ_i^e u σ_i^{-e}` where `u` has no letter
//! `σ_i^{±1}` or `σ_{i-1}^{±1}`. Reducing it deletes the two ends and
//! replaces every `σ_{i+1}^d` of `u` by `σ_{i+1}^{-e} σ_i^d σ_{i+1}^e`.
//! We always reduce the handle whose right end comes first; such a handle
//! contains no nested handle, so the process terminates.

use std::cmp::Ordering;

use super::{free_reduce_letters, BraidWord};

// Far above anything the test suites reach; hitting it means a bug.
const STEP_CAP: usize = 200_000_000;

/// Returns `(start, end)` of the handle with leftmost right end.
fn first_handle(word: &[i32], open: &mut Vec<Option<(usize, i32)>>) -> Option<(usize, usize)> {
    let top = word
        .iter()
        .map(|l| l.unsigned_abs() as usize)
        .max()
        .unwrap_or(0);
    open.clear();
    open.resize(top + 2, None);
    for (j, &l) in word.iter().enumerate() {
        let i = l.unsigned_abs() as usize;
        let sign = l.signum();
        if let Some((k, s)) = open[i] {
            if s == -sign {
                return Some((k, j));
            }
        }
        open[i] = Some((j, sign));
        open[i + 1] = None;
    }
    None
}

fn reduce_at(word: &[i32], start: usize, end: usize) -> Vec<i32> {
    let head = word[start];
    let i = head.abs();
    let e = head.signum();
    let mut out = Vec::with_capacity(word.len() + 2 * (end - start));
    out.extend_from_slice(&word[..start]);
    for &l in &word[start + 1..end] {
        if l.abs() == i + 1 {
            out.push(-e * (i + 1));
            out.push(l.signum() * i);
            out.push(e * (i + 1));
        } else {
            out.push(l);
        }
    }
    out.extend_from_slice(&word[end + 1..]);
    free_reduce_letters(&out)
}

/// Reduce until no handle remains. The result is empty, σ-positive or
/// σ-negative, and represents the same braid.
pub fn handle_reduce(w: &BraidWord) -> BraidWord {
    let mut word = free_reduce_letters(w.letters());
    let mut open = Vec::new();
    let mut steps = 0usize;
    while let Some((start, end)) = first_handle(&word, &mut open) {
        word = reduce_at(&word, start, end);
        steps += 1;
        assert!(
            steps < STEP_CAP,
            "handle reduction exceeded {STEP_CAP} steps"
        );
    }
    BraidWord::from_letters_unchecked(word)
}

pub fn is_handle_free(w: &BraidWord) -> bool {
    first_handle(w.letters(), &mut Vec::new()).is_none()
}

/// Sign of the lowest-index generator of a handle-free word: `Greater` for
/// σ-positive, `Less` for σ-negative, `Equal` for the empty word.
///
/// Meaningful only on handle-free input, where the lowest generator occurs
/// with a single sign.
pub fn main_sign(w: &BraidWord) -> Ordering {
    match w.min_index() {
        None => Ordering::Equal,
        Some(m) => {
            let l = w
                .letters()
                .iter()
                .find(|l| l.unsigned_abs() == m)
                .expect("min index occurs");
            if *l > 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        }
    }
}

pub fn braid_equal(w1: &BraidWord, w2: &BraidWord) -> bool {
    handle_reduce(&w1.inverse().concat(w2)).is_empty()
}

/// Left-invariant order: `w1 < w2` iff `w1^{-1} w2` is σ-positive.
pub fn braid_compare(w1: &BraidWord, w2: &BraidWord) -> Ordering {
    let r = handle_reduce(&w1.inverse().concat(w2));
    main_sign(&r).reverse()
}
