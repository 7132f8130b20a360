//! Left-greedy (Garside) normal form in `B_n`, the second equality engine.
//!
//! A braid is written `Δ^k A_1 ... A_r` with each `A_j` a simple braid
//! (a positive braid in which two strands cross at most once), stored as
//! the permutation `perm[p] = final position of the strand starting at p`.
//! Adjacent factors are left-weighted: every generator that can start
//! `A_{j+1}` already ends `A_j`.

use super::BraidWord;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GarsideNormalForm {
    pub strands: usize,
    pub delta_power: i64,
    pub factors: Vec<Vec<u16>>,
}

type Perm = Vec<u16>;

fn delta(n: usize) -> Perm {
    (0..n).map(|p| (n - 1 - p) as u16).collect()
}

fn is_identity(a: &Perm) -> bool {
    a.iter().enumerate().all(|(p, &q)| p == q as usize)
}

fn inverse(a: &Perm) -> Perm {
    let mut inv = vec![0u16; a.len()];
    for (p, &q) in a.iter().enumerate() {
        inv[q as usize] = p as u16;
    }
    inv
}

/// Conjugation by Δ: `τ(A)[p] = n-1-A[n-1-p]`.
fn flip(a: &Perm) -> Perm {
    let n = a.len();
    (0..n).map(|p| (n - 1) as u16 - a[n - 1 - p]).collect()
}

/// Right-multiply the simple `a` by `σ_i` (0-based `i`), assuming the
/// result is simple.
fn times_sigma(a: &mut Perm, i: usize) {
    for q in a.iter_mut() {
        if *q as usize == i {
            *q = (i + 1) as u16;
        } else if *q as usize == i + 1 {
            *q = i as u16;
        }
    }
}

/// Strip a leading `σ_i` from the simple `b`, which must start with it.
fn strip_sigma(b: &mut Perm, i: usize) {
    b.swap(i, i + 1);
}

/// Make `(a, b)` left-weighted by moving generators from the front of `b`
/// to the back of `a`. Returns true if anything moved.
fn left_weight(a: &mut Perm, b: &mut Perm) -> bool {
    let n = a.len();
    let mut moved = false;
    loop {
        let a_inv = inverse(a);
        // i starts b and does not finish a
        let pick = (0..n - 1).find(|&i| b[i] > b[i + 1] && a_inv[i] < a_inv[i + 1]);
        match pick {
            Some(i) => {
                times_sigma(a, i);
                strip_sigma(b, i);
                moved = true;
            }
            None => return moved,
        }
    }
}

struct Builder {
    n: usize,
    delta_power: i64,
    factors: Vec<Perm>,
}

impl Builder {
    fn push_simple(&mut self, s: Perm) {
        if is_identity(&s) {
            return;
        }
        self.factors.push(s);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (head, tail) = self.factors.split_at_mut(j);
            let moved = left_weight(&mut head[j - 1], &mut tail[0]);
            if !moved {
                break;
            }
            j -= 1;
        }
        self.factors.retain(|f| !is_identity(f));
        let d = delta(self.n);
        while self.factors.first() == Some(&d) {
            self.factors.remove(0);
            // Δ A = τ(A) Δ; the factors behind it do not move, Δ^k stays in front.
            self.delta_power += 1;
        }
    }

    fn push_letter(&mut self, l: i32) {
        let i = l.unsigned_abs() as usize - 1;
        if l > 0 {
            let mut s: Perm = (0..self.n as u16).collect();
            s.swap(i, i + 1);
            self.push_simple(s);
        } else {
            // σ_i^{-1} = Δ^{-1} · D_i with D_i[p] = s_i(n-1-p)
            for f in self.factors.iter_mut() {
                *f = flip(f);
            }
            self.delta_power -= 1;
            let d_i: Perm = (0..self.n)
                .map(|p| {
                    let q = self.n - 1 - p;
                    let q = if q == i {
                        i + 1
                    } else if q == i + 1 {
                        i
                    } else {
                        q
                    };
                    q as u16
                })
                .collect();
            self.push_simple(d_i);
        }
    }
}

/// Normal form of `w` in `B_n`; `n` must exceed every generator index.
pub fn garside_normal_form(w: &BraidWord, n: usize) -> GarsideNormalForm {
    assert!(
        n > w.max_index() as usize,
        "word uses σ_{} but only {n} strands requested",
        w.max_index()
    );
    let n = n.max(1);
    let mut b = Builder {
        n,
        delta_power: 0,
        factors: Vec::new(),
    };
    if n > 1 {
        for &l in w.letters() {
            b.push_letter(l);
        }
    }
    GarsideNormalForm {
        strands: n,
        delta_power: b.delta_power,
        factors: b.factors,
    }
}

/// Equality in `B_∞` through normal forms on enough strands.
pub fn garside_equal(w1: &BraidWord, w2: &BraidWord) -> bool {
    let n = w1.max_index().max(w2.max_index()) as usize + 1;
    garside_normal_form(w1, n) == garside_normal_form(w2, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn identity_and_inverses() {
        let nf = garside_normal_form(&w("s1 S1 s2 S2"), 3);
        assert_eq!(nf.delta_power, 0);
        assert!(nf.factors.is_empty());
        let x = w("S2 s1 s2 S1 s3");
        let nf = garside_normal_form(&x.concat(&x.inverse()), 4);
        assert_eq!((nf.delta_power, nf.factors.len()), (0, 0));
        assert!(garside_equal(
            &w("S1 s2 s1 S2"),
            &w("s2 S1 S2 s1").inverse()
        ));
    }

    #[test]
    fn braid_relation_and_delta() {
        assert!(garside_equal(&w("s1 s2 s1"), &w("s2 s1 s2")));
        let nf = garside_normal_form(&w("s1 s2 s1"), 3);
        assert_eq!(nf.delta_power, 1);
        assert!(nf.factors.is_empty());
        let nf = garside_normal_form(&w("S1"), 2);
        assert_eq!(nf.delta_power, -1);
        assert!(nf.factors.is_empty());
    }

    #[test]
    fn distinguishes_simple_cases() {
        assert!(!garside_equal(&w("s1"), &w("s2")));
        assert!(!garside_equal(&w("s1 s2"), &w("s2 s1")));
        assert!(garside_equal(&w("s1 s3"), &w("s3 s1")));
        assert!(!garside_equal(&w("s1 s1"), &w("")));
    }
}
