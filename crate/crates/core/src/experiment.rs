//! Freeness scans and relation audits run through the diagram model.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::ald::{decide_ald, invariants, Verdict};
use crate::diagram::{diagram_equal, diagram_key, pb_words_equal, word_to_diagram, PBDiagram};
use crate::enumerate::enumerate_terms;
use crate::ld::{BoundedOracle, CachedOracle, DefaultOracle};
use crate::pb::{
    audit_ald_equations, pb_eval_term, relation_instances, AuditReport, Letter, PBWord, Schema,
};
use crate::term::{circ_cmp_unchecked, seq_sq, Op, Term};

#[derive(Clone, Debug, Serialize)]
pub struct ExperimentConfig {
    pub max_term_size: usize,
    pub gamma_samples: Vec<PBWord>,
    pub size_cap: Option<usize>,
    pub step_cap: usize,
    pub seed: u64,
}

pub fn default_gammas() -> Vec<PBWord> {
    ["", "s1", "a1", "s1 a2"]
        .iter()
        .map(|s| s.parse().expect("fixed word"))
        .collect()
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            max_term_size: 5,
            gamma_samples: default_gammas(),
            size_cap: None,
            step_cap: crate::ld::DEFAULT_STEP_CAP,
            seed: 0,
        }
    }
}

impl ExperimentConfig {
    pub fn oracle(&self) -> DefaultOracle {
        DefaultOracle {
            bounded: BoundedOracle {
                size_cap: self.size_cap,
                step_cap: self.step_cap,
            },
        }
    }
}

/// Random word over `σ_i^{±1}, a_i^{±1}` with `i ≤ max_index`.
pub fn random_pb_word<R: Rng>(rng: &mut R, max_len: usize, max_index: u32) -> PBWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..=max_index);
            let l = if rng.gen_bool(0.5) {
                Letter::sigma(i)
            } else {
                Letter::a(i)
            };
            if rng.gen_bool(0.5) {
                l
            } else {
                l.inverse()
            }
        })
        .collect();
    PBWord::new(letters).expect("indices are positive")
}

pub fn random_pb_words(seed: u64, count: usize, max_len: usize, max_index: u32) -> Vec<PBWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_pb_word(&mut rng, max_len, max_index))
        .collect()
}

/// Partition of one-variable terms into ALD classes, as indices into `terms`.
#[derive(Clone, Debug)]
pub struct AldPartition {
    pub class_of: Vec<usize>,
    pub representatives: Vec<usize>,
    pub unknown_pairs: usize,
}

pub fn ald_partition(terms: &[Term], oracle: &DefaultOracle) -> AldPartition {
    let cached = CachedOracle::new(*oracle);
    let mut reps: Vec<usize> = Vec::new();
    let mut class_of = Vec::with_capacity(terms.len());
    let mut unknown_pairs = 0;
    for (k, t) in terms.iter().enumerate() {
        let mut found = None;
        for (c, &r) in reps.iter().enumerate() {
            match decide_ald(&terms[r], t, &cached) {
                Verdict::Equal => {
                    found = Some(c);
                    break;
                }
                Verdict::NotEqual => {}
                Verdict::Unknown(_) => unknown_pairs += 1,
            }
        }
        match found {
            Some(c) => class_of.push(c),
            None => {
                class_of.push(reps.len());
                reps.push(k);
            }
        }
    }
    AldPartition {
        class_of,
        representatives: reps,
        unknown_pairs,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TermPair {
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaReport {
    pub gamma: PBWord,
    /// Terms whose value differs from their class representative's.
    pub class_violations: Vec<TermPair>,
    /// Representatives of distinct classes with equal values.
    pub collisions: Vec<TermPair>,
    pub pairs_compared: usize,
    pub critical_pairs: usize,
    pub critical_failures: Vec<TermPair>,
    /// Distinct canonical keys among representatives; equals the class
    /// count when reduced diagrams are unique.
    pub distinct_keys: usize,
}

impl GammaReport {
    pub fn constant_on_classes(&self) -> bool {
        self.class_violations.is_empty()
    }

    pub fn injective_across_classes(&self) -> bool {
        self.collisions.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FreenessReport {
    pub max_term_size: usize,
    pub terms: usize,
    pub classes: usize,
    pub unknown_pairs: usize,
    pub per_gamma: Vec<GammaReport>,
}

impl FreenessReport {
    pub fn ok(&self) -> bool {
        self.unknown_pairs == 0
            && self.per_gamma.iter().all(|g| {
                g.constant_on_classes()
                    && g.injective_across_classes()
                    && g.critical_failures.is_empty()
                    && g.distinct_keys == self.classes
            })
    }
}

/// `(u, s)` below `(v, t)` in the shape of the separation argument: `u < v`
/// in the `o`-order, or `u = v` and `s ⃗⊏ t`.
fn is_critical(a: &Term, b: &Term) -> bool {
    let (u, s) = invariants(a);
    let (v, t) = invariants(b);
    circ_cmp_unchecked(&u, &v).is_lt() || (u == v && seq_sq(&s, &t))
}

pub fn freeness_scan(config: &ExperimentConfig) -> FreenessReport {
    let terms = enumerate_terms(1, &[Op::Star, Op::Circ], config.max_term_size);
    let partition = ald_partition(&terms, &config.oracle());
    let reps = &partition.representatives;
    let per_gamma = config
        .gamma_samples
        .iter()
        .map(|g| {
            let values: Vec<PBDiagram> = terms
                .par_iter()
                .map(|t| word_to_diagram(&pb_eval_term(t, g).expect("one-variable term")))
                .collect();
            let class_violations = (0..terms.len())
                .into_par_iter()
                .filter_map(|k| {
                    let r = reps[partition.class_of[k]];
                    (r != k && !diagram_equal(&values[k], &values[r])).then(|| TermPair {
                        left: terms[r].to_string(),
                        right: terms[k].to_string(),
                    })
                })
                .collect();
            let pairs: Vec<(usize, usize)> = (0..reps.len())
                .flat_map(|a| (a + 1..reps.len()).map(move |b| (a, b)))
                .collect();
            let outcomes: Vec<(usize, usize, bool)> = pairs
                .par_iter()
                .map(|&(a, b)| (a, b, diagram_equal(&values[reps[a]], &values[reps[b]])))
                .collect();
            let pair_of = |a: usize, b: usize| TermPair {
                left: terms[reps[a]].to_string(),
                right: terms[reps[b]].to_string(),
            };
            let collisions = outcomes
                .iter()
                .filter(|o| o.2)
                .map(|&(a, b, _)| pair_of(a, b))
                .collect();
            let mut critical_pairs = 0;
            let mut critical_failures = Vec::new();
            for &(a, b, equal) in &outcomes {
                let (ta, tb) = (&terms[reps[a]], &terms[reps[b]]);
                if is_critical(ta, tb) || is_critical(tb, ta) {
                    critical_pairs += 1;
                    if equal {
                        critical_failures.push(pair_of(a, b));
                    }
                }
            }
            let mut keys: Vec<_> = reps.par_iter().map(|&r| diagram_key(&values[r])).collect();
            keys.sort();
            keys.dedup();
            GammaReport {
                gamma: g.clone(),
                class_violations,
                collisions,
                pairs_compared: outcomes.len(),
                critical_pairs,
                critical_failures,
                distinct_keys: keys.len(),
            }
        })
        .collect();
    FreenessReport {
        max_term_size: config.max_term_size,
        terms: terms.len(),
        classes: reps.len(),
        unknown_pairs: partition.unknown_pairs,
        per_gamma,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SchemaResult {
    pub family: Schema,
    pub relation: String,
    pub instances: usize,
    pub failures: Vec<(u32, u32)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationAuditReport {
    pub max_index: u32,
    pub schemas: Vec<SchemaResult>,
    pub equations: AuditReport,
}

impl RelationAuditReport {
    pub fn ok(&self) -> bool {
        self.schemas.iter().all(|s| s.failures.is_empty()) && self.equations.all_hold()
    }
}

/// Every relation instance with indices up to `max_index`, and the ALD word
/// equations at the fixed samples plus `random_z` random words.
pub fn relation_audit(
    config: &ExperimentConfig,
    max_index: u32,
    random_z: usize,
) -> RelationAuditReport {
    let instances = relation_instances(max_index);
    let schemas = Schema::ALL
        .iter()
        .map(|&family| {
            let of_family: Vec<_> = instances.iter().filter(|r| r.family == family).collect();
            let failures = of_family
                .par_iter()
                .filter(|r| !pb_words_equal(&r.lhs, &r.rhs))
                .map(|r| (r.i, r.j))
                .collect();
            SchemaResult {
                family,
                relation: family.to_string(),
                instances: of_family.len(),
                failures,
            }
        })
        .collect();
    let mut zs: Vec<PBWord> = ["", "s1", "a2"]
        .iter()
        .map(|s| s.parse().expect("fixed word"))
        .collect();
    zs.extend(random_pb_words(config.seed, random_z, 6, 3));
    RelationAuditReport {
        max_index,
        schemas,
        equations: audit_ald_equations(&pb_words_equal, &zs),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_scan_separates_classes() {
        let config = ExperimentConfig {
            max_term_size: 3,
            gamma_samples: vec![PBWord::identity()],
            ..ExperimentConfig::default()
        };
        let report = freeness_scan(&config);
        assert_eq!(report.terms, 11);
        assert!(report.ok(), "{report:?}");
        assert!(report.per_gamma[0].critical_pairs > 0);
    }

    #[test]
    fn law_connected_terms_share_a_value() {
        let e = PBWord::identity();
        let vals: Vec<PBDiagram> = ["x*(x*x)", "(x*x)*(x*x)", "(x o x)*x"]
            .iter()
            .map(|s| word_to_diagram(&pb_eval_term(&s.parse().unwrap(), &e).unwrap()))
            .collect();
        assert!(diagram_equal(&vals[0], &vals[1]));
        assert!(diagram_equal(&vals[0], &vals[2]));
        let x = word_to_diagram(&pb_eval_term(&Term::x(), &e).unwrap());
        let xx = word_to_diagram(&pb_eval_term(&"x o x".parse().unwrap(), &e).unwrap());
        assert!(!diagram_equal(&x, &xx));
    }

    #[test]
    fn audit_passes_at_small_indices() {
        let report = relation_audit(&ExperimentConfig::default(), 3, 3);
        assert!(report.ok());
        assert_eq!(report.schemas.len(), 7);
    }

    #[test]
    fn random_words_are_reproducible() {
        assert_eq!(random_pb_words(7, 5, 6, 3), random_pb_words(7, 5, 6, 3));
    }
}
