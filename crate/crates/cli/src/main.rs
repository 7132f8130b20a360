use std::cmp::Ordering;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use ald_core::ald::{decide_ald, derive_special, invariants, order_ald, specialize, Verdict};
use ald_core::diagram::{diagram_reduce, word_to_diagram};
use ald_core::experiment::{default_gammas, freeness_scan, relation_audit, ExperimentConfig};
use ald_core::ld::{LdOracle, LdVerdict, DEFAULT_STEP_CAP};
use ald_core::pb::{pb_eval_closed, pb_eval_term, PBWord};
use ald_core::term::{parse_term, Term, TermSeq};

/// Exit status for malformed input.
const EX_USAGE: u8 = 64;

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Input(#[from] ald_core::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Parser)]
#[command(name = "ald", version, about = "Decide, normalize and evaluate ALD terms")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Opts {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized samples.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest term size enumerated by scans.
    #[arg(long, global = true, default_value_t = 5)]
    max_size: usize,
    /// Expansion budget of the bounded LD search.
    #[arg(long, global = true, default_value_t = DEFAULT_STEP_CAP)]
    budget: usize,
    /// Term size cap of the bounded LD search; chosen per pair if absent.
    #[arg(long, global = true)]
    size_cap: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide ALD-equivalence (exit 0 Equal, 1 NotEqual, 2 Unknown).
    DecideAld { left: String, right: String },
    /// Compare two *-terms up to LD (exit 0 Equal, 1 different, 2 Unknown).
    DecideLd { left: String, right: String },
    /// Print the special form and the law steps reaching it.
    Normalize { term: String },
    /// Evaluate a one-variable term at a parenthesized braid word.
    Eval {
        term: String,
        /// Word such as "s1 A2"; empty for the identity.
        #[arg(default_value = "")]
        gamma: String,
        #[command(flatten)]
        mode: EvalMode,
    },
    /// Check the defining relations and derived word equations in the diagram model.
    VerifyRelations {
        #[arg(long, default_value_t = 5)]
        max_index: u32,
        /// Random words substituted for z.
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Evaluate every ALD class at each gamma and look for collisions.
    FreenessScan {
        /// Sample word; repeatable. Defaults to "", s1, a1, "s1 a2".
        #[arg(long = "gamma")]
        gammas: Vec<String>,
    },
    /// Compare two one-variable terms in the linear order on special forms.
    OrderAld { left: String, right: String },
}

#[derive(Args)]
#[group(multiple = false)]
struct EvalMode {
    #[arg(long)]
    closed_form: bool,
    #[arg(long)]
    recursive: bool,
    #[arg(long)]
    diagram: bool,
}

impl Opts {
    fn config(&self) -> ExperimentConfig {
        ExperimentConfig {
            max_term_size: self.max_size,
            size_cap: self.size_cap,
            step_cap: self.budget,
            seed: self.seed,
            ..ExperimentConfig::default()
        }
    }
}

fn seq_json(s: &TermSeq) -> Value {
    s.iter().map(|t| Value::String(t.to_string())).collect()
}

fn emit(opts: &Opts, value: Value, text: String) -> Result<(), CliError> {
    if opts.json {
        println!("{}", serde_json::to_string_pretty(&value)?);
    } else {
        println!("{text}");
    }
    Ok(())
}

fn terms(left: &str, right: &str) -> Result<(Term, Term), CliError> {
    Ok((parse_term(left)?, parse_term(right)?))
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let opts = &cli.opts;
    let config = opts.config();
    match cli.cmd {
        Cmd::DecideAld { left, right } => {
            let (s, t) = terms(&left, &right)?;
            let verdict = decide_ald(&s, &t, &config.oracle());
            let (is, js) = invariants(&s);
            let (it, jt) = invariants(&t);
            let value = json!({
                "verdict": verdict.to_string(),
                "i_left": is.to_string(),
                "i_right": it.to_string(),
                "j_left": seq_json(&js),
                "j_right": seq_json(&jt),
            });
            let text = format!("{verdict}\nI: {is}  |  {it}\nJ: {js}  |  {jt}");
            emit(opts, value, text)?;
            Ok(match verdict {
                Verdict::Equal => 0,
                Verdict::NotEqual => 1,
                Verdict::Unknown(_) => 2,
            })
        }
        Cmd::DecideLd { left, right } => {
            let (s, t) = terms(&left, &right)?;
            let verdict = config.oracle().compare(&s, &t);
            emit(opts, json!({ "verdict": verdict }), verdict.to_string())?;
            Ok(match verdict {
                LdVerdict::Equal => 0,
                LdVerdict::Unknown(_) => 2,
                _ => 1,
            })
        }
        Cmd::Normalize { term } => {
            let t = parse_term(&term)?;
            let special = specialize(&t);
            let trace: Vec<String> = derive_special(&t).iter().map(|s| s.to_string()).collect();
            let (i, j) = invariants(&t);
            let mut text = format!("{special}\nI = {i}\nJ = {j}");
            for step in &trace {
                text.push_str("\n  ");
                text.push_str(step);
            }
            let value = json!({
                "term": t.to_string(),
                "special": special.to_string(),
                "i": i.to_string(),
                "j": seq_json(&j),
                "trace": trace,
            });
            emit(opts, value, text)?;
            Ok(0)
        }
        Cmd::Eval { term, gamma, mode } => {
            let t = parse_term(&term)?;
            let g: PBWord = gamma.parse()?;
            if mode.closed_form {
                let (v, j) = invariants(&t);
                let w = pb_eval_closed(&v, &j, &g)?;
                emit(opts, json!({ "word": w }), w.to_string())?;
            } else if mode.diagram {
                let d = diagram_reduce(&word_to_diagram(&pb_eval_term(&t, &g)?));
                emit(opts, serde_json::to_value(&d)?, d.to_string())?;
            } else {
                let w = pb_eval_term(&t, &g)?;
                emit(opts, json!({ "word": w }), w.to_string())?;
            }
            Ok(0)
        }
        Cmd::VerifyRelations { max_index, samples } => {
            let report = relation_audit(&config, max_index, samples);
            let mut text = String::new();
            for s in &report.schemas {
                let status = if s.failures.is_empty() { "pass" } else { "FAIL" };
                text.push_str(&format!("{status}  {} ({} instances)\n", s.relation, s.instances));
            }
            for e in &report.equations.entries {
                if !e.holds {
                    let z = e.z.as_ref().map(|z| format!(" at z = [{z}]")).unwrap_or_default();
                    text.push_str(&format!("FAIL  {}{z}: {} vs {}\n", e.equation, e.lhs, e.rhs));
                }
            }
            text.push_str(&format!(
                "{} word equations checked, {} failed",
                report.equations.entries.len(),
                report.equations.failures().count()
            ));
            emit(opts, serde_json::to_value(&report)?, text)?;
            Ok(if report.ok() { 0 } else { 1 })
        }
        Cmd::FreenessScan { gammas } => {
            let mut config = config;
            if !gammas.is_empty() {
                config.gamma_samples = gammas
                    .iter()
                    .map(|g| g.parse())
                    .collect::<Result<_, _>>()?;
            } else {
                config.gamma_samples = default_gammas();
            }
            let report = freeness_scan(&config);
            let mut text = format!(
                "{} terms of size <= {}, {} ALD classes, {} undecided pairs",
                report.terms, report.max_term_size, report.classes, report.unknown_pairs
            );
            for g in &report.per_gamma {
                text.push_str(&format!(
                    "\ngamma [{}]: {} class violations, {} collisions in {} pairs, {} of {} critical pairs equal, {} distinct keys",
                    g.gamma,
                    g.class_violations.len(),
                    g.collisions.len(),
                    g.pairs_compared,
                    g.critical_failures.len(),
                    g.critical_pairs,
                    g.distinct_keys
                ));
            }
            text.push_str(if report.ok() { "\nok" } else { "\nVIOLATION" });
            emit(opts, serde_json::to_value(&report)?, text)?;
            Ok(if report.ok() { 0 } else { 1 })
        }
        Cmd::OrderAld { left, right } => {
            let (s, t) = terms(&left, &right)?;
            let o = order_ald(&s, &t, &config.oracle())?;
            let name = match o {
                Ordering::Less => "Less",
                Ordering::Equal => "Equal",
                Ordering::Greater => "Greater",
            };
            emit(opts, json!({ "order": name }), name.to_string())?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EX_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EX_USAGE)
        }
    }
}
