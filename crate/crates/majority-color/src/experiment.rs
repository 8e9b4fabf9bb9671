//! Batch experiment harness: generate a family of instances from a master
//! seed, run one algorithm per trial, and aggregate. Per-trial seeds are
//! derived from (master seed, trial index), so parallel execution cannot
//! change the records.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::colouring::{
    lll_resample_3colouring, majority_product_colouring, random_3colouring_retry,
    seymour_3colouring, verify_majority, MajoritySpec,
};
use crate::digraph::{
    gen_cycle_power, gen_random_digraph, gen_random_out_regular, gen_subset_blowup,
    gen_tournament, Digraph,
};
use crate::error::{Error, Result};
use crate::exact::{fractional_majority_number, min_majority_colours, MinColoursOutcome};
use crate::rng::derive_seed;
use crate::stable::{stable_third, target_size};
use crate::Frac;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    Random { n: usize, arc_prob: f64 },
    OutRegular { n: usize, d: usize },
    Tournament { n: usize },
    CyclePower { n: usize, k: usize },
    /// Subset blowup over a directed cycle base.
    Blowup { base_cycle: usize, delta: usize },
}

impl Family {
    pub fn generate(&self, seed: u64) -> Result<Digraph> {
        match *self {
            Family::Random { n, arc_prob } => gen_random_digraph(n, arc_prob, seed),
            Family::OutRegular { n, d } => gen_random_out_regular(n, d, seed),
            Family::Tournament { n } => gen_tournament(n, seed),
            Family::CyclePower { n, k } => gen_cycle_power(n, k),
            Family::Blowup { base_cycle, delta } => {
                gen_subset_blowup(&gen_cycle_power(base_cycle, 1)?, delta)
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "algorithm", rename_all = "kebab-case")]
pub enum Algorithm {
    Product { k: usize },
    RandomRetry { max_tries: usize },
    LllResample { max_rounds: usize },
    ExactMinColours { k_max: usize, budget: u64 },
    StableThird { max_tries: usize },
    Seymour,
    Fractional { max_n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExperimentConfig {
    #[serde(flatten)]
    pub family: Family,
    #[serde(flatten)]
    pub algorithm: Algorithm,
    pub trials: usize,
    pub master_seed: u64,
    pub format: OutputFormat,
    pub jobs: usize,
}

/// One trial's outcome. Wall time is measured but never serialized, so
/// output files stay byte-identical across runs and parallelism levels.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub trial: usize,
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub max_in: usize,
    pub success: bool,
    pub colours_used: Option<usize>,
    pub tries: Option<usize>,
    pub violations: usize,
    /// Algorithm-specific extra, e.g. the exact fractional objective.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extra: Option<String>,
    #[serde(skip)]
    pub wall_ms: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExperimentSummary {
    pub trials: usize,
    pub successes: usize,
    pub success_rate: f64,
    pub max_colours_used: Option<usize>,
    pub max_tries: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_fractional: Option<String>,
}

fn run_trial(config: &ExperimentConfig, trial: usize) -> Result<ExperimentRecord> {
    let seed = derive_seed(config.master_seed, "trial", trial as u64);
    let g = config.family.generate(seed)?;
    let start = Instant::now();
    let mut record = ExperimentRecord {
        trial,
        seed,
        n: g.vertex_count(),
        m: g.arc_count(),
        delta: g.min_out_degree(),
        max_in: g.max_in_degree(),
        success: false,
        colours_used: None,
        tries: None,
        violations: 0,
        extra: None,
        wall_ms: 0.0,
    };
    match &config.algorithm {
        Algorithm::Product { k } => {
            let c = majority_product_colouring(&g, *k)?;
            let spec = MajoritySpec::new(k * k, Frac::new(1, *k as u64))?;
            let report = verify_majority(&g, &c, &spec)?;
            record.success = report.valid;
            record.colours_used = Some(c.distinct_colours_used());
            record.violations = report.violations.len();
        }
        Algorithm::RandomRetry { max_tries } => {
            let outcome = random_3colouring_retry(&g, *max_tries, seed)?;
            record.success = outcome.colouring.is_some();
            record.tries = Some(outcome.tries_used);
            record.colours_used = outcome.colouring.as_ref().map(|c| c.distinct_colours_used());
            record.violations = outcome.last_report.violations.len();
        }
        Algorithm::LllResample { max_rounds } => {
            let (colouring, log) = lll_resample_3colouring(&g, *max_rounds, seed)?;
            record.success = log.success;
            record.tries = Some(log.rounds);
            record.colours_used = colouring.as_ref().map(|c| c.distinct_colours_used());
        }
        Algorithm::ExactMinColours { k_max, budget } => {
            match min_majority_colours(&g, *k_max, Frac::new(1, 2), *budget)? {
                MinColoursOutcome::Found { k, .. } => {
                    record.success = true;
                    record.colours_used = Some(k);
                }
                MinColoursOutcome::BudgetExceeded { at_k } => {
                    record.extra = Some(format!("budget exceeded at k={at_k}"));
                }
                MinColoursOutcome::AboveCap => {
                    record.extra = Some("above cap".into());
                }
            }
        }
        Algorithm::StableThird { max_tries } => {
            let r = stable_third(&g, *max_tries, seed)?;
            record.success = r.success;
            record.tries = Some(r.tries_used);
            record.extra = Some(format!(
                "|T|={} target={}",
                r.t.len(),
                target_size(Frac::new(1, 3), g.vertex_count())
            ));
        }
        Algorithm::Seymour => {
            let c = seymour_3colouring(&g)?;
            let ok = (0..g.vertex_count()).all(|v| {
                g.out_degree(v) == 0
                    || g.out_neighbours(v).iter().any(|&u| c.colour(u) != c.colour(v))
            });
            record.success = ok;
            record.colours_used = Some(c.distinct_colours_used());
        }
        Algorithm::Fractional { max_n } => {
            let sol = fractional_majority_number(&g, *max_n)?;
            record.success = true;
            record.extra = Some(format!("{}/{}", sol.objective.numer(), sol.objective.denom()));
        }
    }
    record.wall_ms = start.elapsed().as_secs_f64() * 1000.0;
    Ok(record)
}

/// Run all trials. Per-trial failures are recorded (as unsuccessful
/// records with the error in `extra`), never abort the batch.
pub fn run_experiment(
    config: &ExperimentConfig,
) -> Result<(Vec<ExperimentRecord>, ExperimentSummary)> {
    if config.trials == 0 {
        return Err(Error::InvalidArgument("trials must be >= 1".into()));
    }
    let jobs = config.jobs.max(1);
    let run_one = |trial: usize| {
        run_trial(config, trial).unwrap_or_else(|e| ExperimentRecord {
            trial,
            seed: derive_seed(config.master_seed, "trial", trial as u64),
            n: 0,
            m: 0,
            delta: 0,
            max_in: 0,
            success: false,
            colours_used: None,
            tries: None,
            violations: 0,
            extra: Some(format!("error: {e}")),
            wall_ms: 0.0,
        })
    };
    let records: Vec<ExperimentRecord> = if jobs == 1 {
        (0..config.trials).map(run_one).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
        pool.install(|| {
            use rayon::prelude::*;
            (0..config.trials).into_par_iter().map(run_one).collect()
        })
    };

    let successes = records.iter().filter(|r| r.success).count();
    let summary = ExperimentSummary {
        trials: records.len(),
        successes,
        success_rate: successes as f64 / records.len() as f64,
        max_colours_used: records.iter().filter_map(|r| r.colours_used).max(),
        max_tries: records.iter().filter_map(|r| r.tries).max(),
        max_fractional: match config.algorithm {
            Algorithm::Fractional { .. } => records
                .iter()
                .filter_map(|r| r.extra.as_deref())
                .filter_map(parse_fraction)
                .max_by(|a, b| a.partial_cmp(b).unwrap())
                .map(|v| format!("{v}")),
            _ => None,
        },
    };
    Ok((records, summary))
}

fn parse_fraction(s: &str) -> Option<f64> {
    let (num, den) = s.split_once('/')?;
    Some(num.trim().parse::<f64>().ok()? / den.trim().parse::<f64>().ok()?)
}

/// CSV with a fixed header; one line per record in trial order.
pub fn records_to_csv(records: &[ExperimentRecord]) -> String {
    let mut out = String::from(
        "trial,seed,n,m,delta,max_in,success,colours_used,tries,violations,extra\n",
    );
    for r in records {
        let opt = |o: Option<usize>| o.map_or(String::new(), |v| v.to_string());
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            r.trial,
            r.seed,
            r.n,
            r.m,
            r.delta,
            r.max_in,
            r.success,
            opt(r.colours_used),
            opt(r.tries),
            r.violations,
            r.extra.as_deref().unwrap_or("").replace(',', ";"),
        );
    }
    out
}

pub fn records_to_json(
    records: &[ExperimentRecord],
    summary: &ExperimentSummary,
) -> Result<String> {
    let value = serde_json::json!({
        "records": records,
        "summary": summary,
    });
    serde_json::to_string_pretty(&value)
        .map_err(|e| Error::InvalidArgument(format!("json encoding: {e}")))
}
