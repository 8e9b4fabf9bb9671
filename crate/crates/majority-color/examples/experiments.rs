//! Batch experiments: run one algorithm over many seeded instances of a
//! family and render the records. Output is byte-identical regardless of
//! the number of worker threads.
//!
//!     cargo run --example experiments

use majority_color::experiment::{
    records_to_csv, run_experiment, Algorithm, ExperimentConfig, Family, OutputFormat,
};

fn main() {
    let config = ExperimentConfig {
        family: Family::Random { n: 100, arc_prob: 0.2 },
        algorithm: Algorithm::Product { k: 2 },
        trials: 10,
        master_seed: 2024,
        format: OutputFormat::Csv,
        jobs: 4,
    };
    let (records, summary) = run_experiment(&config).unwrap();
    print!("{}", records_to_csv(&records));
    println!(
        "trials={} successes={} success_rate={:.3} max_colours={:?}",
        summary.trials, summary.successes, summary.success_rate, summary.max_colours_used
    );
}
