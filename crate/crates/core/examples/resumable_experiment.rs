//! A config-driven experiment with a count cache: the second run reads
//! every count back instead of recomputing it, and the reports agree.
//!
//! cargo run --release --example resumable_experiment [dir]

use frobrad::experiments::{run, ExperimentConfig};

const CONFIG: &str = "\
[curves]
E1 = E:1,1
E2 = E:-1,1

[experiment]
a = E1 * E2
b = E1
mode = rad_order_divides
lambda = all
p_min = 5
p_max = 20000
cache = cache.csv
output = report.jsonl
";

fn main() -> frobrad::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(std::path::PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("frobrad-resumable"));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("experiment.cfg");
    std::fs::write(&path, CONFIG)?;
    let cfg = ExperimentConfig::load(&path)?;

    for label in ["run 1", "run 2"] {
        let report = run(&cfg)?;
        println!(
            "{label}: {} cached, {} computed, {} / {} primes satisfy the predicate",
            report.cache_hits,
            report.computed,
            report.true_count(),
            report.good_count()
        );
    }
    println!("report written to {}", dir.join("report.jsonl").display());
    Ok(())
}
