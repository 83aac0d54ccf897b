//! Two CM curves that are not isogenous but share their Frobenius
//! polynomial at every prime p = 11 mod 12.
//!
//! cargo run --release --example cm_counterexample [p_max]

use frobrad::experiments::{density_summary, run, ExperimentConfig, Mode};

fn main() -> frobrad::Result<()> {
    let p_max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(99_999);
    let cfg = ExperimentConfig::new(
        "E:-1,0".parse()?,
        Some("E:0,1".parse()?),
        Mode::FrobpolyEquality,
        5,
        p_max,
    );
    let report = run(&cfg)?;
    let d = density_summary(&report)?;
    println!(
        "P equal at {} of {} good primes: density {:.4}, 95% interval [{:.4}, {:.4}]",
        d.num,
        d.den,
        d.density(),
        d.interval.0,
        d.interval.1
    );
    let off_class = report.records.iter().filter(|r| r.value && r.p % 12 != 11).count();
    println!("equal primes outside p = 11 mod 12: {off_class}");
    Ok(())
}
