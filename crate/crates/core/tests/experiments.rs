//! Resumability and determinism of batch runs.

use frobrad::experiments::{run, ExperimentConfig, Mode};
use frobrad::store::{load, CacheWriter};

fn cfg(p_max: u64, cache: &std::path::Path) -> ExperimentConfig {
    ExperimentConfig::new(
        "E:1,1 * E:-1,1".parse().unwrap(),
        Some("E:1,1".parse().unwrap()),
        Mode::RadOrderDivides,
        5,
        p_max,
    )
    .with_cache(cache)
}

#[test]
fn interrupted_run_resumes_from_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.csv");
    let first = run(&cfg(1000, &cache)).unwrap();
    assert_eq!(first.cache_hits, 0);

    // simulate a crash mid-line
    {
        use std::io::Write;
        let mut f = std::fs::OpenOptions::new().append(true).open(&cache).unwrap();
        f.write_all(b"E:1;1,1009,").unwrap();
    }
    let resumed = run(&cfg(3000, &cache)).unwrap();
    assert_eq!(resumed.cache_hits, first.computed);
    let snap = load(&cache).unwrap();
    assert_eq!(snap.rejected().len(), 1);
    assert_eq!(snap.duplicates(), 0);

    let cold = run(&ExperimentConfig { cache: None, ..cfg(3000, &cache) }).unwrap();
    assert_eq!(cold.to_jsonl().unwrap(), resumed.to_jsonl().unwrap());
    assert_eq!(resumed.true_count(), resumed.good_count());
}

#[test]
fn corrupt_cache_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.csv");
    std::fs::write(&cache, "not a cache\n").unwrap();
    assert!(run(&cfg(100, &cache)).is_err());
    assert!(CacheWriter::open(&cache).is_err());
}

#[test]
fn repeated_runs_are_byte_identical() {
    let c = ExperimentConfig::new(
        "H:1,1,0,0,0,1,0".parse().unwrap(),
        Some("E:-1,0^2".parse().unwrap()),
        Mode::FrobCoprimality,
        5,
        600,
    );
    let a = run(&c).unwrap().to_jsonl().unwrap();
    let b = run(&c).unwrap().to_jsonl().unwrap();
    assert_eq!(a, b);
}
