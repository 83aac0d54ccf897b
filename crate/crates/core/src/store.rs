//! Append-only CSV cache of count records.
//!
//! ```text
//! frobrad-cache v1
//! E:-1;0,5,-2
//! H:1;1;0;0;0;1;0,11,8,134
//! ```
//!
//! Elliptic lines are `curve_id,p,a_p`, genus-2 lines `curve_id,p,N1,N2`.
//! Duplicates are resolved at load time by keeping the first line.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{Read, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use crate::curves::CountRecord;
use crate::error::{Error, Result};

pub const CACHE_HEADER: &str = "frobrad-cache v1";

pub fn format_record(r: &CountRecord) -> String {
    match r {
        CountRecord::Elliptic { curve_id, p, a_p } => format!("{curve_id},{p},{a_p}"),
        CountRecord::Genus2 { curve_id, p, n1, n2 } => format!("{curve_id},{p},{n1},{n2}"),
    }
}

/// Parses and validates one CSV line.
pub fn parse_record(line: &str) -> Result<CountRecord> {
    let fields: Vec<&str> = line.split(',').collect();
    let bad = |what: &str| Error::InvalidRecord(format!("{what} in `{line}`"));
    let num = |s: &str| s.parse::<u64>().map_err(|_| bad("bad integer"));
    let record = match fields.as_slice() {
        [id, p, a_p] => CountRecord::Elliptic {
            curve_id: id.to_string(),
            p: num(p)?,
            a_p: a_p.parse().map_err(|_| bad("bad a_p"))?,
        },
        [id, p, n1, n2] => CountRecord::Genus2 {
            curve_id: id.to_string(),
            p: num(p)?,
            n1: num(n1)?,
            n2: num(n2)?,
        },
        _ => return Err(bad("expected 3 or 4 fields")),
    };
    if record.curve_id().is_empty() {
        return Err(bad("empty curve id"));
    }
    record.validate()?;
    Ok(record)
}

/// What `load` found on disk.
#[derive(Clone, Debug, Default)]
pub struct CacheSnapshot {
    records: HashMap<(String, u64), CountRecord>,
    duplicates: usize,
    rejected: Vec<(usize, String)>,
}

impl CacheSnapshot {
    pub fn get(&self, curve_id: &str, p: u64) -> Option<&CountRecord> {
        self.records.get(&(curve_id.to_string(), p))
    }

    pub fn contains(&self, record: &CountRecord) -> bool {
        self.get(record.curve_id(), record.p()) == Some(record)
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn records(&self) -> impl Iterator<Item = &CountRecord> {
        self.records.values()
    }

    /// Lines skipped because their key was already present.
    pub fn duplicates(&self) -> usize {
        self.duplicates
    }

    /// `(line number, reason)` for every line that did not parse.
    pub fn rejected(&self) -> &[(usize, String)] {
        &self.rejected
    }
}

pub fn load(path: impl AsRef<Path>) -> Result<CacheSnapshot> {
    let text = std::fs::read_to_string(path.as_ref())?;
    parse_cache(&text)
}

/// Like `load`, but a missing file is an empty cache.
pub fn load_or_empty(path: impl AsRef<Path>) -> Result<CacheSnapshot> {
    match std::fs::metadata(path.as_ref()) {
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(CacheSnapshot::default()),
        _ => load(path),
    }
}

pub fn parse_cache(text: &str) -> Result<CacheSnapshot> {
    let mut lines = text.split('\n').enumerate();
    match lines.next() {
        Some((_, h)) if h.trim_end_matches('\r') == CACHE_HEADER => {}
        Some((_, h)) => {
            return Err(Error::Cache(format!("bad header `{h}`, expected `{CACHE_HEADER}`")))
        }
        None => return Err(Error::Cache("missing header".into())),
    }
    let mut snap = CacheSnapshot::default();
    for (i, line) in lines {
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        match parse_record(line) {
            Ok(r) => {
                let key = (r.curve_id().to_string(), r.p());
                if snap.records.contains_key(&key) {
                    snap.duplicates += 1;
                } else {
                    snap.records.insert(key, r);
                }
            }
            Err(e) => snap.rejected.push((i + 1, e.to_string())),
        }
    }
    Ok(snap)
}

/// The single appender for a cache file. Each record is one `write` of a
/// full line to a file opened in append mode.
#[derive(Debug)]
pub struct CacheWriter {
    path: PathBuf,
    file: Mutex<File>,
}

impl CacheWriter {
    /// Opens `path` for appending, creating it with a header if it is missing
    /// or empty. An existing file must carry the header.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut file = OpenOptions::new().read(true).append(true).create(true).open(&path)?;
        let len = file.metadata()?.len();
        if len == 0 {
            file.write_all(format!("{CACHE_HEADER}\n").as_bytes())?;
        } else {
            let mut head = vec![0u8; CACHE_HEADER.len().min(len as usize)];
            file.seek(SeekFrom::Start(0))?;
            file.read_exact(&mut head)?;
            if head != CACHE_HEADER.as_bytes() {
                return Err(Error::Cache(format!("{} is not a cache file", path.display())));
            }
            // a crash may have left a partial last line; keep it separate
            let mut last = [0u8; 1];
            file.seek(SeekFrom::End(-1))?;
            file.read_exact(&mut last)?;
            if last[0] != b'\n' {
                file.write_all(b"\n")?;
            }
        }
        Ok(CacheWriter { path, file: Mutex::new(file) })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn append(&self, record: &CountRecord) -> Result<()> {
        record.validate()?;
        let line = format!("{}\n", format_record(record));
        let mut file = self.file.lock().unwrap_or_else(|e| e.into_inner());
        file.write_all(line.as_bytes())?;
        Ok(())
    }

    /// Flushes to stable storage.
    pub fn sync(&self) -> Result<()> {
        let file = self.file.lock().unwrap_or_else(|e| e.into_inner());
        file.sync_data()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ell(id: &str, p: u64, a_p: i64) -> CountRecord {
        CountRecord::Elliptic { curve_id: id.into(), p, a_p }
    }

    #[test]
    fn empty_and_singleton() {
        assert!(parse_cache("frobrad-cache v1\n").unwrap().is_empty());
        let s = parse_cache("frobrad-cache v1\nE:-1;0,5,-2\n").unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.get("E:-1;0", 5), Some(&ell("E:-1;0", 5, -2)));
    }

    #[test]
    fn header_is_required() {
        assert!(matches!(parse_cache(""), Err(Error::Cache(_))));
        assert!(matches!(parse_cache("E:-1;0,5,-2\n"), Err(Error::Cache(_))));
        assert!(matches!(parse_cache("frobrad-cache v2\n"), Err(Error::Cache(_))));
    }

    #[test]
    fn invalid_lines_are_reported() {
        let text = "frobrad-cache v1\nE:-1;0,5,-2\nE:-1;0,7,9\ngarbage\nE:x,4,0\nH:1;1;0;0;0;1;0,11,8,134\n";
        let s = parse_cache(text).unwrap();
        assert_eq!(s.len(), 2);
        let lines: Vec<usize> = s.rejected().iter().map(|r| r.0).collect();
        // |9| > 2 sqrt 7; no fields; 4 is not prime
        assert_eq!(lines, vec![3, 4, 5]);
    }

    #[test]
    fn append_then_load() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.csv");
        let w = CacheWriter::open(&path).unwrap();
        let r = ell("E:-1;0", 5, -2);
        w.append(&r).unwrap();
        w.append(&r).unwrap();
        let g = CountRecord::Genus2 { curve_id: "H:1;1;0;0;0;1;0".into(), p: 11, n1: 8, n2: 134 };
        w.append(&g).unwrap();
        assert!(w.append(&ell("E:-1;0", 7, 9)).is_err());
        drop(w);
        let s = load(&path).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.duplicates(), 1);
        assert!(s.contains(&r) && s.contains(&g));
        // reopening keeps the header single
        CacheWriter::open(&path).unwrap().append(&ell("E:-1;0", 13, 6)).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.matches(CACHE_HEADER).count(), 1);
    }

    #[test]
    fn partial_last_line_is_isolated() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.csv");
        std::fs::write(&path, "frobrad-cache v1\nE:-1;0,5,-2\nE:-1;0,1").unwrap();
        CacheWriter::open(&path).unwrap().append(&ell("E:-1;0", 13, 6)).unwrap();
        let s = load(&path).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.rejected().len(), 1);
    }

    #[test]
    fn foreign_file_is_refused() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.csv");
        std::fs::write(&path, "hello\n").unwrap();
        assert!(CacheWriter::open(&path).is_err());
        assert!(load(dir.path().join("missing")).is_err());
        assert!(load_or_empty(dir.path().join("missing")).unwrap().is_empty());
    }

    #[test]
    fn concurrent_appends() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.csv");
        let w = CacheWriter::open(&path).unwrap();
        let primes = crate::intarith::primes_in(5, 2000);
        std::thread::scope(|s| {
            for chunk in primes.chunks(50) {
                let w = &w;
                s.spawn(move || {
                    for &p in chunk {
                        w.append(&ell("E:0;1", p, 0)).unwrap();
                    }
                });
            }
        });
        let snap = load(&path).unwrap();
        assert_eq!(snap.len(), primes.len());
        assert!(snap.rejected().is_empty());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn round_trip_any_order(
            picks in prop::collection::vec((0usize..200, -3i64..=3), 1..40),
            seed in any::<u64>(),
        ) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let primes = crate::intarith::primes_in(5, 2000);
            let recs: Vec<CountRecord> = picks
                .iter()
                .map(|&(i, a)| ell("E:1;1", primes[i % primes.len()], a))
                .collect();
            let mut shuffled = recs.clone();
            shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));

            let dir = tempfile::tempdir().unwrap();
            let path = dir.path().join("c.csv");
            let w = CacheWriter::open(&path).unwrap();
            for r in &shuffled {
                w.append(r).unwrap();
            }
            let snap = load(&path).unwrap();
            // first-wins per key, so every key is present
            for r in &recs {
                prop_assert!(snap.get(r.curve_id(), r.p()).is_some());
            }
            let first = shuffled.iter().find(|r| r.p() == recs[0].p()).unwrap();
            prop_assert!(snap.contains(first));
        }
    }
}
