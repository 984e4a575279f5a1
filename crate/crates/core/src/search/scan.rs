//! Conjecture scans over a box of bases, with JSONL persistence and resume.
//!
//! Output is one JSON object per basis in lexicographic order followed by a
//! `{"summary": ...}` line. A sidecar checkpoint (`<out>.ckpt`) holds the last
//! basis whose record is durably written; `resume` truncates anything after
//! it and continues the enumeration from there.

use std::fs::{self, File, OpenOptions};
use std::io::{self, BufRead, BufReader, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::enumerate::{Bases, BasisShape};
use crate::analysis::{analyze, BasisReport};
use crate::basis::Basis;
use crate::error::Error;
use crate::num::Denomination;

/// The box being scanned.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Denomination")]
pub struct ScanSpec<T> {
    pub k: usize,
    pub ak_max: T,
    /// `None` selects the per-basis default of [`analyze`].
    pub h_cap: Option<u32>,
    pub mode: BasisShape,
}

impl<T: Denomination> ScanSpec<T> {
    pub fn new(k: usize, ak_max: T, h_cap: Option<u32>, mode: BasisShape) -> Result<Self, Error> {
        if k == 0 {
            return Err(Error::BadParameter("k must be at least 1".into()));
        }
        if ak_max.to_usize().is_some_and(|m| m < k) {
            return Err(Error::BadParameter(format!(
                "ak_max = {ak_max} leaves no room for {k} distinct elements"
            )));
        }
        Ok(Self {
            k,
            ak_max,
            h_cap,
            mode,
        })
    }

    pub fn bases(&self) -> Bases<T> {
        Bases::new(self.mode, self.k, self.ak_max)
    }
}

/// One line of scan output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged, bound = "T: Denomination")]
pub enum ScanRecord<T> {
    Report(BasisReport<T>),
    Failed { basis: Basis<T>, error: String },
}

impl<T: Denomination> ScanRecord<T> {
    pub fn basis(&self) -> &Basis<T> {
        match self {
            ScanRecord::Report(r) => &r.basis,
            ScanRecord::Failed { basis, .. } => basis,
        }
    }

    pub fn is_counterexample(&self) -> bool {
        matches!(self, ScanRecord::Report(r) if r.counterexample)
    }
}

fn evaluate<T: Denomination>(basis: Basis<T>, h_cap: Option<u32>) -> ScanRecord<T> {
    match analyze(&basis, h_cap) {
        Ok(report) => ScanRecord::Report(report),
        Err(e) => ScanRecord::Failed {
            basis,
            error: e.to_string(),
        },
    }
}

/// Sequential, in-memory scan: one record per basis in the box.
pub fn scan_conjecture<T: Denomination>(
    spec: &ScanSpec<T>,
) -> impl Iterator<Item = ScanRecord<T>> + '_ {
    spec.bases().map(|b| evaluate(b, spec.h_cap))
}

/// Totals written as the final line of a scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Denomination")]
pub struct ScanSummary<T> {
    pub scanned: u64,
    pub counterexamples: u64,
    pub errors: u64,
    pub k: usize,
    pub ak_max: T,
    pub mode: BasisShape,
}

#[derive(Serialize)]
struct SummaryLine<'a, T: Denomination> {
    summary: &'a ScanSummary<T>,
}

/// Result of [`run_scan`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanOutcome<T> {
    pub summary: ScanSummary<T>,
    /// Text form of every counterexample basis, in output order.
    pub counterexample_bases: Vec<String>,
    /// False when the run stopped early through `stop_after`.
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanOptions {
    pub out: PathBuf,
    pub resume: bool,
    pub threads: usize,
    /// Stop after writing this many new records, leaving the output resumable.
    pub stop_after: Option<u64>,
}

#[derive(Debug, Error)]
pub enum ScanError {
    #[error("i/o error on {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("malformed scan output {path} line {line}: {reason}")]
    Malformed {
        path: PathBuf,
        line: usize,
        reason: String,
    },
    #[error("checkpoint basis {0} not found in existing output")]
    CheckpointMismatch(String),
    #[error(transparent)]
    Basis(#[from] Error),
    #[error("thread pool: {0}")]
    Pool(String),
}

pub fn checkpoint_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".ckpt");
    PathBuf::from(name)
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> ScanError + '_ {
    move |source| ScanError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn write_checkpoint<T: Denomination>(path: &Path, basis: &Basis<T>) -> Result<(), ScanError> {
    let tmp = path.with_extension("ckpt.tmp");
    fs::write(&tmp, format!("{basis}\n")).map_err(io_err(&tmp))?;
    fs::rename(&tmp, path).map_err(io_err(path))
}

struct Tally {
    scanned: u64,
    counterexamples: u64,
    errors: u64,
    bases: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Self {
            scanned: 0,
            counterexamples: 0,
            errors: 0,
            bases: Vec::new(),
        }
    }

    fn add(&mut self, basis: &str, counterexample: bool, failed: bool) {
        self.scanned += 1;
        if counterexample {
            self.counterexamples += 1;
            self.bases.push(basis.to_string());
        }
        if failed {
            self.errors += 1;
        }
    }
}

// Keeps every record up to and including `last`, truncating the rest.
fn recover<T: Denomination>(out: &Path, last: &Basis<T>) -> Result<(File, Tally), ScanError> {
    let mut file = OpenOptions::new()
        .read(true)
        .write(true)
        .open(out)
        .map_err(io_err(out))?;
    let mut tally = Tally::new();
    let mut keep = None;
    let mut offset = 0u64;
    let mut reader = BufReader::new(&file);
    let mut line = String::new();
    let mut lineno = 0;
    let target = last.to_string();
    while keep.is_none() {
        line.clear();
        let n = reader.read_line(&mut line).map_err(io_err(out))?;
        if n == 0 {
            break;
        }
        lineno += 1;
        offset += n as u64;
        let record: ScanRecord<T> =
            serde_json::from_str(line.trim_end()).map_err(|e| ScanError::Malformed {
                path: out.to_path_buf(),
                line: lineno,
                reason: e.to_string(),
            })?;
        let text = record.basis().to_string();
        tally.add(
            &text,
            record.is_counterexample(),
            matches!(record, ScanRecord::Failed { .. }),
        );
        if text == target {
            keep = Some(offset);
        }
    }
    let keep = keep.ok_or(ScanError::CheckpointMismatch(target))?;
    file.set_len(keep).map_err(io_err(out))?;
    file.seek(SeekFrom::End(0)).map_err(io_err(out))?;
    Ok((file, tally))
}

/// Runs a scan into `options.out`, evaluating batches on `options.threads`
/// workers. Output bytes do not depend on the thread count.
pub fn run_scan<T: Denomination>(
    spec: &ScanSpec<T>,
    options: &ScanOptions,
) -> Result<ScanOutcome<T>, ScanError> {
    let out = options.out.as_path();
    let ckpt = checkpoint_path(out);
    let threads = options.threads.max(1);

    let resume_from = if options.resume && ckpt.exists() {
        let text = fs::read_to_string(&ckpt).map_err(io_err(&ckpt))?;
        Some(Basis::<T>::parse(text.trim())?)
    } else {
        None
    };

    let (file, mut tally, mut bases) = match &resume_from {
        Some(last) => {
            let (file, tally) = recover(out, last)?;
            (file, tally, spec.bases().resume_after(last)?)
        }
        None => {
            if ckpt.exists() {
                fs::remove_file(&ckpt).map_err(io_err(&ckpt))?;
            }
            let file = File::create(out).map_err(io_err(out))?;
            (file, Tally::new(), spec.bases())
        }
    };
    let mut writer = io::BufWriter::new(file);

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| ScanError::Pool(e.to_string()))?;
    let batch_size = 64 * threads;
    let mut written = 0u64;
    let mut complete = true;

    loop {
        let mut take = batch_size;
        if let Some(limit) = options.stop_after {
            let left = limit.saturating_sub(written) as usize;
            if left == 0 {
                complete = bases.clone().next().is_none();
                break;
            }
            take = take.min(left);
        }
        let batch: Vec<Basis<T>> = bases.by_ref().take(take).collect();
        if batch.is_empty() {
            break;
        }
        let records: Vec<ScanRecord<T>> = pool.install(|| {
            batch
                .into_par_iter()
                .map(|b| evaluate(b, spec.h_cap))
                .collect()
        });
        for record in &records {
            let line = serde_json::to_string(record).expect("records serialize");
            writeln!(writer, "{line}").map_err(io_err(out))?;
            tally.add(
                &record.basis().to_string(),
                record.is_counterexample(),
                matches!(record, ScanRecord::Failed { .. }),
            );
        }
        written += records.len() as u64;
        writer.flush().map_err(io_err(out))?;
        writer.get_ref().sync_data().map_err(io_err(out))?;
        let last = records.last().expect("batch is non-empty").basis();
        write_checkpoint(&ckpt, last)?;
    }

    let summary = ScanSummary {
        scanned: tally.scanned,
        counterexamples: tally.counterexamples,
        errors: tally.errors,
        k: spec.k,
        ak_max: spec.ak_max,
        mode: spec.mode,
    };
    if complete {
        let line =
            serde_json::to_string(&SummaryLine { summary: &summary }).expect("summary serializes");
        writeln!(writer, "{line}").map_err(io_err(out))?;
        writer.flush().map_err(io_err(out))?;
    }
    Ok(ScanOutcome {
        summary,
        counterexample_bases: tally.bases,
        complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(out: &Path, threads: usize) -> ScanOptions {
        ScanOptions {
            out: out.to_path_buf(),
            resume: false,
            threads,
            stop_after: None,
        }
    }

    #[test]
    fn spec_validation() {
        assert!(ScanSpec::<u64>::new(0, 5, None, BasisShape::Symmetric).is_err());
        assert!(ScanSpec::<u64>::new(4, 3, None, BasisShape::Symmetric).is_err());
        assert!(ScanSpec::<u64>::new(1, 1, None, BasisShape::Symmetric).is_ok());
    }

    #[test]
    fn single_basis_scan() {
        let spec = ScanSpec::<u64>::new(1, 1, None, BasisShape::Symmetric).unwrap();
        let records: Vec<_> = scan_conjecture(&spec).collect();
        assert_eq!(records.len(), 1);
        match &records[0] {
            ScanRecord::Report(r) => assert!(r.conjecture_holds),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn file_scan_writes_summary() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("s.jsonl");
        let spec = ScanSpec::<u64>::new(1, 1, None, BasisShape::Symmetric).unwrap();
        let outcome = run_scan(&spec, &opts(&out, 1)).unwrap();
        assert_eq!(outcome.summary.scanned, 1);
        let text = fs::read_to_string(&out).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[1].starts_with(r#"{"summary":{"scanned":1,"counterexamples":0"#));
        assert_eq!(fs::read_to_string(checkpoint_path(&out)).unwrap(), "1\n");
    }

    #[test]
    fn failures_are_recorded_not_fatal() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("s.jsonl");
        // h * a_k overflows u8 for most of these
        let spec = ScanSpec::<u8>::new(3, 200, None, BasisShape::Symmetric).unwrap();
        let outcome = run_scan(&spec, &opts(&out, 2)).unwrap();
        assert!(outcome.summary.errors > 0);
        assert_eq!(outcome.summary.scanned, 198);
        let text = fs::read_to_string(&out).unwrap();
        assert!(text.lines().any(|l| l.contains("\"error\"")));
    }

    #[test]
    fn resume_matches_uninterrupted_run() {
        let dir = tempfile::tempdir().unwrap();
        let spec = ScanSpec::<u64>::new(7, 24, None, BasisShape::Symmetric).unwrap();
        let full = dir.path().join("full.jsonl");
        run_scan(&spec, &opts(&full, 1)).unwrap();

        let part = dir.path().join("part.jsonl");
        let mut o = opts(&part, 3);
        o.stop_after = Some(10);
        let first = run_scan(&spec, &o).unwrap();
        assert!(!first.complete);
        // simulate a torn write after the checkpoint
        let mut f = OpenOptions::new().append(true).open(&part).unwrap();
        f.write_all(b"{\"basis\":\"1,2").unwrap();
        drop(f);
        o.stop_after = None;
        o.resume = true;
        let second = run_scan(&spec, &o).unwrap();
        assert!(second.complete);
        assert_eq!(fs::read(&full).unwrap(), fs::read(&part).unwrap());
    }
}
