//! Range scans over residue families N = An + B.
//!
//! [`scan_family`] sweeps one family and collects every failure of the
//! `S(N) = 0 (mod 4)` congruence. [`scan_all_pairs`] sweeps every pair
//! (A, B) with `2 <= A <= a_max`, `0 <= B < A`, early-exiting each pair on
//! its first failure, and reports the pairs that survive. Pair scans are
//! partitioned by (A, B) and run in parallel; output is merged in sorted
//! order, so reports are deterministic regardless of worker count.
//!
//! Progress can be checkpointed to a JSON-lines file (version `pcl-ckpt-1`)
//! and resumed; an interrupt/resume sequence produces a report identical to
//! an uninterrupted run.

use crate::arith::SieveTable;
use crate::error::{Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

pub const CHECKPOINT_VERSION: &str = "pcl-ckpt-1";

/// Outcome of sweeping one family N = An + B for n = 0..=n_max.
#[derive(Debug, Clone)]
pub struct FamilyScanResult {
    pub modulus: u64,
    pub residue: u64,
    pub n_max: u64,
    /// Number of n values processed, including skipped edge members N < 2.
    pub checked: u64,
    /// Failing members as (N, S mod 4), in increasing N.
    pub failures: Vec<(u64, u8)>,
    pub all_pass: bool,
    pub elapsed: Duration,
}

/// Hooley sum residue scan of one family member; `None` when it passes.
#[inline]
fn failure_at(big_n: u64, s0: &[u32]) -> Option<u8> {
    let mut s = 0u64;
    let mut k = 1u64;
    while k * k < big_n {
        s += u64::from(s0[(big_n - k * k) as usize]);
        k += 1;
    }
    if s % 4 != 0 {
        Some((s % 4) as u8)
    } else {
        None
    }
}

/// Evaluate `S(An + B) mod 4` for n = 0..=n_max, collecting every failure.
pub fn scan_family(
    modulus: u64,
    residue: u64,
    n_max: u64,
    table: &SieveTable,
) -> Result<FamilyScanResult> {
    if modulus == 0 {
        return Err(Error::Domain("scan_family: modulus A must be >= 1".into()));
    }
    if residue >= modulus {
        return Err(Error::Domain(format!(
            "scan_family: residue B={residue} must satisfy 0 <= B < A={modulus}"
        )));
    }
    let end = modulus
        .checked_mul(n_max)
        .and_then(|v| v.checked_add(residue))
        .ok_or_else(|| Error::Arithmetic("scan_family: A * n_max + B overflows u64".into()))?;
    if table.limit() < end {
        return Err(Error::Precondition(format!(
            "scan_family needs a sieve to {end}, have {}",
            table.limit()
        )));
    }

    let started = Instant::now();
    let s0 = table.sigma0_raw();
    let mut failures = Vec::new();
    for n in 0..=n_max {
        let big_n = modulus * n + residue;
        if big_n < 2 {
            log::debug!("scan ({modulus},{residue}): skipping N={big_n}, Hooley sum is empty");
            continue;
        }
        if let Some(r) = failure_at(big_n, s0) {
            failures.push((big_n, r));
        }
    }
    Ok(FamilyScanResult {
        modulus,
        residue,
        n_max,
        checked: n_max + 1,
        all_pass: failures.is_empty(),
        failures,
        elapsed: started.elapsed(),
    })
}

/// Per-pair outcome of a whole-grid scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairOutcome {
    pub a: u64,
    pub b: u64,
    pub n_max_reached: u64,
    pub checked: u64,
    pub failures: Vec<(u64, u8)>,
}

impl PairOutcome {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The surviving pairs and the structural shape they are conjectured to have.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairScanSummary {
    pub a_max: u64,
    pub n_limit: u64,
    pub passing_pairs: Vec<(u64, u64)>,
    /// True iff every passing pair has A = 0 (mod 4) and B = 2 (mod 4).
    pub structural_check: bool,
}

#[derive(Debug, Clone)]
pub struct PairScanReport {
    pub summary: PairScanSummary,
    /// One outcome per scanned pair, sorted by (A, B).
    pub pairs: Vec<PairOutcome>,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct PairScanConfig {
    pub a_max: u64,
    pub n_limit: u64,
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
    /// Checkpoint file, read when present and rewritten as the scan advances.
    pub checkpoint_path: Option<PathBuf>,
    /// Pairs scanned between checkpoint writes.
    pub checkpoint_every: usize,
    /// Stop (with a resource error) after this many pairs; lets callers and
    /// tests exercise interruption.
    pub pair_budget: Option<usize>,
}

impl PairScanConfig {
    pub fn new(a_max: u64, n_limit: u64) -> Self {
        PairScanConfig {
            a_max,
            n_limit,
            jobs: None,
            checkpoint_path: None,
            checkpoint_every: 256,
            pair_budget: None,
        }
    }
}

/// Per-pair progress as stored in a checkpoint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairProgress {
    pub a: u64,
    pub b: u64,
    /// Last n whose member was processed.
    pub last_n: u64,
    /// True once the pair passed its whole range or failed early.
    pub done: bool,
    pub failures: Vec<(u64, u8)>,
}

/// In-progress state of a whole-grid scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanCheckpoint {
    pub a_max: u64,
    pub n_limit: u64,
    /// Sorted by (a, b).
    pub pairs: Vec<PairProgress>,
}

#[derive(Serialize, Deserialize)]
struct CheckpointHeader {
    version: String,
    a_max: u64,
    n_limit: u64,
}

/// JSON-lines snapshot: a header line, then one line per pair.
pub fn checkpoint_write<W: Write>(state: &ScanCheckpoint, w: &mut W) -> Result<()> {
    let header = CheckpointHeader {
        version: CHECKPOINT_VERSION.to_string(),
        a_max: state.a_max,
        n_limit: state.n_limit,
    };
    writeln!(w, "{}", serde_json::to_string(&header).expect("header serializes"))?;
    for p in &state.pairs {
        writeln!(w, "{}", serde_json::to_string(p).expect("progress serializes"))?;
    }
    Ok(())
}

pub fn checkpoint_read<R: BufRead>(r: R) -> Result<ScanCheckpoint> {
    let bad = |what: String| Error::Format(format!("checkpoint: {what}"));
    let mut lines = r.lines();
    let header_line = lines
        .next()
        .ok_or_else(|| bad("file is empty".into()))??;
    let header: CheckpointHeader = serde_json::from_str(&header_line)
        .map_err(|e| bad(format!("unreadable header: {e}")))?;
    if header.version != CHECKPOINT_VERSION {
        return Err(bad(format!(
            "version {:?} does not match {:?}",
            header.version, CHECKPOINT_VERSION
        )));
    }
    let mut pairs = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for line in lines {
        let line = line?;
        if line.is_empty() {
            continue;
        }
        let p: PairProgress =
            serde_json::from_str(&line).map_err(|e| bad(format!("unreadable pair line: {e}")))?;
        if !seen.insert((p.a, p.b)) {
            return Err(bad(format!("duplicate pair ({}, {})", p.a, p.b)));
        }
        pairs.push(p);
    }
    Ok(ScanCheckpoint {
        a_max: header.a_max,
        n_limit: header.n_limit,
        pairs,
    })
}

pub fn checkpoint_write_file(state: &ScanCheckpoint, path: &Path) -> Result<()> {
    // checkpoint updates must stay atomic across kills
    let tmp = path.with_extension("tmp");
    {
        let mut w = BufWriter::new(fs::File::create(&tmp)?);
        checkpoint_write(state, &mut w)?;
        w.flush()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

pub fn checkpoint_read_file(path: &Path) -> Result<ScanCheckpoint> {
    checkpoint_read(BufReader::new(fs::File::open(path)?))
}

struct PendingPair {
    a: u64,
    b: u64,
    start_n: u64,
    failures: Vec<(u64, u8)>,
}

/// Scan one pair from `start_n`, early-exiting on the first failure.
fn scan_pair(pending: &PendingPair, n_limit: u64, table: &SieveTable) -> PairProgress {
    let PendingPair { a, b, start_n, failures } = pending;
    let (a, b, start_n) = (*a, *b, *start_n);
    let mut failures = failures.clone();
    debug_assert!(b <= n_limit);
    let pair_n_max = (n_limit - b) / a;
    let s0 = table.sigma0_raw();
    for n in start_n..=pair_n_max {
        let big_n = a * n + b;
        if big_n < 2 {
            log::debug!("scan ({a},{b}): skipping N={big_n}, Hooley sum is empty");
            continue;
        }
        if let Some(r) = failure_at(big_n, s0) {
            failures.push((big_n, r));
            return PairProgress { a, b, last_n: n, done: true, failures };
        }
    }
    PairProgress {
        a,
        b,
        last_n: pair_n_max,
        done: true,
        failures,
    }
}

fn snapshot(cfg: &PairScanConfig, state: &BTreeMap<(u64, u64), PairProgress>) -> ScanCheckpoint {
    ScanCheckpoint {
        a_max: cfg.a_max,
        n_limit: cfg.n_limit,
        pairs: state.values().cloned().collect(),
    }
}

/// Scan every pair (A, B) with `2 <= A <= a_max`, `0 <= B < A` over members
/// `N = An + B <= n_limit`, `N >= 2`.
pub fn scan_all_pairs(cfg: &PairScanConfig, table: &SieveTable) -> Result<PairScanReport> {
    if cfg.a_max < 2 {
        return Err(Error::Domain("scan_all_pairs: a_max must be >= 2".into()));
    }
    if table.limit() < cfg.n_limit {
        return Err(Error::Precondition(format!(
            "scan_all_pairs needs a sieve to {}, have {}",
            cfg.n_limit,
            table.limit()
        )));
    }
    let started = Instant::now();

    let mut state: BTreeMap<(u64, u64), PairProgress> = BTreeMap::new();
    if let Some(path) = &cfg.checkpoint_path {
        if path.exists() {
            let ckpt = checkpoint_read_file(path)?;
            if ckpt.a_max != cfg.a_max || ckpt.n_limit != cfg.n_limit {
                return Err(Error::Format(format!(
                    "checkpoint is for a_max={}, n_limit={}; requested a_max={}, n_limit={}",
                    ckpt.a_max, ckpt.n_limit, cfg.a_max, cfg.n_limit
                )));
            }
            for p in ckpt.pairs {
                state.insert((p.a, p.b), p);
            }
        }
    }

    let mut pending = Vec::new();
    for a in 2..=cfg.a_max {
        for b in 0..a {
            if b > cfg.n_limit {
                // no members at all; record an empty, vacuously passing pair
                state.entry((a, b)).or_insert(PairProgress {
                    a,
                    b,
                    last_n: 0,
                    done: true,
                    failures: Vec::new(),
                });
                continue;
            }
            match state.get(&(a, b)) {
                Some(p) if p.done => {}
                Some(p) => pending.push(PendingPair {
                    a,
                    b,
                    start_n: p.last_n + 1,
                    failures: p.failures.clone(),
                }),
                None => pending.push(PendingPair {
                    a,
                    b,
                    start_n: 0,
                    failures: Vec::new(),
                }),
            }
        }
    }

    let budget = cfg.pair_budget.unwrap_or(usize::MAX);
    let interrupted = pending.len() > budget;
    let todo = &pending[..pending.len().min(budget)];

    let pool = match cfg.jobs {
        Some(j) => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| Error::Resource(format!("thread pool: {e}")))?,
        ),
        None => None,
    };

    for chunk in todo.chunks(cfg.checkpoint_every.max(1)) {
        let scan_chunk =
            || -> Vec<PairProgress> { chunk.par_iter().map(|p| scan_pair(p, cfg.n_limit, table)).collect() };
        let results = match &pool {
            Some(pool) => pool.install(scan_chunk),
            None => scan_chunk(),
        };
        for p in results {
            state.insert((p.a, p.b), p);
        }
        if let Some(path) = &cfg.checkpoint_path {
            checkpoint_write_file(&snapshot(cfg, &state), path)?;
        }
    }

    if interrupted {
        let remaining = pending.len() - budget;
        return Err(Error::Resource(format!(
            "pair scan interrupted by the {budget}-pair budget with {remaining} pairs \
             remaining; partial results are only in the checkpoint{}",
            if cfg.checkpoint_path.is_some() { "" } else { " (none configured!)" }
        )));
    }

    let mut pairs = Vec::with_capacity(state.len());
    let mut passing = Vec::new();
    for (&(a, b), p) in &state {
        let checked = if b > cfg.n_limit { 0 } else { p.last_n + 1 };
        if p.failures.is_empty() {
            passing.push((a, b));
        }
        pairs.push(PairOutcome {
            a,
            b,
            n_max_reached: p.last_n,
            checked,
            failures: p.failures.clone(),
        });
    }
    let structural_check = passing.iter().all(|&(a, b)| a % 4 == 0 && b % 4 == 2);
    Ok(PairScanReport {
        summary: PairScanSummary {
            a_max: cfg.a_max,
            n_limit: cfg.n_limit,
            passing_pairs: passing,
            structural_check,
        },
        pairs,
        elapsed: started.elapsed(),
    })
}
