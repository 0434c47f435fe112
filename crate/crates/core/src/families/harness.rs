//! Exhaustive check of the closed-path primality criterion, with a
//! content-addressed cache of per-shape records.
//!
//! Cache layout: `<dir>/<first two hex digits>/<sha256>.json`, one
//! [`ShapeRecord`] per file, keyed by [`cache_key`].

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use polyprime_algebra::Budget;

use super::{enumerate_closed_paths, CanonicalForm};
use crate::classify::{closed_path_certificate, find_l_configurations, find_ladders};
use crate::error::FamilyError;
use crate::grid::{Cell, Orientation};
use crate::toric::{certify_primality, Certificate, PrimalityVerdict};
use crate::zigzag::{find_zigzag_walk, verify_zigzag};

/// Bumped whenever a change could alter a cached record.
pub const ENGINE_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Features {
    pub l_configurations: usize,
    pub ladders: usize,
    pub longest_block: usize,
    pub holes: usize,
    pub simple: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShapeRecord {
    pub cells: Vec<Cell>,
    pub rank: usize,
    pub features: Features,
    pub zigzag: bool,
    pub verdict: PrimalityVerdict,
    /// Problems found on this shape; empty unless a checked statement fails.
    pub violations: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seconds: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub cells: Vec<Cell>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub max_rank: usize,
    pub shapes: usize,
    pub per_rank: BTreeMap<usize, usize>,
    pub prime: usize,
    pub non_prime: usize,
    pub inconclusive: usize,
    pub full_certificates: usize,
    pub containment_only: usize,
    pub with_l_configuration: usize,
    pub ladder_only: usize,
    pub minimal_zigzag_rank: Option<usize>,
    pub cache_hits: usize,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub records: Vec<ShapeRecord>,
    pub summary: Summary,
}

impl Report {
    /// One JSON object per shape, then the summary, newline separated.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("record serializes"));
            out.push('\n');
        }
        let summary = serde_json::json!({ "summary": self.summary });
        out.push_str(&summary.to_string());
        out.push('\n');
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HarnessOptions {
    pub max_rank: usize,
    pub budget: Budget,
    pub jobs: Option<usize>,
    pub cache_dir: Option<PathBuf>,
    pub timings: bool,
}

impl HarnessOptions {
    pub fn new(max_rank: usize, budget: Budget) -> Self {
        HarnessOptions {
            max_rank,
            budget,
            jobs: None,
            cache_dir: None,
            timings: false,
        }
    }
}

/// sha256 over the canonical cells, the engine version and the budget.
pub fn cache_key(form: &CanonicalForm, budget: &Budget) -> String {
    let payload = serde_json::json!({
        "cells": form.cells,
        "engine": ENGINE_VERSION,
        "budget": budget,
    });
    hex::encode(Sha256::digest(payload.to_string().as_bytes()))
}

fn cache_path(dir: &Path, key: &str) -> PathBuf {
    dir.join(&key[..2]).join(format!("{key}.json"))
}

fn load_cached(dir: &Path, key: &str) -> Option<ShapeRecord> {
    let text = fs::read_to_string(cache_path(dir, key)).ok()?;
    serde_json::from_str(&text).ok()
}

fn store_cached(dir: &Path, key: &str, record: &ShapeRecord) {
    let path = cache_path(dir, key);
    if let Some(parent) = path.parent() {
        if fs::create_dir_all(parent).is_err() {
            return;
        }
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    if let Ok(text) = serde_json::to_string(record) {
        if fs::write(&tmp, text).is_ok() {
            let _ = fs::rename(&tmp, &path);
        }
    }
}

fn examine(form: &CanonicalForm, budget: &Budget) -> ShapeRecord {
    let p = form.polyomino();
    let mut violations = Vec::new();
    let l_configs = find_l_configurations(&p);
    let ladders = find_ladders(&p, 3);
    let longest_block = [Orientation::Horizontal, Orientation::Vertical]
        .into_iter()
        .flat_map(|o| p.maximal_blocks(o))
        .map(|b| b.len())
        .max()
        .unwrap_or(1);
    let holes = p.holes().len();
    let features = Features {
        l_configurations: l_configs.len(),
        ladders: ladders.len(),
        longest_block,
        holes,
        simple: p.is_simple(),
    };
    if closed_path_certificate(&p).is_none() {
        violations.push("not a closed path".to_string());
    }
    if longest_block < 3 {
        violations.push("no block of length three".to_string());
    }
    if holes != 1 {
        violations.push(format!("{holes} holes"));
    }
    let walk = find_zigzag_walk(&p);
    if let Some(w) = &walk {
        if !verify_zigzag(&p, w) {
            violations.push("zig-zag witness fails verification".to_string());
        }
    }
    let covered = !l_configs.is_empty() || !ladders.is_empty();
    if walk.is_none() != covered {
        violations.push(format!(
            "zig-zag walk {} but L-configuration or ladder {}",
            if walk.is_some() { "present" } else { "absent" },
            if covered { "present" } else { "absent" }
        ));
    }
    let verdict = match certify_primality(&p, budget) {
        Ok(v) => v,
        Err(e) => {
            violations.push(e.to_string());
            PrimalityVerdict::Inconclusive {
                reason: crate::toric::InconclusiveReason::NotCovered,
                budget: budget.clone(),
            }
        }
    };
    if verdict.is_prime() == walk.is_some() && violations.is_empty() {
        violations.push(format!("verdict {} disagrees with the zig-zag search", verdict.kind()));
    }
    ShapeRecord {
        cells: form.cells.clone(),
        rank: form.rank(),
        features,
        zigzag: walk.is_some(),
        verdict,
        violations,
        seconds: None,
    }
}

fn process(form: &CanonicalForm, opts: &HarnessOptions) -> (ShapeRecord, bool) {
    let key = cache_key(form, &opts.budget);
    if let Some(dir) = &opts.cache_dir {
        if let Some(mut hit) = load_cached(dir, &key) {
            if !opts.timings {
                hit.seconds = None;
            }
            return (hit, true);
        }
    }
    let start = Instant::now();
    let mut record = examine(form, &opts.budget);
    record.seconds = Some(start.elapsed().as_secs_f64());
    if let Some(dir) = &opts.cache_dir {
        store_cached(dir, &key, &record);
    }
    if !opts.timings {
        record.seconds = None;
    }
    (record, false)
}

fn summarize(max_rank: usize, records: &[ShapeRecord], cache_hits: usize) -> Summary {
    let mut s = Summary {
        max_rank,
        shapes: records.len(),
        per_rank: BTreeMap::new(),
        prime: 0,
        non_prime: 0,
        inconclusive: 0,
        full_certificates: 0,
        containment_only: 0,
        with_l_configuration: 0,
        ladder_only: 0,
        minimal_zigzag_rank: None,
        cache_hits,
        counterexamples: Vec::new(),
    };
    for r in records {
        *s.per_rank.entry(r.rank).or_default() += 1;
        match &r.verdict {
            PrimalityVerdict::Prime { certificate, .. } => {
                s.prime += 1;
                match certificate {
                    Certificate::Full { .. } => s.full_certificates += 1,
                    Certificate::ContainmentOnly { .. } => s.containment_only += 1,
                }
            }
            PrimalityVerdict::NonPrime { .. } => s.non_prime += 1,
            PrimalityVerdict::Inconclusive { .. } => s.inconclusive += 1,
        }
        if r.features.l_configurations > 0 {
            s.with_l_configuration += 1;
        } else if r.features.ladders > 0 {
            s.ladder_only += 1;
        }
        if r.zigzag && s.minimal_zigzag_rank.is_none_or(|m| r.rank < m) {
            s.minimal_zigzag_rank = Some(r.rank);
        }
        for v in &r.violations {
            s.counterexamples.push(Counterexample {
                cells: r.cells.clone(),
                detail: v.clone(),
            });
        }
    }
    s
}

/// Enumerates closed paths up to `opts.max_rank` and checks every one.
/// Never fails; problems are listed in the summary.
pub fn run_harness(opts: &HarnessOptions) -> Report {
    let work = || {
        let forms = enumerate_closed_paths(opts.max_rank);
        let results: Vec<(ShapeRecord, bool)> = forms.par_iter().map(|f| process(f, opts)).collect();
        let hits = results.iter().filter(|(_, h)| *h).count();
        let records: Vec<ShapeRecord> = results.into_iter().map(|(r, _)| r).collect();
        let summary = summarize(opts.max_rank, &records, hits);
        Report { records, summary }
    };
    match opts.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map(|pool| pool.install(work))
            .unwrap_or_else(|_| work()),
        None => work(),
    }
}

/// [`run_harness`], failing with the first counterexample if any.
pub fn verify_main_theorem(opts: &HarnessOptions) -> Result<Report, FamilyError> {
    let report = run_harness(opts);
    if let Some(c) = report.summary.counterexamples.first() {
        return Err(FamilyError::CounterexampleFound {
            cells: c.cells.clone(),
            detail: c.detail.clone(),
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_eight_report() {
        let report = verify_main_theorem(&HarnessOptions::new(8, Budget::unlimited())).unwrap();
        assert_eq!(report.summary.shapes, 1);
        assert_eq!(report.summary.prime, 1);
        assert_eq!(report.summary.with_l_configuration, 1);
        assert_eq!(report.summary.minimal_zigzag_rank, None);
        let lines = report.to_json_lines();
        assert_eq!(lines.lines().count(), 2);
        assert!(lines.lines().last().unwrap().starts_with("{\"summary\""));
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let mut opts = HarnessOptions::new(8, Budget::unlimited());
        opts.cache_dir = Some(dir.path().to_path_buf());
        let first = run_harness(&opts);
        assert_eq!(first.summary.cache_hits, 0);
        let second = run_harness(&opts);
        assert_eq!(second.summary.cache_hits, 1);
        assert_eq!(first.records, second.records);
        let key = cache_key(&super::super::canonical_form(&crate::shapes::frame3()), &opts.budget);
        assert!(dir.path().join(&key[..2]).join(format!("{key}.json")).exists());
    }
}
