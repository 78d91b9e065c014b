//! Snapshot files for report trajectories.
//!
//! Values are stored with round-trip precision; set `UPDATE_GOLDEN=1` to
//! rewrite them from the current implementation.

#![allow(dead_code)]

use primechi::series::PartialSumReport;
use std::path::PathBuf;

pub const SNAPSHOT_TOL: f64 = 1e-12;

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn encode(reports: &[PartialSumReport]) -> String {
    let mut out = String::from(PartialSumReport::CSV_HEADER);
    out.push('\n');
    for r in reports {
        out.push_str(&format!(
            "{},{:e},{:e},{:e},{:e},{:e}\n",
            r.depth, r.value.re, r.value.im, r.target.re, r.target.im, r.residual
        ));
    }
    out
}

fn decode(text: &str) -> Vec<Vec<f64>> {
    text.lines()
        .skip(1)
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split(',').map(|f| f.parse().expect("numeric field")).collect())
        .collect()
}

/// Compares `reports` with the stored snapshot; returns the largest scaled
/// deviation, or an error naming the first structural difference.
pub fn check_snapshot(name: &str, reports: &[PartialSumReport]) -> Result<f64, String> {
    let path = golden_path(name);
    let fresh = encode(reports);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &fresh).map_err(|e| format!("{}: {e}", path.display()))?;
        return Ok(0.0);
    }
    let stored = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    let (want, got) = (decode(&stored), decode(&fresh));
    if want.len() != got.len() {
        return Err(format!("{name}: {} rows stored, {} produced", want.len(), got.len()));
    }
    let mut worst = 0.0f64;
    for (w, g) in want.iter().zip(&got) {
        if w[0] != g[0] {
            return Err(format!("{name}: depth {} stored, {} produced", w[0], g[0]));
        }
        for (a, b) in w[1..].iter().zip(&g[1..]) {
            worst = worst.max((a - b).abs() / a.abs().max(1.0));
        }
    }
    Ok(worst)
}
