//! Per-vertex exponents `ln(bound) / n` as functions of `x = k / n`.

use serde::Serialize;

use super::{corollary1_ln, eppstein_ln, nielsen_ln};
use crate::error::{Error, Result};
use crate::report::round_sig;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurveRow {
    pub x: f64,
    pub eppstein: f64,
    pub nielsen: f64,
    /// `x ln(1/x)`.
    pub interp: f64,
    pub corollary1: f64,
}

impl CurveRow {
    pub fn at(x: f64, eta: f64) -> Self {
        CurveRow {
            x,
            eppstein: eppstein_ln(1.0, x),
            nielsen: nielsen_ln(1.0, x),
            interp: -x * x.ln(),
            corollary1: corollary1_ln(1.0, x, eta),
        }
    }
}

/// `points` evenly spaced rows over `[1/5, 1/3]`, plus the anchors `1/4`
/// and `0.333` when the grid misses them.
pub fn curve_export(eta: f64, points: usize) -> Result<Vec<CurveRow>> {
    if points < 2 {
        return Err(Error::OutOfRange(format!(
            "need at least 2 points, got {points}"
        )));
    }
    if !(0.0..=1.0).contains(&eta) {
        return Err(Error::OutOfRange(format!("eta = {eta}")));
    }
    let (lo, hi) = (0.2, 1.0 / 3.0);
    let mut xs: Vec<f64> = (0..points)
        .map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64)
        .collect();
    for anchor in [0.25, 0.333] {
        if !xs.iter().any(|&x| (x - anchor).abs() < 1e-12) {
            xs.push(anchor);
        }
    }
    xs.sort_by(f64::total_cmp);
    Ok(xs.into_iter().map(|x| CurveRow::at(x, eta)).collect())
}

pub fn curve_csv(rows: &[CurveRow]) -> String {
    let mut out = String::from("x,eppstein,nielsen,interp,corollary1_eta\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            round_sig(r.x),
            round_sig(r.eppstein),
            round_sig(r.nielsen),
            round_sig(r.interp),
            round_sig(r.corollary1)
        ));
    }
    out
}
