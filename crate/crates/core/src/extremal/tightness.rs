//! How close the exhaustive maxima come to the counting bounds.

use std::str::FromStr;

use serde::Serialize;

use super::generate::{generate_all, Filter};
use super::par_map;
use super::theorem2::class_profiles;
use crate::bounds::{corollary1_ln, eppstein_ln, nielsen_ln};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::to_graph6;
use crate::mibs::enumerate_mibs_canonical;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSelector {
    Eppstein,
    Nielsen,
    Corollary1 { eta: f64 },
}

impl BoundSelector {
    pub fn ln(self, n: usize, k: usize) -> f64 {
        let (n, k) = (n as f64, k as f64);
        match self {
            BoundSelector::Eppstein => eppstein_ln(n, k),
            BoundSelector::Nielsen => nielsen_ln(n, k),
            BoundSelector::Corollary1 { eta } => corollary1_ln(n, k, eta),
        }
    }
}

impl FromStr for BoundSelector {
    type Err = Error;

    /// `eppstein`, `nielsen`, or `corollary1:<eta>`.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            None if s == "eppstein" => Ok(BoundSelector::Eppstein),
            None if s == "nielsen" => Ok(BoundSelector::Nielsen),
            Some(("corollary1", eta)) => {
                let eta: f64 = eta
                    .parse()
                    .map_err(|_| Error::OutOfRange(format!("bad eta {eta:?}")))?;
                if !(0.0..=1.0).contains(&eta) {
                    return Err(Error::OutOfRange(format!("eta {eta} outside [0, 1]")));
                }
                Ok(BoundSelector::Corollary1 { eta })
            }
            _ => Err(Error::OutOfRange(format!(
                "unknown bound {s:?} (eppstein, nielsen, corollary1:<eta>)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TightnessRow {
    pub k: usize,
    /// Largest `mis_k` (sets of size exactly `k`).
    pub max_exact: u64,
    /// Largest `mis_{<=k}`.
    pub max_at_most: u64,
    pub bound: f64,
    /// `max_at_most / bound`.
    pub ratio: f64,
    pub argmax: Option<String>,
}

pub fn tightness_scan(n: usize, filter: Filter, bound: BoundSelector) -> Result<Vec<TightnessRow>> {
    let classes: Vec<Graph> = generate_all(n, filter)?
        .into_iter()
        .map(|c| c.graph)
        .collect();
    Ok(tightness_scan_graphs(n, &classes, bound))
}

/// The scan over an explicit list of order-`n` graphs, e.g. a seeded corpus
/// beyond exhaustive range.
pub fn tightness_scan_graphs(
    n: usize,
    graphs: &[Graph],
    bound: BoundSelector,
) -> Vec<TightnessRow> {
    let profiles = class_profiles(graphs);
    (0..=n)
        .map(|k| {
            let best = graphs
                .iter()
                .zip(&profiles)
                .max_by_key(|(_, p)| p.at_most(k));
            let max_exact = profiles.iter().map(|p| p.exactly(k)).max().unwrap_or(0);
            let max_at_most = best.map_or(0, |(_, p)| p.at_most(k));
            let ln_b = bound.ln(n, k);
            let ratio = if max_at_most == 0 {
                0.0
            } else {
                ((max_at_most as f64).ln() - ln_b).exp()
            };
            TightnessRow {
                k,
                max_exact,
                max_at_most,
                bound: ln_b.exp(),
                ratio,
                argmax: best.filter(|_| max_at_most > 0).map(|(g, _)| to_graph6(g)),
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MibsScan {
    pub n: usize,
    pub filter: Filter,
    pub classes: usize,
    pub max_distinct: u64,
    pub argmax: Option<String>,
    /// `12^{n/4}`.
    pub bound_12: f64,
    pub ratio_12: f64,
    /// `6^{n/4}`, attained by disjoint `K4`s.
    pub bound_6: f64,
    pub ratio_6: f64,
}

pub fn mibs_scan(n: usize, filter: Filter) -> Result<MibsScan> {
    let classes: Vec<Graph> = generate_all(n, filter)?
        .into_iter()
        .map(|c| c.graph)
        .collect();
    Ok(mibs_scan_graphs(n, filter, &classes))
}

/// The scan over an explicit list of order-`n` graphs from `filter`.
pub fn mibs_scan_graphs(n: usize, filter: Filter, classes: &[Graph]) -> MibsScan {
    let counts = par_map(classes, |g| enumerate_mibs_canonical(g).distinct_count);
    let best = counts
        .iter()
        .enumerate()
        .max_by_key(|&(i, &c)| (c, std::cmp::Reverse(i)));
    let max_distinct = best.map_or(0, |(_, &c)| c);
    let bound_12 = 12f64.powf(n as f64 / 4.0);
    let bound_6 = 6f64.powf(n as f64 / 4.0);
    MibsScan {
        n,
        filter,
        classes: classes.len(),
        max_distinct,
        argmax: best.map(|(i, _)| to_graph6(&classes[i])),
        bound_12,
        ratio_12: max_distinct as f64 / bound_12,
        bound_6,
        ratio_6: max_distinct as f64 / bound_6,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_attains_at_n4() {
        let rows = tightness_scan(4, Filter::None, BoundSelector::Eppstein).unwrap();
        assert!((rows[1].ratio - 1.0).abs() < 1e-12);
        assert_eq!(rows[1].argmax.as_deref(), Some("C~"));
    }

    #[test]
    fn selector_parsing() {
        assert_eq!(
            "nielsen".parse::<BoundSelector>().unwrap(),
            BoundSelector::Nielsen
        );
        assert_eq!(
            "corollary1:0.4".parse::<BoundSelector>().unwrap(),
            BoundSelector::Corollary1 { eta: 0.4 }
        );
        assert!("corollary1:2".parse::<BoundSelector>().is_err());
    }
}
