//! Every maximal independent set of size `k` meets each cell, and its trace
//! on `U` is a good transversal of the cells it meets only once.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::Serialize;

use super::cells::Cell;
use super::census::{is_good, transversal_census};
use super::select::select;
use crate::error::Result;
use crate::graph::Graph;
use crate::mis::enumerate_mis;
use crate::vertex_set::VertexSet;

/// One family `I_S` of maximal independent sets sharing the same `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaptureFamily {
    pub s: VertexSet,
    pub size: u64,
    /// `|V - U|`.
    pub outside: usize,
    pub good_count: u64,
    pub good_count_i5: u64,
    /// Members whose trace fails goodness at some `I4 - I5` cell.
    pub not_good_outside_i5: u64,
    /// Whether `|I_S| <= good_count_i5 * 2^|V - U|`.
    pub size_bound_i5: bool,
    /// Whether `|I_S| <= good_count * 2^|V - U|`.
    pub size_bound: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CaptureViolations {
    /// Some `I ∩ V_i` is empty.
    pub meets_every_cell: u64,
    /// `k < ℓ + |S|`.
    pub size_vs_cells: u64,
    /// `I ∩ U` is not a transversal good at every `I5` cell.
    pub good_trace: u64,
    /// `|I_S| > good_count_i5 * 2^|V - U|`.
    pub family_bound: u64,
}

impl CaptureViolations {
    pub fn total(&self) -> u64 {
        self.meets_every_cell + self.size_vs_cells + self.good_trace + self.family_bound
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaptureReport {
    pub k: usize,
    pub sets: u64,
    pub families: Vec<CaptureFamily>,
    pub violations: CaptureViolations,
    /// Traces good at `I5` cells but not at every `I4` cell.
    pub not_good_outside_i5: u64,
}

impl CaptureReport {
    pub fn passed(&self) -> bool {
        self.violations.total() == 0
    }
}

/// Partitions the size-`k` maximal independent sets of `g` by
/// `S = {i : |I ∩ V_i| >= 2}` and checks each family.
pub fn verify_is_capture(g: &Graph, cells: &[Cell], k: usize) -> Result<CaptureReport> {
    let ell = cells.len();
    let mut violations = CaptureViolations::default();
    let mut groups: BTreeMap<VertexSet, Vec<VertexSet>> = BTreeMap::new();
    let family = enumerate_mis(g);
    for &i in family.sets.iter().filter(|s| s.len() == k) {
        let hits: Vec<usize> = cells
            .iter()
            .map(|c| i.intersection(c.vertices).len())
            .collect();
        if hits.contains(&0) {
            violations.meets_every_cell += 1;
        }
        let s: VertexSet = (0..ell).filter(|&j| hits[j] >= 2).collect();
        if k < ell + s.len() {
            violations.size_vs_cells += 1;
        }
        groups.entry(s).or_default().push(i);
    }

    let mut families = Vec::with_capacity(groups.len());
    let mut sets = 0u64;
    let mut not_good_total = 0u64;
    for (s, members) in groups {
        let st = select(g, cells, s);
        let stats = transversal_census(g, cells, &st)?;
        let extra = st.i4.difference(st.i5);
        let mut not_good = 0u64;
        for &i in &members {
            let t = i.intersection(st.u);
            let transversal = st
                .i4
                .iter()
                .all(|j| t.intersection(cells[j].vertices).len() == 1);
            if !transversal || !is_good(g, cells, st.i5, t) {
                violations.good_trace += 1;
            } else if !is_good(g, cells, extra, t) {
                not_good += 1;
            }
        }
        let outside = g.order() - st.u.len();
        let size = members.len() as u64;
        let within = |good: u64| BigUint::from(size) <= (BigUint::from(good) << outside);
        let size_bound_i5 = within(stats.good_count_i5);
        if !size_bound_i5 {
            violations.family_bound += 1;
        }
        sets += size;
        not_good_total += not_good;
        families.push(CaptureFamily {
            s,
            size,
            outside,
            good_count: stats.good_count,
            good_count_i5: stats.good_count_i5,
            not_good_outside_i5: not_good,
            size_bound_i5,
            size_bound: within(stats.good_count),
        });
    }
    Ok(CaptureReport {
        k,
        sets,
        families,
        violations,
        not_good_outside_i5: not_good_total,
    })
}
