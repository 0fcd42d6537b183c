//! Transversals of the cell partition of `U`, their goodness, and the exact
//! probabilities of the per-cell bad events.
//!
//! A transversal picks one vertex from every cell of `I4`. It is good for
//! cell `i` unless it picks `v ∈ {x_i, y_i}` without picking any neighbor
//! of the other vertex `v'` of that pair. Under the uniform product
//! distribution the bad event of an `I5` cell has probability
//! `q_x + q_y`, where `q_v = 1/4 · Π_j (4 - m_j)/4` over the cells `j`
//! holding `m_j` neighbors of `v'` outside the cell.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::Rng;
use serde::Serialize;

use super::cells::Cell;
use super::select::{cell_index, SelectionState};
use crate::corpus::rng;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::report::rational;
use crate::vertex_set::VertexSet;

/// Exhaustive enumeration is limited to `4^|I4| <= 2^CENSUS_LIMIT_LOG2`.
pub const CENSUS_LIMIT_LOG2: u32 = 22;

fn ratio(a: u64, b: u64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// Where the neighbors of `v'` outside its own cell lie.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NeighborCase {
    /// `d = 0`.
    Inside,
    /// `d = 1`.
    One,
    /// `d = 2`, both in the same cell.
    TwoSameCell,
    /// `d = 2`, in distinct cells.
    TwoDistinctCells,
}

impl NeighborCase {
    /// The probability the case analysis assigns to `q_v`.
    pub fn expected_q(self) -> BigRational {
        match self {
            NeighborCase::Inside => ratio(1, 4),
            NeighborCase::One => ratio(3, 16),
            NeighborCase::TwoSameCell => ratio(1, 8),
            NeighborCase::TwoDistinctCells => ratio(9, 64),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BadEvent {
    pub cell: usize,
    /// The picked vertex `v`; its partner is `v'`.
    pub v: usize,
    pub partner: usize,
    pub case: NeighborCase,
    #[serde(serialize_with = "rational::serialize")]
    pub q: BigRational,
    /// Probability measured over all transversals, when enumerated.
    #[serde(serialize_with = "rational::serialize_opt")]
    pub q_exhaustive: Option<BigRational>,
}

/// `q_v` for cell `cell ∈ I5` and `v ∈ {x, y}` by case analysis.
pub fn bad_event_probability(
    g: &Graph,
    cells: &[Cell],
    state: &SelectionState,
    cell: usize,
    v: usize,
) -> Result<BadEvent> {
    if !state.i5.contains(cell) {
        return Err(Error::CellNotInI5(cell));
    }
    let c = cells[cell];
    let partner = c.partner(v);
    let idx = cell_index(g.order(), cells);
    let outside = g.neighbors(partner).difference(c.vertices);
    let mut per_cell: Vec<(usize, u64)> = Vec::new();
    for w in outside {
        let j = idx[w].expect("I5 cells only see vertices of U");
        match per_cell.iter_mut().find(|(cj, _)| *cj == j) {
            Some((_, m)) => *m += 1,
            None => per_cell.push((j, 1)),
        }
    }
    let case = match (outside.len(), per_cell.len()) {
        (0, _) => NeighborCase::Inside,
        (1, _) => NeighborCase::One,
        (2, 1) => NeighborCase::TwoSameCell,
        (2, 2) => NeighborCase::TwoDistinctCells,
        (d, _) => unreachable!("partner has {d} outside neighbors with degree <= 3"),
    };
    let q = per_cell
        .iter()
        .fold(ratio(1, 4), |acc, &(_, m)| acc * ratio(4 - m, 4));
    Ok(BadEvent {
        cell,
        v,
        partner,
        case,
        q,
        q_exhaustive: None,
    })
}

/// The bad-event probability `P(B_i) = q_x + q_y` of an `I5` cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellBad {
    pub cell: usize,
    pub x: BadEvent,
    pub y: BadEvent,
    #[serde(serialize_with = "rational::serialize")]
    pub p: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransversalStats {
    pub cells: usize,
    pub total: u64,
    /// Good transversals, goodness required at every `I4` cell.
    pub good_count: u64,
    /// Good transversals, goodness required at `I5` cells only.
    pub good_count_i5: u64,
    #[serde(serialize_with = "rational::serialize")]
    pub p_good: BigRational,
    #[serde(serialize_with = "rational::serialize")]
    pub p_good_i5: BigRational,
    pub per_cell_bad_prob: Vec<CellBad>,
    /// `Π_{i ∈ I6} (1 - P(B_i))`.
    #[serde(serialize_with = "rational::serialize")]
    pub product_bound: BigRational,
}

/// Is transversal `t` good at every cell listed in `scope`?
pub fn is_good(g: &Graph, cells: &[Cell], scope: VertexSet, t: VertexSet) -> bool {
    scope.iter().all(|j| {
        let c = cells[j];
        (!t.contains(c.x) || !t.is_disjoint(g.neighbors(c.y)))
            && (!t.contains(c.y) || !t.is_disjoint(g.neighbors(c.x)))
    })
}

/// Calls `f` on every transversal of the cells in `scope`, in odometer order.
pub fn for_each_transversal<F: FnMut(VertexSet)>(cells: &[Cell], scope: VertexSet, mut f: F) {
    let members: Vec<[usize; 4]> = scope.iter().map(|i| cells[i].members()).collect();
    let mut digits = vec![0usize; members.len()];
    let mut t: VertexSet = members.iter().map(|m| m[0]).collect();
    loop {
        f(t);
        let mut pos = 0;
        loop {
            if pos == members.len() {
                return;
            }
            t.remove(members[pos][digits[pos]]);
            digits[pos] = (digits[pos] + 1) % 4;
            t.insert(members[pos][digits[pos]]);
            if digits[pos] != 0 {
                break;
            }
            pos += 1;
        }
    }
}

fn census_guard(state: &SelectionState) -> Result<()> {
    let cells = state.i4.len();
    if 2 * cells as u32 > CENSUS_LIMIT_LOG2 {
        return Err(Error::CensusTooLarge {
            cells,
            limit_log2: CENSUS_LIMIT_LOG2,
        });
    }
    Ok(())
}

pub fn cell_bad_events(g: &Graph, cells: &[Cell], state: &SelectionState) -> Result<Vec<CellBad>> {
    state
        .i5
        .iter()
        .map(|i| {
            let x = bad_event_probability(g, cells, state, i, cells[i].x)?;
            let y = bad_event_probability(g, cells, state, i, cells[i].y)?;
            let p = &x.q + &y.q;
            Ok(CellBad { cell: i, x, y, p })
        })
        .collect()
}

struct Tally {
    total: u64,
    good: u64,
    good5: u64,
    hits: Vec<[u64; 2]>,
}

impl Tally {
    fn new(events: usize) -> Self {
        Tally {
            total: 0,
            good: 0,
            good5: 0,
            hits: vec![[0; 2]; events],
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.total += other.total;
        self.good += other.good;
        self.good5 += other.good5;
        for (a, b) in self.hits.iter_mut().zip(other.hits) {
            a[0] += b[0];
            a[1] += b[1];
        }
        self
    }
}

/// Exhaustive census over all `4^|I4|` transversals, also measuring every
/// `I5` bad-event probability directly.
pub fn transversal_census(
    g: &Graph,
    cells: &[Cell],
    state: &SelectionState,
) -> Result<TransversalStats> {
    census_guard(state)?;
    let mut bad = cell_bad_events(g, cells, state)?;
    let events: Vec<[(usize, usize); 2]> = bad
        .iter()
        .map(|b| [(b.x.v, b.x.partner), (b.y.v, b.y.partner)])
        .collect();
    let rest_scope = state.i4.difference(state.i5);
    // Split the product space on the choices of the first two cells.
    let fixed: Vec<usize> = state.i4.iter().take(2).collect();
    let free: VertexSet = state.i4.iter().skip(2).collect();
    let chunks = 4usize.pow(fixed.len() as u32);
    let run_chunk = |c: usize| {
        let mut acc = Tally::new(events.len());
        let base: VertexSet = fixed
            .iter()
            .enumerate()
            .map(|(p, &i)| cells[i].members()[(c >> (2 * p)) & 3])
            .collect();
        for_each_transversal(cells, free, |t| {
            let t = t.union(base);
            acc.total += 1;
            if is_good(g, cells, state.i5, t) {
                acc.good5 += 1;
                if is_good(g, cells, rest_scope, t) {
                    acc.good += 1;
                }
            }
            for (h, ev) in acc.hits.iter_mut().zip(&events) {
                for (slot, &(v, partner)) in h.iter_mut().zip(ev) {
                    if t.contains(v) && t.is_disjoint(g.neighbors(partner)) {
                        *slot += 1;
                    }
                }
            }
        });
        acc
    };
    #[cfg(feature = "parallel")]
    let tally = {
        use rayon::prelude::*;
        (0..chunks)
            .into_par_iter()
            .map(run_chunk)
            .reduce(|| Tally::new(events.len()), Tally::merge)
    };
    #[cfg(not(feature = "parallel"))]
    let tally = (0..chunks)
        .map(run_chunk)
        .fold(Tally::new(events.len()), Tally::merge);
    let Tally {
        total,
        good,
        good5,
        hits,
    } = tally;
    for (b, h) in bad.iter_mut().zip(&hits) {
        b.x.q_exhaustive = Some(ratio(h[0], total));
        b.y.q_exhaustive = Some(ratio(h[1], total));
    }
    let product_bound = bad
        .iter()
        .filter(|b| state.i6.contains(b.cell))
        .fold(BigRational::one(), |acc, b| {
            acc * (BigRational::one() - &b.p)
        });
    Ok(TransversalStats {
        cells: state.i4.len(),
        total,
        good_count: good,
        good_count_i5: good5,
        p_good: ratio(good, total),
        p_good_i5: ratio(good5, total),
        per_cell_bad_prob: bad,
        product_bound,
    })
}

/// Seeded sampling estimate of the good-transversal probability; approximate,
/// for partitions too large to enumerate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonteCarloEstimate {
    pub approximate: bool,
    pub samples: u64,
    pub good: u64,
    pub good_i5: u64,
    pub p_good: f64,
    /// 95% Wilson score interval for `p_good`.
    pub ci95: (f64, f64),
}

pub fn transversal_monte_carlo(
    g: &Graph,
    cells: &[Cell],
    state: &SelectionState,
    samples: u64,
    seed: u64,
) -> MonteCarloEstimate {
    let mut r = rng(seed);
    let members: Vec<[usize; 4]> = state.i4.iter().map(|i| cells[i].members()).collect();
    let (mut good, mut good5) = (0u64, 0u64);
    for _ in 0..samples {
        let t: VertexSet = members.iter().map(|m| m[r.gen_range(0..4)]).collect();
        if is_good(g, cells, state.i5, t) {
            good5 += 1;
            if is_good(g, cells, state.i4, t) {
                good += 1;
            }
        }
    }
    let p = if samples == 0 {
        0.0
    } else {
        good as f64 / samples as f64
    };
    MonteCarloEstimate {
        approximate: true,
        samples,
        good,
        good_i5: good5,
        p_good: p,
        ci95: wilson(good, samples, 1.96),
    }
}

fn wilson(k: u64, n: u64, z: f64) -> (f64, f64) {
    if n == 0 {
        return (0.0, 1.0);
    }
    let (k, n) = (k as f64, n as f64);
    let p = k / n;
    let denom = 1.0 + z * z / n;
    let centre = (p + z * z / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z * z / (4.0 * n * n)).sqrt() / denom;
    ((centre - half).max(0.0), (centre + half).min(1.0))
}

/// Checks `p_good <= Π_{I6}(1 - P(B_i)) <= (3/4)^|I6|` and that the supports
/// of distinct `I6` events are disjoint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductBoundReport {
    #[serde(serialize_with = "rational::serialize")]
    pub p_good: BigRational,
    #[serde(serialize_with = "rational::serialize")]
    pub p_good_i5: BigRational,
    #[serde(serialize_with = "rational::serialize")]
    pub product: BigRational,
    #[serde(serialize_with = "rational::serialize")]
    pub three_quarters_pow: BigRational,
    pub chain_holds: bool,
    pub supports_disjoint: bool,
}

impl ProductBoundReport {
    pub fn passed(&self) -> bool {
        self.chain_holds && self.supports_disjoint
    }
}

pub fn verify_product_bound(
    g: &Graph,
    cells: &[Cell],
    state: &SelectionState,
    stats: &TransversalStats,
) -> ProductBoundReport {
    let three_quarters_pow = num_traits::pow(ratio(3, 4), state.i6.len());
    let chain_holds = stats.p_good <= stats.p_good_i5
        && stats.p_good_i5 <= stats.product_bound
        && stats.product_bound <= three_quarters_pow;
    let supports: Vec<VertexSet> = state
        .i6
        .iter()
        .map(|i| super::select::event_support(g, cells, i))
        .collect();
    let supports_disjoint = supports
        .iter()
        .enumerate()
        .all(|(a, sa)| supports[a + 1..].iter().all(|sb| sa.is_disjoint(*sb)));
    ProductBoundReport {
        p_good: stats.p_good.clone(),
        p_good_i5: stats.p_good_i5.clone(),
        product: stats.product_bound.clone(),
        three_quarters_pow,
        chain_holds,
        supports_disjoint,
    }
}

/// `true` iff every case-analysis probability equals its enumerated value
/// and matches the case table.
pub fn bad_events_consistent(stats: &TransversalStats) -> bool {
    stats.per_cell_bad_prob.iter().all(|b| {
        [&b.x, &b.y].into_iter().all(|e| {
            e.q == e.case.expected_q() && e.q_exhaustive.as_ref().is_none_or(|m| *m == e.q)
        })
    })
}

pub fn min_bad_probability(stats: &TransversalStats) -> Option<BigRational> {
    stats.per_cell_bad_prob.iter().map(|b| b.p.clone()).min()
}

pub(crate) fn quarter() -> BigRational {
    ratio(1, 4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::cells::label_cells;
    use crate::pipeline::decompose::decompose;
    use crate::pipeline::select::select;

    fn setup(g: &Graph, i0: VertexSet, s: VertexSet) -> (Vec<Cell>, SelectionState) {
        let cells = label_cells(g, &decompose(g, i0).unwrap());
        let st = select(g, &cells, s);
        (cells, st)
    }

    fn diamond() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn single_diamond_census() {
        let g = diamond();
        let (cells, st) = setup(&g, VertexSet(1), VertexSet::EMPTY);
        let stats = transversal_census(&g, &cells, &st).unwrap();
        assert_eq!((stats.total, stats.good_count), (4, 2));
        assert_eq!(stats.p_good, ratio(1, 2));
        assert_eq!(stats.per_cell_bad_prob[0].p, ratio(1, 2));
        assert_eq!(stats.per_cell_bad_prob[0].x.case, NeighborCase::Inside);
        let rep = verify_product_bound(&g, &cells, &st, &stats);
        assert_eq!(rep.product, ratio(1, 2));
        assert!(rep.passed());
    }

    #[test]
    fn two_diamonds_census() {
        let g = diamond().copies(2);
        let (cells, st) = setup(&g, VertexSet(0b10001), VertexSet::EMPTY);
        let stats = transversal_census(&g, &cells, &st).unwrap();
        assert_eq!(stats.p_good, ratio(1, 4));
        let rep = verify_product_bound(&g, &cells, &st, &stats);
        assert_eq!(rep.product, ratio(1, 4));
        assert_eq!(rep.three_quarters_pow, ratio(9, 16));
        assert!(rep.passed());
    }

    #[test]
    fn empty_partition() {
        let g = Graph::cycle(6);
        let (cells, st) = setup(&g, VertexSet(0b010101), VertexSet::EMPTY);
        let stats = transversal_census(&g, &cells, &st).unwrap();
        assert_eq!((stats.total, stats.good_count), (1, 1));
        assert_eq!(stats.p_good, BigRational::one());
        assert!(verify_product_bound(&g, &cells, &st, &stats).passed());
    }

    /// Two claws `u_a = 0: {1, 2, 3}`, `u_b = 4: {5, 6, 7}` joined by
    /// partner edges chosen per case.
    fn two_claws(extra: &[(usize, usize)]) -> Graph {
        let mut e = vec![(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7)];
        e.extend_from_slice(extra);
        Graph::from_edges(8, e).unwrap()
    }

    #[test]
    fn case_one_outside_neighbor() {
        // y_a = 2 adjacent to z_b = 7: picking x_a leaves q = 1/4 * 3/4.
        let g = two_claws(&[(2, 7)]);
        let (cells, st) = setup(&g, VertexSet(0b10001), VertexSet::EMPTY);
        let ev = bad_event_probability(&g, &cells, &st, 0, 1).unwrap();
        assert_eq!(ev.case, NeighborCase::One);
        assert_eq!(ev.q, ratio(3, 16));
        let stats = transversal_census(&g, &cells, &st).unwrap();
        assert!(bad_events_consistent(&stats));
    }

    #[test]
    fn case_two_same_cell() {
        // y_a = 2 adjacent to y_b = 6 and z_b = 7.
        let g = two_claws(&[(2, 6), (2, 7)]);
        let (cells, st) = setup(&g, VertexSet(0b10001), VertexSet::EMPTY);
        let ev = bad_event_probability(&g, &cells, &st, 0, 1).unwrap();
        assert_eq!(ev.case, NeighborCase::TwoSameCell);
        assert_eq!(ev.q, ratio(1, 8));
        assert!(bad_events_consistent(
            &transversal_census(&g, &cells, &st).unwrap()
        ));
    }

    #[test]
    fn case_two_distinct_cells() {
        // Three claws; y_a = 2 adjacent to z_b = 7 and z_c = 11.
        let g = Graph::from_edges(
            12,
            [
                (0, 1),
                (0, 2),
                (0, 3),
                (4, 5),
                (4, 6),
                (4, 7),
                (8, 9),
                (8, 10),
                (8, 11),
                (2, 7),
                (2, 11),
            ],
        )
        .unwrap();
        let (cells, st) = setup(&g, VertexSet(0b1_0001_0001), VertexSet::EMPTY);
        let ev = bad_event_probability(&g, &cells, &st, 0, 1).unwrap();
        assert_eq!(ev.case, NeighborCase::TwoDistinctCells);
        assert_eq!(ev.q, ratio(9, 64));
        let stats = transversal_census(&g, &cells, &st).unwrap();
        assert!(bad_events_consistent(&stats));
        assert!(stats.per_cell_bad_prob.iter().all(|b| b.p >= quarter()));
    }

    #[test]
    fn not_in_i5_rejected() {
        let g = diamond().copies(2);
        let (cells, st) = setup(&g, VertexSet(0b10001), VertexSet(0b01));
        assert_eq!(
            bad_event_probability(&g, &cells, &st, 0, cells[0].x).unwrap_err(),
            Error::CellNotInI5(0)
        );
    }

    #[test]
    fn odometer_visits_every_transversal_once() {
        let g = diamond().copies(3);
        let (cells, st) = setup(&g, VertexSet(0b1_0001_0001), VertexSet::EMPTY);
        let mut seen = std::collections::BTreeSet::new();
        for_each_transversal(&cells, st.i4, |t| {
            assert_eq!(t.len(), 3);
            assert!(seen.insert(t));
        });
        assert_eq!(seen.len(), 64);
    }

    #[test]
    fn monte_carlo_brackets_exact_value() {
        let g = diamond().copies(2);
        let (cells, st) = setup(&g, VertexSet(0b10001), VertexSet::EMPTY);
        let mc = transversal_monte_carlo(&g, &cells, &st, 20_000, 11);
        assert!(mc.approximate);
        assert!(mc.ci95.0 <= 0.25 && 0.25 <= mc.ci95.1, "{mc:?}");
    }
}
