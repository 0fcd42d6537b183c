//! Maximal independent sets: three independent enumerators and size profiles.
//!
//! * [`enumerate_mis_bruteforce`] scans every subset and is the oracle.
//! * [`enumerate_mis`] runs Bron–Kerbosch with Tomita pivoting on the
//!   complement graph, i.e. maximal cliques of the complement.
//! * [`enumerate_mis_branching`] follows the `G - u` / `G - N[u]` recurrence
//!   on a maximum-degree vertex and filters leaves for maximality.

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest order accepted by the subset-scanning oracles.
pub const BRUTE_FORCE_LIMIT: usize = 20;

/// Exact counts `mis_k` for `k = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SizeProfile {
    counts: Vec<u64>,
}

impl SizeProfile {
    pub fn zeros(n: usize) -> Self {
        SizeProfile {
            counts: vec![0; n + 1],
        }
    }

    pub fn from_sets(n: usize, sets: &[VertexSet]) -> Self {
        let mut p = SizeProfile::zeros(n);
        for s in sets {
            p.counts[s.len()] += 1;
        }
        p
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Count of sets of size exactly `k`; zero beyond the order.
    pub fn exactly(&self, k: usize) -> u64 {
        self.counts.get(k).copied().unwrap_or(0)
    }

    /// `mis_{<=k}`.
    pub fn at_most(&self, k: usize) -> u64 {
        self.counts.iter().take(k.saturating_add(1)).sum()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn total_big(&self) -> BigUint {
        BigUint::from(self.total())
    }

    /// Profile of a disjoint union: the convolution of the factors.
    pub fn convolve(&self, other: &SizeProfile) -> SizeProfile {
        let mut counts = vec![0u64; self.counts.len() + other.counts.len() - 1];
        for (i, &a) in self.counts.iter().enumerate() {
            for (j, &b) in other.counts.iter().enumerate() {
                counts[i + j] += a * b;
            }
        }
        SizeProfile { counts }
    }
}

/// The family `MIS(G)` (or a size-restricted part of it), sorted by mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MisFamily {
    pub sets: Vec<VertexSet>,
    pub profile: SizeProfile,
}

impl MisFamily {
    fn new(n: usize, mut sets: Vec<VertexSet>) -> Self {
        sets.sort_unstable();
        sets.dedup();
        let profile = SizeProfile::from_sets(n, &sets);
        MisFamily { sets, profile }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

pub(crate) fn guard(what: &'static str, n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::Guard { what, limit, n })
    } else {
        Ok(())
    }
}

/// Tests every subset of `V` for independence and domination.
pub fn enumerate_mis_bruteforce(g: &Graph) -> Result<MisFamily> {
    let n = g.order();
    guard("brute-force MIS enumeration", n, BRUTE_FORCE_LIMIT)?;
    let adj = g.adjacency_rows();
    let full = g.vertices().bits();
    let mut sets = Vec::new();
    for mask in 0u64..1 << n {
        let mut dominated = mask;
        let mut independent = true;
        for v in VertexSet(mask) {
            if adj[v] & mask != 0 {
                independent = false;
                break;
            }
            dominated |= adj[v];
        }
        if independent && dominated == full {
            sets.push(VertexSet(mask));
        }
    }
    Ok(MisFamily::new(n, sets))
}

/// All maximal independent sets of `g`.
pub fn enumerate_mis(g: &Graph) -> MisFamily {
    MisFamily::new(g.order(), mis_within(g, g.vertices()))
}

/// Maximal independent sets of the subgraph induced by `within`, expressed in
/// the vertex indices of `g`. For `within = V - A` this is `MIS(G - A)`.
pub fn mis_within(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    pivot_search(
        g,
        within,
        VertexSet::EMPTY,
        within,
        VertexSet::EMPTY,
        &mut out,
    );
    out
}

/// Bron–Kerbosch over the complement restricted to `within`: `r` is the
/// current independent set, `p` the candidates non-adjacent to all of `r`,
/// `x` the already-explored candidates.
fn pivot_search(
    g: &Graph,
    within: VertexSet,
    r: VertexSet,
    p: VertexSet,
    x: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    // Complement neighborhood of v inside `within`.
    let co = |v: usize| within.difference(g.closed_neighbors(v));
    let pivot = p
        .union(x)
        .iter()
        .max_by_key(|&u| (co(u).intersection(p).len(), std::cmp::Reverse(u)))
        .unwrap();
    let mut p = p;
    let mut x = x;
    for v in p.difference(co(pivot)) {
        let cv = co(v);
        pivot_search(
            g,
            within,
            r.with(v),
            p.intersection(cv),
            x.intersection(cv),
            out,
        );
        p.remove(v);
        x.insert(v);
    }
}

/// Output of the branching enumerator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchingResult {
    pub family: MisFamily,
    /// Nodes of the recursion tree, leaves included.
    pub nodes: u64,
    /// Leaves, i.e. candidate independent sets before the maximality filter.
    pub leaves: u64,
}

/// Enumerates maximal independent sets of size at most `k_cap` by branching
/// on a maximum-degree vertex `u` (lowest index on ties) into `G - u` with
/// budget `k` and `G - N[u]` with budget `k - 1`.
pub fn enumerate_mis_branching(g: &Graph, k_cap: usize) -> BranchingResult {
    let mut st = Branching {
        g,
        sets: Vec::new(),
        nodes: 0,
        leaves: 0,
    };
    st.branch(g.vertices(), VertexSet::EMPTY, k_cap);
    BranchingResult {
        family: MisFamily::new(g.order(), st.sets),
        nodes: st.nodes,
        leaves: st.leaves,
    }
}

struct Branching<'a> {
    g: &'a Graph,
    sets: Vec<VertexSet>,
    nodes: u64,
    leaves: u64,
}

impl Branching<'_> {
    fn branch(&mut self, alive: VertexSet, chosen: VertexSet, budget: usize) {
        self.nodes += 1;
        let Some(u) = max_degree_vertex(self.g, alive) else {
            self.leaves += 1;
            if self.g.is_maximal_independent(chosen) {
                self.sets.push(chosen);
            }
            return;
        };
        self.branch(alive.without(u), chosen, budget);
        if budget > 0 {
            let rest = alive.difference(self.g.closed_neighbors(u));
            self.branch(rest, chosen.with(u), budget - 1);
        }
    }
}

/// Vertex of maximum degree in the subgraph induced by `alive`, lowest index
/// first among ties.
fn max_degree_vertex(g: &Graph, alive: VertexSet) -> Option<usize> {
    let mut best: Option<(usize, usize)> = None;
    for v in alive {
        let d = g.neighbors(v).intersection(alive).len();
        if best.is_none_or(|(_, bd)| d > bd) {
            best = Some((v, d));
        }
    }
    best.map(|(v, _)| v)
}

pub fn mis_profile(g: &Graph) -> SizeProfile {
    enumerate_mis(g).profile
}

/// Lexicographically first (by sorted vertex list) maximal independent set of
/// minimum size.
pub fn minimum_mis(g: &Graph) -> VertexSet {
    enumerate_mis(g)
        .sets
        .into_iter()
        .min_by(|a, b| {
            a.len()
                .cmp(&b.len())
                .then_with(|| a.to_vec().cmp(&b.to_vec()))
        })
        .expect("every graph has a maximal independent set")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn bruteforce_examples() {
        let k3 = enumerate_mis_bruteforce(&Graph::complete(3)).unwrap();
        assert_eq!(k3.sets, vec![VertexSet(1), VertexSet(2), VertexSet(4)]);
        let c5 = enumerate_mis_bruteforce(&Graph::cycle(5)).unwrap();
        assert_eq!(c5.len(), 5);
        assert!(c5.sets.iter().all(|s| s.len() == 2));
        let two_triangles = Graph::complete(3).copies(2);
        assert_eq!(enumerate_mis_bruteforce(&two_triangles).unwrap().len(), 9);
    }

    #[test]
    fn bruteforce_guard() {
        let err = enumerate_mis_bruteforce(&Graph::empty(21)).unwrap_err();
        assert!(matches!(
            err,
            Error::Guard {
                n: 21,
                limit: 20,
                ..
            }
        ));
    }

    #[test]
    fn pivoting_examples() {
        assert_eq!(
            enumerate_mis(&Graph::complete(4)).profile.counts(),
            &[0, 4, 0, 0, 0]
        );
        let empty = enumerate_mis(&Graph::empty(0));
        assert_eq!(empty.sets, vec![VertexSet::EMPTY]);
        let d = enumerate_mis(&diamond());
        assert_eq!(
            d.sets,
            vec![VertexSet(0b0001), VertexSet(0b0010), VertexSet(0b1100)]
        );
        assert_eq!(d.profile.counts(), &[0, 2, 1, 0, 0]);
    }

    #[test]
    fn branching_examples() {
        let g = Graph::complete(3).disjoint_union(&Graph::complete(4));
        let r = enumerate_mis_branching(&g, 2);
        assert_eq!(r.family.len(), 12);
        assert!(enumerate_mis_branching(&Graph::complete(4), 0)
            .family
            .is_empty());
        let c5 = Graph::cycle(5);
        assert_eq!(
            enumerate_mis_branching(&c5, 2).family,
            enumerate_mis_bruteforce(&c5).unwrap()
        );
        assert!(r.nodes > r.leaves && r.leaves >= 12);
    }

    #[test]
    fn profiles() {
        assert_eq!(mis_profile(&Graph::cycle(5)).counts(), &[0, 0, 5, 0, 0, 0]);
        let p = mis_profile(&Graph::complete(3).disjoint_union(&Graph::complete(4)));
        assert_eq!((p.exactly(2), p.total()), (12, 12));
        assert_eq!(p.at_most(1), 0);
        assert_eq!(p.exactly(99), 0);
    }

    #[test]
    fn mis_within_matches_induced() {
        let g = Graph::cycle(6);
        let within = VertexSet(0b011110);
        let mut direct = mis_within(&g, within);
        direct.sort();
        let ind = g.induced(within).unwrap();
        let mut lifted: Vec<_> = enumerate_mis(&ind.graph)
            .sets
            .iter()
            .map(|&s| ind.lift(s))
            .collect();
        lifted.sort();
        assert_eq!(direct, lifted);
    }

    #[test]
    fn minimum_mis_is_lexicographic() {
        // Path 0-1-2-3: minimum MIS are {0,2}, {0,3}, {1,3}.
        assert_eq!(minimum_mis(&Graph::path(4)), VertexSet(0b0101));
        assert_eq!(minimum_mis(&Graph::empty(0)), VertexSet::EMPTY);
    }
}
