//! Maximal induced bipartite subgraphs.
//!
//! Every maximal induced bipartite subgraph `H` of `G` splits as `A ∪ B` with
//! `A ∈ MIS(G)` and `B ∈ MIS(G - A)`. The canonical generator walks all such
//! ordered pairs, keeps the unions that are maximal in `G`, and records how
//! often each subgraph is hit.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mis::{enumerate_mis, guard, mis_within, BRUTE_FORCE_LIMIT};
use crate::vertex_set::VertexSet;

/// One maximal induced bipartite subgraph with the ordered pairs that
/// produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MibsRecord {
    pub vertices: VertexSet,
    /// Normalized pairs `(A, B)` with `|A| >= |B|`; equal-size pairs keep the
    /// smaller mask first.
    pub witnesses: Vec<(VertexSet, VertexSet)>,
    /// Number of generated ordered pairs `(A, B)` whose union is `vertices`.
    pub pair_hits: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MibsCensus {
    pub records: Vec<MibsRecord>,
    pub distinct_count: u64,
    /// Generated ordered pairs whose union is a maximal induced bipartite
    /// subgraph.
    pub ordered_pair_count: u64,
    /// Generated pairs whose union is bipartite but not maximal in `G`.
    pub non_maximal_candidates: u64,
    /// `by_a_size[k]`: records having a witness with `|A| = k`.
    pub by_a_size: Vec<u64>,
    /// Records none of whose generating pairs satisfies `|A| >= |B|`.
    pub unwitnessed: u64,
}

impl MibsCensus {
    pub fn vertex_sets(&self) -> Vec<VertexSet> {
        self.records.iter().map(|r| r.vertices).collect()
    }
}

/// True iff `s` induces a bipartite subgraph and no single vertex can be
/// added without creating an odd cycle.
pub fn is_maximal_bipartite(g: &Graph, s: VertexSet) -> bool {
    g.is_bipartite_within(s)
        && g.vertices()
            .difference(s)
            .iter()
            .all(|w| !g.is_bipartite_within(s.with(w)))
}

/// Subset scan; only the vertex sets are filled in.
pub fn enumerate_mibs_bruteforce(g: &Graph) -> Result<MibsCensus> {
    let n = g.order();
    guard("brute-force MIBS enumeration", n, BRUTE_FORCE_LIMIT)?;
    let records: Vec<MibsRecord> = (0u64..1 << n)
        .map(VertexSet)
        .filter(|&s| is_maximal_bipartite(g, s))
        .map(|vertices| MibsRecord {
            vertices,
            witnesses: Vec::new(),
            pair_hits: 0,
        })
        .collect();
    Ok(MibsCensus {
        distinct_count: records.len() as u64,
        records,
        ordered_pair_count: 0,
        non_maximal_candidates: 0,
        by_a_size: vec![0; n + 1],
        unwitnessed: 0,
    })
}

pub fn enumerate_mibs_canonical(g: &Graph) -> MibsCensus {
    let n = g.order();
    let mut found: BTreeMap<VertexSet, MibsRecord> = BTreeMap::new();
    let mut non_maximal = 0u64;
    let mut ordered = 0u64;
    let mut verdicts: BTreeMap<VertexSet, bool> = BTreeMap::new();
    for a in enumerate_mis(g).sets {
        for b in mis_within(g, g.vertices().difference(a)) {
            let h = a.union(b);
            let maximal = *verdicts
                .entry(h)
                .or_insert_with(|| is_maximal_bipartite(g, h));
            if !maximal {
                non_maximal += 1;
                continue;
            }
            ordered += 1;
            let rec = found.entry(h).or_insert_with(|| MibsRecord {
                vertices: h,
                witnesses: Vec::new(),
                pair_hits: 0,
            });
            rec.pair_hits += 1;
            if a.len() >= b.len() {
                let w = if a.len() == b.len() && b < a {
                    (b, a)
                } else {
                    (a, b)
                };
                if !rec.witnesses.contains(&w) {
                    rec.witnesses.push(w);
                }
            }
        }
    }
    let mut by_a_size = vec![0u64; n + 1];
    let mut unwitnessed = 0;
    let records: Vec<MibsRecord> = found
        .into_values()
        .map(|mut r| {
            r.witnesses.sort();
            let mut sizes: Vec<usize> = r.witnesses.iter().map(|(a, _)| a.len()).collect();
            sizes.sort_unstable();
            sizes.dedup();
            for k in sizes {
                by_a_size[k] += 1;
            }
            if r.witnesses.is_empty() {
                unwitnessed += 1;
            }
            r
        })
        .collect();
    MibsCensus {
        distinct_count: records.len() as u64,
        records,
        ordered_pair_count: ordered,
        non_maximal_candidates: non_maximal,
        by_a_size,
        unwitnessed,
    }
}

/// Outcome of checking `mibs(G) = 6 · mibs(G - K)` for a K4 component `K`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentIdentityReport {
    pub component: VertexSet,
    pub mibs_g: u64,
    pub mibs_rest: u64,
    pub identity_holds: bool,
    /// Every record meets `K` in exactly two vertices.
    pub two_per_record: bool,
}

impl ComponentIdentityReport {
    pub fn passed(&self) -> bool {
        self.identity_holds && self.two_per_record
    }
}

pub fn mibs_component_identity_check(g: &Graph) -> Result<ComponentIdentityReport> {
    let k = g
        .components()
        .into_iter()
        .find(|&c| c.len() == 4 && g.is_clique(c))
        .ok_or(Error::NoK4Component)?;
    let whole = enumerate_mibs_canonical(g);
    let rest = g.induced(g.vertices().difference(k))?;
    let rest_census = enumerate_mibs_canonical(&rest.graph);
    Ok(ComponentIdentityReport {
        component: k,
        mibs_g: whole.distinct_count,
        mibs_rest: rest_census.distinct_count,
        identity_holds: whole.distinct_count == 6 * rest_census.distinct_count,
        two_per_record: whole
            .records
            .iter()
            .all(|r| r.vertices.intersection(k).len() == 2),
    })
}
