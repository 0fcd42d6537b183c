//! Simple undirected graphs on at most 64 vertices with bit-mask adjacency.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

pub const MAX_ORDER: usize = 64;

/// An immutable simple graph. Row `v` of `adj` is the neighbor mask of `v`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Result of [`Graph::induced`]: the subgraph plus `remap[new] = old`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    pub remap: Vec<usize>,
}

impl Induced {
    /// Translates a set over the subgraph's indices back to the parent graph.
    pub fn lift(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|v| self.remap[v]).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub max_degree: u32,
    pub degrees: Vec<u32>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        Graph { n, adj: vec![0; n] }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows; rows are symmetrized and the
    /// diagonal must be clear.
    pub fn from_adjacency(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        let full = VertexSet::full(n).bits();
        let mut g = Graph::empty(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                let bad = (row & !full).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex: bad, n });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for u in VertexSet(row) {
                g.adj[v] |= 1 << u;
                g.adj[u] |= 1 << v;
            }
        }
        Ok(g)
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        let full = VertexSet::full(n).bits();
        for v in 0..n {
            g.adj[v] = full & !(1 << v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let n = self.n + other.n;
        assert!(n <= MAX_ORDER, "union order {n} exceeds {MAX_ORDER}");
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&row| row << self.n));
        Graph { n, adj }
    }

    /// `t` disjoint copies of `self`.
    pub fn copies(&self, t: usize) -> Self {
        (0..t).fold(Graph::empty(0), |acc, _| acc.disjoint_union(self))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn adjacency_rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !((2u64 << u) - 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let degrees: Vec<u32> = (0..self.n).map(|v| self.degree(v)).collect();
        DegreeStats {
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            degrees,
        }
    }

    pub fn max_degree(&self) -> u32 {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Union of closed neighborhoods of the members of `s`.
    pub fn closed_neighborhood(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(s, |acc, v| acc.union(self.neighbors(v)))
    }

    /// Union of open neighborhoods of the members of `s`.
    pub fn open_neighborhood(&self, s: VertexSet) -> VertexSet {
        s.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(self.neighbors(v)))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.bits() == 0)
    }

    /// Independent and dominating.
    pub fn is_maximal_independent(&self, s: VertexSet) -> bool {
        self.is_independent(s) && self.closed_neighborhood(s) == self.vertices()
    }

    /// Returns some K4 as four ascending vertices, if one exists.
    pub fn find_k4(&self) -> Option<[usize; 4]> {
        for (u, v) in self.edges() {
            let common = self.adj[u] & self.adj[v] & !((2u64 << v) - 1);
            for w in VertexSet(common) {
                let rest = common & self.adj[w] & !((2u64 << w) - 1);
                if rest != 0 {
                    return Some([u, v, w, rest.trailing_zeros() as usize]);
                }
            }
        }
        None
    }

    pub fn is_k4_free(&self) -> bool {
        self.find_k4().is_none()
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.neighbors(v)))
    }

    /// Vertex-induced subgraph on `s`, preserving vertex order.
    pub fn induced(&self, s: VertexSet) -> Result<Induced> {
        if !s.is_subset(self.vertices()) {
            let bad = s.difference(self.vertices()).first().unwrap();
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                n: self.n,
            });
        }
        let remap = s.to_vec();
        let mut index = [usize::MAX; MAX_ORDER];
        for (i, &v) in remap.iter().enumerate() {
            index[v] = i;
        }
        let adj = remap
            .iter()
            .map(|&v| {
                VertexSet(self.adj[v] & s.bits())
                    .iter()
                    .fold(0u64, |row, u| row | 1 << index[u])
            })
            .collect();
        Ok(Induced {
            graph: Graph {
                n: remap.len(),
                adj,
            },
            remap,
        })
    }

    /// Two-coloring of the subgraph induced by `s`: returns one color class
    /// (the other is `s` minus it), or `None` when an odd cycle exists.
    pub fn bipartition_within(&self, s: VertexSet) -> Option<VertexSet> {
        let mut uncolored = s;
        let mut side = VertexSet::EMPTY;
        while let Some(root) = uncolored.first() {
            // Alternate BFS layers from `root`.
            let mut layer = VertexSet::singleton(root);
            let mut parity = false;
            uncolored.remove(root);
            let mut even = VertexSet::EMPTY;
            let mut odd = VertexSet::EMPTY;
            while !layer.is_empty() {
                if parity {
                    odd = odd.union(layer);
                } else {
                    even = even.union(layer);
                }
                let next = self.open_neighborhood(layer).intersection(uncolored);
                uncolored = uncolored.difference(next);
                layer = next;
                parity = !parity;
            }
            for class in [even, odd] {
                if !self.is_independent(class) {
                    return None;
                }
            }
            side = side.union(even);
        }
        Some(side)
    }

    pub fn is_bipartite_within(&self, s: VertexSet) -> bool {
        self.bipartition_within(s).is_some()
    }

    pub fn is_bipartite(&self) -> bool {
        self.is_bipartite_within(self.vertices())
    }

    /// Two-coloring witness, `true` for the side containing each component's
    /// lowest vertex.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let side = self.bipartition_within(self.vertices())?;
        Some((0..self.n).map(|v| side.contains(v)).collect())
    }

    /// Connected components of the subgraph induced by `s`, ordered by their
    /// lowest vertex.
    pub fn components_within(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut rest = s;
        let mut out = Vec::new();
        while let Some(root) = rest.first() {
            let mut comp = VertexSet::singleton(root);
            let mut frontier = comp;
            while !frontier.is_empty() {
                frontier = self
                    .open_neighborhood(frontier)
                    .intersection(s)
                    .difference(comp);
                comp = comp.union(frontier);
            }
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// True iff `self` is a disjoint union of exactly `k` cliques, each of
    /// order 3 or 4.
    pub fn is_union_of_k3_k4(&self, k: usize) -> bool {
        let comps = self.components();
        comps.len() == k
            && comps
                .iter()
                .all(|&c| matches!(c.len(), 3 | 4) && self.is_clique(c))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Graph {
        // K4 minus the edge {2,3}.
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn degree_stats_examples() {
        assert_eq!(Graph::complete(4).degree_stats().max_degree, 3);
        assert_eq!(Graph::cycle(5).degree_stats().degrees, vec![2; 5]);
        assert_eq!(Graph::empty(3).degree_stats().max_degree, 0);
    }

    #[test]
    fn k4_freeness_examples() {
        assert!(!Graph::complete(4).is_k4_free());
        assert!(diamond().is_k4_free());
        assert!(!Graph::complete(4).copies(2).is_k4_free());
        assert_eq!(Graph::complete(5).find_k4(), Some([0, 1, 2, 3]));
    }

    #[test]
    fn induced_examples() {
        let k3 = Graph::complete(4).induced(VertexSet::full(3)).unwrap();
        assert_eq!(k3.graph, Graph::complete(3));
        let p4 = Graph::cycle(5).induced(VertexSet::full(4)).unwrap();
        assert_eq!(p4.graph, Graph::path(4));
        let c5 = Graph::cycle(5);
        assert_eq!(c5.induced(c5.vertices()).unwrap().graph, c5);
        let lifted = c5.induced(VertexSet(0b10110)).unwrap();
        assert_eq!(lifted.remap, vec![1, 2, 4]);
        assert_eq!(lifted.lift(VertexSet(0b101)), VertexSet(0b10010));
    }

    #[test]
    fn induced_rejects_out_of_range() {
        let err = Graph::cycle(5).induced(VertexSet(1 << 7)).unwrap_err();
        assert_eq!(err, Error::VertexOutOfRange { vertex: 7, n: 5 });
    }

    #[test]
    fn bipartite_examples() {
        assert!(!Graph::cycle(5).is_bipartite());
        assert!(Graph::path(4).is_bipartite());
        assert!(!Graph::complete(4).is_bipartite());
        let coloring = Graph::cycle(6).two_coloring().unwrap();
        let g = Graph::cycle(6);
        assert!(g.edges().all(|(u, v)| coloring[u] != coloring[v]));
    }

    #[test]
    fn components_examples() {
        let g = Graph::complete(3).disjoint_union(&Graph::complete(4));
        let sizes: Vec<usize> = g.components().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![3, 4]);
        assert_eq!(Graph::cycle(6).components().len(), 1);
        assert_eq!(
            Graph::empty(3).components(),
            vec![VertexSet(1), VertexSet(2), VertexSet(4)]
        );
    }

    #[test]
    fn bad_edges_rejected() {
        assert_eq!(
            Graph::from_edges(3, [(1, 1)]).unwrap_err(),
            Error::SelfLoop(1)
        );
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert_eq!(
            Graph::from_edges(65, []).unwrap_err(),
            Error::OrderTooLarge(65)
        );
    }

    #[test]
    fn k3_k4_union_structure() {
        let g = Graph::complete(3).disjoint_union(&Graph::complete(4));
        assert!(g.is_union_of_k3_k4(2));
        assert!(!g.is_union_of_k3_k4(1));
        assert!(Graph::empty(0).is_union_of_k3_k4(0));
        assert!(!diamond().is_union_of_k3_k4(1));
    }
}
