//! Canonical keys for small graphs.
//!
//! The key packs the adjacency bits column by column — `(0,1), (0,2),
//! (1,2), (0,3), ...` — first pair most significant, and is minimized over
//! relabelings. Only relabelings that respect an isomorphism-invariant
//! vertex ordering (stable color refinement) are searched, so equal keys
//! still mean isomorphic graphs; the search is pruned on key prefixes.

use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::mis::guard;

/// Largest order whose key fits in 64 bits.
pub const CANON_LIMIT: usize = 11;
/// Largest order for the unrestricted `n!` minimization.
pub const BRUTE_CANON_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CanonicalGraph {
    /// The graph relabeled so that its key is read off in vertex order.
    pub graph: Graph,
    pub canonical_key: u64,
}

fn key_of(g: &Graph, perm: &[usize]) -> u64 {
    let mut key = 0u64;
    for i in 1..perm.len() {
        for j in 0..i {
            key = key << 1 | g.has_edge(perm[j], perm[i]) as u64;
        }
    }
    key
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let mut pos = vec![0; perm.len()];
    for (i, &v) in perm.iter().enumerate() {
        pos[v] = i;
    }
    Graph::from_edges(perm.len(), g.edges().map(|(u, v)| (pos[u], pos[v]))).unwrap()
}

/// Stable coloring by iterated (color, sorted neighbor colors) signatures,
/// starting from degrees. Colors are ranks of signatures, so the ordering
/// of color classes is isomorphism-invariant.
pub fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let rank = |sigs: &[(usize, Vec<usize>)]| -> Vec<usize> {
        let mut sorted: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        sigs.iter()
            .map(|s| sorted.binary_search(&s).unwrap())
            .collect()
    };
    let mut colors = rank(
        &(0..n)
            .map(|v| (g.degree(v) as usize, vec![]))
            .collect::<Vec<_>>(),
    );
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let next = rank(&sigs);
        let classes = |c: &[usize]| c.iter().max().map_or(0, |m| m + 1);
        if classes(&next) == classes(&colors) {
            return next;
        }
        colors = next;
    }
}

struct Search<'a> {
    g: &'a Graph,
    total_bits: u32,
    /// Allowed vertices for each position.
    slots: Vec<u64>,
    perm: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, depth: usize, used: u64, prefix: u64) {
        let n = self.slots.len();
        if depth == n {
            if self.best.as_ref().is_none_or(|(b, _)| prefix < *b) {
                self.best = Some((prefix, self.perm.clone()));
            }
            return;
        }
        let mut cand = self.slots[depth] & !used;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let mut p = prefix;
            for &w in &self.perm {
                p = p << 1 | self.g.has_edge(w, v) as u64;
            }
            let len = (depth * (depth + 1) / 2) as u32;
            if let Some((b, _)) = &self.best {
                let shift = self.total_bits - len;
                let bp = if shift >= 64 { 0 } else { b >> shift };
                if p > bp {
                    continue;
                }
            }
            self.perm.push(v);
            self.run(depth + 1, used | 1 << v, p);
            self.perm.pop();
        }
    }
}

fn minimize(g: &Graph, slots: Vec<u64>) -> CanonicalGraph {
    let n = g.order();
    let mut s = Search {
        g,
        total_bits: (n * n.saturating_sub(1) / 2) as u32,
        slots,
        perm: Vec::with_capacity(n),
        best: None,
    };
    s.run(0, 0, 0);
    let (key, perm) = s.best.expect("at least one relabeling");
    CanonicalGraph {
        graph: relabel(g, &perm),
        canonical_key: key,
    }
}

/// Canonical form via refinement-restricted minimization.
pub fn canonical_form(g: &Graph) -> Result<CanonicalGraph> {
    guard("canonical form", g.order(), CANON_LIMIT)?;
    let colors = refine_colors(g);
    let slots = {
        let mut order: Vec<usize> = (0..g.order()).collect();
        order.sort_by_key(|&v| colors[v]);
        order
            .iter()
            .map(|&v| {
                (0..g.order())
                    .filter(|&w| colors[w] == colors[v])
                    .fold(0u64, |m, w| m | 1 << w)
            })
            .collect()
    };
    Ok(minimize(g, slots))
}

/// Minimization over all `n!` relabelings; the reference for
/// [`canonical_form`]. Keys of the two differ, isomorphism classes do not.
pub fn canonical_form_bruteforce(g: &Graph) -> Result<CanonicalGraph> {
    guard("brute-force canonical form", g.order(), BRUTE_CANON_LIMIT)?;
    let all = g.vertices().bits();
    Ok(minimize(g, vec![all; g.order()]))
}

/// Exhaustive `n!` key without pruning, for cross-checking the pruned search.
pub fn min_key_all_permutations(g: &Graph) -> u64 {
    fn rec(g: &Graph, perm: &mut Vec<usize>, used: u64, best: &mut u64) {
        if perm.len() == g.order() {
            *best = (*best).min(key_of(g, perm));
            return;
        }
        for v in 0..g.order() {
            if used >> v & 1 == 0 {
                perm.push(v);
                rec(g, perm, used | 1 << v, best);
                perm.pop();
            }
        }
    }
    let mut best = u64::MAX;
    rec(g, &mut Vec::new(), 0, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::random_gnp;

    #[test]
    fn key_reads_relabelled_graph() {
        for seed in 0..30 {
            let g = random_gnp(7, 0.4, seed);
            let c = canonical_form(&g).unwrap();
            let id: Vec<usize> = (0..7).collect();
            assert_eq!(key_of(&c.graph, &id), c.canonical_key);
        }
    }

    #[test]
    fn pruned_matches_exhaustive() {
        for seed in 0..40 {
            let g = random_gnp(6, 0.5, seed);
            assert_eq!(
                canonical_form_bruteforce(&g).unwrap().canonical_key,
                min_key_all_permutations(&g)
            );
        }
    }

    #[test]
    fn invariant_under_relabeling() {
        for seed in 0..50 {
            let g = random_gnp(8, 0.45, seed);
            let perm: Vec<usize> = (0..8).map(|i| (3 * i + seed as usize) % 8).collect();
            let h = relabel(&g, &perm);
            assert_eq!(
                canonical_form(&g).unwrap().canonical_key,
                canonical_form(&h).unwrap().canonical_key
            );
        }
    }

    #[test]
    fn cycle_versus_two_triangles() {
        // Both 2-regular on six vertices; refinement cannot split them.
        let c6 = canonical_form(&Graph::cycle(6)).unwrap();
        let tt = canonical_form(&Graph::complete(3).copies(2)).unwrap();
        assert_ne!(c6.canonical_key, tt.canonical_key);
    }

    #[test]
    fn guard() {
        assert!(canonical_form(&Graph::empty(12)).is_err());
        assert!(canonical_form_bruteforce(&Graph::empty(9)).is_err());
    }
}
