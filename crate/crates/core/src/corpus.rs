//! Seeded random graph families used by the regression corpora.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut r = rng(seed);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| r.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

/// Order in `lo..=hi` and edge density in `[0.1, 0.9)` drawn from `seed`.
pub fn random_mixed(lo: usize, hi: usize, seed: u64) -> Graph {
    let mut r = rng(seed ^ 0x9e37_79b9_7f4a_7c15);
    let n = r.gen_range(lo..=hi);
    let p = r.gen_range(0.1..0.9);
    random_gnp(n, p, seed)
}

fn closes_k4(adj: &[u64], u: usize, v: usize) -> bool {
    let common = adj[u] & adj[v];
    let mut c = common;
    while c != 0 {
        let w = c.trailing_zeros() as usize;
        if adj[w] & common != 0 {
            return true;
        }
        c &= c - 1;
    }
    false
}

/// A K4-free graph of maximum degree at most 3, close to cubic: edges are
/// added in random order while degrees allow and no K4 appears, then
/// `swaps` degree-preserving double-edge swaps shuffle the structure.
pub fn random_k4_free_subcubic(n: usize, swaps: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut adj = vec![0u64; n];
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(&mut r);
    for (u, v) in pairs {
        if adj[u].count_ones() < 3 && adj[v].count_ones() < 3 && !closes_k4(&adj, u, v) {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    for _ in 0..swaps {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| {
                let row = adj[u];
                (u + 1..n)
                    .filter(move |&v| row >> v & 1 == 1)
                    .map(move |v| (u, v))
            })
            .collect();
        if edges.len() < 2 {
            break;
        }
        let (a, b) = edges[r.gen_range(0..edges.len())];
        let (mut c, mut d) = edges[r.gen_range(0..edges.len())];
        if r.gen_bool(0.5) {
            std::mem::swap(&mut c, &mut d);
        }
        // a-b, c-d  ->  a-d, c-b
        if a == c || a == d || b == c || b == d {
            continue;
        }
        if adj[a] >> d & 1 == 1 || adj[c] >> b & 1 == 1 {
            continue;
        }
        let mut next = adj.clone();
        next[a] &= !(1 << b);
        next[b] &= !(1 << a);
        next[c] &= !(1 << d);
        next[d] &= !(1 << c);
        if closes_k4(&next, a, d) {
            continue;
        }
        next[a] |= 1 << d;
        next[d] |= 1 << a;
        if closes_k4(&next, c, b) {
            continue;
        }
        next[c] |= 1 << b;
        next[b] |= 1 << c;
        adj = next;
    }
    Graph::from_adjacency(adj).unwrap()
}

/// `t` closed neighborhoods `{u, x, y, z}` (claw, paw or diamond shaped)
/// plus `loose` extra vertices, joined by up to `extra` random edges
/// among non-centers while keeping maximum degree 3 and no K4.
///
/// Returns the graph and the maximal independent set of centers and loose
/// vertices. Centers are `4i`; loose vertices come last.
pub fn random_cell_rich(
    t: usize,
    loose: usize,
    extra: usize,
    seed: u64,
) -> (Graph, crate::VertexSet) {
    let mut r = rng(seed);
    let n = 4 * t + loose;
    let mut adj = vec![0u64; n];
    let add = |adj: &mut Vec<u64>, u: usize, v: usize| {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    };
    for i in 0..t {
        let u = 4 * i;
        for v in u + 1..u + 4 {
            add(&mut adj, u, v);
        }
        match r.gen_range(0..3) {
            0 => {}
            1 => add(&mut adj, u + 1, u + 3),
            _ => {
                add(&mut adj, u + 1, u + 3);
                add(&mut adj, u + 2, u + 3);
            }
        }
    }
    let others: Vec<usize> = (0..n).filter(|v| v % 4 != 0 || *v >= 4 * t).collect();
    let is_loose = |v: usize| v >= 4 * t;
    for _ in 0..extra {
        if others.len() < 2 {
            break;
        }
        let a = others[r.gen_range(0..others.len())];
        let b = others[r.gen_range(0..others.len())];
        let same_cell = !is_loose(a) && !is_loose(b) && a / 4 == b / 4;
        if a == b
            || same_cell
            || (is_loose(a) && is_loose(b))
            || adj[a] >> b & 1 == 1
            || adj[a].count_ones() >= 3
            || adj[b].count_ones() >= 3
            || closes_k4(&adj, a, b)
        {
            continue;
        }
        add(&mut adj, a, b);
    }
    let g = Graph::from_adjacency(adj).unwrap();
    // Loose vertices left without neighbors are still dominated by themselves.
    let i0 = (0..t).map(|i| 4 * i).chain(4 * t..n).collect();
    (g, i0)
}
