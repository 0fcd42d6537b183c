//! One representative per isomorphism class, built by adding a vertex to
//! every class of the previous order in every possible way.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::canon::{canonical_form, canonical_form_bruteforce, CanonicalGraph};
use super::par_map;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mis::guard;

pub const GENERATION_LIMIT: usize = 8;
/// Largest order for the all-adjacency-matrices scan.
pub const MATRIX_SCAN_LIMIT: usize = 6;

/// Hereditary graph families; each is closed under vertex deletion, so
/// augmenting the previous level's classes reaches every member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Filter {
    None,
    K4Free,
    MaxDeg3,
    Both,
}

impl Filter {
    pub const ALL: [Filter; 4] = [Filter::None, Filter::K4Free, Filter::MaxDeg3, Filter::Both];

    fn k4_free(self) -> bool {
        matches!(self, Filter::K4Free | Filter::Both)
    }

    fn max_deg3(self) -> bool {
        matches!(self, Filter::MaxDeg3 | Filter::Both)
    }

    pub fn accepts(self, g: &Graph) -> bool {
        (!self.k4_free() || g.is_k4_free()) && (!self.max_deg3() || g.max_degree() <= 3)
    }

    /// Whether adding a vertex adjacent to `mask` keeps `g` in the family.
    fn accepts_extension(self, g: &Graph, mask: u64) -> bool {
        if self.max_deg3()
            && (mask.count_ones() > 3 || crate::VertexSet(mask).iter().any(|v| g.degree(v) >= 3))
        {
            return false;
        }
        !self.k4_free() || !has_triangle(g, mask)
    }
}

fn has_triangle(g: &Graph, mask: u64) -> bool {
    crate::VertexSet(mask).iter().any(|a| {
        let rest = g.neighbors(a).bits() & mask;
        crate::VertexSet(rest)
            .iter()
            .any(|b| g.neighbors(b).bits() & rest != 0)
    })
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Filter::None => "none",
            Filter::K4Free => "k4free",
            Filter::MaxDeg3 => "maxdeg3",
            Filter::Both => "both",
        })
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Filter::None),
            "k4free" | "k4-free" => Ok(Filter::K4Free),
            "maxdeg3" => Ok(Filter::MaxDeg3),
            "both" => Ok(Filter::Both),
            _ => Err(Error::OutOfRange(format!(
                "unknown filter {s:?} (none, k4free, maxdeg3, both)"
            ))),
        }
    }
}

fn add_vertex(g: &Graph, mask: u64) -> Graph {
    let n = g.order();
    let mut rows = g.adjacency_rows().to_vec();
    for v in crate::VertexSet(mask) {
        rows[v] |= 1 << n;
    }
    rows.push(mask);
    Graph::from_adjacency(rows).unwrap()
}

/// Classes of order `prev.len() + 1`, from the classes one order lower.
/// Sorted by canonical key.
pub fn extend_level(prev: &[Graph], filter: Filter) -> Result<Vec<CanonicalGraph>> {
    let per_parent: Vec<Result<Vec<CanonicalGraph>>> = par_map(prev, |g| {
        let n = g.order();
        (0..1u64 << n)
            .filter(|&m| filter.accepts_extension(g, m))
            .map(|m| canonical_form(&add_vertex(g, m)))
            .collect()
    });
    let mut seen = BTreeMap::new();
    for batch in per_parent {
        for c in batch? {
            seen.entry(c.canonical_key).or_insert(c);
        }
    }
    Ok(seen.into_values().collect())
}

/// All isomorphism classes of order `n` in `filter`, sorted by key.
pub fn generate_all(n: usize, filter: Filter) -> Result<Vec<CanonicalGraph>> {
    guard("isomorphism-free generation", n, GENERATION_LIMIT)?;
    let mut level = vec![canonical_form(&Graph::empty(0))?];
    for _ in 0..n {
        let graphs: Vec<Graph> = level.into_iter().map(|c| c.graph).collect();
        level = extend_level(&graphs, filter)?;
    }
    Ok(level)
}

/// Reference census: every labeled graph on `n` vertices, deduplicated by
/// the unrestricted minimal key. Sorted by that key.
pub fn generate_by_matrix_scan(n: usize, filter: Filter) -> Result<Vec<CanonicalGraph>> {
    guard("adjacency matrix scan", n, MATRIX_SCAN_LIMIT)?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let mut seen = BTreeMap::new();
    for bits in 0u64..1 << pairs.len() {
        let g = Graph::from_edges(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &e)| e),
        )?;
        if !filter.accepts(&g) {
            continue;
        }
        let c = canonical_form_bruteforce(&g)?;
        seen.entry(c.canonical_key).or_insert(c);
    }
    Ok(seen.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=5)
            .map(|n| generate_all(n, Filter::None).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 1, 2, 4, 11, 34]);
        assert_eq!(generate_all(4, Filter::K4Free).unwrap().len(), 10);
    }

    #[test]
    fn filters_respected() {
        for f in Filter::ALL {
            for c in generate_all(5, f).unwrap() {
                assert!(f.accepts(&c.graph));
            }
        }
    }

    #[test]
    fn filter_names_roundtrip() {
        for f in Filter::ALL {
            assert_eq!(f.to_string().parse::<Filter>().unwrap(), f);
        }
        assert!("cubic".parse::<Filter>().is_err());
    }

    #[test]
    fn guarded() {
        assert!(matches!(
            generate_all(9, Filter::None),
            Err(Error::Guard { .. })
        ));
    }
}
