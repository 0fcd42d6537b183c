//! `mis_{<=k}(G) <= 3^{4k-n} 4^{n-3k}`, with equality exactly for disjoint
//! unions of `k` triangles and `K4`s, checked class by class.

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::generate::{generate_all, Filter};
use super::par_map;
use crate::bounds::{eppstein_rational, rational_string};
use crate::error::Result;
use crate::graph::Graph;
use crate::io::to_graph6;
use crate::mis::{mis_profile, SizeProfile};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub k: usize,
    pub bound: String,
    pub bound_value: f64,
    pub max_count: u64,
    pub max_ratio: f64,
    /// graph6 of every class with `mis_{<=k}` equal to the bound.
    pub attainers: Vec<String>,
    /// Classes exceeding the bound, or whose equality disagrees with the
    /// component structure.
    pub exceptions: Vec<String>,
    /// Classes by `mis_{<=k} / bound` in tenths; the last bucket includes 1.
    pub slack_histogram: [u64; 10],
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Theorem2Report {
    pub n: usize,
    pub classes: usize,
    pub per_k: Vec<ExtremalReport>,
}

impl Theorem2Report {
    pub fn exceptions(&self) -> usize {
        self.per_k.iter().map(|r| r.exceptions.len()).sum()
    }

    pub fn passed(&self) -> bool {
        self.exceptions() == 0
    }
}

pub fn class_profiles(classes: &[Graph]) -> Vec<SizeProfile> {
    par_map(classes, mis_profile)
}

pub fn verify_theorem2(n: usize) -> Result<Theorem2Report> {
    let classes: Vec<Graph> = generate_all(n, Filter::None)?
        .into_iter()
        .map(|c| c.graph)
        .collect();
    Ok(verify_theorem2_on(n, &classes))
}

/// The check over a given list of order-`n` graphs.
pub fn verify_theorem2_on(n: usize, classes: &[Graph]) -> Theorem2Report {
    let profiles = class_profiles(classes);
    let per_k = (0..=n)
        .map(|k| {
            let bound = eppstein_rational(n as i64, k as i64);
            let bound_value = bound.to_f64().unwrap_or(f64::INFINITY);
            let mut rep = ExtremalReport {
                n,
                k,
                bound: rational_string(&bound),
                bound_value,
                max_count: 0,
                max_ratio: 0.0,
                attainers: Vec::new(),
                exceptions: Vec::new(),
                slack_histogram: [0; 10],
            };
            for (g, p) in classes.iter().zip(&profiles) {
                let count = p.at_most(k);
                let c = BigRational::from_integer(count.into());
                let ratio = count as f64 / bound_value;
                rep.max_count = rep.max_count.max(count);
                rep.max_ratio = rep.max_ratio.max(ratio);
                rep.slack_histogram[((ratio * 10.0) as usize).min(9)] += 1;
                let equal = c == bound;
                if equal {
                    rep.attainers.push(to_graph6(g));
                }
                if c > bound || equal != g.is_union_of_k3_k4(k) {
                    rep.exceptions.push(to_graph6(g));
                }
            }
            rep
        })
        .collect();
    Theorem2Report {
        n,
        classes: classes.len(),
        per_k,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_graph6;

    fn attainers(n: usize, k: usize) -> Vec<Graph> {
        verify_theorem2(n).unwrap().per_k[k]
            .attainers
            .iter()
            .map(|s| parse_graph6(s).unwrap())
            .collect()
    }

    #[test]
    fn unique_attainers() {
        let k3 = Graph::complete(3);
        let k4 = Graph::complete(4);
        for (n, want) in [
            (6, k3.copies(2)),
            (7, k3.disjoint_union(&k4)),
            (8, k4.copies(2)),
        ] {
            let a = attainers(n, 2);
            assert_eq!(a.len(), 1, "n = {n}");
            assert!(a[0].is_union_of_k3_k4(2));
            assert_eq!(
                a[0].degree_stats()
                    .degrees
                    .iter()
                    .filter(|&&d| d == 3)
                    .count(),
                want.degree_stats()
                    .degrees
                    .iter()
                    .filter(|&&d| d == 3)
                    .count()
            );
        }
    }

    #[test]
    fn bound_values() {
        let r = verify_theorem2(7).unwrap();
        assert_eq!(r.per_k[2].bound, "12");
        assert_eq!(r.per_k[2].max_count, 12);
        assert!(r.passed());
    }
}
