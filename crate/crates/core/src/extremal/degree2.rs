//! Slack factors for graphs of maximum degree at most 2: a vertex of
//! degree 1 costs `8/9`, an isolated vertex `16/27`, a cycle of length at
//! least 4 `11/12`, relative to `3^{4k-n} 4^{n-3k}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::generate::{generate_all, Filter};
use super::theorem2::class_profiles;
use crate::bounds::{eppstein_rational, rational_string};
use crate::error::Result;
use crate::graph::Graph;
use crate::io::to_graph6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorCheck {
    pub name: &'static str,
    pub factor: String,
    /// Classes with the feature.
    pub graphs: u64,
    /// `(class, k)` pairs checked.
    pub pairs: u64,
    pub violations: Vec<(String, usize)>,
    /// `(class, k)` pairs meeting the scaled bound exactly.
    pub tight: Vec<(String, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Degree2Report {
    pub n: usize,
    pub classes: usize,
    pub factors: Vec<FactorCheck>,
}

impl Degree2Report {
    pub fn passed(&self) -> bool {
        self.factors.iter().all(|f| f.violations.is_empty())
    }
}

fn has_long_cycle(g: &Graph) -> bool {
    g.components()
        .into_iter()
        .any(|c| c.len() >= 4 && c.iter().all(|v| g.degree(v) == 2))
}

type Feature = fn(&Graph) -> bool;

const FEATURES: [(&str, u64, u64, Feature); 3] = [
    ("degree_one_vertex", 8, 9, |g| {
        g.degree_stats().degrees.contains(&1)
    }),
    ("isolated_vertex", 16, 27, |g| {
        g.degree_stats().degrees.contains(&0)
    }),
    ("long_cycle", 11, 12, has_long_cycle),
];

pub fn verify_degree2_constants(n: usize) -> Result<Degree2Report> {
    let classes: Vec<Graph> = generate_all(n, Filter::MaxDeg3)?
        .into_iter()
        .map(|c| c.graph)
        .filter(|g| g.max_degree() <= 2)
        .collect();
    Ok(verify_degree2_on(n, &classes))
}

pub fn verify_degree2_on(n: usize, classes: &[Graph]) -> Degree2Report {
    let profiles = class_profiles(classes);
    let factors = FEATURES
        .iter()
        .map(|&(name, p, q, has)| {
            let factor = BigRational::new(BigInt::from(p), BigInt::from(q));
            let mut fc = FactorCheck {
                name,
                factor: rational_string(&factor),
                graphs: 0,
                pairs: 0,
                violations: Vec::new(),
                tight: Vec::new(),
            };
            for (g, prof) in classes.iter().zip(&profiles) {
                if !has(g) {
                    continue;
                }
                fc.graphs += 1;
                for k in 0..=n {
                    fc.pairs += 1;
                    let scaled = &factor * eppstein_rational(n as i64, k as i64);
                    let count = BigRational::from_integer(prof.at_most(k).into());
                    if count > scaled {
                        fc.violations.push((to_graph6(g), k));
                    } else if count == scaled {
                        fc.tight.push((to_graph6(g), k));
                    }
                }
            }
            fc
        })
        .collect();
    Degree2Report {
        n,
        classes: classes.len(),
        factors,
    }
}
