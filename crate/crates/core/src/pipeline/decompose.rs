//! Splitting `V` around a maximal independent set `I0`.
//!
//! With `J0 = V - I0`:
//! * `I1`: vertices of `I0` with at most two neighbors in `J0`;
//! * `J1`: vertices of `J0` with a neighbor in `I1`;
//! * `J2`: vertices of `J0` with at least two neighbors in `I0`;
//! * `I2`: vertices of `I0` with a neighbor in `J2`;
//! * `I3 = I0 - (I1 ∪ I2)`.
//!
//! `J2` is not restricted to `J0 - J1`: a vertex of `J1` may also be adjacent
//! to a degree-3 vertex of `I0`, and that vertex must not end up in `I3`,
//! whose neighborhoods have to be private. See [`Decomposition::shared_cells`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub n: usize,
    pub k: usize,
    pub i0: VertexSet,
    pub j0: VertexSet,
    pub i1: VertexSet,
    pub j1: VertexSet,
    pub j2: VertexSet,
    pub i2: VertexSet,
    pub i3: VertexSet,
    pub ell: usize,
    pub edge_count_i0_j0: usize,
    /// Vertices that would join `I3` if `J2` excluded `J1`, yet have a
    /// neighbor with a second neighbor in `I0`.
    pub shared_cells: VertexSet,
}

/// Integer forms of the counting inequalities, as `(lhs, rhs)` pairs
/// meaning `lhs <= rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InequalityChecks {
    pub j1_vs_i1: (usize, usize),
    pub i2_vs_j2: (usize, usize),
    pub edges_lower: (usize, usize),
    pub edges_upper: (usize, usize),
    /// `|I1| + |J2| <= 4k - n`.
    pub ea: (i64, i64),
    /// `|J1| + |J2| <= 2|I1| + |J2|`.
    pub ec: (usize, usize),
    /// `k - |I1| - 3|J2| <= ℓ`.
    pub eb: (i64, i64),
    /// `k - 3(4k - n) <= ℓ`.
    pub eb_closed: (i64, i64),
}

impl InequalityChecks {
    pub fn all_hold(&self) -> bool {
        self.j1_vs_i1.0 <= self.j1_vs_i1.1
            && self.i2_vs_j2.0 <= self.i2_vs_j2.1
            && self.edges_lower.0 <= self.edges_lower.1
            && self.edges_upper.0 <= self.edges_upper.1
            && self.ea.0 <= self.ea.1
            && self.ec.0 <= self.ec.1
            && self.eb.0 <= self.eb.1
            && self.eb_closed.0 <= self.eb_closed.1
    }
}

/// Checks the standing assumptions: maximum degree at most 3, K4-free, and
/// `i0` a maximal independent set.
pub fn check_preconditions(g: &Graph, i0: VertexSet) -> Result<()> {
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) > 3) {
        return Err(Error::DegreeTooLarge {
            vertex: v,
            degree: g.degree(v),
        });
    }
    if let Some(q) = g.find_k4() {
        return Err(Error::NotK4Free(q));
    }
    if !i0.is_subset(g.vertices()) {
        let v = i0.difference(g.vertices()).first().unwrap();
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.order(),
        });
    }
    if !g.is_maximal_independent(i0) {
        return Err(Error::NotMaximalIndependent(i0.to_string()));
    }
    Ok(())
}

pub fn decompose(g: &Graph, i0: VertexSet) -> Result<Decomposition> {
    check_preconditions(g, i0)?;
    let j0 = g.vertices().difference(i0);
    let deg_in = |v: usize, s: VertexSet| g.neighbors(v).intersection(s).len();
    let pick = |from: VertexSet, pred: &dyn Fn(usize) -> bool| -> VertexSet {
        from.iter().filter(|&v| pred(v)).collect()
    };
    let i1 = pick(i0, &|v| deg_in(v, j0) <= 2);
    let j1 = pick(j0, &|v| deg_in(v, i1) > 0);
    let j2 = pick(j0, &|v| deg_in(v, i0) >= 2);
    let i2 = pick(i0, &|v| deg_in(v, j2) > 0);
    let i3 = i0.difference(i1.union(i2));

    let j2_narrow = j2.difference(j1);
    let i2_narrow = pick(i0, &|v| deg_in(v, j2_narrow) > 0);
    let i3_narrow = i0.difference(i1.union(i2_narrow));
    let shared_cells = i3_narrow.difference(i3);

    let edge_count_i0_j0 = i0.iter().map(|v| deg_in(v, j0)).sum();
    Ok(Decomposition {
        n: g.order(),
        k: i0.len(),
        i0,
        j0,
        i1,
        j1,
        j2,
        i2,
        i3,
        ell: i3.len(),
        edge_count_i0_j0,
        shared_cells,
    })
}

impl Decomposition {
    pub fn inequalities(&self) -> InequalityChecks {
        let (n, k) = (self.n, self.k);
        let (i1, j1, j2, i2) = (self.i1.len(), self.j1.len(), self.j2.len(), self.i2.len());
        let slack = 4 * k as i64 - n as i64;
        InequalityChecks {
            j1_vs_i1: (j1, 2 * i1),
            i2_vs_j2: (i2, 3 * j2),
            edges_lower: (n - k + j2, self.edge_count_i0_j0),
            edges_upper: (self.edge_count_i0_j0, 3 * k - i1),
            ea: ((i1 + j2) as i64, slack),
            ec: (j1 + j2, 2 * i1 + j2),
            eb: (k as i64 - i1 as i64 - 3 * j2 as i64, self.ell as i64),
            eb_closed: (k as i64 - 3 * slack, self.ell as i64),
        }
    }
}
