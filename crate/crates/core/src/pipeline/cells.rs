use serde::Serialize;

use super::decompose::Decomposition;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// The closed neighborhood `{u, x, y, z}` of a vertex `u` of `I3`, with
/// `x` and `y` non-adjacent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub u: usize,
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub vertices: VertexSet,
}

impl Cell {
    /// Vertices in the fixed order `u, x, y, z` used to index transversal
    /// choices.
    pub fn members(&self) -> [usize; 4] {
        [self.u, self.x, self.y, self.z]
    }

    /// The other vertex of the pair `{x, y}`.
    pub fn partner(&self, v: usize) -> usize {
        if v == self.x {
            self.y
        } else {
            assert_eq!(v, self.y, "vertex {v} is neither x nor y");
            self.x
        }
    }
}

/// Labels each `u ∈ I3` (ascending): `(x, y)` is the lexicographically
/// smallest non-adjacent pair among its three neighbors, `z` the third.
pub fn label_cells(g: &Graph, dec: &Decomposition) -> Vec<Cell> {
    dec.i3
        .iter()
        .map(|u| {
            let nb = g.neighbors(u).to_vec();
            assert_eq!(nb.len(), 3, "I3 vertex {u} must have degree 3");
            let (x, y, z) = [(0, 1, 2), (0, 2, 1), (1, 2, 0)]
                .into_iter()
                .map(|(a, b, c)| (nb[a], nb[b], nb[c]))
                .find(|&(a, b, _)| !g.has_edge(a, b))
                .expect("K4-free: some pair of neighbors is non-adjacent");
            Cell {
                u,
                x,
                y,
                z,
                vertices: g.closed_neighbors(u),
            }
        })
        .collect()
}
