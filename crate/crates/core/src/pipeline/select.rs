//! Choosing the cells that stay in the transversal partition and the
//! well-separated subset whose bad events are independent.
//!
//! Cells are referred to by their index in the labelled cell list, so the
//! index sets `S`, `I4`, `I5`, `I6` are masks over `0..ℓ`.

use serde::Serialize;

use super::cells::Cell;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelectionState {
    pub s: VertexSet,
    pub i4: VertexSet,
    pub i5: VertexSet,
    pub i6: VertexSet,
    /// Union of the cells in `I4`.
    pub u: VertexSet,
    /// Auxiliary graph on cell indices: cells of `I4` are adjacent when an
    /// edge of `G` joins them. Cells outside `I4` are isolated.
    pub h: Graph,
}

impl SelectionState {
    pub fn h_max_degree(&self) -> u32 {
        self.h.max_degree()
    }
}

/// Index of the cell containing each vertex, if any.
pub fn cell_index(n: usize, cells: &[Cell]) -> Vec<Option<usize>> {
    let mut idx = vec![None; n];
    for (i, c) in cells.iter().enumerate() {
        for v in c.vertices {
            idx[v] = Some(i);
        }
    }
    idx
}

/// Cells among `among` joined to cell `i` by an edge of `g`.
fn touching(g: &Graph, cells: &[Cell], i: usize, among: VertexSet) -> VertexSet {
    let reach = g.open_neighborhood(cells[i].vertices);
    among
        .without(i)
        .iter()
        .filter(|&j| !reach.is_disjoint(cells[j].vertices))
        .collect()
}

/// Graph on `0..cells.len()` with edges between members of `among` whose
/// cells are joined by an edge of `g`.
pub fn cell_graph(g: &Graph, cells: &[Cell], among: VertexSet) -> Graph {
    let rows = (0..cells.len())
        .map(|i| {
            if among.contains(i) {
                touching(g, cells, i, among).bits()
            } else {
                0
            }
        })
        .collect();
    Graph::from_adjacency(rows).expect("cell graph is simple")
}

/// Greedy independent set in the square of `h` restricted to `candidates`:
/// take the lowest remaining candidate, then drop every candidate within
/// distance 2 of it.
pub fn greedy_square_independent(h: &Graph, candidates: VertexSet) -> VertexSet {
    let mut remaining = candidates;
    let mut picked = VertexSet::EMPTY;
    while let Some(i) = remaining.first() {
        picked.insert(i);
        let ball1 = h.closed_neighbors(i);
        let ball2 = h.closed_neighborhood(ball1);
        remaining = remaining.difference(ball2);
    }
    picked
}

pub fn select(g: &Graph, cells: &[Cell], s: VertexSet) -> SelectionState {
    let ell = cells.len();
    assert!(
        s.is_subset(VertexSet::full(ell)),
        "S must index existing cells"
    );
    let i4 = VertexSet::full(ell).difference(s);
    let u = i4
        .iter()
        .fold(VertexSet::EMPTY, |acc, i| acc.union(cells[i].vertices));
    let i5 = i4
        .iter()
        .filter(|&i| {
            let c = cells[i];
            g.neighbors(c.x).union(g.neighbors(c.y)).is_subset(u)
        })
        .collect();
    let h = cell_graph(g, cells, i4);
    let i6 = greedy_square_independent(&h, i5);
    SelectionState {
        s,
        i4,
        i5,
        i6,
        u,
        h,
    }
}

/// Cells whose transversal choice decides the bad event of cell `i`: the cell
/// itself and the cells holding neighbors of `x_i` or `y_i`.
pub fn event_support(g: &Graph, cells: &[Cell], i: usize) -> VertexSet {
    let c = cells[i];
    let reach = g.neighbors(c.x).union(g.neighbors(c.y));
    (0..cells.len())
        .filter(|&j| j == i || !reach.is_disjoint(cells[j].vertices))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::cells::label_cells;
    use crate::pipeline::decompose::decompose;

    fn diamonds(t: usize) -> (Graph, VertexSet) {
        let d = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]).unwrap();
        let g = d.copies(t);
        let i0 = (0..t).map(|i| 4 * i).collect();
        (g, i0)
    }

    #[test]
    fn one_diamond() {
        let (g, i0) = diamonds(1);
        let cells = label_cells(&g, &decompose(&g, i0).unwrap());
        let st = select(&g, &cells, VertexSet::EMPTY);
        assert_eq!(
            (st.i4, st.i5, st.i6),
            (VertexSet(1), VertexSet(1), VertexSet(1))
        );
        assert_eq!(st.h.order(), 1);
        assert_eq!(st.u, g.vertices());
    }

    #[test]
    fn two_diamonds() {
        let (g, i0) = diamonds(2);
        let cells = label_cells(&g, &decompose(&g, i0).unwrap());
        let st = select(&g, &cells, VertexSet::EMPTY);
        assert_eq!(st.i6.len(), 2);
        assert_eq!(st.h.edge_count(), 0);
    }

    #[test]
    fn all_selected_is_vacuous() {
        let (g, i0) = diamonds(2);
        let cells = label_cells(&g, &decompose(&g, i0).unwrap());
        let st = select(&g, &cells, VertexSet(0b11));
        assert!(st.i4.is_empty() && st.u.is_empty() && st.i6.is_empty());
    }

    #[test]
    fn greedy_on_path() {
        // Distance-2 balls on a path 0..7: picks 0, 3, 6.
        let h = Graph::path(7);
        assert_eq!(
            greedy_square_independent(&h, h.vertices()),
            VertexSet(0b1001001)
        );
    }

    /// Claw cells a = {0..3}, c = {4..7}, b = {8..11}; z_c = 7 is adjacent to
    /// x_a = 1 and x_b = 9, and y_c = 6 hangs off 13, dominated by 12.
    /// Cell c is in I4 but not I5. A graph on I5 cells alone would not see
    /// that a and b both reach c, and would keep both.
    #[test]
    fn auxiliary_graph_spans_all_i4_cells() {
        let mut e = vec![];
        for u in [0, 4, 8] {
            e.extend([(u, u + 1), (u, u + 2), (u, u + 3)]);
        }
        e.extend([(1, 7), (9, 7), (6, 13), (12, 13)]);
        let g = Graph::from_edges(14, e).unwrap();
        let i0: VertexSet = [0, 4, 8, 12].into_iter().collect();
        let cells = label_cells(&g, &decompose(&g, i0).unwrap());
        assert_eq!(cells.len(), 3);
        let st = select(&g, &cells, VertexSet::EMPTY);
        assert_eq!(st.i5, VertexSet(0b101));
        assert_eq!(st.i6, VertexSet(0b001));

        let narrow = greedy_square_independent(&cell_graph(&g, &cells, st.i5), st.i5);
        assert_eq!(narrow, VertexSet(0b101));
        let (sa, sb) = (event_support(&g, &cells, 0), event_support(&g, &cells, 2));
        assert_eq!(sa.intersection(sb), VertexSet(0b010));
    }
}
