use dashu_int::IBig;
use serde::Serialize;

use super::WeightedOrientedGraph;
use crate::error::{Error, Result};
use crate::lattice::det_rows;

/// A simple cycle of the underlying undirected graph.
///
/// `vertex_sequence[k]` and `vertex_sequence[k + 1]` (cyclically) are the
/// endpoints of `edge_indices[k]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Cycle {
    pub edge_indices: Vec<usize>,
    pub vertex_sequence: Vec<usize>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.edge_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_indices.is_empty()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertex_sequence.contains(&v)
    }

    pub fn contains_edge(&self, e: usize) -> bool {
        self.edge_indices.contains(&e)
    }

    pub fn sorted_edges(&self) -> Vec<usize> {
        let mut edges = self.edge_indices.clone();
        edges.sort_unstable();
        edges
    }
}

/// Every simple cycle exactly once, ordered by length and then by sorted
/// edge indices.
///
/// Each cycle is found from its smallest vertex, through larger vertices
/// only, and kept in the direction whose second vertex is smaller than its
/// last.
pub fn enumerate_cycles(g: &WeightedOrientedGraph, cap: usize) -> Result<Vec<Cycle>> {
    let adj = g.adjacency();
    let mut found = Vec::new();
    for start in 0..g.vertex_count() {
        let mut path = vec![start];
        let mut on_path = vec![false; g.vertex_count()];
        on_path[start] = true;
        extend(g, &adj, start, &mut path, &mut on_path, &mut found, cap)?;
    }
    found.sort_by_cached_key(|c: &Cycle| (c.len(), c.sorted_edges()));
    Ok(found)
}

fn extend(
    g: &WeightedOrientedGraph,
    adj: &[Vec<(usize, usize)>],
    start: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    found: &mut Vec<Cycle>,
    cap: usize,
) -> Result<()> {
    let last = *path.last().expect("path starts non-empty");
    for &(next, _) in &adj[last] {
        if next == start && path.len() >= 3 && path[1] < last {
            if found.len() == cap {
                return Err(Error::CycleCapExceeded { cap });
            }
            found.push(close(g, path));
        } else if next > start && !on_path[next] {
            on_path[next] = true;
            path.push(next);
            extend(g, adj, start, path, on_path, found, cap)?;
            path.pop();
            on_path[next] = false;
        }
    }
    Ok(())
}

fn close(g: &WeightedOrientedGraph, vertices: &[usize]) -> Cycle {
    let r = vertices.len();
    let edge_indices = (0..r)
        .map(|k| g.edge_between(vertices[k], vertices[(k + 1) % r]).expect("consecutive vertices are adjacent"))
        .collect();
    Cycle { edge_indices, vertex_sequence: vertices.to_vec() }
}

/// The cycle's own incidence matrix: row `k` is vertex `v_k`, column `k` is
/// the edge from `v_k` to `v_{k+1}`.
pub fn cycle_matrix(g: &WeightedOrientedGraph, c: &Cycle) -> Vec<Vec<IBig>> {
    c.vertex_sequence
        .iter()
        .map(|&v| {
            c.edge_indices
                .iter()
                .map(|&e| {
                    let (t, h) = g.edges()[e];
                    if v == t {
                        IBig::ONE
                    } else if v == h {
                        IBig::from(g.weights()[h])
                    } else {
                        IBig::ZERO
                    }
                })
                .collect()
        })
        .collect()
}

/// A cycle is balanced when its incidence matrix is singular.
pub fn is_balanced(g: &WeightedOrientedGraph, c: &Cycle) -> bool {
    det_rows(cycle_matrix(g, c)).is_zero()
}
