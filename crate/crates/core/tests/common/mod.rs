#![allow(dead_code)]

use std::collections::BTreeSet;

use wog_toric::graph::WeightedOrientedGraph;
use wog_toric::graver::GraverSet;
use wog_toric::lattice::{Move, ToricMatrix};
use wog_toric::monomial::MonomialIdealPresentation;
use wog_toric::IBig;

pub fn mat(rows: &[&[i64]]) -> ToricMatrix {
    let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
    ToricMatrix::from_rows(&rows).unwrap()
}

pub fn mv(v: &[i64]) -> Move {
    Move::from_i64s(v)
}

pub fn graph(weights: &[u64], edges: &[(usize, usize)]) -> WeightedOrientedGraph {
    WeightedOrientedGraph::new(weights.to_vec(), edges.to_vec()).unwrap()
}

pub fn two_triangles() -> WeightedOrientedGraph {
    graph(&[1; 5], &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
}

pub fn alternating_square() -> WeightedOrientedGraph {
    graph(&[1, 3, 1, 5], &[(0, 1), (2, 1), (2, 3), (0, 3)])
}

/// Simple cycles counted as edge subsets that are connected and 2-regular on
/// their vertices.
pub fn cycle_edge_sets(g: &WeightedOrientedGraph) -> BTreeSet<Vec<usize>> {
    let m = g.edge_count();
    assert!(m <= 16, "edge-subset oracle is exponential");
    let mut found = BTreeSet::new();
    for mask in 1u32..(1 << m) {
        let edges: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
        if edges.len() < 3 {
            continue;
        }
        let mut degree = vec![0; g.vertex_count()];
        for &e in &edges {
            let (t, h) = g.edges()[e];
            degree[t] += 1;
            degree[h] += 1;
        }
        if degree.iter().any(|&d| d != 0 && d != 2) {
            continue;
        }
        // connectivity by flood fill over the chosen edges
        let start = g.edges()[edges[0]].0;
        let mut reached = BTreeSet::from([start]);
        loop {
            let before = reached.len();
            for &e in &edges {
                let (t, h) = g.edges()[e];
                if reached.contains(&t) || reached.contains(&h) {
                    reached.insert(t);
                    reached.insert(h);
                }
            }
            if reached.len() == before {
                break;
            }
        }
        if reached.len() == edges.len() {
            found.insert(edges);
        }
    }
    found
}

/// If an edge at `v` lies in the positive support then one lies in the
/// negative support too, and conversely.
pub fn vertex_support_holds(g: &WeightedOrientedGraph, set: &GraverSet) -> bool {
    set.iter().all(|f| {
        (0..g.vertex_count()).all(|v| {
            let at_v = g.incident_edges(v);
            let plus = at_v.iter().any(|&e| f.entries()[e] > IBig::ZERO);
            let minus = at_v.iter().any(|&e| f.entries()[e] < IBig::ZERO);
            plus == minus
        })
    })
}

/// Every variable of a generator in the support of `f` occurs in some other
/// generator in the support of `f`.
pub fn shared_variable_condition_holds(ideal: &MonomialIdealPresentation, set: &GraverSet) -> bool {
    set.iter().all(|f| {
        let support = f.support();
        support
            .iter()
            .all(|&i| ideal.support(i).iter().all(|&x| support.iter().any(|&k| k != i && ideal.generators()[k][x] > 0)))
    })
}

/// Reduces `v` by an echelon basis with integer quotients; zero remainder
/// means `v` is an integer combination of the basis.
pub fn in_integer_span(basis: &[Move], v: &[IBig]) -> bool {
    let mut v = v.to_vec();
    for b in basis {
        let Some(p) = b.entries().iter().position(|x| !x.is_zero()) else { return false };
        let pivot = &b.entries()[p];
        if (&v[p] % pivot) != IBig::ZERO {
            return false;
        }
        let q = &v[p] / pivot;
        for (x, y) in v.iter_mut().zip(b.entries()) {
            *x -= &q * y;
        }
    }
    v.iter().all(IBig::is_zero)
}
