//! Seeded generators for test instances. The same seed always yields the
//! same instances on every platform.

use dashu_int::IBig;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::WeightedOrientedGraph;
use crate::lattice::ToricMatrix;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A `rows x cols` matrix with entries in `0..=max_entry`; zero columns are
/// redrawn.
pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize, max_entry: u64) -> Result<ToricMatrix> {
    if rows == 0 || cols == 0 || max_entry == 0 {
        return Err(Error::InvalidMatrix("random matrices need rows, columns and a positive entry bound".into()));
    }
    let mut columns = Vec::with_capacity(cols);
    while columns.len() < cols {
        let column: Vec<IBig> = (0..rows).map(|_| IBig::from(rng.gen_range(0..=max_entry))).collect();
        if column.iter().any(|x| !x.is_zero()) {
            columns.push(column);
        }
    }
    ToricMatrix::from_columns(rows, &columns)
}

pub fn random_weights<R: Rng + ?Sized>(rng: &mut R, vertices: usize, max_weight: u64) -> Vec<u64> {
    (0..vertices).map(|_| rng.gen_range(1..=max_weight.max(1))).collect()
}

pub fn random_flags<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Vec<bool> {
    (0..len).map(|_| rng.gen()).collect()
}

/// A graph on `vertices` vertices with `edges` distinct random edges, random
/// orientations and weights in `1..=max_weight`.
pub fn random_graph<R: Rng + ?Sized>(
    rng: &mut R,
    vertices: usize,
    edges: usize,
    max_weight: u64,
) -> Result<WeightedOrientedGraph> {
    let mut pairs: Vec<(usize, usize)> = (0..vertices).flat_map(|u| (u + 1..vertices).map(move |v| (u, v))).collect();
    if edges > pairs.len() {
        return Err(Error::InvalidGraph(format!("{vertices} vertices cannot carry {edges} edges")));
    }
    pairs.shuffle(rng);
    pairs.truncate(edges);
    pairs.sort_unstable();
    let oriented = pairs.into_iter().map(|(u, v)| if rng.gen() { (u, v) } else { (v, u) }).collect();
    WeightedOrientedGraph::new(random_weights(rng, vertices, max_weight), oriented)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let a = random_matrix(&mut seeded(3), 3, 5, 3).unwrap();
        let b = random_matrix(&mut seeded(3), 3, 5, 3).unwrap();
        assert_eq!(a, b);
        let g = random_graph(&mut seeded(9), 6, 8, 3).unwrap();
        assert_eq!(g, random_graph(&mut seeded(9), 6, 8, 3).unwrap());
        assert_eq!(g.edge_count(), 8);
        assert!(g.weights().iter().all(|&w| (1..=3).contains(&w)));
    }

    #[test]
    fn rejects_impossible_requests() {
        assert!(random_graph(&mut seeded(0), 3, 4, 1).is_err());
        assert!(random_matrix(&mut seeded(0), 0, 2, 1).is_err());
    }
}
