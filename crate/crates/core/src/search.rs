//! Seeded search for graphs whose toric ideal is not strongly robust.

use std::fmt;
use std::str::FromStr;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::fiber::{analyze_graph, RobustnessReport, Status};
use crate::graph::{make_family, FamilyDescriptor, Shape, WeightedOrientedGraph};
use crate::random::{random_flags, random_weights, seeded};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchFamily {
    /// A central cycle with an edge whose two endpoints each carry a pendant
    /// cycle (directly or through a path), so that edge meets no degree-2
    /// vertex.
    CycleWithChordPath,
    /// Cycles at a common vertex plus cycles attached to it by disjoint paths.
    Bouquet,
    SingleCycle,
}

impl SearchFamily {
    pub fn name(self) -> &'static str {
        match self {
            SearchFamily::CycleWithChordPath => "cycle-with-chord-path",
            SearchFamily::Bouquet => "bouquet",
            SearchFamily::SingleCycle => "single-cycle",
        }
    }
}

impl fmt::Display for SearchFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SearchFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cycle-with-chord-path" => Ok(SearchFamily::CycleWithChordPath),
            "bouquet" => Ok(SearchFamily::Bouquet),
            "single-cycle" | "cycle" => Ok(SearchFamily::SingleCycle),
            other => Err(Error::InvalidFamily(format!(
                "unknown family `{other}` (expected cycle-with-chord-path, bouquet or single-cycle)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchParams {
    pub max_weight: u64,
    /// Shapes with fewer edges are skipped.
    pub min_edges: usize,
    pub max_edges: usize,
    /// Random weightings and orientations tried per shape.
    pub trials_per_shape: usize,
    pub caps: Caps,
}

impl Default for SearchParams {
    fn default() -> Self {
        SearchParams { max_weight: 3, min_edges: 0, max_edges: 13, trials_per_shape: 12, caps: Caps::default() }
    }
}

#[derive(Debug, Clone)]
pub struct Counterexample {
    pub graph: WeightedOrientedGraph,
    pub report: RobustnessReport,
    /// Instances examined, including this one.
    pub attempts: usize,
}

#[derive(Debug, Clone)]
pub enum SearchOutcome {
    Found(Box<Counterexample>),
    NotFound { attempts: usize, inconclusive: usize },
}

/// Unweighted, unoriented shapes of a family with at most `max_edges` edges,
/// smallest first.
pub fn family_shapes(family: SearchFamily, max_edges: usize) -> Result<Vec<WeightedOrientedGraph>> {
    let mut shapes: Vec<WeightedOrientedGraph> = Vec::new();
    match family {
        SearchFamily::SingleCycle => {
            for length in 3..=max_edges {
                shapes.push(make_family(&FamilyDescriptor::new(Shape::Cycle { length }))?);
            }
        }
        SearchFamily::Bouquet => {
            for cycles in [vec![3, 3], vec![3, 4], vec![4, 4], vec![3, 3, 3], vec![3, 3, 4]] {
                for attached in
                    [vec![], vec![(1, 3)], vec![(1, 4)], vec![(2, 3)], vec![(1, 3), (1, 3)], vec![(1, 3), (2, 4)]]
                {
                    let descriptor = FamilyDescriptor::new(Shape::Bouquet { cycles: cycles.clone(), attached });
                    shapes.push(make_family(&descriptor)?);
                }
            }
            for attached in [vec![(1, 3), (1, 3), (1, 3)], vec![(1, 4), (2, 3), (1, 3)]] {
                shapes.push(make_family(&FamilyDescriptor::new(Shape::Bouquet { cycles: vec![], attached }))?);
            }
        }
        SearchFamily::CycleWithChordPath => {
            for central in 3..=5 {
                for (left, right) in [(3, 3), (3, 4), (4, 4), (3, 5), (4, 5)] {
                    for (p, q) in [(0, 0), (0, 1), (1, 1), (0, 2), (1, 2), (2, 2)] {
                        shapes.push(chord_shape(central, (p, left), (q, right))?);
                    }
                }
            }
        }
    }
    shapes.retain(|g| g.edge_count() <= max_edges);
    shapes.sort_by_key(WeightedOrientedGraph::edge_count);
    shapes.dedup();
    Ok(shapes)
}

/// Central cycle `0 -> 1 -> ... -> 0`; vertex 0 carries a cycle of length
/// `left.1` at the end of a path of `left.0` edges, vertex 1 likewise with
/// `right`.
fn chord_shape(central: usize, left: (usize, usize), right: (usize, usize)) -> Result<WeightedOrientedGraph> {
    let mut edges: Vec<(usize, usize)> = (0..central).map(|k| (k, (k + 1) % central)).collect();
    let mut next = central;
    for (anchor, (path, length)) in [(0, left), (1, right)] {
        let mut at = anchor;
        for _ in 0..path {
            edges.push((at, next));
            at = next;
            next += 1;
        }
        let ring: Vec<usize> = std::iter::once(at).chain(next..next + length - 1).collect();
        next += length - 1;
        for k in 0..length {
            edges.push((ring[k], ring[(k + 1) % length]));
        }
    }
    WeightedOrientedGraph::new(vec![1; next], edges)
}

/// Tries `trials_per_shape` random weightings and orientations of every
/// shape, smallest shapes first, and returns the first instance that is not
/// strongly robust. Deterministic for a fixed seed.
pub fn search_counterexample(family: SearchFamily, params: &SearchParams, seed: u64) -> Result<SearchOutcome> {
    let mut rng = seeded(seed);
    let mut attempts = 0;
    let mut inconclusive = 0;
    let shapes = family_shapes(family, params.max_edges)?;
    for shape in shapes.into_iter().filter(|g| g.edge_count() >= params.min_edges) {
        for _ in 0..params.trials_per_shape {
            let weights = random_weights(&mut rng, shape.vertex_count(), params.max_weight);
            let flags = random_flags(&mut rng, shape.edge_count());
            let graph = orient(&shape, weights, flags)?;
            attempts += 1;
            let report = analyze_graph(&graph, &params.caps)?;
            match (report.status, report.strongly_robust) {
                (Status::Inconclusive, _) => inconclusive += 1,
                (_, Some(false)) => {
                    return Ok(SearchOutcome::Found(Box::new(Counterexample { graph, report, attempts })));
                }
                _ => {}
            }
        }
    }
    Ok(SearchOutcome::NotFound { attempts, inconclusive })
}

fn orient(shape: &WeightedOrientedGraph, weights: Vec<u64>, flags: Vec<bool>) -> Result<WeightedOrientedGraph> {
    let edges = shape.edges().iter().zip(&flags).map(|(&(t, h), &flip)| if flip { (h, t) } else { (t, h) }).collect();
    WeightedOrientedGraph::new(weights, edges)
}
