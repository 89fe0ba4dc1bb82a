use super::WeightedOrientedGraph;
use crate::error::{Error, Result};

/// Underlying undirected shape of a generated graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shape {
    /// A single cycle on `length` vertices.
    Cycle { length: usize },
    /// A path with `edges` edges.
    Path { edges: usize },
    /// Cycles of the given lengths sharing vertex 0, plus cycles attached to
    /// vertex 0 by pairwise edge-disjoint paths, given as
    /// `(path edges, cycle length)`. With no bouquet cycles vertex 0 is a
    /// plain hub.
    Bouquet { cycles: Vec<usize>, attached: Vec<(usize, usize)> },
    /// Two vertices joined by three internally disjoint paths with the given
    /// numbers of edges.
    Theta { paths: [usize; 3] },
}

/// Edge directions applied after the shape is laid out.
///
/// Shapes are laid out with every cycle and path traversed consecutively,
/// `v0 -> v1 -> ... -> v0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Orientation {
    /// Keep the traversal direction.
    Cyclic,
    /// Reverse every second edge of each cycle, so vertices alternate
    /// between sources and sinks.
    Alternating,
    /// Reverse exactly the edges flagged `true`.
    Flip(Vec<bool>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyDescriptor {
    pub shape: Shape,
    pub orientation: Orientation,
    /// One weight per vertex; all 1 when absent.
    pub weights: Option<Vec<u64>>,
}

impl FamilyDescriptor {
    pub fn new(shape: Shape) -> Self {
        FamilyDescriptor { shape, orientation: Orientation::Cyclic, weights: None }
    }

    pub fn oriented(mut self, orientation: Orientation) -> Self {
        self.orientation = orientation;
        self
    }

    pub fn weighted(mut self, weights: Vec<u64>) -> Self {
        self.weights = Some(weights);
        self
    }
}

struct Layout {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    /// Position of each edge inside its cycle, `None` for path edges.
    cycle_position: Vec<Option<usize>>,
}

impl Layout {
    fn new(vertices: usize) -> Self {
        Layout { vertices, edges: Vec::new(), cycle_position: Vec::new() }
    }

    fn fresh(&mut self) -> usize {
        self.vertices += 1;
        self.vertices - 1
    }

    /// A cycle through `at` and `length - 1` new vertices.
    fn cycle(&mut self, at: usize, length: usize) -> Result<()> {
        if length < 3 {
            return Err(Error::InvalidFamily(format!("cycles need at least 3 vertices, got {length}")));
        }
        let mut ring = vec![at];
        for _ in 1..length {
            let v = self.fresh();
            ring.push(v);
        }
        for k in 0..length {
            self.edges.push((ring[k], ring[(k + 1) % length]));
            self.cycle_position.push(Some(k));
        }
        Ok(())
    }

    /// A path of `edges` edges from `at` through new vertices; returns its end.
    fn path(&mut self, at: usize, edges: usize) -> usize {
        let mut last = at;
        for _ in 0..edges {
            let v = self.fresh();
            self.edges.push((last, v));
            self.cycle_position.push(None);
            last = v;
        }
        last
    }

    /// A path of `edges` edges from `from` to the existing vertex `to`.
    fn path_to(&mut self, from: usize, to: usize, edges: usize) {
        let end = self.path(from, edges - 1);
        self.edges.push((end, to));
        self.cycle_position.push(None);
    }
}

/// Builds the graph described by `descriptor`.
pub fn make_family(descriptor: &FamilyDescriptor) -> Result<WeightedOrientedGraph> {
    let mut layout = Layout::new(1);
    match &descriptor.shape {
        Shape::Cycle { length } => layout.cycle(0, *length)?,
        Shape::Path { edges } => {
            layout.path(0, *edges);
        }
        Shape::Bouquet { cycles, attached } => {
            if cycles.is_empty() && attached.is_empty() {
                return Err(Error::InvalidFamily("a bouquet needs at least one cycle".into()));
            }
            for &length in cycles {
                layout.cycle(0, length)?;
            }
            for &(path_edges, length) in attached {
                let end = layout.path(0, path_edges);
                layout.cycle(end, length)?;
            }
        }
        Shape::Theta { paths } => {
            if paths.contains(&0) || paths.iter().filter(|&&p| p == 1).count() > 1 {
                return Err(Error::InvalidFamily(
                    "theta paths need at least one edge and at most one may be a single edge".into(),
                ));
            }
            let t = layout.fresh();
            for &p in paths {
                layout.path_to(0, t, p);
            }
        }
    }

    let m = layout.edges.len();
    let mut edges = layout.edges;
    match &descriptor.orientation {
        Orientation::Cyclic => {}
        Orientation::Alternating => {
            for (edge, pos) in edges.iter_mut().zip(&layout.cycle_position) {
                if matches!(pos, Some(k) if k % 2 == 1) {
                    *edge = (edge.1, edge.0);
                }
            }
        }
        Orientation::Flip(flags) => {
            if flags.len() != m {
                return Err(Error::InvalidFamily(format!("{} orientation flags for {m} edges", flags.len())));
            }
            for (edge, &flip) in edges.iter_mut().zip(flags) {
                if flip {
                    *edge = (edge.1, edge.0);
                }
            }
        }
    }
    let weights = match &descriptor.weights {
        None => vec![1; layout.vertices],
        Some(w) if w.len() == layout.vertices => w.clone(),
        Some(w) => return Err(Error::InvalidFamily(format!("{} weights for {} vertices", w.len(), layout.vertices))),
    };
    WeightedOrientedGraph::new(weights, edges).map_err(|e| Error::InvalidFamily(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_square() {
        let descriptor = FamilyDescriptor::new(Shape::Cycle { length: 4 })
            .oriented(Orientation::Alternating)
            .weighted(vec![1, 3, 1, 5]);
        let g = make_family(&descriptor).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (2, 1), (2, 3), (0, 3)]);
        assert_eq!(g.weights(), &[1, 3, 1, 5]);
    }

    #[test]
    fn bouquet_sizes() {
        let g = make_family(&FamilyDescriptor::new(Shape::Bouquet { cycles: vec![3, 3], attached: vec![] })).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 6));
        assert_eq!(g.vertex_degree(0).unwrap(), 4);
        let with_path =
            make_family(&FamilyDescriptor::new(Shape::Bouquet { cycles: vec![3, 3], attached: vec![(2, 4)] })).unwrap();
        assert_eq!(with_path.edge_count(), 12);
        let with_edge =
            make_family(&FamilyDescriptor::new(Shape::Bouquet { cycles: vec![3, 3], attached: vec![(1, 4)] })).unwrap();
        assert_eq!(with_edge.edge_count(), 11);
    }

    #[test]
    fn theta_and_errors() {
        let g = make_family(&FamilyDescriptor::new(Shape::Theta { paths: [1, 2, 2] })).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 5));
        assert!(make_family(&FamilyDescriptor::new(Shape::Theta { paths: [1, 1, 2] })).is_err());
        assert!(make_family(&FamilyDescriptor::new(Shape::Cycle { length: 2 })).is_err());
        let bad_weights = FamilyDescriptor::new(Shape::Cycle { length: 3 }).weighted(vec![1, 2]);
        assert!(make_family(&bad_weights).is_err());
        let bad_flags = FamilyDescriptor::new(Shape::Cycle { length: 3 }).oriented(Orientation::Flip(vec![true]));
        assert!(make_family(&bad_flags).is_err());
    }

    #[test]
    fn paths_are_trees() {
        let g = make_family(&FamilyDescriptor::new(Shape::Path { edges: 3 })).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 3)]);
    }
}
