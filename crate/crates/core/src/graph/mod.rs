//! Vertex-weighted oriented graphs, their incidence matrices, cycles and the
//! structural hypotheses checked before trusting a robustness verdict.

mod cycles;
mod family;
mod structure;

use std::collections::HashSet;
use std::fmt;

use dashu_int::IBig;

use crate::error::{Error, Result};
use crate::lattice::ToricMatrix;
use crate::monomial::MonomialIdealPresentation;
use crate::text::{content_lines, parse_count, parse_u64};

pub use cycles::{cycle_matrix, enumerate_cycles, is_balanced, Cycle};
pub use family::{make_family, FamilyDescriptor, Orientation, Shape};
pub use structure::{
    connecting_paths, cycles_share_single_vertex, every_edge_meets_degree_two, main_theorem_hypothesis,
    no_two_cycles_share_path, Check, ConnectingPath, StructureReport, Witness,
};

/// A directed simple graph with a positive weight on every vertex.
///
/// Vertices and edges are 0-based in memory; the text format is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedOrientedGraph {
    weights: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl WeightedOrientedGraph {
    pub fn new(weights: Vec<u64>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = weights.len();
        if n == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        if let Some(v) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidGraph(format!("vertex {} has weight 0", v + 1)));
        }
        let mut seen = HashSet::new();
        for (i, &(t, h)) in edges.iter().enumerate() {
            if t >= n || h >= n {
                return Err(Error::InvalidGraph(format!("edge {} uses a vertex outside 1..={n}", i + 1)));
            }
            if t == h {
                return Err(Error::InvalidGraph(format!("edge {} is a loop", i + 1)));
            }
            if !seen.insert((t.min(h), t.max(h))) {
                return Err(Error::InvalidGraph(format!("edge {} repeats the pair {{{}, {}}}", i + 1, t + 1, h + 1)));
            }
        }
        Ok(WeightedOrientedGraph { weights, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.weights.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Number of edges incident to `v`, in either direction.
    pub fn vertex_degree(&self, v: usize) -> Result<usize> {
        if v >= self.vertex_count() {
            return Err(Error::IndexOutOfRange { index: v, len: self.vertex_count() });
        }
        Ok(self.edges.iter().filter(|&&(t, h)| t == v || h == v).count())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut degree = vec![0; self.vertex_count()];
        for &(t, h) in &self.edges {
            degree[t] += 1;
            degree[h] += 1;
        }
        degree
    }

    /// Indices of the edges incident to `v`.
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        (0..self.edge_count()).filter(|&i| self.edges[i].0 == v || self.edges[i].1 == v).collect()
    }

    /// Neighbours of every vertex as `(neighbour, edge index)`, sorted.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for (i, &(t, h)) in self.edges.iter().enumerate() {
            adj[t].push((h, i));
            adj[h].push((t, i));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// The edge joining `u` and `v`, whatever its direction.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.iter().position(|&(t, h)| (t == u && h == v) || (t == v && h == u))
    }

    /// Column `j` is `x_tail * x_head^{w_head}` as an exponent vector.
    pub fn incidence_matrix(&self) -> ToricMatrix {
        let n = self.vertex_count();
        let columns: Vec<Vec<IBig>> = self
            .edges
            .iter()
            .map(|&(t, h)| {
                let mut column = vec![IBig::ZERO; n];
                column[t] = IBig::ONE;
                column[h] = IBig::from(self.weights[h]);
                column
            })
            .collect();
        if columns.is_empty() {
            return ToricMatrix::new(n, 0, Vec::new()).expect("an empty matrix is valid");
        }
        ToricMatrix::from_columns(n, &columns).expect("incidence columns are nonzero")
    }

    /// Generators `x_tail * x_head^{w_head}`, one per edge, in edge order.
    pub fn edge_ideal(&self) -> Result<MonomialIdealPresentation> {
        let generators = self
            .edges
            .iter()
            .map(|&(t, h)| {
                let mut a = vec![0; self.vertex_count()];
                a[t] = 1;
                a[h] = self.weights[h];
                a
            })
            .collect();
        MonomialIdealPresentation::new(self.vertex_count(), generators)
    }

    /// Same vertices and weights, keeping only `keep` (in increasing order).
    pub fn spanning_subgraph(&self, keep: &[usize]) -> Result<WeightedOrientedGraph> {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&i) = keep.iter().find(|&&i| i >= self.edge_count()) {
            return Err(Error::IndexOutOfRange { index: i, len: self.edge_count() });
        }
        let edges = keep.iter().map(|&i| self.edges[i]).collect();
        WeightedOrientedGraph::new(self.weights.clone(), edges)
    }

    /// The graph with edge `i` pointing the other way.
    pub fn reverse_edge(&self, i: usize) -> Result<WeightedOrientedGraph> {
        if i >= self.edge_count() {
            return Err(Error::IndexOutOfRange { index: i, len: self.edge_count() });
        }
        let mut edges = self.edges.clone();
        edges[i] = (edges[i].1, edges[i].0);
        Ok(WeightedOrientedGraph { weights: self.weights.clone(), edges })
    }

    /// Parses `wog <n>`, `weights w1 .. wn` and `edge <tail> <head>` lines.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (line_no, header) = lines.next().ok_or_else(|| Error::parse(0, "empty input"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 2 || fields[0] != "wog" {
            return Err(Error::parse(line_no, "expected header `wog <vertex count>`"));
        }
        let n = parse_count(fields[1], line_no)?;
        let mut weights: Option<Vec<u64>> = None;
        let mut edges = Vec::new();
        for (line_no, line) in lines {
            let mut fields = line.split_whitespace();
            match fields.next() {
                Some("weights") => {
                    if weights.is_some() {
                        return Err(Error::parse(line_no, "weights given twice"));
                    }
                    let w = fields.map(|f| parse_u64(f, line_no)).collect::<Result<Vec<_>>>()?;
                    if w.len() != n {
                        return Err(Error::parse(line_no, format!("expected {n} weights, found {}", w.len())));
                    }
                    weights = Some(w);
                }
                Some("edge") => {
                    let ends: Vec<usize> = fields.map(|f| parse_count(f, line_no)).collect::<Result<_>>()?;
                    if ends.len() != 2 {
                        return Err(Error::parse(line_no, "expected `edge <tail> <head>`"));
                    }
                    if ends.iter().any(|&v| v == 0 || v > n) {
                        return Err(Error::parse(line_no, format!("vertices are numbered 1..={n}")));
                    }
                    edges.push((ends[0] - 1, ends[1] - 1));
                }
                Some(other) => return Err(Error::parse(line_no, format!("unknown directive `{other}`"))),
                None => unreachable!("content lines are never blank"),
            }
        }
        let weights = weights.ok_or_else(|| Error::parse(line_no, "missing `weights` line"))?;
        WeightedOrientedGraph::new(weights, edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("wog {}\nweights", self.vertex_count());
        for w in &self.weights {
            out.push_str(&format!(" {w}"));
        }
        out.push('\n');
        for &(t, h) in &self.edges {
            out.push_str(&format!("edge {} {}\n", t + 1, h + 1));
        }
        out
    }
}

impl fmt::Display for WeightedOrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alternating_square() -> WeightedOrientedGraph {
        WeightedOrientedGraph::new(vec![1, 3, 1, 5], vec![(0, 1), (2, 1), (2, 3), (0, 3)]).unwrap()
    }

    #[test]
    fn incidence_columns() {
        let g = WeightedOrientedGraph::new(vec![1, 3], vec![(0, 1)]).unwrap();
        assert_eq!(g.incidence_matrix(), ToricMatrix::from_rows(&[vec![1i64], vec![3]]).unwrap());
        let expected =
            ToricMatrix::from_rows(&[vec![1i64, 0, 0, 1], vec![3, 3, 0, 0], vec![0, 1, 1, 0], vec![0, 0, 5, 5]])
                .unwrap();
        assert_eq!(alternating_square().incidence_matrix(), expected);
    }

    #[test]
    fn degrees() {
        let g = WeightedOrientedGraph::new(vec![1, 1, 1], vec![(0, 1)]).unwrap();
        assert_eq!(g.vertex_degree(2).unwrap(), 0);
        assert_eq!(g.vertex_degree(0).unwrap(), 1);
        assert!(g.vertex_degree(3).is_err());
    }

    #[test]
    fn validation() {
        assert!(WeightedOrientedGraph::new(vec![1, 1], vec![(0, 0)]).is_err());
        assert!(WeightedOrientedGraph::new(vec![1, 1], vec![(0, 1), (1, 0)]).is_err());
        assert!(WeightedOrientedGraph::new(vec![1, 0], vec![(0, 1)]).is_err());
        assert!(WeightedOrientedGraph::new(vec![1, 1], vec![(0, 2)]).is_err());
        assert!(WeightedOrientedGraph::new(vec![], vec![]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let g = alternating_square();
        let text = g.to_text();
        assert_eq!(text, "wog 4\nweights 1 3 1 5\nedge 1 2\nedge 3 2\nedge 3 4\nedge 1 4\n");
        assert_eq!(WeightedOrientedGraph::parse_text(&text).unwrap(), g);
        let commented = "# square\nwog 4\n\nweights 1 3 1 5 # per vertex\nedge 1 2\nedge 3 2\nedge 3 4\nedge 1 4\n";
        assert_eq!(WeightedOrientedGraph::parse_text(commented).unwrap(), g);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(WeightedOrientedGraph::parse_text("wog 2\nedge 1 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            WeightedOrientedGraph::parse_text("wog 2\nweights 1 1\nedge 1 3\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(WeightedOrientedGraph::parse_text("matrix 1 1\n1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            WeightedOrientedGraph::parse_text("wog 2\nweights 1 1\nedge 1 1\n"),
            Err(Error::InvalidGraph(_))
        ));
    }

    #[test]
    fn subgraph_and_reversal() {
        let g = alternating_square();
        let h = g.spanning_subgraph(&[2, 0]).unwrap();
        assert_eq!(h.edges(), &[(0, 1), (2, 3)]);
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(g.reverse_edge(1).unwrap().edges()[1], (1, 2));
    }
}
