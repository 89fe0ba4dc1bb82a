use std::collections::BTreeSet;

use serde::Serialize;

use super::{enumerate_cycles, Cycle, WeightedOrientedGraph};
use crate::caps::Caps;
use crate::error::{Error, Result};

/// Outcome of one structural check, carrying a witness when it fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check<W> {
    Holds,
    Fails(W),
}

impl<W> Check<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Check::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Check::Holds => None,
            Check::Fails(w) => Some(w),
        }
    }
}

/// A violated condition with the offending edges and cycles (0-based; cycle
/// indices refer to [`StructureReport::cycles`]).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub condition: String,
    pub edges: Vec<usize>,
    pub cycles: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub every_edge_meets_degree2: bool,
    pub cycles_share_single_vertex: bool,
    pub no_two_cycles_share_path: bool,
    pub main_theorem_hypothesis: bool,
    /// Sorted edge indices of every simple cycle, in enumeration order.
    pub cycles: Vec<Vec<usize>>,
    /// How connecting paths were chosen for the triple condition.
    pub connecting_paths: &'static str,
    pub witnesses: Vec<Witness>,
}

/// Holds when every edge has an endpoint of degree exactly 2; otherwise the
/// first edge without one.
pub fn every_edge_meets_degree_two(g: &WeightedOrientedGraph) -> Check<usize> {
    let degree = g.degrees();
    match g.edges().iter().position(|&(t, h)| degree[t] != 2 && degree[h] != 2) {
        None => Check::Holds,
        Some(e) => Check::Fails(e),
    }
}

fn shared_vertices(a: &Cycle, b: &Cycle) -> usize {
    a.vertex_sequence.iter().filter(|v| b.contains_vertex(**v)).count()
}

/// Holds when all cycles pass through one common vertex and any two of them
/// meet in that vertex only; otherwise a pair of offending cycle indices.
pub fn cycles_share_single_vertex(g: &WeightedOrientedGraph, caps: &Caps) -> Result<Check<(usize, usize)>> {
    let cycles = enumerate_cycles(g, caps.cycles)?;
    Ok(single_vertex_check(&cycles))
}

fn single_vertex_check(cycles: &[Cycle]) -> Check<(usize, usize)> {
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            if shared_vertices(&cycles[i], &cycles[j]) != 1 {
                return Check::Fails((i, j));
            }
        }
    }
    if let Some(first) = cycles.first() {
        let common = first.vertex_sequence.iter().find(|&&v| cycles.iter().all(|c| c.contains_vertex(v)));
        if common.is_none() {
            let j = (1..cycles.len()).find(|&j| !cycles[j].vertex_sequence.iter().all(|v| first.contains_vertex(*v)));
            return Check::Fails((0, j.unwrap_or(1)));
        }
    }
    Check::Holds
}

/// Holds when no two distinct cycles share an edge; otherwise the first such
/// pair of cycle indices.
pub fn no_two_cycles_share_path(g: &WeightedOrientedGraph, caps: &Caps) -> Result<Check<(usize, usize)>> {
    let cycles = enumerate_cycles(g, caps.cycles)?;
    Ok(edge_sharing_check(&cycles))
}

fn edge_sharing_check(cycles: &[Cycle]) -> Check<(usize, usize)> {
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            if cycles[i].edge_indices.iter().any(|e| cycles[j].contains_edge(*e)) {
                return Check::Fails((i, j));
            }
        }
    }
    Check::Holds
}

/// A path between two cycles whose inner vertices and edges avoid every
/// cycle. Cycles with a common vertex are joined by the empty path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectingPath {
    pub from: usize,
    pub to: usize,
    pub edges: Vec<usize>,
}

/// All connecting paths between ordered pairs of distinct cycles.
pub fn connecting_paths(g: &WeightedOrientedGraph, cycles: &[Cycle], cap: usize) -> Result<Vec<ConnectingPath>> {
    let n = g.vertex_count();
    let mut on_cycle = vec![false; n];
    let mut cycle_edge = vec![false; g.edge_count()];
    for c in cycles {
        for &v in &c.vertex_sequence {
            on_cycle[v] = true;
        }
        for &e in &c.edge_indices {
            cycle_edge[e] = true;
        }
    }
    let adj = g.adjacency();
    // Vertex-to-vertex paths leaving a cycle vertex and stopping at the first
    // cycle vertex reached.
    let mut raw: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for start in (0..n).filter(|&v| on_cycle[v]) {
        let mut visited = vec![false; n];
        visited[start] = true;
        let mut edges = Vec::new();
        walk(&adj, &on_cycle, &cycle_edge, start, start, &mut visited, &mut edges, &mut raw, cap)?;
    }
    let mut out = Vec::new();
    for (a, ca) in cycles.iter().enumerate() {
        for (b, cb) in cycles.iter().enumerate() {
            if a == b {
                continue;
            }
            if shared_vertices(ca, cb) > 0 {
                out.push(ConnectingPath { from: a, to: b, edges: Vec::new() });
            }
            for (u, v, edges) in &raw {
                if ca.contains_vertex(*u) && cb.contains_vertex(*v) {
                    if out.len() >= cap {
                        return Err(Error::PathCapExceeded { cap });
                    }
                    out.push(ConnectingPath { from: a, to: b, edges: edges.clone() });
                }
            }
        }
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn walk(
    adj: &[Vec<(usize, usize)>],
    on_cycle: &[bool],
    cycle_edge: &[bool],
    start: usize,
    at: usize,
    visited: &mut [bool],
    edges: &mut Vec<usize>,
    raw: &mut Vec<(usize, usize, Vec<usize>)>,
    cap: usize,
) -> Result<()> {
    for &(next, e) in &adj[at] {
        if cycle_edge[e] || visited[next] {
            continue;
        }
        edges.push(e);
        if on_cycle[next] {
            if raw.len() >= cap {
                return Err(Error::PathCapExceeded { cap });
            }
            raw.push((start, next, edges.clone()));
        } else {
            visited[next] = true;
            walk(adj, on_cycle, cycle_edge, start, next, visited, edges, raw, cap)?;
            visited[next] = false;
        }
        edges.pop();
    }
    Ok(())
}

/// Decides the combined hypothesis: no two cycles share an edge, every
/// cycle edge meets a degree-2 vertex, and for cycles `C1`, `C2`, `C3` with
/// connecting paths `P1: C1 -> C3`, `P2: C2 -> C3`, every common edge `e` of
/// `P1` and `P2` either (i) meets a degree-2 vertex or (ii) `C3` shares no
/// vertex with another cycle and every connecting path from `C3` contains `e`.
pub fn main_theorem_hypothesis(g: &WeightedOrientedGraph, caps: &Caps) -> Result<StructureReport> {
    let cycles = enumerate_cycles(g, caps.cycles)?;
    let degree = g.degrees();
    let meets_two = |e: usize| {
        let (t, h) = g.edges()[e];
        degree[t] == 2 || degree[h] == 2
    };
    let mut witnesses = Vec::new();

    let every_edge = every_edge_meets_degree_two(g);
    if let Check::Fails(e) = every_edge {
        witnesses.push(Witness { condition: "every_edge_meets_degree2".into(), edges: vec![e], cycles: vec![] });
    }
    let single = single_vertex_check(&cycles);
    if let Check::Fails((i, j)) = single {
        witnesses.push(Witness { condition: "cycles_share_single_vertex".into(), edges: vec![], cycles: vec![i, j] });
    }
    let sharing = edge_sharing_check(&cycles);
    if let Check::Fails((i, j)) = sharing {
        let common: Vec<usize> = cycles[i].sorted_edges().into_iter().filter(|e| cycles[j].contains_edge(*e)).collect();
        witnesses.push(Witness { condition: "no_two_cycles_share_path".into(), edges: common, cycles: vec![i, j] });
    }

    let mut main = sharing.holds();
    if !sharing.holds() {
        witnesses.push(Witness {
            condition: "main_theorem_hypothesis".into(),
            edges: vec![],
            cycles: sharing_pair(&sharing),
        });
    }
    if main {
        for (ci, c) in cycles.iter().enumerate() {
            if let Some(&e) = c.sorted_edges().iter().find(|&&e| !meets_two(e)) {
                main = false;
                witnesses.push(Witness {
                    condition: "main_theorem_hypothesis".into(),
                    edges: vec![e],
                    cycles: vec![ci],
                });
                break;
            }
        }
    }
    if main {
        if let Some((e, triple)) = triple_violation(g, &cycles, caps, &meets_two)? {
            main = false;
            witnesses.push(Witness { condition: "main_theorem_hypothesis".into(), edges: vec![e], cycles: triple });
        }
    }

    Ok(StructureReport {
        every_edge_meets_degree2: every_edge.holds(),
        cycles_share_single_vertex: single.holds(),
        no_two_cycles_share_path: sharing.holds(),
        main_theorem_hypothesis: main,
        cycles: cycles.iter().map(Cycle::sorted_edges).collect(),
        connecting_paths: "inner vertices and edges avoid all cycles; a shared vertex is an empty path",
        witnesses,
    })
}

fn sharing_pair(check: &Check<(usize, usize)>) -> Vec<usize> {
    check.witness().map(|&(i, j)| vec![i, j]).unwrap_or_default()
}

fn triple_violation(
    g: &WeightedOrientedGraph,
    cycles: &[Cycle],
    caps: &Caps,
    meets_two: &dyn Fn(usize) -> bool,
) -> Result<Option<(usize, Vec<usize>)>> {
    if cycles.len() < 3 {
        return Ok(None);
    }
    let paths = connecting_paths(g, cycles, caps.paths)?;
    let k = cycles.len();
    let isolated: Vec<bool> =
        (0..k).map(|c| (0..k).all(|d| d == c || shared_vertices(&cycles[c], &cycles[d]) == 0)).collect();
    // Condition (ii) for cycle `c` and edge `e`.
    let exempt = |c: usize, e: usize| isolated[c] && paths.iter().filter(|p| p.from == c).all(|p| p.edges.contains(&e));
    for c3 in 0..k {
        let into: Vec<&ConnectingPath> = paths.iter().filter(|p| p.to == c3).collect();
        for p1 in &into {
            for p2 in &into {
                if p1.from >= p2.from {
                    continue;
                }
                let common: BTreeSet<usize> = p1.edges.iter().filter(|e| p2.edges.contains(e)).copied().collect();
                for e in common {
                    if !meets_two(e) && !exempt(c3, e) {
                        return Ok(Some((e, vec![p1.from, p2.from, c3])));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(weights: Vec<u64>, edges: &[(usize, usize)]) -> WeightedOrientedGraph {
        WeightedOrientedGraph::new(weights, edges.to_vec()).unwrap()
    }

    fn two_triangles() -> WeightedOrientedGraph {
        graph(vec![1; 5], &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    }

    #[test]
    fn degree_two_examples() {
        assert!(every_edge_meets_degree_two(&two_triangles()).holds());
        let single = graph(vec![1, 1], &[(0, 1)]);
        assert_eq!(every_edge_meets_degree_two(&single), Check::Fails(0));
        let chorded = graph(vec![1; 4], &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        assert_eq!(every_edge_meets_degree_two(&chorded), Check::Fails(4));
    }

    #[test]
    fn sharing_examples() {
        let caps = Caps::default();
        assert!(no_two_cycles_share_path(&two_triangles(), &caps).unwrap().holds());
        assert!(cycles_share_single_vertex(&two_triangles(), &caps).unwrap().holds());
        // theta: 0 and 1 joined by 0-1, 0-2-1 and 0-3-1
        let theta = graph(vec![1; 4], &[(0, 1), (0, 2), (2, 1), (0, 3), (3, 1)]);
        assert!(!no_two_cycles_share_path(&theta, &caps).unwrap().holds());
        let square = graph(vec![1; 4], &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(no_two_cycles_share_path(&square, &caps).unwrap().holds());
    }

    #[test]
    fn two_triangles_report() {
        let report = main_theorem_hypothesis(&two_triangles(), &Caps::default()).unwrap();
        assert!(report.every_edge_meets_degree2);
        assert!(report.main_theorem_hypothesis);
        assert!(report.witnesses.is_empty());
        assert_eq!(report.cycles, vec![vec![0, 1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn empty_paths_between_touching_cycles() {
        let g = two_triangles();
        let cycles = enumerate_cycles(&g, 10).unwrap();
        let paths = connecting_paths(&g, &cycles, 100).unwrap();
        assert_eq!(paths.len(), 2);
        assert!(paths.iter().all(|p| p.edges.is_empty()));
    }

    #[test]
    fn bridge_path_between_triangles() {
        // triangles {0,1,2} and {4,5,6} joined by 2-3-4
        let g = graph(vec![1; 7], &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)]);
        let cycles = enumerate_cycles(&g, 10).unwrap();
        let paths = connecting_paths(&g, &cycles, 100).unwrap();
        let forward: Vec<_> = paths.iter().filter(|p| p.from == 0).collect();
        assert_eq!(forward.len(), 1);
        assert_eq!(forward[0].edges, vec![3, 4]);
        assert!(main_theorem_hypothesis(&g, &Caps::default()).unwrap().main_theorem_hypothesis);
    }
}
