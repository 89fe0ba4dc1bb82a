//! Minimal Markov bases, indispensable binomials and minimal generation.

use std::collections::{BTreeMap, BTreeSet};

use dashu_int::IBig;

use super::walk::{fiber, in_ideal, Fiber, Step};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graver::{graver_basis_with_cap, GraverSet};
use crate::lattice::{Move, ToricMatrix};

/// Outcome of testing whether a binomial set generates minimally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minimality {
    pub minimal: bool,
    /// Elements lying in the ideal generated by the others.
    pub redundant: Vec<Move>,
}

/// Tests whether `set` (a Graver basis, hence generating) is a minimal
/// generating set: no element lies in the ideal of the remaining ones.
pub fn is_minimal_generating(a: &ToricMatrix, set: &GraverSet, caps: &Caps) -> Result<Minimality> {
    let mut redundant = Vec::new();
    for (i, g) in set.iter().enumerate() {
        let others: Vec<Move> = set.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, h)| h.clone()).collect();
        if in_ideal(a, g, &others, caps.fiber)? {
            redundant.push(g.clone());
        }
    }
    Ok(Minimality { minimal: redundant.is_empty(), redundant })
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut x = x;
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Components of `fiber` under `steps`, each a sorted list of point indices,
/// ordered by smallest point.
fn components(fiber: &Fiber, steps: &[&Step]) -> Vec<Vec<usize>> {
    let mut sets = DisjointSets::new(fiber.len());
    for (i, p) in fiber.points().iter().enumerate() {
        for step in steps {
            if let Some(q) = step.apply(p) {
                let j = fiber.position(&q).expect("steps preserve the degree");
                sets.union(i, j);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..fiber.len() {
        let root = sets.find(i);
        groups.entry(root).or_default().push(i);
    }
    groups.into_values().collect()
}

fn leq(u: &[IBig], v: &[IBig]) -> bool {
    u.iter().zip(v).all(|(x, y)| x <= y)
}

fn difference(p: &[IBig], q: &[IBig]) -> Move {
    Move::new(p.iter().zip(q).map(|(x, y)| x - y).collect())
}

/// Indispensable binomials of `a`.
pub fn indispensable(a: &ToricMatrix, caps: &Caps) -> Result<GraverSet> {
    let graver = graver_basis_with_cap(a, caps.graver)?;
    indispensable_from(a, &graver, caps)
}

/// Indispensable elements of a precomputed Graver basis.
///
/// For `g` with degree `b = A·g+`, connect the fiber of `b` by the Graver
/// moves of degree other than `b`; `g` is indispensable exactly when this
/// leaves two components, `{g+}` and `{g-}`.
pub fn indispensable_from(a: &ToricMatrix, graver: &GraverSet, caps: &Caps) -> Result<GraverSet> {
    let steps: Vec<(Vec<IBig>, Step)> =
        graver.iter().flat_map(Step::both_signs).map(|s| (a.apply_unchecked(&s.plus), s)).collect();
    let mut by_degree: BTreeMap<Vec<IBig>, Vec<&Move>> = BTreeMap::new();
    for g in graver {
        by_degree.entry(a.apply_unchecked(&g.plus())).or_default().push(g);
    }
    let mut found = Vec::new();
    for (degree, moves) in by_degree {
        let fiber = fiber(a, &degree, caps.fiber)?;
        let lower: Vec<&Step> = steps.iter().filter(|(d, _)| *d != degree && leq(d, &degree)).map(|(_, s)| s).collect();
        let comps = components(&fiber, &lower);
        if comps.len() != 2 || comps.iter().any(|c| c.len() != 1) {
            continue;
        }
        let (p, q) = (&fiber.points()[comps[0][0]], &fiber.points()[comps[1][0]]);
        let only = difference(p, q).canonical();
        found.extend(moves.into_iter().filter(|g| **g == only).cloned());
    }
    Ok(GraverSet::new(a, found))
}

/// Markov degrees in increasing order, each with its fiber and the
/// components left by the lexicographically first minimal Markov basis of
/// lower degrees.
struct MarkovDegree {
    fiber: Fiber,
    components: Vec<Vec<usize>>,
}

fn markov_degrees(a: &ToricMatrix, caps: &Caps) -> Result<Vec<MarkovDegree>> {
    let graver = graver_basis_with_cap(a, caps.graver)?;
    // Every Markov degree is the degree of some Graver element. Sorting by
    // total degree first refines the semigroup order.
    let mut degrees: Vec<Vec<IBig>> = graver.iter().map(|g| a.apply_unchecked(&g.plus())).collect();
    degrees.sort_by(|x, y| {
        let (sx, sy): (IBig, IBig) = (x.iter().sum(), y.iter().sum());
        sx.cmp(&sy).then_with(|| x.cmp(y))
    });
    degrees.dedup();

    let mut chosen: Vec<Step> = Vec::new();
    let mut out = Vec::new();
    for degree in degrees {
        let fiber = fiber(a, &degree, caps.fiber)?;
        let steps: Vec<&Step> = chosen.iter().collect();
        let comps = components(&fiber, &steps);
        if comps.len() < 2 {
            continue;
        }
        // Default choice: star at the first component, smallest points.
        let hub = &fiber.points()[comps[0][0]];
        for comp in &comps[1..] {
            let m = difference(hub, &fiber.points()[comp[0]]);
            chosen.extend(Step::both_signs(&m));
        }
        out.push(MarkovDegree { fiber, components: comps });
    }
    Ok(out)
}

/// The lexicographically first minimal Markov basis (a minimal binomial
/// generating set), built degree by degree.
pub fn minimal_markov_basis(a: &ToricMatrix, caps: &Caps) -> Result<Vec<Move>> {
    let mut basis = Vec::new();
    for md in markov_degrees(a, caps)? {
        let hub = &md.fiber.points()[md.components[0][0]];
        for comp in &md.components[1..] {
            basis.push(difference(hub, &md.fiber.points()[comp[0]]).canonical());
        }
    }
    Ok(basis)
}

/// Decodes a Prüfer sequence into the edge list of a labelled tree on
/// `sequence.len() + 2` nodes.
fn prufer_edges(sequence: &[usize]) -> Vec<(usize, usize)> {
    let k = sequence.len() + 2;
    let mut degree = vec![1usize; k];
    for &s in sequence {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(k - 1);
    for &s in sequence {
        let leaf = (0..k).find(|&v| degree[v] == 1).expect("a tree always has a leaf");
        edges.push((leaf.min(s), leaf.max(s)));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..k).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// All labelled spanning trees of the complete graph on `k` nodes.
fn spanning_trees(k: usize, budget: usize) -> Result<Vec<Vec<(usize, usize)>>> {
    if k < 2 {
        return Ok(vec![Vec::new()]);
    }
    let count = (k as f64).powi(k as i32 - 2);
    if count > budget as f64 {
        return Err(Error::BudgetExceeded { what: "spanning choices", cap: budget });
    }
    let mut trees = Vec::new();
    let mut sequence = vec![0usize; k - 2];
    loop {
        trees.push(prufer_edges(&sequence));
        let Some(pos) = (0..sequence.len()).rev().find(|&i| sequence[i] + 1 < k) else {
            break;
        };
        sequence[pos] += 1;
        for s in &mut sequence[pos + 1..] {
            *s = 0;
        }
    }
    Ok(trees)
}

/// Independent computation of the indispensable binomials.
///
/// At every Markov degree, every minimal generating set picks a spanning
/// tree of the components left by lower degrees and, for each tree edge, one
/// binomial between the two components. All such choices are enumerated and
/// intersected; the union over degrees is the intersection of all minimal
/// binomial generating sets.
pub fn indispensable_oracle(a: &ToricMatrix, caps: &Caps) -> Result<GraverSet> {
    let budget = caps.oracle_choices;
    let mut common_all = Vec::new();
    let mut total = 0usize;
    for md in markov_degrees(a, caps)? {
        let points = md.fiber.points();
        let comps = &md.components;
        let trees = spanning_trees(comps.len(), budget)?;
        for tree in &trees {
            let choices: usize = tree.iter().map(|&(i, j)| comps[i].len() * comps[j].len()).product();
            total = total.saturating_add(choices);
            if total > budget {
                return Err(Error::BudgetExceeded { what: "spanning choices", cap: budget });
            }
        }
        let mut common: Option<BTreeSet<Move>> = None;
        for tree in &trees {
            // Odometer over one point pair per tree edge.
            let sizes: Vec<(usize, usize)> = tree.iter().map(|&(i, j)| (comps[i].len(), comps[j].len())).collect();
            let mut picks = vec![(0usize, 0usize); tree.len()];
            loop {
                let chosen: BTreeSet<Move> = tree
                    .iter()
                    .zip(&picks)
                    .map(|(&(i, j), &(pi, pj))| difference(&points[comps[i][pi]], &points[comps[j][pj]]).canonical())
                    .collect();
                common = Some(match common {
                    None => chosen,
                    Some(prev) => prev.intersection(&chosen).cloned().collect(),
                });
                let mut pos = picks.len();
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    let (si, sj) = sizes[pos];
                    let (pi, pj) = &mut picks[pos];
                    *pj += 1;
                    if *pj == sj {
                        *pj = 0;
                        *pi += 1;
                    }
                    if *pi < si {
                        pos += 1;
                        break;
                    }
                    *pi = 0;
                }
                if pos == 0 {
                    break;
                }
            }
        }
        common_all.extend(common.unwrap_or_default());
    }
    Ok(GraverSet::new(a, common_all))
}
