use std::collections::{HashSet, VecDeque};

use dashu_int::IBig;

use crate::error::{Error, Result};
use crate::lattice::{Move, ToricMatrix};

/// All nonnegative integer points `w` with `A·w = b`, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fiber {
    degree: Vec<IBig>,
    points: Vec<Vec<IBig>>,
}

impl Fiber {
    pub fn degree(&self) -> &[IBig] {
        &self.degree
    }

    pub fn points(&self) -> &[Vec<IBig>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn position(&self, point: &[IBig]) -> Option<usize> {
        self.points.binary_search_by(|p| p.as_slice().cmp(point)).ok()
    }
}

/// Enumerates the fiber of `b` by depth-first search over coordinates.
pub fn fiber(a: &ToricMatrix, b: &[IBig], cap: usize) -> Result<Fiber> {
    if b.len() != a.rows() {
        return Err(Error::LengthMismatch { expected: a.rows(), found: b.len() });
    }
    if b.iter().any(|x| *x < IBig::ZERO) {
        return Err(Error::InvalidMatrix("fiber degree has a negative entry".into()));
    }
    let columns = a.columns();
    // last_support[r]: last column with a positive entry on row r.
    let last_support: Vec<Option<usize>> =
        (0..a.rows()).map(|r| (0..a.cols()).rev().find(|&c| !a.get(r, c).is_zero())).collect();
    let mut search = FiberSearch {
        columns: &columns,
        last_support: &last_support,
        cap,
        residual: b.to_vec(),
        current: vec![IBig::ZERO; a.cols()],
        points: Vec::new(),
    };
    search.descend(0)?;
    Ok(Fiber { degree: b.to_vec(), points: search.points })
}

struct FiberSearch<'a> {
    columns: &'a [Vec<IBig>],
    last_support: &'a [Option<usize>],
    cap: usize,
    residual: Vec<IBig>,
    current: Vec<IBig>,
    points: Vec<Vec<IBig>>,
}

impl FiberSearch<'_> {
    fn descend(&mut self, col: usize) -> Result<()> {
        let stranded =
            self.residual.iter().zip(self.last_support).any(|(x, last)| !x.is_zero() && last.is_none_or(|l| l < col));
        if stranded {
            return Ok(());
        }
        if col == self.columns.len() {
            if self.points.len() == self.cap {
                return Err(Error::FiberCapExceeded { cap: self.cap });
            }
            self.points.push(self.current.clone());
            return Ok(());
        }
        let column = &self.columns[col];
        let max = column
            .iter()
            .zip(&self.residual)
            .filter(|(a, _)| !a.is_zero())
            .map(|(a, x)| x / a)
            .min()
            .expect("toric matrices have no zero column");
        let mut taken = IBig::ZERO;
        loop {
            self.current[col] = taken.clone();
            self.descend(col + 1)?;
            if taken == max {
                break;
            }
            taken += IBig::ONE;
            for (x, a) in self.residual.iter_mut().zip(column) {
                *x -= a;
            }
        }
        for (x, a) in self.residual.iter_mut().zip(column) {
            *x += &max * a;
        }
        self.current[col] = IBig::ZERO;
        Ok(())
    }
}

/// A move as the pair `(g+, g-)` used by fiber walks.
#[derive(Debug, Clone)]
pub(crate) struct Step {
    pub plus: Vec<IBig>,
    pub minus: Vec<IBig>,
}

impl Step {
    pub fn both_signs(m: &Move) -> [Step; 2] {
        let (plus, minus) = (m.plus(), m.minus());
        [Step { plus: plus.clone(), minus: minus.clone() }, Step { plus: minus, minus: plus }]
    }

    /// `w - plus + minus` when `w >= plus`.
    pub fn apply(&self, w: &[IBig]) -> Option<Vec<IBig>> {
        if w.iter().zip(&self.plus).any(|(x, p)| x < p) {
            return None;
        }
        Some(w.iter().zip(&self.plus).zip(&self.minus).map(|((x, p), q)| x - p + q).collect())
    }
}

/// Decides whether `v` lies in the ideal generated by `moves`: `v+` and `v-`
/// must be connected in the fiber of `A·v+` by steps `w -> w - g+ + g-`
/// with `g ∈ ±moves` and `w >= g+`.
pub fn in_ideal(a: &ToricMatrix, v: &Move, moves: &[Move], cap: usize) -> Result<bool> {
    if v.len() != a.cols() {
        return Err(Error::LengthMismatch { expected: a.cols(), found: v.len() });
    }
    if !a.annihilates(v.entries())? {
        return Err(Error::NotInKernel);
    }
    if v.is_zero() {
        return Ok(true);
    }
    let steps: Vec<Step> = moves.iter().flat_map(Step::both_signs).collect();
    walk_connects(&v.plus(), &v.minus(), &steps, cap)
}

pub(crate) fn walk_connects(start: &[IBig], target: &[IBig], steps: &[Step], cap: usize) -> Result<bool> {
    let mut seen: HashSet<Vec<IBig>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.to_vec());
    queue.push_back(start.to_vec());
    while let Some(w) = queue.pop_front() {
        if w.as_slice() == target {
            return Ok(true);
        }
        for step in steps {
            if let Some(next) = step.apply(&w) {
                if !seen.contains(&next) {
                    if seen.len() == cap {
                        return Err(Error::FiberCapExceeded { cap });
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<IBig> {
        v.iter().map(|&x| IBig::from(x)).collect()
    }

    #[test]
    fn one_row_fiber() {
        let a = ToricMatrix::from_rows(&[vec![1i64, 1, 2]]).unwrap();
        let f = fiber(&a, &ints(&[2]), 100).unwrap();
        let expected: Vec<Vec<IBig>> = [[0, 0, 1], [0, 2, 0], [1, 1, 0], [2, 0, 0]].iter().map(|p| ints(p)).collect();
        assert_eq!(f.points(), expected.as_slice());
        assert_eq!(f.position(&ints(&[1, 1, 0])), Some(2));
    }

    #[test]
    fn zero_degree_has_one_point() {
        let a = ToricMatrix::from_rows(&[vec![1i64, 1, 2], vec![0, 3, 1]]).unwrap();
        assert_eq!(fiber(&a, &ints(&[0, 0]), 10).unwrap().points(), &[ints(&[0, 0, 0])]);
    }

    #[test]
    fn every_point_has_the_degree() {
        let a = ToricMatrix::from_rows(&[vec![1i64, 2, 0, 3], vec![2, 1, 1, 0]]).unwrap();
        let b = ints(&[7, 5]);
        let f = fiber(&a, &b, 10_000).unwrap();
        assert!(!f.is_empty());
        for p in f.points() {
            assert_eq!(a.apply(p).unwrap(), b);
        }
        // brute force over the box each coordinate <= 7
        let mut count = 0;
        for x0 in 0..=7i64 {
            for x1 in 0..=7i64 {
                for x2 in 0..=7i64 {
                    for x3 in 0..=7i64 {
                        if x0 + 2 * x1 + 3 * x3 == 7 && 2 * x0 + x1 + x2 == 5 {
                            count += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(f.len(), count);
    }

    #[test]
    fn fiber_cap() {
        let a = ToricMatrix::from_rows(&[vec![1i64, 1, 1]]).unwrap();
        assert_eq!(fiber(&a, &ints(&[10]), 5), Err(Error::FiberCapExceeded { cap: 5 }));
    }

    #[test]
    fn membership() {
        let a = ToricMatrix::from_rows(&[vec![1i64, 1]]).unwrap();
        let v = Move::from_i64s(&[1, -1]);
        assert!(in_ideal(&a, &v, std::slice::from_ref(&v), 100).unwrap());
        assert!(!in_ideal(&a, &v, &[], 100).unwrap());
        assert!(in_ideal(&a, &Move::from_i64s(&[3, -3]), std::slice::from_ref(&v), 100).unwrap());
        assert_eq!(in_ideal(&a, &Move::from_i64s(&[1, 1]), &[], 100), Err(Error::NotInKernel));
    }
}
