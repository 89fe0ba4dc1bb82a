//! Exact integer linear algebra: saturated kernel lattices via Hermite
//! reduction, rank, and fraction-free determinants.

use std::cmp::Ordering;

use dashu_int::ops::{Abs, DivEuclid};
use dashu_int::IBig;

use super::{Move, ToricMatrix};
use crate::error::{Error, Result};

/// Integer row reduction of `rows` on the first `limit` columns using only
/// unimodular row operations. Returns the pivot columns; rows past the pivot
/// count are zero on the first `limit` columns.
///
/// With `reduce_above`, entries above each pivot are brought into
/// `[0, pivot)`, which yields the (unique) Hermite normal form.
pub(crate) fn hermite_rows(rows: &mut [Vec<IBig>], limit: usize, reduce_above: bool) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..limit {
        if r == rows.len() {
            break;
        }
        loop {
            let best = (r..rows.len()).filter(|&i| !rows[i][c].is_zero()).min_by(|&i, &j| {
                match rows[i][c].clone().abs().cmp(&rows[j][c].clone().abs()) {
                    Ordering::Equal => i.cmp(&j),
                    other => other,
                }
            });
            let Some(p) = best else { break };
            rows.swap(r, p);
            let mut cleared = true;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = &rows[i][c] / &rows[r][c];
                let (head, tail) = rows.split_at_mut(i);
                sub_multiple(&mut tail[0], &head[r], &q);
                if !tail[0][c].is_zero() {
                    cleared = false;
                }
            }
            if cleared {
                break;
            }
        }
        if rows[r][c].is_zero() {
            continue;
        }
        if rows[r][c] < IBig::ZERO {
            for x in rows[r].iter_mut() {
                *x = -std::mem::take(x);
            }
        }
        if reduce_above {
            for i in 0..r {
                let q = (&rows[i][c]).div_euclid(&rows[r][c]);
                if !q.is_zero() {
                    let (head, tail) = rows.split_at_mut(r);
                    sub_multiple(&mut head[i], &tail[0], &q);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn sub_multiple(target: &mut [IBig], source: &[IBig], q: &IBig) {
    for (t, s) in target.iter_mut().zip(source) {
        if !s.is_zero() {
            *t -= q * s;
        }
    }
}

/// Lattice basis of `ker_Z(A)`, returned in Hermite normal form.
///
/// The basis is saturated: every integer kernel vector is an integer
/// combination of the returned vectors. It is computed from a unimodular
/// reduction of `[A^T | I]`, never from a rational kernel.
pub fn kernel_basis(a: &ToricMatrix) -> Vec<Move> {
    let (n, m) = (a.rows(), a.cols());
    let mut rows: Vec<Vec<IBig>> = (0..m)
        .map(|j| {
            let mut row = a.column(j);
            row.extend((0..m).map(|k| if k == j { IBig::ONE } else { IBig::ZERO }));
            row
        })
        .collect();
    let rank = hermite_rows(&mut rows, n, false).len();
    let mut kernel: Vec<Vec<IBig>> = rows.drain(rank..).map(|row| row[n..].to_vec()).collect();
    let pivots = hermite_rows(&mut kernel, m, true);
    debug_assert_eq!(pivots.len(), kernel.len());
    kernel.into_iter().map(Move::new).collect()
}

/// Rank over the rationals.
pub fn rank(a: &ToricMatrix) -> usize {
    let mut rows = a.columns();
    hermite_rows(&mut rows, a.rows(), false).len()
}

/// Dimension of the rational null space, `cols - rank`.
pub fn null_dim(a: &ToricMatrix) -> usize {
    a.cols() - rank(a)
}

/// Exact determinant of a square toric matrix.
pub fn det(a: &ToricMatrix) -> Result<IBig> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    Ok(det_rows(a.to_rows()))
}

/// Bareiss fraction-free elimination on an arbitrary square integer matrix.
pub fn det_rows(mut m: Vec<Vec<IBig>>) -> IBig {
    let n = m.len();
    if n == 0 {
        return IBig::ONE;
    }
    let mut negate = false;
    let mut prev = IBig::ONE;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return IBig::ZERO;
            };
            m.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let value = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = value / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[Vec<i64>]) -> ToricMatrix {
        ToricMatrix::from_rows(rows).unwrap()
    }

    fn alternating_square() -> ToricMatrix {
        // e1=(x1->x2), e2=(x3->x2), e3=(x3->x4), e4=(x1->x4), weights (1,3,1,5)
        mat(&[vec![1, 0, 0, 1], vec![3, 3, 0, 0], vec![0, 1, 1, 0], vec![0, 0, 5, 5]])
    }

    fn triangle() -> ToricMatrix {
        mat(&[vec![1, 0, 1], vec![1, 1, 0], vec![0, 1, 1]])
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&mat(&[vec![1, 1]])), vec![Move::from_i64s(&[1, -1])]);
        assert!(kernel_basis(&triangle()).is_empty());
        assert_eq!(kernel_basis(&alternating_square()), vec![Move::from_i64s(&[1, -1, 1, -1])]);
    }

    #[test]
    fn kernel_is_saturated_where_rational_scaling_is_not() {
        // Rational kernel direction (1, 1, -1) scaled from (2, 2, -2) must come out primitive.
        let a = mat(&[vec![2, 4, 6], vec![1, 1, 2]]);
        assert_eq!(kernel_basis(&a), vec![Move::from_i64s(&[1, 1, -1])]);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&mat(&[vec![2, 0, 1], vec![0, 3, 1]])), 2);
        assert_eq!(rank(&mat(&[vec![1, 0], vec![0, 1], vec![1, 1]])), 2);
        assert_eq!(null_dim(&triangle()), 0);
        assert_eq!(null_dim(&alternating_square()), 1);
    }

    #[test]
    fn det_examples() {
        assert_eq!(det(&mat(&[vec![7]])).unwrap(), IBig::from(7));
        assert_eq!(det(&alternating_square()).unwrap(), IBig::ZERO);
        assert_eq!(det(&triangle()).unwrap(), IBig::from(2));
        assert!(matches!(det(&mat(&[vec![1, 1]])), Err(Error::NotSquare { rows: 1, cols: 2 })));
        // needs a row swap
        let swapped = vec![vec![IBig::ZERO, IBig::ONE], vec![IBig::ONE, IBig::ZERO]];
        assert_eq!(det_rows(swapped), IBig::from(-1));
    }
}
