use dashu_int::ops::{Gcd, UnsignedAbs};
use dashu_int::{IBig, UBig};

use super::GraverSet;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::lattice::{Move, ToricMatrix};

pub fn brute_force_graver(a: &ToricMatrix, bound: u64) -> Result<GraverSet> {
    brute_force_graver_with_cap(a, bound, Caps::default().brute_force_points)
}

/// Graver elements with `‖v‖∞ <= bound`, by exhaustive enumeration.
///
/// `A` is brought to fraction-free reduced echelon form, so every kernel
/// vector is determined by its free coordinates. All free coordinates in the
/// box are enumerated and the pivot coordinates solved for; this lists every
/// kernel vector in the box. Vectors are then scanned by increasing 1-norm; a
/// vector is kept unless an already-kept vector or its negative lies
/// conformally below it. Anything conformally below a box vector is itself in
/// the box, so the result is exactly the set of `⊑`-minimal kernel vectors in
/// the box.
pub fn brute_force_graver_with_cap(a: &ToricMatrix, bound: u64, cap: usize) -> Result<GraverSet> {
    let too_large = || Error::BudgetExceeded { what: "brute-force entry size", cap: i64::MAX as usize };
    let bound = i128::from(i64::try_from(bound).map_err(|_| too_large())?);
    let m = a.cols();
    let (pivots, rows) = reduced_echelon(a);
    let rows: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|x| i128::try_from(x).map_err(|_| too_large())).collect())
        .collect::<Result<_>>()?;
    let free: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();

    let side = 2 * bound + 1;
    let total = u32::try_from(free.len())
        .ok()
        .and_then(|f| side.checked_pow(f))
        .filter(|&t| t <= cap as i128)
        .ok_or(Error::BudgetExceeded { what: "brute-force enumeration", cap })?;

    let mut kernel = Vec::new();
    let mut values = vec![-bound; free.len()];
    for _ in 0..total {
        if let Some(v) = solve(&pivots, &rows, &free, &values, bound, m) {
            if v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0) {
                kernel.push(v);
            }
        }
        for x in values.iter_mut() {
            if *x < bound {
                *x += 1;
                break;
            }
            *x = -bound;
        }
    }

    kernel.sort_by_key(|v| (v.iter().map(|x| x.unsigned_abs()).sum::<u128>(), v.clone()));
    let mut primitive: Vec<Vec<i128>> = Vec::new();
    for v in kernel {
        let dominated = primitive.iter().any(|g| below(g, &v, 1) || below(g, &v, -1));
        if !dominated {
            primitive.push(v);
        }
    }
    let moves = primitive.into_iter().map(|v| Move::new(v.into_iter().map(IBig::from).collect()));
    Ok(GraverSet::new(a, moves))
}

/// Fraction-free Gauss-Jordan elimination: pivot columns and the nonzero
/// rows, each row divided by the gcd of its entries.
fn reduced_echelon(a: &ToricMatrix) -> (Vec<usize>, Vec<Vec<IBig>>) {
    let mut rows = a.to_rows();
    let mut pivots = Vec::new();
    for c in 0..a.cols() {
        let r = pivots.len();
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let (lead, factor) = (rows[r][c].clone(), rows[i][c].clone());
            let pivot_row = rows[r].clone();
            for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                *x = &lead * &*x - &factor * y;
            }
            normalize(&mut rows[i]);
        }
        pivots.push(c);
    }
    rows.truncate(pivots.len());
    (pivots, rows)
}

fn normalize(row: &mut [IBig]) {
    let g = row.iter().filter(|x| !x.is_zero()).fold(UBig::ZERO, |g, x| {
        if g.is_zero() {
            x.unsigned_abs()
        } else {
            g.gcd(x.unsigned_abs())
        }
    });
    if g > UBig::ONE {
        let g = IBig::from(g);
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// The kernel vector with the given free coordinates, if it is integral and
/// inside the box.
fn solve(
    pivots: &[usize],
    rows: &[Vec<i128>],
    free: &[usize],
    values: &[i128],
    bound: i128,
    m: usize,
) -> Option<Vec<i128>> {
    let mut v = vec![0i128; m];
    for (&c, &x) in free.iter().zip(values) {
        v[c] = x;
    }
    for (&p, row) in pivots.iter().zip(rows) {
        let rest: i128 = free.iter().map(|&c| row[c] * v[c]).sum();
        if rest % row[p] != 0 {
            return None;
        }
        let x = -rest / row[p];
        if x.abs() > bound {
            return None;
        }
        v[p] = x;
    }
    Some(v)
}

/// `sign·g ⊑ v`.
fn below(g: &[i128], v: &[i128], sign: i128) -> bool {
    g.iter().zip(v).all(|(&x, &y)| {
        let x = sign * x;
        x == 0 || (x > 0 && y >= x) || (x < 0 && y <= x)
    })
}
