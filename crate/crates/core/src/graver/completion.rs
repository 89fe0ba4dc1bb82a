use std::collections::VecDeque;

use dashu_int::IBig;

use super::GraverSet;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::lattice::{conformal_leq_slices, kernel_basis, Move, ToricMatrix};

/// A working-set element with folded sign masks for a cheap `⊑` pre-test.
struct Entry {
    v: Vec<IBig>,
    pos: u128,
    neg: u128,
}

impl Entry {
    fn new(v: Vec<IBig>) -> Self {
        let (pos, neg) = masks(&v);
        Entry { v, pos, neg }
    }

    fn conformally_below(&self, s: &[IBig], s_pos: u128, s_neg: u128) -> bool {
        self.pos & !s_pos == 0 && self.neg & !s_neg == 0 && conformal_leq_slices(&self.v, s)
    }
}

/// Positive and negative supports folded modulo 128: a superset test on the
/// masks is necessary for `⊑`.
fn masks(v: &[IBig]) -> (u128, u128) {
    let (mut pos, mut neg) = (0u128, 0u128);
    for (i, x) in v.iter().enumerate() {
        if *x > IBig::ZERO {
            pos |= 1 << (i % 128);
        } else if *x < IBig::ZERO {
            neg |= 1 << (i % 128);
        }
    }
    (pos, neg)
}

fn sign_compatible(a: &Entry, b: &Entry) -> bool {
    a.pos & b.neg == 0 && a.neg & b.pos == 0 && {
        a.v.iter().zip(&b.v).all(|(x, y)| x.is_zero() || y.is_zero() || x.sign() == y.sign())
    }
}

/// Conformal reduction: while some `g` in the set satisfies `g ⊑ s`,
/// subtract the largest multiple `k·g` that keeps `k·g ⊑ s`.
fn reduce(mut s: Vec<IBig>, set: &[Entry]) -> Vec<IBig> {
    loop {
        let (pos, neg) = masks(&s);
        if pos == 0 && neg == 0 {
            return s;
        }
        let Some(g) = set.iter().find(|g| g.conformally_below(&s, pos, neg)) else {
            return s;
        };
        let k =
            g.v.iter()
                .zip(&s)
                .filter(|(x, _)| !x.is_zero())
                .map(|(x, y)| y / x)
                .min()
                .expect("set elements are nonzero");
        for (y, x) in s.iter_mut().zip(&g.v) {
            if !x.is_zero() {
                *y -= &k * x;
            }
        }
    }
}

/// Normal form of `v` under conformal reduction by `±moves`.
pub(crate) fn normal_form(v: &Move, moves: &[Move]) -> Move {
    let set: Vec<Entry> =
        moves.iter().flat_map(|m| [Entry::new(m.entries().to_vec()), Entry::new((-m).into_entries())]).collect();
    Move::new(reduce(v.entries().to_vec(), &set))
}

/// Graver basis with the default working-set cap.
pub fn graver_basis(a: &ToricMatrix) -> Result<GraverSet> {
    graver_basis_with_cap(a, Caps::default().graver)
}

/// Graver basis by completion.
///
/// The working set starts from the reduced kernel lattice basis and is kept
/// closed under negation. Every pairwise sum of sign-incompatible elements is
/// conformally reduced; nonzero remainders join the set. Sign-compatible
/// pairs are skipped because their sum always reduces to zero. Once the
/// queue drains, the set contains every primitive vector and the
/// non-minimal elements are pruned.
pub fn graver_basis_with_cap(a: &ToricMatrix, cap: usize) -> Result<GraverSet> {
    let basis = kernel_basis(a);
    if basis.is_empty() {
        return Ok(GraverSet::empty(a));
    }
    let mut set: Vec<Entry> = Vec::new();
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();

    let insert = |v: Vec<IBig>, set: &mut Vec<Entry>, queue: &mut VecDeque<(usize, usize)>| -> Result<()> {
        let idx = set.len();
        let negated = v.iter().map(|x| -x).collect();
        set.push(Entry::new(v));
        set.push(Entry::new(negated));
        if set.len() > cap {
            return Err(Error::BudgetExceeded { what: "Graver completion working set", cap });
        }
        for k in 0..idx {
            if !sign_compatible(&set[k], &set[idx]) {
                queue.push_back((k, idx));
            }
        }
        Ok(())
    };

    for b in basis {
        let r = reduce(b.into_entries(), &set);
        if r.iter().any(|x| !x.is_zero()) {
            insert(r, &mut set, &mut queue)?;
        }
    }
    while let Some((i, j)) = queue.pop_front() {
        let sum: Vec<IBig> = set[i].v.iter().zip(&set[j].v).map(|(x, y)| x + y).collect();
        let r = reduce(sum, &set);
        if r.iter().any(|x| !x.is_zero()) {
            insert(r, &mut set, &mut queue)?;
        }
    }

    let minimal = set
        .iter()
        .enumerate()
        .filter(|(i, e)| !set.iter().enumerate().any(|(j, g)| j != *i && g.conformally_below(&e.v, e.pos, e.neg)));
    let moves: Vec<Move> = minimal.map(|(_, e)| Move::new(e.v.clone())).filter(Move::is_canonical).collect();
    Ok(GraverSet::new(a, moves))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[Vec<i64>]) -> ToricMatrix {
        ToricMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn unbalanced_triangle_is_empty() {
        let a = mat(&[vec![1, 0, 1], vec![1, 1, 0], vec![0, 1, 1]]);
        assert!(graver_basis(&a).unwrap().is_empty());
    }

    #[test]
    fn balanced_square() {
        let a = mat(&[vec![1, 0, 0, 1], vec![3, 3, 0, 0], vec![0, 1, 1, 0], vec![0, 0, 5, 5]]);
        assert_eq!(graver_basis(&a).unwrap().moves(), &[Move::from_i64s(&[1, -1, 1, -1])]);
    }

    #[test]
    fn two_triangles_sharing_a_vertex() {
        // x1 shared; triangle x1x2x3 via e1=(1,2) e2=(2,3) e3=(3,1); triangle x1x4x5 via e4=(1,4) e5=(4,5) e6=(5,1)
        let a = mat(&[
            vec![1, 0, 1, 1, 0, 1],
            vec![1, 1, 0, 0, 0, 0],
            vec![0, 1, 1, 0, 0, 0],
            vec![0, 0, 0, 1, 1, 0],
            vec![0, 0, 0, 0, 1, 1],
        ]);
        assert_eq!(graver_basis(&a).unwrap().moves(), &[Move::from_i64s(&[1, -1, 1, -1, 1, -1])]);
    }

    #[test]
    fn one_row_matrix() {
        // Primitive partition identities of (1, 1, 2).
        let a = mat(&[vec![1, 1, 2]]);
        let expected: Vec<Move> =
            [[0, 2, -1], [1, -1, 0], [1, 1, -1], [2, 0, -1]].iter().map(|v| Move::from_i64s(v)).collect();
        assert_eq!(graver_basis(&a).unwrap().moves(), expected.as_slice());
    }

    #[test]
    fn working_set_cap_is_enforced() {
        let a = mat(&[vec![1, 2, 3, 5]]);
        assert!(matches!(graver_basis_with_cap(&a, 4), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn normal_form_reduces_multiples() {
        let g = Move::from_i64s(&[1, -1]);
        assert!(normal_form(&Move::from_i64s(&[3, -3]), std::slice::from_ref(&g)).is_zero());
        assert_eq!(normal_form(&Move::from_i64s(&[2, -1]), &[g]), Move::from_i64s(&[1, 0]));
    }
}
