use dashu_int::IBig;
use itertools::Itertools;

use super::GraverSet;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::lattice::{kernel_basis, rank, Move, ToricMatrix};

pub fn circuits(a: &ToricMatrix) -> Result<GraverSet> {
    circuits_with_cap(a, Caps::default().circuit_subsets)
}

/// Support-minimal kernel vectors: for each column subset `S` whose
/// restriction has a one-dimensional kernel spanned by a vector with full
/// support on `S`, that primitive vector.
pub fn circuits_with_cap(a: &ToricMatrix, cap: usize) -> Result<GraverSet> {
    let m = a.cols();
    let max_size = (rank(a) + 1).min(m);
    let mut examined = 0usize;
    let mut found = Vec::new();
    for size in 2..=max_size {
        for subset in (0..m).combinations(size) {
            examined += 1;
            if examined > cap {
                return Err(Error::BudgetExceeded { what: "circuit column subsets", cap });
            }
            let sub = a.select_columns(&subset)?;
            let basis = kernel_basis(&sub);
            if basis.len() != 1 || basis[0].entries().iter().any(IBig::is_zero) {
                continue;
            }
            let mut full = vec![IBig::ZERO; m];
            for (&col, x) in subset.iter().zip(basis[0].entries()) {
                full[col] = x.clone();
            }
            found.push(Move::new(full));
        }
    }
    Ok(GraverSet::new(a, found))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graver::graver_basis;

    #[test]
    fn one_row() {
        let a = ToricMatrix::from_rows(&[vec![1i64, 1, 2]]).unwrap();
        let c = circuits(&a).unwrap();
        let expected: Vec<Move> = [[0, 2, -1], [1, -1, 0], [2, 0, -1]].iter().map(|v| Move::from_i64s(v)).collect();
        assert_eq!(c.moves(), expected.as_slice());
        assert!(c.is_subset_of(&graver_basis(&a).unwrap()));
    }

    #[test]
    fn trivial_kernel() {
        let triangle = ToricMatrix::from_rows(&[vec![1i64, 0, 1], vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        assert!(circuits(&triangle).unwrap().is_empty());
    }
}
