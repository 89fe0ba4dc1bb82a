use super::{normal_form, GraverSet};
use crate::lattice::{conformal_leq_slices, kernel_basis, Move, ToricMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateFailure {
    WrongLength {
        vector: Move,
        expected: usize,
    },
    Zero,
    NotInKernel(Move),
    /// `smaller ⊑ larger` for two distinct members (up to sign).
    Comparable {
        smaller: Move,
        larger: Move,
    },
    /// A lattice basis vector that the set cannot reduce to zero.
    BasisNotReduced {
        vector: Move,
        remainder: Move,
    },
    /// A pairwise sum `left + right` that the set cannot reduce to zero.
    SumNotReduced {
        left: Move,
        right: Move,
        remainder: Move,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Valid,
    Invalid(CertificateFailure),
}

impl Certificate {
    pub fn is_valid(&self) -> bool {
        matches!(self, Certificate::Valid)
    }
}

/// Checks that `set` is exactly the Graver basis of `a`:
/// every element lies in the kernel, no two elements are `⊑`-comparable,
/// every pairwise sum of elements of `±set` reduces to zero, and every
/// lattice basis vector reduces to zero.
pub fn certificate_check(a: &ToricMatrix, set: &GraverSet) -> Certificate {
    match check(a, set) {
        Ok(()) => Certificate::Valid,
        Err(failure) => Certificate::Invalid(failure),
    }
}

fn check(a: &ToricMatrix, set: &GraverSet) -> Result<(), CertificateFailure> {
    for g in set {
        if g.len() != a.cols() {
            return Err(CertificateFailure::WrongLength { vector: g.clone(), expected: a.cols() });
        }
        if g.is_zero() {
            return Err(CertificateFailure::Zero);
        }
        if !a.annihilates(g.entries()).unwrap_or(false) {
            return Err(CertificateFailure::NotInKernel(g.clone()));
        }
    }
    let symmetric = set.symmetric();
    for (i, u) in symmetric.iter().enumerate() {
        for (j, v) in symmetric.iter().enumerate() {
            if i != j && i / 2 != j / 2 && conformal_leq_slices(u.entries(), v.entries()) {
                return Err(CertificateFailure::Comparable { smaller: u.clone(), larger: v.clone() });
            }
        }
    }
    let moves = set.moves();
    for (i, u) in symmetric.iter().enumerate() {
        for v in &symmetric[i + 1..] {
            let remainder = normal_form(&(u + v), moves);
            if !remainder.is_zero() {
                return Err(CertificateFailure::SumNotReduced { left: u.clone(), right: v.clone(), remainder });
            }
        }
    }
    for b in kernel_basis(a) {
        let remainder = normal_form(&b, moves);
        if !remainder.is_zero() {
            return Err(CertificateFailure::BasisNotReduced { vector: b, remainder });
        }
    }
    Ok(())
}
