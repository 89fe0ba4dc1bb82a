//! Graver bases (primitive binomials) and circuits of toric matrices.
//!
//! [`graver_basis`] is a completion procedure; [`brute_force_graver`] is an
//! independent box enumeration and [`certificate_check`] replays the
//! completion criterion on any candidate set.

mod brute;
mod certificate;
mod circuits;
mod completion;

use std::collections::HashSet;

use dashu_int::IBig;

use crate::error::Result;
use crate::lattice::{render_binomial, Move, ToricMatrix};

pub use brute::{brute_force_graver, brute_force_graver_with_cap};
pub use certificate::{certificate_check, Certificate, CertificateFailure};
pub use circuits::{circuits, circuits_with_cap};
pub use completion::{graver_basis, graver_basis_with_cap};

pub(crate) use completion::normal_form;

/// Canonically signed, lexicographically sorted, duplicate-free set of moves
/// of one matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraverSet {
    moves: Vec<Move>,
    fingerprint: String,
}

impl GraverSet {
    /// Canonicalizes signs, drops zeros and duplicates, and sorts.
    pub fn new(a: &ToricMatrix, moves: impl IntoIterator<Item = Move>) -> Self {
        let mut moves: Vec<Move> = moves.into_iter().filter(|m| !m.is_zero()).map(Move::canonical).collect();
        moves.sort();
        moves.dedup();
        GraverSet { moves, fingerprint: a.fingerprint() }
    }

    pub fn empty(a: &ToricMatrix) -> Self {
        GraverSet { moves: Vec::new(), fingerprint: a.fingerprint() }
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Move> {
        self.moves.iter()
    }

    pub fn fingerprint(&self) -> &str {
        &self.fingerprint
    }

    /// Membership up to sign.
    pub fn contains(&self, v: &Move) -> bool {
        let canonical = v.clone().canonical();
        self.moves.binary_search(&canonical).is_ok()
    }

    pub fn is_subset_of(&self, other: &GraverSet) -> bool {
        self.moves.iter().all(|m| other.contains(m))
    }

    /// Elements of `self` that are not in `other`.
    pub fn difference(&self, other: &GraverSet) -> Vec<Move> {
        self.moves.iter().filter(|m| !other.contains(m)).cloned().collect()
    }

    /// Every move together with its negative.
    pub fn symmetric(&self) -> Vec<Move> {
        self.moves.iter().flat_map(|m| [m.clone(), -m]).collect()
    }

    pub fn max_inf_norm(&self) -> IBig {
        self.moves.iter().map(Move::inf_norm).max().unwrap_or(IBig::ZERO)
    }

    /// One move per line as space-separated signed integers.
    pub fn to_text(&self) -> String {
        self.moves.iter().map(|m| format!("{m}\n")).collect()
    }

    pub fn render(&self, names: &[String]) -> Result<Vec<String>> {
        self.moves.iter().map(|m| render_binomial(m, names)).collect()
    }

    /// Elements whose support lies inside `columns`.
    pub fn supported_in(&self, columns: &[usize]) -> Vec<Move> {
        let allowed: HashSet<usize> = columns.iter().copied().collect();
        self.moves.iter().filter(|m| m.support().iter().all(|i| allowed.contains(i))).cloned().collect()
    }
}

impl<'a> IntoIterator for &'a GraverSet {
    type Item = &'a Move;
    type IntoIter = std::slice::Iter<'a, Move>;
    fn into_iter(self) -> Self::IntoIter {
        self.moves.iter()
    }
}
