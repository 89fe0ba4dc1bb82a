use std::fmt;
use std::ops::{Add, Neg, Sub};

use dashu_int::IBig;

use crate::error::{Error, Result};

/// A lattice vector `b` of `ker_Z(A)`, read as the binomial `f_b = e^{b+} - e^{b-}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move(Vec<IBig>);

impl Move {
    pub fn new(entries: Vec<IBig>) -> Self {
        Move(entries)
    }

    pub fn from_i64s(entries: &[i64]) -> Self {
        Move(entries.iter().map(|&x| IBig::from(x)).collect())
    }

    pub fn zero(len: usize) -> Self {
        Move(vec![IBig::ZERO; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[IBig] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<IBig> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(IBig::is_zero)
    }

    /// Positive part `b+` (entrywise `max(b, 0)`).
    pub fn plus(&self) -> Vec<IBig> {
        self.0.iter().map(|x| if *x > IBig::ZERO { x.clone() } else { IBig::ZERO }).collect()
    }

    /// Negative part `b-`, so that `b = b+ - b-`.
    pub fn minus(&self) -> Vec<IBig> {
        self.0.iter().map(|x| if *x < IBig::ZERO { -x } else { IBig::ZERO }).collect()
    }

    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i).collect()
    }

    pub fn positive_support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, x)| **x > IBig::ZERO).map(|(i, _)| i).collect()
    }

    pub fn negative_support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, x)| **x < IBig::ZERO).map(|(i, _)| i).collect()
    }

    /// First nonzero entry is positive (the zero vector counts as canonical).
    pub fn is_canonical(&self) -> bool {
        self.0.iter().find(|x| !x.is_zero()).is_none_or(|x| *x > IBig::ZERO)
    }

    /// `self` or `-self`, whichever has a positive leading entry.
    pub fn canonical(self) -> Self {
        if self.is_canonical() {
            self
        } else {
            -self
        }
    }

    pub fn one_norm(&self) -> IBig {
        self.0.iter().map(|x| if *x < IBig::ZERO { -x } else { x.clone() }).sum()
    }

    pub fn inf_norm(&self) -> IBig {
        self.0.iter().map(|x| if *x < IBig::ZERO { -x } else { x.clone() }).max().unwrap_or(IBig::ZERO)
    }

    /// Keeps the entries on `indices` and zeroes the rest; the length is unchanged.
    pub fn restrict(&self, indices: &[usize]) -> Result<Self> {
        let mut out = vec![IBig::ZERO; self.len()];
        for &i in indices {
            let x = self.0.get(i).ok_or(Error::IndexOutOfRange { index: i, len: self.len() })?;
            out[i] = x.clone();
        }
        Ok(Move(out))
    }

    /// No coordinate where the two vectors have strictly opposite signs.
    pub fn is_sign_compatible(&self, other: &Move) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a.is_zero() || b.is_zero() || (a.sign() == b.sign()))
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|x| i64::try_from(x).ok()).collect()
    }
}

/// Conformal order: `u ⊑ v` iff `u+ <= v+` and `u- <= v-` entrywise.
pub fn conformal_leq(u: &Move, v: &Move) -> Result<bool> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch { expected: v.len(), found: u.len() });
    }
    Ok(conformal_leq_slices(u.entries(), v.entries()))
}

pub(crate) fn conformal_leq_slices(u: &[IBig], v: &[IBig]) -> bool {
    u.iter().zip(v).all(|(a, b)| {
        if a.is_zero() {
            true
        } else if *a > IBig::ZERO {
            b >= a
        } else {
            b <= a
        }
    })
}

impl Neg for Move {
    type Output = Move;
    fn neg(self) -> Move {
        Move(self.0.into_iter().map(|x| -x).collect())
    }
}

impl Neg for &Move {
    type Output = Move;
    fn neg(self) -> Move {
        Move(self.0.iter().map(|x| -x).collect())
    }
}

impl Add for &Move {
    type Output = Move;
    fn add(self, rhs: &Move) -> Move {
        assert_eq!(self.len(), rhs.len(), "adding moves of different lengths");
        Move(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Move {
    type Output = Move;
    fn sub(self, rhs: &Move) -> Move {
        assert_eq!(self.len(), rhs.len(), "subtracting moves of different lengths");
        Move(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl From<Vec<IBig>> for Move {
    fn from(entries: Vec<IBig>) -> Self {
        Move(entries)
    }
}

/// Space-separated signed entries, the Graver output line format.
impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}
