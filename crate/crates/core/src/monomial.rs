//! Monomial ideals given by exponent vectors, their toric matrices and the
//! private-shared-variable hypothesis for two-variable generators.

use std::fmt;

use dashu_int::IBig;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::ToricMatrix;
use crate::text::{content_lines, parse_count, parse_u64};

/// A minimal monomial generating set `x^{a_1}, ..., x^{a_m}` in `n` variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdealPresentation {
    variable_count: usize,
    generators: Vec<Vec<u64>>,
}

fn divides(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl MonomialIdealPresentation {
    /// Keeps the generators in the given order; they must be nonzero,
    /// distinct and pairwise non-dividing.
    pub fn new(variable_count: usize, generators: Vec<Vec<u64>>) -> Result<Self> {
        if variable_count == 0 {
            return Err(Error::InvalidMonomials("at least one variable is required".into()));
        }
        for (i, a) in generators.iter().enumerate() {
            if a.len() != variable_count {
                return Err(Error::LengthMismatch { expected: variable_count, found: a.len() });
            }
            if a.iter().all(|&x| x == 0) {
                return Err(Error::InvalidMonomials(format!("generator {} is the constant 1", i + 1)));
            }
        }
        for i in 0..generators.len() {
            for j in 0..generators.len() {
                if i != j && divides(&generators[i], &generators[j]) {
                    return Err(Error::InvalidMonomials(format!("generator {} divides generator {}", i + 1, j + 1)));
                }
            }
        }
        Ok(MonomialIdealPresentation { variable_count, generators })
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn generators(&self) -> &[Vec<u64>] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Columns are the generator exponent vectors.
    pub fn toric_matrix(&self) -> ToricMatrix {
        let columns: Vec<Vec<IBig>> =
            self.generators.iter().map(|a| a.iter().map(|&x| IBig::from(x)).collect()).collect();
        if columns.is_empty() {
            return ToricMatrix::new(self.variable_count, 0, Vec::new()).expect("an empty matrix is valid");
        }
        ToricMatrix::from_columns(self.variable_count, &columns).expect("generators are nonzero")
    }

    /// Variables occurring in generator `i`.
    pub fn support(&self, i: usize) -> Vec<usize> {
        (0..self.variable_count).filter(|&l| self.generators[i][l] > 0).collect()
    }

    /// Parses `monomials <n>` followed by one exponent vector per line.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (line_no, header) = lines.next().ok_or_else(|| Error::parse(0, "empty input"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 2 || fields[0] != "monomials" {
            return Err(Error::parse(line_no, "expected header `monomials <variable count>`"));
        }
        let n = parse_count(fields[1], line_no)?;
        let mut generators = Vec::new();
        for (line_no, line) in lines {
            let a = line.split_whitespace().map(|f| parse_u64(f, line_no)).collect::<Result<Vec<_>>>()?;
            if a.len() != n {
                return Err(Error::parse(line_no, format!("expected {n} exponents, found {}", a.len())));
            }
            generators.push(a);
        }
        MonomialIdealPresentation::new(n, generators)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("monomials {}\n", self.variable_count);
        for a in &self.generators {
            let row: Vec<String> = a.iter().map(u64::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for MonomialIdealPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Drops duplicates and multiples of other generators and sorts the rest in
/// decreasing lexicographic order (`x1 > x2 > ...`).
pub fn minimalize(variable_count: usize, generators: &[Vec<u64>]) -> Result<MonomialIdealPresentation> {
    if generators.is_empty() {
        return Err(Error::InvalidMonomials("no generators".into()));
    }
    let mut sorted = generators.to_vec();
    sorted.sort_by(|a, b| b.cmp(a));
    sorted.dedup();
    let kept: Vec<Vec<u64>> =
        sorted.iter().filter(|a| !sorted.iter().any(|b| b != *a && divides(b, a))).cloned().collect();
    MonomialIdealPresentation::new(variable_count, kept)
}

/// Result of the two-support, private-shared-variable test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialHypothesis {
    pub holds: bool,
    /// For each generator `i`, the first `(l, j)` such that variable `l` lies
    /// in generators `i` and `j` and in no other.
    pub witnesses: Vec<Option<(usize, usize)>>,
    /// Generators whose support does not have exactly two variables.
    pub wrong_support: Vec<usize>,
}

pub fn theorem_hypothesis(m: &MonomialIdealPresentation) -> MonomialHypothesis {
    let holders: Vec<Vec<usize>> =
        (0..m.variable_count).map(|l| (0..m.len()).filter(|&i| m.generators[i][l] > 0).collect()).collect();
    let wrong_support: Vec<usize> = (0..m.len()).filter(|&i| m.support(i).len() != 2).collect();
    let witnesses: Vec<Option<(usize, usize)>> = (0..m.len())
        .map(|i| {
            m.support(i).into_iter().find_map(|l| match *holders[l].as_slice() {
                [a, b] if a == i => Some((l, b)),
                [a, b] if b == i => Some((l, a)),
                _ => None,
            })
        })
        .collect();
    let holds = wrong_support.is_empty() && witnesses.iter().all(Option::is_some);
    MonomialHypothesis { holds, witnesses, wrong_support }
}
