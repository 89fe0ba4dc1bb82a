use std::fmt;

use dashu_int::IBig;

use crate::error::{Error, Result};
use crate::text::{content_lines, parse_count, parse_int};

/// Nonnegative integer matrix whose columns are the exponent vectors of the
/// generators of a toric ideal.
///
/// No column may be zero: this makes the grading positive, so every fiber is
/// finite and the only nonnegative kernel vector is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ToricMatrix {
    rows: usize,
    cols: usize,
    /// Row-major storage.
    entries: Vec<IBig>,
}

impl ToricMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<IBig>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::LengthMismatch { expected: rows * cols, found: entries.len() });
        }
        if let Some(pos) = entries.iter().position(|x| *x < IBig::ZERO) {
            return Err(Error::InvalidMatrix(format!(
                "negative entry at row {}, column {}",
                pos / cols + 1,
                pos % cols + 1
            )));
        }
        let matrix = ToricMatrix { rows, cols, entries };
        if let Some(c) = (0..cols).find(|&c| (0..rows).all(|r| matrix.get(r, c).is_zero())) {
            return Err(Error::InvalidMatrix(format!("column {} is zero", c + 1)));
        }
        Ok(matrix)
    }

    /// Builds a matrix from rows of small integers; `cols` is needed when `rows` is empty.
    pub fn from_rows<T: Copy + Into<IBig>>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::LengthMismatch { expected: cols, found: row.len() });
            }
            entries.extend(row.iter().map(|&x| x.into()));
        }
        Self::new(rows.len(), cols, entries)
    }

    pub fn from_columns(rows: usize, columns: &[Vec<IBig>]) -> Result<Self> {
        let cols = columns.len();
        let mut entries = vec![IBig::ZERO; rows * cols];
        for (c, column) in columns.iter().enumerate() {
            if column.len() != rows {
                return Err(Error::LengthMismatch { expected: rows, found: column.len() });
            }
            for (r, x) in column.iter().enumerate() {
                entries[r * cols + c] = x.clone();
            }
        }
        Self::new(rows, cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &IBig {
        &self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[IBig] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> Vec<IBig> {
        (0..self.rows).map(|r| self.get(r, col).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<IBig>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<IBig>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Submatrix on the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Result<Self> {
        let mut entries = Vec::with_capacity(self.rows * cols.len());
        for &c in cols {
            if c >= self.cols {
                return Err(Error::IndexOutOfRange { index: c, len: self.cols });
            }
        }
        for r in 0..self.rows {
            entries.extend(cols.iter().map(|&c| self.get(r, c).clone()));
        }
        Self::new(self.rows, cols.len(), entries)
    }

    /// Submatrix on the given rows and columns, in the given orders.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        for &r in rows {
            if r >= self.rows {
                return Err(Error::IndexOutOfRange { index: r, len: self.rows });
            }
        }
        for &c in cols {
            if c >= self.cols {
                return Err(Error::IndexOutOfRange { index: c, len: self.cols });
            }
        }
        let entries = rows.iter().flat_map(|&r| cols.iter().map(move |&c| self.get(r, c).clone())).collect();
        Self::new(rows.len(), cols.len(), entries)
    }

    /// The matrix-vector product `A·v`, i.e. the A-degree of `v`.
    pub fn apply(&self, v: &[IBig]) -> Result<Vec<IBig>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch { expected: self.cols, found: v.len() });
        }
        Ok(self.apply_unchecked(v))
    }

    pub(crate) fn apply_unchecked(&self, v: &[IBig]) -> Vec<IBig> {
        (0..self.rows)
            .map(|r| {
                let mut acc = IBig::ZERO;
                for (a, x) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn annihilates(&self, v: &[IBig]) -> Result<bool> {
        Ok(self.apply(v)?.iter().all(IBig::is_zero))
    }

    /// Stable 64-bit FNV-1a digest of the canonical text form.
    pub fn fingerprint(&self) -> String {
        let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
        for byte in self.to_text().bytes() {
            hash ^= u64::from(byte);
            hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
        }
        format!("{hash:016x}")
    }

    /// Parses the `matrix <n> <m>` text format.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (line_no, header) = lines.next().ok_or_else(|| Error::parse(1, "missing `matrix` header"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 3 || fields[0] != "matrix" {
            return Err(Error::parse(line_no, "expected `matrix <rows> <cols>`"));
        }
        let rows = parse_count(fields[1], line_no)?;
        let cols = parse_count(fields[2], line_no)?;
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            let (line_no, line) =
                lines.next().ok_or_else(|| Error::parse(line_no, format!("missing matrix row {}", r + 1)))?;
            let row: Vec<IBig> = line.split_whitespace().map(|s| parse_int(s, line_no)).collect::<Result<_>>()?;
            if row.len() != cols {
                return Err(Error::parse(line_no, format!("expected {cols} entries, found {}", row.len())));
            }
            entries.extend(row);
        }
        if let Some((line_no, _)) = lines.next() {
            return Err(Error::parse(line_no, "unexpected content after matrix rows"));
        }
        Self::new(rows, cols, entries).map_err(|e| Error::parse(line_no, e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("matrix {} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(IBig::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for ToricMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(IBig::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
