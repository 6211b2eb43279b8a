//! Dense exact integer matrices with labeled rows and columns.
//!
//! Arithmetic is checked: an `i64` overflow is reported as an error instead
//! of wrapping. Products and sums require matching labels, so a product like
//! `H · Hᵀ` only type-checks when the inner edge orders agree.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("label mismatch in {op}: {left:?} vs {right:?}")]
    LabelMismatch {
        op: &'static str,
        left: Vec<String>,
        right: Vec<String>,
    },
    #[error("expected {expected} entries, got {actual}")]
    Shape { expected: usize, actual: usize },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledMatrix {
    rows: Vec<String>,
    cols: Vec<String>,
    entries: Vec<i64>,
}

impl LabeledMatrix {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: Vec<String>, cols: Vec<String>, entries: Vec<i64>) -> Result<Self, MatrixError> {
        for labels in [&rows, &cols] {
            let mut seen = std::collections::HashSet::new();
            if let Some(dup) = labels.iter().find(|l| !seen.insert(l.as_str())) {
                return Err(MatrixError::DuplicateLabel(dup.clone()));
            }
        }
        let expected = rows.len() * cols.len();
        if entries.len() != expected {
            return Err(MatrixError::Shape {
                expected,
                actual: entries.len(),
            });
        }
        Ok(LabeledMatrix { rows, cols, entries })
    }

    /// Builds a matrix from nested rows; panics on ragged input.
    pub fn from_rows<S: AsRef<str>>(rows: &[S], cols: &[S], data: &[Vec<i64>]) -> Self {
        assert_eq!(rows.len(), data.len(), "one data row per row label");
        let entries: Vec<i64> = data
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols.len(), "ragged matrix row");
                r.iter().copied()
            })
            .collect();
        Self::new(to_owned(rows), to_owned(cols), entries).expect("distinct labels")
    }

    pub fn zeros(rows: Vec<String>, cols: Vec<String>) -> Self {
        let entries = vec![0; rows.len() * cols.len()];
        LabeledMatrix { rows, cols, entries }
    }

    pub fn identity(labels: Vec<String>) -> Self {
        Self::diagonal(labels.clone(), &vec![1; labels.len()])
    }

    pub fn diagonal(labels: Vec<String>, diag: &[i64]) -> Self {
        assert_eq!(labels.len(), diag.len());
        let mut m = Self::zeros(labels.clone(), labels);
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    pub fn row_labels(&self) -> &[String] {
        &self.rows
    }

    pub fn col_labels(&self) -> &[String] {
        &self.cols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.cols.len() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        let n = self.cols.len();
        self.entries[i * n + j] = value;
    }

    /// Looks up an entry by labels.
    pub fn at(&self, row: &str, col: &str) -> Option<i64> {
        let i = self.rows.iter().position(|r| r == row)?;
        let j = self.cols.iter().position(|c| c == col)?;
        Some(self.get(i, j))
    }

    pub fn row(&self, i: usize) -> &[i64] {
        let n = self.cols.len();
        &self.entries[i * n..(i + 1) * n]
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.nrows()).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> LabeledMatrix {
        let mut t = Self::zeros(self.cols.clone(), self.rows.clone());
        for i in 0..self.nrows() {
            for j in 0..self.ncols() {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && *self == self.transpose()
    }

    pub fn checked_mul(&self, rhs: &LabeledMatrix) -> Result<LabeledMatrix, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::LabelMismatch {
                op: "multiplication",
                left: self.cols.clone(),
                right: rhs.rows.clone(),
            });
        }
        let mut out = Self::zeros(self.rows.clone(), rhs.cols.clone());
        for i in 0..self.nrows() {
            for j in 0..rhs.ncols() {
                let mut acc: i64 = 0;
                for l in 0..self.ncols() {
                    let term = self
                        .get(i, l)
                        .checked_mul(rhs.get(l, j))
                        .ok_or(MatrixError::Overflow("multiplication"))?;
                    acc = acc
                        .checked_add(term)
                        .ok_or(MatrixError::Overflow("multiplication"))?;
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, rhs: &LabeledMatrix) -> Result<LabeledMatrix, MatrixError> {
        self.zip_with(rhs, "addition", i64::checked_add)
    }

    pub fn checked_sub(&self, rhs: &LabeledMatrix) -> Result<LabeledMatrix, MatrixError> {
        self.zip_with(rhs, "subtraction", i64::checked_sub)
    }

    pub fn checked_neg(&self) -> Result<LabeledMatrix, MatrixError> {
        self.checked_scale(-1)
    }

    pub fn checked_scale(&self, factor: i64) -> Result<LabeledMatrix, MatrixError> {
        let entries = self
            .entries
            .iter()
            .map(|x| x.checked_mul(factor).ok_or(MatrixError::Overflow("scaling")))
            .collect::<Result<_, _>>()?;
        Ok(LabeledMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries,
        })
    }

    /// `self^k` by repeated multiplication; `self^0` is the identity.
    pub fn checked_pow(&self, k: u32) -> Result<LabeledMatrix, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::LabelMismatch {
                op: "power",
                left: self.rows.clone(),
                right: self.cols.clone(),
            });
        }
        let mut acc = Self::identity(self.rows.clone());
        for _ in 0..k {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    fn zip_with(
        &self,
        rhs: &LabeledMatrix,
        op: &'static str,
        f: fn(i64, i64) -> Option<i64>,
    ) -> Result<LabeledMatrix, MatrixError> {
        if self.rows != rhs.rows {
            return Err(MatrixError::LabelMismatch {
                op,
                left: self.rows.clone(),
                right: rhs.rows.clone(),
            });
        }
        if self.cols != rhs.cols {
            return Err(MatrixError::LabelMismatch {
                op,
                left: self.cols.clone(),
                right: rhs.cols.clone(),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(&a, &b)| f(a, b).ok_or(MatrixError::Overflow(op)))
            .collect::<Result<_, _>>()?;
        Ok(LabeledMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries,
        })
    }

    /// First `(row, col, left, right)` where the two matrices differ, or a
    /// label mismatch reported with placeholder indices.
    pub fn first_difference(&self, other: &LabeledMatrix) -> Option<(String, String, i64, i64)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some(("<rows>".into(), "<cols>".into(), self.nrows() as i64, other.nrows() as i64));
        }
        (0..self.nrows())
            .flat_map(|i| (0..self.ncols()).map(move |j| (i, j)))
            .find(|&(i, j)| self.get(i, j) != other.get(i, j))
            .map(|(i, j)| (self.rows[i].clone(), self.cols[j].clone(), self.get(i, j), other.get(i, j)))
    }
}

fn to_owned<S: AsRef<str>>(xs: &[S]) -> Vec<String> {
    xs.iter().map(|s| s.as_ref().to_owned()).collect()
}

impl fmt::Display for LabeledMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .map(|x| x.to_string().len())
            .chain(self.cols.iter().map(String::len))
            .max()
            .unwrap_or(1);
        let label_width = self.rows.iter().map(String::len).max().unwrap_or(0);
        write!(f, "{:label_width$}", "")?;
        for c in &self.cols {
            write!(f, " {c:>width$}")?;
        }
        writeln!(f)?;
        for (i, r) in self.rows.iter().enumerate() {
            write!(f, "{r:label_width$}")?;
            for x in self.row(i) {
                write!(f, " {x:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
