//! Square matrices indexed by a fixed list of partitions.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::laurent::LaurentPoly;
use crate::partition::Partition;

/// A square matrix whose rows and columns are both indexed by `labels`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMatrix<T> {
    pub labels: Vec<Partition>,
    pub entries: Vec<Vec<T>>,
}

impl<T: Clone> TransitionMatrix<T> {
    pub fn from_fn(labels: Vec<Partition>, mut f: impl FnMut(&Partition, &Partition) -> T) -> Self {
        let entries = labels.iter().map(|r| labels.iter().map(|c| f(r, c)).collect()).collect();
        TransitionMatrix { labels, entries }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, label: &Partition) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn get(&self, row: &Partition, col: &Partition) -> Option<&T> {
        Some(&self.entries[self.index_of(row)?][self.index_of(col)?])
    }

    pub fn row(&self, label: &Partition) -> Option<&[T]> {
        Some(&self.entries[self.index_of(label)?])
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> TransitionMatrix<U> {
        TransitionMatrix {
            labels: self.labels.clone(),
            entries: self.entries.iter().map(|r| r.iter().map(&f).collect()).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim();
        TransitionMatrix {
            labels: self.labels.clone(),
            entries: (0..n).map(|i| (0..n).map(|j| self.entries[j][i].clone()).collect()).collect(),
        }
    }

    /// Restriction to a subset of labels, in the given order.
    pub fn submatrix(&self, labels: &[Partition]) -> Option<Self> {
        let idx: Vec<usize> = labels.iter().map(|l| self.index_of(l)).collect::<Option<_>>()?;
        Some(TransitionMatrix {
            labels: labels.to_vec(),
            entries: idx.iter().map(|&i| idx.iter().map(|&j| self.entries[i][j].clone()).collect()).collect(),
        })
    }

    /// Reorders rows and columns to follow `labels`, which must be a permutation of the current labels.
    pub fn reorder(&self, labels: &[Partition]) -> Option<Self> {
        if labels.len() != self.dim() {
            return None;
        }
        self.submatrix(labels)
    }
}

impl TransitionMatrix<BigInt> {
    pub fn identity(labels: Vec<Partition>) -> Self {
        Self::from_fn(labels, |a, b| BigInt::from((a == b) as i32))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.dim();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|t| &self.entries[i][t] * &rhs.entries[t][j]).sum()).collect())
            .collect();
        TransitionMatrix { labels: self.labels.clone(), entries }
    }

    /// Entries as `i64`, failing on overflow.
    pub fn to_i64(&self) -> Option<Vec<Vec<i64>>> {
        self.entries.iter().map(|r| r.iter().map(|x| i64::try_from(x).ok()).collect()).collect()
    }
}

impl TransitionMatrix<LaurentPoly> {
    pub fn eval_one(&self) -> TransitionMatrix<BigInt> {
        self.map(LaurentPoly::eval_one)
    }

    pub fn bar(&self) -> Self {
        self.map(LaurentPoly::bar)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.dim();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = LaurentPoly::zero();
                        for t in 0..n {
                            if !self.entries[i][t].is_zero() && !rhs.entries[t][j].is_zero() {
                                acc += &(&self.entries[i][t] * &rhs.entries[t][j]);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        TransitionMatrix { labels: self.labels.clone(), entries }
    }

    pub fn is_identity(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, r)| r.iter().enumerate().all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() }))
    }
}

/// Position lookup for a list of labels.
pub(crate) fn positions(labels: &[Partition]) -> HashMap<Partition, usize> {
    labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect()
}
