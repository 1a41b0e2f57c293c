use num_traits::Zero;

use super::ring::{Elem, RingSpec};
use super::sparse::SparseVec;
use crate::error::{Error, Result};

/// Exact sparse matrix stored by columns. Column `j` is the image of the
/// `j`-th domain basis vector, which is how every map in this crate is
/// assembled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    ring: RingSpec,
    rows: usize,
    cols: Vec<SparseVec>,
}

impl SparseMat {
    pub fn zero(ring: RingSpec, rows: usize, cols: usize) -> Self {
        Self {
            ring,
            rows,
            cols: vec![SparseVec::new(); cols],
        }
    }

    pub fn identity(ring: RingSpec, n: usize) -> Self {
        Self {
            ring,
            rows: n,
            cols: (0..n).map(|i| SparseVec::unit(i, &ring)).collect(),
        }
    }

    pub fn from_columns(ring: RingSpec, rows: usize, cols: Vec<SparseVec>) -> Self {
        debug_assert!(cols
            .iter()
            .all(|c| c.max_index().is_none_or(|m| m < rows)));
        Self { ring, rows, cols }
    }

    /// `(row, col, value)` triplets; repeated positions are summed.
    pub fn from_triplets(
        ring: RingSpec,
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Elem)>,
    ) -> Result<Self> {
        let mut raw: Vec<Vec<(usize, Elem)>> = vec![Vec::new(); cols];
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(Error::InvalidInput(format!(
                    "entry ({r}, {c}) outside a {rows}x{cols} matrix"
                )));
            }
            raw[c].push((r, ring.coerce(&v)?));
        }
        Ok(Self {
            ring,
            rows,
            cols: raw
                .into_iter()
                .map(|c| SparseVec::from_entries(&ring, c))
                .collect(),
        })
    }

    pub fn from_dense(ring: RingSpec, dense: &[Vec<i64>]) -> Self {
        let rows = dense.len();
        let ncols = dense.first().map_or(0, |r| r.len());
        let cols = (0..ncols)
            .map(|j| {
                SparseVec::from_entries(
                    &ring,
                    (0..rows).map(|i| (i, ring.from_i64(dense[i][j]))).collect(),
                )
            })
            .collect();
        Self { ring, rows, cols }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.cols[c].get(r)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.nnz()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Elem)> + '_ {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.entries().iter().map(move |(r, v)| (*r, c, v)))
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, x) in v.entries() {
            out = out.axpy(&self.ring, x, &self.cols[*j]);
        }
        out
    }

    /// `self * other`
    pub fn compose(&self, other: &SparseMat) -> Result<SparseMat> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring, other.ring));
        }
        if self.ncols() != other.nrows() {
            return Err(Error::InvalidInput(format!(
                "cannot compose {}x{} with {}x{}",
                self.nrows(),
                self.ncols(),
                other.nrows(),
                other.ncols()
            )));
        }
        Ok(SparseMat {
            ring: self.ring,
            rows: self.rows,
            cols: other.cols.iter().map(|c| self.mul_vec(c)).collect(),
        })
    }

    pub fn transpose(&self) -> SparseMat {
        let mut raw: Vec<Vec<(usize, Elem)>> = vec![Vec::new(); self.rows];
        for (r, c, v) in self.triplets() {
            raw[r].push((c, v.clone()));
        }
        SparseMat {
            ring: self.ring,
            rows: self.ncols(),
            cols: raw
                .into_iter()
                .map(|c| SparseVec::from_entries(&self.ring, c))
                .collect(),
        }
    }

    /// Selects columns by index.
    pub fn select_columns(&self, idx: &[usize]) -> SparseMat {
        SparseMat {
            ring: self.ring,
            rows: self.rows,
            cols: idx.iter().map(|&j| self.cols[j].clone()).collect(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Elem>> {
        let mut out = vec![vec![Elem::zero(); self.ncols()]; self.rows];
        for (r, c, v) in self.triplets() {
            out[r][c] = v.clone();
        }
        out
    }
}
