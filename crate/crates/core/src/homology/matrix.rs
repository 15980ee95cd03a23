use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::eliminate::Row;

/// Sparse integer matrix stored by columns; no explicit zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, BigInt)>>,
}

impl SparseIntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseIntMatrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    /// Builds from `(row, col, value)` triplets; repeated positions are summed
    /// and zero results dropped.
    pub fn from_triplets<I>(rows: usize, cols: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, BigInt)>,
    {
        let mut acc: Vec<BTreeMap<usize, BigInt>> = vec![BTreeMap::new(); cols];
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "entry ({r}, {c}) outside {rows}x{cols}");
            *acc[c].entry(r).or_insert_with(BigInt::zero) += v;
        }
        let columns = acc.into_iter().map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect()).collect();
        SparseIntMatrix { rows, cols, columns }
    }

    pub fn from_dense(data: &[Vec<i64>]) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        let entries = data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &v)| (r, c, BigInt::from(v))));
        SparseIntMatrix::from_triplets(rows, cols, entries)
    }

    pub(crate) fn from_small_columns(rows: usize, columns: Vec<Vec<(usize, i64)>>) -> Self {
        let cols = columns.len();
        let columns = columns.into_iter().map(|c| c.into_iter().map(|(r, v)| (r, BigInt::from(v))).collect()).collect();
        SparseIntMatrix { rows, cols, columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn get(&self, row: usize, col: usize) -> BigInt {
        self.columns[col]
            .binary_search_by_key(&row, |e| e.0)
            .map(|i| self.columns[col][i].1.clone())
            .unwrap_or_else(|_| BigInt::zero())
    }

    /// Entries as `(row, col, value)`, column-major.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> + '_ {
        self.columns.iter().enumerate().flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (r, c, v) in self.triplets() {
            out[r][c] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// `self · rhs`.
    pub fn mul(&self, rhs: &SparseIntMatrix) -> SparseIntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut entries = Vec::new();
        for (c, col) in rhs.columns.iter().enumerate() {
            let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (k, b) in col {
                for (r, a) in &self.columns[*k] {
                    *acc.entry(*r).or_insert_with(BigInt::zero) += a * b;
                }
            }
            entries.extend(acc.into_iter().map(|(r, v)| (r, c, v)));
        }
        SparseIntMatrix::from_triplets(self.rows, rhs.cols, entries)
    }

    /// Columns as elimination rows with machine integers, if every entry fits.
    pub(crate) fn columns_as_small_rows(&self) -> Option<Vec<Row<i64>>> {
        self.columns
            .iter()
            .map(|col| col.iter().map(|(r, v)| v.to_i64().map(|x| (*r as u32, x))).collect::<Option<Row<i64>>>())
            .collect()
    }

    pub(crate) fn columns_as_big_rows(&self) -> Vec<Row<BigInt>> {
        self.columns.iter().map(|col| col.iter().map(|(r, v)| (*r as u32, v.clone())).collect()).collect()
    }
}
