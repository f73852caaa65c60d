//! Sparse binary matrices over GF(2).

use std::ops::Range;

use crate::error::{Error, Result};

/// A binary matrix stored as the positions of its ones.
///
/// Both the row lists and the column lists are kept sorted, so check-node and
/// variable-node neighbourhoods are available without a transpose.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparseBinaryMatrix {
    n_rows: usize,
    n_cols: usize,
    rows: Vec<Vec<usize>>,
    cols: Vec<Vec<usize>>,
}

impl SparseBinaryMatrix {
    /// The all-zero `n_rows × n_cols` matrix.
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        Self {
            n_rows,
            n_cols,
            rows: vec![Vec::new(); n_rows],
            cols: vec![Vec::new(); n_cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(|i| vec![i]).collect();
        Self::from_sorted_rows(n, rows)
    }

    pub fn ones(n_rows: usize, n_cols: usize) -> Self {
        let rows = (0..n_rows).map(|_| (0..n_cols).collect()).collect();
        Self::from_sorted_rows(n_cols, rows)
    }

    /// Builds a matrix from per-row column lists. Lists may be unsorted but
    /// must be in range and free of duplicates.
    pub fn from_rows(n_cols: usize, mut rows: Vec<Vec<usize>>) -> Result<Self> {
        for (r, row) in rows.iter_mut().enumerate() {
            row.sort_unstable();
            if let Some(&c) = row.last() {
                if c >= n_cols {
                    return Err(Error::invalid(format!(
                        "column {c} in row {r} is out of bounds for {n_cols} columns"
                    )));
                }
            }
            if row.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::invalid(format!("duplicate position in row {r}")));
            }
        }
        Ok(Self::from_sorted_rows(n_cols, rows))
    }

    /// Builds a matrix from an iterator of `(row, col)` positions.
    pub fn from_positions<I>(n_rows: usize, n_cols: usize, positions: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rows = vec![Vec::new(); n_rows];
        for (r, c) in positions {
            if r >= n_rows {
                return Err(Error::invalid(format!(
                    "row {r} is out of bounds for {n_rows} rows"
                )));
            }
            rows[r].push(c);
        }
        Self::from_rows(n_cols, rows)
    }

    /// Builds a matrix from a dense 0/1 grid. All rows must have equal length.
    pub fn from_dense<R: AsRef<[u8]>>(dense: &[R]) -> Result<Self> {
        let n_cols = dense.first().map_or(0, |r| r.as_ref().len());
        let mut rows = Vec::with_capacity(dense.len());
        for (r, row) in dense.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n_cols {
                return Err(Error::invalid(format!(
                    "row {r} has {} entries, expected {n_cols}",
                    row.len()
                )));
            }
            let mut ones = Vec::new();
            for (c, &v) in row.iter().enumerate() {
                match v {
                    0 => {}
                    1 => ones.push(c),
                    _ => return Err(Error::invalid(format!("entry ({r}, {c}) is not binary"))),
                }
            }
            rows.push(ones);
        }
        Ok(Self::from_sorted_rows(n_cols, rows))
    }

    // rows must already be sorted, deduplicated and in range
    pub(crate) fn from_sorted_rows(n_cols: usize, rows: Vec<Vec<usize>>) -> Self {
        let mut cols = vec![Vec::new(); n_cols];
        for (r, row) in rows.iter().enumerate() {
            for &c in row {
                cols[c].push(r);
            }
        }
        Self {
            n_rows: rows.len(),
            n_cols,
            rows,
            cols,
        }
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    /// Number of ones (Tanner graph edges).
    pub fn n_ones(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Sorted column indices of the ones in row `r`.
    pub fn row(&self, r: usize) -> &[usize] {
        &self.rows[r]
    }

    /// Sorted row indices of the ones in column `c`.
    pub fn col(&self, c: usize) -> &[usize] {
        &self.cols[c]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn cols(&self) -> &[Vec<usize>] {
        &self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].binary_search(&c).is_ok()
    }

    /// All one-positions in row-major order.
    pub fn positions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |&c| (r, c)))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        let mut dense = vec![vec![0u8; self.n_cols]; self.n_rows];
        for (r, c) in self.positions() {
            dense[r][c] = 1;
        }
        dense
    }

    /// `H · x` over GF(2). `bits` holds 0/1 values.
    pub fn syndrome(&self, bits: &[u8]) -> Result<Vec<u8>> {
        if bits.len() != self.n_cols {
            return Err(Error::invalid(format!(
                "vector of length {} does not match {} columns",
                bits.len(),
                self.n_cols
            )));
        }
        Ok(self
            .rows
            .iter()
            .map(|row| row.iter().fold(0u8, |acc, &c| acc ^ (bits[c] & 1)))
            .collect())
    }

    /// True when `bits` satisfies every parity check.
    pub fn is_codeword(&self, bits: &[u8]) -> Result<bool> {
        Ok(self.syndrome(bits)?.iter().all(|&s| s == 0))
    }

    /// The contiguous submatrix spanning `rows × cols`, re-indexed from zero.
    pub fn submatrix(&self, rows: Range<usize>, cols: Range<usize>) -> Self {
        assert!(rows.end <= self.n_rows && cols.end <= self.n_cols);
        let sub_rows = self.rows[rows]
            .iter()
            .map(|row| {
                row.iter()
                    .filter(|&&c| cols.contains(&c))
                    .map(|&c| c - cols.start)
                    .collect()
            })
            .collect();
        Self::from_sorted_rows(cols.len(), sub_rows)
    }

    /// Applies `row_perm` and `col_perm`: row `r` moves to `row_perm[r]` and
    /// column `c` to `col_perm[c]`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Result<Self> {
        if row_perm.len() != self.n_rows || col_perm.len() != self.n_cols {
            return Err(Error::invalid("permutation length mismatch"));
        }
        Self::from_positions(
            self.n_rows,
            self.n_cols,
            self.positions().map(|(r, c)| (row_perm[r], col_perm[c])),
        )
    }

    pub fn transpose(&self) -> Self {
        Self::from_sorted_rows(self.n_rows, self.cols.clone())
    }
}
