//! Exponent matrices: `p × q` grids of non-negative integers whose values
//! select component matrices (via incidence matrices) or circulant shifts.

use std::fmt;

use crate::error::{Error, Result};
use crate::sequence::GoodSequence;
use crate::sparse::SparseBinaryMatrix;

/// A `p × q` matrix of non-negative integers, stored row-major.
///
/// Accessors are 0-based: `get(0, 0)` is the top-left entry `e_{1,1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentMatrix {
    p: usize,
    q: usize,
    entries: Vec<u32>,
}

/// Set of elements: the sorted distinct values of an exponent matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Soe(Vec<u32>);

impl Soe {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn contains(&self, value: u32) -> bool {
        self.0.binary_search(&value).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<u32> {
        self.0.last().copied()
    }
}

impl ExponentMatrix {
    pub fn new<R: AsRef<[u32]>>(rows: &[R]) -> Result<Self> {
        let p = rows.len();
        let q = rows.first().map_or(0, |r| r.as_ref().len());
        if p == 0 || q == 0 {
            return Err(Error::invalid("exponent matrix must be at least 1 x 1"));
        }
        let mut entries = Vec::with_capacity(p * q);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != q {
                return Err(Error::invalid(format!(
                    "row {i} has {} entries, expected {q}",
                    row.len()
                )));
            }
            entries.extend_from_slice(row);
        }
        Ok(Self { p, q, entries })
    }

    pub fn from_fn(p: usize, q: usize, mut f: impl FnMut(usize, usize) -> u32) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::invalid("exponent matrix must be at least 1 x 1"));
        }
        let entries = (0..p)
            .flat_map(|i| (0..q).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        Ok(Self { p, q, entries })
    }

    /// Places `values` on the diagonals: `e_{i,j} = a_{j-i+p}` (1-based).
    ///
    /// The sequence does not have to be good; use [`Self::from_sequence`] for
    /// the validated path.
    pub fn from_diagonals(values: &[u32], p: usize, q: usize) -> Result<Self> {
        if p == 0 || q == 0 || values.len() != p + q - 1 {
            return Err(Error::invalid(format!(
                "a {p} x {q} diagonal matrix needs {} values, got {}",
                (p + q).saturating_sub(1),
                values.len()
            )));
        }
        // 0-based: a_{j-i+p} with 1-based (i, j) is values[j - i + p - 1]
        Self::from_fn(p, q, |i, j| values[j + p - 1 - i])
    }

    /// The matrix of a good sequence. It is 4-cycle free by construction.
    pub fn from_sequence(seq: &GoodSequence) -> Self {
        Self::from_diagonals(seq.values(), seq.p(), seq.q())
            .expect("a good sequence always has length p + q - 1")
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.q + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.q..(i + 1) * self.q]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.entries.chunks(self.q)
    }

    pub fn max_entry(&self) -> u32 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    /// Applies `f` to every entry.
    pub fn map(&self, f: impl Fn(u32) -> u32) -> Self {
        Self {
            p: self.p,
            q: self.q,
            entries: self.entries.iter().map(|&e| f(e)).collect(),
        }
    }

    /// Every 2×2 submatrix `(i1, i2) × (j1, j2)` with `i1 < i2`, `j1 < j2`,
    /// given as `[[top-left, top-right], [bottom-left, bottom-right]]`.
    pub fn submatrices_2x2(&self) -> impl Iterator<Item = [[u32; 2]; 2]> + '_ {
        let (p, q) = (self.p, self.q);
        (0..p).flat_map(move |i1| {
            ((i1 + 1)..p).flat_map(move |i2| {
                (0..q).flat_map(move |j1| {
                    ((j1 + 1)..q).map(move |j2| {
                        [
                            [self.get(i1, j1), self.get(i1, j2)],
                            [self.get(i2, j1), self.get(i2, j2)],
                        ]
                    })
                })
            })
        })
    }

    /// True when no 2×2 submatrix has equal diagonal sums,
    /// `e_{i1,j1} + e_{i2,j2} = e_{i1,j2} + e_{i2,j1}`.
    pub fn is_four_cycle_free(&self) -> bool {
        self.submatrices_2x2().all(|[[a, b], [c, d]]| {
            u64::from(a) + u64::from(d) != u64::from(b) + u64::from(c)
        })
    }

    pub fn soe(&self) -> Soe {
        let mut values = self.entries.clone();
        values.sort_unstable();
        values.dedup();
        Soe(values)
    }

    /// Binary `p × q` indicator of the positions equal to `e`; the zero
    /// matrix when `e` does not occur.
    pub fn incidence_matrix(&self, e: u32) -> SparseBinaryMatrix {
        let rows = self
            .rows()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(_, &v)| v == e)
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        SparseBinaryMatrix::from_sorted_rows(self.q, rows)
    }

    /// Whitespace-separated text, one row per line.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Parses the text format written by [`Self::to_text`]. Blank lines are
    /// ignored; rows must all have the same number of entries.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for (n, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<u32>().map_err(|_| {
                        Error::parse(n + 1, format!("'{tok}' is not a non-negative integer"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return Err(Error::parse(
                        n + 1,
                        format!("expected {} entries, found {}", first.len(), row.len()),
                    ));
                }
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::parse(1, "empty matrix"));
        }
        Self::new(&rows)
    }
}

impl fmt::Display for ExponentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime strictly greater than `q`.
pub fn prime_after(q: u64) -> u64 {
    (q + 1..).find(|&n| is_prime(n)).expect("primes are unbounded")
}

/// The baseline exponent matrix `e_{i,j} = (i-1)(j-1) mod n` (1-based) with
/// `n` the smallest prime above `q`.
pub fn karimi_matrix(p: usize, q: usize) -> Result<ExponentMatrix> {
    if p == 0 || p >= q {
        return Err(Error::invalid(format!("need 1 <= p < q, got p = {p}, q = {q}")));
    }
    let n = prime_after(q as u64);
    ExponentMatrix::from_fn(p, q, |i, j| ((i as u64 * j as u64) % n) as u32)
}
