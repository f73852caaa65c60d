//! Spatially coupled parity-check matrices built from an exponent matrix `E`
//! and an index set `I ⊇ SOE(E)`.
//!
//! The all-ones `p × q` base matrix is split into the incidence matrices
//! `M_{i_0}, …, M_{i_w}` of `E`, one per element of `I`. Component `M_{i_k}`
//! sits `k` block rows below the diagonal of the coupled matrix, so the
//! block-row offset of an entry is the *position* of its value in sorted `I`,
//! not the value itself. For an interval `I` the two coincide up to a shift.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::exponent::{ExponentMatrix, Soe};
use crate::sparse::SparseBinaryMatrix;

/// Sorted set of distinct non-negative indices `i_0 < i_1 < … < i_w`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexSet(Vec<u32>);

impl IndexSet {
    /// Sorts `indices`; fails on duplicates or an empty set.
    pub fn new(mut indices: Vec<u32>) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::invalid("index set must not be empty"));
        }
        indices.sort_unstable();
        if let Some(w) = indices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("index {} appears twice", w[0])));
        }
        Ok(Self(indices))
    }

    /// The interval `[lo, hi]`.
    pub fn interval(lo: u32, hi: u32) -> Result<Self> {
        if lo > hi {
            return Err(Error::invalid(format!("empty interval [{lo}, {hi}]")));
        }
        Ok(Self((lo..=hi).collect()))
    }

    /// The least interval containing every element of `soe`.
    pub fn covering(soe: &Soe) -> Result<Self> {
        match (soe.min(), soe.max()) {
            (Some(lo), Some(hi)) => Self::interval(lo, hi),
            _ => Err(Error::invalid("empty set of elements")),
        }
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    /// Coupling width, `|I| - 1`.
    pub fn w(&self) -> usize {
        self.0.len() - 1
    }

    /// Position of `value` in the sorted set.
    pub fn position(&self, value: u32) -> Option<usize> {
        self.0.binary_search(&value).ok()
    }

    pub fn is_interval(&self) -> bool {
        self.0.windows(2).all(|w| w[1] == w[0] + 1)
    }

    /// First element of `soe` that is missing from the set.
    fn missing_from(&self, soe: &Soe) -> Option<u32> {
        soe.as_slice()
            .iter()
            .copied()
            .find(|&v| self.position(v).is_none())
    }
}

/// A coupled code: exponent matrix, index set and the ordered components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoupledCode {
    exponents: ExponentMatrix,
    index_set: IndexSet,
    // entry (i, j) -> position of e_{i,j} in the index set
    positions: ExponentMatrix,
    components: Vec<SparseBinaryMatrix>,
}

impl CoupledCode {
    pub fn new(exponents: ExponentMatrix, index_set: IndexSet) -> Result<Self> {
        if let Some(v) = index_set.missing_from(&exponents.soe()) {
            return Err(Error::invalid(format!(
                "element {v} of the exponent matrix is not in the index set"
            )));
        }
        let positions = positional_matrix(&exponents, &index_set);
        let components = index_set
            .indices()
            .iter()
            .map(|&i| exponents.incidence_matrix(i))
            .collect();
        Ok(Self {
            exponents,
            index_set,
            positions,
            components,
        })
    }

    pub fn exponents(&self) -> &ExponentMatrix {
        &self.exponents
    }

    pub fn index_set(&self) -> &IndexSet {
        &self.index_set
    }

    /// `M_{i_0}, …, M_{i_w}` in index order.
    pub fn components(&self) -> &[SparseBinaryMatrix] {
        &self.components
    }

    /// `E` with every entry replaced by its position in the index set.
    pub fn positional_exponents(&self) -> &ExponentMatrix {
        &self.positions
    }

    pub fn p(&self) -> usize {
        self.exponents.p()
    }

    pub fn q(&self) -> usize {
        self.exponents.q()
    }

    pub fn w(&self) -> usize {
        self.index_set.w()
    }

    /// The `(L+w)p × Lq` terminated parity-check matrix: block `(r, c)` is
    /// `components[r - c]` when `0 <= r - c <= w` and zero otherwise.
    pub fn terminated_pcm(&self, l: usize) -> Result<SparseBinaryMatrix> {
        if l == 0 {
            return Err(Error::invalid("coupling length must be at least 1"));
        }
        let (p, q, w) = (self.p(), self.q(), self.w());
        let mut rows = vec![Vec::new(); (l + w) * p];
        for c in 0..l {
            for i in 0..p {
                for j in 0..q {
                    let r = c + self.positions.get(i, j) as usize;
                    rows[r * p + i].push(c * q + j);
                }
            }
        }
        // columns were pushed in increasing order per row
        Ok(SparseBinaryMatrix::from_sorted_rows(l * q, rows))
    }

    /// The `(w+1)p × (w+1)q` representative block matrix: block `(r, c)` is
    /// `M_{i_{w-(c-r)}}` for `c >= r` and zero below the block diagonal.
    pub fn representative_block(&self) -> SparseBinaryMatrix {
        let (p, q, w) = (self.p(), self.q(), self.w());
        let mut rows = vec![Vec::new(); (w + 1) * p];
        for r in 0..=w {
            for i in 0..p {
                let row = &mut rows[r * p + i];
                for j in 0..q {
                    let c = r + w - self.positions.get(i, j) as usize;
                    if c <= w {
                        row.push(c * q + j);
                    }
                }
                row.sort_unstable();
            }
        }
        SparseBinaryMatrix::from_sorted_rows((w + 1) * q, rows)
    }

    /// Pattern verdict on the infinite coupled matrix; see
    /// [`h_is_four_cycle_free`].
    pub fn is_four_cycle_free(&self) -> bool {
        positional_verdict(&self.positions)
    }
}

fn positional_matrix(e: &ExponentMatrix, index_set: &IndexSet) -> ExponentMatrix {
    e.map(|v| {
        index_set
            .position(v)
            .expect("index set covers the exponent matrix") as u32
    })
}

/// The `(w+1) × (w+1)` index matrix of the representative block: entry
/// `(r, c)` is `i_{w-(c-r)}` for `c >= r` and `-1` below the diagonal.
pub fn rep_index_matrix(index_set: &IndexSet) -> Vec<Vec<i64>> {
    let idx = index_set.indices();
    let w = index_set.w();
    (0..=w)
        .map(|r| {
            (0..=w)
                .map(|c| {
                    if c >= r {
                        i64::from(idx[w - (c - r)])
                    } else {
                        -1
                    }
                })
                .collect()
        })
        .collect()
}

/// Decides whether the infinite coupled matrix `H(E)` built on `index_set`
/// is free of 4-cycles.
///
/// `E` is rejected when, in any row/column orientation, it contains a 2×2
/// submatrix of the form `[[a, a], [b, b]]` or `[[a, b], [a, b]]` (a 4-cycle
/// inside one component or between two side-by-side components), or a
/// submatrix `[[i_j, i_k], [i_{j+h}, i_{k+h}]]` with `j > k`, `h >= 1`, which
/// is a 2×2 submatrix of the upper-right triangle of [`rep_index_matrix`].
/// For an interval `I` this coincides with [`ExponentMatrix::is_four_cycle_free`].
pub fn h_is_four_cycle_free(e: &ExponentMatrix, index_set: &IndexSet) -> Result<bool> {
    if let Some(v) = index_set.missing_from(&e.soe()) {
        return Err(Error::invalid(format!(
            "element {v} of the exponent matrix is not in the index set"
        )));
    }
    Ok(positional_verdict(&positional_matrix(e, index_set)))
}

fn positional_verdict(pos: &ExponentMatrix) -> bool {
    let (p, q) = (pos.p(), pos.q());
    for i1 in 0..p {
        for i2 in (0..p).filter(|&i| i != i1) {
            for j1 in 0..q {
                for j2 in (0..q).filter(|&j| j != j1) {
                    let (tl, tr) = (pos.get(i1, j1), pos.get(i1, j2));
                    let (bl, br) = (pos.get(i2, j1), pos.get(i2, j2));
                    // [[a, a], [b, b]] and its transpose, incl. the constant block
                    if (tl == tr && bl == br) || (tl == bl && tr == br) {
                        return false;
                    }
                    // [[i_j, i_k], [i_{j+h}, i_{k+h}]], j > k, h >= 1
                    if tl > tr && bl > tl && bl - tl == br.wrapping_sub(tr) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Design rate `1 - (L+w)p / (Lq)` of the terminated code, exactly.
pub fn design_rate(p: usize, q: usize, l: usize, w: usize) -> Result<Ratio<i64>> {
    if l == 0 || p == 0 || p >= q {
        return Err(Error::invalid(format!(
            "need L >= 1 and 1 <= p < q, got L = {l}, p = {p}, q = {q}"
        )));
    }
    Ok(Ratio::from_integer(1) - Ratio::new(((l + w) * p) as i64, (l * q) as i64))
}

/// Rate in the limit `L → ∞`, `1 - p/q`.
pub fn asymptotic_rate(p: usize, q: usize) -> Result<Ratio<i64>> {
    if p == 0 || p >= q {
        return Err(Error::invalid(format!("need 1 <= p < q, got p = {p}, q = {q}")));
    }
    Ok(Ratio::from_integer(1) - Ratio::new(p as i64, q as i64))
}

/// Decimal rendering with 6 fractional digits, ties rounded to even.
pub fn format_rate(rate: Ratio<i64>) -> String {
    let scaled = rate * Ratio::from_integer(1_000_000);
    let floor = scaled.floor();
    let frac = scaled - floor;
    let half = Ratio::new(1, 2);
    let mut units = floor.to_integer();
    if frac > half || (frac == half && units % 2 != 0) {
        units += 1;
    }
    let sign = if units < 0 { "-" } else { "" };
    let units = units.unsigned_abs();
    format!("{sign}{}.{:06}", units / 1_000_000, units % 1_000_000)
}

/// Constraint length `p (w + 1)`.
pub fn constraint_length(p: usize, w: usize) -> usize {
    p * (w + 1)
}
