use crate::error::{Error, Result};
use crate::sparse::SparseBinaryMatrix;

use super::bp::{FloodingDecoder, LLR_CLAMP};

/// Block structure of a (possibly lifted) terminated coupled matrix with
/// `(L + w)` block rows of `rows_per_block` checks and `L` block columns of
/// `cols_per_block` variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockLayout {
    pub rows_per_block: usize,
    pub cols_per_block: usize,
    pub l: usize,
    pub w: usize,
}

impl BlockLayout {
    /// Layout of `H^(L)` lifted by `m` from a `p × q` exponent matrix.
    pub fn new(p: usize, q: usize, m: usize, l: usize, w: usize) -> Self {
        Self {
            rows_per_block: p * m,
            cols_per_block: q * m,
            l,
            w,
        }
    }

    /// Derives the block sizes from the matrix dimensions.
    pub fn infer(h: &SparseBinaryMatrix, l: usize, w: usize) -> Result<Self> {
        if l == 0 || !h.n_cols().is_multiple_of(l) || !h.n_rows().is_multiple_of(l + w) {
            return Err(Error::invalid(format!(
                "a {} x {} matrix has no block layout with L = {l}, w = {w}",
                h.n_rows(),
                h.n_cols()
            )));
        }
        Ok(Self {
            rows_per_block: h.n_rows() / (l + w),
            cols_per_block: h.n_cols() / l,
            l,
            w,
        })
    }

    fn check(&self, h: &SparseBinaryMatrix) -> Result<()> {
        if self.l == 0
            || h.n_rows() != (self.l + self.w) * self.rows_per_block
            || h.n_cols() != self.l * self.cols_per_block
        {
            return Err(Error::invalid(format!(
                "{self:?} does not match a {} x {} matrix",
                h.n_rows(),
                h.n_cols()
            )));
        }
        Ok(())
    }
}

/// Decoded bits plus the iteration count of every window position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowOutput {
    pub bits: Vec<u8>,
    pub window_iterations: Vec<usize>,
}

#[derive(Debug, Clone)]
struct Window {
    // first variable of the window (start of the committed prefix)
    col_start: usize,
    // first variable that is still being decoded
    free_start: usize,
    // variables committed after this window: free_start..commit_end
    commit_end: usize,
    decoder: FloodingDecoder,
}

/// Sliding-window decoder over `W` block columns.
///
/// At position `t` the window holds block columns `t .. t+W` and the check
/// block rows whose columns lie in `t-w .. t+W`; block columns before `t`
/// are already committed and enter as saturated LLRs. After flooding BP the
/// oldest block column is committed and the window slides by one. The last
/// window (reaching block column `L-1`) commits everything it holds, so
/// `W = L` is plain flooding on the full matrix.
#[derive(Debug, Clone)]
pub struct SlidingWindowDecoder {
    n_vars: usize,
    windows: Vec<Window>,
}

impl SlidingWindowDecoder {
    pub fn new(h: &SparseBinaryMatrix, layout: BlockLayout, window: usize) -> Result<Self> {
        layout.check(h)?;
        let BlockLayout {
            rows_per_block,
            cols_per_block,
            l,
            w,
        } = layout;
        if window < w + 1 {
            return Err(Error::invalid(format!(
                "window {window} is shorter than the constraint span w + 1 = {}",
                w + 1
            )));
        }
        if window > l {
            return Err(Error::invalid(format!(
                "window {window} exceeds the coupling length {l}"
            )));
        }
        let windows = (0..=l - window)
            .map(|t| {
                let last_col = (t + window).min(l) - 1;
                let last_row = if last_col == l - 1 { l + w - 1 } else { last_col };
                let first_col = t.saturating_sub(w);
                let sub = h.submatrix(
                    t * rows_per_block..(last_row + 1) * rows_per_block,
                    first_col * cols_per_block..(last_col + 1) * cols_per_block,
                );
                let commit_end = if last_col == l - 1 { l } else { t + 1 };
                Window {
                    col_start: first_col * cols_per_block,
                    free_start: t * cols_per_block,
                    commit_end: commit_end * cols_per_block,
                    decoder: FloodingDecoder::new(&sub),
                }
            })
            .collect();
        Ok(Self {
            n_vars: h.n_cols(),
            windows,
        })
    }

    pub fn n_windows(&self) -> usize {
        self.windows.len()
    }

    pub fn decode(&self, llr: &[f64], max_iter: usize) -> Result<WindowOutput> {
        if llr.len() != self.n_vars {
            return Err(Error::invalid(format!(
                "{} LLRs for {} variable nodes",
                llr.len(),
                self.n_vars
            )));
        }
        let mut bits = vec![0u8; self.n_vars];
        let mut window_iterations = Vec::with_capacity(self.windows.len());
        let mut local = Vec::new();
        for win in &self.windows {
            let width = win.decoder.n_vars();
            local.clear();
            local.extend(bits[win.col_start..win.free_start].iter().map(|&b| {
                if b == 0 {
                    LLR_CLAMP
                } else {
                    -LLR_CLAMP
                }
            }));
            local.extend_from_slice(&llr[win.free_start..win.col_start + width]);
            let out = win.decoder.decode(&local, max_iter)?;
            let offset = win.free_start - win.col_start;
            let count = win.commit_end - win.free_start;
            bits[win.free_start..win.commit_end]
                .copy_from_slice(&out.bits[offset..offset + count]);
            window_iterations.push(out.iterations);
        }
        Ok(WindowOutput {
            bits,
            window_iterations,
        })
    }
}

/// One-shot sliding-window decode; see [`SlidingWindowDecoder`].
pub fn sliding_window_decode(
    h: &SparseBinaryMatrix,
    layout: BlockLayout,
    window: usize,
    llr: &[f64],
    max_iter: usize,
) -> Result<WindowOutput> {
    SlidingWindowDecoder::new(h, layout, window)?.decode(llr, max_iter)
}
