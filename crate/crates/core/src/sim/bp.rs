use crate::error::{Error, Result};
use crate::sparse::SparseBinaryMatrix;

/// Magnitude limit applied to every LLR and message.
pub const LLR_CLAMP: f64 = 30.0;

fn clamp(x: f64) -> f64 {
    x.clamp(-LLR_CLAMP, LLR_CLAMP)
}

/// Hard decisions and decoder status for one frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeOutput {
    pub bits: Vec<u8>,
    pub iterations: usize,
    pub syndrome_ok: bool,
}

/// Sum-product decoder with a flooding schedule.
///
/// The Tanner graph is flattened once; [`Self::decode`] only allocates the
/// per-frame message buffers, so one decoder can be shared across threads.
#[derive(Debug, Clone)]
pub struct FloodingDecoder {
    n_vars: usize,
    // edges are numbered check by check
    check_ptr: Vec<usize>,
    edge_var: Vec<usize>,
    var_ptr: Vec<usize>,
    var_edges: Vec<usize>,
}

impl FloodingDecoder {
    pub fn new(h: &SparseBinaryMatrix) -> Self {
        let mut check_ptr = Vec::with_capacity(h.n_rows() + 1);
        let mut edge_var = Vec::with_capacity(h.n_ones());
        let mut per_var = vec![Vec::new(); h.n_cols()];
        check_ptr.push(0);
        for row in h.rows() {
            for &v in row {
                per_var[v].push(edge_var.len());
                edge_var.push(v);
            }
            check_ptr.push(edge_var.len());
        }
        let mut var_ptr = Vec::with_capacity(h.n_cols() + 1);
        let mut var_edges = Vec::with_capacity(edge_var.len());
        var_ptr.push(0);
        for edges in per_var {
            var_edges.extend(edges);
            var_ptr.push(var_edges.len());
        }
        Self {
            n_vars: h.n_cols(),
            check_ptr,
            edge_var,
            var_ptr,
            var_edges,
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    fn n_checks(&self) -> usize {
        self.check_ptr.len() - 1
    }

    fn syndrome_ok(&self, bits: &[u8]) -> bool {
        (0..self.n_checks()).all(|c| {
            self.edge_var[self.check_ptr[c]..self.check_ptr[c + 1]]
                .iter()
                .fold(0u8, |acc, &v| acc ^ bits[v])
                == 0
        })
    }

    /// Runs at least one iteration and stops as soon as the hard decision
    /// satisfies every check, or after `max_iter` iterations.
    pub fn decode(&self, llr: &[f64], max_iter: usize) -> Result<DecodeOutput> {
        if llr.len() != self.n_vars {
            return Err(Error::invalid(format!(
                "{} LLRs for {} variable nodes",
                llr.len(),
                self.n_vars
            )));
        }
        if max_iter == 0 {
            return Err(Error::invalid("max_iter must be at least 1"));
        }
        let channel: Vec<f64> = llr.iter().map(|&l| clamp(l)).collect();
        let n_edges = self.edge_var.len();
        let mut v2c: Vec<f64> = self.edge_var.iter().map(|&v| channel[v]).collect();
        let mut c2v = vec![0.0; n_edges];
        let mut tanh_half = vec![0.0; n_edges];
        let mut bits = vec![0u8; self.n_vars];

        for iteration in 1..=max_iter {
            for c in 0..self.n_checks() {
                let (lo, hi) = (self.check_ptr[c], self.check_ptr[c + 1]);
                for e in lo..hi {
                    tanh_half[e] = (0.5 * v2c[e]).tanh();
                }
                // leave-one-out products: forward pass stores prefixes in c2v
                let mut prefix = 1.0;
                for e in lo..hi {
                    c2v[e] = prefix;
                    prefix *= tanh_half[e];
                }
                let mut suffix = 1.0;
                for e in (lo..hi).rev() {
                    let product = c2v[e] * suffix;
                    c2v[e] = clamp(2.0 * product.atanh());
                    suffix *= tanh_half[e];
                }
            }

            for v in 0..self.n_vars {
                let edges = &self.var_edges[self.var_ptr[v]..self.var_ptr[v + 1]];
                let total = channel[v] + edges.iter().map(|&e| c2v[e]).sum::<f64>();
                bits[v] = u8::from(total < 0.0);
                for &e in edges {
                    v2c[e] = clamp(total - c2v[e]);
                }
            }

            if self.syndrome_ok(&bits) {
                return Ok(DecodeOutput {
                    bits,
                    iterations: iteration,
                    syndrome_ok: true,
                });
            }
        }
        Ok(DecodeOutput {
            bits,
            iterations: max_iter,
            syndrome_ok: false,
        })
    }
}
