use std::fmt::Write;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::sparse::SparseBinaryMatrix;

use super::bp::FloodingDecoder;
use super::channel::awgn_llr;
use super::window::{BlockLayout, SlidingWindowDecoder};

pub const CSV_HEADER: &str = "ebn0_db,frames,bit_errors,frame_errors,ber,fer,avg_iterations";

// frames decoded concurrently before the stopping rule is re-evaluated
const BATCH: u64 = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecoderKind {
    Flooding,
    /// Window size in block columns.
    SlidingWindow { window: usize },
}

/// Parameters of a BER sweep.
#[derive(Debug, Clone)]
pub struct SimConfig {
    pub code: SparseBinaryMatrix,
    /// Required for sliding-window decoding.
    pub layout: Option<BlockLayout>,
    pub ebn0_grid: Vec<f64>,
    pub decoder: DecoderKind,
    pub max_iter: usize,
    pub seed: u64,
    pub max_frames: u64,
    /// Stop a point once this many bit errors are seen; 0 disables the rule.
    pub target_bit_errors: u64,
}

impl SimConfig {
    /// Flooding decoder with the usual 100-iteration cap.
    pub fn flooding(code: SparseBinaryMatrix, ebn0_grid: Vec<f64>, seed: u64) -> Self {
        Self {
            code,
            layout: None,
            ebn0_grid,
            decoder: DecoderKind::Flooding,
            max_iter: 100,
            seed,
            max_frames: 1,
            target_bit_errors: 0,
        }
    }

    /// Design rate `1 - rows / cols` used to scale the channel noise.
    pub fn rate(&self) -> Result<f64> {
        let rate = 1.0 - self.code.n_rows() as f64 / self.code.n_cols() as f64;
        if !(rate > 0.0 && rate < 1.0) {
            return Err(Error::invalid(format!(
                "design rate {rate} of a {} x {} matrix is not in (0, 1)",
                self.code.n_rows(),
                self.code.n_cols()
            )));
        }
        Ok(rate)
    }

    pub fn validate(&self) -> Result<()> {
        if self.ebn0_grid.is_empty() {
            return Err(Error::invalid("Eb/N0 grid is empty"));
        }
        if self.max_iter == 0 {
            return Err(Error::invalid("max_iter must be at least 1"));
        }
        if self.max_frames == 0 {
            return Err(Error::invalid("max_frames must be at least 1"));
        }
        self.rate()?;
        self.frame_decoder().map(|_| ())
    }

    fn frame_decoder(&self) -> Result<FrameDecoder> {
        match self.decoder {
            DecoderKind::Flooding => Ok(FrameDecoder::Flooding(FloodingDecoder::new(&self.code))),
            DecoderKind::SlidingWindow { window } => {
                let layout = self.layout.ok_or_else(|| {
                    Error::invalid("sliding-window decoding needs the block layout")
                })?;
                Ok(FrameDecoder::Window(SlidingWindowDecoder::new(
                    &self.code, layout, window,
                )?))
            }
        }
    }
}

enum FrameDecoder {
    Flooding(FloodingDecoder),
    Window(SlidingWindowDecoder),
}

struct FrameResult {
    bit_errors: u64,
    iterations: u64,
    decode_calls: u64,
}

impl FrameDecoder {
    fn run(&self, llr: &[f64], max_iter: usize) -> Result<FrameResult> {
        let (bits, iterations, decode_calls) = match self {
            FrameDecoder::Flooding(d) => {
                let out = d.decode(llr, max_iter)?;
                (out.bits, out.iterations as u64, 1)
            }
            FrameDecoder::Window(d) => {
                let out = d.decode(llr, max_iter)?;
                let total: usize = out.window_iterations.iter().sum();
                (out.bits, total as u64, out.window_iterations.len() as u64)
            }
        };
        Ok(FrameResult {
            bit_errors: bits.iter().map(|&b| u64::from(b)).sum(),
            iterations,
            decode_calls,
        })
    }
}

/// One measured Eb/N0 point.
///
/// `avg_iterations` is the mean number of BP iterations per decoder call:
/// per frame for flooding, per window position for sliding-window decoding.
#[derive(Debug, Clone, PartialEq)]
pub struct BerRecord {
    pub ebn0_db: f64,
    pub frames: u64,
    pub bit_errors: u64,
    pub frame_errors: u64,
    pub ber: f64,
    pub fer: f64,
    pub avg_iterations: f64,
}

/// Runs every Eb/N0 point until `max_frames` frames or `target_bit_errors`
/// bit errors.
///
/// Frame `k` of every point uses noise from `(seed, k)`, and frames are
/// decoded in parallel batches but accumulated in index order, so the
/// records do not depend on the thread count.
pub fn ber_sweep(config: &SimConfig) -> Result<Vec<BerRecord>> {
    config.validate()?;
    let rate = config.rate()?;
    let decoder = config.frame_decoder()?;
    let n = config.code.n_cols();

    config
        .ebn0_grid
        .iter()
        .map(|&ebn0| {
            let mut frames = 0u64;
            let mut bit_errors = 0u64;
            let mut frame_errors = 0u64;
            let mut iterations = 0u64;
            let mut calls = 0u64;
            'point: while frames < config.max_frames {
                let end = (frames + BATCH).min(config.max_frames);
                let batch = (frames..end)
                    .into_par_iter()
                    .map(|k| {
                        let llr = awgn_llr(n, ebn0, rate, config.seed, k)?;
                        decoder.run(&llr, config.max_iter)
                    })
                    .collect::<Result<Vec<_>>>()?;
                for r in batch {
                    frames += 1;
                    bit_errors += r.bit_errors;
                    frame_errors += u64::from(r.bit_errors > 0);
                    iterations += r.iterations;
                    calls += r.decode_calls;
                    if config.target_bit_errors > 0 && bit_errors >= config.target_bit_errors {
                        break 'point;
                    }
                }
            }
            Ok(BerRecord {
                ebn0_db: ebn0,
                frames,
                bit_errors,
                frame_errors,
                ber: bit_errors as f64 / (frames as f64 * n as f64),
                fer: frame_errors as f64 / frames as f64,
                avg_iterations: iterations as f64 / calls as f64,
            })
        })
        .collect()
}

/// CSV with [`CSV_HEADER`] and one line-feed-terminated row per record.
pub fn records_to_csv(records: &[BerRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.ebn0_db, r.frames, r.bit_errors, r.frame_errors, r.ber, r.fer, r.avg_iterations
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coupling::{CoupledCode, IndexSet};
    use crate::exponent::ExponentMatrix;

    fn small_code() -> SparseBinaryMatrix {
        let e = ExponentMatrix::from_diagonals(&[0, 0, 1, 0, 2], 2, 4).unwrap();
        CoupledCode::new(e, IndexSet::interval(0, 2).unwrap())
            .unwrap()
            .terminated_pcm(12)
            .unwrap()
    }

    #[test]
    fn one_frame_per_point() {
        let mut cfg = SimConfig::flooding(small_code(), vec![0.0, 2.0], 5);
        cfg.max_frames = 1;
        cfg.target_bit_errors = 0;
        let records = ber_sweep(&cfg).unwrap();
        assert_eq!(records.len(), 2);
        assert!(records.iter().all(|r| r.frames == 1));
    }

    #[test]
    fn repeatable_and_consistent() {
        let mut cfg = SimConfig::flooding(small_code(), vec![0.5, 3.0], 11);
        cfg.max_frames = 80;
        cfg.target_bit_errors = 40;
        let a = ber_sweep(&cfg).unwrap();
        let b = ber_sweep(&cfg).unwrap();
        assert_eq!(records_to_csv(&a), records_to_csv(&b));
        for r in &a {
            assert!((0.0..=1.0).contains(&r.ber) && (0.0..=1.0).contains(&r.fer));
            if r.frame_errors == 0 {
                assert_eq!(r.bit_errors, 0);
            }
            assert!(r.frames <= 80);
        }
    }

    #[test]
    fn csv_layout() {
        let r = BerRecord {
            ebn0_db: 2.5,
            frames: 10,
            bit_errors: 3,
            frame_errors: 1,
            ber: 0.0001,
            fer: 0.1,
            avg_iterations: 4.5,
        };
        assert_eq!(
            records_to_csv(&[r]),
            "ebn0_db,frames,bit_errors,frame_errors,ber,fer,avg_iterations\n2.5,10,3,1,0.0001,0.1,4.5\n"
        );
    }

    #[test]
    fn invalid_configs() {
        let mut cfg = SimConfig::flooding(small_code(), vec![], 0);
        assert!(ber_sweep(&cfg).is_err());
        cfg.ebn0_grid = vec![1.0];
        cfg.decoder = DecoderKind::SlidingWindow { window: 4 };
        assert!(ber_sweep(&cfg).is_err());
        cfg.layout = Some(BlockLayout::infer(&cfg.code, 12, 2).unwrap());
        assert!(ber_sweep(&cfg).is_ok());
        cfg.decoder = DecoderKind::SlidingWindow { window: 2 };
        assert!(ber_sweep(&cfg).is_err());
        cfg.decoder = DecoderKind::Flooding;
        cfg.max_iter = 0;
        assert!(ber_sweep(&cfg).is_err());
    }
}
