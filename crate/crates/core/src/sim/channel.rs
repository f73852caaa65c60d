use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};

/// `σ² = 1 / (2 R 10^{Eb/N0 / 10})` for unit-energy BPSK.
pub fn noise_variance(ebn0_db: f64, rate: f64) -> Result<f64> {
    if !(rate > 0.0 && rate < 1.0) {
        return Err(Error::invalid(format!("rate {rate} is not in (0, 1)")));
    }
    if ebn0_db.is_nan() {
        return Err(Error::invalid("Eb/N0 is NaN"));
    }
    Ok(1.0 / (2.0 * rate * 10f64.powf(ebn0_db / 10.0)))
}

/// Channel LLRs `2y/σ²` for the all-zero codeword sent as `+1` symbols.
///
/// The noise for a frame depends only on `(seed, frame_index)`: the
/// generator is ChaCha8 seeded with `seed` on stream `frame_index`. Different
/// Eb/N0 values with the same pair therefore share the same underlying
/// Gaussian samples.
pub fn awgn_llr(n: usize, ebn0_db: f64, rate: f64, seed: u64, frame_index: u64) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::invalid("frame length must be positive"));
    }
    let sigma2 = noise_variance(ebn0_db, rate)?;
    let sigma = sigma2.sqrt();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(frame_index);
    Ok((0..n)
        .map(|_| {
            let z: f64 = StandardNormal.sample(&mut rng);
            2.0 * (1.0 + sigma * z) / sigma2
        })
        .collect())
}
