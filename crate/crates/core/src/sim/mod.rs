//! Monte-Carlo BER simulation over a BPSK/AWGN channel.
//!
//! The all-zero codeword is transmitted (no encoder is needed for a linear
//! code on a symmetric channel), so every decoded one is a bit error.

mod bp;
mod channel;
mod sweep;
mod window;

pub use bp::{DecodeOutput, FloodingDecoder, LLR_CLAMP};
pub use channel::{awgn_llr, noise_variance};
pub use sweep::{ber_sweep, records_to_csv, BerRecord, DecoderKind, SimConfig, CSV_HEADER};
pub use window::{sliding_window_decode, BlockLayout, SlidingWindowDecoder, WindowOutput};
