//! Construction and analysis of 4-cycle-free spatially coupled LDPC codes.
//!
//! The crate is organised bottom-up:
//!
//! - [`sequence`]: good sequences and the backtracking search that produces them.
//! - [`exponent`]: non-negative integer exponent matrices, their incidence
//!   matrices and the integer 4-cycle condition.
//! - [`coupling`]: coupled parity-check matrices built from an exponent matrix
//!   and an index set, together with the pattern-based 4-cycle verdict.
//! - [`sparse`] and [`girth`]: explicit binary matrices and brute-force cycle
//!   analysis used as ground truth.
//! - [`lifting`] and [`alist`]: permutation-matrix lifting and file export.
//! - [`sim`]: AWGN/BPSK Monte-Carlo harness with flooding and sliding-window
//!   belief propagation.

pub mod alist;
pub mod coupling;
pub mod error;
pub mod exponent;
pub mod girth;
pub mod lifting;
pub mod sequence;
pub mod sim;
pub mod sparse;

pub use coupling::{
    constraint_length, design_rate, h_is_four_cycle_free, rep_index_matrix, CoupledCode,
    IndexSet,
};
pub use error::{Error, Result};
pub use exponent::{karimi_matrix, prime_after, ExponentMatrix, Soe};
pub use girth::{girth, has_four_cycle, qc_exponent_girth6, Girth};
pub use lifting::{apm_matrix, cpm_lift, random_apm_assignment, ApmSpec, LiftedCode};
pub use sequence::{find_min_moe, generate_good_sequence, is_good_sequence, moe, GoodSequence};
pub use sparse::SparseBinaryMatrix;
