#![allow(dead_code)]

use scldpc::{CoupledCode, ExponentMatrix, IndexSet, SparseBinaryMatrix};

/// Coupling-width table: `(p, q, w2, w3, sequence)`, where `w2` is the maximum
/// entry of the QC baseline exponent matrix and `w3` the largest element of the
/// listed good sequence.
pub const TABLE: &[(usize, usize, u32, u32, &[u32])] = &[
    (2, 3, 2, 1, &[0, 0, 1, 0]),
    (2, 4, 3, 2, &[0, 0, 1, 0, 2]),
    (2, 5, 4, 2, &[0, 0, 1, 0, 2, 0]),
    (2, 6, 5, 3, &[0, 1, 1, 3, 2, 0, 3]),
    (2, 7, 6, 3, &[0, 0, 1, 3, 2, 0, 3, 0]),
    (2, 8, 7, 4, &[0, 2, 3, 2, 0, 0, 4, 1, 4]),
    (2, 9, 8, 4, &[0, 4, 4, 3, 1, 2, 4, 0, 3, 0]),
    (2, 10, 9, 5, &[0, 0, 1, 5, 2, 4, 0, 3, 2, 0, 5]),
    (2, 11, 10, 5, &[0, 5, 4, 1, 3, 3, 4, 0, 4, 2, 5, 0]),
    (2, 12, 11, 6, &[0, 2, 0, 5, 1, 1, 0, 3, 4, 1, 5, 0, 6]),
    (2, 13, 12, 6, &[0, 0, 1, 0, 4, 1, 6, 2, 0, 3, 5, 0, 6, 0]),
    (2, 14, 13, 7, &[0, 6, 7, 1, 5, 0, 7, 3, 2, 4, 7, 7, 4, 2, 7]),
    (3, 4, 4, 2, &[0, 2, 2, 0, 1, 0]),
    (3, 5, 6, 2, &[0, 2, 1, 2, 0, 0, 2]),
    (3, 6, 6, 3, &[0, 2, 3, 0, 3, 1, 0, 0]),
    (3, 7, 10, 3, &[0, 3, 1, 0, 0, 2, 3, 0, 3]),
    (3, 8, 10, 4, &[0, 1, 3, 2, 0, 4, 4, 0, 3, 0]),
    (3, 9, 10, 4, &[0, 3, 1, 2, 4, 0, 4, 4, 1, 0, 3]),
    (3, 10, 10, 5, &[0, 1, 4, 2, 1, 5, 1, 3, 0, 5, 5, 0]),
    (3, 11, 12, 5, &[0, 5, 3, 5, 0, 0, 4, 5, 2, 1, 4, 0, 5]),
    (3, 12, 12, 6, &[0, 4, 1, 0, 3, 5, 6, 2, 0, 6, 6, 1, 6, 0]),
    (3, 13, 16, 7, &[0, 7, 5, 1, 3, 7, 7, 2, 7, 1, 4, 3, 0, 6, 7]),
    (3, 14, 16, 7, &[0, 5, 1, 7, 7, 2, 0, 7, 4, 6, 0, 3, 7, 6, 7, 0]),
    (4, 5, 6, 2, &[0, 2, 1, 2, 0, 0, 2, 1]),
    (4, 6, 6, 3, &[1, 2, 0, 3, 0, 0, 2, 3, 1]),
    (4, 7, 10, 4, &[0, 2, 0, 4, 4, 3, 0, 1, 3, 1]),
    (4, 8, 10, 5, &[0, 1, 5, 5, 2, 0, 5, 0, 3, 2, 4]),
    (4, 9, 10, 6, &[0, 2, 0, 4, 5, 0, 6, 6, 5, 1, 3, 1]),
    (4, 10, 10, 6, &[0, 2, 5, 6, 4, 0, 4, 3, 0, 0, 6, 1, 4]),
    (4, 11, 12, 6, &[0, 0, 6, 4, 3, 0, 5, 1, 5, 0, 3, 5, 6, 0]),
    (4, 12, 12, 7, &[0, 0, 2, 5, 0, 6, 4, 1, 0, 7, 3, 7, 0, 0, 2]),
    (4, 13, 16, 7, &[0, 0, 7, 6, 2, 0, 6, 1, 4, 1, 6, 0, 2, 3, 7, 0]),
    (4, 14, 16, 8, &[0, 6, 6, 8, 2, 1, 6, 4, 0, 3, 7, 0, 7, 8, 5, 0, 0]),
    (4, 15, 16, 8, &[0, 0, 4, 6, 7, 1, 8, 3, 0, 3, 8, 1, 7, 6, 4, 0, 0, 4]),
    (4, 16, 16, 9, &[0, 0, 3, 8, 9, 1, 0, 8, 5, 0, 9, 2, 6, 0, 7, 9, 7, 3, 3]),
    (5, 6, 6, 4, &[0, 3, 1, 2, 4, 4, 1, 4, 2, 3]),
    (5, 7, 10, 4, &[0, 1, 1, 0, 4, 2, 4, 0, 1, 1, 0]),
    (5, 8, 10, 6, &[0, 5, 4, 1, 3, 6, 0, 0, 1, 6, 5, 2]),
    (5, 9, 10, 6, &[0, 2, 6, 6, 4, 5, 4, 0, 6, 1, 3, 6, 6]),
    (5, 10, 10, 7, &[0, 4, 6, 0, 5, 0, 7, 3, 2, 0, 0, 1, 4, 6]),
    (5, 11, 12, 7, &[0, 3, 7, 5, 6, 1, 6, 5, 7, 3, 0, 0, 3, 7, 5]),
    (5, 12, 12, 8, &[0, 0, 6, 4, 8, 2, 3, 5, 0, 5, 8, 1, 0, 0, 7, 5]),
    (5, 13, 16, 8, &[0, 4, 0, 1, 7, 5, 8, 3, 3, 8, 5, 7, 1, 0, 4, 0, 1]),
    (5, 14, 16, 9, &[0, 4, 9, 0, 6, 1, 8, 9, 2, 2, 0, 9, 6, 9, 5, 4, 8, 0]),
    (5, 15, 16, 10, &[0, 0, 1, 3, 6, 10, 2, 10, 1, 0, 10, 8, 5, 0, 9, 2, 2, 3, 5]),
    (5, 16, 16, 10, &[0, 3, 10, 7, 7, 5, 1, 10, 1, 0, 10, 2, 6, 1, 7, 8, 10, 0, 5, 8]),
];

pub fn e3x4() -> ExponentMatrix {
    ExponentMatrix::new(&[[3, 0, 1, 3], [4, 3, 3, 0], [4, 0, 5, 5]]).unwrap()
}

pub const SEQ_3X6: [u32; 8] = [0, 3, 2, 0, 0, 1, 3, 0];

pub fn e3x6() -> ExponentMatrix {
    ExponentMatrix::from_diagonals(&SEQ_3X6, 3, 6).unwrap()
}

pub fn counterexample() -> (ExponentMatrix, IndexSet) {
    let e = ExponentMatrix::new(&[
        [8, 2, 5, 5, 7, 3, 8],
        [8, 0, 8, 6, 0, 7, 0],
        [4, 6, 7, 3, 8, 2, 3],
    ])
    .unwrap();
    (e, IndexSet::new(vec![0, 2, 3, 4, 5, 6, 7, 8]).unwrap())
}

pub fn e3x6_terminated(l: usize) -> SparseBinaryMatrix {
    CoupledCode::new(e3x6(), IndexSet::interval(0, 3).unwrap())
        .unwrap()
        .terminated_pcm(l)
        .unwrap()
}
