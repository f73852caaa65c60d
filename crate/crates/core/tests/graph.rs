use proptest::prelude::*;

use scldpc::alist::{from_alist, to_alist};
use scldpc::{apm_matrix, girth, has_four_cycle, ApmSpec, Girth, SparseBinaryMatrix};

fn cycle_graph(k: usize) -> SparseBinaryMatrix {
    // k checks and k variables joined in a single 2k-cycle
    let rows = (0..k).map(|i| vec![i, (i + 1) % k]).collect();
    SparseBinaryMatrix::from_rows(k, rows).unwrap()
}

#[test]
fn girth_of_simple_cycles() {
    for k in 2..=6 {
        let g = girth(&cycle_graph(k), 12);
        assert_eq!(g, Girth::Finite(2 * k), "k = {k}");
    }
    assert_eq!(girth(&cycle_graph(7), 12), Girth::AtLeast(14));
    assert_eq!(girth(&cycle_graph(7), 14), Girth::Finite(14));
    let tree = SparseBinaryMatrix::from_rows(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
    assert_eq!(girth(&tree, 12), Girth::Infinite);
}

#[test]
fn alist_survives_a_file_round_trip() {
    let m = apm_matrix(ApmSpec::new(3, 5, 12).unwrap());
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("apm.alist");
    std::fs::write(&path, to_alist(&m)).unwrap();
    let back = from_alist(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(back, m);
}

proptest! {
    #[test]
    fn four_cycle_check_matches_dense_search(
        dense in prop::collection::vec(prop::collection::vec(any::<bool>(), 6), 1..6),
    ) {
        let rows: Vec<Vec<u8>> = dense.iter().map(|r| r.iter().map(|&b| u8::from(b)).collect()).collect();
        let m = SparseBinaryMatrix::from_dense(&rows).unwrap();
        let mut brute = false;
        for r1 in 0..rows.len() {
            for r2 in r1 + 1..rows.len() {
                let shared = (0..6).filter(|&c| rows[r1][c] == 1 && rows[r2][c] == 1).count();
                brute |= shared >= 2;
            }
        }
        prop_assert_eq!(has_four_cycle(&m), brute);
        prop_assert_eq!(girth(&m, 12) == Girth::Finite(4), brute);
    }
}
