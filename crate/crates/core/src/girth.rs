//! Cycle analysis of Tanner graphs given as explicit binary matrices.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::exponent::ExponentMatrix;
use crate::sparse::SparseBinaryMatrix;

/// Default search cap for [`girth`].
pub const DEFAULT_GIRTH_BOUND: usize = 12;

/// Result of a bounded girth search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Girth {
    /// Length of the shortest cycle.
    Finite(usize),
    /// No cycle of length up to the bound exists; the girth is at least this.
    AtLeast(usize),
    /// The Tanner graph is a forest.
    Infinite,
}

impl Girth {
    /// True when the shortest cycle is known to be at least `len` long.
    pub fn is_at_least(self, len: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= len,
            Girth::AtLeast(g) => g >= len,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::AtLeast(g) => write!(f, ">= {g}"),
            Girth::Infinite => f.write_str("infinite"),
        }
    }
}

/// True when two distinct rows share at least two columns.
pub fn has_four_cycle(m: &SparseBinaryMatrix) -> bool {
    let mut seen = HashSet::new();
    for row in m.rows() {
        for (k, &a) in row.iter().enumerate() {
            for &b in &row[k + 1..] {
                if !seen.insert((a, b)) {
                    return true;
                }
            }
        }
    }
    false
}

/// Girth of the Tanner graph of `m` (rows are check nodes, columns are
/// variable nodes), searching cycles up to length `bound`.
///
/// A breadth-first search is run from every vertex; the shortest closed walk
/// through a non-tree edge over all sources is the girth. When nothing up to
/// `bound` is found the graph is either a forest ([`Girth::Infinite`]) or has
/// girth at least `bound + 2` (bipartite cycles are even).
pub fn girth(m: &SparseBinaryMatrix, bound: usize) -> Girth {
    let n_rows = m.n_rows();
    let n = n_rows + m.n_cols();
    let neighbours = |v: usize| -> &[usize] {
        if v < n_rows {
            m.row(v)
        } else {
            m.col(v - n_rows)
        }
    };
    // neighbour indices are in the other part of the bipartition
    let vertex = |from: usize, idx: usize| if from < n_rows { idx + n_rows } else { idx };

    const UNSEEN: usize = usize::MAX;
    let mut dist = vec![UNSEEN; n];
    let mut parent = vec![UNSEEN; n];
    let mut touched = Vec::new();
    let mut queue = VecDeque::new();
    let mut best = usize::MAX;

    for source in 0..n {
        for &v in &touched {
            dist[v] = UNSEEN;
            parent[v] = UNSEEN;
        }
        touched.clear();
        queue.clear();
        dist[source] = 0;
        touched.push(source);
        queue.push_back(source);

        while let Some(u) = queue.pop_front() {
            let du = dist[u];
            if 2 * du + 2 > bound || 2 * du + 2 >= best {
                break;
            }
            for &idx in neighbours(u) {
                let v = vertex(u, idx);
                if v == parent[u] {
                    continue;
                }
                if dist[v] == UNSEEN {
                    dist[v] = du + 1;
                    parent[v] = u;
                    touched.push(v);
                    queue.push_back(v);
                } else {
                    best = best.min(du + dist[v] + 1);
                }
            }
        }
    }

    if best <= bound {
        Girth::Finite(best)
    } else if is_forest(m) {
        Girth::Infinite
    } else {
        Girth::AtLeast(bound + 2 - bound % 2)
    }
}

// A graph is a forest iff |E| = |V| - #components.
fn is_forest(m: &SparseBinaryMatrix) -> bool {
    let n_rows = m.n_rows();
    let n = n_rows + m.n_cols();
    let mut root: Vec<usize> = (0..n).collect();
    fn find(root: &mut [usize], mut v: usize) -> usize {
        while root[v] != v {
            root[v] = root[root[v]];
            v = root[v];
        }
        v
    }
    for (r, c) in m.positions() {
        let a = find(&mut root, r);
        let b = find(&mut root, n_rows + c);
        if a == b {
            return false;
        }
        root[a] = b;
    }
    true
}

/// Girth-6 condition for the circulant lifting of `e` with size `n`: no 2×2
/// submatrix has `e11 + e22 ≡ e12 + e21 (mod n)`.
pub fn qc_exponent_girth6(e: &ExponentMatrix, n: u32) -> Result<bool> {
    if n < 2 {
        return Err(Error::invalid(format!("circulant size must be >= 2, got {n}")));
    }
    let n = u64::from(n);
    Ok(e.submatrices_2x2().all(|[[a, b], [c, d]]| {
        (u64::from(a) + u64::from(d)) % n != (u64::from(b) + u64::from(c)) % n
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_examples() {
        let id = SparseBinaryMatrix::identity(5);
        assert!(!has_four_cycle(&id));
        assert_eq!(girth(&id, DEFAULT_GIRTH_BOUND), Girth::Infinite);

        let ones = SparseBinaryMatrix::ones(2, 2);
        assert!(has_four_cycle(&ones));
        assert_eq!(girth(&ones, DEFAULT_GIRTH_BOUND), Girth::Finite(4));
        assert_eq!(girth(&SparseBinaryMatrix::ones(3, 3), 12), Girth::Finite(4));
        assert_eq!(girth(&SparseBinaryMatrix::zeros(0, 0), 12), Girth::Infinite);
    }

    #[test]
    fn long_cycle_and_cap() {
        // a single 10-cycle: 5 checks, 5 variables arranged in a ring
        let ring = SparseBinaryMatrix::from_rows(5, (0..5).map(|i| vec![i, (i + 1) % 5]).collect())
            .unwrap();
        assert_eq!(girth(&ring, 12), Girth::Finite(10));
        assert_eq!(girth(&ring, 8), Girth::AtLeast(10));
        assert_eq!(girth(&ring, 9), Girth::AtLeast(10));
        assert!(girth(&ring, 8).is_at_least(10));
    }

    #[test]
    fn qc_condition() {
        let e = ExponentMatrix::new(&[[3, 0, 1, 3], [4, 3, 3, 0], [4, 0, 5, 5]]).unwrap();
        assert!(qc_exponent_girth6(&e, 7).unwrap());
        assert!(qc_exponent_girth6(&e, 1000).unwrap());
        assert!(qc_exponent_girth6(&e, 1).is_err());
        let c = ExponentMatrix::new(&[[2, 2, 0], [2, 2, 1]]).unwrap();
        assert!(!qc_exponent_girth6(&c, 5).unwrap());
    }

    fn random_matrix() -> impl Strategy<Value = SparseBinaryMatrix> {
        (1usize..7, 1usize..8).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::bool::weighted(0.35), r * c).prop_map(move |bits| {
                let dense: Vec<Vec<u8>> = bits
                    .chunks(c)
                    .map(|row| row.iter().map(|&b| b as u8).collect())
                    .collect();
                SparseBinaryMatrix::from_dense(&dense).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn girth_four_iff_four_cycle(m in random_matrix()) {
            prop_assert_eq!(girth(&m, 12) == Girth::Finite(4), has_four_cycle(&m));
        }

        #[test]
        fn girth_is_permutation_invariant(m in random_matrix(), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut rp: Vec<usize> = (0..m.n_rows()).collect();
            let mut cp: Vec<usize> = (0..m.n_cols()).collect();
            rp.shuffle(&mut rng);
            cp.shuffle(&mut rng);
            let shuffled = m.permuted(&rp, &cp).unwrap();
            prop_assert_eq!(girth(&m, 16), girth(&shuffled, 16));
        }
    }
}
