//! Good sequences: integer sequences whose diagonal-constant matrix is
//! 4-cycle free, and the depth-first search that generates them.
//!
//! A sequence `a_1, …, a_{p+q-1}` is good for `(p, q)` when no four positions
//! `t < t+di, t+dj < t+di+dj` with `1 ≤ di < p`, `1 ≤ dj < q` satisfy
//! `a_t + a_{t+di+dj} = a_{t+di} + a_{t+dj}`. Placing the sequence on the
//! diagonals of a `p × q` matrix (see [`crate::ExponentMatrix::from_sequence`])
//! turns every 2×2 submatrix into exactly one such quadruple.

use crate::error::{Error, Result};

/// A validated good sequence for a `p × q` target matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GoodSequence {
    values: Vec<u32>,
    p: usize,
    q: usize,
    moe: u32,
}

impl GoodSequence {
    /// Validates `values` and wraps it. Fails when the length is not
    /// `p + q - 1`, when `p >= q`, or when the goodness condition is violated.
    pub fn new(values: Vec<u32>, p: usize, q: usize) -> Result<Self> {
        if !is_good_sequence(&values, p, q)? {
            return Err(Error::invalid(format!(
                "sequence {values:?} is not good for (p, q) = ({p}, {q})"
            )));
        }
        let moe = moe(&values)?;
        Ok(Self { values, p, q, moe })
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Maximum of elements.
    pub fn moe(&self) -> u32 {
        self.moe
    }

    pub fn into_values(self) -> Vec<u32> {
        self.values
    }
}

fn check_dims(p: usize, q: usize) -> Result<()> {
    if p == 0 || p >= q {
        return Err(Error::invalid(format!("need 1 <= p < q, got p = {p}, q = {q}")));
    }
    Ok(())
}

fn check_shape(len: usize, p: usize, q: usize) -> Result<()> {
    check_dims(p, q)?;
    if len != p + q - 1 {
        return Err(Error::invalid(format!(
            "sequence length {len} does not equal p + q - 1 = {}",
            p + q - 1
        )));
    }
    Ok(())
}

/// Tests the goodness condition for every admissible `(t, di, dj)`,
/// including `di == dj`.
pub fn is_good_sequence(values: &[u32], p: usize, q: usize) -> Result<bool> {
    check_shape(values.len(), p, q)?;
    let a = |i: usize| u64::from(values[i]);
    let len = values.len();
    for t in 0..len {
        for di in 1..p {
            for dj in 1..q {
                let far = t + di + dj;
                if far >= len {
                    break;
                }
                if a(t) + a(far) == a(t + di) + a(t + dj) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Maximum of elements.
pub fn moe(values: &[u32]) -> Result<u32> {
    values
        .iter()
        .copied()
        .max()
        .ok_or_else(|| Error::invalid("maximum of an empty sequence"))
}

/// Exhaustive depth-first search for a good sequence with entries in `[0, w]`.
///
/// Positions are filled left to right. At each position the values that would
/// close a forbidden quadruple with already placed entries are excluded and
/// the remaining candidates are tried in ascending order; an exhausted
/// position backtracks to its predecessor. Returns `None` once the whole tree
/// has been explored.
pub fn generate_good_sequence(p: usize, q: usize, w: u32) -> Result<Option<Vec<u32>>> {
    check_dims(p, q)?;
    let len = p + q - 1;
    let width = w as usize + 1;

    let mut seq = vec![0u32; len];
    let mut forbidden = vec![false; width * len];
    let mut next = vec![0u32; len];
    let mut pos = 0usize;

    loop {
        let blocked = &forbidden[pos * width..(pos + 1) * width];
        let mut cand = next[pos];
        while cand <= w && blocked[cand as usize] {
            cand += 1;
        }
        if cand > w {
            if pos == 0 {
                return Ok(None);
            }
            pos -= 1;
            continue;
        }
        seq[pos] = cand;
        next[pos] = cand + 1;
        if pos + 1 == len {
            return Ok(Some(seq));
        }
        pos += 1;
        next[pos] = 0;
        mark_forbidden(
            &seq,
            pos,
            p,
            q,
            &mut forbidden[pos * width..(pos + 1) * width],
        );
    }
}

// Marks every value v for which seq[last] = v would give
// seq[first] + seq[last] = seq[inner_a] + seq[inner_b].
fn mark_forbidden(seq: &[u32], last: usize, p: usize, q: usize, out: &mut [bool]) {
    out.fill(false);
    let w = out.len() as i64 - 1;
    for dj in 1..q.min(last + 1) {
        let n3 = last - dj;
        for di in 1..p.min(n3 + 1) {
            let n1 = n3 - di;
            let n2 = n1 + dj;
            let v = i64::from(seq[n2]) + i64::from(seq[n3]) - i64::from(seq[n1]);
            if (0..=w).contains(&v) {
                out[v as usize] = true;
            }
        }
    }
}

/// Smallest `w <= w_cap` for which [`generate_good_sequence`] succeeds,
/// together with the sequence it found.
pub fn find_min_moe(p: usize, q: usize, w_cap: u32) -> Result<Option<(u32, Vec<u32>)>> {
    for w in 0..=w_cap {
        if let Some(seq) = generate_good_sequence(p, q, w)? {
            return Ok(Some((w, seq)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn published_sequences_are_good() {
        assert!(is_good_sequence(&[0, 0, 1, 0], 2, 3).unwrap());
        assert!(is_good_sequence(&[0, 3, 2, 0, 0, 1, 3, 0], 3, 6).unwrap());
        assert!(
            is_good_sequence(&[6, 5, 3, 6, 1, 1, 7, 3, 0, 2, 7, 6, 7, 0], 5, 10).unwrap()
        );
        assert!(!is_good_sequence(&[0, 0, 0, 0], 2, 3).unwrap());
    }

    #[test]
    fn degenerate_equal_offsets_are_checked() {
        // p = 2, q = 3 only allows di = 1, so dj = 1 is the di == dj case:
        // 0 + 2 == 2 * 1 is an arithmetic progression and must be rejected.
        assert!(!is_good_sequence(&[0, 1, 2, 5], 2, 3).unwrap());
    }

    #[test]
    fn shape_errors() {
        assert!(is_good_sequence(&[0, 0, 1], 2, 3).is_err());
        assert!(is_good_sequence(&[0, 0, 1, 0], 3, 2).is_err());
        assert!(is_good_sequence(&[0, 0, 1, 0, 0], 3, 3).is_err());
        assert!(generate_good_sequence(3, 3, 2).is_err());
        assert!(generate_good_sequence(0, 3, 2).is_err());
        assert!(moe(&[]).is_err());
    }

    #[test]
    fn moe_examples() {
        assert_eq!(moe(&[0, 0, 1, 0]).unwrap(), 1);
        assert_eq!(moe(&[0, 3, 2, 0, 0, 1, 3, 0]).unwrap(), 3);
        assert_eq!(moe(&[0, 0, 0]).unwrap(), 0);
    }

    #[test]
    fn generator_examples() {
        assert_eq!(generate_good_sequence(2, 3, 1).unwrap(), Some(vec![0, 0, 1, 0]));
        assert_eq!(generate_good_sequence(2, 3, 0).unwrap(), None);
        let s = generate_good_sequence(3, 6, 3).unwrap().unwrap();
        assert!(is_good_sequence(&s, 3, 6).unwrap());
        assert!(moe(&s).unwrap() <= 3);
    }

    #[test]
    fn min_moe_examples() {
        assert_eq!(find_min_moe(2, 3, 10).unwrap().unwrap().0, 1);
        assert_eq!(find_min_moe(3, 6, 10).unwrap().unwrap().0, 3);
        assert_eq!(find_min_moe(5, 10, 10).unwrap().unwrap().0, 7);
        assert_eq!(find_min_moe(3, 6, 2).unwrap(), None);
    }

    #[test]
    fn p_equal_one_has_no_constraints() {
        assert_eq!(find_min_moe(1, 4, 3).unwrap(), Some((0, vec![0, 0, 0, 0])));
    }

    #[test]
    fn wrapper_validates() {
        let s = GoodSequence::new(vec![0, 3, 2, 0, 0, 1, 3, 0], 3, 6).unwrap();
        assert_eq!((s.p(), s.q(), s.moe()), (3, 6, 3));
        assert!(GoodSequence::new(vec![0, 0, 0, 0], 2, 3).is_err());
    }

    fn shape() -> impl Strategy<Value = (usize, usize)> {
        (1usize..4).prop_flat_map(|p| (Just(p), (p + 1)..(p + 5)))
    }

    proptest! {
        #[test]
        fn generated_sequences_are_good(((p, q), w) in (shape(), 0u32..5)) {
            if let Some(s) = generate_good_sequence(p, q, w).unwrap() {
                prop_assert!(is_good_sequence(&s, p, q).unwrap());
                prop_assert!(moe(&s).unwrap() <= w);
            }
        }

        #[test]
        fn success_is_monotone_in_w(((p, q), w) in (shape(), 0u32..5)) {
            if generate_good_sequence(p, q, w).unwrap().is_some() {
                prop_assert!(generate_good_sequence(p, q, w + 1).unwrap().is_some());
            }
        }

        #[test]
        fn goodness_is_translation_invariant(
            ((p, q), seed) in (shape(), proptest::collection::vec(0u32..6, 16)),
            shift in 0u32..100,
        ) {
            let values = &seed[..p + q - 1];
            let shifted: Vec<u32> = values.iter().map(|v| v + shift).collect();
            prop_assert_eq!(
                is_good_sequence(values, p, q).unwrap(),
                is_good_sequence(&shifted, p, q).unwrap()
            );
        }
    }
}
