//! Graph lifting with circulant and affine permutation matrices.

use std::collections::BTreeMap;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exponent::ExponentMatrix;
use crate::girth::has_four_cycle;
use crate::sparse::SparseBinaryMatrix;

/// Affine permutation `I^{s,a}` of size `m`: column `j` has its one in row
/// `(j·a + s) mod m`. With `a = 1` this is the circulant `I^s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ApmSpec {
    s: u32,
    a: u32,
    m: u32,
}

impl ApmSpec {
    /// Requires `s < m` and `1 <= a < m` with `gcd(a, m) = 1`. Size 1 is the
    /// trivial identity and accepts `a` in `{0, 1}`.
    pub fn new(s: u32, a: u32, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::invalid("permutation size must be positive"));
        }
        if s >= m {
            return Err(Error::invalid(format!("shift {s} is not in Z_{m}")));
        }
        let unit = if m == 1 { a <= 1 } else { a >= 1 && a < m && a.gcd(&m) == 1 };
        if !unit {
            return Err(Error::invalid(format!("multiplier {a} is not a unit of Z_{m}")));
        }
        Ok(Self { s, a, m })
    }

    /// The circulant permutation `I^s` of size `m`.
    pub fn circulant(s: u32, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::invalid("permutation size must be positive"));
        }
        Self::new(s % m, 1, m)
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Row holding the one of column `j`.
    pub fn row_of(&self, j: u32) -> u32 {
        ((u64::from(j) * u64::from(self.a) + u64::from(self.s)) % u64::from(self.m)) as u32
    }
}

/// The `m × m` permutation matrix of `spec`.
pub fn apm_matrix(spec: ApmSpec) -> SparseBinaryMatrix {
    let m = spec.m as usize;
    SparseBinaryMatrix::from_positions(m, m, (0..spec.m).map(|j| (spec.row_of(j) as usize, j as usize)))
        .expect("an affine map with unit multiplier is a permutation")
}

/// A base matrix with one permutation assigned to each of its ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedCode {
    base: SparseBinaryMatrix,
    m: u32,
    assignment: BTreeMap<(usize, usize), ApmSpec>,
}

impl LiftedCode {
    /// Fails when a one of `base` has no assignment, an assignment sits on a
    /// zero, or a spec has the wrong size.
    pub fn new(
        base: SparseBinaryMatrix,
        m: u32,
        assignment: BTreeMap<(usize, usize), ApmSpec>,
    ) -> Result<Self> {
        if let Some((pos, spec)) = assignment.iter().find(|(_, spec)| spec.m != m) {
            return Err(Error::invalid(format!(
                "assignment at {pos:?} has size {} instead of {m}",
                spec.m
            )));
        }
        if let Some(&(r, c)) = assignment
            .keys()
            .find(|&&(r, c)| r >= base.n_rows() || c >= base.n_cols() || !base.get(r, c))
        {
            return Err(Error::invalid(format!(
                "assignment at ({r}, {c}) is not a one of the base matrix"
            )));
        }
        if let Some((r, c)) = base.positions().find(|pos| !assignment.contains_key(pos)) {
            return Err(Error::invalid(format!(
                "no permutation assigned to base position ({r}, {c})"
            )));
        }
        Ok(Self { base, m, assignment })
    }

    pub fn base(&self) -> &SparseBinaryMatrix {
        &self.base
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn assignment(&self) -> &BTreeMap<(usize, usize), ApmSpec> {
        &self.assignment
    }

    /// Substitutes every one of the base by its permutation and every zero by
    /// the `m × m` zero block.
    pub fn lift(&self) -> SparseBinaryMatrix {
        let m = self.m as usize;
        let mut rows = vec![Vec::new(); self.base.n_rows() * m];
        for (&(br, bc), spec) in &self.assignment {
            for j in 0..self.m {
                rows[br * m + spec.row_of(j) as usize].push(bc * m + j as usize);
            }
        }
        for row in &mut rows {
            row.sort_unstable();
        }
        SparseBinaryMatrix::from_rows(self.base.n_cols() * m, rows)
            .expect("blocks of distinct base positions never overlap")
    }
}

/// Circulant lifting of an exponent matrix: entry `e` becomes `I^{e mod n}`.
pub fn cpm_lift(e: &ExponentMatrix, n: u32) -> Result<SparseBinaryMatrix> {
    if n == 0 {
        return Err(Error::invalid("circulant size must be positive"));
    }
    let base = SparseBinaryMatrix::ones(e.p(), e.q());
    let assignment = base
        .positions()
        .map(|(i, j)| Ok(((i, j), ApmSpec::circulant(e.get(i, j), n)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(LiftedCode::new(base, n, assignment)?.lift())
}

/// Draws `(s, a)` uniformly from `Z_m × Z_m^*` for every one of `base`, in
/// row-major order, and keeps the first draw whose lifted matrix has no
/// 4-cycle. Returns `None` after `max_tries` rejected draws.
///
/// The stream is ChaCha8 seeded with `seed`; units are sampled by rejection on
/// `gcd(a, m) != 1`, so a given seed always reproduces the same code.
pub fn random_apm_assignment(
    base: &SparseBinaryMatrix,
    m: u32,
    seed: u64,
    max_tries: usize,
) -> Result<Option<LiftedCode>> {
    if m < 2 {
        return Err(Error::invalid(format!("lift size must be >= 2, got {m}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..max_tries {
        let assignment = base
            .positions()
            .map(|pos| {
                let s = rng.random_range(0..m);
                let a = loop {
                    let a = rng.random_range(1..m);
                    if a.gcd(&m) == 1 {
                        break a;
                    }
                };
                (pos, ApmSpec { s, a, m })
            })
            .collect();
        let code = LiftedCode::new(base.clone(), m, assignment)?;
        if !has_four_cycle(&code.lift()) {
            return Ok(Some(code));
        }
    }
    Ok(None)
}
