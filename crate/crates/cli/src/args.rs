//! Flag value parsing: comma-separated lists and `LO:STEP:HI` ranges.

use anyhow::{bail, Context, Result};

pub fn parse_list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<u32>()
                .with_context(|| format!("'{tok}' is not a non-negative integer"))
        })
        .collect()
}

pub fn join(values: &[u32]) -> String {
    values
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// `LO:STEP:HI` includes both ends when `STEP` divides the span; a bare
/// number is a one-point grid.
pub fn parse_range(s: &str) -> Result<Vec<f64>> {
    let parts: Vec<f64> = s
        .split(':')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .with_context(|| format!("'{t}' is not a number"))
        })
        .collect::<Result<_>>()?;
    if parts.iter().any(|v| !v.is_finite()) {
        bail!("range '{s}' has a non-finite value");
    }
    match parts[..] {
        [v] => Ok(vec![v]),
        [lo, step, hi] => {
            if step <= 0.0 || hi < lo {
                bail!("range '{s}' needs STEP > 0 and LO <= HI");
            }
            let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
            Ok((0..count)
                .map(|k| {
                    let v = lo + k as f64 * step;
                    (v * 1e9).round() / 1e9
                })
                .collect())
        }
        _ => bail!("range '{s}' must be LO:STEP:HI or a single value"),
    }
}
