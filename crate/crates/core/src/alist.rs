//! The alist text format for sparse parity-check matrices.
//!
//! ```text
//! n m                      columns, rows
//! max_col_deg max_row_deg
//! col degrees (n values)
//! row degrees (m values)
//! n lines: 1-based row indices of each column, 0-padded to max_col_deg
//! m lines: 1-based column indices of each row, 0-padded to max_row_deg
//! ```
//!
//! The reader accepts both padded and unpadded body lines.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::sparse::SparseBinaryMatrix;

fn join_padded(out: &mut String, items: &[usize], width: usize) {
    let mut first = true;
    for v in items.iter().map(|&i| i + 1).chain(std::iter::repeat(0)).take(width) {
        if !first {
            out.push(' ');
        }
        first = false;
        let _ = write!(out, "{v}");
    }
    out.push('\n');
}

fn join(out: &mut String, values: impl Iterator<Item = usize>) {
    let mut first = true;
    for v in values {
        if !first {
            out.push(' ');
        }
        first = false;
        let _ = write!(out, "{v}");
    }
    out.push('\n');
}

/// Serialises `m` as alist text, zero-padding each index list.
pub fn to_alist(m: &SparseBinaryMatrix) -> String {
    let max_col = m.cols().iter().map(Vec::len).max().unwrap_or(0);
    let max_row = m.rows().iter().map(Vec::len).max().unwrap_or(0);
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", m.n_cols(), m.n_rows());
    let _ = writeln!(out, "{max_col} {max_row}");
    join(&mut out, m.cols().iter().map(Vec::len));
    join(&mut out, m.rows().iter().map(Vec::len));
    for col in m.cols() {
        join_padded(&mut out, col, max_col);
    }
    for row in m.rows() {
        join_padded(&mut out, row, max_row);
    }
    out
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn next_numbers(&mut self, what: &str) -> Result<(usize, Vec<usize>)> {
        let (n, line) = self
            .inner
            .next()
            .ok_or_else(|| Error::parse(0, format!("unexpected end of file, expected {what}")))?;
        let values = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::parse(n + 1, format!("'{tok}' is not a non-negative integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((n + 1, values))
    }

    fn next_exact(&mut self, count: usize, what: &str) -> Result<(usize, Vec<usize>)> {
        let (line, values) = self.next_numbers(what)?;
        if values.len() != count {
            return Err(Error::parse(
                line,
                format!("expected {count} values for {what}, found {}", values.len()),
            ));
        }
        Ok((line, values))
    }
}

fn read_lists(
    lines: &mut Lines<'_>,
    degrees: &[usize],
    bound: usize,
    what: &str,
) -> Result<Vec<Vec<usize>>> {
    degrees
        .iter()
        .map(|&deg| {
            let (line, values) = lines.next_numbers(what)?;
            let list: Vec<usize> = values.into_iter().filter(|&v| v != 0).collect();
            if list.len() != deg {
                return Err(Error::parse(
                    line,
                    format!("expected {deg} {what} indices, found {}", list.len()),
                ));
            }
            if let Some(&bad) = list.iter().find(|&&v| v > bound) {
                return Err(Error::parse(line, format!("index {bad} exceeds {bound}")));
            }
            Ok(list.into_iter().map(|v| v - 1).collect())
        })
        .collect()
}

/// Parses alist text. Column and row lists must describe the same matrix.
pub fn from_alist(text: &str) -> Result<SparseBinaryMatrix> {
    let mut lines = Lines {
        inner: text.lines().enumerate(),
    };
    let (_, dims) = lines.next_exact(2, "dimensions")?;
    let (n_cols, n_rows) = (dims[0], dims[1]);
    lines.next_exact(2, "maximum degrees")?;
    let (_, col_deg) = lines.next_exact(n_cols, "column degrees")?;
    let (_, row_deg) = lines.next_exact(n_rows, "row degrees")?;
    let cols = read_lists(&mut lines, &col_deg, n_rows, "column")?;
    let rows = read_lists(&mut lines, &row_deg, n_cols, "row")?;

    let m = SparseBinaryMatrix::from_rows(n_cols, rows)?;
    for (c, mut col) in cols.into_iter().enumerate() {
        col.sort_unstable();
        if m.col(c) != col.as_slice() {
            return Err(Error::invalid(format!(
                "column {} disagrees with the row lists",
                c + 1
            )));
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identity_layout() {
        let text = to_alist(&SparseBinaryMatrix::identity(2));
        assert_eq!(text, "2 2\n1 1\n1 1\n1 1\n1\n2\n1\n2\n");
        assert_eq!(from_alist(&text).unwrap(), SparseBinaryMatrix::identity(2));
    }

    #[test]
    fn degrees_of_a_single_row() {
        let text = to_alist(&SparseBinaryMatrix::ones(1, 2));
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[2], "1 1");
        assert_eq!(lines[3], "2");
    }

    #[test]
    fn padding_is_optional() {
        // column 2 has degree 1 out of a maximum of 2
        let m = SparseBinaryMatrix::from_dense(&[vec![1u8, 1], vec![1, 0]]).unwrap();
        let padded = to_alist(&m);
        assert!(padded.contains("\n1 0\n"));
        let unpadded = "2 2\n2 2\n2 1\n2 1\n1 2\n1\n1 2\n1\n";
        assert_eq!(from_alist(unpadded).unwrap(), m);
        assert_eq!(from_alist(&padded).unwrap(), m);
    }

    #[test]
    fn malformed_files() {
        assert!(from_alist("").is_err());
        assert!(from_alist("2 2\n1 1\n1 1\n1 1\n1\n").is_err());
        // column lists say (1,1),(2,2) but rows say (1,2),(2,1)
        assert!(from_alist("2 2\n1 1\n1 1\n1 1\n1\n2\n2\n1\n").is_err());
        assert!(from_alist("2 2\n1 1\n1 1\n1 1\n3\n2\n1\n2\n").is_err());
        assert!(from_alist("2 x\n").is_err());
    }

    proptest! {
        #[test]
        fn round_trip(
            dense in (1usize..6, 1usize..8).prop_flat_map(|(r, c)|
                proptest::collection::vec(proptest::collection::vec(0u8..2, c), r))
        ) {
            let m = SparseBinaryMatrix::from_dense(&dense).unwrap();
            let text = to_alist(&m);
            let back = from_alist(&text).unwrap();
            prop_assert_eq!(to_alist(&back), text);
            prop_assert_eq!(back, m);
        }
    }
}
