//! Triangular tables and their text serializations.

use std::fmt::{self, Display, Write as _};
use std::str::FromStr;

use crate::algebra::Integer;

/// A triangle whose rows are indexed from `first_row`; the `i`-th stored row
/// (row index `first_row + i`) has exactly `i + 1` entries.
///
/// Hoggatt-style triangles start at row 0 with entries `k = 0..=n`; Narayana
/// and symmetric-path triangles start at row 1 with entries `k = 0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleTable<T = Integer> {
    first_row: usize,
    rows: Vec<Vec<T>>,
}

impl<T> TriangleTable<T> {
    pub fn new(first_row: usize, rows: Vec<Vec<T>>) -> Self {
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(
                row.len(),
                i + 1,
                "row {} has the wrong length",
                first_row + i
            );
        }
        Self { first_row, rows }
    }

    /// Builds rows `first_row..=last_row`, calling `entry(n, k)` for each cell.
    pub fn from_fn(
        first_row: usize,
        last_row: usize,
        mut entry: impl FnMut(usize, usize) -> T,
    ) -> Self {
        let rows = (first_row..=last_row)
            .map(|n| (0..=n - first_row).map(|k| entry(n, k)).collect())
            .collect();
        Self { first_row, rows }
    }

    pub fn first_row(&self) -> usize {
        self.first_row
    }

    /// One past the last row index.
    pub fn end_row(&self) -> usize {
        self.first_row + self.rows.len()
    }

    pub fn row(&self, n: usize) -> Option<&[T]> {
        n.checked_sub(self.first_row)
            .and_then(|i| self.rows.get(i))
            .map(Vec::as_slice)
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&T> {
        self.row(n).and_then(|r| r.get(k))
    }

    /// `(n, row)` pairs in ascending order.
    pub fn rows(&self) -> impl Iterator<Item = (usize, &[T])> + '_ {
        self.rows
            .iter()
            .enumerate()
            .map(move |(i, r)| (self.first_row + i, r.as_slice()))
    }

    /// Entries read by rows.
    pub fn flatten(&self) -> impl Iterator<Item = &T> + '_ {
        self.rows.iter().flatten()
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> TriangleTable<U> {
        let mut f = f;
        TriangleTable {
            first_row: self.first_row,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(&mut f).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    /// One row per line, tab-separated.
    Tsv,
    /// OEIS b-file: `index value` per line, read by rows, 1-based.
    Bfile,
    /// Right-aligned columns with row labels.
    Pretty,
}

impl FromStr for TableFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tsv" => Ok(Self::Tsv),
            "bfile" => Ok(Self::Bfile),
            "pretty" => Ok(Self::Pretty),
            other => Err(format!(
                "unknown format `{other}` (expected tsv, bfile or pretty)"
            )),
        }
    }
}

impl<T: Display> TriangleTable<T> {
    pub fn render(&self, format: TableFormat) -> String {
        let rows: Vec<(usize, Vec<String>)> = self
            .rows()
            .map(|(n, r)| (n, r.iter().map(ToString::to_string).collect()))
            .collect();
        render_rows(&rows, format)
    }
}

/// Renders a sequence `a(first), a(first+1), ...` as one-entry rows.
pub fn render_sequence<T: Display>(first: usize, values: &[T], format: TableFormat) -> String {
    let rows: Vec<(usize, Vec<String>)> = values
        .iter()
        .enumerate()
        .map(|(i, v)| (first + i, vec![v.to_string()]))
        .collect();
    render_rows(&rows, format)
}

fn render_rows(rows: &[(usize, Vec<String>)], format: TableFormat) -> String {
    let mut out = String::new();
    match format {
        TableFormat::Tsv => {
            for (_, r) in rows {
                out.push_str(&r.join("\t"));
                out.push('\n');
            }
        }
        TableFormat::Bfile => {
            for (i, v) in rows.iter().flat_map(|(_, r)| r).enumerate() {
                let _ = writeln!(out, "{} {}", i + 1, v);
            }
        }
        TableFormat::Pretty => {
            let width = rows
                .iter()
                .flat_map(|(_, r)| r)
                .map(String::len)
                .max()
                .unwrap_or(1);
            let label = rows.last().map_or(1, |(n, _)| n.to_string().len());
            for (n, r) in rows {
                let _ = write!(out, "{n:>label$} |");
                for v in r {
                    let _ = write!(out, " {v:>width$}");
                }
                out.push('\n');
            }
        }
    }
    out
}

impl<T: Display> Display for TriangleTable<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(TableFormat::Tsv))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal(last: usize) -> TriangleTable<u64> {
        TriangleTable::from_fn(0, last, |n, k| {
            (0..k as u64).fold(1, |acc, i| acc * (n as u64 - i) / (i + 1))
        })
    }

    #[test]
    fn shape_and_lookup() {
        let t = pascal(4);
        assert_eq!(t.row(4), Some(&[1, 4, 6, 4, 1][..]));
        assert_eq!(t.get(3, 2), Some(&3));
        assert_eq!(t.get(3, 4), None);
        assert_eq!(t.row(5), None);
        assert_eq!(t.end_row(), 5);
    }

    #[test]
    fn offset_rows() {
        let t = TriangleTable::new(1, vec![vec![1], vec![1, 1]]);
        assert_eq!(t.row(0), None);
        assert_eq!(t.row(2), Some(&[1, 1][..]));
    }

    #[test]
    #[should_panic]
    fn rejects_ragged_rows() {
        TriangleTable::new(0, vec![vec![1], vec![1]]);
    }

    #[test]
    fn formats() {
        let t = pascal(2);
        assert_eq!(t.render(TableFormat::Tsv), "1\n1\t1\n1\t2\t1\n");
        assert_eq!(
            t.render(TableFormat::Bfile),
            "1 1\n2 1\n3 1\n4 1\n5 2\n6 1\n"
        );
        assert_eq!(t.render(TableFormat::Pretty), "0 | 1\n1 | 1 1\n2 | 1 2 1\n");
        assert_eq!(
            render_sequence(0, &[1, 2], TableFormat::Bfile),
            "1 1\n2 2\n"
        );
    }

    #[test]
    fn format_parsing() {
        assert_eq!("bfile".parse::<TableFormat>(), Ok(TableFormat::Bfile));
        assert!("csv".parse::<TableFormat>().is_err());
    }
}
