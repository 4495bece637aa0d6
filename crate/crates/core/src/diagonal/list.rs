//! Row lists for diagonalization.

use std::collections::HashMap;
use std::path::Path;
use std::sync::Arc;

use num_traits::{One, Signed};

use crate::numerics::{parse_rational, rational_to_stream, DigitStream, Rational};

use super::table2::table2_row;
use super::DiagonalError;

enum ListImpl {
    /// The unbounded special list: row n is `n − 1` ones then zeros.
    Table2,
    Rows(Vec<DigitStream>),
}

/// A list of digit-stream rows, indexed from 1.
#[derive(Clone)]
pub struct ListView {
    inner: Arc<ListImpl>,
    name: String,
}

impl ListView {
    pub fn table2() -> Self {
        Self {
            inner: Arc::new(ListImpl::Table2),
            name: "table2".to_string(),
        }
    }

    pub fn from_rows(name: impl Into<String>, rows: Vec<DigitStream>) -> Self {
        Self {
            inner: Arc::new(ListImpl::Rows(rows)),
            name: name.into(),
        }
    }

    /// Loads a list file: either the single keyword `table2`, or one row
    /// value per line (rational or decimal literal in `[0, 1)`), with `#`
    /// comments.
    pub fn from_file(path: &Path) -> Result<Self, DiagonalError> {
        let text = std::fs::read_to_string(path)?;
        let mut lines = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if !line.is_empty() {
                lines.push((lineno + 1, line.to_string()));
            }
        }
        if lines.len() == 1 && lines[0].1 == "table2" {
            return Ok(Self::table2());
        }
        let mut rows = Vec::new();
        for (lineno, content) in lines {
            let value = parse_rational(&content)
                .ok()
                .filter(|q| !q.is_negative() && *q < Rational::one())
                .ok_or(DiagonalError::ListFile {
                    line: lineno,
                    content: content.clone(),
                })?;
            rows.push(rational_to_stream(&value).expect("value checked in [0, 1)"));
        }
        Ok(Self::from_rows(path.display().to_string(), rows))
    }

    /// Number of rows, `None` when unbounded.
    pub fn len(&self) -> Option<u64> {
        match &*self.inner {
            ListImpl::Table2 => None,
            ListImpl::Rows(rows) => Some(rows.len() as u64),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == Some(0)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn row_at(&self, n: u64) -> Result<DigitStream, DiagonalError> {
        assert!(n >= 1, "rows are 1-based");
        match &*self.inner {
            ListImpl::Table2 => Ok(table2_row(n)),
            ListImpl::Rows(rows) => rows
                .get(n as usize - 1)
                .cloned()
                .ok_or(DiagonalError::RowOutOfRange {
                    n,
                    len: rows.len() as u64,
                }),
        }
    }

    /// Flags two rows that agree on every digit up to `digit_budget`.
    /// Injectivity beyond the inspected window is not decidable and not
    /// claimed.
    pub fn check_injective(&self, rows: u64, digit_budget: u64) -> Result<(), DiagonalError> {
        let mut seen: HashMap<Vec<u8>, u64> = HashMap::new();
        for n in 1..=rows {
            let prefix = self.row_at(n)?.prefix(digit_budget);
            if let Some(&earlier) = seen.get(&prefix) {
                return Err(DiagonalError::NotInjective {
                    row_a: earlier,
                    row_b: n,
                    budget: digit_budget,
                });
            }
            seen.insert(prefix, n);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;
    use std::io::Write;

    #[test]
    fn table2_list_is_unbounded() {
        let list = ListView::table2();
        assert_eq!(list.len(), None);
        assert_eq!(list.row_at(3).unwrap().prefix(5), vec![1, 1, 0, 0, 0]);
    }

    #[test]
    fn list_file_with_keyword_loads_the_special_list() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "# the special list").unwrap();
        writeln!(f, "table2").unwrap();
        let list = ListView::from_file(f.path()).unwrap();
        assert_eq!(list.len(), None);
        assert_eq!(list.name(), "table2");
    }

    #[test]
    fn list_file_with_rows_loads_streams() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "0.25").unwrap();
        writeln!(f, "1/3").unwrap();
        writeln!(f, "0").unwrap();
        let list = ListView::from_file(f.path()).unwrap();
        assert_eq!(list.len(), Some(3));
        assert_eq!(list.row_at(1).unwrap().prefix(3), vec![2, 5, 0]);
        assert_eq!(list.row_at(2).unwrap().prefix(3), vec![3, 3, 3]);
    }

    #[test]
    fn list_file_rejects_rows_outside_unit_interval() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "0.5").unwrap();
        writeln!(f, "3/2").unwrap();
        assert!(matches!(
            ListView::from_file(f.path()),
            Err(DiagonalError::ListFile { line: 2, .. })
        ));
    }

    #[test]
    fn injectivity_window_flags_identical_prefixes() {
        let rows = vec![
            rational_to_stream(&rat(1, 3)).unwrap(),
            rational_to_stream(&rat(1, 4)).unwrap(),
            rational_to_stream(&rat(1, 3)).unwrap(),
        ];
        let list = ListView::from_rows("dupes", rows);
        match list.check_injective(3, 20) {
            Err(DiagonalError::NotInjective { row_a, row_b, .. }) => {
                assert_eq!((row_a, row_b), (1, 3));
            }
            other => panic!("expected injectivity failure, got {other:?}"),
        }
        assert!(list.check_injective(2, 20).is_ok());
    }

    #[test]
    fn table2_rows_are_injective_to_any_window() {
        ListView::table2().check_injective(200, 200).unwrap();
    }
}
