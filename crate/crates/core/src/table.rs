//! Element carriers and total operation tables.
//!
//! Elements are plain `usize` indices into a [`Carrier`]; labels only matter
//! when reading or printing tables.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// An ordered list of distinct element labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Carrier {
    names: Vec<String>,
}

impl Carrier {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        let mut seen = HashSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateLabel(name.clone()));
            }
        }
        Ok(Self { names })
    }

    /// Labels `0, a, b, …, 1`: first element is the bottom, last the top.
    pub fn standard(size: usize) -> Self {
        assert!(size >= 1, "carrier must be non-empty");
        let names = (0..size)
            .map(|i| {
                if i == 0 {
                    "0".to_string()
                } else if i == size - 1 {
                    "1".to_string()
                } else if i <= 26 {
                    char::from(b'a' + (i - 1) as u8).to_string()
                } else {
                    format!("e{i}")
                }
            })
            .collect();
        Self { names }
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Iterator over all element indices.
    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }
}

/// A total unary operation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnaryOp {
    table: Vec<usize>,
}

impl UnaryOp {
    pub fn new(table: Vec<usize>) -> Result<Self> {
        let size = table.len();
        if let Some(&index) = table.iter().find(|&&v| v >= size) {
            return Err(Error::IndexOutOfRange { index, size });
        }
        Ok(Self { table })
    }

    pub fn from_fn(size: usize, f: impl Fn(usize) -> usize) -> Result<Self> {
        Self::new((0..size).map(f).collect())
    }

    pub fn identity(size: usize) -> Self {
        Self { table: (0..size).collect() }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.table
    }
}

/// A total binary operation stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryOp {
    size: usize,
    table: Vec<usize>,
}

impl BinaryOp {
    /// Builds from a flat row-major table of `size * size` entries.
    pub fn new(size: usize, table: Vec<usize>) -> Result<Self> {
        if table.len() != size * size {
            return Err(Error::TableShape { expected: size * size, found: table.len() });
        }
        if let Some(&index) = table.iter().find(|&&v| v >= size) {
            return Err(Error::IndexOutOfRange { index, size });
        }
        Ok(Self { size, table })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let size = rows.len();
        for row in rows {
            if row.len() != size {
                return Err(Error::TableShape { expected: size, found: row.len() });
            }
        }
        Self::new(size, rows.concat())
    }

    pub fn from_fn(size: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let table = (0..size).flat_map(|x| (0..size).map(move |y| (x, y))).map(|(x, y)| f(x, y)).collect();
        Self::new(size, table)
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> usize {
        self.table[x * self.size + y]
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.table[x * self.size..(x + 1) * self.size]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.table
    }

    /// First pair `(x, y)` with `x·y ≠ y·x`.
    pub fn commutativity_witness(&self) -> Option<(usize, usize)> {
        pairs(self.size).find(|&(x, y)| self.apply(x, y) != self.apply(y, x))
    }

    pub fn is_commutative(&self) -> bool {
        self.commutativity_witness().is_none()
    }
}

impl fmt::Display for BinaryOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in 0..self.size {
            let row: Vec<String> = self.row(x).iter().map(usize::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// All pairs over `0..n` in lexicographic order.
pub(crate) fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

/// All triples over `0..n` in lexicographic order.
pub(crate) fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_labels_rejected() {
        assert_eq!(Carrier::new(["0", "a", "0"]), Err(Error::DuplicateLabel("0".into())));
        assert_eq!(Carrier::new(Vec::<String>::new()), Err(Error::EmptyCarrier));
    }

    #[test]
    fn standard_labels() {
        assert_eq!(Carrier::standard(6).names(), ["0", "a", "b", "c", "d", "1"]);
        assert_eq!(Carrier::standard(2).names(), ["0", "1"]);
    }

    #[test]
    fn totality_enforced() {
        assert!(matches!(UnaryOp::new(vec![0, 2]), Err(Error::IndexOutOfRange { index: 2, size: 2 })));
        assert!(matches!(BinaryOp::new(2, vec![0, 1, 1]), Err(Error::TableShape { .. })));
        assert!(BinaryOp::from_rows(&[vec![0, 1], vec![1]]).is_err());
    }

    #[test]
    fn commutativity_witness_is_first_pair() {
        let op = BinaryOp::from_rows(&[vec![0, 1, 2], vec![0, 1, 1], vec![1, 1, 2]]).unwrap();
        assert_eq!(op.commutativity_witness(), Some((0, 1)));
        assert!(BinaryOp::from_fn(3, |x, y| x.max(y)).unwrap().is_commutative());
    }
}
