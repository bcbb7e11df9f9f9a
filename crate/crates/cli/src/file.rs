//! The algebra file format: one JSON document per structure.
//!
//! ```json
//! {
//!   "kind": "nmv" | "crp" | "ipp" | "residuated",
//!   "elements": ["0", "a", …, "1"],
//!   "zero": "0",
//!   "one": "1",                       // required unless kind = nmv
//!   "leq": [["0", "a"], …],           // required unless kind = nmv, forbidden for nmv
//!   "tables": { "<op>": [[…], …] | […] }
//! }
//! ```
//!
//! Required tables: `nmv` has `oplus` and `neg`; `crp` and `residuated` have
//! `otimes` and `to`; `ipp` has `otimes` and `neg`. Binary tables are rows
//! indexed by the declared element order, unary tables a single row.

use std::collections::BTreeMap;
use std::fmt;

use nmv_core::residuation::PosetAlgebra;
use nmv_core::{BinaryOp, Carrier, InvolutivePosetWithProduct, NmvAlgebra, PartialOrder, UnaryOp};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FileKind {
    Nmv,
    Crp,
    Ipp,
    Residuated,
}

impl FileKind {
    pub fn required_tables(self) -> [&'static str; 2] {
        match self {
            FileKind::Nmv => ["oplus", "neg"],
            FileKind::Crp | FileKind::Residuated => ["otimes", "to"],
            FileKind::Ipp => ["otimes", "neg"],
        }
    }

    fn name(self) -> &'static str {
        match self {
            FileKind::Nmv => "nmv",
            FileKind::Crp => "crp",
            FileKind::Ipp => "ipp",
            FileKind::Residuated => "residuated",
        }
    }
}

impl fmt::Display for FileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn is_unary(op: &str) -> bool {
    op == "neg"
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Table {
    Unary(Vec<String>),
    Binary(Vec<Vec<String>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub kind: FileKind,
    pub elements: Vec<String>,
    pub zero: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub one: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leq: Option<Vec<(String, String)>>,
    pub tables: BTreeMap<String, Table>,
}

#[derive(Debug, Error)]
pub enum FileError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown label {label:?} in {location}")]
    UnknownLabel { location: String, label: String },
    #[error("ragged table {table}: row {row} has {found} entries, expected {expected}")]
    RaggedTable { table: String, row: usize, expected: usize, found: usize },
    #[error("table {table} has {found} rows, expected {expected}")]
    WrongRowCount { table: String, expected: usize, found: usize },
    #[error("table {table} must be {expected}")]
    WrongShape { table: String, expected: &'static str },
    #[error("{kind} files require table {table:?}")]
    MissingTable { kind: FileKind, table: &'static str },
    #[error("{kind} files do not take table {table:?}")]
    UnexpectedTable { kind: FileKind, table: String },
    #[error("nmv files must not give `leq`; the order is induced by the operations")]
    LeqNotAllowed,
    #[error("{0} files require `leq`")]
    LeqRequired(FileKind),
    #[error("{0} files require `one`")]
    OneRequired(FileKind),
    #[error("`leq` is not a partial order: {0}")]
    InvalidOrder(nmv_core::Error),
    #[error("expected a {expected} file, found {found}")]
    WrongKind { expected: &'static str, found: FileKind },
    #[error(transparent)]
    Structure(#[from] nmv_core::Error),
}

/// Parses and structurally validates an algebra file.
pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile, FileError> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| FileError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.validate()?;
    Ok(file)
}

impl AlgebraFile {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("algebra files serialize")
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("algebra files serialize")
    }

    pub fn carrier(&self) -> Result<Carrier, FileError> {
        Carrier::new(self.elements.iter().cloned()).map_err(|e| match e {
            nmv_core::Error::DuplicateLabel(l) => FileError::DuplicateLabel(l),
            other => FileError::Structure(other),
        })
    }

    fn index(&self, label: &str, location: impl FnOnce() -> String) -> Result<usize, FileError> {
        self.elements
            .iter()
            .position(|e| e == label)
            .ok_or_else(|| FileError::UnknownLabel { location: location(), label: label.to_string() })
    }

    pub fn validate(&self) -> Result<(), FileError> {
        self.carrier()?;
        let n = self.elements.len();
        self.index(&self.zero, || "zero".into())?;
        if let Some(one) = &self.one {
            self.index(one, || "one".into())?;
        } else if self.kind != FileKind::Nmv {
            return Err(FileError::OneRequired(self.kind));
        }
        for name in self.tables.keys() {
            if !self.kind.required_tables().contains(&name.as_str()) {
                return Err(FileError::UnexpectedTable { kind: self.kind, table: name.clone() });
            }
        }
        for required in self.kind.required_tables() {
            let table =
                self.tables.get(required).ok_or(FileError::MissingTable { kind: self.kind, table: required })?;
            match (is_unary(required), table) {
                (true, Table::Unary(row)) => {
                    if row.len() != n {
                        return Err(FileError::RaggedTable {
                            table: required.into(),
                            row: 0,
                            expected: n,
                            found: row.len(),
                        });
                    }
                    for (i, label) in row.iter().enumerate() {
                        self.index(label, || format!("{required}[{i}]"))?;
                    }
                }
                (false, Table::Binary(rows)) => {
                    if rows.len() != n {
                        return Err(FileError::WrongRowCount {
                            table: required.into(),
                            expected: n,
                            found: rows.len(),
                        });
                    }
                    for (r, row) in rows.iter().enumerate() {
                        if row.len() != n {
                            return Err(FileError::RaggedTable {
                                table: required.into(),
                                row: r,
                                expected: n,
                                found: row.len(),
                            });
                        }
                        for (c, label) in row.iter().enumerate() {
                            self.index(label, || format!("{required}[{r}][{c}]"))?;
                        }
                    }
                }
                (true, _) => return Err(FileError::WrongShape { table: required.into(), expected: "a single row" }),
                (false, _) => return Err(FileError::WrongShape { table: required.into(), expected: "a list of rows" }),
            }
        }
        match (&self.leq, self.kind) {
            (Some(_), FileKind::Nmv) => return Err(FileError::LeqNotAllowed),
            (None, FileKind::Nmv) => {}
            (None, kind) => return Err(FileError::LeqRequired(kind)),
            (Some(_), _) => {
                self.order()?;
            }
        }
        Ok(())
    }

    fn unary(&self, name: &str) -> Result<UnaryOp, FileError> {
        let Some(Table::Unary(row)) = self.tables.get(name) else {
            return Err(FileError::WrongShape { table: name.into(), expected: "a single row" });
        };
        let idx = row
            .iter()
            .enumerate()
            .map(|(i, l)| self.index(l, || format!("{name}[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(UnaryOp::new(idx)?)
    }

    fn binary(&self, name: &str) -> Result<BinaryOp, FileError> {
        let Some(Table::Binary(rows)) = self.tables.get(name) else {
            return Err(FileError::WrongShape { table: name.into(), expected: "a list of rows" });
        };
        let mut idx = Vec::with_capacity(rows.len());
        for (r, row) in rows.iter().enumerate() {
            let row = row
                .iter()
                .enumerate()
                .map(|(c, l)| self.index(l, || format!("{name}[{r}][{c}]")))
                .collect::<Result<Vec<_>, _>>()?;
            idx.push(row);
        }
        Ok(BinaryOp::from_rows(&idx)?)
    }

    /// The raw `⊕`, `¬` and zero of an nmv file, without checking axioms.
    pub fn nmv_tables(&self) -> Result<(BinaryOp, UnaryOp, usize), FileError> {
        self.expect_kind(&[FileKind::Nmv], "nmv")?;
        Ok((self.binary("oplus")?, self.unary("neg")?, self.index(&self.zero, || "zero".into())?))
    }

    pub fn to_nmv(&self) -> Result<NmvAlgebra, FileError> {
        let (oplus, neg, zero) = self.nmv_tables()?;
        let alg = NmvAlgebra::new(self.carrier()?, oplus, neg, zero)?;
        if let Some(one) = &self.one {
            let one = self.index(one, || "one".into())?;
            if one != alg.one() {
                return Err(FileError::UnknownLabel {
                    location: "one (must equal ¬0)".into(),
                    label: self.elements[one].clone(),
                });
            }
        }
        Ok(alg)
    }

    /// The declared order: reflexive closure of the `leq` pairs.
    pub fn order(&self) -> Result<PartialOrder, FileError> {
        let pairs = self.leq.as_ref().ok_or(FileError::LeqRequired(self.kind))?;
        let idx = pairs
            .iter()
            .enumerate()
            .map(|(i, (x, y))| Ok((self.index(x, || format!("leq[{i}]"))?, self.index(y, || format!("leq[{i}]"))?)))
            .collect::<Result<Vec<_>, FileError>>()?;
        PartialOrder::from_pairs(self.elements.len(), &idx).map_err(FileError::InvalidOrder)
    }

    fn one_index(&self) -> Result<usize, FileError> {
        let one = self.one.as_ref().ok_or(FileError::OneRequired(self.kind))?;
        self.index(one, || "one".into())
    }

    /// Order, `⊗`, `→` and constants of a crp or residuated file.
    pub fn to_poset_algebra(&self) -> Result<PosetAlgebra, FileError> {
        self.expect_kind(&[FileKind::Crp, FileKind::Residuated], "crp or residuated")?;
        Ok(PosetAlgebra::new(
            self.carrier()?,
            self.order()?,
            self.binary("otimes")?,
            self.binary("to")?,
            self.index(&self.zero, || "zero".into())?,
            self.one_index()?,
        )?)
    }

    /// Order, `¬`, `⊗` and constants of an ipp file, unvalidated.
    pub fn ipp_parts(&self) -> Result<(Carrier, PartialOrder, UnaryOp, BinaryOp, usize, usize), FileError> {
        self.expect_kind(&[FileKind::Ipp], "ipp")?;
        Ok((
            self.carrier()?,
            self.order()?,
            self.unary("neg")?,
            self.binary("otimes")?,
            self.index(&self.zero, || "zero".into())?,
            self.one_index()?,
        ))
    }

    pub fn to_ipp(&self) -> Result<InvolutivePosetWithProduct, FileError> {
        let (carrier, order, neg, otimes, zero, one) = self.ipp_parts()?;
        Ok(InvolutivePosetWithProduct::new(carrier, order, neg, otimes, zero, one)?)
    }

    fn expect_kind(&self, kinds: &[FileKind], expected: &'static str) -> Result<(), FileError> {
        if kinds.contains(&self.kind) {
            Ok(())
        } else {
            Err(FileError::WrongKind { expected, found: self.kind })
        }
    }

    pub fn from_nmv(alg: &NmvAlgebra) -> Self {
        let c = alg.carrier();
        let mut tables = BTreeMap::new();
        tables.insert("oplus".into(), binary_table(c, alg.oplus_table()));
        tables.insert("neg".into(), unary_table(c, alg.neg_table()));
        Self {
            kind: FileKind::Nmv,
            elements: c.names().to_vec(),
            zero: c.name(alg.zero()).into(),
            one: None,
            leq: None,
            tables,
        }
    }

    pub fn from_poset_algebra(p: &PosetAlgebra, kind: FileKind) -> Self {
        assert!(matches!(kind, FileKind::Crp | FileKind::Residuated));
        let c = p.carrier();
        let mut tables = BTreeMap::new();
        tables.insert("otimes".into(), binary_table(c, p.otimes_table()));
        tables.insert("to".into(), binary_table(c, p.imp_table()));
        Self {
            kind,
            elements: c.names().to_vec(),
            zero: c.name(p.zero()).into(),
            one: Some(c.name(p.one()).into()),
            leq: Some(strict_pairs(c, p.order())),
            tables,
        }
    }

    pub fn from_ipp(p: &InvolutivePosetWithProduct) -> Self {
        let c = p.carrier();
        let mut tables = BTreeMap::new();
        tables.insert("otimes".into(), binary_table(c, p.otimes_table()));
        tables.insert("neg".into(), unary_table(c, p.neg_table()));
        Self {
            kind: FileKind::Ipp,
            elements: c.names().to_vec(),
            zero: c.name(p.zero()).into(),
            one: Some(c.name(p.one()).into()),
            leq: Some(strict_pairs(c, p.order())),
            tables,
        }
    }
}

pub fn binary_table(c: &Carrier, op: &BinaryOp) -> Table {
    Table::Binary((0..op.size()).map(|x| op.row(x).iter().map(|&v| c.name(v).to_string()).collect()).collect())
}

pub fn unary_table(c: &Carrier, op: &UnaryOp) -> Table {
    Table::Unary(op.as_slice().iter().map(|&v| c.name(v).to_string()).collect())
}

fn strict_pairs(c: &Carrier, order: &PartialOrder) -> Vec<(String, String)> {
    order
        .pairs()
        .into_iter()
        .filter(|(x, y)| x != y)
        .map(|(x, y)| (c.name(x).to_string(), c.name(y).to_string()))
        .collect()
}
