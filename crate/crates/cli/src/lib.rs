//! The `nmv` command-line tool: checks, derivations, conversions,
//! enumeration and Hasse diagrams for finite algebra files.
//!
//! Exit codes: `0` when every check passes, `1` when a check or a conversion
//! hypothesis fails, `2` for usage, I/O and parse errors.

pub mod dot;
pub mod file;
pub mod report;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use nmv_core::nmv::{self, check_nmv_axioms, check_sai, derive_ops};
use nmv_core::residuation::{
    check_conditional_adjointness_lemmas, check_crp, check_crp_consequences, check_properties, check_residuated,
    property_report, PosetAlgebra,
};
use nmv_core::search::{self, canonical_form, EnumerationTask, Kind, Predicate};
use nmv_core::transforms::{self, residuated_hypotheses};
use nmv_core::{Carrier, CheckReport, CondResPoset, NmvAlgebra, ResiduatedPoset};
use serde_json::json;

use crate::file::{binary_table, parse_algebra_file, AlgebraFile, FileError, FileKind, Table};
use crate::report::ReportDocument;

pub use crate::dot::emit_dot;

#[derive(Debug, Parser)]
#[command(name = "nmv", version, about = "Finite NMV-algebras and residuated posets")]
pub struct Cli {
    /// Machine-readable JSON reports.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Nmv,
    Sai,
    Crp,
    Residuated,
    Ipp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Via {
    NmvToCrp,
    CrpToNmv,
    PosetToResiduated,
    ResiduatedToPoset,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumKind {
    Nmv,
    NmvSai,
    Crp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DerivedOp {
    Otimes,
    To,
    Sqcup,
    Sqcap,
    Sections,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the laws of a structure.
    Check {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: CheckKind,
    },
    /// Print derived operation tables of an NMV-algebra.
    Derive {
        file: PathBuf,
        #[arg(long, value_enum, value_delimiter = ',')]
        ops: Vec<DerivedOp>,
    },
    /// Convert a structure into the corresponding one.
    Convert {
        file: PathBuf,
        #[arg(long, value_enum)]
        via: Via,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enumerate NMV-algebras of a given size.
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long, value_enum, default_value = "nmv")]
        kind: EnumKind,
        /// Only algebras with antitone section involutions.
        #[arg(long)]
        sai: bool,
        #[arg(long)]
        up_to_iso: bool,
        #[arg(long)]
        count_only: bool,
    },
    /// Search for algebras satisfying a predicate, with witnesses.
    Find {
        #[arg(long, required_unless_present = "file")]
        size: Option<usize>,
        /// Test a single algebra file instead of enumerating.
        #[arg(long, conflicts_with = "size")]
        file: Option<PathBuf>,
        #[arg(long)]
        predicate: String,
        #[arg(long)]
        up_to_iso: bool,
    },
    /// Write the Hasse diagram of a structure's order as DOT.
    Hasse {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CommandError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    File(#[from] FileError),
    #[error("{0}")]
    Core(#[from] nmv_core::Error),
}

impl CommandError {
    fn exit_code(&self) -> i32 {
        match self {
            CommandError::Core(nmv_core::Error::SizeOutOfRange(_) | nmv_core::Error::UnknownPredicate(..)) => 2,
            CommandError::Core(_) | CommandError::File(FileError::Structure(_)) => 1,
            _ => 2,
        }
    }
}

type CmdResult = Result<i32, CommandError>;

/// Runs the tool on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    match &cli.command {
        Command::Check { file, kind } => check(file, *kind, cli.json, out),
        Command::Derive { file, ops } => derive(file, ops, cli.json, out),
        Command::Convert { file, via, output } => convert(file, *via, output.as_deref(), out),
        Command::Enumerate { size, kind, sai, up_to_iso, count_only } => {
            let kind = match (kind, sai) {
                (EnumKind::Nmv, true) | (EnumKind::NmvSai, _) => Kind::NmvSai,
                (EnumKind::Nmv, false) => Kind::Nmv,
                (EnumKind::Crp, _) => Kind::Crp,
            };
            let task = EnumerationTask { size: *size, kind, up_to_iso: *up_to_iso, predicate: None };
            enumerate(&task, *count_only, cli.json, out)
        }
        Command::Find { size, file, predicate, up_to_iso } => {
            let predicate: Predicate =
                predicate.parse().map_err(|e: nmv_core::Error| CommandError::Usage(e.to_string()))?;
            find(*size, file.as_deref(), predicate, *up_to_iso, cli.json, out)
        }
        Command::Hasse { file, output } => hasse(file, output.as_deref(), out),
    }
}

fn read_file(path: &Path) -> Result<AlgebraFile, CommandError> {
    let text = fs::read_to_string(path).map_err(|source| CommandError::Io { path: path.into(), source })?;
    parse_algebra_file(&text).map_err(|e| match e {
        FileError::Structure(_) => CommandError::File(e),
        other => CommandError::Usage(format!("{}: {other}", path.display())),
    })
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CommandError> {
    out.write_all(text.as_bytes()).map_err(|source| CommandError::Io { path: "<stdout>".into(), source })
}

fn write_output(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), CommandError> {
    match path {
        Some(path) => fs::write(path, text).map_err(|source| CommandError::Io { path: path.into(), source }),
        None => emit(out, text),
    }
}

fn finish_report(doc: &ReportDocument, json: bool, out: &mut dyn Write) -> CmdResult {
    emit(out, &if json { doc.to_json() + "\n" } else { doc.render_text() })?;
    Ok(if doc.passes() { 0 } else { 1 })
}

fn crp_sections(doc: &mut ReportDocument, parts: &PosetAlgebra) {
    let carrier = parts.carrier().clone();
    doc.section(
        "conditionally residuated poset",
        true,
        &check_crp(parts.order(), parts.otimes_table(), parts.imp_table(), parts.zero(), parts.one()),
        &carrier,
    );
    doc.section("properties", false, &property_report(parts), &carrier);
    if let Ok(crp) = CondResPoset::new(parts.clone()) {
        let flags = check_properties(&crp);
        doc.section("consequences", false, &check_crp_consequences(&crp, &flags), &carrier);
    }
}

fn check(path: &Path, kind: CheckKind, json: bool, out: &mut dyn Write) -> CmdResult {
    let file = read_file(path)?;
    let carrier = file.carrier()?;
    let mut doc = ReportDocument::new(format!("{}: {:?} check", path.display(), kind).to_lowercase());
    match kind {
        CheckKind::Nmv | CheckKind::Sai => {
            let (oplus, neg, zero) = file.nmv_tables()?;
            let axioms = check_nmv_axioms(&oplus, &neg, zero);
            doc.section("NMV axioms", true, &axioms, &carrier);
            if kind == CheckKind::Sai {
                let mut sai = CheckReport::new();
                match NmvAlgebra::new(carrier.clone(), oplus, neg, zero) {
                    Ok(alg) => {
                        sai.record_witness(nmv::laws::SAI, check_sai(&alg).err());
                        doc.section("section involutions", true, &sai, &carrier);
                        if let Ok(lemmas) = check_conditional_adjointness_lemmas(&alg) {
                            doc.section("conditional adjointness", false, &lemmas, &carrier);
                        }
                    }
                    Err(_) => {
                        sai.record(nmv::laws::SAI, nmv_core::Verdict::NotApplicable);
                        doc.section("section involutions", true, &sai, &carrier);
                    }
                }
            }
        }
        CheckKind::Crp => match file.kind {
            FileKind::Nmv => {
                let alg = file.to_nmv()?;
                let (crp, _) = transforms::nmv_to_crp(&alg)?;
                crp_sections(&mut doc, crp.parts());
            }
            _ => crp_sections(&mut doc, &file.to_poset_algebra()?),
        },
        CheckKind::Residuated => {
            let parts = match file.kind {
                FileKind::Nmv => transforms::nmv_to_crp(&file.to_nmv()?)?.0.parts().clone(),
                _ => file.to_poset_algebra()?,
            };
            doc.section("residuated poset", true, &check_residuated(&parts), &carrier);
            if let Ok(res) = ResiduatedPoset::new(parts) {
                doc.section("involutive hypotheses", false, &residuated_hypotheses(&res), &carrier);
            }
        }
        CheckKind::Ipp => {
            let (carrier, order, neg, otimes, zero, one) = file.ipp_parts()?;
            let ipp = nmv_core::InvolutivePosetWithProduct::new(carrier.clone(), order, neg, otimes, zero, one);
            match ipp {
                Ok(p) => {
                    let mut report = p.hypotheses();
                    report.record_witness(transforms::laws::RESIDUATION_CONDITION, p.residuation_condition().err());
                    doc.section("involutive poset with product", true, &report, &carrier);
                }
                Err(nmv_core::Error::Hypothesis { hypothesis, witness }) => {
                    let mut report = CheckReport::new();
                    let law = nmv_core::Law::new(hypothesis, "structural hypothesis", "involutive poset with product");
                    report.record_witness(law, Some(witness));
                    doc.section("involutive poset with product", true, &report, &carrier);
                }
                Err(e) => return Err(e.into()),
            }
        }
    }
    finish_report(&doc, json, out)
}

fn render_binary(carrier: &Carrier, symbol: &str, table: &Table) -> String {
    let Table::Binary(rows) = table else { unreachable!() };
    let names = carrier.names();
    let w = names.iter().map(|n| n.chars().count()).max().unwrap_or(1).max(symbol.chars().count());
    let mut s = format!("{symbol:>w$} |");
    for n in names {
        s += &format!(" {n:>w$}");
    }
    s.push('\n');
    s += &"-".repeat(w + 1);
    s += "+";
    s += &"-".repeat((w + 1) * names.len());
    s.push('\n');
    for (name, row) in names.iter().zip(rows) {
        s += &format!("{name:>w$} |");
        for v in row {
            s += &format!(" {v:>w$}");
        }
        s.push('\n');
    }
    s
}

fn derive(path: &Path, ops: &[DerivedOp], json: bool, out: &mut dyn Write) -> CmdResult {
    let file = read_file(path)?;
    let alg = file.to_nmv()?;
    let c = alg.carrier();
    let (derived, sections) = derive_ops(&alg);
    let ops = if ops.is_empty() {
        vec![DerivedOp::Otimes, DerivedOp::To, DerivedOp::Sqcup, DerivedOp::Sqcap, DerivedOp::Sections]
    } else {
        ops.to_vec()
    };
    let mut doc = serde_json::Map::new();
    let mut text = String::new();
    for op in ops {
        let (key, symbol, table) = match op {
            DerivedOp::Otimes => ("otimes", "⊗", &derived.otimes),
            DerivedOp::To => ("to", "→", &derived.imp),
            DerivedOp::Sqcup => ("sqcup", "⊔", &derived.sqcup),
            DerivedOp::Sqcap => ("sqcap", "⊓", &derived.sqcap),
            DerivedOp::Sections => {
                let mut maps = serde_json::Map::new();
                text += "sections x ↦ x^a on [a, 1]:\n";
                for a in c.elements() {
                    let pairs: Vec<(String, String)> = sections
                        .map(a)
                        .into_iter()
                        .map(|(x, v)| (c.name(x).to_string(), c.name(v).to_string()))
                        .collect();
                    let line: Vec<String> = pairs.iter().map(|(x, v)| format!("{x}↦{v}")).collect();
                    text += &format!("  x^{}: {}\n", c.name(a), line.join("  "));
                    maps.insert(
                        c.name(a).into(),
                        serde_json::Value::Object(pairs.into_iter().map(|(x, v)| (x, json!(v))).collect()),
                    );
                }
                text.push('\n');
                doc.insert("sections".into(), serde_json::Value::Object(maps));
                continue;
            }
        };
        let table = binary_table(c, table);
        text += &render_binary(c, symbol, &table);
        text.push('\n');
        doc.insert(key.into(), serde_json::to_value(&table).expect("tables serialize"));
    }
    if json {
        emit(out, &(serde_json::to_string_pretty(&doc).expect("json") + "\n"))?;
    } else {
        if text.ends_with("\n\n") {
            text.pop();
        }
        emit(out, &text)?;
    }
    Ok(0)
}

fn convert(path: &Path, via: Via, output: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    let file = read_file(path)?;
    let result = match via {
        Via::NmvToCrp => {
            let (crp, _) = transforms::nmv_to_crp(&file.to_nmv()?)?;
            AlgebraFile::from_poset_algebra(crp.parts(), FileKind::Crp)
        }
        Via::CrpToNmv => {
            let crp = CondResPoset::new(file.to_poset_algebra()?)?;
            AlgebraFile::from_nmv(&transforms::crp_to_nmv(&crp)?)
        }
        Via::PosetToResiduated => {
            let res = transforms::poset_to_residuated(&file.to_ipp()?)?;
            AlgebraFile::from_poset_algebra(res.parts(), FileKind::Residuated)
        }
        Via::ResiduatedToPoset => {
            let res = ResiduatedPoset::new(file.to_poset_algebra()?)?;
            let (ipp, _) = transforms::residuated_to_poset(&res)?;
            AlgebraFile::from_ipp(&ipp)
        }
    };
    write_output(output, &(result.to_json() + "\n"), out)?;
    Ok(0)
}

fn enumerate(task: &EnumerationTask, count_only: bool, json: bool, out: &mut dyn Write) -> CmdResult {
    let result = search::enumerate(task)?;
    if count_only {
        let text = if json {
            json!({ "size": task.size, "count": result.count() }).to_string()
        } else {
            result.count().to_string()
        };
        emit(out, &(text + "\n"))?;
        return Ok(0);
    }
    for alg in &result.algebras {
        let file = match task.kind {
            Kind::Crp => AlgebraFile::from_poset_algebra(transforms::nmv_to_crp(alg)?.0.parts(), FileKind::Crp),
            _ => AlgebraFile::from_nmv(alg),
        };
        emit(out, &(file.to_json_line() + "\n"))?;
    }
    Ok(0)
}

fn find(
    size: Option<usize>,
    path: Option<&Path>,
    predicate: Predicate,
    up_to_iso: bool,
    json: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let found: Vec<(NmvAlgebra, Vec<nmv_core::Witness>)> = match (path, size) {
        (Some(path), _) => {
            let alg = read_file(path)?.to_nmv()?;
            let witnesses = search::predicate_witnesses(&alg, predicate);
            if witnesses.is_empty() {
                vec![]
            } else {
                vec![(alg, witnesses)]
            }
        }
        (None, Some(size)) => {
            let task = EnumerationTask { size, kind: Kind::Nmv, up_to_iso, predicate: None };
            search::find_counterexamples(&task, predicate)?.into_iter().map(|c| (c.algebra, c.witnesses)).collect()
        }
        (None, None) => return Err(CommandError::Usage("either --size or --file is required".into())),
    };
    let scope = match (path, size) {
        (Some(p), _) => p.display().to_string(),
        (None, Some(n)) => format!("size {n}{}", if up_to_iso { " up to isomorphism" } else { "" }),
        _ => unreachable!(),
    };
    if json {
        let items: Vec<_> = found
            .iter()
            .map(|(alg, ws)| {
                let c = alg.carrier();
                json!({
                    "canonical_form": canonical_form(alg).to_string(),
                    "algebra": AlgebraFile::from_nmv(alg),
                    "witnesses": ws.iter().map(|w| w.elements().iter().map(|&i| c.name(i)).collect::<Vec<_>>()).collect::<Vec<_>>(),
                })
            })
            .collect();
        let doc = json!({ "predicate": predicate.name(), "scope": scope, "count": found.len(), "results": items });
        emit(out, &(serde_json::to_string_pretty(&doc).expect("json") + "\n"))?;
    } else {
        let mut text = format!("predicate {predicate}, {scope}: {} found\n", found.len());
        for (i, (alg, ws)) in found.iter().enumerate() {
            text += &format!("#{} {}\n", i + 1, canonical_form(alg));
            let names = alg.carrier().names();
            for w in ws {
                text += &format!("  witness {}\n", w.labelled(names));
            }
        }
        emit(out, &text)?;
    }
    Ok(0)
}

fn hasse(path: &Path, output: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    let file = read_file(path)?;
    let order = match file.kind {
        FileKind::Nmv => file.to_nmv()?.induced_order().clone(),
        _ => file.order()?,
    };
    write_output(output, &emit_dot(&order, &file.elements), out)?;
    Ok(0)
}
