//! Human-readable and JSON renderings of check reports.

use std::fmt::Write as _;

use nmv_core::{Carrier, CheckReport, Verdict};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct LawEntry {
    pub id: String,
    pub name: String,
    pub anchor: String,
    /// `pass`, `fail` or `n/a`.
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Section {
    pub title: String,
    /// Whether failures in this section fail the command.
    pub gating: bool,
    pub laws: Vec<LawEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub subject: String,
    pub sections: Vec<Section>,
}

impl ReportDocument {
    pub fn new(subject: impl Into<String>) -> Self {
        Self { subject: subject.into(), sections: Vec::new() }
    }

    pub fn section(&mut self, title: &str, gating: bool, report: &CheckReport, carrier: &Carrier) {
        let laws = report
            .entries()
            .iter()
            .map(|e| {
                let (verdict, witness) = match &e.verdict {
                    Verdict::Pass => ("pass", None),
                    Verdict::NotApplicable => ("n/a", None),
                    Verdict::Fail(w) => {
                        ("fail", Some(w.elements().iter().map(|&i| carrier.name(i).to_string()).collect()))
                    }
                };
                LawEntry { id: e.law.id.into(), name: e.law.name.into(), anchor: e.law.anchor.into(), verdict, witness }
            })
            .collect();
        self.sections.push(Section { title: title.into(), gating, laws });
    }

    /// True when every law in a gating section passes or is not applicable.
    pub fn passes(&self) -> bool {
        self.sections.iter().filter(|s| s.gating).all(|s| s.laws.iter().all(|l| l.verdict != "fail"))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.subject).unwrap();
        for section in &self.sections {
            let suffix = if section.gating { "" } else { " (informational)" };
            writeln!(out, "\n{}{suffix}:", section.title).unwrap();
            let width = section.laws.iter().map(|l| l.id.len()).max().unwrap_or(0);
            for law in &section.laws {
                let tag = match law.verdict {
                    "pass" => "PASS",
                    "fail" => "FAIL",
                    _ => "N/A ",
                };
                write!(out, "  {tag}  {:width$}  {}  [{}]", law.id, law.name, law.anchor).unwrap();
                if let Some(w) = &law.witness {
                    write!(out, "  witness ({})", w.join(", ")).unwrap();
                }
                out.push('\n');
            }
        }
        let verdict = if self.passes() { "all checks pass" } else { "some checks fail" };
        writeln!(out, "\nresult: {verdict}").unwrap();
        out
    }
}
