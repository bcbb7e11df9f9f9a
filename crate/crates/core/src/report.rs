//! Structured pass/fail reports for law checks.

use std::fmt;

/// A tuple of element indices at which a law fails.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Witness(pub Vec<usize>);

impl Witness {
    pub fn one(x: usize) -> Self {
        Self(vec![x])
    }

    pub fn pair(x: usize, y: usize) -> Self {
        Self(vec![x, y])
    }

    pub fn triple(x: usize, y: usize, z: usize) -> Self {
        Self(vec![x, y, z])
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    /// Renders the tuple with element labels, e.g. `(a, c, b)`.
    pub fn labelled(&self, names: &[String]) -> String {
        let parts: Vec<&str> = self.0.iter().map(|&i| names[i].as_str()).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl From<(usize, usize)> for Witness {
    fn from((x, y): (usize, usize)) -> Self {
        Self::pair(x, y)
    }
}

impl From<(usize, usize, usize)> for Witness {
    fn from((x, y, z): (usize, usize, usize)) -> Self {
        Self::triple(x, y, z)
    }
}

/// Identifies a law: a stable machine id, a human name and where it comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Law {
    pub id: &'static str,
    pub name: &'static str,
    pub anchor: &'static str,
}

impl Law {
    pub const fn new(id: &'static str, name: &'static str, anchor: &'static str) -> Self {
        Self { id, name, anchor }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Witness),
    /// The law is conditional and its hypotheses do not hold.
    NotApplicable,
}

impl Verdict {
    pub fn from_witness(witness: Option<Witness>) -> Self {
        witness.map_or(Verdict::Pass, Verdict::Fail)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawResult {
    pub law: Law,
    pub verdict: Verdict,
}

/// One entry per checked law, in check order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    entries: Vec<LawResult>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a verdict. Panics if the law was already recorded.
    pub fn record(&mut self, law: Law, verdict: Verdict) {
        assert!(self.get(law.id).is_none(), "law {} recorded twice", law.id);
        self.entries.push(LawResult { law, verdict });
    }

    pub fn record_witness(&mut self, law: Law, witness: Option<Witness>) {
        self.record(law, Verdict::from_witness(witness));
    }

    pub fn extend(&mut self, other: CheckReport) {
        for entry in other.entries {
            self.record(entry.law, entry.verdict);
        }
    }

    pub fn entries(&self) -> &[LawResult] {
        &self.entries
    }

    pub fn get(&self, id: &str) -> Option<&LawResult> {
        self.entries.iter().find(|e| e.law.id == id)
    }

    /// True when no entry failed. Not-applicable entries count as passing.
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| !e.verdict.is_fail())
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawResult> {
        self.entries.iter().filter(|e| e.verdict.is_fail())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub(crate) fn failures_summary(&self) -> String {
        let parts: Vec<String> = self
            .failures()
            .map(|e| match &e.verdict {
                Verdict::Fail(w) => format!("{} at {w}", e.law.id),
                _ => unreachable!(),
            })
            .collect();
        parts.join("; ")
    }
}
