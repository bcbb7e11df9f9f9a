//! Exhaustive enumeration of finite NMV-algebras and counterexample search.
//!
//! Carriers are `0..n` with `0` the zero and `n - 1` the one (`¬0 = n - 1`).
//! The search fixes `¬` first, then fills the free upper-triangular cells
//! of `⊕` row by row, rejecting a partial table as soon as some fully
//! evaluable instance of the Łukasiewicz axiom, the join-bound axiom or
//! `¬x ⊕ (x ⊕ y) ≈ 1` fails. Isomorphism classes are separated by
//! [`CanonicalForm`], the lexicographically least serialization over all
//! relabelings that fix `0` (and therefore `1`).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::nmv::{check_sai, is_associative, NmvAlgebra};
use crate::report::Witness;
use crate::table::{triples, BinaryOp, Carrier, UnaryOp};

pub const MIN_SIZE: usize = 2;
pub const MAX_SIZE: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Nmv,
    /// NMV-algebras whose section involutions are antitone.
    NmvSai,
    /// The SAI algebras, from which conditionally residuated posets are
    /// derived.
    Crp,
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "nmv" => Ok(Kind::Nmv),
            "nmv-sai" | "sai" => Ok(Kind::NmvSai),
            "crp" => Ok(Kind::Crp),
            other => Err(format!("unknown kind {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Predicate {
    /// Some section involution is not antitone.
    NonAntitoneSection,
    /// `x ⊗ y ≤ z ⇔ x ≤ y → z` fails for some triple.
    AdjointnessFailure,
    /// `⊕` is not associative.
    NonAssociative,
}

impl Predicate {
    pub const ALL: [Predicate; 3] =
        [Predicate::NonAntitoneSection, Predicate::AdjointnessFailure, Predicate::NonAssociative];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::NonAntitoneSection => "non-antitone-section",
            Predicate::AdjointnessFailure => "adjointness-failure",
            Predicate::NonAssociative => "non-associative",
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Predicate::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| Error::UnknownPredicate(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationTask {
    pub size: usize,
    pub kind: Kind,
    pub up_to_iso: bool,
    pub predicate: Option<Predicate>,
}

impl EnumerationTask {
    pub fn new(size: usize, kind: Kind) -> Self {
        Self { size, kind, up_to_iso: false, predicate: None }
    }

    pub fn up_to_iso(mut self) -> Self {
        self.up_to_iso = true;
        self
    }

    pub fn with_predicate(mut self, predicate: Predicate) -> Self {
        self.predicate = Some(predicate);
        self
    }

    fn validate(&self) -> Result<()> {
        if !(MIN_SIZE..=MAX_SIZE).contains(&self.size) {
            return Err(Error::SizeOutOfRange(self.size));
        }
        Ok(())
    }

    fn accepts(&self, alg: &NmvAlgebra) -> bool {
        let kind_ok = match self.kind {
            Kind::Nmv => true,
            Kind::NmvSai | Kind::Crp => check_sai(alg).is_ok(),
        };
        kind_ok && self.predicate.is_none_or(|p| !predicate_witnesses(alg, p).is_empty())
    }
}

/// Permutation-minimal serialization `[n, ¬…, ⊕…]` with `0` placed first
/// and `1` last.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0[0] as usize
    }

    /// Rebuilds the canonical representative with labels `0, a, b, …, 1`.
    pub fn to_algebra(&self) -> NmvAlgebra {
        let n = self.size();
        let neg = UnaryOp::new(self.0[1..=n].iter().map(|&v| v as usize).collect()).expect("valid form");
        let oplus = BinaryOp::new(n, self.0[n + 1..].iter().map(|&v| v as usize).collect()).expect("valid form");
        NmvAlgebra::new(Carrier::standard(n), oplus, neg, 0).expect("canonical forms encode NMV-algebras")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.size();
        let digits = |s: &[u8]| s.iter().map(u8::to_string).collect::<String>();
        write!(f, "{n}:{}:{}", digits(&self.0[1..=n]), digits(&self.0[n + 1..]))
    }
}

fn serialize(alg: &NmvAlgebra, perm: &[usize]) -> Vec<u8> {
    let n = alg.size();
    let mut inv = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    let mut out = Vec::with_capacity(1 + n + n * n);
    out.push(n as u8);
    out.extend((0..n).map(|x| perm[alg.neg(inv[x])] as u8));
    for x in 0..n {
        out.extend((0..n).map(|y| perm[alg.oplus(inv[x], inv[y])] as u8));
    }
    out
}

/// The canonical form of `alg`: equal for two algebras iff they are
/// isomorphic.
pub fn canonical_form(alg: &NmvAlgebra) -> CanonicalForm {
    let n = alg.size();
    let (zero, one) = (alg.zero(), alg.one());
    let middle: Vec<usize> = (0..n).filter(|&x| x != zero && x != one).collect();
    let mut perm = vec![0; n];
    perm[one] = n - 1;
    perm[zero] = 0;
    let m = middle.len();
    (1..=m)
        .permutations(m)
        .map(|targets| {
            for (&src, &dst) in middle.iter().zip(&targets) {
                perm[src] = dst;
            }
            serialize(alg, &perm)
        })
        .min()
        .map(CanonicalForm)
        .expect("at least one permutation")
}

const UNSET: u8 = u8::MAX;

/// Backtracking search over `⊕` tables for a fixed `¬`.
struct TableSearch {
    n: usize,
    neg: Vec<u8>,
    table: Vec<u8>,
    free: Vec<(usize, usize)>,
}

impl TableSearch {
    fn new(n: usize, neg: &[usize]) -> Self {
        let top = (n - 1) as u8;
        let neg: Vec<u8> = neg.iter().map(|&v| v as u8).collect();
        let mut table = vec![UNSET; n * n];
        for x in 0..n {
            for (a, b, v) in [(x, 0, x as u8), (0, x, x as u8), (x, n - 1, top), (n - 1, x, top)] {
                table[a * n + b] = v;
            }
        }
        // x ⊕ ¬x = 1 follows from ¬x ⊕ (x ⊕ 0) = 1
        for x in 0..n {
            let nx = neg[x] as usize;
            table[x * n + nx] = top;
            table[nx * n + x] = top;
        }
        let free = (1..n - 1)
            .flat_map(|i| (i..n - 1).map(move |j| (i, j)))
            .filter(|&(i, j)| table[i * n + j] == UNSET)
            .collect();
        Self { n, neg, table, free }
    }

    #[inline]
    fn get(&self, x: u8, y: u8) -> Option<u8> {
        let v = self.table[x as usize * self.n + y as usize];
        (v != UNSET).then_some(v)
    }

    fn set(&mut self, (i, j): (usize, usize), v: u8) {
        self.table[i * self.n + j] = v;
        self.table[j * self.n + i] = v;
    }

    /// False when some fully evaluable axiom instance fails.
    fn consistent(&self) -> bool {
        let n = self.n as u8;
        let top = n - 1;
        let ng = |x: u8| self.neg[x as usize];
        // x ⊔ y = ¬(¬x ⊕ y) ⊕ y
        let join = |x: u8, y: u8| self.get(ng(x), y).and_then(|v| self.get(ng(v), y));
        for x in 0..n {
            for y in 0..n {
                if let Some(v) = self.get(x, y) {
                    if let Some(w) = self.get(ng(x), v) {
                        if w != top {
                            return false;
                        }
                    }
                }
                let Some(j) = join(x, y) else { continue };
                if y > x {
                    if let Some(k) = join(y, x) {
                        if j != k {
                            return false;
                        }
                    }
                }
                for z in 0..n {
                    if let Some(w) = join(j, z).and_then(|u| self.get(ng(x), u)) {
                        if w != top {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, depth: usize, visit: &mut impl FnMut(&[u8])) {
        if depth == self.free.len() {
            visit(&self.table);
            return;
        }
        let cell = self.free[depth];
        for v in 0..self.n as u8 {
            self.set(cell, v);
            if self.consistent() {
                self.run(depth + 1, visit);
            }
        }
        self.set(cell, UNSET);
    }
}

/// Involutions `¬` on `0..n` with `¬0 = n - 1`. With `representatives_only`
/// just one per conjugacy class under relabelings fixing `0` and `n - 1`:
/// transpositions `(1 2) (3 4) …` followed by fixed points.
fn negations(n: usize, representatives_only: bool) -> Vec<Vec<usize>> {
    let base = |mid: &[usize]| {
        let mut neg = vec![n - 1];
        neg.extend(mid);
        neg.push(0);
        neg
    };
    let m = n - 2;
    if representatives_only {
        return (0..=m / 2)
            .map(|k| {
                let mid: Vec<usize> = (1..=m)
                    .map(|i| {
                        if i <= 2 * k {
                            if i % 2 == 1 {
                                i + 1
                            } else {
                                i - 1
                            }
                        } else {
                            i
                        }
                    })
                    .collect();
                base(&mid)
            })
            .collect();
    }
    (1..=m).permutations(m).filter(|p| (0..m).all(|i| p[p[i] - 1] == i + 1)).map(|p| base(&p)).collect()
}

fn raw_models(n: usize, representatives_only: bool) -> Vec<Vec<u8>> {
    let negs = negations(n, representatives_only);
    // one partition per (¬, value of the first free cell)
    let jobs: Vec<(usize, Option<u8>)> = negs
        .iter()
        .enumerate()
        .flat_map(|(k, neg)| {
            let s = TableSearch::new(n, neg);
            if s.free.is_empty() {
                vec![(k, None)]
            } else {
                (0..n as u8).map(|v| (k, Some(v))).collect()
            }
        })
        .collect();
    jobs.into_par_iter()
        .flat_map_iter(|(k, first)| {
            let neg = &negs[k];
            let mut s = TableSearch::new(n, neg);
            let mut found = Vec::new();
            let mut collect = |t: &[u8]| {
                let mut out = Vec::with_capacity(1 + n + n * n);
                out.push(n as u8);
                out.extend(neg.iter().map(|&v| v as u8));
                out.extend_from_slice(t);
                found.push(out);
            };
            match first {
                None => {
                    if s.consistent() {
                        s.run(0, &mut collect);
                    }
                }
                Some(v) => {
                    let cell = s.free[0];
                    s.set(cell, v);
                    if s.consistent() {
                        s.run(1, &mut collect);
                    }
                }
            }
            found
        })
        .collect()
}

fn decode(raw: &[u8]) -> Result<NmvAlgebra> {
    let n = raw[0] as usize;
    let neg = UnaryOp::new(raw[1..=n].iter().map(|&v| v as usize).collect())?;
    let oplus = BinaryOp::new(n, raw[n + 1..].iter().map(|&v| v as usize).collect())?;
    NmvAlgebra::new(Carrier::standard(n), oplus, neg, 0)
}

/// The result of an enumeration, in canonical-form order.
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub algebras: Vec<NmvAlgebra>,
}

impl Enumeration {
    pub fn count(&self) -> usize {
        self.algebras.len()
    }
}

/// All algebras of the task's size and kind. Without `up_to_iso` every
/// labelling with `0` first and `1` last is listed; with it, one canonical
/// representative per isomorphism class.
///
/// Each emitted algebra has been re-validated against all seven axioms.
pub fn enumerate(task: &EnumerationTask) -> Result<Enumeration> {
    task.validate()?;
    let n = task.size;
    let raw = raw_models(n, task.up_to_iso);
    let mut keyed: BTreeMap<(CanonicalForm, Vec<u8>), NmvAlgebra> = BTreeMap::new();
    for r in raw {
        let alg = decode(&r)?;
        if !task.accepts(&alg) {
            continue;
        }
        let form = canonical_form(&alg);
        if task.up_to_iso {
            let rep = form.to_algebra();
            keyed.entry((form, Vec::new())).or_insert(rep);
        } else {
            keyed.insert((form, r), alg);
        }
    }
    Ok(Enumeration { algebras: keyed.into_values().collect() })
}

/// An algebra satisfying a search predicate, with the witnesses found.
#[derive(Debug, Clone)]
pub struct Counterexample {
    pub algebra: NmvAlgebra,
    pub witnesses: Vec<Witness>,
}

/// Witnesses that `alg` satisfies `predicate`; empty when it does not.
///
/// Adjointness failures list every failing triple; the other predicates
/// give the first witness.
pub fn predicate_witnesses(alg: &NmvAlgebra, predicate: Predicate) -> Vec<Witness> {
    match predicate {
        Predicate::NonAntitoneSection => check_sai(alg).err().into_iter().collect(),
        Predicate::NonAssociative => is_associative(alg.oplus_table()).err().into_iter().collect(),
        Predicate::AdjointnessFailure => triples(alg.size())
            .filter(|&(x, y, z)| alg.leq(alg.otimes(x, y), z) != alg.leq(x, alg.imp(y, z)))
            .map(Witness::from)
            .collect(),
    }
}

/// Every algebra of the task (ignoring its own predicate) that satisfies
/// `predicate`, with witnesses.
pub fn find_counterexamples(task: &EnumerationTask, predicate: Predicate) -> Result<Vec<Counterexample>> {
    let task = EnumerationTask { predicate: None, ..task.clone() };
    Ok(enumerate(&task)?
        .algebras
        .into_iter()
        .filter_map(|algebra| {
            let witnesses = predicate_witnesses(&algebra, predicate);
            (!witnesses.is_empty()).then_some(Counterexample { algebra, witnesses })
        })
        .collect())
}
