//! Conditionally residuated posets, residuated posets and the laws relating
//! `⊗` and `→`.
//!
//! Full adjointness `x ⊗ y ≤ z ⇔ x ≤ y → z` needs associativity in general.
//! NMV-algebras with antitone section involutions only satisfy it under side
//! conditions: the forward direction when `z ≤ y`, the backward one when
//! `¬x ≤ y`. Structures with that weaker property are
//! [`CondResPoset`]s.

use std::ops::Deref;

use crate::error::{Error, Result};
use crate::nmv::{check_sai, NmvAlgebra};
use crate::order::PartialOrder;
use crate::report::{CheckReport, Verdict, Witness};
use crate::table::{pairs, triples, BinaryOp, Carrier};

pub mod laws {
    use crate::report::Law;

    pub const CRP_BOUNDED: Law =
        Law::new("crp.bounded", "(P, ≤, 0, 1) is a bounded poset", "conditionally residuated poset");
    pub const CRP_ORDER_IMP: Law =
        Law::new("crp.order-imp", "x ≤ y implies x → y = 1", "conditionally residuated poset");
    pub const CRP_COMMUTATIVE: Law = Law::new("crp.commutative", "x ⊗ y ≈ y ⊗ x", "conditionally residuated poset");
    pub const CRP_NEUTRAL: Law = Law::new("crp.neutral", "x ⊗ 1 ≈ x", "conditionally residuated poset");
    pub const CRP_ADJOINT_FORWARD: Law =
        Law::new("crp.adjoint-forward", "x ⊗ y ≤ z and z ≤ y imply x ≤ y → z", "conditionally residuated poset");
    pub const CRP_ADJOINT_BACKWARD: Law =
        Law::new("crp.adjoint-backward", "x ≤ y → z and ¬x ≤ y imply x ⊗ y ≤ z", "conditionally residuated poset");

    pub const WEAK_DIVISIBILITY: Law = Law::new("prop.weak-divisibility", "x ⊗ (x → y) ≤ y", "weak divisibility");
    pub const CONTRAPOSITION: Law = Law::new("prop.contraposition", "x → y ≈ ¬y → ¬x", "contraposition law");
    pub const DOUBLE_NEGATION: Law = Law::new("prop.double-negation", "¬(¬x) ≈ x", "double negation law");
    pub const LUKASIEWICZ: Law = Law::new("prop.lukasiewicz", "(x → y) → y ≈ (y → x) → x", "Łukasiewicz axiom");
    pub const COMPATIBILITY: Law =
        Law::new("prop.compatibility", "y ≤ x → y and ((x → y) → y) → y ≈ x → y", "compatibility conditions");

    pub const ADJOINTNESS: Law = Law::new("res.adjointness", "x ⊗ y ≤ z iff x ≤ y → z", "adjointness");

    pub const LEMMA_FORWARD: Law =
        Law::new("lemma.forward", "c ≤ b and a ⊗ b ≤ c imply a ≤ b → c", "conditional adjointness, forward");
    pub const LEMMA_BACKWARD: Law =
        Law::new("lemma.backward", "¬a ≤ b and a ≤ b → c imply a ⊗ b ≤ c", "conditional adjointness, backward");
    pub const COROLLARY_ADJOINT: Law = Law::new(
        "corollary.adjoint",
        "¬x, z ≤ y implies (x ⊗ y ≤ z iff x ≤ y → z)",
        "conditional adjointness, corollary",
    );
    pub const COROLLARY_JOIN: Law = Law::new(
        "corollary.join",
        "(x ⊔ ¬(y ⊔ z)) ⊗ (y ⊔ z) ≤ z iff x ⊔ ¬(y ⊔ z) ≤ (y ⊔ z) → z = y → z",
        "conditional adjointness, corollary",
    );

    pub const CONSEQUENCE_UNITS: Law =
        Law::new("consequence.units", "1 → x ≈ x, x → x ≈ 1 and ¬0 ≈ 1", "consequences of the axioms");
    pub const CONSEQUENCE_COMPLEMENT: Law = Law::new(
        "consequence.complement",
        "¬x ⊗ x ≈ 0 and ¬1 ≈ 0 (under double negation)",
        "consequences of the axioms",
    );
    pub const CONSEQUENCE_ORDER: Law = Law::new(
        "consequence.order",
        "x ≤ (x → y) → y, and x ≤ y iff x → y = 1 (under weak divisibility and compatibility)",
        "consequences of the axioms",
    );
}

/// A bounded poset with two binary operations `⊗` and `→`; `¬x := x → 0`.
///
/// No laws are enforced at this level; [`CondResPoset`] and
/// [`ResiduatedPoset`] wrap it with their respective invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetAlgebra {
    carrier: Carrier,
    order: PartialOrder,
    otimes: BinaryOp,
    imp: BinaryOp,
    zero: usize,
    one: usize,
}

impl PosetAlgebra {
    pub fn new(
        carrier: Carrier,
        order: PartialOrder,
        otimes: BinaryOp,
        imp: BinaryOp,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let n = carrier.size();
        for size in [order.size(), otimes.size(), imp.size()] {
            if size != n {
                return Err(Error::SizeMismatch(n, size));
            }
        }
        for index in [zero, one] {
            if index >= n {
                return Err(Error::IndexOutOfRange { index, size: n });
            }
        }
        Ok(Self { carrier, order, otimes, imp, zero, one })
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    pub fn order(&self) -> &PartialOrder {
        &self.order
    }

    pub fn otimes_table(&self) -> &BinaryOp {
        &self.otimes
    }

    pub fn imp_table(&self) -> &BinaryOp {
        &self.imp
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.order.leq(x, y)
    }

    #[inline]
    pub fn otimes(&self, x: usize, y: usize) -> usize {
        self.otimes.apply(x, y)
    }

    #[inline]
    pub fn imp(&self, x: usize, y: usize) -> usize {
        self.imp.apply(x, y)
    }

    /// `¬x := x → 0`, never stored separately.
    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.imp(x, self.zero)
    }

    /// Triples where `x ⊗ y ≤ z` and `x ≤ y → z` differ, lexicographic.
    pub fn adjointness_failures(&self) -> Vec<(usize, usize, usize)> {
        triples(self.size())
            .filter(|&(x, y, z)| self.leq(self.otimes(x, y), z) != self.leq(x, self.imp(y, z)))
            .collect()
    }
}

fn first_pair(n: usize, fails: impl Fn(usize, usize) -> bool) -> Option<Witness> {
    pairs(n).find(|&(x, y)| fails(x, y)).map(Witness::from)
}

fn first_triple(n: usize, fails: impl Fn(usize, usize, usize) -> bool) -> Option<Witness> {
    triples(n).find(|&(x, y, z)| fails(x, y, z)).map(Witness::from)
}

fn bounds_witness(p: &PosetAlgebra) -> Option<Witness> {
    let n = p.size();
    (0..n).find(|&x| !p.leq(p.zero, x) || !p.leq(x, p.one)).map(Witness::one)
}

fn commutative_and_neutral(p: &PosetAlgebra, report: &mut CheckReport) {
    let n = p.size();
    report.record_witness(laws::CRP_COMMUTATIVE, p.otimes.commutativity_witness().map(Witness::from));
    report.record_witness(laws::CRP_NEUTRAL, (0..n).find(|&x| p.otimes(x, p.one) != x).map(Witness::one));
}

/// Checks conditions (a), (b), (c) of a conditionally residuated poset. All
/// six component laws are reported, whichever fail.
pub fn check_crp(order: &PartialOrder, otimes: &BinaryOp, imp: &BinaryOp, zero: usize, one: usize) -> CheckReport {
    let n = order.size();
    let p = PosetAlgebra::new(Carrier::standard(n), order.clone(), otimes.clone(), imp.clone(), zero, one)
        .expect("check_crp needs tables of equal size");
    check_crp_parts(&p)
}

fn check_crp_parts(p: &PosetAlgebra) -> CheckReport {
    let n = p.size();
    let mut r = CheckReport::new();
    r.record_witness(laws::CRP_BOUNDED, bounds_witness(p));
    r.record_witness(laws::CRP_ORDER_IMP, first_pair(n, |x, y| p.leq(x, y) && p.imp(x, y) != p.one));
    commutative_and_neutral(p, &mut r);
    r.record_witness(
        laws::CRP_ADJOINT_FORWARD,
        first_triple(n, |x, y, z| p.leq(p.otimes(x, y), z) && p.leq(z, y) && !p.leq(x, p.imp(y, z))),
    );
    r.record_witness(
        laws::CRP_ADJOINT_BACKWARD,
        first_triple(n, |x, y, z| p.leq(x, p.imp(y, z)) && p.leq(p.neg(x), y) && !p.leq(p.otimes(x, y), z)),
    );
    r
}

/// A validated conditionally residuated poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CondResPoset(PosetAlgebra);

impl CondResPoset {
    pub fn new(parts: PosetAlgebra) -> Result<Self> {
        let report = check_crp_parts(&parts);
        if !report.all_pass() {
            return Err(Error::AxiomsFailed(report));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &PosetAlgebra {
        &self.0
    }

    pub fn into_parts(self) -> PosetAlgebra {
        self.0
    }
}

impl Deref for CondResPoset {
    type Target = PosetAlgebra;

    fn deref(&self) -> &PosetAlgebra {
        &self.0
    }
}

/// Which of the five optional laws a structure satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PropertyFlags {
    pub weak_divisibility: bool,
    pub contraposition: bool,
    pub double_negation: bool,
    pub lukasiewicz: bool,
    pub compatibility: bool,
}

impl PropertyFlags {
    pub fn all(&self) -> bool {
        self.missing().is_empty()
    }

    /// Names of the laws that do not hold.
    pub fn missing(&self) -> Vec<&'static str> {
        [
            (self.weak_divisibility, "weak divisibility"),
            (self.contraposition, "contraposition law"),
            (self.double_negation, "double negation law"),
            (self.lukasiewicz, "Łukasiewicz axiom"),
            (self.compatibility, "compatibility conditions"),
        ]
        .into_iter()
        .filter_map(|(ok, name)| (!ok).then_some(name))
        .collect()
    }
}

/// The five optional laws with first witnesses.
pub fn property_report(p: &PosetAlgebra) -> CheckReport {
    let n = p.size();
    let imp = |x, y| p.imp(x, y);
    let neg = |x| p.neg(x);
    let mut r = CheckReport::new();
    r.record_witness(laws::WEAK_DIVISIBILITY, first_pair(n, |x, y| !p.leq(p.otimes(x, imp(x, y)), y)));
    r.record_witness(laws::CONTRAPOSITION, first_pair(n, |x, y| imp(x, y) != imp(neg(y), neg(x))));
    r.record_witness(laws::DOUBLE_NEGATION, (0..n).find(|&x| neg(neg(x)) != x).map(Witness::one));
    r.record_witness(laws::LUKASIEWICZ, first_pair(n, |x, y| imp(imp(x, y), y) != imp(imp(y, x), x)));
    r.record_witness(
        laws::COMPATIBILITY,
        first_pair(n, |x, y| !p.leq(y, imp(x, y)) || imp(imp(imp(x, y), y), y) != imp(x, y)),
    );
    r
}

pub fn check_properties(crp: &CondResPoset) -> PropertyFlags {
    flags_from_report(&property_report(crp))
}

fn flags_from_report(r: &CheckReport) -> PropertyFlags {
    let ok = |id| r.get(id).is_some_and(|e| !e.verdict.is_fail());
    PropertyFlags {
        weak_divisibility: ok(laws::WEAK_DIVISIBILITY.id),
        contraposition: ok(laws::CONTRAPOSITION.id),
        double_negation: ok(laws::DOUBLE_NEGATION.id),
        lukasiewicz: ok(laws::LUKASIEWICZ.id),
        compatibility: ok(laws::COMPATIBILITY.id),
    }
}

/// Triples where `x ⊗ y ≤ z` and `x ≤ y → z` differ in truth value.
pub fn adjointness_failures(crp: &CondResPoset) -> Vec<(usize, usize, usize)> {
    crp.adjointness_failures()
}

/// Checks the forward and backward conditional adjointness implications and
/// both corollary items on an NMV-algebra, using its induced order and term
/// operations. Rejects algebras whose section involutions are not antitone.
pub fn check_conditional_adjointness_lemmas(alg: &NmvAlgebra) -> Result<CheckReport> {
    check_sai(alg).map_err(Error::NotSai)?;
    let n = alg.size();
    let leq = |x, y| alg.leq(x, y);
    let (imp, otimes, join, neg) =
        (|x, y| alg.imp(x, y), |x, y| alg.otimes(x, y), |x, y| alg.sqcup(x, y), |x| alg.neg(x));
    let mut r = CheckReport::new();
    r.record_witness(
        laws::LEMMA_FORWARD,
        first_triple(n, |a, b, c| leq(c, b) && leq(otimes(a, b), c) && !leq(a, imp(b, c))),
    );
    r.record_witness(
        laws::LEMMA_BACKWARD,
        first_triple(n, |a, b, c| leq(neg(a), b) && leq(a, imp(b, c)) && !leq(otimes(a, b), c)),
    );
    r.record_witness(
        laws::COROLLARY_ADJOINT,
        first_triple(n, |x, y, z| leq(neg(x), y) && leq(z, y) && leq(otimes(x, y), z) != leq(x, imp(y, z))),
    );
    r.record_witness(
        laws::COROLLARY_JOIN,
        first_triple(n, |x, y, z| {
            let s = join(y, z);
            let u = join(x, neg(s));
            leq(otimes(u, s), z) != leq(u, imp(s, z)) || imp(s, z) != imp(y, z)
        }),
    );
    Ok(r)
}

/// Checks the consequences of the axioms. The complement and order items are
/// reported as not applicable when their hypotheses are absent from `flags`.
pub fn check_crp_consequences(crp: &CondResPoset, flags: &PropertyFlags) -> CheckReport {
    let n = crp.size();
    let (zero, one) = (crp.zero(), crp.one());
    let imp = |x, y| crp.imp(x, y);
    let mut r = CheckReport::new();

    let item_i = (0..n)
        .find(|&x| imp(one, x) != x || imp(x, x) != one)
        .map(Witness::one)
        .or_else(|| (crp.neg(zero) != one).then(|| Witness::one(zero)));
    r.record_witness(laws::CONSEQUENCE_UNITS, item_i);

    if flags.double_negation {
        let item_ii = (0..n)
            .find(|&x| crp.otimes(crp.neg(x), x) != zero)
            .map(Witness::one)
            .or_else(|| (crp.neg(one) != zero).then(|| Witness::one(one)));
        r.record_witness(laws::CONSEQUENCE_COMPLEMENT, item_ii);
    } else {
        r.record(laws::CONSEQUENCE_COMPLEMENT, Verdict::NotApplicable);
    }

    if flags.weak_divisibility && flags.compatibility {
        let item_iii = first_pair(n, |x, y| !crp.leq(x, imp(imp(x, y), y)) || crp.leq(x, y) != (imp(x, y) == one));
        r.record_witness(laws::CONSEQUENCE_ORDER, item_iii);
    } else {
        r.record(laws::CONSEQUENCE_ORDER, Verdict::NotApplicable);
    }
    r
}

/// Checks the defining conditions of a residuated poset: bounded order with
/// least element `0`, commutative `⊗` with neutral `1`, full adjointness.
pub fn check_residuated(p: &PosetAlgebra) -> CheckReport {
    let n = p.size();
    let mut r = CheckReport::new();
    let bounded = (p.order.least() != Some(p.zero) || p.order.greatest().is_none())
        .then(|| (0..n).find(|&x| !p.leq(p.zero, x)).unwrap_or(p.zero))
        .map(Witness::one);
    r.record_witness(laws::CRP_BOUNDED, bounded);
    commutative_and_neutral(p, &mut r);
    r.record_witness(laws::ADJOINTNESS, p.adjointness_failures().first().map(|&t| t.into()));
    r
}

/// A validated residuated poset: adjointness holds for every triple.
///
/// The neutral element `1` need not be the top of the order; see
/// [`ResiduatedPoset::is_integral`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResiduatedPoset(PosetAlgebra);

impl ResiduatedPoset {
    pub fn new(parts: PosetAlgebra) -> Result<Self> {
        let report = check_residuated(&parts);
        if !report.all_pass() {
            return Err(Error::AxiomsFailed(report));
        }
        Ok(Self(parts))
    }

    /// `1` is the greatest element.
    pub fn is_integral(&self) -> bool {
        self.0.order.greatest() == Some(self.0.one)
    }

    pub fn parts(&self) -> &PosetAlgebra {
        &self.0
    }

    pub fn into_parts(self) -> PosetAlgebra {
        self.0
    }
}

impl Deref for ResiduatedPoset {
    type Target = PosetAlgebra;

    fn deref(&self) -> &PosetAlgebra {
        &self.0
    }
}

impl TryFrom<CondResPoset> for ResiduatedPoset {
    type Error = Error;

    fn try_from(crp: CondResPoset) -> Result<Self> {
        Self::new(crp.into_parts())
    }
}
