//! Conversions between NMV-algebras, conditionally residuated posets,
//! involutive posets with a monotone product, and residuated posets.
//!
//! Every conversion re-checks its hypotheses on the tables it is given and
//! verifies the claimed conclusions on the tables it produces.

use crate::error::{Error, Result};
use crate::nmv::{check_sai, NmvAlgebra};
use crate::order::{is_antitone_involution, is_monotone, PartialOrder};
use crate::report::{CheckReport, Law, Witness};
use crate::residuation::{check_properties, CondResPoset, PosetAlgebra, PropertyFlags, ResiduatedPoset};
use crate::table::{pairs, BinaryOp, Carrier, UnaryOp};

pub mod laws {
    use crate::report::Law;

    pub const BOUNDED: Law = Law::new("ipp.bounded", "0 is least and 1 is greatest", "bounded poset");
    pub const INVOLUTION: Law = Law::new("ipp.involution", "¬ is an antitone involution", "antitone involution");
    pub const COMMUTATIVE: Law = Law::new("ipp.commutative", "x ⊗ y ≈ y ⊗ x", "commutative product");
    pub const MONOTONE: Law = Law::new("ipp.monotone", "x ≤ y implies x ⊗ z ≤ y ⊗ z", "monotone product");
    pub const NEUTRAL: Law = Law::new("ipp.neutral", "x ⊗ 1 ≈ x", "neutral element");
    pub const ZERO_ABSORBING: Law = Law::new("ipp.zero-absorbing", "x ⊗ 0 ≈ 0", "absorbing zero");
    pub const RESIDUATION_CONDITION: Law =
        Law::new("ipp.residuation-condition", "x ≤ ¬(¬(x ⊗ y) ⊗ y)", "residuation condition");

    pub const NEG_EXCHANGE: Law = Law::new("crp.neg-exchange", "¬x → y ≈ ¬y → x", "exchange of negated antecedents");

    pub const INTEGRAL: Law = Law::new("res.integral", "1 is the greatest element", "integrality");
    pub const IMP_VIA_PRODUCT: Law = Law::new("res.imp-via-product", "x → y ≈ ¬(x ⊗ ¬y)", "implication via product");
    pub const DOUBLE_NEGATION: Law = Law::new("res.double-negation", "¬(¬x) ≈ x", "double negation law");
    pub const NEG_ANTITONE: Law = Law::new("res.neg-antitone", "x ≤ y implies ¬y ≤ ¬x", "antitone negation");
}

/// A bounded poset with an antitone involution `¬` and a commutative,
/// monotone product `⊗` with neutral element `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutivePosetWithProduct {
    carrier: Carrier,
    order: PartialOrder,
    neg: UnaryOp,
    otimes: BinaryOp,
    zero: usize,
    one: usize,
}

fn hypothesis(law: Law, witness: Witness) -> Error {
    Error::Hypothesis { hypothesis: law.id, witness }
}

impl InvolutivePosetWithProduct {
    pub fn new(
        carrier: Carrier,
        order: PartialOrder,
        neg: UnaryOp,
        otimes: BinaryOp,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let n = carrier.size();
        for size in [order.size(), neg.size(), otimes.size()] {
            if size != n {
                return Err(Error::SizeMismatch(n, size));
            }
        }
        for index in [zero, one] {
            if index >= n {
                return Err(Error::IndexOutOfRange { index, size: n });
            }
        }
        let candidate = Self { carrier, order, neg, otimes, zero, one };
        if let Some(failed) = candidate.hypotheses().failures().next() {
            let crate::report::Verdict::Fail(w) = &failed.verdict else { unreachable!() };
            return Err(hypothesis(failed.law, w.clone()));
        }
        Ok(candidate)
    }

    /// The structural hypotheses, each with its first failing witness.
    pub fn hypotheses(&self) -> CheckReport {
        let n = self.size();
        let mut r = CheckReport::new();
        r.record_witness(
            laws::BOUNDED,
            (0..n).find(|&x| !self.order.leq(self.zero, x) || !self.order.leq(x, self.one)).map(Witness::one),
        );
        r.record_witness(laws::INVOLUTION, is_antitone_involution(&self.neg, &self.order).err());
        r.record_witness(laws::COMMUTATIVE, self.otimes.commutativity_witness().map(Witness::from));
        r.record_witness(laws::MONOTONE, is_monotone(&self.otimes, &self.order).err());
        r.record_witness(laws::NEUTRAL, (0..n).find(|&x| self.otimes(x, self.one) != x).map(Witness::one));
        r
    }

    /// First `(x, y)` violating `x ≤ ¬(¬(x ⊗ y) ⊗ y)`.
    pub fn residuation_condition(&self) -> Result<(), Witness> {
        let neg = |x| self.neg(x);
        match pairs(self.size()).find(|&(x, y)| !self.order.leq(x, neg(self.otimes(neg(self.otimes(x, y)), y)))) {
            Some(p) => Err(p.into()),
            None => Ok(()),
        }
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

    pub fn neg_table(&self) -> &UnaryOp {
        &self.neg
    }

    pub fn otimes_table(&self) -> &BinaryOp {
        &self.otimes
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn neg(&self, x: usize) -> usize {
        self.neg.apply(x)
    }

    pub fn otimes(&self, x: usize, y: usize) -> usize {
        self.otimes.apply(x, y)
    }
}

/// From an NMV-algebra with antitone section involutions to its
/// conditionally residuated poset `(A, ≤, ⊗, →, 0, 1)`.
pub fn nmv_to_crp(alg: &NmvAlgebra) -> Result<(CondResPoset, PropertyFlags)> {
    check_sai(alg).map_err(Error::NotSai)?;
    let n = alg.size();
    let parts = PosetAlgebra::new(
        alg.carrier().clone(),
        alg.induced_order().clone(),
        BinaryOp::from_fn(n, |x, y| alg.otimes(x, y))?,
        BinaryOp::from_fn(n, |x, y| alg.imp(x, y))?,
        alg.zero(),
        alg.one(),
    )?;
    let crp = CondResPoset::new(parts)?;
    let flags = check_properties(&crp);
    Ok((crp, flags))
}

/// From a conditionally residuated poset with all five optional laws and
/// `¬x → y ≈ ¬y → x` to the NMV-algebra `x ⊕ y := ¬x → y`. The induced order of the result must equal
/// the given order.
pub fn crp_to_nmv(crp: &CondResPoset) -> Result<NmvAlgebra> {
    let flags = check_properties(crp);
    if !flags.all() {
        return Err(Error::MissingProperties(flags.missing()));
    }
    let n = crp.size();
    let oplus = BinaryOp::from_fn(n, |x, y| crp.imp(crp.neg(x), y))?;
    if let Some((x, y)) = oplus.commutativity_witness() {
        return Err(hypothesis(laws::NEG_EXCHANGE, Witness::pair(x, y)));
    }
    let neg = UnaryOp::from_fn(n, |x| crp.neg(x))?;
    let alg = NmvAlgebra::new(crp.carrier().clone(), oplus, neg, crp.zero())?;
    if let Some((x, y)) = alg.induced_order().first_difference(crp.order()) {
        return Err(Error::OrderMismatch(x, y));
    }
    Ok(alg)
}

/// From an involutive poset with product satisfying
/// `x ≤ ¬(¬(x ⊗ y) ⊗ y)` to the integral residuated poset with
/// `x → y := ¬(x ⊗ ¬y)`.
pub fn poset_to_residuated(p: &InvolutivePosetWithProduct) -> Result<ResiduatedPoset> {
    if let Some(failed) = p.hypotheses().failures().next() {
        let crate::report::Verdict::Fail(w) = &failed.verdict else { unreachable!() };
        return Err(hypothesis(failed.law, w.clone()));
    }
    p.residuation_condition().map_err(|w| hypothesis(laws::RESIDUATION_CONDITION, w))?;
    let n = p.size();
    let imp = BinaryOp::from_fn(n, |x, y| p.neg(p.otimes(x, p.neg(y))))?;
    let parts = PosetAlgebra::new(p.carrier.clone(), p.order.clone(), p.otimes.clone(), imp, p.zero, p.one)?;
    let res = ResiduatedPoset::new(parts)?;

    let mut conclusions = CheckReport::new();
    conclusions.record_witness(laws::INTEGRAL, (!res.is_integral()).then(|| Witness::one(p.one)));
    conclusions.record_witness(
        laws::DOUBLE_NEGATION,
        (0..n).find(|&x| res.neg(x) != p.neg(x) || res.neg(res.neg(x)) != x).map(Witness::one),
    );
    if !conclusions.all_pass() {
        return Err(Error::ConclusionFailed(conclusions));
    }
    Ok(res)
}

/// The hypotheses required by [`residuated_to_poset`].
pub fn residuated_hypotheses(r: &ResiduatedPoset) -> CheckReport {
    let n = r.size();
    let mut report = CheckReport::new();
    report.record_witness(laws::INTEGRAL, (!r.is_integral()).then(|| Witness::one(r.one())));
    report.record_witness(
        laws::IMP_VIA_PRODUCT,
        pairs(n).find(|&(x, y)| r.imp(x, y) != r.neg(r.otimes(x, r.neg(y)))).map(Witness::from),
    );
    report.record_witness(laws::DOUBLE_NEGATION, (0..n).find(|&x| r.neg(r.neg(x)) != x).map(Witness::one));
    report.record_witness(
        laws::NEG_ANTITONE,
        pairs(n).find(|&(x, y)| r.leq(x, y) && !r.leq(r.neg(y), r.neg(x))).map(Witness::from),
    );
    report
}

/// From an integral residuated poset with `x → y ≈ ¬(x ⊗ ¬y)`, double
/// negation and antitone `¬`, to its involutive poset with product. The
/// returned report lists every verified conclusion.
pub fn residuated_to_poset(r: &ResiduatedPoset) -> Result<(InvolutivePosetWithProduct, CheckReport)> {
    let hyps = residuated_hypotheses(r);
    if let Some(failed) = hyps.failures().next() {
        let crate::report::Verdict::Fail(w) = &failed.verdict else { unreachable!() };
        return Err(hypothesis(failed.law, w.clone()));
    }
    let n = r.size();
    let neg = UnaryOp::from_fn(n, |x| r.neg(x))?;
    let candidate = InvolutivePosetWithProduct {
        carrier: r.carrier().clone(),
        order: r.order().clone(),
        neg,
        otimes: r.otimes_table().clone(),
        zero: r.zero(),
        one: r.one(),
    };
    let mut conclusions = candidate.hypotheses();
    conclusions.record_witness(
        laws::ZERO_ABSORBING,
        (0..n).find(|&x| candidate.otimes(x, candidate.zero) != candidate.zero).map(Witness::one),
    );
    conclusions.record_witness(laws::RESIDUATION_CONDITION, candidate.residuation_condition().err());
    if !conclusions.all_pass() {
        return Err(Error::ConclusionFailed(conclusions));
    }
    Ok((candidate, conclusions))
}
