//! Non-associative MV-algebras `(A, ⊕, ¬, 0)`.
//!
//! An [`NmvAlgebra`] can only be constructed from tables that satisfy all
//! seven defining identities. Everything else in this module (the term
//! operations `→ ⊔ ⊗ ⊓`, the induced order, the section involutions) is
//! computed from `⊕` and `¬`.

mod checks;
mod derived;

pub use checks::{check_derived_identities, check_sai, check_structure_facts, is_associative};
pub use derived::{derive_ops, DerivedOps, SectionFamily};

use crate::error::{Error, Result};
use crate::order::PartialOrder;
use crate::report::{CheckReport, Witness};
use crate::table::{pairs, triples, BinaryOp, Carrier, UnaryOp};

pub mod laws {
    pub use super::checks::laws::*;
    use crate::report::Law;

    pub const COMMUTATIVITY: Law = Law::new("nmv.commutativity", "x ⊕ y ≈ y ⊕ x", "NMV axioms");
    pub const ZERO_NEUTRAL: Law = Law::new("nmv.zero-neutral", "x ⊕ 0 ≈ x", "NMV axioms");
    pub const DOUBLE_NEGATION: Law = Law::new("nmv.double-negation", "¬(¬x) ≈ x", "NMV axioms");
    pub const ONE_ABSORBING: Law = Law::new("nmv.one-absorbing", "x ⊕ 1 ≈ 1", "NMV axioms");
    pub const LUKASIEWICZ: Law = Law::new("nmv.lukasiewicz", "¬(¬x ⊕ y) ⊕ y ≈ ¬(¬y ⊕ x) ⊕ x", "NMV axioms");
    pub const JOIN_BOUND: Law = Law::new("nmv.join-bound", "¬x ⊕ (¬(¬(¬(¬x ⊕ y) ⊕ y) ⊕ z) ⊕ z) ≈ 1", "NMV axioms");
    pub const ABSORPTION: Law = Law::new("nmv.absorption", "¬x ⊕ (x ⊕ y) ≈ 1", "NMV axioms");

    pub const AXIOMS: [Law; 7] =
        [COMMUTATIVITY, ZERO_NEUTRAL, DOUBLE_NEGATION, ONE_ABSORBING, LUKASIEWICZ, JOIN_BOUND, ABSORPTION];
}

/// Checks the seven defining identities of an NMV-algebra on total tables,
/// with `1 := ¬0`. Each law gets its first lexicographic failing tuple.
///
/// Panics if the tables disagree on size or `zero` is out of range.
pub fn check_nmv_axioms(oplus: &BinaryOp, neg: &UnaryOp, zero: usize) -> CheckReport {
    let n = oplus.size();
    assert_eq!(n, neg.size(), "⊕ and ¬ tables differ in size");
    assert!(zero < n, "zero out of range");
    let p = |x, y| oplus.apply(x, y);
    let ng = |x| neg.apply(x);
    let one = ng(zero);

    let mut report = CheckReport::new();
    report.record_witness(laws::COMMUTATIVITY, oplus.commutativity_witness().map(Witness::from));
    report.record_witness(laws::ZERO_NEUTRAL, (0..n).find(|&x| p(x, zero) != x).map(Witness::one));
    report.record_witness(laws::DOUBLE_NEGATION, (0..n).find(|&x| ng(ng(x)) != x).map(Witness::one));
    report.record_witness(laws::ONE_ABSORBING, (0..n).find(|&x| p(x, one) != one).map(Witness::one));
    report.record_witness(
        laws::LUKASIEWICZ,
        pairs(n).find(|&(x, y)| p(ng(p(ng(x), y)), y) != p(ng(p(ng(y), x)), x)).map(Witness::from),
    );
    report.record_witness(
        laws::JOIN_BOUND,
        triples(n).find(|&(x, y, z)| p(ng(x), p(ng(p(ng(p(ng(p(ng(x), y)), y)), z)), z)) != one).map(Witness::from),
    );
    report.record_witness(laws::ABSORPTION, pairs(n).find(|&(x, y)| p(ng(x), p(x, y)) != one).map(Witness::from));
    report
}

/// A validated NMV-algebra together with its induced order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NmvAlgebra {
    carrier: Carrier,
    oplus: BinaryOp,
    neg: UnaryOp,
    zero: usize,
    order: PartialOrder,
}

impl NmvAlgebra {
    pub fn new(carrier: Carrier, oplus: BinaryOp, neg: UnaryOp, zero: usize) -> Result<Self> {
        let n = carrier.size();
        for size in [oplus.size(), neg.size()] {
            if size != n {
                return Err(Error::SizeMismatch(n, size));
            }
        }
        if zero >= n {
            return Err(Error::IndexOutOfRange { index: zero, size: n });
        }
        let report = check_nmv_axioms(&oplus, &neg, zero);
        if !report.all_pass() {
            return Err(Error::AxiomsFailed(report));
        }
        let one = neg.apply(zero);
        let order = PartialOrder::from_fn(n, |x, y| oplus.apply(neg.apply(x), y) == one)
            .map_err(|e| Error::InconsistentOrder(Box::new(e)))?;
        if order.least() != Some(zero) || order.greatest() != Some(one) {
            return Err(Error::InconsistentOrder(Box::new(Error::NotDirected(zero, one))));
        }
        Ok(Self { carrier, oplus, neg, zero, order })
    }

    /// Builds from label tables, e.g. rows of `["0", "a", …]`.
    pub fn from_labels(names: &[&str], oplus: &[&[&str]], neg: &[&str], zero: &str) -> Result<Self> {
        let carrier = Carrier::new(names.iter().copied())?;
        let idx = |s: &str| carrier.index_of(s).ok_or_else(|| Error::UnknownLabel(s.to_string()));
        let rows = oplus
            .iter()
            .map(|row| row.iter().map(|s| idx(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let neg = neg.iter().map(|s| idx(s)).collect::<Result<Vec<_>>>()?;
        let zero = idx(zero)?;
        Self::new(carrier, BinaryOp::from_rows(&rows)?, UnaryOp::new(neg)?, zero)
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    pub fn oplus_table(&self) -> &BinaryOp {
        &self.oplus
    }

    pub fn neg_table(&self) -> &UnaryOp {
        &self.neg
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    /// `1 := ¬0`.
    pub fn one(&self) -> usize {
        self.neg.apply(self.zero)
    }

    /// The induced order `x ≤ y ⇔ x → y = 1`.
    pub fn induced_order(&self) -> &PartialOrder {
        &self.order
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.order.leq(x, y)
    }

    #[inline]
    pub fn oplus(&self, x: usize, y: usize) -> usize {
        self.oplus.apply(x, y)
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg.apply(x)
    }

    /// `x → y := ¬x ⊕ y`.
    #[inline]
    pub fn imp(&self, x: usize, y: usize) -> usize {
        self.oplus(self.neg(x), y)
    }

    /// `x ⊔ y := (x → y) → y`.
    #[inline]
    pub fn sqcup(&self, x: usize, y: usize) -> usize {
        self.imp(self.imp(x, y), y)
    }

    /// `x ⊗ y := ¬(¬x ⊕ ¬y)`.
    #[inline]
    pub fn otimes(&self, x: usize, y: usize) -> usize {
        self.neg(self.oplus(self.neg(x), self.neg(y)))
    }

    /// `x ⊓ y := ¬(¬x ⊔ ¬y)`.
    #[inline]
    pub fn sqcap(&self, x: usize, y: usize) -> usize {
        self.neg(self.sqcup(self.neg(x), self.neg(y)))
    }

    /// Relabels elements: element `i` becomes `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        let n = self.size();
        assert_eq!(perm.len(), n, "permutation size");
        let mut inv = vec![usize::MAX; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let mut names = vec![String::new(); n];
        for (i, &p) in perm.iter().enumerate() {
            names[p] = self.carrier.name(i).to_string();
        }
        let oplus = BinaryOp::from_fn(n, |x, y| perm[self.oplus(inv[x], inv[y])])?;
        let neg = UnaryOp::from_fn(n, |x| perm[self.neg(inv[x])])?;
        Self::new(Carrier::new(names)?, oplus, neg, perm[self.zero])
    }
}

/// The induced order of a validated algebra (a clone of the cached order).
pub fn induced_order(alg: &NmvAlgebra) -> PartialOrder {
    alg.induced_order().clone()
}
