//! Exhaustive checks of identities and structural facts that every
//! NMV-algebra satisfies, plus SAI classification.

use crate::directoid::Directoid;
use crate::error::Error;
use crate::report::{CheckReport, Witness};
use crate::table::{pairs, triples, BinaryOp};

use super::{derive_ops, NmvAlgebra};

pub mod laws {
    use crate::report::Law;

    pub const ID_TRIPLE_IMP: Law = Law::new("id.triple-imp", "((x → y) → y) → y ≈ x → y", "derived identities");
    pub const ID_IMP_SECTION: Law = Law::new("id.imp-section", "x → y ≈ (x ⊔ y)^y", "derived identities");
    pub const ID_CONTRAPOSITION: Law = Law::new("id.contraposition", "x → y ≈ ¬y → ¬x", "derived identities");
    pub const ID_OTIMES_SECTION: Law = Law::new("id.otimes-section", "x ⊗ y ≈ ¬(x ⊔ ¬y)^¬y", "derived identities");
    pub const ID_LUKASIEWICZ: Law = Law::new("id.lukasiewicz", "(x → y) → y ≈ (y → x) → x", "derived identities");
    pub const ID_ONE_IMP: Law = Law::new("id.one-imp", "1 → x ≈ x", "derived identities");
    pub const ID_IMP_ZERO: Law = Law::new("id.imp-zero", "x → 0 ≈ ¬x", "derived identities");
    pub const ID_MEET: Law = Law::new("id.meet", "x ⊗ (x → y) ≈ x ⊓ y", "derived identities");
    pub const ID_K: Law = Law::new("id.k", "x → (y → x) ≈ 1", "derived identities");
    pub const ID_JOIN_IMP: Law = Law::new("id.join-imp", "(x ⊔ y) → y ≈ x → y", "derived identities");

    pub const IDENTITIES: [Law; 10] = [
        ID_TRIPLE_IMP,
        ID_IMP_SECTION,
        ID_CONTRAPOSITION,
        ID_OTIMES_SECTION,
        ID_LUKASIEWICZ,
        ID_ONE_IMP,
        ID_IMP_ZERO,
        ID_MEET,
        ID_K,
        ID_JOIN_IMP,
    ];

    pub const FACT_POSET_TOP: Law =
        Law::new("fact.poset-top", "(A, ≤, 1) is a poset with greatest element 1", "induced order structure");
    pub const FACT_DIRECTOID: Law =
        Law::new("fact.directoid", "(A, ⊔) is a commutative directoid", "induced order structure");
    pub const FACT_SWITCHING: Law =
        Law::new("fact.switching", "x ↦ x^a is a switching involution on [a, 1]", "induced order structure");
    pub const FACT_OPLUS_UPPER: Law = Law::new("fact.oplus-upper", "a, b ≤ a ⊕ b", "induced order structure");
    pub const FACT_JOIN_UPPER: Law = Law::new("fact.join-upper", "a, b ≤ a ⊔ b", "induced order structure");
    pub const FACT_MEET_LOWER: Law = Law::new("fact.meet-lower", "a ⊓ b ≤ a, b", "induced order structure");
    pub const FACT_NEG_IMP: Law = Law::new("fact.neg-below-imp", "¬a ≤ a → b", "induced order structure");

    pub const FACTS: [Law; 7] = [
        FACT_POSET_TOP,
        FACT_DIRECTOID,
        FACT_SWITCHING,
        FACT_OPLUS_UPPER,
        FACT_JOIN_UPPER,
        FACT_MEET_LOWER,
        FACT_NEG_IMP,
    ];

    pub const SAI: Law = Law::new("sai", "x ≤ y in [a, 1] implies y^a ≤ x^a", "section antitone involutions");
}

fn first_pair(n: usize, fails: impl Fn(usize, usize) -> bool) -> Option<Witness> {
    pairs(n).find(|&(x, y)| fails(x, y)).map(Witness::from)
}

/// Verifies the ten identities that hold in every NMV-algebra.
pub fn check_derived_identities(alg: &NmvAlgebra) -> CheckReport {
    let n = alg.size();
    let (ops, sections) = derive_ops(alg);
    let imp = |x, y| ops.imp.apply(x, y);
    let join = |x, y| ops.sqcup.apply(x, y);
    let neg = |x| alg.neg(x);
    let (zero, one) = (alg.zero(), alg.one());
    // (x ⊔ y)^y, failing when x ⊔ y is outside [y, 1]
    let sec = |a: usize, x: usize| sections.get(a, x).ok();

    let mut r = CheckReport::new();
    r.record_witness(laws::ID_TRIPLE_IMP, first_pair(n, |x, y| imp(imp(imp(x, y), y), y) != imp(x, y)));
    r.record_witness(laws::ID_IMP_SECTION, first_pair(n, |x, y| sec(y, join(x, y)) != Some(imp(x, y))));
    r.record_witness(laws::ID_CONTRAPOSITION, first_pair(n, |x, y| imp(x, y) != imp(neg(y), neg(x))));
    r.record_witness(
        laws::ID_OTIMES_SECTION,
        first_pair(n, |x, y| sec(neg(y), join(x, neg(y))).map(neg) != Some(ops.otimes.apply(x, y))),
    );
    r.record_witness(laws::ID_LUKASIEWICZ, first_pair(n, |x, y| imp(imp(x, y), y) != imp(imp(y, x), x)));
    r.record_witness(laws::ID_ONE_IMP, (0..n).find(|&x| imp(one, x) != x).map(Witness::one));
    r.record_witness(laws::ID_IMP_ZERO, (0..n).find(|&x| imp(x, zero) != neg(x)).map(Witness::one));
    r.record_witness(laws::ID_MEET, first_pair(n, |x, y| ops.otimes.apply(x, imp(x, y)) != ops.sqcap.apply(x, y)));
    r.record_witness(laws::ID_K, first_pair(n, |x, y| imp(x, imp(y, x)) != one));
    r.record_witness(laws::ID_JOIN_IMP, first_pair(n, |x, y| imp(join(x, y), y) != imp(x, y)));
    r
}

/// Verifies the seven structural facts: bounded poset, directoid, switching
/// section involutions and the four order inequalities.
pub fn check_structure_facts(alg: &NmvAlgebra) -> CheckReport {
    let n = alg.size();
    let (ops, sections) = derive_ops(alg);
    let leq = |x, y| alg.leq(x, y);
    let one = alg.one();

    let mut r = CheckReport::new();
    r.record_witness(laws::FACT_POSET_TOP, (0..n).find(|&x| !leq(x, one)).map(Witness::one));
    r.record_witness(laws::FACT_DIRECTOID, directoid_witness(&ops.sqcup));
    let switching = pairs(n).find(|&(a, x)| {
        if !leq(a, x) {
            return false;
        }
        let Ok(xa) = sections.get(a, x) else { return true };
        let endpoints = sections.get(a, a) != Ok(one) || sections.get(a, one) != Ok(a);
        endpoints || sections.get(a, xa) != Ok(x)
    });
    r.record_witness(laws::FACT_SWITCHING, switching.map(Witness::from));
    r.record_witness(
        laws::FACT_OPLUS_UPPER,
        first_pair(n, |a, b| !(leq(a, alg.oplus(a, b)) && leq(b, alg.oplus(a, b)))),
    );
    r.record_witness(
        laws::FACT_JOIN_UPPER,
        first_pair(n, |a, b| !(leq(a, ops.sqcup.apply(a, b)) && leq(b, ops.sqcup.apply(a, b)))),
    );
    r.record_witness(
        laws::FACT_MEET_LOWER,
        first_pair(n, |a, b| !(leq(ops.sqcap.apply(a, b), a) && leq(ops.sqcap.apply(a, b), b))),
    );
    r.record_witness(laws::FACT_NEG_IMP, first_pair(n, |a, b| !leq(alg.neg(a), ops.imp.apply(a, b))));
    r
}

fn directoid_witness(join: &BinaryOp) -> Option<Witness> {
    match Directoid::new(join.clone()) {
        Ok(_) => None,
        Err(Error::NotDirectoid { witness, .. }) => Some(witness),
        Err(_) => unreachable!("directoid validation only reports identity failures"),
    }
}

/// True (Ok) iff every section involution is antitone on its section. The
/// witness is `(a, x, y)` with `a ≤ x ≤ y` but `y^a ≰ x^a`.
pub fn check_sai(alg: &NmvAlgebra) -> Result<(), Witness> {
    let n = alg.size();
    let leq = |x, y| alg.leq(x, y);
    // on [a, 1], x^a = x → a
    match triples(n).find(|&(a, x, y)| leq(a, x) && leq(x, y) && !leq(alg.imp(y, a), alg.imp(x, a))) {
        Some(t) => Err(t.into()),
        None => Ok(()),
    }
}

/// Exhaustive associativity check; witness `(x, y, z)` with
/// `x·(y·z) ≠ (x·y)·z`, first in lexicographic order.
pub fn is_associative(op: &BinaryOp) -> Result<(), Witness> {
    let f = |x, y| op.apply(x, y);
    match triples(op.size()).find(|&(x, y, z)| f(x, f(y, z)) != f(f(x, y), z)) {
        Some(t) => Err(t.into()),
        None => Ok(()),
    }
}
