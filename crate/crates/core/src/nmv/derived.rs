use crate::error::{Error, Result};
use crate::table::BinaryOp;

use super::NmvAlgebra;

/// Term operations of an NMV-algebra as full tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedOps {
    /// `x → y := ¬x ⊕ y`; also the section map `x^y`.
    pub imp: BinaryOp,
    /// `x ⊔ y := (x → y) → y`
    pub sqcup: BinaryOp,
    /// `x ⊗ y := ¬(¬x ⊕ ¬y)`
    pub otimes: BinaryOp,
    /// `x ⊓ y := ¬(¬x ⊔ ¬y)`
    pub sqcap: BinaryOp,
}

/// The maps `x ↦ x^a` on each section `[a, 1]`.
///
/// Entries outside a section are absent; looking them up is an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionFamily {
    size: usize,
    maps: Vec<Option<usize>>,
}

impl SectionFamily {
    /// `x^a` for `x ∈ [a, 1]`.
    pub fn get(&self, a: usize, x: usize) -> Result<usize> {
        self.maps[a * self.size + x].ok_or(Error::OutsideSection { a, x })
    }

    /// Elements of `[a, 1]`, ascending by index.
    pub fn section(&self, a: usize) -> Vec<usize> {
        (0..self.size).filter(|&x| self.maps[a * self.size + x].is_some()).collect()
    }

    /// `(x, x^a)` pairs of the section map at `a`.
    pub fn map(&self, a: usize) -> Vec<(usize, usize)> {
        (0..self.size).filter_map(|x| self.maps[a * self.size + x].map(|v| (x, v))).collect()
    }

    pub fn size(&self) -> usize {
        self.size
    }
}

/// Computes `→ ⊔ ⊗ ⊓` entrywise and the section maps `x^a := x → a` on
/// `[a, 1]` under the induced order.
pub fn derive_ops(alg: &NmvAlgebra) -> (DerivedOps, SectionFamily) {
    let n = alg.size();
    let table = |f: &dyn Fn(usize, usize) -> usize| BinaryOp::from_fn(n, f).expect("closed operation");
    let ops = DerivedOps {
        imp: table(&|x, y| alg.imp(x, y)),
        sqcup: table(&|x, y| alg.sqcup(x, y)),
        otimes: table(&|x, y| alg.otimes(x, y)),
        sqcap: table(&|x, y| alg.sqcap(x, y)),
    };
    let mut maps = vec![None; n * n];
    for a in 0..n {
        for x in (0..n).filter(|&x| alg.leq(a, x)) {
            maps[a * n + x] = Some(alg.imp(x, a));
        }
    }
    (ops, SectionFamily { size: n, maps })
}
