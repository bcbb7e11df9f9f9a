//! Finite non-associative MV-algebras and residuated posets.
//!
//! The crate represents finite algebras as operation tables over an indexed
//! carrier and checks, by exhaustive evaluation, the laws that relate
//! NMV-algebras `(A, ⊕, ¬, 0)` to conditionally residuated posets and, in the
//! monotone case, to residuated posets.
//!
//! ```
//! use nmv_core::{fixtures, nmv, transforms};
//!
//! let alg = fixtures::example1();
//! assert!(nmv::check_structure_facts(&alg).all_pass());
//! assert!(nmv::is_associative(alg.oplus_table()).is_err());
//!
//! let (crp, flags) = transforms::nmv_to_crp(&alg).unwrap();
//! assert!(flags.all());
//! assert_eq!(transforms::crp_to_nmv(&crp).unwrap(), alg);
//! ```
//!
//! Module map:
//!
//! - [`table`], [`order`], [`directoid`]: carriers, tables, partial orders
//! - [`nmv`]: NMV-algebras, derived operations, sections, SAI
//! - [`residuation`]: conditionally residuated and residuated posets
//! - [`transforms`]: the four conversions
//! - [`search`]: enumeration up to isomorphism, counterexample search

pub mod directoid;
pub mod error;
pub mod fixtures;
pub mod nmv;
pub mod order;
pub mod report;
pub mod residuation;
pub mod search;
pub mod table;
pub mod transforms;

pub use error::{Error, Result};
pub use nmv::NmvAlgebra;
pub use order::PartialOrder;
pub use report::{CheckReport, Law, Verdict, Witness};
pub use residuation::{CondResPoset, PropertyFlags, ResiduatedPoset};
pub use table::{BinaryOp, Carrier, UnaryOp};
pub use transforms::InvolutivePosetWithProduct;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/tables-and-orders.md")]
    mod tables_and_orders {}
    #[doc = include_str!("../../../book/src/nmv-algebras.md")]
    mod nmv_algebras {}
    #[doc = include_str!("../../../book/src/sections.md")]
    mod sections {}
    #[doc = include_str!("../../../book/src/residuation.md")]
    mod residuation {}
    #[doc = include_str!("../../../book/src/conversions.md")]
    mod conversions {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/file-format.md")]
    mod file_format {}
}
