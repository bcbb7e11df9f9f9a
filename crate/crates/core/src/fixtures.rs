//! Reference structures used throughout the tests, the book and the CLI.

use crate::nmv::NmvAlgebra;
use crate::order::PartialOrder;
use crate::table::{BinaryOp, Carrier, UnaryOp};
use crate::transforms::InvolutivePosetWithProduct;

/// The six-element NMV-algebra on `{0, a, b, c, d, 1}` whose induced order
/// is not a lattice (`a, b` have the two minimal upper bounds `c, d`).
///
/// The element written `e` in some presentations of this example is `d`.
pub fn example1() -> NmvAlgebra {
    NmvAlgebra::from_labels(
        &["0", "a", "b", "c", "d", "1"],
        &[
            &["0", "a", "b", "c", "d", "1"],
            &["a", "d", "c", "c", "1", "1"],
            &["b", "c", "d", "1", "d", "1"],
            &["c", "c", "1", "1", "1", "1"],
            &["d", "1", "d", "1", "1", "1"],
            &["1", "1", "1", "1", "1", "1"],
        ],
        &["1", "d", "c", "b", "a", "0"],
        "0",
    )
    .expect("the six-element example is an NMV-algebra")
}

/// Strict comparabilities of [`example1`]'s order: `0 < a, b < c, d < 1`.
pub fn example1_order_pairs() -> Vec<(usize, usize)> {
    vec![(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 5), (4, 5)]
}

/// The two-element Boolean algebra `{0, 1}`.
pub fn boolean() -> NmvAlgebra {
    lukasiewicz_chain(2)
}

/// The Łukasiewicz chain `{0, 1/(n-1), …, 1}` with `x ⊕ y = min(1, x + y)`
/// and `¬x = 1 - x`, elements labelled `0, a, b, …, 1`.
pub fn lukasiewicz_chain(size: usize) -> NmvAlgebra {
    assert!(size >= 2);
    let top = size - 1;
    NmvAlgebra::new(
        Carrier::standard(size),
        BinaryOp::from_fn(size, |x, y| (x + y).min(top)).unwrap(),
        UnaryOp::from_fn(size, |x| top - x).unwrap(),
        0,
    )
    .expect("Łukasiewicz chains are MV-algebras")
}

/// The chain `0 < h < 1` with `¬h = h` and `x ⊗ y = max(0, x + y - 1)`.
pub fn lukasiewicz_ipp3() -> InvolutivePosetWithProduct {
    lukasiewicz_ipp(3)
}

/// The chain of the given size as an involutive poset with product.
pub fn lukasiewicz_ipp(size: usize) -> InvolutivePosetWithProduct {
    let top = size - 1;
    InvolutivePosetWithProduct::new(
        Carrier::standard(size),
        PartialOrder::chain(size),
        UnaryOp::from_fn(size, |x| top - x).unwrap(),
        BinaryOp::from_fn(size, |x, y| (x + y).saturating_sub(top)).unwrap(),
        0,
        top,
    )
    .expect("Łukasiewicz product satisfies the hypotheses")
}
