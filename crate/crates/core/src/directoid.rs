//! Commutative directoids and their correspondence with directed posets.
//!
//! A directed poset becomes a directoid by letting `x ⊔ y` be the larger of
//! two comparable elements and some fixed common upper bound otherwise.
//! Conversely `x ≤ y ⇔ x ⊔ y = y` recovers a directed order from any
//! directoid.

use crate::error::{Error, Result};
use crate::order::PartialOrder;
use crate::report::Witness;
use crate::table::{pairs, triples, BinaryOp};

/// A join-like operation satisfying idempotence, commutativity and
/// `x ⊔ ((x ⊔ y) ⊔ z) = (x ⊔ y) ⊔ z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Directoid {
    join: BinaryOp,
}

/// How to pick `x ⊔ y` for incomparable `x`, `y`.
pub enum ChoiceRule<'a> {
    /// The smallest-index minimal element of `U(x, y)`.
    SmallestMinimal,
    /// Called once per unordered incomparable pair as `(x, y, U(x, y))` with
    /// `x < y` by index; must return a member of `U(x, y)`.
    Custom(&'a dyn Fn(usize, usize, &[usize]) -> usize),
}

impl Directoid {
    /// Validates the three directoid identities, reporting the first failure.
    pub fn new(join: BinaryOp) -> Result<Self> {
        let n = join.size();
        let j = |x, y| join.apply(x, y);
        if let Some(x) = (0..n).find(|&x| j(x, x) != x) {
            return Err(Error::NotDirectoid { law: "idempotence", witness: Witness::one(x) });
        }
        if let Some(w) = join.commutativity_witness() {
            return Err(Error::NotDirectoid { law: "commutativity", witness: w.into() });
        }
        if let Some(t) = triples(n).find(|&(x, y, z)| j(x, j(j(x, y), z)) != j(j(x, y), z)) {
            return Err(Error::NotDirectoid { law: "absorption", witness: t.into() });
        }
        Ok(Self { join })
    }

    pub fn join(&self) -> &BinaryOp {
        &self.join
    }

    /// `x ≤ y` iff `x ⊔ y = y`.
    pub fn order(&self) -> Result<PartialOrder> {
        PartialOrder::from_fn(self.join.size(), |x, y| self.join.apply(x, y) == y)
    }
}

/// Converts a directed poset into a directoid.
pub fn build_directoid(order: &PartialOrder, rule: ChoiceRule<'_>) -> Result<Directoid> {
    if let Some((x, y)) = order.directedness_witness() {
        return Err(Error::NotDirected(x, y));
    }
    let n = order.size();
    let mut table = vec![0; n * n];
    for (x, y) in pairs(n).filter(|&(x, y)| x <= y) {
        let value = if order.leq(x, y) {
            y
        } else if order.leq(y, x) {
            x
        } else {
            let bounds = order.upper_bounds(x, y);
            let choice = match &rule {
                ChoiceRule::SmallestMinimal => order.minimal_of(&bounds)[0],
                ChoiceRule::Custom(f) => f(x, y, &bounds),
            };
            if !bounds.contains(&choice) {
                return Err(Error::InvalidChoice { x, y, choice });
            }
            choice
        };
        table[x * n + y] = value;
        table[y * n + x] = value;
    }
    Directoid::new(BinaryOp::new(n, table)?)
}


#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    /// Random bounded poset: a random relation on the middle elements, closed
    /// transitively, with a bottom and top adjoined.
    fn bounded_poset() -> impl Strategy<Value = PartialOrder> {
        (1usize..6).prop_flat_map(|m| {
            proptest::collection::vec(any::<bool>(), m * m).prop_map(move |bits| {
                let n = m + 2;
                let mut leq = vec![vec![false; n]; n];
                for (i, row) in leq.iter_mut().enumerate() {
                    row[i] = true;
                    row[n - 1] = true;
                }
                for cell in leq[0].iter_mut() {
                    *cell = true;
                }
                for i in 0..m {
                    for j in i + 1..m {
                        if bits[i * m + j] {
                            leq[i + 1][j + 1] = true;
                        }
                    }
                }
                for k in 0..n {
                    for i in 0..n {
                        for j in 0..n {
                            if leq[i][k] && leq[k][j] {
                                leq[i][j] = true;
                            }
                        }
                    }
                }
                PartialOrder::from_matrix(&leq).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn directoid_round_trips_order(order in bounded_poset()) {
            let d = build_directoid(&order, ChoiceRule::SmallestMinimal).unwrap();
            prop_assert_eq!(d.order().unwrap(), order);
        }

        #[test]
        fn upper_bounds_symmetric(order in bounded_poset()) {
            let n = order.size();
            for x in 0..n {
                for y in 0..n {
                    prop_assert_eq!(order.upper_bounds(x, y), order.upper_bounds(y, x));
                }
            }
        }
    }
}
