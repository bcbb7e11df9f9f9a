//! Finite partial orders and the order-theoretic predicates used by the
//! checkers: upper bounds, covering pairs, monotonicity and antitone
//! involutions.

use crate::error::{Error, Result};
use crate::report::Witness;
use crate::table::{pairs, triples, BinaryOp, UnaryOp};

/// A validated partial order stored as a dense `leq` matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialOrder {
    size: usize,
    leq: Vec<bool>,
    least: Option<usize>,
    greatest: Option<usize>,
}

impl PartialOrder {
    /// Validates a square relation matrix. Witnesses are the first
    /// offending tuple in lexicographic order; reflexivity is checked first,
    /// then antisymmetry, then transitivity.
    pub fn from_matrix(rows: &[Vec<bool>]) -> Result<Self> {
        let size = rows.len();
        for row in rows {
            if row.len() != size {
                return Err(Error::TableShape { expected: size, found: row.len() });
            }
        }
        Self::from_flat(size, rows.concat())
    }

    pub fn from_fn(size: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        Self::from_flat(size, pairs(size).map(|(x, y)| leq(x, y)).collect())
    }

    /// Builds the reflexive closure of the given pairs; the pairs must already
    /// be transitively closed.
    pub fn from_pairs(size: usize, pairs_le: &[(usize, usize)]) -> Result<Self> {
        let mut leq = vec![false; size * size];
        for &(x, y) in pairs_le {
            for v in [x, y] {
                if v >= size {
                    return Err(Error::IndexOutOfRange { index: v, size });
                }
            }
            leq[x * size + y] = true;
        }
        for x in 0..size {
            leq[x * size + x] = true;
        }
        Self::from_flat(size, leq)
    }

    fn from_flat(size: usize, leq: Vec<bool>) -> Result<Self> {
        let at = |x: usize, y: usize| leq[x * size + y];
        if let Some(x) = (0..size).find(|&x| !at(x, x)) {
            return Err(Error::NotReflexive(x));
        }
        if let Some((x, y)) = pairs(size).find(|&(x, y)| x != y && at(x, y) && at(y, x)) {
            return Err(Error::NotAntisymmetric(x, y));
        }
        if let Some((x, y, z)) = triples(size).find(|&(x, y, z)| at(x, y) && at(y, z) && !at(x, z)) {
            return Err(Error::NotTransitive(x, y, z));
        }
        let least = (0..size).find(|&b| (0..size).all(|x| at(b, x)));
        let greatest = (0..size).find(|&t| (0..size).all(|x| at(x, t)));
        Ok(Self { size, leq, least, greatest })
    }

    /// A chain `0 < 1 < … < n-1`.
    pub fn chain(size: usize) -> Self {
        Self::from_fn(size, |x, y| x <= y).expect("chain is a partial order")
    }

    /// Discrete order: only `x ≤ x`.
    pub fn antichain(size: usize) -> Self {
        Self::from_fn(size, |x, y| x == y).expect("antichain is a partial order")
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.size + y]
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn least(&self) -> Option<usize> {
        self.least
    }

    pub fn greatest(&self) -> Option<usize> {
        self.greatest
    }

    /// Number of pairs `(x, y)` with `x ≤ y`, reflexive ones included.
    pub fn pair_count(&self) -> usize {
        self.leq.iter().filter(|&&b| b).count()
    }

    /// All pairs `x ≤ y` in lexicographic order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        pairs(self.size).filter(|&(x, y)| self.leq(x, y)).collect()
    }

    /// `U(x, y)`: the common upper bounds of `x` and `y`, ascending by index.
    pub fn upper_bounds(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.size).filter(|&z| self.leq(x, z) && self.leq(y, z)).collect()
    }

    /// The up-set `[a, 1]` when `a`'s greatest element exists.
    pub fn up_set(&self, a: usize) -> Vec<usize> {
        (0..self.size).filter(|&x| self.leq(a, x)).collect()
    }

    /// Minimal elements of a subset, ascending by index.
    pub fn minimal_of(&self, set: &[usize]) -> Vec<usize> {
        set.iter().copied().filter(|&m| !set.iter().any(|&o| self.lt(o, m))).collect()
    }

    /// First pair without a common upper bound, if any.
    pub fn directedness_witness(&self) -> Option<(usize, usize)> {
        pairs(self.size).find(|&(x, y)| self.upper_bounds(x, y).is_empty())
    }

    pub fn is_directed(&self) -> bool {
        self.directedness_witness().is_none()
    }

    /// `y` covers `x`: `x < y` with nothing strictly between.
    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.lt(x, y) && !(0..self.size).any(|z| self.lt(x, z) && self.lt(z, y))
    }

    /// The covering relation (transitive reduction), lexicographic.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        pairs(self.size).filter(|&(x, y)| self.covers(x, y)).collect()
    }

    /// First pair on which two orders of equal size disagree.
    pub fn first_difference(&self, other: &PartialOrder) -> Option<(usize, usize)> {
        if self.size != other.size {
            return Some((self.size.min(other.size), 0));
        }
        pairs(self.size).find(|&(x, y)| self.leq(x, y) != other.leq(x, y))
    }
}

/// Checks `x ≤ y ⇒ op(x, z) ≤ op(y, z)` for every triple; the witness is the
/// first violating `(x, y, z)`.
pub fn is_monotone(op: &BinaryOp, order: &PartialOrder) -> Result<(), Witness> {
    match triples(order.size()).find(|&(x, y, z)| order.leq(x, y) && !order.leq(op.apply(x, z), op.apply(y, z))) {
        Some(t) => Err(t.into()),
        None => Ok(()),
    }
}

/// Checks that `op` is an involution that reverses the order. An involution
/// failure is reported as `(x)`, an antitony failure as `(x, y)` with `x ≤ y`.
pub fn is_antitone_involution(op: &UnaryOp, order: &PartialOrder) -> Result<(), Witness> {
    let n = order.size();
    if let Some(x) = (0..n).find(|&x| op.apply(op.apply(x)) != x) {
        return Err(Witness::one(x));
    }
    match pairs(n).find(|&(x, y)| order.leq(x, y) && !order.leq(op.apply(y), op.apply(x))) {
        Some(p) => Err(p.into()),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::example1_order_pairs;

    fn example1_order() -> PartialOrder {
        PartialOrder::from_pairs(6, &example1_order_pairs()).unwrap()
    }

    #[test]
    fn example1_order_is_bounded() {
        let order = example1_order();
        assert_eq!(order.pair_count(), 19);
        assert_eq!(order.least(), Some(0));
        assert_eq!(order.greatest(), Some(5));
    }

    #[test]
    fn antichain_has_no_bounds() {
        let order = PartialOrder::antichain(3);
        assert_eq!(order.least(), None);
        assert_eq!(order.greatest(), None);
        assert!(!order.is_directed());
        assert_eq!(order.directedness_witness(), Some((0, 1)));
    }

    #[test]
    fn order_axiom_failures_carry_witnesses() {
        let sym = vec![vec![true, true], vec![true, true]];
        assert_eq!(PartialOrder::from_matrix(&sym), Err(Error::NotAntisymmetric(0, 1)));
        let irreflexive = vec![vec![true, false], vec![false, false]];
        assert_eq!(PartialOrder::from_matrix(&irreflexive), Err(Error::NotReflexive(1)));
        let intransitive = vec![vec![true, true, false], vec![false, true, true], vec![false, false, true]];
        assert_eq!(PartialOrder::from_matrix(&intransitive), Err(Error::NotTransitive(0, 1, 2)));
        assert!(matches!(PartialOrder::from_matrix(&[vec![true, false], vec![true]]), Err(Error::TableShape { .. })));
    }

    #[test]
    fn upper_bounds_in_example1() {
        let order = example1_order();
        // a = 1, b = 2; U(a, b) = {c, d, 1}
        assert_eq!(order.upper_bounds(1, 2), vec![3, 4, 5]);
        assert_eq!(order.upper_bounds(1, 1), order.up_set(1));
        assert!(order.upper_bounds(1, 1).contains(&1));
        for y in 0..6 {
            assert_eq!(order.upper_bounds(0, y), order.up_set(y));
        }
    }

    #[test]
    fn covering_pairs_of_example1() {
        assert_eq!(
            example1_order().covering_pairs(),
            vec![(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)]
        );
        assert_eq!(PartialOrder::chain(2).covering_pairs(), vec![(0, 1)]);
    }

    #[test]
    fn monotone_predicates() {
        let chain = PartialOrder::chain(4);
        let meet = BinaryOp::from_fn(4, |x, y| x.min(y)).unwrap();
        assert_eq!(is_monotone(&meet, &chain), Ok(()));
        let flip = BinaryOp::from_fn(4, |x, _| 3 - x).unwrap();
        assert_eq!(is_monotone(&flip, &chain), Err(Witness::triple(0, 1, 0)));
    }

    #[test]
    fn antitone_involutions() {
        let antichain = PartialOrder::antichain(3);
        assert_eq!(is_antitone_involution(&UnaryOp::identity(3), &antichain), Ok(()));
        let chain = PartialOrder::chain(2);
        let constant = UnaryOp::new(vec![0, 0]).unwrap();
        assert_eq!(is_antitone_involution(&constant, &chain), Err(Witness::one(1)));
        let swap = UnaryOp::new(vec![1, 0]).unwrap();
        assert_eq!(is_antitone_involution(&swap, &chain), Ok(()));
        assert_eq!(is_antitone_involution(&UnaryOp::identity(2), &chain), Err(Witness::pair(0, 1)));
    }
}
