//! Finite posets and the class of V-posets.
//!
//! A [`Poset`] stores its strict order as a transitively closed relation, one
//! bit row per element, so comparability queries are constant time. Ground
//! sets are limited to [`MAX_ELEMENTS`] elements.
//!
//! Text format: the first line is the element count `n`; every following
//! non-empty line `u v` (1-indexed) declares `u < v`. Lines starting with `#`
//! are comments. Relations need not be covers; the closure is taken.

mod iso;
mod oracle;
mod poly;
mod recognition;
mod status;

pub use iso::{all_labeled_posets, poset_isomorphic, MAX_ISOMORPHISM_SIZE, MAX_LABELED_SIZE};
pub use oracle::{
    count_antichains, count_cutsets, count_maximal_antichains,
    count_maximal_antichains_without_basic, evaluation_polynomial_exists, evaluations,
    maximal_antichains, maximal_chains, minimal_cutsets, search_evaluation_polynomial,
    EvaluationTarget,
};
pub use poly::{
    antichain_expansion, antichain_terms, poset_poly, trace_poly, PosetAntichain,
    PosetPolyError,
};
pub use recognition::{
    decompose, find_forbidden, is_v_poset, BuildTrace, Certificate, ForbiddenPattern,
    PatternKind, TraceParseError,
};
pub use status::{associated_basics, element_statuses, is_basic, region_set, ElementStatus};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::tree::{RootedTree, TreeLayout};

/// Largest supported ground set.
pub const MAX_ELEMENTS: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("missing element count on the first line")]
    MissingSize,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("{n} elements exceed the supported maximum of {MAX_ELEMENTS}")]
    TooLarge { n: usize },
    #[error("element {element} out of range 1..={n}")]
    OutOfRange { element: usize, n: usize },
    #[error("element {element} related to itself")]
    SelfRelation { element: usize },
    #[error("relations contain a cycle through element {element}")]
    Cycle { element: usize },
    #[error("relation is not a strict order: {0}")]
    NotStrictOrder(&'static str),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    RootGreatest,
    RootLeast,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    /// `above[u]` has bit `v` set iff `u < v`.
    above: Vec<u64>,
    /// `below[v]` has bit `u` set iff `u < v`.
    below: Vec<u64>,
}

pub(crate) fn bit(i: usize) -> u64 {
    1u64 << i
}

pub(crate) fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

impl Poset {
    fn from_above(above: Vec<u64>) -> Self {
        let n = above.len();
        let mut below = vec![0u64; n];
        for (u, &row) in above.iter().enumerate() {
            for v in bits(row) {
                below[v] |= bit(u);
            }
        }
        Self { n, above, below }
    }

    /// The empty poset.
    pub fn empty() -> Self {
        Self::from_above(Vec::new())
    }

    /// `n` pairwise incomparable elements.
    pub fn antichain(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS);
        Self::from_above(vec![0; n])
    }

    /// The chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS);
        Self::from_above(
            (0..n)
                .map(|u| (u + 1..n).fold(0, |m, v| m | bit(v)))
                .collect(),
        )
    }

    /// Builds a poset from 0-indexed relations `u < v`, taking the
    /// transitive closure.
    pub fn from_relations(n: usize, relations: &[(usize, usize)]) -> Result<Self, PosetError> {
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooLarge { n });
        }
        let mut above = vec![0u64; n];
        for &(u, v) in relations {
            for e in [u, v] {
                if e >= n {
                    return Err(PosetError::OutOfRange { element: e + 1, n });
                }
            }
            if u == v {
                return Err(PosetError::SelfRelation { element: u + 1 });
            }
            above[u] |= bit(v);
        }
        for k in 0..n {
            for i in 0..n {
                if above[i] & bit(k) != 0 {
                    above[i] |= above[k];
                }
            }
        }
        if let Some(u) = (0..n).find(|&u| above[u] & bit(u) != 0) {
            return Err(PosetError::Cycle { element: u + 1 });
        }
        Ok(Self::from_above(above))
    }

    /// Builds a poset from a complete strict-order predicate, validating the
    /// order axioms instead of closing the relation.
    pub fn from_strict_order<F>(n: usize, lt: F) -> Result<Self, PosetError>
    where
        F: Fn(usize, usize) -> bool,
    {
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooLarge { n });
        }
        let above: Vec<u64> = (0..n)
            .map(|u| (0..n).filter(|&v| lt(u, v)).fold(0, |m, v| m | bit(v)))
            .collect();
        for u in 0..n {
            if above[u] & bit(u) != 0 {
                return Err(PosetError::NotStrictOrder("not irreflexive"));
            }
            for v in bits(above[u]) {
                if above[v] & bit(u) != 0 {
                    return Err(PosetError::NotStrictOrder("not antisymmetric"));
                }
                if above[v] & !above[u] != 0 {
                    return Err(PosetError::NotStrictOrder("not transitive"));
                }
            }
        }
        Ok(Self::from_above(above))
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Mask of the whole ground set.
    pub fn all(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            bit(self.n) - 1
        }
    }

    pub fn lt(&self, u: usize, v: usize) -> bool {
        self.above[u] & bit(v) != 0
    }

    pub fn comparable(&self, u: usize, v: usize) -> bool {
        self.lt(u, v) || self.lt(v, u)
    }

    /// Distinct and not comparable.
    pub fn incomparable(&self, u: usize, v: usize) -> bool {
        u != v && !self.comparable(u, v)
    }

    /// Elements strictly above `u`.
    pub fn above(&self, u: usize) -> u64 {
        self.above[u]
    }

    /// Elements strictly below `u`.
    pub fn below(&self, u: usize) -> u64 {
        self.below[u]
    }

    /// Elements comparable to `u`, excluding `u`.
    pub fn comparable_mask(&self, u: usize) -> u64 {
        self.above[u] | self.below[u]
    }

    /// Greatest element of the subposet induced by `mask`, if any.
    pub fn greatest_in(&self, mask: u64) -> Option<usize> {
        bits(mask).find(|&g| mask & !bit(g) & !self.below[g] == 0)
    }

    pub fn least_in(&self, mask: u64) -> Option<usize> {
        bits(mask).find(|&l| mask & !bit(l) & !self.above[l] == 0)
    }

    pub fn greatest(&self) -> Option<usize> {
        self.greatest_in(self.all())
    }

    pub fn least(&self) -> Option<usize> {
        self.least_in(self.all())
    }

    /// True for linear orders, the empty poset included.
    pub fn is_chain(&self) -> bool {
        (0..self.n).all(|u| self.comparable_mask(u) | bit(u) == self.all())
    }

    pub fn minimal_elements(&self) -> u64 {
        (0..self.n)
            .filter(|&u| self.below[u] == 0)
            .fold(0, |m, u| m | bit(u))
    }

    pub fn maximal_elements(&self) -> u64 {
        (0..self.n)
            .filter(|&u| self.above[u] == 0)
            .fold(0, |m, u| m | bit(u))
    }

    /// Connected components of the comparability graph restricted to `mask`,
    /// ordered by lowest element.
    pub fn components_in(&self, mask: u64) -> Vec<u64> {
        let mut remaining = mask;
        let mut comps = Vec::new();
        while remaining != 0 {
            let start = bit(remaining.trailing_zeros() as usize);
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let reach = bits(frontier).fold(0, |m, u| m | self.comparable_mask(u)) & mask;
                frontier = reach & !comp;
                comp |= reach;
            }
            remaining &= !comp;
            comps.push(comp);
        }
        comps
    }

    pub fn components(&self) -> Vec<u64> {
        self.components_in(self.all())
    }

    /// The subposet induced by `mask`, with the original index of each new
    /// element.
    pub fn induced(&self, mask: u64) -> (Poset, Vec<usize>) {
        let keep: Vec<usize> = bits(mask & self.all()).collect();
        let above = keep
            .iter()
            .map(|&u| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.lt(u, v))
                    .fold(0, |m, (j, _)| m | bit(j))
            })
            .collect();
        (Self::from_above(above), keep)
    }

    /// The same ground set with every relation reversed.
    pub fn dual(&self) -> Poset {
        Poset {
            n: self.n,
            above: self.below.clone(),
            below: self.above.clone(),
        }
    }

    /// Disjoint union; elements of later parts are shifted past earlier ones.
    pub fn disjoint_union(parts: &[&Poset]) -> Poset {
        let mut above = Vec::new();
        for p in parts {
            let offset = above.len();
            above.extend(p.above.iter().map(|row| row << offset));
        }
        assert!(above.len() <= MAX_ELEMENTS);
        Self::from_above(above)
    }

    /// Adds a new greatest element with index `len()`.
    pub fn with_greatest(&self) -> Poset {
        assert!(self.n < MAX_ELEMENTS);
        let top = bit(self.n);
        let mut above: Vec<u64> = self.above.iter().map(|row| row | top).collect();
        above.push(0);
        Self::from_above(above)
    }

    /// Adds a new least element with index `len()`.
    pub fn with_least(&self) -> Poset {
        assert!(self.n < MAX_ELEMENTS);
        let mut above = self.above.clone();
        above.push(self.all());
        Self::from_above(above)
    }

    /// Cover relations `(u, v)`: `u < v` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in bits(self.above[u]) {
                if self.above[u] & self.below[v] == 0 {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The poset whose Hasse diagram is `t`, with vertices numbered in the
    /// tree's canonical preorder.
    pub fn from_tree(t: &RootedTree, orientation: Orientation) -> Poset {
        let layout = TreeLayout::new(t);
        let edges: Vec<(usize, usize)> = (1..layout.len())
            .map(|v| {
                let p = layout.parent(v).expect("non-root vertex has a parent");
                match orientation {
                    Orientation::RootGreatest => (v, p),
                    Orientation::RootLeast => (p, v),
                }
            })
            .collect();
        Poset::from_relations(layout.len(), &edges).expect("tree edges form a strict order")
    }
}

impl fmt::Display for Poset {
    /// The text format, listing cover relations only.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for (u, v) in self.covers() {
            writeln!(f, "{} {}", u + 1, v + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .covers()
            .iter()
            .map(|(u, v)| format!("{}<{}", u + 1, v + 1))
            .collect();
        write!(f, "Poset({}; {})", self.n, covers.join(" "))
    }
}

impl FromStr for Poset {
    type Err = PosetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, first) = lines.next().ok_or(PosetError::MissingSize)?;
        let n: usize = first.parse().map_err(|_| PosetError::Syntax {
            line,
            message: format!("expected element count, found {first:?}"),
        })?;
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooLarge { n });
        }
        let mut relations = Vec::new();
        for (line, text) in lines {
            let fields: Vec<&str> = text.split_whitespace().collect();
            let [a, b] = fields[..] else {
                return Err(PosetError::Syntax {
                    line,
                    message: format!("expected two element indices, found {text:?}"),
                });
            };
            let index = |f: &str| -> Result<usize, PosetError> {
                let k: usize = f.parse().map_err(|_| PosetError::Syntax {
                    line,
                    message: format!("invalid element index {f:?}"),
                })?;
                if k == 0 || k > n {
                    return Err(PosetError::OutOfRange { element: k, n });
                }
                Ok(k - 1)
            };
            relations.push((index(a)?, index(b)?));
        }
        Poset::from_relations(n, &relations)
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn parse_examples() {
        let c = poset("2\n1 2");
        assert_eq!(c, Poset::chain(2));
        let ten = poset(TEN_ELEMENT);
        assert_eq!(ten.len(), 10);
        assert_eq!(ten.greatest(), Some(0));
        assert!(ten.lt(6, 0));
        assert!(ten.incomparable(6, 8));
        assert_eq!(
            "2\n1 2\n2 1".parse::<Poset>(),
            Err(PosetError::Cycle { element: 1 })
        );
    }

    #[test]
    fn parse_errors() {
        assert_eq!("".parse::<Poset>(), Err(PosetError::MissingSize));
        assert_eq!(
            "2\n1 3".parse::<Poset>(),
            Err(PosetError::OutOfRange { element: 3, n: 2 })
        );
        assert_eq!(
            "2\n0 1".parse::<Poset>(),
            Err(PosetError::OutOfRange { element: 0, n: 2 })
        );
        assert_eq!(
            "2\n2 2".parse::<Poset>(),
            Err(PosetError::SelfRelation { element: 2 })
        );
        assert!(matches!(
            "2\n1".parse::<Poset>(),
            Err(PosetError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            "two".parse::<Poset>(),
            Err(PosetError::Syntax { line: 1, .. })
        ));
        assert_eq!("65".parse::<Poset>(), Err(PosetError::TooLarge { n: 65 }));
        assert_eq!(
            "3\n1 2\n2 3\n3 1".parse::<Poset>(),
            Err(PosetError::Cycle { element: 1 })
        );
    }

    #[test]
    fn comments_and_blank_lines() {
        let p = poset("# a chain\n\n3\n1 2\n\n2 3\n");
        assert_eq!(p, Poset::chain(3));
    }

    #[test]
    fn closure_and_axioms() {
        let ten = poset(TEN_ELEMENT);
        for u in 0..ten.len() {
            assert!(!ten.lt(u, u));
            for v in 0..ten.len() {
                assert!(!(ten.lt(u, v) && ten.lt(v, u)));
                for w in 0..ten.len() {
                    if ten.lt(u, v) && ten.lt(v, w) {
                        assert!(ten.lt(u, w));
                    }
                }
            }
        }
        // v7 < v1 only through intermediate elements
        assert!(ten.lt(6, 0));
        assert_eq!(ten.covers().len(), 11);
    }

    #[test]
    fn text_round_trip() {
        let ten = poset(TEN_ELEMENT);
        assert_eq!(ten.to_string().parse::<Poset>().unwrap(), ten);
    }

    #[test]
    fn strict_order_validation() {
        assert!(Poset::from_strict_order(2, |u, v| u < v).is_ok());
        assert_eq!(
            Poset::from_strict_order(3, |u, v| u + 1 == v).unwrap_err(),
            PosetError::NotStrictOrder("not transitive")
        );
        assert!(Poset::from_strict_order(2, |u, v| u != v).is_err());
        assert!(Poset::from_strict_order(1, |_, _| true).is_err());
    }

    #[test]
    fn dual_examples() {
        let c = Poset::chain(2);
        let d = c.dual();
        assert!(d.lt(1, 0));
        assert!(!d.lt(0, 1));
        assert_eq!(d.dual(), c);
    }

    #[test]
    fn constructions() {
        let u = Poset::disjoint_union(&[&Poset::chain(2), &Poset::antichain(1)]);
        assert_eq!(u.len(), 3);
        assert!(u.lt(0, 1));
        assert_eq!(u.components(), vec![0b011, 0b100]);
        let g = u.with_greatest();
        assert_eq!(g.greatest(), Some(3));
        assert_eq!(g.components().len(), 1);
        let l = u.with_least();
        assert_eq!(l.least(), Some(3));
        assert_eq!(l.greatest(), None);
        assert!(Poset::chain(4).is_chain());
        assert!(!u.is_chain());
        assert!(Poset::empty().is_chain());
    }

    #[test]
    fn induced_subposet() {
        let ten = poset(TEN_ELEMENT);
        // {v2, v3, v5, v7}
        let (sub, map) = ten.induced(bit(1) | bit(2) | bit(4) | bit(6));
        assert_eq!(map, vec![1, 2, 4, 6]);
        assert!(sub.is_chain());
        assert_eq!(sub.least(), Some(3));
    }

    #[test]
    fn tree_posets() {
        let star = RootedTree::star(3);
        let g = Poset::from_tree(&star, Orientation::RootGreatest);
        assert_eq!(g.greatest(), Some(0));
        assert_eq!(g.minimal_elements().count_ones(), 2);
        let path = Poset::from_tree(&RootedTree::path(3), Orientation::RootLeast);
        assert!(path.is_chain());
        assert_eq!(path.least(), Some(0));
        let single = Poset::from_tree(&RootedTree::leaf(), Orientation::RootLeast);
        assert_eq!(single, Poset::antichain(1));
    }
}
