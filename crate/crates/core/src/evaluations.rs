//! The six special values of the polynomial and their combinatorial
//! meaning.
//!
//! | point   | trees                               | V-posets                             |
//! |---------|-------------------------------------|--------------------------------------|
//! | `(1,1)` | maximal antichains                  | maximal antichains                   |
//! | `(x,0)` | `x^leaves`                          | `x^basic`                            |
//! | `(0,1)` | maximal antichains without leaves   | maximal antichains without basics    |
//! | `(2,1)` | antichains, the empty one included  | antichains, the empty one included   |
//! | `(1,2)` | cutsets                             | cutsets                              |
//! | `(2,2)` | `2^n`                               | `2^n`                                |

use num_bigint::BigInt;

use crate::polynomial::BivariatePoly;
use crate::tree::{self, RootedTree};
use crate::BoundExceeded;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluations {
    /// At `(1,1)`.
    pub maximal_antichains: BigInt,
    /// The polynomial in `x` left after setting `y = 0`.
    pub at_x_zero: BivariatePoly,
    /// At `(0,1)`.
    pub maximal_antichains_without_basic: BigInt,
    /// At `(2,1)`.
    pub antichains: BigInt,
    /// At `(1,2)`.
    pub cutsets: BigInt,
    /// At `(2,2)`.
    pub subsets: BigInt,
}

impl Evaluations {
    /// Reads the six values off a polynomial.
    pub fn of_poly(p: &BivariatePoly) -> Self {
        let at = |x: i64, y: i64| p.eval(&BigInt::from(x), &BigInt::from(y));
        Self {
            maximal_antichains: at(1, 1),
            at_x_zero: p.specialize_y(&BigInt::from(0)),
            maximal_antichains_without_basic: at(0, 1),
            antichains: at(2, 1),
            cutsets: at(1, 2),
            subsets: at(2, 2),
        }
    }

    /// Counts taken directly from the tree by subset enumeration.
    pub fn tree_oracle(t: &RootedTree) -> Result<Self, BoundExceeded> {
        Ok(Self {
            maximal_antichains: tree::count_maximal_antichains(t)?,
            at_x_zero: BivariatePoly::monomial(1, t.leaf_count() as u32, 0),
            maximal_antichains_without_basic: tree::count_maximal_antichains_without_leaves(t)?,
            antichains: tree::count_antichains(t)?,
            cutsets: tree::count_cutsets(t)?,
            subsets: BigInt::from(1) << t.size(),
        })
    }

    /// Labelled rows in table order.
    pub fn rows(&self) -> [(&'static str, String); 6] {
        [
            ("(1,1)", self.maximal_antichains.to_string()),
            ("(x,0)", self.at_x_zero.to_string()),
            ("(0,1)", self.maximal_antichains_without_basic.to_string()),
            ("(2,1)", self.antichains.to_string()),
            ("(1,2)", self.cutsets.to_string()),
            ("(2,2)", self.subsets.to_string()),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::enumerate_rooted_trees;

    #[test]
    fn worked_tree() {
        let t: RootedTree = "((()())(()))".parse().unwrap();
        let e = Evaluations::of_poly(&t.poly());
        assert_eq!(e.maximal_antichains, BigInt::from(5));
        assert_eq!(e.antichains, BigInt::from(16));
        assert_eq!(e.cutsets, BigInt::from(47));
        assert_eq!(e.subsets, BigInt::from(64));
        assert_eq!(e.at_x_zero.to_string(), "x^3");
        assert_eq!(e, Evaluations::tree_oracle(&t).unwrap());
    }

    #[test]
    fn small_trees_match_oracle() {
        for n in 1..=8 {
            for t in enumerate_rooted_trees(n).unwrap() {
                assert_eq!(
                    Evaluations::of_poly(&t.poly()),
                    Evaluations::tree_oracle(&t).unwrap(),
                    "{t}"
                );
            }
        }
    }

    #[test]
    fn rows_are_labelled() {
        let e = Evaluations::of_poly(&"x + y".parse().unwrap());
        let rows = e.rows();
        assert_eq!(rows[0], ("(1,1)", "2".to_string()));
        assert_eq!(rows[1], ("(x,0)", "x".to_string()));
        assert_eq!(rows[5], ("(2,2)", "4".to_string()));
    }
}
