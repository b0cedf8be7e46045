//! Unordered rooted trees and their polynomial `P(T; x, y)`.
//!
//! Trees are stored in canonical form: the children of every node are sorted,
//! so isomorphic trees are structurally equal and hash identically. The text
//! format is the nested-parenthesis encoding `tree ::= "(" tree* ")"`, e.g.
//! `"((()())(()))"` for a root with two branches of sizes three and two.

mod antichain;
mod deletion;
mod generate;

pub use antichain::{
    antichain_expansion, count_antichains, count_cutsets, count_maximal_antichains,
    count_maximal_antichains_without_leaves, count_root_subtrees, maximal_antichains,
    TreeAntichain, TreeLayout,
};
pub use deletion::{
    contract_root_edge, delete_branch, deletion_contraction_rhs, poly_by_deletion_contraction,
    root_edge_kind, RootEdgeKind,
};
pub use generate::{
    collision_search, count_rooted_trees, enumerate_rooted_trees, CollisionClass, CollisionReport,
    MAX_GENERATED,
};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::polynomial::BivariatePoly;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootedTree {
    children: Vec<RootedTree>,
    size: usize,
    leaves: usize,
}

impl RootedTree {
    /// The single-vertex tree.
    pub fn leaf() -> Self {
        Self {
            children: Vec::new(),
            size: 1,
            leaves: 1,
        }
    }

    /// A root with the given branches, brought into canonical order.
    pub fn from_children(mut children: Vec<RootedTree>) -> Self {
        if children.is_empty() {
            return Self::leaf();
        }
        children.sort();
        let size = 1 + children.iter().map(|c| c.size).sum::<usize>();
        let leaves = children.iter().map(|c| c.leaves).sum();
        Self {
            children,
            size,
            leaves,
        }
    }

    /// Star on `n >= 1` vertices rooted at its centre.
    pub fn star(n: usize) -> Self {
        assert!(n >= 1, "a star needs at least one vertex");
        Self::from_children(vec![Self::leaf(); n - 1])
    }

    /// Path on `n >= 1` vertices rooted at an endpoint.
    pub fn path(n: usize) -> Self {
        assert!(n >= 1, "a path needs at least one vertex");
        (1..n).fold(Self::leaf(), |t, _| Self::from_children(vec![t]))
    }

    pub fn children(&self) -> &[RootedTree] {
        &self.children
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// `P(T; x, y)`: `x` for a single vertex, otherwise the product over the
    /// branches plus `y^(|T|-1)`.
    pub fn poly(&self) -> BivariatePoly {
        if self.is_leaf() {
            return BivariatePoly::x();
        }
        let product: BivariatePoly = self.children.iter().map(RootedTree::poly).product();
        &product + &BivariatePoly::y_pow(self.size as u32 - 1)
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for c in &self.children {
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeParseError {
    #[error("empty input")]
    Empty,
    #[error("unexpected character {found:?} at position {pos}")]
    Unexpected { pos: usize, found: char },
    #[error("unclosed parenthesis opened at position {pos}")]
    Unclosed { pos: usize },
    #[error("trailing input at position {pos}")]
    Trailing { pos: usize },
}

impl FromStr for RootedTree {
    type Err = TreeParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tokens: Vec<(usize, char)> =
            s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let Some(&(pos, first)) = tokens.first() else {
            return Err(TreeParseError::Empty);
        };
        if first != '(' {
            return Err(TreeParseError::Unexpected { pos, found: first });
        }
        let mut stack: Vec<(usize, Vec<RootedTree>)> = Vec::new();
        for (k, &(pos, c)) in tokens.iter().enumerate() {
            match c {
                '(' => stack.push((pos, Vec::new())),
                ')' => {
                    let (_, kids) = stack
                        .pop()
                        .ok_or(TreeParseError::Unexpected { pos, found: c })?;
                    let node = RootedTree::from_children(kids);
                    match stack.last_mut() {
                        Some((_, siblings)) => siblings.push(node),
                        None => {
                            return match tokens.get(k + 1) {
                                Some(&(pos, _)) => Err(TreeParseError::Trailing { pos }),
                                None => Ok(node),
                            };
                        }
                    }
                }
                found => return Err(TreeParseError::Unexpected { pos, found }),
            }
        }
        let (pos, _) = stack.pop().expect("loop returns once the stack empties");
        Err(TreeParseError::Unclosed { pos })
    }
}
