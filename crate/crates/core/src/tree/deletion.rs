//! Deletion-contraction on edges at the root.
//!
//! For the root edge `e` to the `i`-th branch `T_i` of a tree `T` with
//! `n = |T|` vertices:
//!
//! * bridge (the only root edge): `P(T) = P(T/e) + y^(n-1)`
//! * pendant (`T_i` is a leaf): `P(T) = x P(T/e) - x y^(n-2) + y^(n-1)`
//! * otherwise: `P(T) = P(T/e) + y^(|T_i|-1) P(T \ T_i) - 2 y^(n-2) + y^(n-1)`
//!
//! The bridge rule takes precedence when the only branch is a leaf.

use std::collections::HashMap;

use num_bigint::BigInt;

use super::RootedTree;
use crate::polynomial::BivariatePoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootEdgeKind {
    Bridge,
    Pendant,
    Interior,
}

fn assert_root_edge(t: &RootedTree, i: usize) {
    assert!(
        i < t.children().len(),
        "tree {t} has no root edge with index {i}"
    );
}

pub fn root_edge_kind(t: &RootedTree, i: usize) -> RootEdgeKind {
    assert_root_edge(t, i);
    if t.children().len() == 1 {
        RootEdgeKind::Bridge
    } else if t.children()[i].is_leaf() {
        RootEdgeKind::Pendant
    } else {
        RootEdgeKind::Interior
    }
}

/// `T/e`: the root absorbs the endpoint of its `i`-th edge, inheriting that
/// vertex's branches.
pub fn contract_root_edge(t: &RootedTree, i: usize) -> RootedTree {
    assert_root_edge(t, i);
    let mut kids: Vec<RootedTree> = t
        .children()
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != i)
        .map(|(_, c)| c.clone())
        .collect();
    kids.extend(t.children()[i].children().iter().cloned());
    RootedTree::from_children(kids)
}

/// `T \ T_i`: the tree with the `i`-th branch removed.
pub fn delete_branch(t: &RootedTree, i: usize) -> RootedTree {
    assert_root_edge(t, i);
    let kids = t
        .children()
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != i)
        .map(|(_, c)| c.clone())
        .collect();
    RootedTree::from_children(kids)
}

/// Right-hand side of the deletion-contraction identity for root edge `i`,
/// with `poly` evaluating the smaller trees.
pub fn deletion_contraction_rhs<F>(t: &RootedTree, i: usize, mut poly: F) -> BivariatePoly
where
    F: FnMut(&RootedTree) -> BivariatePoly,
{
    let n = t.size() as u32;
    let top = BivariatePoly::y_pow(n - 1);
    let contracted = poly(&contract_root_edge(t, i));
    match root_edge_kind(t, i) {
        RootEdgeKind::Bridge => &contracted + &top,
        RootEdgeKind::Pendant => {
            let x = BivariatePoly::x();
            let corrected = &contracted - &BivariatePoly::y_pow(n - 2);
            &(&x * &corrected) + &top
        }
        RootEdgeKind::Interior => {
            let branch = t.children()[i].size() as u32;
            let deleted = poly(&delete_branch(t, i));
            let shifted = &BivariatePoly::y_pow(branch - 1) * &deleted;
            let correction = BivariatePoly::monomial(BigInt::from(-2), 0, n - 2);
            &(&(&contracted + &shifted) + &correction) + &top
        }
    }
}

/// `P(T)` computed only through deletion-contraction on the first root edge,
/// bottoming out at the single vertex.
pub fn poly_by_deletion_contraction(t: &RootedTree) -> BivariatePoly {
    let mut memo = HashMap::new();
    dc(t, &mut memo)
}

fn dc(t: &RootedTree, memo: &mut HashMap<RootedTree, BivariatePoly>) -> BivariatePoly {
    if t.is_leaf() {
        return BivariatePoly::x();
    }
    if let Some(p) = memo.get(t) {
        return p.clone();
    }
    let p = deletion_contraction_rhs(t, 0, |s| dc(s, memo));
    memo.insert(t.clone(), p.clone());
    p
}
