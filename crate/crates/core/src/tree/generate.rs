use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::One;

use super::RootedTree;
use crate::polynomial::BivariatePoly;
use crate::{check_bound, BoundExceeded};

/// Largest vertex count accepted by exhaustive generation.
pub const MAX_GENERATED: usize = 12;

/// Every tree obtained by attaching one new leaf to some vertex of `t`,
/// skipping symmetric duplicates among equal siblings.
fn grafts(t: &RootedTree) -> Vec<RootedTree> {
    let mut kids = t.children().to_vec();
    kids.push(RootedTree::leaf());
    let mut out = vec![RootedTree::from_children(kids)];
    for (i, c) in t.children().iter().enumerate() {
        if i > 0 && t.children()[i - 1] == *c {
            continue;
        }
        for g in grafts(c) {
            let mut kids = t.children().to_vec();
            kids[i] = g;
            out.push(RootedTree::from_children(kids));
        }
    }
    out
}

/// All unlabeled rooted trees on `n` vertices, one per isomorphism class, in
/// canonical order. Empty for `n = 0`.
pub fn enumerate_rooted_trees(n: usize) -> Result<Vec<RootedTree>, BoundExceeded> {
    check_bound(n, MAX_GENERATED)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = BTreeSet::from([RootedTree::leaf()]);
    for _ in 1..n {
        level = level.iter().flat_map(grafts).collect();
    }
    Ok(level.into_iter().collect())
}

/// Number of unlabeled rooted trees on `n` vertices from the divisor-sum
/// recurrence `(n-1) a(n) = sum_{k=1}^{n-1} (sum_{d|k} d a(d)) a(n-k)`.
pub fn count_rooted_trees(n: usize) -> BigInt {
    let mut a = vec![BigInt::from(0), BigInt::one()];
    for m in 2..=n {
        let mut acc = BigInt::from(0);
        for k in 1..m {
            let divisor_sum: BigInt = (1..=k)
                .filter(|d| k % d == 0)
                .map(|d| &a[d] * d)
                .sum();
            acc += divisor_sum * &a[m - k];
        }
        a.push(acc / (m - 1));
    }
    a.get(n).cloned().unwrap_or_default()
}

/// Trees sharing one polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollisionClass {
    pub poly: BivariatePoly,
    pub trees: Vec<RootedTree>,
}

impl CollisionClass {
    /// All unordered pairs within the class.
    pub fn pairs(&self) -> impl Iterator<Item = (&RootedTree, &RootedTree)> {
        self.trees
            .iter()
            .enumerate()
            .flat_map(move |(i, a)| self.trees[i + 1..].iter().map(move |b| (a, b)))
    }
}

/// Outcome of comparing the polynomials of all rooted trees up to a size.
#[derive(Clone, Debug)]
pub struct CollisionReport {
    pub max_size: usize,
    pub trees_examined: usize,
    /// Classes of non-isomorphic trees with identical `P(T; x, y)`.
    pub full: Vec<CollisionClass>,
    /// Classes with identical `P(T; x, 1)`.
    pub at_y_one: Vec<CollisionClass>,
    /// Classes with identical `P(T; 1, y)`.
    pub at_x_one: Vec<CollisionClass>,
}

impl CollisionReport {
    pub fn full_pairs(&self) -> usize {
        self.full.iter().map(|c| c.pairs().count()).sum()
    }

    /// The class in `classes` containing both trees, if any.
    pub fn shared_class<'a>(
        classes: &'a [CollisionClass],
        a: &RootedTree,
        b: &RootedTree,
    ) -> Option<&'a CollisionClass> {
        classes
            .iter()
            .find(|c| c.trees.contains(a) && c.trees.contains(b))
    }
}

fn classes_of(polys: impl Iterator<Item = (BivariatePoly, RootedTree)>) -> Vec<CollisionClass> {
    let mut groups: HashMap<BivariatePoly, Vec<RootedTree>> = HashMap::new();
    for (p, t) in polys {
        groups.entry(p).or_default().push(t);
    }
    let mut classes: Vec<CollisionClass> = groups
        .into_iter()
        .filter(|(_, ts)| ts.len() > 1)
        .map(|(poly, mut trees)| {
            trees.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
            CollisionClass { poly, trees }
        })
        .collect();
    classes.sort_by(|a, b| {
        let key = |c: &CollisionClass| (c.trees[0].size(), c.trees[0].clone());
        key(a).cmp(&key(b))
    });
    classes
}

/// Searches every rooted tree with at most `max_size` vertices for pairs of
/// non-isomorphic trees whose polynomials agree, in full and after setting
/// `y = 1` or `x = 1`.
pub fn collision_search(max_size: usize) -> Result<CollisionReport, BoundExceeded> {
    check_bound(max_size, MAX_GENERATED)?;
    let mut entries = Vec::new();
    for n in 1..=max_size {
        for t in enumerate_rooted_trees(n)? {
            entries.push((t.poly(), t));
        }
    }
    let one = BigInt::one();
    let full = classes_of(entries.iter().map(|(p, t)| (p.clone(), t.clone())));
    let at_y_one = classes_of(entries.iter().map(|(p, t)| (p.specialize_y(&one), t.clone())));
    let at_x_one = classes_of(entries.iter().map(|(p, t)| (p.specialize_x(&one), t.clone())));
    Ok(CollisionReport {
        max_size,
        trees_examined: entries.len(),
        full,
        at_y_one,
        at_x_one,
    })
}
