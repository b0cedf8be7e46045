use num_bigint::BigInt;

use super::RootedTree;
use crate::polynomial::BivariatePoly;
use crate::{check_bound, BoundExceeded, ORACLE_BOUND};

/// Flat view of a tree with vertices numbered in canonical DFS preorder
/// (the root is 0, children visited in canonical order).
#[derive(Clone, Debug)]
pub struct TreeLayout {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    subtree_size: Vec<usize>,
}

impl TreeLayout {
    pub fn new(t: &RootedTree) -> Self {
        let mut layout = TreeLayout {
            parent: Vec::with_capacity(t.size()),
            children: Vec::with_capacity(t.size()),
            subtree_size: Vec::with_capacity(t.size()),
        };
        layout.push(t, None);
        layout
    }

    fn push(&mut self, t: &RootedTree, parent: Option<usize>) -> usize {
        let id = self.parent.len();
        self.parent.push(parent);
        self.children.push(Vec::new());
        self.subtree_size.push(t.size());
        for c in t.children() {
            let cid = self.push(c, Some(id));
            self.children[id].push(cid);
        }
        id
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.children[v].is_empty()
    }

    /// Number of proper descendants of `v`.
    pub fn successors(&self, v: usize) -> usize {
        self.subtree_size[v] - 1
    }

    pub fn leaves(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&v| self.is_leaf(v))
    }

    /// Bit mask of `v` and all its ancestors. Requires `len() <= 64`.
    fn root_path_mask(&self, v: usize) -> u64 {
        let mut mask = 0u64;
        let mut cur = Some(v);
        while let Some(u) = cur {
            mask |= 1 << u;
            cur = self.parent[u];
        }
        mask
    }
}

/// A maximal antichain of a tree with its exponent statistics.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeAntichain {
    /// Sorted DFS indices.
    pub vertices: Vec<usize>,
    /// Number of leaves in the antichain.
    pub leaf_count: usize,
    /// Total number of proper descendants of the members.
    pub successor_count: usize,
}

impl TreeAntichain {
    fn new(mut vertices: Vec<usize>, layout: &TreeLayout) -> Self {
        vertices.sort_unstable();
        let leaf_count = vertices.iter().filter(|&&v| layout.is_leaf(v)).count();
        let successor_count = vertices.iter().map(|&v| layout.successors(v)).sum();
        Self {
            vertices,
            leaf_count,
            successor_count,
        }
    }

    /// The monomial `x^leaf_count y^successor_count`.
    pub fn monomial(&self) -> BivariatePoly {
        BivariatePoly::monomial(1, self.leaf_count as u32, self.successor_count as u32)
    }
}

/// All maximal antichains, each once. A maximal antichain is either the root
/// alone or a union of one maximal antichain from every branch.
pub fn maximal_antichains(t: &RootedTree) -> Vec<TreeAntichain> {
    let layout = TreeLayout::new(t);
    collect_maximal(&layout, 0)
        .into_iter()
        .map(|vs| TreeAntichain::new(vs, &layout))
        .collect()
}

fn collect_maximal(layout: &TreeLayout, v: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![v]];
    if layout.is_leaf(v) {
        return out;
    }
    let mut unions: Vec<Vec<usize>> = vec![Vec::new()];
    for &c in layout.children(v) {
        let branch = collect_maximal(layout, c);
        unions = unions
            .iter()
            .flat_map(|u| {
                branch.iter().map(move |a| {
                    let mut merged = u.clone();
                    merged.extend_from_slice(a);
                    merged
                })
            })
            .collect();
    }
    out.extend(unions);
    out
}

/// `L(T; x, y)`: the sum of `x^leaf_count y^successor_count` over all maximal
/// antichains.
pub fn antichain_expansion(t: &RootedTree) -> BivariatePoly {
    maximal_antichains(t).iter().map(TreeAntichain::monomial).sum()
}

/// Subset-enumeration context shared by the brute-force counters.
struct SubsetOracle {
    n: usize,
    /// For each vertex, the mask of every vertex on a common root path with it
    /// (ancestors and descendants, excluding itself).
    related: Vec<u64>,
    /// Root-to-leaf path masks, one per leaf.
    paths: Vec<u64>,
    leaf_mask: u64,
    parents: Vec<Option<usize>>,
}

impl SubsetOracle {
    fn new(t: &RootedTree) -> Result<Self, BoundExceeded> {
        check_bound(t.size(), ORACLE_BOUND)?;
        let layout = TreeLayout::new(t);
        let n = layout.len();
        let up: Vec<u64> = (0..n).map(|v| layout.root_path_mask(v)).collect();
        let related = (0..n)
            .map(|v| {
                let down = (0..n)
                    .filter(|&u| up[u] & (1 << v) != 0)
                    .fold(0u64, |m, u| m | 1 << u);
                (up[v] | down) & !(1 << v)
            })
            .collect();
        let paths = layout.leaves().map(|l| up[l]).collect();
        let leaf_mask = layout.leaves().fold(0u64, |m, l| m | 1 << l);
        Ok(Self {
            n,
            related,
            paths,
            leaf_mask,
            parents: layout.parent.clone(),
        })
    }

    fn subsets(&self) -> impl Iterator<Item = u64> {
        0..(1u64 << self.n)
    }

    fn members(&self, s: u64) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| s & (1 << v) != 0)
    }

    fn is_antichain(&self, s: u64) -> bool {
        self.members(s).all(|v| self.related[v] & s == 0)
    }

    fn is_maximal_antichain(&self, s: u64) -> bool {
        self.is_antichain(s)
            && (0..self.n).all(|v| s & (1 << v) != 0 || self.related[v] & s != 0)
    }

    fn is_cutset(&self, s: u64) -> bool {
        self.paths.iter().all(|p| p & s != 0)
    }

    fn count(&self, pred: impl Fn(u64) -> bool) -> BigInt {
        BigInt::from(self.subsets().filter(|&s| pred(s)).count())
    }
}

/// Number of antichains, the empty set included, by subset enumeration.
pub fn count_antichains(t: &RootedTree) -> Result<BigInt, BoundExceeded> {
    let o = SubsetOracle::new(t)?;
    Ok(o.count(|s| o.is_antichain(s)))
}

/// Number of vertex sets meeting every root-to-leaf path.
pub fn count_cutsets(t: &RootedTree) -> Result<BigInt, BoundExceeded> {
    let o = SubsetOracle::new(t)?;
    Ok(o.count(|s| o.is_cutset(s)))
}

pub fn count_maximal_antichains(t: &RootedTree) -> Result<BigInt, BoundExceeded> {
    let o = SubsetOracle::new(t)?;
    Ok(o.count(|s| o.is_maximal_antichain(s)))
}

pub fn count_maximal_antichains_without_leaves(t: &RootedTree) -> Result<BigInt, BoundExceeded> {
    let o = SubsetOracle::new(t)?;
    Ok(o.count(|s| s & o.leaf_mask == 0 && o.is_maximal_antichain(s)))
}

/// Number of subtrees containing the root, plus one for the empty subtree
/// (which corresponds to the empty antichain).
pub fn count_root_subtrees(t: &RootedTree) -> Result<BigInt, BoundExceeded> {
    let o = SubsetOracle::new(t)?;
    let rooted = o.count(|s| {
        s & 1 != 0
            && o
                .members(s)
                .all(|v| o.parents[v].is_none_or(|p| s & (1 << p) != 0))
    });
    Ok(rooted + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::enumerate_rooted_trees;
    use std::collections::BTreeSet;

    fn tree(s: &str) -> RootedTree {
        s.parse().unwrap()
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// Maximal antichains straight from the definition, over all subsets.
    fn brute_maximal(t: &RootedTree) -> BTreeSet<Vec<usize>> {
        let layout = TreeLayout::new(t);
        let n = layout.len();
        let on_path = |a: usize, b: usize| {
            layout.root_path_mask(a) & (1 << b) != 0 || layout.root_path_mask(b) & (1 << a) != 0
        };
        let anti = |vs: &[usize]| {
            vs.iter()
                .all(|&a| vs.iter().all(|&b| a == b || !on_path(a, b)))
        };
        (0..1u32 << n)
            .map(|s| (0..n).filter(|&v| s & (1 << v) != 0).collect::<Vec<_>>())
            .filter(|vs| {
                anti(vs)
                    && (0..n).all(|v| {
                        vs.contains(&v) || {
                            let mut ext = vs.clone();
                            ext.push(v);
                            !anti(&ext)
                        }
                    })
            })
            .collect()
    }

    #[test]
    fn layout_is_preorder() {
        let l = TreeLayout::new(&tree("((()())(()))"));
        assert_eq!(l.len(), 6);
        assert_eq!(l.parent(0), None);
        assert_eq!(l.children(0), &[1, 3]);
        assert_eq!(l.successors(0), 5);
        assert_eq!(l.leaves().collect::<Vec<_>>(), vec![2, 4, 5]);
    }

    #[test]
    fn maximal_antichain_examples() {
        let single = maximal_antichains(&RootedTree::leaf());
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].vertices, vec![0]);

        let star3: BTreeSet<_> = maximal_antichains(&RootedTree::star(3))
            .into_iter()
            .map(|a| a.vertices)
            .collect();
        assert_eq!(star3, BTreeSet::from([vec![0], vec![1, 2]]));

        assert_eq!(maximal_antichains(&tree("((()())(()))")).len(), 5);
    }

    #[test]
    fn structural_enumeration_matches_definition() {
        for n in 1..=9 {
            for t in enumerate_rooted_trees(n).unwrap() {
                let got: BTreeSet<_> = maximal_antichains(&t)
                    .into_iter()
                    .map(|a| a.vertices)
                    .collect();
                assert_eq!(got, brute_maximal(&t), "tree {t}");
            }
        }
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(antichain_expansion(&RootedTree::leaf()), BivariatePoly::x());
        assert_eq!(
            antichain_expansion(&RootedTree::star(4)),
            "x^3 + y^3".parse().unwrap()
        );
        assert_eq!(
            antichain_expansion(&tree("((()())(()))")),
            "x^3 + x^2*y + x*y^2 + y^3 + y^5".parse().unwrap()
        );
    }

    #[test]
    fn brute_force_counts() {
        let worked = tree("((()())(()))");
        assert_eq!(count_antichains(&RootedTree::leaf()).unwrap(), int(2));
        assert_eq!(count_antichains(&worked).unwrap(), int(16));
        assert_eq!(count_antichains(&RootedTree::star(4)).unwrap(), int(9));

        assert_eq!(count_cutsets(&RootedTree::leaf()).unwrap(), int(1));
        assert_eq!(count_cutsets(&worked).unwrap(), int(47));
        assert_eq!(count_cutsets(&RootedTree::path(3)).unwrap(), int(7));

        assert_eq!(count_root_subtrees(&RootedTree::leaf()).unwrap(), int(2));
        assert_eq!(count_root_subtrees(&RootedTree::star(4)).unwrap(), int(9));
        assert_eq!(count_root_subtrees(&RootedTree::path(3)).unwrap(), int(4));

        assert_eq!(count_maximal_antichains(&worked).unwrap(), int(5));
    }

    #[test]
    fn oracles_refuse_large_trees() {
        let big = RootedTree::star(ORACLE_BOUND + 1);
        let err = count_antichains(&big).unwrap_err();
        assert_eq!(err.size, ORACLE_BOUND + 1);
        assert!(count_cutsets(&big).is_err());
        assert!(count_root_subtrees(&big).is_err());
        assert!(count_antichains(&RootedTree::star(ORACLE_BOUND)).is_ok());
    }

    #[test]
    fn monomial_multiset_matches_poly_terms() {
        for n in 1..=8 {
            for t in enumerate_rooted_trees(n).unwrap() {
                let mut counts = std::collections::BTreeMap::new();
                for a in maximal_antichains(&t) {
                    *counts
                        .entry((a.leaf_count as u32, a.successor_count as u32))
                        .or_insert(0i64) += 1;
                }
                let poly = t.poly();
                assert_eq!(counts.len(), poly.num_terms());
                for ((i, j), c) in counts {
                    assert_eq!(poly.coeff(i, j), int(c));
                }
            }
        }
    }
}
