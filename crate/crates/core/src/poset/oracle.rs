//! Brute-force counts over element subsets, used to check the polynomial
//! evaluations, and the search for polynomials with prescribed evaluations.

use num_bigint::BigInt;

use super::status::basic_mask;
use super::{bit, bits, Poset};
use crate::evaluations::Evaluations;
use crate::polynomial::BivariatePoly;
use crate::{check_bound, BoundExceeded, ORACLE_BOUND};

fn subsets(p: &Poset) -> Result<impl Iterator<Item = u64>, BoundExceeded> {
    check_bound(p.len(), ORACLE_BOUND)?;
    Ok(0..(1u64 << p.len()))
}

fn is_antichain(p: &Poset, s: u64) -> bool {
    bits(s).all(|u| p.comparable_mask(u) & s == 0)
}

fn is_maximal_antichain(p: &Poset, s: u64) -> bool {
    is_antichain(p, s) && (0..p.len()).all(|v| s & bit(v) != 0 || p.comparable_mask(v) & s != 0)
}

fn count(p: &Poset, pred: impl Fn(u64) -> bool) -> Result<BigInt, BoundExceeded> {
    Ok(BigInt::from(subsets(p)?.filter(|&s| pred(s)).count()))
}

fn to_lists(masks: Vec<u64>) -> Vec<Vec<usize>> {
    masks.into_iter().map(|m| bits(m).collect()).collect()
}

pub(crate) fn maximal_antichain_masks(p: &Poset) -> Result<Vec<u64>, BoundExceeded> {
    Ok(subsets(p)?.filter(|&s| is_maximal_antichain(p, s)).collect())
}

/// Every maximal antichain, as sorted 0-based element lists.
pub fn maximal_antichains(p: &Poset) -> Result<Vec<Vec<usize>>, BoundExceeded> {
    maximal_antichain_masks(p).map(to_lists)
}

fn maximal_chain_masks(p: &Poset) -> Result<Vec<u64>, BoundExceeded> {
    check_bound(p.len(), ORACLE_BOUND)?;
    let up: Vec<u64> = p.covers().iter().fold(vec![0; p.len()], |mut up, &(u, v)| {
        up[u] |= bit(v);
        up
    });
    let mut out = Vec::new();
    let mut stack: Vec<(usize, u64)> = bits(p.minimal_elements()).map(|m| (m, bit(m))).collect();
    while let Some((top, chain)) = stack.pop() {
        if up[top] == 0 {
            out.push(chain);
        }
        stack.extend(bits(up[top]).map(|v| (v, chain | bit(v))));
    }
    out.sort_unstable();
    Ok(out)
}

/// Every maximal chain, as sorted 0-based element lists.
pub fn maximal_chains(p: &Poset) -> Result<Vec<Vec<usize>>, BoundExceeded> {
    maximal_chain_masks(p).map(to_lists)
}

pub fn count_antichains(p: &Poset) -> Result<BigInt, BoundExceeded> {
    count(p, |s| is_antichain(p, s))
}

pub fn count_maximal_antichains(p: &Poset) -> Result<BigInt, BoundExceeded> {
    count(p, |s| is_maximal_antichain(p, s))
}

pub fn count_maximal_antichains_without_basic(p: &Poset) -> Result<BigInt, BoundExceeded> {
    let basics = basic_mask(p);
    count(p, |s| s & basics == 0 && is_maximal_antichain(p, s))
}

/// Subsets meeting every maximal chain.
pub fn count_cutsets(p: &Poset) -> Result<BigInt, BoundExceeded> {
    let chains = maximal_chain_masks(p)?;
    count(p, |s| chains.iter().all(|c| c & s != 0))
}

/// Inclusion-minimal cutsets, as sorted 0-based element lists.
pub fn minimal_cutsets(p: &Poset) -> Result<Vec<Vec<usize>>, BoundExceeded> {
    let chains = maximal_chain_masks(p)?;
    let cuts = |s: u64| chains.iter().all(|c| c & s != 0);
    let minimal: Vec<u64> = subsets(p)?
        .filter(|&s| cuts(s) && bits(s).all(|u| !cuts(s & !bit(u))))
        .collect();
    Ok(to_lists(minimal))
}

/// The six evaluations, each computed directly from the poset.
pub fn evaluations(p: &Poset) -> Result<Evaluations, BoundExceeded> {
    Ok(Evaluations {
        maximal_antichains: count_maximal_antichains(p)?,
        at_x_zero: BivariatePoly::monomial(1, basic_mask(p).count_ones(), 0),
        maximal_antichains_without_basic: count_maximal_antichains_without_basic(p)?,
        antichains: count_antichains(p)?,
        cutsets: count_cutsets(p)?,
        subsets: BigInt::from(1) << p.len(),
    })
}

/// Values a polynomial must take at `(1,1)`, `(2,1)`, `(1,2)` and `(2,2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvaluationTarget {
    pub maximal_antichains: u64,
    pub antichains: u64,
    pub cutsets: u64,
    pub subsets: u64,
}

impl EvaluationTarget {
    pub fn new(maximal_antichains: u64, antichains: u64, cutsets: u64, subsets: u64) -> Self {
        Self {
            maximal_antichains,
            antichains,
            cutsets,
            subsets,
        }
    }

    fn accepts(&self, sums: [u64; 3]) -> bool {
        sums == [self.antichains, self.cutsets, self.subsets]
    }

    fn admits(&self, sums: [u64; 3]) -> bool {
        sums[0] <= self.antichains && sums[1] <= self.cutsets && sums[2] <= self.subsets
    }
}

/// Searches sums of `maximal_antichains` monomials `x^a y^b`, repetition
/// allowed, whose values at `(2,1)`, `(1,2)` and `(2,2)` hit the target.
/// Exponents are bounded by the base-2 logarithms of the targets.
pub fn search_evaluation_polynomial(target: &EvaluationTarget) -> Option<BivariatePoly> {
    let mut monomials: Vec<(u32, u32)> = Vec::new();
    for a in 0..64u32 {
        if 1u64 << a > target.antichains {
            break;
        }
        for b in 0..(64 - a) {
            if 1u64 << b > target.cutsets || 1u64 << (a + b) > target.subsets {
                break;
            }
            monomials.push((a, b));
        }
    }
    let mut chosen = Vec::new();
    if pick(&monomials, 0, target, target.maximal_antichains, [0; 3], &mut chosen) {
        Some(
            chosen
                .iter()
                .map(|&k| {
                    let (a, b) = monomials[k];
                    BivariatePoly::monomial(1, a, b)
                })
                .sum(),
        )
    } else {
        None
    }
}

fn pick(
    monomials: &[(u32, u32)],
    from: usize,
    target: &EvaluationTarget,
    left: u64,
    sums: [u64; 3],
    chosen: &mut Vec<usize>,
) -> bool {
    if left == 0 {
        return target.accepts(sums);
    }
    for k in from..monomials.len() {
        let (a, b) = monomials[k];
        let next = [sums[0] + (1 << a), sums[1] + (1 << b), sums[2] + (1 << (a + b))];
        // every further monomial adds at least 1 to each sum
        let rest = left - 1;
        if !target.admits([next[0] + rest, next[1] + rest, next[2] + rest]) {
            continue;
        }
        chosen.push(k);
        if pick(monomials, k, target, rest, next, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

pub fn evaluation_polynomial_exists(target: &EvaluationTarget) -> bool {
    search_evaluation_polynomial(target).is_some()
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::poly::poset_poly;
    use super::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn ten_element_counts() {
        let p = poset(TEN_ELEMENT);
        assert_eq!(maximal_antichains(&p).unwrap().len(), 13);
        assert_eq!(count_antichains(&p).unwrap(), int(64));
        assert_eq!(count_cutsets(&p).unwrap(), int(779));
        let poly = poset_poly(&p).unwrap();
        assert_eq!(evaluations(&p).unwrap(), Evaluations::of_poly(&poly));
    }

    #[test]
    fn small_counts() {
        let one = Poset::antichain(1);
        assert_eq!(count_cutsets(&one).unwrap(), int(1));
        assert_eq!(count_antichains(&one).unwrap(), int(2));
        assert_eq!(maximal_antichains(&Poset::antichain(2)).unwrap(), vec![vec![0, 1]]);
        assert_eq!(
            maximal_antichains(&Poset::chain(3)).unwrap(),
            vec![vec![0], vec![1], vec![2]]
        );
        assert_eq!(maximal_chains(&poset(BOWTIE)).unwrap().len(), 4);
        assert_eq!(count_cutsets(&Poset::empty()).unwrap(), int(1));
    }

    #[test]
    fn cutsets_versus_antichains() {
        let mut a = maximal_antichains(&poset(TEN_ELEMENT)).unwrap();
        let mut c = minimal_cutsets(&poset(TEN_ELEMENT)).unwrap();
        a.sort();
        c.sort();
        assert_eq!(a, c);
        assert_eq!(minimal_cutsets(&Poset::chain(2)).unwrap(), vec![vec![0], vec![1]]);

        // in the N, {v, w} is a maximal antichain but misses the chain x < u
        let n = poset(N_POSET);
        let vw = vec![1, 2];
        assert!(maximal_antichains(&n).unwrap().contains(&vw));
        assert!(!minimal_cutsets(&n).unwrap().contains(&vw));
    }

    #[test]
    fn oracles_refuse_large_posets() {
        let big = Poset::antichain(ORACLE_BOUND + 1);
        assert_eq!(
            count_antichains(&big),
            Err(BoundExceeded {
                size: ORACLE_BOUND + 1,
                bound: ORACLE_BOUND
            })
        );
        assert!(minimal_cutsets(&big).is_err());
        assert!(evaluations(&big).is_err());
    }

    #[test]
    fn forbidden_posets_have_no_polynomial() {
        let bowtie = EvaluationTarget::new(2, 7, 7, 16);
        let n = EvaluationTarget::new(3, 8, 8, 16);
        assert!(!evaluation_polynomial_exists(&bowtie));
        assert!(!evaluation_polynomial_exists(&n));
        let chain = EvaluationTarget::new(2, 3, 3, 4);
        assert_eq!(
            search_evaluation_polynomial(&chain).unwrap().to_string(),
            "y + x"
        );
    }

    #[test]
    fn forbidden_targets_come_from_the_posets() {
        for (text, expected) in [(BOWTIE, [2, 7, 7, 16]), (N_POSET, [3, 8, 8, 16])] {
            let e = evaluations(&poset(text)).unwrap();
            let got = [
                e.maximal_antichains,
                e.antichains,
                e.cutsets,
                e.subsets,
            ];
            assert_eq!(got, expected.map(int));
        }
    }

    #[test]
    fn search_recovers_chain_polynomial() {
        let e = evaluations(&Poset::chain(3)).unwrap();
        let as_u64 = |v: &BigInt| u64::try_from(v).unwrap();
        let target = EvaluationTarget::new(
            as_u64(&e.maximal_antichains),
            as_u64(&e.antichains),
            as_u64(&e.cutsets),
            as_u64(&e.subsets),
        );
        let found = search_evaluation_polynomial(&target).unwrap();
        assert_eq!(Evaluations::of_poly(&found).cutsets, int(7));
    }
}
