//! The poset polynomial, by recursion along a build trace and by expansion
//! over maximal antichains.

use num_bigint::BigInt;
use thiserror::Error;

use super::oracle::maximal_antichain_masks;
use super::recognition::{decompose, find_forbidden, BuildTrace, ForbiddenPattern};
use super::status::{basic_mask, region_mask};
use super::{bits, Poset};
use crate::polynomial::BivariatePoly;
use crate::BoundExceeded;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetPolyError {
    #[error("not a V-poset: contains {0}")]
    NotVPoset(ForbiddenPattern),
    #[error(transparent)]
    Bound(#[from] BoundExceeded),
}

/// `P` along a build trace: `1` for the empty poset, `x` for a single
/// element, products over unions, and `P(Q) + y^|Q|` when a greatest or
/// least element is added to `Q`.
pub fn trace_poly(trace: &BuildTrace) -> BivariatePoly {
    match trace {
        BuildTrace::Empty => BivariatePoly::one(),
        BuildTrace::Union(parts) => parts.iter().map(trace_poly).product(),
        BuildTrace::AddGreatest { inner, .. } | BuildTrace::AddLeast { inner, .. } => {
            if matches!(**inner, BuildTrace::Empty) {
                BivariatePoly::x()
            } else {
                &trace_poly(inner) + &BivariatePoly::y_pow(inner.size() as u32)
            }
        }
    }
}

fn not_v_poset(p: &Poset) -> PosetPolyError {
    PosetPolyError::NotVPoset(
        find_forbidden(p).expect("a poset without a decomposition contains an N or a bowtie"),
    )
}

/// `P(p)` via [`decompose`].
pub fn poset_poly(p: &Poset) -> Result<BivariatePoly, PosetPolyError> {
    decompose(p)
        .map(|t| trace_poly(&t))
        .ok_or_else(|| not_v_poset(p))
}

/// A maximal antichain with its basic count `b(A)` and total region size
/// `s(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetAntichain {
    /// Sorted 0-based elements.
    pub elements: Vec<usize>,
    pub basic_count: u32,
    pub region_total: u32,
}

impl PosetAntichain {
    /// `x^b(A) y^s(A)`.
    pub fn monomial(&self) -> BivariatePoly {
        BivariatePoly::monomial(BigInt::from(1), self.basic_count, self.region_total)
    }
}

/// All maximal antichains of a V-poset with their weights.
pub fn antichain_terms(p: &Poset) -> Result<Vec<PosetAntichain>, PosetPolyError> {
    if decompose(p).is_none() {
        return Err(not_v_poset(p));
    }
    let basics = basic_mask(p);
    let regions: Vec<u32> = (0..p.len())
        .map(|a| region_mask(p, basics, a).count_ones())
        .collect();
    Ok(maximal_antichain_masks(p)?
        .into_iter()
        .map(|m| PosetAntichain {
            elements: bits(m).collect(),
            basic_count: (m & basics).count_ones(),
            region_total: bits(m).map(|a| regions[a]).sum(),
        })
        .collect())
}

/// `L(p)`: the sum of `x^b(A) y^s(A)` over maximal antichains `A`.
pub fn antichain_expansion(p: &Poset) -> Result<BivariatePoly, PosetPolyError> {
    Ok(antichain_terms(p)?.iter().map(PosetAntichain::monomial).sum())
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::Orientation;
    use super::*;
    use crate::tree::enumerate_rooted_trees;

    const TEN_ELEMENT_POLY: &str =
        "y^9 + y^7 + x*y^6 + x*y^5 + x^2*y^4 + x*y^3 + 3*x^2*y^2 + 3*x^3*y + x^4";

    #[test]
    fn recursive_examples() {
        let p = poset(TEN_ELEMENT);
        assert_eq!(poset_poly(&p).unwrap().to_string(), TEN_ELEMENT_POLY);
        assert_eq!(poset_poly(&Poset::empty()).unwrap(), BivariatePoly::one());
        assert_eq!(poset_poly(&Poset::chain(2)).unwrap().to_string(), "y + x");
        assert_eq!(poset_poly(&Poset::antichain(1)).unwrap().to_string(), "x");
        assert!(matches!(
            poset_poly(&poset(N_POSET)),
            Err(PosetPolyError::NotVPoset(_))
        ));
    }

    #[test]
    fn factored_form_agrees() {
        // (x((x+y)^2+y^4)+y^6)(x+y)+y^9
        let x = BivariatePoly::x();
        let y = BivariatePoly::y();
        let s = &x + &y;
        let inner = &(&x * &(&s.pow(2) + &y.pow(4))) + &y.pow(6);
        let expected = &(&inner * &s) + &y.pow(9);
        assert_eq!(poset_poly(&poset(TEN_ELEMENT)).unwrap(), expected);
    }

    #[test]
    fn expansion_examples() {
        let p = poset(TEN_ELEMENT);
        let terms = antichain_terms(&p).unwrap();
        assert_eq!(terms.len(), 13);
        assert_eq!(antichain_expansion(&p).unwrap().to_string(), TEN_ELEMENT_POLY);
        assert_eq!(antichain_expansion(&Poset::antichain(1)).unwrap().to_string(), "x");
        assert_eq!(antichain_expansion(&Poset::antichain(2)).unwrap().to_string(), "x^2");
        let err = antichain_expansion(&poset(BOWTIE)).unwrap_err();
        let PosetPolyError::NotVPoset(w) = err else {
            panic!("expected a pattern");
        };
        assert!(w.holds_in(&poset(BOWTIE)));
    }

    #[test]
    fn single_antichain_weights() {
        let p = poset(TEN_ELEMENT);
        let terms = antichain_terms(&p).unwrap();
        let top = terms.iter().find(|a| a.elements == vec![0]).unwrap();
        assert_eq!((top.basic_count, top.region_total), (0, 9));
        let basics = terms.iter().find(|a| a.elements == vec![4, 5, 7, 9]).unwrap();
        assert_eq!((basics.basic_count, basics.region_total), (4, 0));
    }

    #[test]
    fn tree_posets_match_tree_poly() {
        for n in 1..=7 {
            for t in enumerate_rooted_trees(n).unwrap() {
                for o in [Orientation::RootGreatest, Orientation::RootLeast] {
                    let p = Poset::from_tree(&t, o);
                    assert_eq!(poset_poly(&p).unwrap(), t.poly(), "{t} {o:?}");
                    assert_eq!(antichain_expansion(&p).unwrap(), t.poly(), "{t} {o:?}");
                }
            }
        }
    }

    #[test]
    fn trace_poly_ignores_labels() {
        let t: BuildTrace = "(l (union (g empty) (g (g empty))))".parse().unwrap();
        let p = t.replay();
        assert_eq!(trace_poly(&t), poset_poly(&p).unwrap());
        assert_eq!(trace_poly(&t).to_string(), "y^3 + x*y + x^2");
    }
}
