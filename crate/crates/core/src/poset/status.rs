//! Basic elements, upper and lower elements, and the region sets `P_a`.

use super::{bit, bits, Poset, PosetError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ElementStatus {
    Basic,
    /// Non-basic and above some basic element.
    Upper,
    /// Non-basic and below some basic element, but above none.
    Lower,
    OtherNonBasic,
}

fn is_chain_mask(p: &Poset, mask: u64) -> bool {
    bits(mask).all(|u| mask & !bit(u) & !p.comparable_mask(u) == 0)
}

/// `u < x`, and `u`, `x` have the same relations to every other element.
fn is_lower_twin(p: &Poset, u: usize, x: usize) -> bool {
    p.lt(u, x) && p.below(u) == p.below(x) & !bit(u) && p.above(u) & !bit(x) == p.above(x)
}

/// Checks the three axioms: the elements below `x` form a chain, the
/// elements above `x` form a chain, and no element below `x` is a twin.
pub fn is_basic(p: &Poset, x: usize) -> bool {
    is_chain_mask(p, p.below(x))
        && is_chain_mask(p, p.above(x))
        && !bits(p.below(x)).any(|u| is_lower_twin(p, u, x))
}

pub(crate) fn basic_mask(p: &Poset) -> u64 {
    (0..p.len())
        .filter(|&x| is_basic(p, x))
        .fold(0, |m, x| m | bit(x))
}

fn status_with(p: &Poset, basics: u64, a: usize) -> ElementStatus {
    if basics & bit(a) != 0 {
        ElementStatus::Basic
    } else if p.below(a) & basics != 0 {
        ElementStatus::Upper
    } else if p.above(a) & basics != 0 {
        ElementStatus::Lower
    } else {
        ElementStatus::OtherNonBasic
    }
}

pub fn element_statuses(p: &Poset) -> Vec<ElementStatus> {
    let basics = basic_mask(p);
    (0..p.len()).map(|a| status_with(p, basics, a)).collect()
}

fn check_element(p: &Poset, a: usize) -> Result<(), PosetError> {
    if a >= p.len() {
        Err(PosetError::OutOfRange {
            element: a + 1,
            n: p.len(),
        })
    } else {
        Ok(())
    }
}

/// The basic elements comparable to `a`, as a mask. For a basic `a` this is
/// `{a}` itself.
pub(crate) fn associated_mask(p: &Poset, basics: u64, a: usize) -> u64 {
    (p.comparable_mask(a) | bit(a)) & basics
}

/// Sorted basic elements to which `a` is associated: those comparable to
/// `a`, the remaining basic elements being incomparable to it.
pub fn associated_basics(p: &Poset, a: usize) -> Result<Vec<usize>, PosetError> {
    check_element(p, a)?;
    Ok(bits(associated_mask(p, basic_mask(p), a)).collect())
}

/// Region set as a mask, with the basic set precomputed.
pub(crate) fn region_mask(p: &Poset, basics: u64, a: usize) -> u64 {
    let others = p.all() & !bit(a);
    let incomparable = others & !p.comparable_mask(a);
    match status_with(p, basics, a) {
        ElementStatus::Basic | ElementStatus::OtherNonBasic => 0,
        ElementStatus::Lower => bits(p.above(a))
            .filter(|&b| p.below(b) & incomparable == 0)
            .fold(0, |m, b| m | bit(b)),
        ElementStatus::Upper => {
            let assoc = associated_mask(p, basics, a);
            bits(p.below(a))
                .filter(|&b| p.above(b) & incomparable == 0)
                .filter(|&b| {
                    status_with(p, basics, b) != ElementStatus::Lower
                        || associated_mask(p, basics, b) != assoc
                })
                .fold(0, |m, b| m | bit(b))
        }
    }
}

/// Sorted elements of `P_a`.
///
/// Empty for basic elements. For a lower `a`: elements above `a` with nothing
/// incomparable to `a` below them. For an upper `a`: elements below `a` with
/// nothing incomparable to `a` above them, minus the lower elements sharing
/// `a`'s associated basic set. Other elements get the empty set.
pub fn region_set(p: &Poset, a: usize) -> Result<Vec<usize>, PosetError> {
    check_element(p, a)?;
    Ok(bits(region_mask(p, basic_mask(p), a)).collect())
}
