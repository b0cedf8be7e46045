//! Explicit construction of every unlabelled V-poset up to a small size.

use std::collections::HashMap;

use crate::poset::{poset_isomorphic, Poset};
use crate::{check_bound, BoundExceeded};

/// Largest size the census builds.
pub const MAX_CENSUS: usize = 8;

/// One representative per isomorphism class, indexed by size.
#[derive(Clone, Debug)]
pub struct Census {
    /// `connected[n]`: connected V-posets on `n` elements.
    pub connected: Vec<Vec<Poset>>,
    /// `all[n]`: V-posets on `n` elements; `all[0]` holds the empty poset.
    pub all: Vec<Vec<Poset>>,
}

impl Census {
    pub fn max_size(&self) -> usize {
        self.all.len() - 1
    }

    /// `v_1..=v_max`.
    pub fn counts(&self) -> Vec<usize> {
        self.all[1..].iter().map(Vec::len).collect()
    }

    /// `q_1..=q_max`.
    pub fn connected_counts(&self) -> Vec<usize> {
        self.connected[1..].iter().map(Vec::len).collect()
    }

    /// Every non-empty poset of the census, smallest first.
    pub fn posets(&self) -> impl Iterator<Item = &Poset> {
        self.all[1..].iter().flatten()
    }
}

/// Cheap isomorphism invariant used to bucket candidates.
fn invariant(p: &Poset) -> Vec<(u32, u32)> {
    let mut sig: Vec<(u32, u32)> = (0..p.len())
        .map(|u| (p.above(u).count_ones(), p.below(u).count_ones()))
        .collect();
    sig.sort_unstable();
    sig
}

fn dedup(candidates: Vec<Poset>) -> Vec<Poset> {
    let mut buckets: HashMap<Vec<(u32, u32)>, Vec<usize>> = HashMap::new();
    let mut kept: Vec<Poset> = Vec::new();
    for p in candidates {
        let bucket = buckets.entry(invariant(&p)).or_default();
        let seen = bucket.iter().any(|&k| {
            poset_isomorphic(&kept[k], &p).expect("census sizes are within the isomorphism bound")
        });
        if !seen {
            bucket.push(kept.len());
            kept.push(p);
        }
    }
    kept
}

/// Multisets of connected classes with total size `n`, each listed by
/// nondecreasing global class index.
fn assemble(classes: &[(usize, &Poset)], n: usize) -> Vec<Poset> {
    fn go<'a>(
        classes: &[(usize, &'a Poset)],
        from: usize,
        left: usize,
        parts: &mut Vec<&'a Poset>,
        out: &mut Vec<Poset>,
    ) {
        if left == 0 {
            out.push(Poset::disjoint_union(parts));
            return;
        }
        for (k, &(size, p)) in classes.iter().enumerate().skip(from) {
            if size <= left {
                parts.push(p);
                go(classes, k, left - size, parts, out);
                parts.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(classes, 0, n, &mut Vec::new(), &mut out);
    out
}

/// Builds all V-posets with at most `max_size` elements. Connected ones of
/// size `n >= 2` come from adding a greatest or least element to each
/// poset of size `n - 1`; the rest are disjoint unions of connected ones.
pub fn census(max_size: usize) -> Result<Census, BoundExceeded> {
    check_bound(max_size, MAX_CENSUS)?;
    let mut connected: Vec<Vec<Poset>> = vec![Vec::new()];
    let mut all: Vec<Vec<Poset>> = vec![vec![Poset::empty()]];
    for n in 1..=max_size {
        let fresh = if n == 1 {
            vec![Poset::antichain(1)]
        } else {
            dedup(
                all[n - 1]
                    .iter()
                    .flat_map(|p| [p.with_greatest(), p.with_least()])
                    .collect(),
            )
        };
        connected.push(fresh);
        let classes: Vec<(usize, &Poset)> = connected
            .iter()
            .enumerate()
            .flat_map(|(size, ps)| ps.iter().map(move |p| (size, p)))
            .collect();
        let level = assemble(&classes, n);
        all.push(level);
    }
    Ok(Census { connected, all })
}

/// `v_1..=v_max` by construction.
pub fn census_counts(max_size: usize) -> Result<Vec<usize>, BoundExceeded> {
    Ok(census(max_size)?.counts())
}
