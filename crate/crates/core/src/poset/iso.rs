//! Isomorphism testing for small posets and exhaustive generation of
//! labelled posets.

use super::{bit, Poset};
use crate::{check_bound, BoundExceeded};

/// Largest size accepted by [`poset_isomorphic`].
pub const MAX_ISOMORPHISM_SIZE: usize = 8;
/// Largest size accepted by [`all_labeled_posets`].
pub const MAX_LABELED_SIZE: usize = 5;

/// Per-element invariant: numbers of elements above and below.
fn signatures(p: &Poset) -> Vec<(u32, u32)> {
    (0..p.len())
        .map(|u| (p.above(u).count_ones(), p.below(u).count_ones()))
        .collect()
}

/// True when some bijection maps the order of `p` onto that of `q`.
pub fn poset_isomorphic(p: &Poset, q: &Poset) -> Result<bool, BoundExceeded> {
    check_bound(p.len(), MAX_ISOMORPHISM_SIZE)?;
    check_bound(q.len(), MAX_ISOMORPHISM_SIZE)?;
    if p.len() != q.len() {
        return Ok(false);
    }
    let sp = signatures(p);
    let sq = signatures(q);
    let mut a = sp.clone();
    let mut b = sq.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Ok(false);
    }
    let mut image = vec![usize::MAX; p.len()];
    Ok(extend(p, q, &sp, &sq, &mut image, 0, 0))
}

fn extend(
    p: &Poset,
    q: &Poset,
    sp: &[(u32, u32)],
    sq: &[(u32, u32)],
    image: &mut [usize],
    next: usize,
    used: u64,
) -> bool {
    if next == p.len() {
        return true;
    }
    for t in 0..q.len() {
        if used & bit(t) != 0 || sp[next] != sq[t] {
            continue;
        }
        let consistent = (0..next).all(|u| {
            p.lt(u, next) == q.lt(image[u], t) && p.lt(next, u) == q.lt(t, image[u])
        });
        if consistent {
            image[next] = t;
            if extend(p, q, sp, sq, image, next + 1, used | bit(t)) {
                return true;
            }
        }
    }
    false
}

/// Every strict order on `{0, ..., n-1}`, each labelled poset once.
pub fn all_labeled_posets(n: usize) -> Result<Vec<Poset>, BoundExceeded> {
    check_bound(n, MAX_LABELED_SIZE)?;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let total = 3usize.pow(pairs.len() as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut above = vec![0u64; n];
        let mut c = code;
        for &(i, j) in &pairs {
            match c % 3 {
                1 => above[i] |= bit(j),
                2 => above[j] |= bit(i),
                _ => {}
            }
            c /= 3;
        }
        let transitive = (0..n).all(|u| {
            (0..n)
                .filter(|&v| above[u] & bit(v) != 0)
                .all(|v| above[v] & !above[u] == 0)
        });
        if transitive {
            out.push(
                Poset::from_strict_order(n, |u, v| above[u] & bit(v) != 0)
                    .expect("transitive and antisymmetric by construction"),
            );
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn isomorphism_examples() {
        let c = Poset::chain(2);
        assert!(poset_isomorphic(&c, &c.dual()).unwrap());
        assert!(!poset_isomorphic(&poset(N_POSET), &poset(BOWTIE)).unwrap());
        assert!(!poset_isomorphic(&c, &Poset::antichain(2)).unwrap());
        assert!(poset_isomorphic(&poset(N_POSET), &poset(N_POSET).dual()).unwrap());
        assert!(!poset_isomorphic(&Poset::chain(2), &Poset::chain(3)).unwrap());
        assert!(poset_isomorphic(&Poset::chain(9), &Poset::chain(9)).is_err());
    }

    #[test]
    fn relabelling_preserves_isomorphism() {
        let p = poset("6\n1 2\n1 3\n2 4\n3 4\n5 6\n");
        let perm = [3, 5, 0, 1, 4, 2];
        let q = Poset::from_strict_order(6, |u, v| {
            let inv = |k: usize| perm.iter().position(|&x| x == k).unwrap();
            p.lt(inv(u), inv(v))
        })
        .unwrap();
        assert!(poset_isomorphic(&p, &q).unwrap());
    }

    #[test]
    fn labeled_counts() {
        let counts: Vec<usize> = (0..=5)
            .map(|n| all_labeled_posets(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 3, 19, 219, 4231]);
        assert!(all_labeled_posets(6).is_err());
    }
}
