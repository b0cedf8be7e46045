//! Two independent recognisers for V-posets: a scan for the forbidden
//! four-element patterns, and a constructive decomposition producing a
//! [`BuildTrace`] that can be replayed.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{bit, bits, Poset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternKind {
    N,
    Bowtie,
}

/// Four elements with `u > w`, `u > x`, `v > x`, where `u, v` and `w, x` are
/// incomparable pairs. It is a bowtie when also `v > w`, an N otherwise.
/// Indices are 0-based; `Display` prints them 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ForbiddenPattern {
    pub u: usize,
    pub v: usize,
    pub w: usize,
    pub x: usize,
    pub kind: PatternKind,
}

impl ForbiddenPattern {
    /// Re-checks the defining relations against `p`.
    pub fn holds_in(&self, p: &Poset) -> bool {
        let Self { u, v, w, x, kind } = *self;
        let shape = p.lt(w, u)
            && p.lt(x, u)
            && p.lt(x, v)
            && p.incomparable(u, v)
            && p.incomparable(w, x);
        let kind_ok = match kind {
            PatternKind::Bowtie => p.lt(w, v),
            PatternKind::N => p.incomparable(v, w),
        };
        shape && kind_ok
    }
}

impl fmt::Display for ForbiddenPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            PatternKind::N => "N",
            PatternKind::Bowtie => "BOWTIE",
        };
        write!(
            f,
            "{name} {} {} {} {}",
            self.u + 1,
            self.v + 1,
            self.w + 1,
            self.x + 1
        )
    }
}

/// Scans all quadruples for an induced N or bowtie.
pub fn find_forbidden(p: &Poset) -> Option<ForbiddenPattern> {
    for u in 0..p.len() {
        let below_u = p.below(u);
        for x in bits(below_u) {
            // v > x with v incomparable to u
            let vs = p.above(x) & !p.comparable_mask(u) & !bit(u);
            // w < u with w incomparable to x
            let ws = below_u & !p.comparable_mask(x) & !bit(x);
            if let (Some(v), Some(w)) = (bits(vs).next(), bits(ws).next()) {
                // v < w would force v < u, so v and w are either
                // incomparable or v > w
                let kind = if p.lt(w, v) {
                    PatternKind::Bowtie
                } else {
                    PatternKind::N
                };
                return Some(ForbiddenPattern { u, v, w, x, kind });
            }
        }
    }
    None
}

/// A recipe building a V-poset from the empty poset. Added elements carry
/// their index in the certified poset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BuildTrace {
    Empty,
    /// Disjoint union of two or more connected parts.
    Union(Vec<BuildTrace>),
    AddGreatest { element: usize, inner: Box<BuildTrace> },
    AddLeast { element: usize, inner: Box<BuildTrace> },
}

impl BuildTrace {
    pub fn size(&self) -> usize {
        match self {
            BuildTrace::Empty => 0,
            BuildTrace::Union(parts) => parts.iter().map(BuildTrace::size).sum(),
            BuildTrace::AddGreatest { inner, .. } | BuildTrace::AddLeast { inner, .. } => {
                inner.size() + 1
            }
        }
    }

    /// Element labels in replay order: inner elements first, then the one
    /// added; union parts concatenated.
    pub fn elements(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.size());
        self.collect_elements(&mut out);
        out
    }

    fn collect_elements(&self, out: &mut Vec<usize>) {
        match self {
            BuildTrace::Empty => {}
            BuildTrace::Union(parts) => parts.iter().for_each(|p| p.collect_elements(out)),
            BuildTrace::AddGreatest { element, inner } | BuildTrace::AddLeast { element, inner } => {
                inner.collect_elements(out);
                out.push(*element);
            }
        }
    }

    /// Mask of the labels used by this trace.
    pub fn element_mask(&self) -> u64 {
        self.elements().into_iter().fold(0, |m, e| m | bit(e))
    }

    /// Rebuilds the poset; element `k` of the result is `elements()[k]`.
    pub fn replay(&self) -> Poset {
        match self {
            BuildTrace::Empty => Poset::empty(),
            BuildTrace::Union(parts) => {
                let built: Vec<Poset> = parts.iter().map(BuildTrace::replay).collect();
                Poset::disjoint_union(&built.iter().collect::<Vec<_>>())
            }
            BuildTrace::AddGreatest { inner, .. } => inner.replay().with_greatest(),
            BuildTrace::AddLeast { inner, .. } => inner.replay().with_least(),
        }
    }

    /// True when replaying reproduces `p` exactly under the element labels.
    pub fn certifies(&self, p: &Poset) -> bool {
        let labels = self.elements();
        if labels.len() != p.len() || self.element_mask() != p.all() {
            return false;
        }
        let q = self.replay();
        (0..q.len()).all(|i| (0..q.len()).all(|j| q.lt(i, j) == p.lt(labels[i], labels[j])))
    }
}

impl fmt::Display for BuildTrace {
    /// S-expression form, e.g. `(union (g (g empty)) (g empty))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildTrace::Empty => f.write_str("empty"),
            BuildTrace::Union(parts) => {
                f.write_str("(union")?;
                for p in parts {
                    write!(f, " {p}")?;
                }
                f.write_str(")")
            }
            BuildTrace::AddGreatest { inner, .. } => write!(f, "(g {inner})"),
            BuildTrace::AddLeast { inner, .. } => write!(f, "(l {inner})"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TraceParseError {
    #[error("unexpected token {0:?}")]
    Unexpected(String),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("a union needs at least two parts")]
    ShortUnion,
}

impl FromStr for BuildTrace {
    type Err = TraceParseError;

    /// Parses the s-expression form; labels are assigned in replay order.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let spaced = s.replace('(', " ( ").replace(')', " ) ");
        let tokens: Vec<&str> = spaced.split_whitespace().collect();
        let mut pos = 0;
        let mut next_label = 0;
        let trace = parse_trace(&tokens, &mut pos, &mut next_label)?;
        match tokens.get(pos) {
            None => Ok(trace),
            Some(t) => Err(TraceParseError::Unexpected(t.to_string())),
        }
    }
}

fn parse_trace(
    tokens: &[&str],
    pos: &mut usize,
    next_label: &mut usize,
) -> Result<BuildTrace, TraceParseError> {
    let tok = *tokens.get(*pos).ok_or(TraceParseError::UnexpectedEnd)?;
    *pos += 1;
    match tok {
        "empty" => Ok(BuildTrace::Empty),
        "(" => {
            let head = *tokens.get(*pos).ok_or(TraceParseError::UnexpectedEnd)?;
            *pos += 1;
            let trace = match head {
                "union" => {
                    let mut parts = Vec::new();
                    while tokens.get(*pos).is_some_and(|t| *t != ")") {
                        parts.push(parse_trace(tokens, pos, next_label)?);
                    }
                    if parts.len() < 2 {
                        return Err(TraceParseError::ShortUnion);
                    }
                    BuildTrace::Union(parts)
                }
                "g" | "l" => {
                    let inner = Box::new(parse_trace(tokens, pos, next_label)?);
                    let element = *next_label;
                    *next_label += 1;
                    if head == "g" {
                        BuildTrace::AddGreatest { element, inner }
                    } else {
                        BuildTrace::AddLeast { element, inner }
                    }
                }
                other => return Err(TraceParseError::Unexpected(other.to_string())),
            };
            match tokens.get(*pos) {
                Some(&")") => {
                    *pos += 1;
                    Ok(trace)
                }
                Some(t) => Err(TraceParseError::Unexpected(t.to_string())),
                None => Err(TraceParseError::UnexpectedEnd),
            }
        }
        other => Err(TraceParseError::Unexpected(other.to_string())),
    }
}

/// Decomposes `p` into a build trace, or `None` when `p` is not a V-poset.
///
/// Components of the comparability graph are split off; each must have a
/// greatest or least element, which is removed (the greatest when both
/// exist, so chains are built by adding greatest elements only).
pub fn decompose(p: &Poset) -> Option<BuildTrace> {
    decompose_mask(p, p.all())
}

fn decompose_mask(p: &Poset, mask: u64) -> Option<BuildTrace> {
    if mask == 0 {
        return Some(BuildTrace::Empty);
    }
    let comps = p.components_in(mask);
    if comps.len() == 1 {
        return decompose_connected(p, mask);
    }
    comps
        .into_iter()
        .map(|c| decompose_connected(p, c))
        .collect::<Option<Vec<_>>>()
        .map(BuildTrace::Union)
}

fn decompose_connected(p: &Poset, mask: u64) -> Option<BuildTrace> {
    if let Some(g) = p.greatest_in(mask) {
        let inner = Box::new(decompose_mask(p, mask & !bit(g))?);
        Some(BuildTrace::AddGreatest { element: g, inner })
    } else if let Some(l) = p.least_in(mask) {
        let inner = Box::new(decompose_mask(p, mask & !bit(l))?);
        Some(BuildTrace::AddLeast { element: l, inner })
    } else {
        None
    }
}

/// Membership certificate: a build trace, or a forbidden pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    VPoset(BuildTrace),
    Forbidden(ForbiddenPattern),
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::VPoset(t) => write!(f, "VPOSET {t}"),
            Certificate::Forbidden(w) => write!(f, "NOT-VPOSET {w}"),
        }
    }
}

pub fn is_v_poset(p: &Poset) -> Certificate {
    match decompose(p) {
        Some(trace) => Certificate::VPoset(trace),
        None => Certificate::Forbidden(
            find_forbidden(p).expect("a poset without a decomposition contains an N or a bowtie"),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::all_labeled_posets;
    use super::*;

    #[test]
    fn forbidden_examples() {
        let n = find_forbidden(&poset(N_POSET)).unwrap();
        assert_eq!(n.kind, PatternKind::N);
        assert!(n.holds_in(&poset(N_POSET)));
        let b = find_forbidden(&poset(BOWTIE)).unwrap();
        assert_eq!(b.kind, PatternKind::Bowtie);
        assert!(b.holds_in(&poset(BOWTIE)));
        assert_eq!(find_forbidden(&poset(TEN_ELEMENT)), None);
    }

    #[test]
    fn pattern_display_is_one_based() {
        let n = find_forbidden(&poset(N_POSET)).unwrap();
        assert_eq!(n.to_string(), "N 1 2 3 4");
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(decompose(&Poset::empty()), Some(BuildTrace::Empty));
        let two = decompose(&Poset::antichain(2)).unwrap();
        assert_eq!(two.to_string(), "(union (g empty) (g empty))");
        assert_eq!(decompose(&poset(N_POSET)), None);
        assert_eq!(decompose(&poset(BOWTIE)), None);
        let chain = decompose(&Poset::chain(3)).unwrap();
        assert_eq!(chain.to_string(), "(g (g (g empty)))");
    }

    #[test]
    fn certificates() {
        assert!(matches!(is_v_poset(&Poset::chain(3)), Certificate::VPoset(_)));
        assert!(matches!(
            is_v_poset(&poset(BOWTIE)),
            Certificate::Forbidden(ForbiddenPattern {
                kind: PatternKind::Bowtie,
                ..
            })
        ));
        let Certificate::VPoset(trace) = is_v_poset(&poset(TEN_ELEMENT)) else {
            panic!("ten-element poset is a V-poset");
        };
        assert!(trace.certifies(&poset(TEN_ELEMENT)));
        assert_eq!(trace.size(), 10);
        assert!(trace.to_string().starts_with("(g (union"));
    }

    #[test]
    fn trace_text_round_trip() {
        let text = "(union (g (g empty)) (g empty))";
        let t: BuildTrace = text.parse().unwrap();
        assert_eq!(t.to_string(), text);
        let p = t.replay();
        assert_eq!(p.len(), 3);
        assert!(t.certifies(&p));
        assert_eq!(
            "(union (g empty))".parse::<BuildTrace>(),
            Err(TraceParseError::ShortUnion)
        );
        assert!("(g empty".parse::<BuildTrace>().is_err());
        assert!("(x empty)".parse::<BuildTrace>().is_err());
        assert!("empty empty".parse::<BuildTrace>().is_err());
    }

    #[test]
    fn recognisers_agree_on_small_labeled_posets() {
        for n in 0..=4 {
            for p in all_labeled_posets(n).unwrap() {
                let trace = decompose(&p);
                let witness = find_forbidden(&p);
                assert_eq!(trace.is_some(), witness.is_none(), "{p:?}");
                if let Some(t) = trace {
                    assert!(t.certifies(&p), "{p:?}");
                }
                if let Some(w) = witness {
                    assert!(w.holds_in(&p));
                }
            }
        }
    }

    #[test]
    fn union_parts_are_connected() {
        fn check(t: &BuildTrace) {
            match t {
                BuildTrace::Empty => {}
                BuildTrace::Union(parts) => {
                    assert!(parts.len() >= 2);
                    for part in parts {
                        assert!(!matches!(part, BuildTrace::Union(_) | BuildTrace::Empty));
                        check(part);
                    }
                }
                BuildTrace::AddGreatest { inner, .. } | BuildTrace::AddLeast { inner, .. } => {
                    check(inner)
                }
            }
        }
        check(&decompose(&poset(TEN_ELEMENT)).unwrap());
    }

    #[test]
    fn dual_stays_in_class() {
        let d = poset(TEN_ELEMENT).dual();
        assert!(decompose(&d).is_some());
        let n = poset(N_POSET).dual();
        assert_eq!(find_forbidden(&n).map(|w| w.kind), Some(PatternKind::N));
    }
}
