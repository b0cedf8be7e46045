//! Sparse bivariate polynomials in `x` and `y` with arbitrary-precision
//! integer coefficients.
//!
//! Terms are kept in a map keyed by `(x exponent, y exponent)`; zero
//! coefficients are never stored, so structural equality is polynomial
//! equality. The canonical text form lists terms by descending `y` degree,
//! ties broken by descending `x` degree:
//!
//! ```
//! use vposet::polynomial::BivariatePoly;
//!
//! let p = (BivariatePoly::x() + BivariatePoly::y()).pow(2);
//! assert_eq!(p.to_string(), "y^2 + 2*x*y + x^2");
//! assert_eq!(p.to_string().parse::<BivariatePoly>().unwrap(), p);
//! ```

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};
use thiserror::Error;

/// Exponent pair `(i, j)` of the monomial `x^i y^j`.
pub type Exponents = (u32, u32);

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivariatePoly {
    terms: BTreeMap<Exponents, BigInt>,
}

/// Sort key for the canonical order: `y` descending, then `x` descending.
fn canonical_cmp(a: &Exponents, b: &Exponents) -> Ordering {
    b.1.cmp(&a.1).then(b.0.cmp(&a.0))
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    /// `c * x^i * y^j`; the zero polynomial when `c == 0`.
    pub fn monomial(c: impl Into<BigInt>, i: u32, j: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    /// `y^j` with unit coefficient.
    pub fn y_pow(j: u32) -> Self {
        Self::monomial(1, 0, j)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `x^i y^j` (zero when absent).
    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> Vec<(Exponents, &BigInt)> {
        let mut out: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c)).collect();
        out.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
        out
    }

    /// Machine-readable form: `(coeff, x exponent, y exponent)` in canonical order.
    pub fn to_triples(&self) -> Vec<(BigInt, u32, u32)> {
        self.terms()
            .into_iter()
            .map(|((i, j), c)| (c.clone(), i, j))
            .collect()
    }

    pub fn from_triples<I>(triples: I) -> Self
    where
        I: IntoIterator<Item = (BigInt, u32, u32)>,
    {
        let mut p = Self::zero();
        for (c, i, j) in triples {
            p.add_term(c, i, j);
        }
        p
    }

    /// Highest power of `x` present, `None` for zero.
    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.0).max()
    }

    pub fn y_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.1).max()
    }

    fn add_term(&mut self, c: BigInt, i: u32, j: u32) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact value at the integer point `(x0, y0)`.
    pub fn eval(&self, x0: &BigInt, y0: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * Pow::pow(x0, i) * Pow::pow(y0, j))
            .sum()
    }

    /// Substitutes `y = y0`, leaving a polynomial in `x` alone.
    pub fn specialize_y(&self, y0: &BigInt) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(c * Pow::pow(y0, j), i, 0);
        }
        out
    }

    /// Substitutes `x = x0`, leaving a polynomial in `y` alone.
    pub fn specialize_x(&self, x0: &BigInt) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(c * Pow::pow(x0, i), 0, j);
        }
        out
    }
}

impl Add<&BivariatePoly> for &BivariatePoly {
    type Output = BivariatePoly;

    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(c.clone(), i, j);
        }
        out
    }
}

impl Add for BivariatePoly {
    type Output = BivariatePoly;

    fn add(self, rhs: BivariatePoly) -> BivariatePoly {
        &self + &rhs
    }
}

impl Neg for &BivariatePoly {
    type Output = BivariatePoly;

    fn neg(self) -> BivariatePoly {
        BivariatePoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for BivariatePoly {
    type Output = BivariatePoly;

    fn neg(self) -> BivariatePoly {
        -&self
    }
}

impl Sub<&BivariatePoly> for &BivariatePoly {
    type Output = BivariatePoly;

    fn sub(self, rhs: &BivariatePoly) -> BivariatePoly {
        self + &(-rhs)
    }
}

impl Sub for BivariatePoly {
    type Output = BivariatePoly;

    fn sub(self, rhs: BivariatePoly) -> BivariatePoly {
        &self - &rhs
    }
}

impl Mul<&BivariatePoly> for &BivariatePoly {
    type Output = BivariatePoly;

    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(c1 * c2, i1 + i2, j1 + j2);
            }
        }
        out
    }
}

impl Mul for BivariatePoly {
    type Output = BivariatePoly;

    fn mul(self, rhs: BivariatePoly) -> BivariatePoly {
        &self * &rhs
    }
}

impl std::iter::Product for BivariatePoly {
    fn product<I: Iterator<Item = BivariatePoly>>(iter: I) -> Self {
        iter.fold(BivariatePoly::one(), |acc, p| &acc * &p)
    }
}

impl std::iter::Sum for BivariatePoly {
    fn sum<I: Iterator<Item = BivariatePoly>>(iter: I) -> Self {
        iter.fold(BivariatePoly::zero(), |acc, p| &acc + &p)
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, name: char, exp: u32) -> fmt::Result {
    if exp == 1 {
        write!(f, "{name}")
    } else {
        write!(f, "{name}^{exp}")
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, ((i, j), c)) in self.terms().into_iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            let mut factors = 0;
            if !magnitude.is_one() || (i == 0 && j == 0) {
                write!(f, "{magnitude}")?;
                factors += 1;
            }
            if i > 0 {
                if factors > 0 {
                    f.write_str("*")?;
                }
                write_var(f, 'x', i)?;
                factors += 1;
            }
            if j > 0 {
                if factors > 0 {
                    f.write_str("*")?;
                }
                write_var(f, 'y', j)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyParseError {
    #[error("empty polynomial text")]
    Empty,
    #[error("unexpected character {found:?} at position {pos}")]
    Unexpected { pos: usize, found: char },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("invalid exponent at position {pos}")]
    BadExponent { pos: usize },
}

struct TermParser {
    chars: Vec<(usize, char)>,
    idx: usize,
}

impl TermParser {
    fn new(src: &str) -> Self {
        Self {
            chars: src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            idx: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.idx).map(|&(_, c)| c)
    }

    fn pos(&self) -> usize {
        self.chars.get(self.idx).map_or(usize::MAX, |&(p, _)| p)
    }

    fn unexpected(&self) -> PolyParseError {
        match self.chars.get(self.idx) {
            Some(&(pos, found)) => PolyParseError::Unexpected { pos, found },
            None => PolyParseError::UnexpectedEnd,
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.idx;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.idx += 1;
        }
        (self.idx > start).then(|| self.chars[start..self.idx].iter().map(|&(_, c)| c).collect())
    }

    /// factor ::= integer | ("x" | "y") ["^" integer]
    fn factor(&mut self, coeff: &mut BigInt, exps: &mut Exponents) -> Result<(), PolyParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().expect("peeked digit");
                *coeff *= d.parse::<BigInt>().expect("ascii digits");
                Ok(())
            }
            Some(v @ ('x' | 'y')) => {
                self.idx += 1;
                let mut e = 1u32;
                if self.peek() == Some('^') {
                    self.idx += 1;
                    let pos = self.pos();
                    let d = self.digits().ok_or(PolyParseError::BadExponent { pos })?;
                    e = d.parse().map_err(|_| PolyParseError::BadExponent { pos })?;
                }
                if v == 'x' {
                    exps.0 += e;
                } else {
                    exps.1 += e;
                }
                Ok(())
            }
            _ => Err(self.unexpected()),
        }
    }
}

impl FromStr for BivariatePoly {
    type Err = PolyParseError;

    /// Parses sums of terms such as `y^9 + 3*x^2*y^2 - x + 7`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = TermParser::new(s);
        if p.peek().is_none() {
            return Err(PolyParseError::Empty);
        }
        let mut out = BivariatePoly::zero();
        let mut first = true;
        while p.peek().is_some() {
            let mut coeff = BigInt::one();
            match p.peek() {
                Some('+') if !first => p.idx += 1,
                Some('-') => {
                    p.idx += 1;
                    coeff = -coeff;
                }
                _ if first => {}
                _ => return Err(p.unexpected()),
            }
            first = false;
            let mut exps = (0, 0);
            p.factor(&mut coeff, &mut exps)?;
            while p.peek() == Some('*') {
                p.idx += 1;
                p.factor(&mut coeff, &mut exps)?;
            }
            out.add_term(coeff, exps.0, exps.1);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x() -> BivariatePoly {
        BivariatePoly::x()
    }

    fn y() -> BivariatePoly {
        BivariatePoly::y()
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn ten_element() -> BivariatePoly {
        // (x((x+y)^2+y^4)+y^6)(x+y)+y^9
        let xy = &x() + &y();
        let inner = &xy.pow(2) + &BivariatePoly::y_pow(4);
        let mid = &(&x() * &inner) + &BivariatePoly::y_pow(6);
        &(&mid * &xy) + &BivariatePoly::y_pow(9)
    }

    #[test]
    fn add_examples() {
        assert_eq!((x() + y()).to_string(), "y + x");
        let a = &x().pow(3) + &y().pow(3);
        let b = y().pow(3).scale(&int(-1));
        assert_eq!(&a + &b, x().pow(3));
        assert_eq!(&(x() + y()) + &BivariatePoly::zero(), x() + y());
    }

    #[test]
    fn mul_examples() {
        let s = x() + y();
        let sq = &s * &s;
        assert_eq!(sq.coeff(2, 0), int(1));
        assert_eq!(sq.coeff(1, 1), int(2));
        assert_eq!(sq.coeff(0, 2), int(1));
        assert_eq!(sq.num_terms(), 3);
        assert_eq!(&s * &BivariatePoly::one(), s);
        let with_y4 = &sq + &BivariatePoly::y_pow(4);
        assert_eq!(with_y4.to_string(), "y^4 + y^2 + 2*x*y + x^2");
    }

    #[test]
    fn monomial_examples() {
        assert_eq!(BivariatePoly::monomial(1, 0, 5), y().pow(5));
        assert!(BivariatePoly::monomial(0, 3, 3).is_zero());
        assert_eq!(BivariatePoly::monomial(3, 2, 2).to_string(), "3*x^2*y^2");
    }

    #[test]
    fn eval_examples() {
        let worked: BivariatePoly = "x^3 + x^2*y + x*y^2 + y^3 + y^5".parse().unwrap();
        assert_eq!(worked.eval(&int(1), &int(1)), int(5));
        assert_eq!(worked.eval(&int(2), &int(2)), int(64));
        let p: BivariatePoly = "7 - 3*x*y + y".parse().unwrap();
        assert_eq!(p.eval(&int(0), &int(0)), int(7));
    }

    #[test]
    fn format_examples() {
        assert_eq!(
            ten_element().to_string(),
            "y^9 + y^7 + x*y^6 + x*y^5 + x^2*y^4 + x*y^3 + 3*x^2*y^2 + 3*x^3*y + x^4"
        );
        assert_eq!(BivariatePoly::zero().to_string(), "0");
        assert_eq!(BivariatePoly::monomial(1, 1, 0).to_string(), "x");
        assert_eq!(BivariatePoly::monomial(-1, 0, 0).to_string(), "-1");
        assert_eq!((x() - y()).to_string(), "-y + x");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert_eq!("".parse::<BivariatePoly>(), Err(PolyParseError::Empty));
        assert!("x +".parse::<BivariatePoly>().is_err());
        assert!("x ^".parse::<BivariatePoly>().is_err());
        assert!("z".parse::<BivariatePoly>().is_err());
        assert!("x y".parse::<BivariatePoly>().is_err());
    }

    #[test]
    fn specializations() {
        let p: BivariatePoly = "x^3 + x^2*y + x*y^2 + y^3 + y^5".parse().unwrap();
        assert_eq!(p.specialize_y(&int(0)), x().pow(3));
        assert_eq!(
            p.specialize_x(&int(1)).to_string(),
            "y^5 + y^3 + y^2 + y + 1"
        );
    }

    /// Every polynomial with exponents <= 1 and coefficients in [-1, 1]:
    /// 3^4 = 81 polynomials, so triples of them are checked exhaustively.
    fn small_polys() -> Vec<BivariatePoly> {
        let monos = [(0, 0), (1, 0), (0, 1), (1, 1)];
        let mut out = Vec::new();
        for code in 0..81u32 {
            let mut c = code;
            let mut p = BivariatePoly::zero();
            for &(i, j) in &monos {
                p.add_term(BigInt::from((c % 3) as i64 - 1), i, j);
                c /= 3;
            }
            out.push(p);
        }
        out
    }

    #[test]
    fn ring_axioms_exhaustive() {
        let ps = small_polys();
        for a in &ps {
            for b in &ps {
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
            }
        }
        // associativity and distributivity over a stride through the triples
        for (ia, a) in ps.iter().enumerate() {
            for b in ps.iter().skip(ia % 7).step_by(7) {
                for c in ps.iter().skip(ia % 5).step_by(5) {
                    assert_eq!(&(a + b) + c, a + &(b + c));
                    assert_eq!(&(a * b) * c, a * &(b * c));
                    assert_eq!(a * &(b + c), &(a * b) + &(a * c));
                }
            }
        }
    }

    fn arb_poly() -> impl Strategy<Value = BivariatePoly> {
        prop::collection::vec((-3i64..=3, 0u32..=3, 0u32..=3), 0..8).prop_map(|ts| {
            BivariatePoly::from_triples(ts.into_iter().map(|(c, i, j)| (BigInt::from(c), i, j)))
        })
    }

    proptest! {
        #[test]
        fn eval_is_ring_homomorphism(a in arb_poly(), b in arb_poly(), x0 in -5i64..=5, y0 in -5i64..=5) {
            let (x0, y0) = (int(x0), int(y0));
            prop_assert_eq!((&a * &b).eval(&x0, &y0), a.eval(&x0, &y0) * b.eval(&x0, &y0));
            prop_assert_eq!((&a + &b).eval(&x0, &y0), a.eval(&x0, &y0) + b.eval(&x0, &y0));
        }

        #[test]
        fn format_parse_round_trip(a in arb_poly()) {
            let text = a.to_string();
            prop_assert_eq!(text.parse::<BivariatePoly>().unwrap(), a);
        }

        #[test]
        fn no_zero_coefficients_stored(a in arb_poly(), b in arb_poly()) {
            let s = &(&a * &b) - &(&b * &a);
            prop_assert!(s.is_zero());
            for (_, c) in (&a + &b).terms() {
                prop_assert!(!c.is_zero());
            }
        }
    }
}
