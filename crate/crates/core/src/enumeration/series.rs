//! `V(x) = sum v_n x^n` counts unlabelled V-posets. A V-poset is a multiset
//! of connected ones, and a connected one of size `n >= 2` is a V-poset of
//! size `n - 1` with a greatest or a least element added, the two choices
//! coinciding only for chains. Hence `Q = (2x - x^2) V - x` and `V` is the
//! multiset transform of `Q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("coefficient {n} is not integral: remainder {remainder}")]
    InexactDivision { n: usize, remainder: BigInt },
}

/// Coefficients `0..=order` of an integer power series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntSeries {
    coeffs: Vec<BigInt>,
}

impl IntSeries {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least the constant term");
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^n`; zero beyond the truncation order.
    pub fn coeff(&self, n: usize) -> BigInt {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficients as floats, for numerical evaluation.
    pub fn to_f64(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
            .collect()
    }
}

/// `q_n` from `v_{n-1}`, `v_{n-2}`: `q_1 = 1`, otherwise `2 v_{n-1} - v_{n-2}`.
fn q_from(v: &[BigInt], n: usize) -> BigInt {
    match n {
        0 => BigInt::zero(),
        1 => BigInt::from(1),
        _ => 2 * &v[n - 1] - &v[n - 2],
    }
}

/// `v_0..=v_order` by the multiset recurrence
/// `n v_n = sum_{k=1}^{n} c_k v_{n-k}` with `c_k = sum_{d | k} d q_d`.
pub fn v_series(order: usize) -> Result<IntSeries, SeriesError> {
    let mut v = vec![BigInt::from(1)];
    let mut q = vec![BigInt::zero()];
    let mut c = vec![BigInt::zero()];
    for n in 1..=order {
        q.push(q_from(&v, n));
        let ck: BigInt = (1..=n).filter(|d| n % d == 0).map(|d| &q[d] * d).sum();
        c.push(ck);
        let acc: BigInt = (1..=n).map(|k| &c[k] * &v[n - k]).sum();
        let (vn, remainder) = acc.div_rem(&BigInt::from(n));
        if !remainder.is_zero() {
            return Err(SeriesError::InexactDivision { n, remainder });
        }
        v.push(vn);
    }
    Ok(IntSeries::from_coeffs(v))
}

/// Connected V-poset counts `q_0..=q_order`, with `q_0 = 0`.
pub fn q_series(order: usize) -> Result<IntSeries, SeriesError> {
    let v = v_series(order)?;
    let coeffs = (0..=order).map(|n| q_from(v.coeffs(), n)).collect();
    Ok(IntSeries::from_coeffs(coeffs))
}

/// Coefficients of `W = Q + x = x (2 - x) V`: `w_1 = 2`, `w_n = q_n` for
/// `n >= 2`.
pub fn w_series(order: usize) -> Result<IntSeries, SeriesError> {
    let mut w = q_series(order)?.coeffs;
    if order >= 1 {
        w[1] += 1;
    }
    Ok(IntSeries::from_coeffs(w))
}
