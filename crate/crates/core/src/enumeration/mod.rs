//! Counting unlabelled V-posets: exact series from a multiset recurrence, a
//! constructive census as an independent check, and the leading-order
//! asymptotics.

mod asymptotics;
mod census;
mod series;

pub use asymptotics::{
    asymptotic_constant, asymptotic_estimate, r_function, solve_rho, w_derivative, w_function,
    AsymptoticError, AsymptoticResult, MIN_ORDER,
};
pub use census::{census, census_counts, Census, MAX_CENSUS};
pub use series::{q_series, v_series, w_series, IntSeries, SeriesError};
