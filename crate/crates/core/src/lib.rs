//! Implied total standard deviation in the Black-Scholes model, with
//! certified brackets.
//!
//! Prices are normalised by the forward: `k` is log-moneyness, `y` the total
//! standard deviation `sigma sqrt(T)` and `c = C(k, y)` the call price. The
//! crate inverts `y -> C(k, y)` and, more to the point, gives bounds on the
//! inverse `Y(k, c)` that hold uniformly over all admissible quotes.
//!
//! ```
//! use ivbounds::{best_bracket, call_price, implied_y, SolverConfig};
//!
//! let c = call_price(0.2, 0.8).unwrap();
//! let bracket = best_bracket(0.2, c).unwrap();
//! assert!(bracket.contains(0.8));
//!
//! let report = implied_y(0.2, c, &SolverConfig::default()).unwrap();
//! assert!((report.y - 0.8).abs() < 1e-10);
//! ```
//!
//! Modules:
//!
//! - [`normal`]: density, distribution function and quantile.
//! - [`pricing`]: `C(k, y)`, puts, vega.
//! - [`symmetry`]: put-call symmetry, dual prices, the `J` integral.
//! - [`bounds`]: uniform bounds and [`best_bracket`].
//! - [`asymptotics`]: leading-order formulas in each limit.
//! - [`solver`]: bisection, Newton and fixed-point inversion.
//! - [`models`]: variance gamma and jump-to-default price curves.
//! - [`figures`]: tables for the comparison figures.

// Negated comparisons are how the argument checks reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asymptotics;
pub mod bounds;
pub mod error;
pub mod figures;
pub mod models;
pub mod normal;
pub mod pricing;
mod quad;
pub mod solver;
pub mod symmetry;

pub use bounds::{best_bracket, Bracket};
pub use error::{Error, Result};
pub use pricing::{call_price, put_price, Quote};
pub use solver::{implied_y, Method, SolveReport, SolverConfig};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/pricing.md")]
    mod pricing {}
    #[doc = include_str!("../../../book/src/symmetry.md")]
    mod symmetry {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/solvers.md")]
    mod solvers {}
    #[doc = include_str!("../../../book/src/asymptotics.md")]
    mod asymptotics {}
    #[doc = include_str!("../../../book/src/models.md")]
    mod models {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
