//! Leading-order asymptotic formulas for `Y(k, c)`.
//!
//! These are comparison curves, not solvers. Each function is total on its
//! stated domain and does not check whether the inputs sit in the regime
//! where the formula is accurate.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::normal::inv;
use crate::pricing::Quote;

/// The limit in which an asymptotic formula applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `c -> 1` at fixed `k`.
    PriceToOne,
    /// `c -> 0` at fixed `k > 0` (or `p -> 0` at fixed `k < 0`).
    PriceToZero,
    /// `k -> +inf` with `c(k) -> 0`.
    RightWing,
    /// `k -> -inf` with `p(k) -> 0`.
    LeftWing,
    /// `k -> -inf` with `e^{-k} p(k) -> u`.
    FixedULeft,
    /// `k -> +inf` with `c(k) -> u`.
    FixedURight,
}

impl Regime {
    pub const ALL: [Regime; 6] = [
        Regime::PriceToOne,
        Regime::PriceToZero,
        Regime::RightWing,
        Regime::LeftWing,
        Regime::FixedULeft,
        Regime::FixedURight,
    ];

    /// Evaluates the regime's formula. For the fixed-`u` regimes the second
    /// argument is `u` rather than a price.
    pub fn evaluate(self, k: f64, c_or_u: f64) -> Result<f64> {
        match self {
            Regime::PriceToOne => price_to_one(c_or_u),
            Regime::PriceToZero => price_to_zero(k, c_or_u),
            Regime::RightWing | Regime::LeftWing => {
                let right = self == Regime::RightWing;
                if (k > 0.0) != right {
                    return Err(Error::domain("wing side does not match the sign of k", k));
                }
                wing(k, c_or_u)
            }
            Regime::FixedULeft | Regime::FixedURight => {
                if (k > 0.0) != (self == Regime::FixedURight) {
                    return Err(Error::domain("wing side does not match the sign of k", k));
                }
                fixed_u(k, c_or_u)
            }
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::PriceToOne => "price-to-one",
            Regime::PriceToZero => "price-to-zero",
            Regime::RightWing => "right-wing",
            Regime::LeftWing => "left-wing",
            Regime::FixedULeft => "fixed-u-left",
            Regime::FixedURight => "fixed-u-right",
        })
    }
}

impl FromStr for Regime {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Regime::ALL
            .into_iter()
            .find(|r| r.to_string() == s)
            .ok_or_else(|| format!("unknown regime `{s}`"))
    }
}

/// `sqrt(-8 ln(1 - c))`, the limit as `c -> 1`.
///
/// ```
/// use ivbounds::asymptotics::price_to_one;
///
/// let c = 1.0 - (-2.0f64).exp();
/// assert!((price_to_one(c).unwrap() - 4.0).abs() < 1e-14);
/// ```
pub fn price_to_one(c: f64) -> Result<f64> {
    if !(c > 0.0 && c < 1.0) {
        return Err(Error::domain("price-to-one formula needs 0 < c < 1", c));
    }
    Ok((-8.0 * (-c).ln_1p()).sqrt())
}

/// `k / sqrt(-2 ln c)` for `k > 0`, and `-k / sqrt(-2 ln p)` with
/// `p = c + e^k - 1` for `k < 0`.
pub fn price_to_zero(k: f64, c: f64) -> Result<f64> {
    if k == 0.0 || !k.is_finite() {
        return Err(Error::domain(
            "price-to-zero formula needs finite k != 0",
            k,
        ));
    }
    let x = if k > 0.0 { c } else { c + k.exp_m1() };
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::domain(
            "price-to-zero formula needs a price in (0, 1)",
            x,
        ));
    }
    Ok(k.abs() / (-2.0 * x.ln()).sqrt())
}

/// `sqrt(-2 ln(e^{-k} c)) - sqrt(-2 ln c)` for `k > 0`; for `k < 0` the same
/// formula applied to the put-call image, which reads
/// `sqrt(-2 ln p) - sqrt(-2 ln(e^{-k} p))`.
///
/// ```
/// use ivbounds::asymptotics::wing;
///
/// // e^{-k} c = 1e-8
/// let y = wing(1e4f64.ln(), 1e-4).unwrap();
/// assert!((y - 1.777_776_464_961_89).abs() < 1e-12);
/// assert_eq!(wing(0.0, 0.3).unwrap(), 0.0);
/// ```
pub fn wing(k: f64, c: f64) -> Result<f64> {
    let (q, _) = Quote::new(k, c)?.reduced();
    let (k, c) = (q.k(), q.c());
    if !(c > 0.0) {
        return Err(Error::domain(
            "wing formula needs a price above intrinsic",
            c,
        ));
    }
    let lc = c.ln();
    Ok((2.0 * k - 2.0 * lc).sqrt() - (-2.0 * lc).sqrt())
}

/// `sqrt(2|k|) + q(u)`, the limit when the reduced price tends to `u`.
///
/// ```
/// use ivbounds::asymptotics::fixed_u;
///
/// assert!((fixed_u(-8.0, 0.5).unwrap() - 4.0).abs() < 1e-15);
/// ```
pub fn fixed_u(k: f64, u: f64) -> Result<f64> {
    if !k.is_finite() {
        return Err(Error::domain("log-moneyness must be finite", k));
    }
    if !(u > 0.0 && u < 1.0) {
        return Err(Error::domain("fixed-u formula needs 0 < u < 1", u));
    }
    Ok((2.0 * k.abs()).sqrt() + inv(u))
}
