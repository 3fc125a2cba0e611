//! The normalised Black-Scholes call price `C(k, y)`.
//!
//! Prices are quoted in units of the forward: `k` is log-moneyness and `y` is
//! the total standard deviation `sigma * sqrt(T)`, so
//!
//! ```text
//! C(k, y) = Phi(-k/y + y/2) - e^k Phi(-k/y - y/2),   C(k, 0) = (1 - e^k)^+.
//! ```
//!
//! For `k > 0` deep out of the money both terms are tiny and nearly equal.
//! There the price is evaluated as `Phi(d1) * (1 - r)` where
//! `ln r = -int_{-d1}^{-d2} g(t) dt` and `g` is the reciprocal Mills ratio
//! minus `t`. Every factor is then positive and the result keeps its relative
//! accuracy far below `1e-20`.

use std::f64::consts::SQRT_2;

use crate::error::{Error, Result};
use crate::normal::{cdf, mills_excess, pdf};
use crate::quad;

/// A validated `(k, c)` pair with `(1 - e^k)^+ <= c < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quote {
    k: f64,
    c: f64,
}

impl Quote {
    pub fn new(k: f64, c: f64) -> Result<Self> {
        if !k.is_finite() {
            return Err(Error::domain("log-moneyness must be finite", k));
        }
        let lower = intrinsic(k);
        if !(c >= lower && c < 1.0) {
            return Err(Error::PriceOutOfRange { k, c, lower });
        }
        Ok(Quote { k, c })
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// Put price `c + e^k - 1` from parity.
    pub fn put(&self) -> f64 {
        self.c + self.k.exp_m1()
    }

    /// True when the price sits at the lower edge of its range, i.e. `y = 0`.
    pub fn at_intrinsic(&self) -> bool {
        self.c == intrinsic(self.k)
    }

    /// Image under put-call symmetry: `(-k, e^{-k} c + 1 - e^{-k})`.
    pub fn put_call_image(&self) -> Quote {
        let c = ((-self.k).exp() * self.put()).min(ONE_MINUS);
        Quote {
            k: -self.k,
            c: c.max(intrinsic(-self.k)),
        }
    }

    /// The equivalent quote with `k >= 0`, and whether the symmetry was used.
    pub fn reduced(&self) -> (Quote, bool) {
        if self.k < 0.0 {
            (self.put_call_image(), true)
        } else {
            (*self, false)
        }
    }
}

const ONE_MINUS: f64 = 1.0 - f64::EPSILON / 2.0;

/// `(1 - e^k)^+`, the price at zero volatility.
pub fn intrinsic(k: f64) -> f64 {
    (-k.exp_m1()).max(0.0)
}

fn check(k: f64, y: f64) -> Result<()> {
    if !k.is_finite() {
        return Err(Error::domain("log-moneyness must be finite", k));
    }
    if !(y >= 0.0) || y.is_infinite() {
        return Err(Error::domain(
            "total standard deviation must be finite and >= 0",
            y,
        ));
    }
    Ok(())
}

/// Normalised call price `C(k, y)`.
///
/// ```
/// use ivbounds::pricing::call_price;
///
/// // at the money the price is 2 Phi(y/2) - 1
/// let c = call_price(0.0, 2.0).unwrap();
/// assert!((c - 0.682_689_492_137_085_9).abs() < 1e-15);
/// assert_eq!(call_price(-0.2, 0.0).unwrap(), -(-0.2f64).exp_m1());
/// ```
pub fn call_price(k: f64, y: f64) -> Result<f64> {
    check(k, y)?;
    Ok(call(k, y))
}

/// Unchecked [`call_price`].
pub(crate) fn call(k: f64, y: f64) -> f64 {
    if y == 0.0 {
        return intrinsic(k);
    }
    if k == 0.0 {
        return libm::erf(y / (2.0 * SQRT_2));
    }
    if k < 0.0 {
        return -k.exp_m1() + k.exp() * call(-k, y);
    }
    let d1 = -k / y + 0.5 * y;
    if d1 < -8.0 || y < 1e-8 {
        return tail_call(k, y);
    }
    let d2 = -k / y - 0.5 * y;
    (cdf(d1) - k.exp() * cdf(d2)).max(0.0)
}

fn tail_call(k: f64, y: f64) -> f64 {
    let a = k / y - 0.5 * y;
    let b = k / y + 0.5 * y;
    let log_ratio = quad::integrate(mills_excess, a, b, 0.0, 1e-15);
    -cdf(-a) * (-log_ratio).exp_m1()
}

/// Normalised put price `C(k, y) + e^k - 1`.
pub fn put_price(k: f64, y: f64) -> Result<f64> {
    check(k, y)?;
    // put-call symmetry: P(k, y) = e^k C(-k, y)
    Ok(k.exp() * call(-k, y))
}

/// `dC/dy = phi(-k/y + y/2)`.
pub fn vega(k: f64, y: f64) -> Result<f64> {
    if !k.is_finite() {
        return Err(Error::domain("log-moneyness must be finite", k));
    }
    if !(y > 0.0) || y.is_infinite() {
        return Err(Error::domain("vega needs finite y > 0", y));
    }
    Ok(pdf(-k / y + 0.5 * y))
}

/// `sqrt(2k)`: `C(k, .)` is convex below this point and concave above it.
pub fn convexity_threshold(k: f64) -> Result<f64> {
    if !(k >= 0.0) || k.is_infinite() {
        return Err(Error::domain(
            "convexity threshold needs k >= 0; reflect with put-call symmetry first",
            k,
        ));
    }
    Ok((2.0 * k).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    // Simpson quadrature of (e^{yz - y^2/2} - e^k)^+ phi(z) over the exercise region.
    fn payoff_oracle(k: f64, y: f64) -> f64 {
        let z0 = (k + 0.5 * y * y) / y;
        let (lo, hi) = (z0, z0.max(0.0) + 40.0);
        let n = 200_000;
        let h = (hi - lo) / n as f64;
        let f = |z: f64| ((y * z - 0.5 * y * y).exp() - k.exp()).max(0.0) * pdf(z);
        let mut s = f(lo) + f(hi);
        for i in 1..n {
            s += if i % 2 == 1 { 4.0 } else { 2.0 } * f(lo + i as f64 * h);
        }
        s * h / 3.0
    }

    // Simpson quadrature of the vega integral, refined near the upper end.
    fn vega_integral(k: f64, y: f64) -> f64 {
        let n = 200_000;
        let h = y / n as f64;
        let f = |x: f64| if x == 0.0 { 0.0 } else { pdf(-k / x + 0.5 * x) };
        let mut s = f(0.0) + f(y);
        for i in 1..n {
            s += if i % 2 == 1 { 4.0 } else { 2.0 } * f(i as f64 * h);
        }
        s * h / 3.0 + intrinsic(k)
    }

    #[test]
    fn zero_volatility_is_intrinsic() {
        for k in [-2.0, -0.2, 0.0, 0.2, 3.0] {
            assert_eq!(call_price(k, 0.0).unwrap(), intrinsic(k));
        }
        assert_eq!(call_price(0.2, 0.0).unwrap(), 0.0);
        assert_eq!(put_price(0.2, 0.0).unwrap(), 0.2f64.exp_m1());
        assert_eq!(put_price(-0.2, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn reference_values() {
        // 2 Phi(1) - 1
        assert!((call_price(0.0, 2.0).unwrap() - 0.682_689_492_137_085_9).abs() < 1e-15);
        // mpmath quadrature of the payoff
        let c = call_price(0.2, 1.0).unwrap();
        assert!((c - 0.322_376_349_989_183_1).abs() < 1e-14);
        assert!((c - payoff_oracle(0.2, 1.0)).abs() < 1e-10);
        let p = put_price(0.2, 1.0).unwrap();
        assert!((p - 0.543_779_108_149_353).abs() < 1e-14);
        assert!((put_price(0.0, 0.7).unwrap() - call_price(0.0, 0.7).unwrap()).abs() < 1e-16);
        // phi(0.3)
        assert!((vega(0.2, 1.0).unwrap() - 0.381_387_815_460_524_1).abs() < 1e-15);
        assert_eq!(vega(0.0, 0.8).unwrap(), pdf(0.4));
    }

    #[test]
    fn convexity_threshold_values() {
        assert_eq!(convexity_threshold(0.0).unwrap(), 0.0);
        assert_eq!(convexity_threshold(0.5).unwrap(), 1.0);
        assert!(convexity_threshold(-0.1).is_err());
        let k: f64 = 0.2;
        let at_pivot = call_price(k, convexity_threshold(k).unwrap()).unwrap();
        let closed = 0.5 - k.exp() * cdf(-(2.0 * k).sqrt());
        assert!((at_pivot - closed).abs() < 1e-15);
    }

    #[test]
    fn domain_errors() {
        assert!(call_price(0.1, -1.0).is_err());
        assert!(call_price(f64::NAN, 1.0).is_err());
        assert!(vega(0.1, 0.0).is_err());
        assert!(put_price(0.1, -0.5).is_err());
    }

    #[test]
    fn vega_matches_central_difference() {
        let h = 1e-6;
        let fd = (call(0.2, 1.0 + h) - call(0.2, 1.0 - h)) / (2.0 * h);
        assert!((fd - vega(0.2, 1.0).unwrap()).abs() < 1e-7);
    }

    #[test]
    fn agrees_with_vega_integral() {
        for &(k, y) in &[(0.2, 1.0), (1.0, 0.5), (-0.5, 2.0), (0.05, 0.1), (2.0, 3.0)] {
            let c = call_price(k, y).unwrap();
            assert!((c - vega_integral(k, y)).abs() < 1e-10, "({k}, {y})");
        }
    }

    #[test]
    fn complementary_identity() {
        for &(k, y) in &[(0.2, 0.3), (0.2, 1.5), (1.0, 0.7), (3.0, 2.0)] {
            let lhs = call(k, y) + call(k, 2.0 * k / y);
            let rhs = 1.0 - 2.0 * k.exp() * cdf(-k / y - 0.5 * y);
            assert!((lhs - rhs).abs() < 1e-12);
        }
    }

    #[test]
    fn tail_form_matches_direct_form_near_switch() {
        // at d1 just above -8 the direct form still has ~12 good digits
        for k in [0.5, 2.0, 10.0] {
            // solve -k/y + y/2 = -7.9 for y
            let y = -7.9 + (7.9f64 * 7.9 + 2.0 * k).sqrt();
            let direct = cdf(-k / y + 0.5 * y) - k.exp() * cdf(-k / y - 0.5 * y);
            let tail = tail_call(k, y);
            assert!((direct / tail - 1.0).abs() < 1e-10, "k = {k}");
        }
    }

    #[test]
    fn deep_wing_prices() {
        // mpmath at 30 digits
        let c = call_price(2.3, 0.25).unwrap();
        assert!(
            (c / 1.490_220_393_672_595_6e-21 - 1.0).abs() < 1e-12,
            "{c:e}"
        );
        let c = call_price(0.2, 0.02).unwrap();
        assert!(
            (c / 1.652_052_265_741_198_5e-26 - 1.0).abs() < 1e-12,
            "{c:e}"
        );
        // k = y -> 0: C / y -> phi(1) - Phi(-1)
        let c = call_price(1e-9, 1e-9).unwrap();
        assert!((c / 1e-9 / (pdf(1.0) - cdf(-1.0)) - 1.0).abs() < 1e-6);
    }

    #[test]
    fn quote_validation_and_symmetry() {
        assert!(Quote::new(0.2, 0.5).is_ok());
        assert!(Quote::new(0.2, 1.0).is_err());
        assert!(Quote::new(-0.2, 0.1).is_err());
        let q = Quote::new(0.2, 0.5).unwrap();
        let img = q.put_call_image();
        assert_eq!(img.k(), -0.2);
        assert!((img.c() - 0.590_634_623_461_009).abs() < 1e-15);
        let back = img.put_call_image();
        assert!((back.c() - 0.5).abs() < 1e-15);
        assert_eq!(back.k(), 0.2);
        let q0 = Quote::new(0.0, 0.3).unwrap();
        assert_eq!(q0.put_call_image(), q0);
    }
}
