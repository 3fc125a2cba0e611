//! Put-call symmetry, the dual price and the `J` integral.
//!
//! For `k > 0` the map `y -> 2k / y` pairs every price `c = C(k, y)` with a
//! dual price `C(k, 2k / y)`. As a function of `c` the dual price is a
//! decreasing convex involution, and `J(k, c) = int_0^c du / Y(k, u)`
//! satisfies `J(k, c) + J(k, dual) = J(k, 1)`.

use crate::error::{Error, Result};
use crate::normal::pdf;
use crate::pricing::{call, Quote};
use crate::quad;
use crate::solver::{implied_y, SolverConfig};

/// `(k, c) -> (-k, e^{-k} c + 1 - e^{-k})`, which leaves `Y` unchanged.
///
/// ```
/// use ivbounds::symmetry::put_call_transform;
///
/// let img = put_call_transform(0.2, 0.5).unwrap();
/// assert_eq!(img.k(), -0.2);
/// assert!((img.c() - 0.590_634_623_461_009).abs() < 1e-15);
/// let back = put_call_transform(img.k(), img.c()).unwrap();
/// assert!((back.c() - 0.5).abs() < 1e-15);
/// ```
pub fn put_call_transform(k: f64, c: f64) -> Result<Quote> {
    Ok(Quote::new(k, c)?.put_call_image())
}

fn check_dual(k: f64, c: f64) -> Result<()> {
    if !(k > 0.0) || k.is_infinite() {
        return Err(Error::domain("dual price needs finite k > 0", k));
    }
    if !(c > 0.0 && c < 1.0) {
        return Err(Error::domain("dual price needs 0 < c < 1", c));
    }
    Ok(())
}

/// Dual price `C(k, 2k / Y(k, c))` for `k > 0`, `0 < c < 1`.
///
/// ```
/// use ivbounds::symmetry::dual_price;
///
/// let d = dual_price(0.2, 0.3).unwrap();
/// assert!((d - 0.096_059_521_849_842_54).abs() < 1e-12);
/// assert!((dual_price(0.2, d).unwrap() - 0.3).abs() < 1e-12);
/// ```
pub fn dual_price(k: f64, c: f64) -> Result<f64> {
    check_dual(k, c)?;
    let y = implied_y(k, c, &SolverConfig::default())?.y;
    Ok(call(k, 2.0 * k / y))
}

/// `C(k, 2k/y) - (2k/y^2) (c - C(k, y))`.
///
/// A supporting line of the convex dual price: never above
/// [`dual_price`]`(k, c)`, with equality at `y = Y(k, c)`.
pub fn dual_price_objective(y: f64, k: f64, c: f64) -> Result<f64> {
    check_dual(k, c)?;
    if !(y > 0.0) || y.is_infinite() {
        return Err(Error::domain("dual price objective needs finite y > 0", y));
    }
    Ok(call(k, 2.0 * k / y) - 2.0 * k / (y * y) * (c - call(k, y)))
}

/// `J(k, c) = int_0^c du / Y(k, u)` for `k > 0`, `0 < c <= 1`.
///
/// Computed as `int_0^Y phi(-k/y + y/2) / y dy` with `Y = Y(k, c)`, split at
/// `sqrt(2k)`; for `c = 1` the upper limit is infinite.
///
/// ```
/// use ivbounds::symmetry::j_integral;
///
/// // e^{0.1} K0(0.1) / sqrt(2 pi)
/// assert!((j_integral(0.2, 1.0).unwrap() - 1.070_093_292_017_045_6).abs() < 1e-8);
/// ```
pub fn j_integral(k: f64, c: f64) -> Result<f64> {
    if !(k > 0.0) || k.is_infinite() {
        return Err(Error::domain("J needs finite k > 0", k));
    }
    if !(c > 0.0 && c <= 1.0) {
        return Err(Error::domain("J needs 0 < c <= 1", c));
    }
    let f = |y: f64| {
        if y > 0.0 {
            pdf(-k / y + 0.5 * y) / y
        } else {
            0.0
        }
    };
    let pivot = (2.0 * k).sqrt();
    let top = if c == 1.0 {
        f64::INFINITY
    } else {
        implied_y(k, c, &SolverConfig::default())?.y
    };
    let (abs_tol, rel_tol) = (1e-13, 1e-12);
    let mut total = quad::integrate(f, 0.0, top.min(pivot), abs_tol, rel_tol);
    if top > pivot {
        total += if top.is_infinite() {
            quad::integrate_to_infinity(f, pivot, pivot.max(1.0), abs_tol, rel_tol)
        } else {
            quad::integrate(f, pivot, top, abs_tol, rel_tol)
        };
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pricing::call_price;

    #[test]
    fn transform_fixes_k_zero() {
        let q = put_call_transform(0.0, 0.4).unwrap();
        assert_eq!((q.k(), q.c()), (0.0, 0.4));
        assert!(put_call_transform(0.2, 1.0).is_err());
    }

    #[test]
    fn self_dual_point() {
        let k: f64 = 0.2;
        let s = (2.0 * k).sqrt();
        let c = call_price(k, s).unwrap();
        assert!((dual_price(k, c).unwrap() - c).abs() < 1e-12);
        assert!((dual_price_objective(s, k, c).unwrap() - c).abs() < 1e-15);
    }

    #[test]
    fn objective_lies_below_dual_price() {
        let (k, c) = (0.2, 0.3);
        let d = dual_price(k, c).unwrap();
        for i in 1..60 {
            let y = 0.05 * i as f64;
            assert!(dual_price_objective(y, k, c).unwrap() <= d + 1e-12);
        }
        let y = implied_y(k, c, &SolverConfig::default()).unwrap().y;
        assert!((dual_price_objective(y, k, c).unwrap() - d).abs() < 1e-12);
    }

    #[test]
    fn reference_dual_prices() {
        // mpmath at 30 digits
        assert!((dual_price(0.2, 0.5).unwrap() - 0.038_637_408_603_583_55).abs() < 1e-12);
    }

    #[test]
    fn domain_errors() {
        assert!(dual_price(0.0, 0.3).is_err());
        assert!(dual_price(0.2, 0.0).is_err());
        assert!(dual_price(0.2, 1.0).is_err());
        assert!(j_integral(-0.1, 0.5).is_err());
        assert!(j_integral(0.1, 1.1).is_err());
    }

    #[test]
    fn j_vanishes_at_zero_price() {
        // Y(k, .) is increasing, so J(k, c) >= c / Y(k, c)
        let (k, c) = (0.3, 1e-12);
        let j = j_integral(k, c).unwrap();
        let y = implied_y(k, c, &SolverConfig::default()).unwrap().y;
        assert!(j >= c / y * (1.0 - 1e-9) && j < 1e-10, "{j}");
    }
}
