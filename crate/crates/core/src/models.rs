//! Two models whose normalised call price curves `k -> c(k)` exercise the
//! wing bounds: variance gamma and Black-Scholes with a jump to default.

use crate::error::{Error, Result};
use crate::pricing::call;
use crate::quad;

/// Brownian motion with drift run on an independent gamma clock.
///
/// The forward is `X = exp(sigma W(G) + theta G + m T)` where `G` is gamma
/// distributed with shape `T / nu` and scale `nu` (mean `T`, variance
/// `nu T`), and the drift `m` makes `E[X] = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VarianceGamma {
    sigma: f64,
    nu: f64,
    theta: f64,
    t: f64,
    m: f64,
}

impl VarianceGamma {
    pub fn new(sigma: f64, nu: f64, theta: f64, t: f64) -> Result<Self> {
        if !(sigma > 0.0 && nu > 0.0 && t > 0.0) || !(sigma * nu * t).is_finite() {
            return Err(Error::InvalidParams(
                "variance gamma needs sigma, nu, T > 0",
            ));
        }
        if !theta.is_finite() || !(nu * (theta + 0.5 * sigma * sigma) < 1.0) {
            return Err(Error::InvalidParams(
                "variance gamma needs theta + sigma^2/2 < 1/nu",
            ));
        }
        let m = (-nu * (theta + 0.5 * sigma * sigma)).ln_1p() / nu;
        Ok(VarianceGamma {
            sigma,
            nu,
            theta,
            t,
            m,
        })
    }

    /// `sigma = 0.1213`, `nu = 0.1686`, `theta = -0.1436`, `T = 5`.
    pub fn reference() -> Self {
        Self::new(0.1213, 0.1686, -0.1436, 5.0).unwrap()
    }

    pub fn drift(&self) -> f64 {
        self.m
    }

    /// Gamma shape `T / nu`.
    pub fn shape(&self) -> f64 {
        self.t / self.nu
    }

    /// Gamma scale `nu`.
    pub fn scale(&self) -> f64 {
        self.nu
    }

    /// Log-forward conditional on the clock reading `g`.
    fn log_forward(&self, g: f64) -> f64 {
        (self.theta + 0.5 * self.sigma * self.sigma) * g + self.m * self.t
    }

    /// `E[(X - e^k)^+]`.
    ///
    /// Given `G = g` the price is `F_g C(k - ln F_g, sigma sqrt(g))`, and the
    /// mixture over `g` is integrated adaptively.
    ///
    /// ```
    /// use ivbounds::models::VarianceGamma;
    ///
    /// let vg = VarianceGamma::reference();
    /// assert!(vg.call(0.0) > vg.call(0.5));
    /// assert!((vg.mean_by_quadrature() - 1.0).abs() < 1e-8);
    /// ```
    pub fn call(&self, k: f64) -> f64 {
        self.mix(|g| {
            let lf = self.log_forward(g);
            lf.exp() * call(k - lf, self.sigma * g.sqrt())
        })
    }

    /// `E[X]` by the same quadrature as [`call`](Self::call); equals 1 up to
    /// quadrature error.
    pub fn mean_by_quadrature(&self) -> f64 {
        self.mix(|g| self.log_forward(g).exp())
    }

    /// Integrates `h` against the gamma density.
    ///
    /// In `x = ln g` the density is proportional to `exp(a x - e^x / s)`,
    /// smooth and log-concave for every shape `a`, with its mode at the mean.
    /// Each side of the mode is mapped to `[0, 1)`.
    fn mix<H: Fn(f64) -> f64>(&self, h: H) -> f64 {
        let a = self.shape();
        let s = self.nu;
        let mode = self.t.ln();
        let log_norm = libm::lgamma(a) + a * s.ln();
        let f = |x: f64| {
            let g = x.exp();
            let w = (a * x - g / s - log_norm).exp();
            if w == 0.0 {
                0.0
            } else {
                h(g) * w
            }
        };
        // below the mode the density decays like e^{a x}
        let width = 1.0 / a.min(a.sqrt());
        let (abs_tol, rel_tol) = (0.0, 1e-12);
        let upper = quad::integrate_to_infinity(f, mode, width, abs_tol, rel_tol);
        let lower =
            quad::integrate_to_infinity(|x| f(2.0 * mode - x), mode, width, abs_tol, rel_tol);
        upper + lower
    }
}

/// Black-Scholes dynamics stopped at an independent exponential default
/// time with intensity `lambda`, at which the price jumps to zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JumpToDefault {
    sigma: f64,
    lambda: f64,
    t: f64,
}

impl JumpToDefault {
    pub fn new(sigma: f64, lambda: f64, t: f64) -> Result<Self> {
        if !(sigma > 0.0 && lambda > 0.0 && t > 0.0) || !(sigma * lambda * t).is_finite() {
            return Err(Error::InvalidParams(
                "jump to default needs sigma, lambda, T > 0",
            ));
        }
        Ok(JumpToDefault { sigma, lambda, t })
    }

    /// `sigma = 0.6`, `lambda = 0.05`, `T = 4`.
    pub fn reference() -> Self {
        Self::new(0.6, 0.05, 4.0).unwrap()
    }

    fn total_sd(&self) -> f64 {
        self.sigma * self.t.sqrt()
    }

    /// `C(k - lambda T, sigma sqrt(T))`.
    ///
    /// ```
    /// use ivbounds::models::JumpToDefault;
    /// use ivbounds::pricing::call_price;
    ///
    /// let m = JumpToDefault::reference();
    /// assert_eq!(m.call(0.2), call_price(0.0, 1.2).unwrap());
    /// ```
    pub fn call(&self, k: f64) -> f64 {
        call(k - self.lambda * self.t, self.total_sd())
    }

    /// `P(default before T) = 1 - e^{-lambda T}`.
    pub fn default_probability(&self) -> f64 {
        -(-self.lambda * self.t).exp_m1()
    }

    /// `e^{-k} p(k)` with `p = c + e^k - 1`, evaluated without cancellation.
    ///
    /// Tends to [`default_probability`](Self::default_probability) from
    /// above as `k -> -inf`.
    pub fn reduced_put(&self, k: f64) -> f64 {
        let lt = self.lambda * self.t;
        self.default_probability() + (-lt).exp() * call(lt - k, self.total_sd())
    }
}
