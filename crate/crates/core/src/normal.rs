//! Standard normal density, distribution function and quantile.
//!
//! The distribution function is evaluated through the complementary error
//! function, so both tails keep full relative accuracy down to the underflow
//! threshold. The quantile follows the extended-real convention used by the
//! bound formulas: every argument `u <= 0` maps to `-inf` and every `u >= 1`
//! maps to `+inf`.

// Coefficients are kept exactly as published.
#![allow(clippy::excessive_precision)]

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use crate::error::{Error, Result};

/// `1 / sqrt(2 pi)`.
pub const FRAC_1_SQRT_2PI: f64 = 0.398_942_280_401_432_7;

/// A number in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Probability(f64);

impl Probability {
    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(Probability(value))
        } else {
            Err(Error::InvalidProbability(value))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Standard normal density.
pub fn pdf(x: f64) -> f64 {
    FRAC_1_SQRT_2PI * (-0.5 * x * x).exp()
}

/// Standard normal distribution function, defined for all extended reals.
pub fn cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x * FRAC_1_SQRT_2)
}

/// Inverse of [`cdf`].
///
/// Returns `-inf` for `p <= 0` and `+inf` for `p >= 1`; only NaN is rejected.
///
/// ```
/// use ivbounds::normal::{cdf, quantile};
///
/// assert_eq!(quantile(0.5).unwrap(), 0.0);
/// assert_eq!(quantile(1.2).unwrap(), f64::INFINITY);
/// let x = quantile(1e-200).unwrap();
/// assert!((cdf(x) / 1e-200 - 1.0).abs() < 1e-12);
/// ```
pub fn quantile(p: f64) -> Result<f64> {
    if p.is_nan() {
        return Err(Error::InvalidProbability(p));
    }
    Ok(inv(p))
}

/// Total version of [`quantile`] for internal use: NaN propagates.
pub(crate) fn inv(p: f64) -> f64 {
    if p.is_nan() {
        f64::NAN
    } else if p <= 0.0 {
        f64::NEG_INFINITY
    } else if p >= 1.0 {
        f64::INFINITY
    } else if p > 0.5 {
        // 1 - p is exact here
        -lower_half(1.0 - p)
    } else {
        lower_half(p)
    }
}

/// Quantile for `0 < p <= 1/2`: rational start followed by one Halley step.
fn lower_half(p: f64) -> f64 {
    let x = wichura(p);
    if p < 1e-300 {
        // the density underflows before the correction could be formed
        return x;
    }
    let err = cdf(x) - p;
    let u = err / pdf(x);
    x - u / (1.0 + 0.5 * x * u)
}

/// Wichura's AS 241 (PPND16) rational approximation.
fn wichura(p: f64) -> f64 {
    let q = p - 0.5;
    if q.abs() <= 0.425 {
        let r = 0.180625 - q * q;
        let num = (((((((2.509_080_928_730_122_7e3 * r + 3.343_057_558_358_813e4) * r
            + 6.726_577_092_700_870_1e4)
            * r
            + 4.592_195_393_154_987_1e4)
            * r
            + 1.373_169_376_550_946e4)
            * r
            + 1.971_590_950_306_551_3e3)
            * r
            + 1.331_416_678_917_843_8e2)
            * r
            + 3.387_132_872_796_366_5)
            * q;
        let den = ((((((5.226_495_278_852_545_6e3 * r + 2.872_908_573_572_194_3e4) * r
            + 3.930_789_580_009_271e4)
            * r
            + 2.121_379_430_158_659_7e4)
            * r
            + 5.394_196_021_424_751e3)
            * r
            + 6.871_870_074_920_579e2)
            * r
            + 4.231_333_070_160_091e1)
            * r
            + 1.0;
        return num / den;
    }
    let mut r = if q < 0.0 { p } else { 1.0 - p };
    r = (-r.ln()).sqrt();
    let x = if r <= 5.0 {
        r -= 1.6;
        let num = ((((((7.745_450_142_783_414e-4 * r + 2.272_384_498_926_918_4e-2) * r
            + 2.417_807_251_774_506e-1)
            * r
            + 1.270_458_252_452_368_4)
            * r
            + 3.647_848_324_763_204_5)
            * r
            + 5.769_497_221_460_691)
            * r
            + 4.630_337_846_156_545)
            * r
            + 1.423_437_110_749_683_5;
        let den = ((((((1.050_750_071_644_416_9e-9 * r + 5.475_938_084_995_345e-4) * r
            + 1.519_866_656_361_645_7e-2)
            * r
            + 1.481_039_764_274_800_8e-1)
            * r
            + 6.897_673_349_851e-1)
            * r
            + 1.676_384_830_183_803_8)
            * r
            + 2.053_191_626_637_758_8)
            * r
            + 1.0;
        num / den
    } else {
        r -= 5.0;
        let num = ((((((2.010_334_399_292_288_1e-7 * r + 2.711_555_568_743_487_6e-5) * r
            + 1.242_660_947_388_078_4e-3)
            * r
            + 2.653_218_952_657_612_4e-2)
            * r
            + 2.965_605_718_285_048_7e-1)
            * r
            + 1.784_826_539_917_291_3)
            * r
            + 5.463_784_911_164_114)
            * r
            + 6.657_904_643_501_103;
        let den = ((((((2.044_263_103_389_939_7e-15 * r + 1.421_511_758_316_446e-7) * r
            + 1.846_318_317_510_054_8e-5)
            * r
            + 7.868_691_311_456_133e-4)
            * r
            + 1.487_536_129_085_061_5e-2)
            * r
            + 1.369_298_809_227_358e-1)
            * r
            + 5.998_322_065_558_879e-1)
            * r
            + 1.0;
        num / den
    };
    if q < 0.0 {
        -x
    } else {
        x
    }
}

/// Upper bound `1 / sqrt(4 pi x)` for `e^x * Phi(-sqrt(2x))`, valid for `x > 0`.
pub fn mills_bound(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain("Mills-ratio bound needs x > 0", x));
    }
    Ok(1.0 / (4.0 * PI * x).sqrt())
}

/// `phi(t) / Phi(-t) - t`, the reciprocal Mills ratio minus its leading term.
///
/// Positive and smooth for all real `t`. For large `t` the subtraction is
/// avoided by evaluating the tail of Laplace's continued fraction.
pub(crate) fn mills_excess(t: f64) -> f64 {
    if t <= 5.0 {
        return pdf(t) / cdf(-t) - t;
    }
    let mut tail = t;
    for n in (2..=MILLS_TERMS).rev() {
        tail = t + n as f64 / tail;
    }
    1.0 / tail
}

const MILLS_TERMS: usize = 160;
