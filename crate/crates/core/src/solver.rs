//! Inversion of `y -> C(k, y)`.
//!
//! All three methods start from the certified bracket of
//! [`best_bracket`](crate::bounds::best_bracket) and work on the put-call
//! image with `k >= 0`, which leaves the root unchanged.
//!
//! Stopping is residual based. A solve succeeds once `|C(k', y) - c'|` is at
//! most `tolerance * c'` in those reduced coordinates, or once the bracket
//! cannot shrink any further in floating point. The relative form matters in
//! the wings, where prices like `1e-30` are meaningful and an absolute
//! tolerance would accept any `y` in a wide interval. The reported residual
//! is the absolute one in the caller's coordinates.

use std::fmt;
use std::str::FromStr;

use crate::bounds::{bracket_reduced, h1, wing_lower, BoundKind, Bracket, Provenance};
use crate::error::{Error, Result};
use crate::normal::{inv, pdf};
use crate::pricing::{call, Quote};

/// Root-finding method.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Bisection,
    /// Newton's method seeded at the convexity threshold `sqrt(2k)`.
    Newton,
    /// Iteration of `F(y) = H1(-k/y + y/2; k, c)`.
    FixedPoint,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Bisection => "bisection",
            Method::Newton => "newton",
            Method::FixedPoint => "fixed-point",
        })
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "bisection" => Ok(Method::Bisection),
            "newton" => Ok(Method::Newton),
            "fixed-point" => Ok(Method::FixedPoint),
            _ => Err(format!(
                "unknown method `{s}` (bisection, newton, fixed-point)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    pub method: Method,
    /// Relative price tolerance; the fixed-point method also stops once
    /// successive iterates differ by at most this much.
    pub tolerance: f64,
    pub max_iterations: usize,
    pub record_trace: bool,
    /// Starting point for the fixed-point method. Defaults to the long-dated
    /// upper bound.
    pub start: Option<f64>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            method: Method::Bisection,
            tolerance: 1e-12,
            max_iterations: 1000,
            record_trace: false,
            start: None,
        }
    }
}

impl SolverConfig {
    pub fn with_method(method: Method) -> Self {
        SolverConfig {
            method,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0) || self.tolerance.is_infinite() {
            return Err(Error::domain(
                "tolerance must be finite and > 0",
                self.tolerance,
            ));
        }
        if self.max_iterations == 0 {
            return Err(Error::InvalidParams("max_iterations must be at least 1"));
        }
        Ok(())
    }
}

/// Result of a solve.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub y: f64,
    pub method: Method,
    pub iterations: usize,
    /// `|C(k, y) - c|` in the caller's coordinates.
    pub residual: f64,
    /// Iterates in order, starting with the initial point, when requested.
    pub trace: Vec<f64>,
    /// The certified bracket the solve started from.
    pub bracket: Bracket,
    /// Interval known to contain the root when the solve stopped.
    pub final_interval: (f64, f64),
}

/// Solves `C(k, y) = c` for `y`.
///
/// The intrinsic price returns `y = 0` and `k = 0` returns the closed form
/// `-2 q((1 - c) / 2)`, both without iterating.
///
/// ```
/// use ivbounds::pricing::call_price;
/// use ivbounds::solver::{implied_y, SolverConfig};
///
/// let c = call_price(0.2, 1.0).unwrap();
/// let r = implied_y(0.2, c, &SolverConfig::default()).unwrap();
/// assert!((r.y - 1.0).abs() < 1e-10);
/// assert!(r.bracket.contains(r.y));
/// ```
pub fn implied_y(k: f64, c: f64, config: &SolverConfig) -> Result<SolveReport> {
    config.validate()?;
    let quote = Quote::new(k, c)?;
    let (reduced, flipped) = quote.reduced();
    let bracket = bracket_reduced(reduced.k(), reduced.c(), flipped);
    if let Some(r) = exact(&quote, &reduced, &bracket, config) {
        return Ok(r);
    }
    let raw = match config.method {
        Method::Bisection => bisect_raw(&reduced, bracket.lower, bracket.upper, config),
        Method::Newton => newton_raw(&reduced, &bracket, config),
        Method::FixedPoint => {
            let y0 = match config.start {
                Some(y0) => y0,
                None => long_dated_start(&reduced),
            };
            fixed_point_raw(&reduced, y0, config)
        }
    };
    finish(&quote, bracket, config, raw)
}

/// Bisection from a caller-supplied interval.
///
/// The interval must contain the root; this is checked through the prices at
/// its ends.
pub fn bisect(
    k: f64,
    c: f64,
    lower: f64,
    upper: f64,
    config: &SolverConfig,
) -> Result<SolveReport> {
    config.validate()?;
    let quote = Quote::new(k, c)?;
    let (reduced, _) = quote.reduced();
    if !(lower >= 0.0 && lower <= upper) || upper.is_infinite() {
        return Err(Error::domain(
            "bisection needs 0 <= lower <= upper < inf",
            upper,
        ));
    }
    if call(reduced.k(), lower) > reduced.c() || call(reduced.k(), upper) < reduced.c() {
        return Err(Error::domain("interval does not contain the root", lower));
    }
    let heuristic = Provenance {
        kind: BoundKind::Heuristic,
        via_put_call: k < 0.0,
    };
    let bracket = Bracket {
        lower,
        upper,
        lower_from: heuristic,
        upper_from: heuristic,
    };
    let config = SolverConfig {
        method: Method::Bisection,
        ..config.clone()
    };
    if let Some(r) = exact(&quote, &reduced, &bracket, &config) {
        return Ok(r);
    }
    let raw = bisect_raw(&reduced, lower, upper, &config);
    finish(&quote, bracket, &config, raw)
}

/// Newton's method; shorthand for [`implied_y`] with [`Method::Newton`].
///
/// From the seed `sqrt(2k)` the iterates stay on one side of the root:
/// above it when `c <= C(k, sqrt(2k))`, where the price is convex, and below
/// it otherwise.
pub fn newton(k: f64, c: f64, config: &SolverConfig) -> Result<SolveReport> {
    implied_y(
        k,
        c,
        &SolverConfig {
            method: Method::Newton,
            ..config.clone()
        },
    )
}

/// Iterates `y_{n+1} = F(y_n)` with `F(y) = H1(-k/y + y/2; k, c)` from `y0`.
///
/// Needs `y0 > q(c) + sqrt(q(c)^2 + 2k)`, below which `F` is infinite.
/// Every iterate after the first is an upper bound for the root, and those
/// iterates decrease to it quadratically. The trace is always recorded.
///
/// ```
/// use ivbounds::solver::{fixed_point, SolverConfig};
///
/// let r = fixed_point(0.2, 0.3, 0.4, &SolverConfig::default()).unwrap();
/// assert!((r.y - 0.941_675_199_023_321_9).abs() < 1e-12);
/// assert!(r.trace[1..].windows(2).all(|w| w[1] <= w[0]));
/// ```
pub fn fixed_point(k: f64, c: f64, y0: f64, config: &SolverConfig) -> Result<SolveReport> {
    implied_y(
        k,
        c,
        &SolverConfig {
            method: Method::FixedPoint,
            record_trace: true,
            start: Some(y0),
            ..config.clone()
        },
    )
}

/// Smallest `y` at which the fixed-point map is finite, for `k > 0`.
pub fn fixed_point_floor(k: f64, c: f64) -> Result<f64> {
    let (q, _) = Quote::new(k, c)?.reduced();
    if q.k() == 0.0 {
        return Err(Error::domain("the fixed-point map needs k != 0", k));
    }
    Ok(wing_lower(q.k(), q.c()))
}

/// `F(y) = H1(-k/y + y/2; k, c)` for the reduced quote.
pub fn fixed_point_map(k: f64, c: f64, y: f64) -> Result<f64> {
    let (q, _) = Quote::new(k, c)?.reduced();
    if !(y > 0.0) || y.is_infinite() {
        return Err(Error::domain("fixed-point map needs finite y > 0", y));
    }
    Ok(map(q.k(), q.c(), y))
}

fn map(k: f64, c: f64, y: f64) -> f64 {
    h1(-k / y + 0.5 * y, k, c)
}

fn long_dated_start(q: &Quote) -> f64 {
    -2.0 * inv((1.0 - q.c()) / (1.0 + q.k().exp()))
}

struct Raw {
    y: f64,
    iterations: usize,
    trace: Vec<f64>,
    interval: (f64, f64),
    converged: bool,
}

fn exact(
    quote: &Quote,
    reduced: &Quote,
    bracket: &Bracket,
    config: &SolverConfig,
) -> Option<SolveReport> {
    let y = if reduced.at_intrinsic() {
        0.0
    } else if reduced.k() == 0.0 {
        -2.0 * inv(0.5 * (1.0 - reduced.c()))
    } else {
        return None;
    };
    Some(SolveReport {
        y,
        method: config.method,
        iterations: 0,
        residual: residual(quote, y),
        trace: if config.record_trace {
            vec![y]
        } else {
            Vec::new()
        },
        bracket: bracket.clone(),
        final_interval: (y, y),
    })
}

fn residual(quote: &Quote, y: f64) -> f64 {
    (call(quote.k(), y) - quote.c()).abs()
}

fn finish(
    quote: &Quote,
    bracket: Bracket,
    config: &SolverConfig,
    raw: Result<Raw>,
) -> Result<SolveReport> {
    let raw = raw?;
    if !raw.converged {
        let (lower, upper) = raw.interval;
        return Err(Error::NoConvergence {
            iterations: raw.iterations,
            bracket: Bracket {
                lower,
                upper,
                ..bracket
            },
        });
    }
    Ok(SolveReport {
        y: raw.y,
        method: config.method,
        iterations: raw.iterations,
        residual: residual(quote, raw.y),
        trace: raw.trace,
        bracket,
        final_interval: raw.interval,
    })
}

fn close_enough(f: f64, c: f64, tol: f64) -> bool {
    f.abs() <= tol * c
}

// no representable point strictly inside (lo, hi)
fn exhausted(lo: f64, hi: f64) -> bool {
    let mid = 0.5 * (lo + hi);
    mid <= lo || mid >= hi
}

fn bisect_raw(q: &Quote, mut lo: f64, mut hi: f64, config: &SolverConfig) -> Result<Raw> {
    let (k, c) = (q.k(), q.c());
    let mut trace = Vec::new();
    for n in 1..=config.max_iterations {
        let mid = 0.5 * (lo + hi);
        if config.record_trace {
            trace.push(mid);
        }
        let f = call(k, mid) - c;
        if f > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
        if close_enough(f, c, config.tolerance) || exhausted(lo, hi) {
            return Ok(Raw {
                y: mid,
                iterations: n,
                trace,
                interval: (lo, hi),
                converged: true,
            });
        }
    }
    Ok(Raw {
        y: 0.5 * (lo + hi),
        iterations: config.max_iterations,
        trace,
        interval: (lo, hi),
        converged: false,
    })
}

fn newton_raw(q: &Quote, bracket: &Bracket, config: &SolverConfig) -> Result<Raw> {
    let (k, c) = (q.k(), q.c());
    let (mut lo, mut hi) = (bracket.lower, bracket.upper);
    let mut y = (2.0 * k).sqrt().clamp(lo, hi);
    let mut trace = Vec::new();
    for n in 1..=config.max_iterations {
        if config.record_trace {
            trace.push(y);
        }
        let f = call(k, y) - c;
        if close_enough(f, c, config.tolerance) {
            return Ok(Raw {
                y,
                iterations: n,
                trace,
                interval: (lo, hi),
                converged: true,
            });
        }
        if f > 0.0 {
            hi = hi.min(y);
        } else {
            lo = lo.max(y);
        }
        if exhausted(lo, hi) {
            return Ok(Raw {
                y,
                iterations: n,
                trace,
                interval: (lo, hi),
                converged: true,
            });
        }
        let step = y - f / pdf(-k / y + 0.5 * y);
        // vega underflow or a step outside the bracket falls back to bisection
        y = if step > lo && step < hi {
            step
        } else {
            0.5 * (lo + hi)
        };
    }
    Ok(Raw {
        y,
        iterations: config.max_iterations,
        trace,
        interval: (lo, hi),
        converged: false,
    })
}

fn fixed_point_raw(q: &Quote, y0: f64, config: &SolverConfig) -> Result<Raw> {
    let (k, c) = (q.k(), q.c());
    let floor = wing_lower(k, c);
    if !(y0 > floor) || y0.is_infinite() {
        return Err(Error::domain(
            "fixed-point start must be finite and above the map's floor",
            y0,
        ));
    }
    let mut trace = vec![y0];
    let mut y = y0;
    for n in 1..=config.max_iterations {
        let next = map(k, c, y);
        if !next.is_finite() {
            return Err(Error::domain("fixed-point map left its domain", y));
        }
        // from the second iterate on, a non-decreasing step means rounding noise
        if n >= 2 && next >= y {
            return Ok(Raw {
                y,
                iterations: n,
                trace,
                interval: (floor, y),
                converged: true,
            });
        }
        trace.push(next);
        let done = (next - y).abs() <= config.tolerance;
        y = next;
        if done {
            return Ok(Raw {
                y,
                iterations: n,
                trace,
                interval: (floor, y),
                converged: true,
            });
        }
    }
    Ok(Raw {
        y,
        iterations: config.max_iterations,
        trace,
        interval: (floor, y),
        converged: false,
    })
}
