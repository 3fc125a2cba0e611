//! Uniform upper and lower bounds for the implied total standard deviation.
//!
//! Every bound here holds for all admissible `(k, c)`, not only
//! asymptotically. Upper bounds come from plugging a convenient point into
//! one of the two objectives [`d1_objective`] and [`d2_objective`], whose
//! infima are exactly `Y(k, c)`. Lower bounds come from monotonicity
//! arguments.
//!
//! Bounds stated for `k > 0` accept `k < 0` and route the quote through
//! put-call symmetry first. The [`Provenance`] of each side records both the
//! bound family and whether that routing took place.
//!
//! An upper bound of `f64::INFINITY` means the bound carries no information
//! at that point.

use std::fmt;

use crate::error::{Error, Result};
use crate::normal::{cdf, inv};
use crate::pricing::{call, Quote};

/// Which family of bounds produced one side of a [`Bracket`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// `-2 q((1 - c) / (1 + e^k))` above and `-2 q((1 - c) / 2)` below.
    LongDated,
    /// Reciprocal bounds built from the long-dated ones, tight as `c -> 0`.
    ShortDated,
    /// Bounds that are tight in the wings `|k| -> inf`.
    Wing,
    /// The upper bound from evaluating the `d2` objective at `-sqrt(2k)`.
    Pivot,
    /// Exact value at `k = 0`.
    ClosedForm,
    /// Exact value `0` at the intrinsic price.
    Trivial,
    /// Found by doubling until the price exceeds `c`; still checked, but not
    /// from a closed-form bound.
    Heuristic,
}

/// Where one side of a bracket came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Provenance {
    pub kind: BoundKind,
    /// True when the quote was mapped to `k > 0` by put-call symmetry first.
    pub via_put_call: bool,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            BoundKind::LongDated => "long-dated",
            BoundKind::ShortDated => "short-dated",
            BoundKind::Wing => "wing",
            BoundKind::Pivot => "pivot",
            BoundKind::ClosedForm => "closed-form",
            BoundKind::Trivial => "intrinsic",
            BoundKind::Heuristic => "heuristic",
        };
        if self.via_put_call {
            write!(f, "{name} (via put-call symmetry)")
        } else {
            f.write_str(name)
        }
    }
}

/// An interval `[lower, upper]` certified to contain `Y(k, c)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Bracket {
    pub lower: f64,
    pub upper: f64,
    pub lower_from: Provenance,
    pub upper_from: Provenance,
}

impl Bracket {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn contains(&self, y: f64) -> bool {
        self.lower <= y && y <= self.upper
    }

    /// True when the upper side is finite.
    pub fn is_bounded(&self) -> bool {
        self.upper.is_finite()
    }
}

fn provenance(kind: BoundKind, via_put_call: bool) -> Provenance {
    Provenance { kind, via_put_call }
}

/// `k > 0` image of `(k, c)` together with the routing flag.
fn reduce(k: f64, c: f64) -> Result<(f64, f64, bool)> {
    let (q, flipped) = Quote::new(k, c)?.reduced();
    Ok((q.k(), q.c(), flipped))
}

fn nan_to_inf(x: f64) -> f64 {
    if x.is_nan() {
        f64::INFINITY
    } else {
        x
    }
}

/// `H1(d; k, c) = d - q(e^{-k} (Phi(d) - c))`.
///
/// Every value is an upper bound for `Y(k, c)` and the infimum over `d` is
/// attained at `d = -k/y + y/2` with `y = Y(k, c)`. Returns `+inf` when the
/// quantile argument is not positive.
///
/// ```
/// use ivbounds::bounds::d1_objective;
/// use ivbounds::pricing::call_price;
///
/// let (k, y) = (0.2, 0.8);
/// let c = call_price(k, y).unwrap();
/// let h = d1_objective(-k / y + y / 2.0, k, c).unwrap();
/// assert!((h - y).abs() < 1e-9);
/// assert!(d1_objective(0.5, k, c).unwrap() >= y);
/// ```
pub fn d1_objective(d: f64, k: f64, c: f64) -> Result<f64> {
    let q = Quote::new(k, c)?;
    check_d(d)?;
    Ok(h1(d, q.k(), q.c()))
}

/// `H2(d; k, c) = q(c + e^k Phi(d)) - d`, minimised at `d = -k/y - y/2`.
pub fn d2_objective(d: f64, k: f64, c: f64) -> Result<f64> {
    let q = Quote::new(k, c)?;
    check_d(d)?;
    Ok(h2(d, q.k(), q.c()))
}

fn check_d(d: f64) -> Result<()> {
    if d.is_finite() {
        Ok(())
    } else {
        Err(Error::domain("objective point d must be finite", d))
    }
}

pub(crate) fn h1(d: f64, k: f64, c: f64) -> f64 {
    d - inv((-k).exp() * (cdf(d) - c))
}

pub(crate) fn h2(d: f64, k: f64, c: f64) -> f64 {
    inv(c + k.exp() * cdf(d)) - d
}

/// Upper bound `-2 q((1 - c) / (1 + e^k))`, accurate as `c -> 1`.
///
/// ```
/// use ivbounds::bounds::{long_dated_lower, long_dated_upper};
///
/// let hi = long_dated_upper(0.2, 0.5).unwrap();
/// let lo = long_dated_lower(0.2, 0.5).unwrap();
/// assert!((hi - 1.510_276_606_861_21).abs() < 1e-12);
/// assert!((lo - 1.348_979_500_392_163).abs() < 1e-12);
/// ```
pub fn long_dated_upper(k: f64, c: f64) -> Result<f64> {
    let (k, c, _) = reduce(k, c)?;
    Ok(long_upper(k, c))
}

/// Lower bound `-2 q((1 - c) / 2)` for `k >= 0`; for `k < 0` the same
/// formula is applied to the put-call image.
pub fn long_dated_lower(k: f64, c: f64) -> Result<f64> {
    let (_, c, _) = reduce(k, c)?;
    Ok(long_lower(c))
}

fn long_upper(k: f64, c: f64) -> f64 {
    -2.0 * inv((1.0 - c) / (1.0 + k.exp()))
}

fn long_lower(c: f64) -> f64 {
    (-2.0 * inv(0.5 * (1.0 - c))).max(0.0)
}

/// `L(k, c) = (2/k) (q(c / (1 + e^k))^2 + 2)`.
///
/// `1 - c L(k, c)` is a lower bound for the dual price, and `L` drives the
/// short-dated upper bound.
pub fn dual_price_factor(k: f64, c: f64) -> Result<f64> {
    if !(k > 0.0) || k.is_infinite() {
        return Err(Error::domain("dual price factor needs finite k > 0", k));
    }
    if !(c > 0.0 && c < 1.0) {
        return Err(Error::domain("dual price factor needs 0 < c < 1", c));
    }
    Ok(l_factor(k, c))
}

fn l_factor(k: f64, c: f64) -> f64 {
    let q = inv(c / (1.0 + k.exp()));
    2.0 / k * (q * q + 2.0)
}

/// Bracket that is tight as `c -> 0` at fixed `k != 0`.
///
/// Lower side `k / (-q(c / (1 + e^k)))`; upper side `k / (-q(c L / 2))` when
/// `c L(k, c) <= 1`, and `+inf` otherwise.
pub fn short_dated_bracket(k: f64, c: f64) -> Result<Bracket> {
    let (k, c, flipped) = reduce(k, c)?;
    if k == 0.0 {
        return Err(Error::domain("short-dated bounds need k != 0", k));
    }
    if !(c > 0.0) {
        return Err(Error::domain(
            "short-dated bounds need a price above intrinsic",
            c,
        ));
    }
    let (lower, upper) = short_pair(k, c);
    let p = provenance(BoundKind::ShortDated, flipped);
    Ok(Bracket {
        lower,
        upper,
        lower_from: p,
        upper_from: p,
    })
}

fn short_pair(k: f64, c: f64) -> (f64, f64) {
    let lower = positive_ratio(k, -inv(c / (1.0 + k.exp())));
    let cl = c * l_factor(k, c);
    let upper = if cl <= 1.0 {
        positive_ratio(k, -inv(0.5 * cl))
    } else {
        f64::INFINITY
    };
    (lower, upper)
}

// k / x for x >= 0, where x == 0 (including -0.0) means +inf.
fn positive_ratio(k: f64, x: f64) -> f64 {
    if x <= 0.0 {
        f64::INFINITY
    } else {
        k / x
    }
}

/// Bracket that is tight in the wings.
///
/// For `k >= 0` the lower side inverts `y -> -k/y + y/2` at `q(c)`, giving
/// `q(c) + sqrt(q(c)^2 + 2k)`; the upper side is `q(2c) - q(e^{-k} c)`,
/// which is `+inf` once `2c >= 1`.
///
/// ```
/// use ivbounds::bounds::wing_bracket;
///
/// let b = wing_bracket(2.0, 1e-6).unwrap();
/// assert!((b.lower - 0.403_613_858_546_861_2).abs() < 1e-12);
/// assert!(b.upper > b.lower);
/// ```
pub fn wing_bracket(k: f64, c: f64) -> Result<Bracket> {
    let (k, c, flipped) = reduce(k, c)?;
    let (lower, upper) = wing_pair(k, c);
    let p = provenance(BoundKind::Wing, flipped);
    Ok(Bracket {
        lower,
        upper,
        lower_from: p,
        upper_from: p,
    })
}

fn wing_pair(k: f64, c: f64) -> (f64, f64) {
    (
        wing_lower(k, c),
        nan_to_inf(inv(2.0 * c) - inv((-k).exp() * c)),
    )
}

pub(crate) fn wing_lower(k: f64, c: f64) -> f64 {
    let q = inv(c);
    if k == 0.0 {
        return (2.0 * q).max(0.0);
    }
    if q == f64::NEG_INFINITY {
        return 0.0;
    }
    let r = (q * q + 2.0 * k).sqrt();
    if q <= 0.0 {
        // q + r cancels; use the conjugate form
        2.0 * k / (r - q)
    } else {
        q + r
    }
}

/// Upper bound `q(c + e^k Phi(-sqrt(2k))) + sqrt(2k)`.
///
/// This is the `d2` objective at the convexity threshold. In the left wing it
/// tends to `sqrt(-2k) + q(u)` when `e^{-k} p(k) -> u`.
pub fn pivot_upper(k: f64, c: f64) -> Result<f64> {
    let (k, c, _) = reduce(k, c)?;
    Ok(pivot(k, c))
}

fn pivot(k: f64, c: f64) -> f64 {
    let s = (2.0 * k).sqrt();
    nan_to_inf(inv(c + k.exp() * cdf(-s)) + s)
}

/// Tightest bracket from every applicable bound.
///
/// At the intrinsic price the bracket is `[0, 0]`; at `k = 0` it collapses
/// to the closed form. Otherwise the lower side is the largest of the
/// long-dated, short-dated and wing lower bounds and the upper side the
/// smallest of all upper bounds.
///
/// ```
/// use ivbounds::bounds::best_bracket;
///
/// let b = best_bracket(0.2, 0.5).unwrap();
/// assert!(b.lower >= 1.3489 && b.upper <= 1.5103);
/// assert!(b.contains(1.496_958_134_273_82));
/// ```
pub fn best_bracket(k: f64, c: f64) -> Result<Bracket> {
    let (k, c, flipped) = reduce(k, c)?;
    Ok(bracket_reduced(k, c, flipped))
}

/// [`best_bracket`] for a quote already reduced to `k >= 0`.
pub(crate) fn bracket_reduced(k: f64, c: f64, flipped: bool) -> Bracket {
    let p = |kind| provenance(kind, flipped);
    if c <= 0.0 {
        let t = p(BoundKind::Trivial);
        return Bracket {
            lower: 0.0,
            upper: 0.0,
            lower_from: t,
            upper_from: t,
        };
    }
    if k == 0.0 {
        let y = long_lower(c);
        let t = p(BoundKind::ClosedForm);
        return Bracket {
            lower: y,
            upper: y,
            lower_from: t,
            upper_from: t,
        };
    }

    let (s_lo, s_hi) = short_pair(k, c);
    let (g_lo, g_hi) = wing_pair(k, c);
    let lowers = [
        (long_lower(c), BoundKind::LongDated),
        (s_lo, BoundKind::ShortDated),
        (g_lo, BoundKind::Wing),
    ];
    let uppers = [
        (long_upper(k, c), BoundKind::LongDated),
        (s_hi, BoundKind::ShortDated),
        (g_hi, BoundKind::Wing),
        (pivot(k, c), BoundKind::Pivot),
    ];
    let (mut lower, lo_kind) = lowers.into_iter().filter(|(v, _)| v.is_finite()).fold(
        (0.0, BoundKind::Trivial),
        |a, b| if b.0 > a.0 { b } else { a },
    );
    let (mut upper, mut hi_kind) =
        uppers
            .into_iter()
            .fold((f64::INFINITY, BoundKind::Heuristic), |a, b| {
                if b.0 < a.0 {
                    b
                } else {
                    a
                }
            });

    if !upper.is_finite() {
        upper = lower.max(1.0);
        while call(k, upper) < c {
            upper *= 2.0;
        }
        hi_kind = BoundKind::Heuristic;
    }
    // bounds that are tight to rounding can cross by an ulp
    if lower > upper {
        lower = upper;
    }
    Bracket {
        lower,
        upper,
        lower_from: p(lo_kind),
        upper_from: p(hi_kind),
    }
}

/// Which objective to use inside [`lower_via_controls`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    D1,
    D2,
}

impl Objective {
    fn eval(self, d: f64, k: f64, c: f64) -> f64 {
        match self {
            Objective::D1 => h1(d, k, c),
            Objective::D2 => h2(d, k, c),
        }
    }
}

/// A control function `D` sampled at increasing nodes in `[0, c]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Control {
    nodes: Vec<f64>,
    values: Vec<f64>,
}

impl Control {
    /// Samples must have equal, odd length of at least 3, with strictly
    /// increasing nodes.
    pub fn new(nodes: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if nodes.len() != values.len() || nodes.len() < 3 || nodes.len().is_multiple_of(2) {
            return Err(Error::InvalidParams(
                "control needs an odd number (>= 3) of nodes and matching values",
            ));
        }
        if nodes.windows(2).any(|w| !(w[0] < w[1])) || !(nodes[0] >= 0.0) {
            return Err(Error::InvalidParams(
                "control nodes must be increasing and >= 0",
            ));
        }
        Ok(Control { nodes, values })
    }

    /// Samples `f` at `n + 1` equally spaced nodes on `[from, to]`; `n` is
    /// rounded up to an even number.
    pub fn sample<F: Fn(f64) -> f64>(f: F, from: f64, to: f64, n: usize) -> Result<Self> {
        let n = (n.max(2) + 1) & !1;
        let nodes: Vec<f64> = (0..=n)
            .map(|i| from + (to - from) * i as f64 / n as f64)
            .collect();
        let values = nodes.iter().map(|&u| f(u)).collect();
        Control::new(nodes, values)
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }
}

/// Lower bound `2k / H_i(d; k, 1 - I)` with `I` a quadrature of
/// `2k / H_j(D(u); k, u)^2` over the control's nodes.
///
/// Because each `H_j` overestimates `Y`, any underestimate of `I` keeps the
/// bound valid. The integral is taken by the trapezoid rule, the difference
/// to the rule on every other node is subtracted as an error allowance, and
/// the parts of `[0, c]` outside the nodes are dropped. The allowance is an
/// estimate, so the result is a practical lower bound rather than a
/// certified one.
///
/// Fails with [`Error::DegenerateControl`] where an `H_j` value is not
/// positive or undefined.
pub fn lower_via_controls(
    k: f64,
    c: f64,
    control: &Control,
    d: f64,
    outer: Objective,
    inner: Objective,
) -> Result<f64> {
    if !(k > 0.0) || k.is_infinite() {
        return Err(Error::domain("control bounds need finite k > 0", k));
    }
    if !(c > 0.0 && c < 1.0) {
        return Err(Error::domain("control bounds need 0 < c < 1", c));
    }
    check_d(d)?;
    if *control.nodes.last().unwrap() > c {
        return Err(Error::InvalidParams("control nodes must lie in [0, c]"));
    }

    let mut g = Vec::with_capacity(control.nodes.len());
    for (&u, &dv) in control.nodes.iter().zip(&control.values) {
        let h = inner.eval(dv, k, u);
        if h == f64::INFINITY {
            g.push(0.0);
        } else if h > 0.0 {
            g.push(2.0 * k / (h * h));
        } else {
            return Err(Error::DegenerateControl { u, value: h });
        }
    }
    let x = &control.nodes;
    let fine: f64 = (1..x.len())
        .map(|i| 0.5 * (x[i] - x[i - 1]) * (g[i] + g[i - 1]))
        .sum();
    let coarse: f64 = (2..x.len())
        .step_by(2)
        .map(|i| 0.5 * (x[i] - x[i - 2]) * (g[i] + g[i - 2]))
        .sum();
    let integral = (fine - (fine - coarse).abs()).max(0.0);

    let dual = 1.0 - integral;
    if dual <= 0.0 {
        return Ok(0.0);
    }
    let h = outer.eval(d, k, dual.min(1.0));
    if h.is_nan() || h <= 0.0 {
        return Err(Error::DegenerateControl { u: c, value: h });
    }
    Ok(2.0 * k / h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pricing::call_price;

    // plain bisection on the price, independent of the library solver
    fn oracle_y(k: f64, c: f64) -> f64 {
        let (mut lo, mut hi) = (0.0, 50.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if call_price(k, mid).unwrap() < c {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn reference_values() {
        // mpmath at 30 digits
        assert!((long_dated_upper(0.2, 0.5).unwrap() - 1.510_276_606_861_21).abs() < 1e-12);
        assert!((long_dated_lower(0.2, 0.5).unwrap() - 1.348_979_500_392_163_5).abs() < 1e-12);
        assert!((dual_price_factor(0.2, 0.1).unwrap() - 48.737_796_755_564_65).abs() < 1e-10);
        let b = short_dated_bracket(0.2, 0.01).unwrap();
        assert!((b.lower - 0.076_571_787_706_187_57).abs() < 1e-13);
        let b = wing_bracket(2.0, 1e-6).unwrap();
        assert!((b.lower - 0.403_613_858_546_861_2).abs() < 1e-12);
    }

    #[test]
    fn k_zero_cases() {
        let y0 = oracle_y(0.0, 0.5);
        assert!((long_dated_upper(0.0, 0.5).unwrap() - y0).abs() < 1e-12);
        assert!((long_dated_lower(0.0, 0.5).unwrap() - y0).abs() < 1e-12);
        assert_eq!(wing_bracket(0.0, 0.5).unwrap().lower, 0.0);
        let c: f64 = 0.3;
        assert!((pivot_upper(0.0, c).unwrap() - inv(c + 0.5)).abs() < 1e-15);
        let b = best_bracket(0.0, 0.5).unwrap();
        assert_eq!(b.lower, b.upper);
        assert_eq!(b.lower_from.kind, BoundKind::ClosedForm);
        assert!(short_dated_bracket(0.0, 0.5).is_err());
    }

    #[test]
    fn negative_k_formulas_match_direct_forms() {
        for &(k, c) in &[(-0.2f64, 0.3f64), (-1.0, 0.7), (-3.0, 0.96)] {
            let p = c + k.exp_m1();
            let lo = long_dated_lower(k, c).unwrap();
            assert!((lo + 2.0 * inv((1.0 - c) / (2.0 * k.exp()))).abs() < 1e-12);
            let hi = long_dated_upper(k, c).unwrap();
            assert!((hi + 2.0 * inv((1.0 - c) / (1.0 + k.exp()))).abs() < 1e-12);
            let w = wing_bracket(k, c).unwrap();
            let qp = inv((-k).exp() * p);
            assert!((w.lower - (qp + (qp * qp - 2.0 * k).sqrt())).abs() < 1e-12);
            let up = inv(2.0 * (-k).exp() * p) - inv(p);
            assert!(w.upper == up || (w.upper - up).abs() < 1e-12);
            let s = (-2.0 * k).sqrt();
            let pivot_direct = inv((-k).exp() * p + (-k).exp() * cdf(-s)) + s;
            assert!((pivot_upper(k, c).unwrap() - pivot_direct).abs() < 1e-12);
            assert!(w.lower_from.via_put_call);
        }
    }

    #[test]
    fn objectives_are_minimised_at_the_critical_points() {
        for &(k, y) in &[(0.2, 0.5), (1.0, 1.3), (-0.5, 0.9), (0.05, 2.0)] {
            let c = call_price(k, y).unwrap();
            let d1 = -k / y + 0.5 * y;
            let d2 = -k / y - 0.5 * y;
            let at1 = d1_objective(d1, k, c).unwrap();
            let at2 = d2_objective(d2, k, c).unwrap();
            assert!((at1 - y).abs() < 1e-9, "{at1} vs {y}");
            assert!((at2 - y).abs() < 1e-9, "{at2} vs {y}");
            for delta in [-0.5, -0.1, 0.1, 0.5] {
                assert!(d1_objective(d1 + delta, k, c).unwrap() >= at1);
                assert!(d2_objective(d2 + delta, k, c).unwrap() >= at2);
            }
        }
    }

    #[test]
    fn objectives_are_put_call_consistent() {
        for &(k, c) in &[(0.2, 0.3), (-0.4, 0.5), (1.5, 0.05)] {
            let img = Quote::new(k, c).unwrap().put_call_image();
            for d in [-1.0, 0.0, 0.7, 2.0] {
                let a = d1_objective(d, k, c).unwrap();
                let b = d2_objective(-d, img.k(), img.c()).unwrap();
                assert!(a == b || (a - b).abs() < 1e-12, "{a} {b}");
            }
        }
    }

    #[test]
    fn d2_objective_reproduces_named_bounds() {
        let (k, c) = (0.2f64, 0.5);
        let d = inv((1.0 - c) / (1.0 + k.exp()));
        assert!((d2_objective(d, k, c).unwrap() - long_dated_upper(k, c).unwrap()).abs() < 1e-14);
        let d = -(2.0 * k).sqrt();
        assert!((d2_objective(d, k, c).unwrap() - pivot_upper(k, c).unwrap()).abs() < 1e-14);
    }

    #[test]
    fn short_dated_upper_needs_small_l() {
        // c L(k, c) > 1 here
        let b = short_dated_bracket(0.2, 0.5).unwrap();
        assert_eq!(b.upper, f64::INFINITY);
        let b = short_dated_bracket(0.2, 1e-4).unwrap();
        assert!(b.upper.is_finite());
    }

    #[test]
    fn brackets_contain_oracle_values() {
        for &k in &[-3.0, -0.2, 0.05, 0.2, 1.0, 3.0] {
            for &y in &[0.05, 0.3, 1.0, 2.5] {
                let c = call_price(k, y).unwrap();
                let b = best_bracket(k, c).unwrap();
                let yo = oracle_y(k, c);
                assert!(
                    b.lower <= yo + 1e-9 && yo <= b.upper + 1e-9,
                    "k={k} y={y} {b:?}"
                );
            }
        }
    }

    #[test]
    fn intrinsic_price_gives_zero_bracket() {
        let b = best_bracket(0.3, 0.0).unwrap();
        assert_eq!((b.lower, b.upper), (0.0, 0.0));
        let b = best_bracket(-0.3, -(-0.3f64).exp_m1()).unwrap();
        assert_eq!((b.lower, b.upper), (0.0, 0.0));
    }

    #[test]
    fn control_validation() {
        assert!(Control::new(vec![0.0, 0.1], vec![0.0, 0.0]).is_err());
        assert!(Control::new(vec![0.0, 0.2, 0.1], vec![0.0; 3]).is_err());
        let ctl = Control::sample(|_| 0.0, 0.0, 0.1, 5).unwrap();
        assert_eq!(ctl.nodes().len(), 7);
        assert!(lower_via_controls(0.2, 0.05, &ctl, 0.0, Objective::D1, Objective::D1).is_err());
    }

    #[test]
    fn crude_control_gives_lower_bound() {
        let (k, c) = (0.2, 0.3);
        let y = oracle_y(k, c);
        let ctl = Control::sample(|_| -0.5, 0.0, c, 200).unwrap();
        for (i, j) in [
            (Objective::D1, Objective::D1),
            (Objective::D2, Objective::D2),
            (Objective::D1, Objective::D2),
        ] {
            let lb = lower_via_controls(k, c, &ctl, 0.0, i, j).unwrap();
            assert!(lb > 0.0 && lb <= y, "{lb} vs {y}");
        }
    }
}
