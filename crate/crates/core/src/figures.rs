//! Data behind the six comparison figures, as numeric tables.
//!
//! | name       | columns                                   |
//! |------------|-------------------------------------------|
//! | `chat`     | `c, c_hat` at `k = 0.2`                   |
//! | `long`     | `c, y_upper, y_true, y_lower, y_asym`     |
//! | `short`    | `c, y_upper, y_true, y_lower, y_asym`     |
//! | `wing-vg`  | `k, y_upper, y_true, y_lower, y_asym`     |
//! | `left-jtd` | `k, y_upper, y_true, y_lower, y_asym`     |
//! | `cobweb`   | `n, y_n, F(y_n)`                          |
//!
//! Grids:
//!
//! - `chat`: `c_i = i / (N + 1)`, so `c = 0.5` is a row when `N` is odd.
//! - `long`: `c` in `[0.01, 0.999]`, log-spaced in `1 - c`.
//! - `short`: `c` in `[1e-12, 0.5]`, log-spaced.
//! - `wing-vg`: `k` in `[0, 2.5]` under the reference variance gamma model.
//! - `left-jtd`: `k` in `[-3.5, 0]` under the reference jump-to-default model.
//! - `cobweb`: fixed-point iterates at `k = 0.2`, `c = 0.3` from `y0 = 0.4`.

use std::fmt;
use std::str::FromStr;

use crate::asymptotics;
use crate::bounds::{
    long_dated_lower, long_dated_upper, pivot_upper, short_dated_bracket, wing_bracket,
};
use crate::error::Result;
use crate::models::{JumpToDefault, VarianceGamma};
use crate::solver::{fixed_point, fixed_point_map, implied_y, SolverConfig};
use crate::symmetry::dual_price;

/// Log-moneyness used by the `chat`, `long`, `short` and `cobweb` figures.
pub const FIGURE_K: f64 = 0.2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureName {
    Chat,
    Long,
    Short,
    WingVg,
    LeftJtd,
    Cobweb,
}

impl FigureName {
    pub const ALL: [FigureName; 6] = [
        FigureName::Chat,
        FigureName::Long,
        FigureName::Short,
        FigureName::WingVg,
        FigureName::LeftJtd,
        FigureName::Cobweb,
    ];

    pub fn columns(self) -> &'static [&'static str] {
        match self {
            FigureName::Chat => &["c", "c_hat"],
            FigureName::Long | FigureName::Short => {
                &["c", "y_upper", "y_true", "y_lower", "y_asym"]
            }
            FigureName::WingVg | FigureName::LeftJtd => {
                &["k", "y_upper", "y_true", "y_lower", "y_asym"]
            }
            FigureName::Cobweb => &["n", "y_n", "F(y_n)"],
        }
    }
}

impl fmt::Display for FigureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FigureName::Chat => "chat",
            FigureName::Long => "long",
            FigureName::Short => "short",
            FigureName::WingVg => "wing-vg",
            FigureName::LeftJtd => "left-jtd",
            FigureName::Cobweb => "cobweb",
        })
    }
}

impl FromStr for FigureName {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        FigureName::ALL
            .into_iter()
            .find(|n| n.to_string() == s)
            .ok_or_else(|| {
                format!("unknown figure `{s}` (chat, long, short, wing-vg, left-jtd, cobweb)")
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FigureSpec {
    pub name: FigureName,
    /// Grid points; ignored by `cobweb`, whose rows are the iterates.
    pub points: usize,
}

impl FigureSpec {
    pub fn new(name: FigureName) -> Self {
        let points = if name == FigureName::Chat { 199 } else { 200 };
        FigureSpec { name, points }
    }
}

/// A header plus rows of numbers.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    /// Values of the named column.
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.columns.iter().position(|c| *c == name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }
}

/// Builds the table for a figure.
///
/// ```
/// use ivbounds::figures::{generate, FigureName, FigureSpec};
///
/// let t = generate(&FigureSpec { name: FigureName::Long, points: 5 }).unwrap();
/// for row in &t.rows {
///     assert!(row[1] >= row[2] && row[2] >= row[3]);
/// }
/// ```
pub fn generate(spec: &FigureSpec) -> Result<Table> {
    let n = spec.points.max(2);
    let rows = match spec.name {
        FigureName::Chat => chat(n)?,
        FigureName::Long => long(n)?,
        FigureName::Short => short(n)?,
        FigureName::WingVg => wing_vg(n)?,
        FigureName::LeftJtd => left_jtd(n)?,
        FigureName::Cobweb => cobweb()?,
    };
    Ok(Table {
        columns: spec.name.columns().to_vec(),
        rows,
    })
}

fn solve(k: f64, c: f64) -> Result<f64> {
    Ok(implied_y(k, c, &SolverConfig::default())?.y)
}

fn linspace(a: f64, b: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| a + (b - a) * i as f64 / (n - 1) as f64)
}

fn logspace(a: f64, b: f64, n: usize) -> impl Iterator<Item = f64> {
    let (la, lb) = (a.ln(), b.ln());
    (0..n).map(move |i| (la + (lb - la) * i as f64 / (n - 1) as f64).exp())
}

fn chat(n: usize) -> Result<Vec<Vec<f64>>> {
    (1..=n)
        .map(|i| {
            let c = i as f64 / (n + 1) as f64;
            Ok(vec![c, dual_price(FIGURE_K, c)?])
        })
        .collect()
}

fn long(n: usize) -> Result<Vec<Vec<f64>>> {
    let k = FIGURE_K;
    logspace(0.99, 0.001, n)
        .map(|one_minus| {
            let c = 1.0 - one_minus;
            Ok(vec![
                c,
                long_dated_upper(k, c)?,
                solve(k, c)?,
                long_dated_lower(k, c)?,
                asymptotics::price_to_one(c)?,
            ])
        })
        .collect()
}

fn short(n: usize) -> Result<Vec<Vec<f64>>> {
    let k = FIGURE_K;
    logspace(1e-12, 0.5, n)
        .map(|c| {
            let b = short_dated_bracket(k, c)?;
            Ok(vec![
                c,
                b.upper,
                solve(k, c)?,
                b.lower,
                asymptotics::price_to_zero(k, c)?,
            ])
        })
        .collect()
}

fn wing_vg(n: usize) -> Result<Vec<Vec<f64>>> {
    let vg = VarianceGamma::reference();
    linspace(0.0, 2.5, n)
        .map(|k| {
            let c = vg.call(k);
            let b = wing_bracket(k, c)?;
            Ok(vec![
                k,
                b.upper,
                solve(k, c)?,
                b.lower,
                asymptotics::wing(k, c)?,
            ])
        })
        .collect()
}

// Works with the reduced put price so that deep in-the-money calls keep
// their digits.
fn left_jtd(n: usize) -> Result<Vec<Vec<f64>>> {
    let m = JumpToDefault::reference();
    let u = m.default_probability();
    linspace(-3.5, 0.0, n)
        .map(|k| {
            let (kr, cr) = (-k, m.reduced_put(k));
            let y = solve(kr, cr)?;
            Ok(vec![
                k,
                pivot_upper(kr, cr)?,
                y,
                wing_bracket(kr, cr)?.lower,
                asymptotics::fixed_u(k, u)?,
            ])
        })
        .collect()
}

/// Start of the cobweb iteration.
pub const COBWEB_START: f64 = 0.4;
/// Price used by the cobweb iteration.
pub const COBWEB_PRICE: f64 = 0.3;

fn cobweb() -> Result<Vec<Vec<f64>>> {
    let (k, c) = (FIGURE_K, COBWEB_PRICE);
    let r = fixed_point(k, c, COBWEB_START, &SolverConfig::default())?;
    r.trace
        .iter()
        .enumerate()
        .map(|(i, &y)| Ok(vec![i as f64, y, fixed_point_map(k, c, y)?]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for n in FigureName::ALL {
            assert_eq!(n.to_string().parse::<FigureName>().unwrap(), n);
        }
        assert!("fig7".parse::<FigureName>().is_err());
    }

    #[test]
    fn chat_grid_contains_half() {
        let t = generate(&FigureSpec::new(FigureName::Chat)).unwrap();
        let row = t.rows.iter().find(|r| r[0] == 0.5).unwrap();
        assert_eq!(row[1], dual_price(0.2, 0.5).unwrap());
    }

    #[test]
    fn cobweb_is_consistent() {
        let t = generate(&FigureSpec::new(FigureName::Cobweb)).unwrap();
        assert_eq!(t.rows[0][1], COBWEB_START);
        for w in t.rows.windows(2) {
            assert_eq!(w[0][2], w[1][1]);
        }
    }
}
