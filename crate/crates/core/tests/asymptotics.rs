//! Rates at which the asymptotic formulas are approached.
//!
//! The error terms are only known up to constants, so each test records the
//! normalised errors and asserts that none exceeds ten times their median.

use ivbounds::asymptotics::{fixed_u, price_to_one, price_to_zero, wing};
use ivbounds::models::{JumpToDefault, VarianceGamma};
use ivbounds::solver::{implied_y, SolverConfig};

fn solve(k: f64, c: f64) -> f64 {
    implied_y(k, c, &SolverConfig::default()).unwrap().y
}

fn bounded(name: &str, ratios: &[f64]) {
    let mut sorted = ratios.to_vec();
    sorted.sort_by(f64::total_cmp);
    let median = sorted[sorted.len() / 2];
    let max = *sorted.last().unwrap();
    println!("{name}: median {median:.4}, max {max:.4}");
    assert!(max <= 10.0 * median, "{name}: {ratios:?}");
}

#[test]
fn price_to_one_rate() {
    let k = 0.2;
    let ratios: Vec<f64> = (2..=12)
        .map(|m| {
            let c = 1.0 - 10f64.powi(-m);
            let l = -(1.0 - c).ln();
            (solve(k, c) - price_to_one(c).unwrap()).abs() * l.sqrt() / l.ln()
        })
        .collect();
    bounded("price to one", &ratios);
}

#[test]
fn price_to_zero_rate() {
    let k = 0.2;
    let ratios: Vec<f64> = (2..=60)
        .step_by(2)
        .map(|m| {
            let c = 10f64.powi(-m);
            let l = -c.ln();
            (solve(k, c) - price_to_zero(k, c).unwrap()).abs() * l.powf(1.5) / l.ln()
        })
        .collect();
    bounded("price to zero", &ratios);
}

#[test]
fn variance_gamma_wing_rate() {
    let vg = VarianceGamma::reference();
    let ratios: Vec<f64> = (1..=16)
        .map(|i| {
            let k = 0.25 * i as f64;
            let c = vg.call(k);
            let l = -c.ln();
            (solve(k, c) - wing(k, c).unwrap()).abs() * l.sqrt() / l.ln()
        })
        .collect();
    bounded("variance gamma wing", &ratios);
}

#[test]
fn jump_to_default_fixed_u_rate() {
    let m = JumpToDefault::reference();
    let u = m.default_probability();
    let mut ratios = Vec::new();
    for i in 1..=40 {
        let k = -(i as f64);
        let reduced = m.reduced_put(k);
        let y = solve(-k, reduced);
        let eps = reduced - u;
        let err = (y - fixed_u(k, u).unwrap()).abs();
        ratios.push(err / ((-k).powf(-0.5) + eps));
    }
    bounded("jump to default", &ratios);
    // the error itself shrinks
    let y = solve(40.0, m.reduced_put(-40.0));
    let e40 = (y - fixed_u(-40.0, u).unwrap()).abs();
    let y4 = solve(4.0, m.reduced_put(-4.0));
    let e4 = (y4 - fixed_u(-4.0, u).unwrap()).abs();
    println!("errors: {e4} at k = -4, {e40} at k = -40");
    assert!(e40 < e4);
}
