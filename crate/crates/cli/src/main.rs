use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ivbounds::asymptotics::Regime;
use ivbounds::bounds::{
    best_bracket, long_dated_lower, long_dated_upper, pivot_upper, short_dated_bracket,
    wing_bracket, Bracket,
};
use ivbounds::figures::{generate, FigureName, FigureSpec};
use ivbounds::{call_price, implied_y, Error, Method, SolverConfig};

const FIGURE_HELP: &str = "\
Writes one figure's data as CSV (header row, numbers as {:.16e}, LF endings).

Grids, with N = --grid-points:
  chat      c_i = i / (N + 1), i = 1..N, at k = 0.2; the default N = 199 puts c = 0.5 on the grid
  long      c with 1 - c log-spaced from 0.99 down to 0.001, at k = 0.2
  short     c log-spaced from 1e-12 to 0.5, at k = 0.2
  wing-vg   k evenly spaced on [0, 2.5], variance gamma with sigma 0.1213, nu 0.1686, theta -0.1436, T 5
  left-jtd  k evenly spaced on [-3.5, 0], jump to default with sigma 0.6, lambda 0.05, T 4;
            bounds and solves use the reduced put price at -k
  cobweb    fixed-point iterates at k = 0.2, c = 0.3 from y0 = 0.4; N is ignored

Defaults: N = 199 for chat and 200 otherwise.";

#[derive(Parser)]
#[command(
    name = "ivbounds",
    version,
    about = "Implied total standard deviation: prices, bounds and inversion"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normalised call price C(k, y).
    Price {
        #[arg(long, allow_hyphen_values = true)]
        k: f64,
        #[arg(long, allow_hyphen_values = true)]
        y: f64,
    },
    /// Implied total standard deviation Y(k, c).
    Invert {
        #[arg(long, allow_hyphen_values = true)]
        k: f64,
        #[arg(long, allow_hyphen_values = true)]
        c: f64,
        /// bisection, newton or fixed-point
        #[arg(long, default_value = "bisection")]
        method: Method,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, default_value_t = 1000)]
        max_iter: usize,
    },
    /// Best bracket and the individual bounds at (k, c).
    Bounds {
        #[arg(long, allow_hyphen_values = true)]
        k: f64,
        #[arg(long, allow_hyphen_values = true)]
        c: f64,
    },
    /// Asymptotic formulas at (k, c); the fixed-u regimes need --u.
    Asym {
        #[arg(long, allow_hyphen_values = true)]
        k: f64,
        #[arg(long, allow_hyphen_values = true)]
        c: f64,
        #[arg(long, allow_hyphen_values = true)]
        u: Option<f64>,
    },
    #[command(about = "Writes one figure's data as CSV", long_about = FIGURE_HELP)]
    Figure {
        #[arg(long)]
        name: FigureName,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        grid_points: Option<usize>,
    },
}

enum Failure {
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    match run(cli.command, &mut stdout.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_domain() { 2 } else { 3 })
        }
        // `ivbounds ... | head` is not a failure
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(4)
        }
    }
}

fn describe(b: &Bracket) -> String {
    format!(
        "[{}, {}] (lower: {}, upper: {})",
        b.lower, b.upper, b.lower_from, b.upper_from
    )
}

fn show<T: std::fmt::Display>(r: ivbounds::Result<T>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("n/a ({e})"),
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<(), Failure> {
    match command {
        Command::Price { k, y } => writeln!(out, "{}", call_price(k, y)?)?,
        Command::Invert {
            k,
            c,
            method,
            tol,
            max_iter,
        } => {
            let config = SolverConfig {
                method,
                tolerance: tol,
                max_iterations: max_iter,
                record_trace: method == Method::FixedPoint,
                ..SolverConfig::default()
            };
            let r = implied_y(k, c, &config)?;
            writeln!(out, "y = {}", r.y)?;
            writeln!(out, "method = {}", r.method)?;
            writeln!(out, "iterations = {}", r.iterations)?;
            writeln!(out, "residual = {:e}", r.residual)?;
            writeln!(out, "bracket = {}", describe(&r.bracket))?;
            for (n, y) in r.trace.iter().enumerate() {
                writeln!(out, "trace {n} {y}")?;
            }
        }
        Command::Bounds { k, c } => {
            writeln!(out, "best = {}", describe(&best_bracket(k, c)?))?;
            writeln!(out, "long-dated lower = {}", show(long_dated_lower(k, c)))?;
            writeln!(out, "long-dated upper = {}", show(long_dated_upper(k, c)))?;
            writeln!(
                out,
                "short-dated = {}",
                show(short_dated_bracket(k, c).map(|b| describe(&b)))
            )?;
            writeln!(
                out,
                "wing = {}",
                show(wing_bracket(k, c).map(|b| describe(&b)))
            )?;
            writeln!(out, "pivot upper = {}", show(pivot_upper(k, c)))?;
        }
        Command::Asym { k, c, u } => {
            for regime in Regime::ALL {
                let fixed = matches!(regime, Regime::FixedULeft | Regime::FixedURight);
                let line = match (fixed, u) {
                    (true, None) => "n/a (needs --u)".to_string(),
                    (true, Some(u)) => show(regime.evaluate(k, u)),
                    (false, _) => show(regime.evaluate(k, c)),
                };
                writeln!(out, "{regime} = {line}")?;
            }
        }
        Command::Figure {
            name,
            out: path,
            grid_points,
        } => {
            let mut spec = FigureSpec::new(name);
            if let Some(n) = grid_points {
                spec.points = n;
            }
            let table = generate(&spec)?;
            let sink: Box<dyn Write> = match path {
                Some(p) => Box::new(File::create(p)?),
                None => Box::new(out),
            };
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(sink);
            w.write_record(&table.columns)?;
            for row in &table.rows {
                w.write_record(row.iter().map(|x| format!("{x:.16e}")))?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
