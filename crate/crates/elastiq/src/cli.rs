//! Command-line front end: argument parsing, scenario orchestration and CSV emission.

use crate::analytic::{stoneley_mode, stoneley_phase_velocity, StoneleyMode, StoneleyParams};
use crate::config::{Scenario, ScenarioConfig};
use crate::diagnostics::{convergence_rates, dominance, eigen_extremes, restriction_interpolation, stencil_factor};
use crate::error::{Error, Result};
use crate::interp::{build_op_pair, min_coarse_nodes};
use crate::material::Lame;
use crate::output::{dense_csv, Cell, Table};
use crate::sbp_core::{make_norm, FirstDeriv, GhostEnds, Order, SecondDeriv};
use crate::scenario::{self, BlockSizes, ErrorRun};
use clap::{Parser, Subcommand};
use std::path::{Path, PathBuf};

#[derive(Debug, Parser)]
#[command(name = "elastiq", version, about = "2D elastic waves on a two-block grid with a 1:2 interface")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a scenario: manufactured, stoneley, energy, spectrum or dispersion.
    Run(RunArgs),
    /// Print an operator as a dense CSV matrix.
    DumpOperator {
        /// d1-4, d1-6, d2-4, d2-6, d2ghost-4, d2ghost-6, norm-4, norm-6, p-q2, p-q3, r-q2, r-q3
        name: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, clap::Args)]
pub struct RunArgs {
    pub scenario: String,
    /// Flat `key = value` file; command-line flags override it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub order: Option<String>,
    /// Comma-separated coarse node counts.
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long = "T")]
    pub t: Option<String>,
    #[arg(long)]
    pub cfl: Option<String>,
    /// Tabulated row `r1`..`r4` or an explicit shear modulus.
    #[arg(long)]
    pub mu: Option<String>,
    #[arg(long)]
    pub seed: Option<String>,
    #[arg(long)]
    pub out: Option<String>,
}

impl RunArgs {
    pub fn to_config(&self) -> Result<ScenarioConfig> {
        let scenario: Scenario = self.scenario.parse()?;
        let mut cfg = match &self.config {
            Some(p) => {
                let text = std::fs::read_to_string(p).map_err(|e| Error::config("config", format!("{}: {e}", p.display())))?;
                let mut c = ScenarioConfig::parse(&format!("scenario = {}\n{text}", scenario.name()))?;
                if c.scenario != scenario {
                    return Err(Error::config("scenario", "file and command line disagree"));
                }
                c.scenario = scenario;
                c
            }
            None => ScenarioConfig::new(scenario),
        };
        let overrides = [
            ("order", &self.order),
            ("n", &self.n),
            ("T", &self.t),
            ("cfl", &self.cfl),
            ("mu", &self.mu),
            ("seed", &self.seed),
            ("out", &self.out),
        ];
        for (k, v) in overrides {
            if let Some(v) = v {
                cfg.set(k, v)?;
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Entry point shared by the binary; returns the process exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let res = match cli.command {
        Command::Run(a) => a.to_config().and_then(|c| run_scenario(&c)),
        Command::DumpOperator { name, n } => dump_operator(&name, n).map(|s| print!("{s}")),
    };
    match res {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Dense CSV of a named operator.
pub fn dump_operator(name: &str, n: usize) -> Result<String> {
    let (kind, tag) = name.split_once('-').ok_or_else(|| Error::config("name", format!("unknown operator `{name}`")))?;
    let rows = match (kind, tag) {
        ("p" | "r", q) => {
            let q = match q {
                "q2" => 2,
                "q3" => 3,
                _ => return Err(Error::config("name", format!("unknown interpolation `{q}`"))),
            };
            let pair = build_op_pair(q, n)?;
            if kind == "p" { pair.p.to_dense() } else { pair.r.to_dense() }
        }
        (_, p) => {
            let order = p
                .parse::<u32>()
                .ok()
                .and_then(|p| Order::from_int(p).ok())
                .ok_or_else(|| Error::config("name", format!("unknown order in `{name}`")))?;
            if n < order.min_nodes() {
                return Err(Error::GridTooSmall { n, min: order.min_nodes() });
            }
            let h = 1.0 / (n - 1) as f64;
            let ones = vec![1.0; n];
            match kind {
                "d1" => FirstDeriv::new(order, n, h)?.stencils().to_dense(),
                "d2" => SecondDeriv::new(order, &ones, h, GhostEnds::NONE)?.stencils().to_dense(),
                "d2ghost" => SecondDeriv::new(order, &ones, h, GhostEnds::BOTH)?.stencils().to_dense(),
                "norm" => {
                    let w = make_norm(order, n)?;
                    (0..n).map(|i| (0..n).map(|j| if i == j { h * w.weights[i] } else { 0.0 }).collect()).collect()
                }
                _ => return Err(Error::config("name", format!("unknown operator `{name}`"))),
            }
        }
    };
    Ok(dense_csv(&rows))
}

fn progress(msg: &str) {
    eprintln!("[elastiq] {msg}");
}

pub fn run_scenario(cfg: &ScenarioConfig) -> Result<()> {
    cfg.validate()?;
    std::fs::create_dir_all(&cfg.out).map_err(|e| Error::config("out", format!("{}: {e}", cfg.out.display())))?;
    match cfg.scenario {
        Scenario::Manufactured => run_manufactured(cfg),
        Scenario::Stoneley => run_stoneley(cfg),
        Scenario::Energy => run_energy(cfg),
        Scenario::Spectrum => run_spectrum(cfg),
        Scenario::Dispersion => run_dispersion(&cfg.out),
    }
}

fn convergence_table(runs: &[ErrorRun]) -> Table {
    let mut t = Table::new(&["n", "error", "rate", "error_reference", "rate_reference"]);
    let phys: Vec<(usize, f64)> = runs.iter().map(|r| (r.n, r.final_error)).collect();
    let refr: Vec<(usize, f64)> = runs.iter().map(|r| (r.n, r.final_error_reference)).collect();
    for (a, b) in convergence_rates(&phys).into_iter().zip(convergence_rates(&refr)) {
        t.push(vec![a.n.into(), a.error.into(), a.rate.into(), b.error.into(), b.rate.into()]);
    }
    t
}

fn run_manufactured(cfg: &ScenarioConfig) -> Result<()> {
    let t_final = cfg.t_final.unwrap_or(1.0);
    let mut runs = Vec::new();
    for &n in &cfg.n {
        progress(&format!("manufactured order {} n {n}", cfg.order.as_int()));
        let r = scenario::manufactured_run(cfg.order, n, t_final, cfg.cfl)?;
        progress(&format!("  {} steps, error {:.4e} (reference norm {:.4e})", r.steps, r.final_error, r.final_error_reference));
        runs.push(r);
    }
    convergence_table(&runs).write(&cfg.out.join("manufactured_convergence.csv"))
}

fn mode_table(modes: &[StoneleyMode]) -> Table {
    let mut t = Table::new(&[
        "mu", "c_s", "period", "residual", "a_upper_re", "a_upper_im", "b_upper_re", "b_upper_im", "a_lower_re",
        "a_lower_im", "b_lower_re", "b_lower_im",
    ]);
    for m in modes {
        let mut row: Vec<Cell> = vec![m.params.upper.mu.into(), m.phase_velocity.into(), m.period().into(), m.residual.into()];
        for a in m.amplitudes {
            row.push(a.re.into());
            row.push(a.im.into());
        }
        t.push(row);
    }
    t
}

fn run_stoneley(cfg: &ScenarioConfig) -> Result<()> {
    let mode = scenario::stoneley_setup(cfg.mu.value())?;
    progress(&format!("stoneley mu {} c_s {:.15}", mode.params.upper.mu, mode.phase_velocity));
    mode_table(&[mode]).write(&cfg.out.join("stoneley_mode.csv"))?;
    let mut runs = Vec::new();
    let mut hist = Table::new(&["n", "t", "error", "cumulative", "error_reference"]);
    for &n in &cfg.n {
        progress(&format!("stoneley order {} n {n}", cfg.order.as_int()));
        let r = scenario::stoneley_run(cfg.order, n, &mode, cfg.t_final, cfg.cfl, 100)?;
        progress(&format!("  {} steps, error {:.4e} (reference norm {:.4e})", r.steps, r.final_error, r.final_error_reference));
        let mut cum = 0.0;
        let mut last_t = 0.0;
        for &(t, e, er) in &r.history {
            cum += e * e * (t - last_t);
            last_t = t;
            hist.push(vec![n.into(), t.into(), e.into(), cum.sqrt().into(), er.into()]);
        }
        runs.push(r);
    }
    hist.write(&cfg.out.join("stoneley_error_history.csv"))?;
    convergence_table(&runs).write(&cfg.out.join("stoneley_convergence.csv"))
}

fn run_energy(cfg: &ScenarioConfig) -> Result<()> {
    let t_final = cfg.t_final.unwrap_or(100.0);
    let mut t = Table::new(&["n", "step", "t", "E", "drift"]);
    for &n in &cfg.n {
        progress(&format!("energy order {} n {n} seed {}", cfg.order.as_int(), cfg.seed));
        let r = scenario::energy_run(cfg.order, n, t_final, cfg.cfl, cfg.seed, 10)?;
        progress(&format!("  max drift {:.3e}", r.max_drift));
        let e0 = r.history[0].2;
        for &(s, time, e) in &r.history {
            t.push(vec![n.into(), s.into(), time.into(), e.into(), ((e - e0) / e0).into()]);
        }
    }
    t.write(&cfg.out.join("energy_drift.csv"))
}

/// Two stacked unit-material rectangles with the interface matrix small
/// enough for a dense eigensolve.
pub fn spectrum_discretization(q: usize, n: usize) -> Result<crate::discretization::Discretization> {
    let order = if q == 2 { Order::Four } else { Order::Six };
    let n2 = 13;
    let sizes = BlockSizes { coarse: (n, n2), fine: (2 * n - 1, 2 * n2 - 1) };
    let unit = Lame { rho: 1.0, mu: 1.0, lambda: 1.0 };
    scenario::cartesian_discretization(order, sizes, 1.0, 1.0, 0.5, unit, unit)
}

fn run_spectrum(cfg: &ScenarioConfig) -> Result<()> {
    let mut t = Table::new(&["q", "n", "matrix", "min_row_margin", "min_col_margin", "lambda_min", "lambda_max", "max_imag"]);
    let min = |v: &[f64]| v.iter().copied().fold(f64::INFINITY, f64::min);
    for q in [2usize, 3] {
        for &n in &cfg.n {
            if n < min_coarse_nodes(q) {
                continue;
            }
            progress(&format!("spectrum q {q} n {n}"));
            let d = spectrum_discretization(q, n)?;
            for (name, m) in [("assembled_interior", stencil_factor(&d)), ("restriction_interpolation", restriction_interpolation(q, n)?)] {
                let dom = dominance(&m);
                let (lo, hi, im) = eigen_extremes(&m, 1281)?;
                t.push(vec![
                    q.into(),
                    n.into(),
                    name.into(),
                    min(&dom.rows).into(),
                    min(&dom.cols).into(),
                    lo.into(),
                    hi.into(),
                    im.into(),
                ]);
            }
        }
    }
    t.write(&cfg.out.join("spectrum.csv"))
}

fn run_dispersion(out: &Path) -> Result<()> {
    let mut modes = Vec::new();
    for mu in StoneleyParams::table_mus() {
        let p = StoneleyParams::table_row(mu);
        let c = stoneley_phase_velocity(&p)?;
        progress(&format!("mu {mu} c_s {c:.15}"));
        modes.push(stoneley_mode(&p, c)?);
    }
    mode_table(&modes).write(&out.join("dispersion.csv"))
}
