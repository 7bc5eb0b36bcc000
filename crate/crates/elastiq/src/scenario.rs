//! Builders for the shipped test problems and their run drivers.

use crate::analytic::{stoneley_field, stoneley_mode, stoneley_phase_velocity, Manufactured, StoneleyMode, StoneleyParams, StoneleyProblem};
use crate::diagnostics::{discrete_energy, l2_error, l2_error_reference};
use crate::discretization::{BlockOps, Discretization};
use crate::error::Result;
use crate::grid::{BlockGrid, Mapping, ReferenceGrid, Side};
use crate::material::{Lame, MaterialField};
use crate::sbp_core::Order;
use crate::timestepper::{compute_dt_approx, uniform_steps, Field, Homogeneous, Problem, Stepper};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

/// Node counts `(n1, n2)` of the coarse and fine blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockSizes {
    pub coarse: (usize, usize),
    pub fine: (usize, usize),
}

impl BlockSizes {
    /// Curved-topography layout: the fine block has twice the coarse
    /// resolution in both directions and half its height in nodes.
    pub fn topography(n: usize) -> Self {
        BlockSizes { coarse: (n, n.div_ceil(2)), fine: (2 * n - 1, n) }
    }

    /// Square layout of the interface-wave test.
    pub fn square(n: usize) -> Self {
        BlockSizes { coarse: (n, n), fine: (2 * n - 1, 2 * n - 1) }
    }
}

pub fn build_discretization(
    order: Order,
    sizes: BlockSizes,
    maps: (Mapping, Mapping),
    materials: (MaterialField, MaterialField),
) -> Result<Discretization> {
    let gc = ReferenceGrid::new(sizes.coarse.0, sizes.coarse.1, order)?;
    let gf = ReferenceGrid::new(sizes.fine.0, sizes.fine.1, order)?;
    let (c, f) = rayon::join(
        || BlockOps::new(order, BlockGrid::new(maps.0, gc, Side::Coarse)?, &materials.0),
        || BlockOps::new(order, BlockGrid::new(maps.1, gf, Side::Fine)?, &materials.1),
    );
    Discretization::new(order, c?, f?)
}

pub fn manufactured_discretization(order: Order, n: usize) -> Result<Discretization> {
    build_discretization(
        order,
        BlockSizes::topography(n),
        (Mapping::topography(Side::Coarse), Mapping::topography(Side::Fine)),
        (MaterialField::Smooth, MaterialField::Smooth),
    )
}

pub fn energy_discretization(order: Order, n: usize) -> Result<Discretization> {
    build_discretization(
        order,
        BlockSizes::topography(n),
        (Mapping::topography(Side::Coarse), Mapping::topography(Side::Fine)),
        (MaterialField::EnergyCoarse, MaterialField::EnergyFine),
    )
}

pub fn stoneley_discretization(order: Order, n: usize, p: &StoneleyParams) -> Result<Discretization> {
    build_discretization(
        order,
        BlockSizes::square(n),
        (
            Mapping::Rectangle { x0: 0.0, lx: 2.0 * PI, y0: -4.0 * PI, ly: 4.0 * PI },
            Mapping::Rectangle { x0: 0.0, lx: 2.0 * PI, y0: 0.0, ly: 4.0 * PI },
        ),
        (MaterialField::Constant(p.lower), MaterialField::Constant(p.upper)),
    )
}

/// Two stacked rectangles `[0, l1] x [0, alpha l2]` and `[0, l1] x [alpha l2, l2]`
/// with constant materials.
pub fn cartesian_discretization(
    order: Order,
    sizes: BlockSizes,
    l1: f64,
    l2: f64,
    alpha: f64,
    coarse: Lame,
    fine: Lame,
) -> Result<Discretization> {
    build_discretization(
        order,
        sizes,
        (
            Mapping::Rectangle { x0: 0.0, lx: l1, y0: 0.0, ly: alpha * l2 },
            Mapping::Rectangle { x0: 0.0, lx: l1, y0: alpha * l2, ly: (1.0 - alpha) * l2 },
        ),
        (MaterialField::Constant(coarse), MaterialField::Constant(fine)),
    )
}

/// Outcome of a run against an exact solution.
#[derive(Clone, Debug)]
pub struct ErrorRun {
    pub n: usize,
    pub steps: usize,
    pub dt: f64,
    pub final_error: f64,
    /// Final error in the reference-coordinate norm.
    pub final_error_reference: f64,
    /// `(t, error, reference error)` samples.
    pub history: Vec<(f64, f64, f64)>,
}

fn run_exact(
    d: &Discretization,
    problem: &dyn Problem,
    exact: &(dyn Fn(Side, f64, f64, f64) -> [f64; 2] + Sync),
    t_final: f64,
    cfl: f64,
    samples: usize,
    n: usize,
) -> Result<ErrorRun> {
    let (steps, dt) = uniform_steps(t_final, compute_dt_approx(d, cfl));
    let prev = Field::from_fn(d, |s, x, y| exact(s, x, y, -dt));
    let cur = Field::from_fn(d, |s, x, y| exact(s, x, y, 0.0));
    let mut st = Stepper::from_levels(d, problem, dt, 0.0, prev, cur)?;
    let every = (steps / samples.max(1)).max(1);
    let errors = |u: &Field, t: f64| {
        let ex = |s: Side, x: f64, y: f64| exact(s, x, y, t);
        (l2_error(d, u, &ex), l2_error_reference(d, u, &ex))
    };
    let e0 = errors(&st.cur, 0.0);
    let mut history = vec![(0.0, e0.0, e0.1)];
    st.run(steps, |s| {
        if s.step % every == 0 || s.step == steps {
            let e = errors(&s.cur, s.t);
            history.push((s.t, e.0, e.1));
        }
        Ok(())
    })?;
    let (final_error, final_error_reference) = errors(&st.cur, st.t);
    Ok(ErrorRun { n, steps, dt, final_error, final_error_reference, history })
}

pub fn manufactured_run(order: Order, n: usize, t_final: f64, cfl: f64) -> Result<ErrorRun> {
    let d = manufactured_discretization(order, n)?;
    let m = Manufactured;
    run_exact(&d, &m, &|_, x, y, t| m.displacement(x, y, t), t_final, cfl, 20, n)
}

pub fn stoneley_setup(mu: f64) -> Result<StoneleyMode> {
    let p = StoneleyParams::table_row(mu);
    let c = stoneley_phase_velocity(&p)?;
    stoneley_mode(&p, c)
}

/// Interface-wave run; `t_final = None` runs one period.
pub fn stoneley_run(order: Order, n: usize, mode: &StoneleyMode, t_final: Option<f64>, cfl: f64, samples: usize) -> Result<ErrorRun> {
    let d = stoneley_discretization(order, n, &mode.params)?;
    let prob = StoneleyProblem { mode: *mode };
    let m = *mode;
    let t = t_final.unwrap_or_else(|| mode.period());
    run_exact(&d, &prob, &move |s, x, y, t| stoneley_field(&m, s, x, y, t), t, cfl, samples, n)
}

/// Uniform(0, 1) samples at every node of both blocks from a seeded ChaCha8 stream.
pub fn random_field(d: &Discretization, seed: u64) -> Field {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fill = |len: usize| -> Vec<[f64; 2]> { (0..len).map(|_| [rng.random::<f64>(), rng.random::<f64>()]).collect() };
    let coarse = fill(d.coarse.len());
    let fine = fill(d.fine.len());
    Field { coarse, fine }
}

#[derive(Clone, Debug)]
pub struct EnergyRun {
    pub dt: f64,
    /// `(step, t, E)`, energy of the level pair ending at `t`.
    pub history: Vec<(usize, f64, f64)>,
    pub max_drift: f64,
}

/// Random data, homogeneous Dirichlet boundaries, zero initial velocity.
pub fn energy_run_on(d: &Discretization, t_final: f64, dt: f64, seed: u64, record_every: usize) -> Result<EnergyRun> {
    let (steps, dt) = uniform_steps(t_final, dt);
    let u0 = random_field(d, seed);
    let p = Homogeneous;
    let mut st = Stepper::taylor_start(d, &p, dt, 0.0, u0, None)?;
    let e0 = discrete_energy(d, &st.prev, &st.cur, dt)?;
    let mut history = vec![(0, 0.0, e0)];
    let mut max_drift: f64 = 0.0;
    let every = record_every.max(1);
    st.run(steps, |s| {
        let e = discrete_energy(d, &s.prev, &s.cur, dt)?;
        let drift = (e - e0) / e0;
        if !drift.is_finite() {
            return Err(crate::Error::NonFiniteState { step: s.step });
        }
        max_drift = max_drift.max(drift.abs());
        if s.step % every == 0 || s.step == steps {
            history.push((s.step, s.t, e));
        }
        Ok(())
    })?;
    Ok(EnergyRun { dt, history, max_drift })
}

pub fn energy_run(order: Order, n: usize, t_final: f64, cfl: f64, seed: u64, record_every: usize) -> Result<EnergyRun> {
    let d = energy_discretization(order, n)?;
    let dt = compute_dt_approx(&d, cfl);
    energy_run_on(&d, t_final, dt, seed, record_every)
}
