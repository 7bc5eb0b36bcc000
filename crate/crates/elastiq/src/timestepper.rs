//! Fourth-order predictor-corrector time stepping for the coupled blocks.

use crate::diagnostics::kbar_blocks;
use crate::discretization::{BlockOps, Discretization, InterfaceSources, Vec2};
use crate::error::{Error, Result};
use crate::grid::Side;
use crate::material::{eig2, local_speed_matrix};
use rayon::prelude::*;

/// Data of an initial-boundary value problem. Defaults describe a
/// homogeneous problem with zero Dirichlet data everywhere.
pub trait Problem: Sync {
    /// Whether the top edge of the fine block carries traction data instead
    /// of Dirichlet data.
    fn top_traction(&self) -> bool {
        false
    }

    fn has_forcing(&self) -> bool {
        false
    }

    /// Body force `F` in `rho u_tt = div(sigma) + F`.
    fn forcing(&self, _side: Side, _x: f64, _y: f64, _t: f64) -> Vec2 {
        [0.0; 2]
    }

    fn dirichlet(&self, _side: Side, _x: f64, _y: f64, _t: f64) -> Vec2 {
        [0.0; 2]
    }

    /// Second time derivative of the Dirichlet data.
    fn dirichlet_accel(&self, _side: Side, _x: f64, _y: f64, _t: f64) -> Vec2 {
        [0.0; 2]
    }

    /// Cauchy stress on the top edge, `sigma[a][i]`.
    fn top_stress(&self, _x: f64, _y: f64, _t: f64) -> [[f64; 2]; 2] {
        [[0.0; 2]; 2]
    }
}

/// Homogeneous problem with zero Dirichlet data on all physical boundaries.
pub struct Homogeneous;

impl Problem for Homogeneous {}

/// Displacements of both blocks at one time level.
#[derive(Clone, Debug, PartialEq)]
pub struct Field {
    pub coarse: Vec<Vec2>,
    pub fine: Vec<Vec2>,
}

impl Field {
    pub fn zeros(d: &Discretization) -> Self {
        Field { coarse: vec![[0.0; 2]; d.coarse.len()], fine: vec![[0.0; 2]; d.fine.len()] }
    }

    pub fn from_fn(d: &Discretization, f: impl Fn(Side, f64, f64) -> Vec2) -> Self {
        let s = |b: &BlockOps| -> Vec<Vec2> { (0..b.len()).map(|k| f(b.side(), b.block.x[k], b.block.y[k])).collect() };
        Field { coarse: s(&d.coarse), fine: s(&d.fine) }
    }

    pub fn is_finite(&self) -> bool {
        self.coarse.iter().chain(&self.fine).all(|v| v[0].is_finite() && v[1].is_finite())
    }
}

/// `J F` at all nodes of a block (ghost row included, harmless).
fn body_force(b: &BlockOps, p: &dyn Problem, t: f64) -> Vec<Vec2> {
    (0..b.len())
        .into_par_iter()
        .map(|k| {
            let f = p.forcing(b.side(), b.block.x[k], b.block.y[k], t);
            let j = b.block.metrics.jac[k];
            [j * f[0], j * f[1]]
        })
        .collect()
}

fn sources(d: &Discretization, p: &dyn Problem, t: f64, jf_c: Option<&[Vec2]>, jf_f: Option<&[Vec2]>) -> InterfaceSources {
    let (nc, nf) = (d.coarse.n1(), d.fine.n1());
    let mut s = InterfaceSources::zero(nc, nf);
    let jc = d.coarse.n2() - 1;
    if let (Some(fc), Some(ff)) = (jf_c, jf_f) {
        s.coarse = (0..nc).map(|i| fc[d.coarse.idx(i, jc)]).collect();
        s.fine = (0..nf).map(|i| ff[d.fine.idx(i, 0)]).collect();
    }
    let b = &d.coarse.block;
    for (slot, i) in [(0, 0), (1, nc - 1)] {
        let k = d.coarse.idx(i, jc);
        s.corners[slot] = p.dirichlet_accel(Side::Coarse, b.x[k], b.y[k], t);
    }
    s
}

/// Applies every boundary and interface condition at time `t`:
/// Dirichlet data, the top traction ghost row, injection onto the fine
/// interface (Dirichlet data win at corners) and the coarse ghost solve.
pub fn enforce_conditions(d: &Discretization, p: &dyn Problem, u: &mut Field, t: f64) -> Result<()> {
    enforce_with_forces(d, p, u, t, None)
}

fn enforce_with_forces(
    d: &Discretization,
    p: &dyn Problem,
    u: &mut Field,
    t: f64,
    forces: Option<(&[Vec2], &[Vec2])>,
) -> Result<()> {
    let top_dirichlet = !p.top_traction();
    d.coarse.apply_dirichlet(&mut u.coarse, true, &|x, y| p.dirichlet(Side::Coarse, x, y, t));
    d.fine.apply_dirichlet(&mut u.fine, top_dirichlet, &|x, y| p.dirichlet(Side::Fine, x, y, t));
    if p.top_traction() {
        let b = &d.fine;
        let j = b.n2() - 1;
        let m = &b.block.metrics;
        let target: Vec<Vec2> = (0..b.n1())
            .map(|i| {
                let k = b.idx(i, j);
                let s = p.top_stress(b.block.x[k], b.block.y[k], t);
                let (sx, sy) = (m.xi12[k], m.xi22[k]);
                [m.jac[k] * (sx * s[0][0] + sy * s[0][1]), m.jac[k] * (sx * s[1][0] + sy * s[1][1])]
            })
            .collect();
        b.solve_top_ghost(&mut u.fine, &target);
    }
    d.inject(&u.coarse, &mut u.fine);
    d.fine.apply_dirichlet(&mut u.fine, top_dirichlet, &|x, y| p.dirichlet(Side::Fine, x, y, t));
    let owned;
    let (fc, ff) = match forces {
        Some(f) => (Some(f.0), Some(f.1)),
        None if p.has_forcing() => {
            owned = (body_force(&d.coarse, p, t), body_force(&d.fine, p, t));
            (Some(&owned.0[..]), Some(&owned.1[..]))
        }
        None => (None, None),
    };
    let src = sources(d, p, t, fc, ff);
    d.solve_ghost(&mut u.coarse, &u.fine, &src)
}

/// Largest eigenvalue of the local speed matrix over a block's nodes.
fn zeta_max(b: &BlockOps) -> f64 {
    let g = &b.block.grid;
    let mut z: f64 = 0.0;
    for i in 0..g.n1 {
        for j in 0..g.n2 {
            z = z.max(eig2(&local_speed_matrix(&b.tensors, g.idx(i, j)))[1]);
        }
    }
    z
}

/// Local-speed estimate `C min(min(h1,h2)/sqrt(zeta))` over both blocks.
pub fn compute_dt_approx(d: &Discretization, cfl: f64) -> f64 {
    let one = |b: &BlockOps| b.block.grid.h1.min(b.block.grid.h2) / zeta_max(b).sqrt();
    cfl * one(&d.fine).min(one(&d.coarse))
}

/// Largest step allowed by the energy estimate, `2 sqrt(3) / sqrt(kappa_max)`
/// per block. Needs dense eigenvalue problems, so the size is capped.
pub fn compute_dt_exact(d: &Discretization, cap: usize) -> Result<f64> {
    let blocks = kbar_blocks(d, cap)?;
    Ok(blocks.iter().map(|k| 2.0 * 3f64.sqrt() / k.max_eigenvalue.sqrt()).fold(f64::INFINITY, f64::min))
}

/// Two stored levels plus the data needed to advance them.
pub struct Stepper<'a> {
    pub disc: &'a Discretization,
    pub problem: &'a dyn Problem,
    pub dt: f64,
    pub t: f64,
    pub step: usize,
    pub prev: Field,
    pub cur: Field,
    /// Scaled body force `J F` at `t - dt` and `t`, reused across steps.
    forces: Option<(Field, Field)>,
}

impl<'a> Stepper<'a> {
    /// Starts from two given levels at `t0 - dt` and `t0`, enforcing the
    /// boundary and interface conditions on both.
    pub fn from_levels(
        disc: &'a Discretization,
        problem: &'a dyn Problem,
        dt: f64,
        t0: f64,
        mut prev: Field,
        mut cur: Field,
    ) -> Result<Self> {
        enforce_conditions(disc, problem, &mut prev, t0 - dt)?;
        enforce_conditions(disc, problem, &mut cur, t0)?;
        Ok(Stepper { disc, problem, dt, t: t0, step: 0, prev, cur, forces: None })
    }

    /// Taylor start `u(-dt) = u0 - dt v0 + dt^2/2 a0 - dt^3/6 a1` with
    /// `a0 = (L u0 + J F)/(J rho)` and `a1 = L v0/(J rho)`.
    pub fn taylor_start(
        disc: &'a Discretization,
        problem: &'a dyn Problem,
        dt: f64,
        t0: f64,
        mut u0: Field,
        v0: Option<Field>,
    ) -> Result<Self> {
        enforce_conditions(disc, problem, &mut u0, t0)?;
        let lu = apply_both(disc, &u0)?;
        let lv = match &v0 {
            Some(v) => Some(apply_both(disc, v)?),
            None => None,
        };
        let fc = body_force(&disc.coarse, problem, t0);
        let ff = body_force(&disc.fine, problem, t0);
        let mut prev = u0.clone();
        let upd = |b: &BlockOps, out: &mut [Vec2], l: &[Vec2], jf: &[Vec2], lv: Option<&[Vec2]>, v: Option<&[Vec2]>| {
            for k in 0..b.len() {
                let jr = b.tensors.jrho[k];
                for c in 0..2 {
                    let mut x = 0.5 * dt * dt * (l[k][c] + jf[k][c]) / jr;
                    if let (Some(lv), Some(v)) = (lv, v) {
                        x += -dt * v[k][c] - dt * dt * dt / 6.0 * lv[k][c] / jr;
                    }
                    out[k][c] += x;
                }
            }
        };
        upd(&disc.coarse, &mut prev.coarse, &lu.coarse, &fc, lv.as_ref().map(|f| &f.coarse[..]), v0.as_ref().map(|f| &f.coarse[..]));
        upd(&disc.fine, &mut prev.fine, &lu.fine, &ff, lv.as_ref().map(|f| &f.fine[..]), v0.as_ref().map(|f| &f.fine[..]));
        enforce_conditions(disc, problem, &mut prev, t0 - dt)?;
        Ok(Stepper { disc, problem, dt, t: t0, step: 0, prev, cur: u0, forces: None })
    }

    /// Advances one step.
    pub fn step(&mut self) -> Result<()> {
        let d = self.disc;
        let p = self.problem;
        let dt = self.dt;
        let t = self.t;
        let forcing = p.has_forcing();
        let scaled_force = |t: f64| Field { coarse: body_force(&d.coarse, p, t), fine: body_force(&d.fine, p, t) };
        let (fm, f0) = match self.forces.take() {
            Some(f) => f,
            None if forcing => (scaled_force(t - dt), scaled_force(t)),
            None => (Field { coarse: Vec::new(), fine: Vec::new() }, Field { coarse: Vec::new(), fine: Vec::new() }),
        };
        let (fc0, ff0) = (&f0.coarse, &f0.fine);
        let l = apply_both(d, &self.cur)?;
        let mut star = self.cur.clone();
        let lev = |b: &BlockOps, out: &mut [Vec2], u: &[Vec2], um: &[Vec2], l: &[Vec2], jf: &[Vec2]| {
            let g = b.block.grid;
            let j0 = usize::from(b.side() == Side::Fine);
            out.par_chunks_mut(g.stride()).enumerate().for_each(|(i, col)| {
                for (j, o) in col.iter_mut().enumerate().take(g.n2).skip(j0) {
                    let k = g.idx(i, j);
                    let jr = b.tensors.jrho[k];
                    for c in 0..2 {
                        let f = if jf.is_empty() { 0.0 } else { jf[k][c] };
                        o[c] = 2.0 * u[k][c] - um[k][c] + dt * dt * (l[k][c] + f) / jr;
                    }
                }
            });
        };
        lev(&d.coarse, &mut star.coarse, &self.cur.coarse, &self.prev.coarse, &l.coarse, fc0);
        lev(&d.fine, &mut star.fine, &self.cur.fine, &self.prev.fine, &l.fine, ff0);
        let t1 = t + dt;
        let f1 = if forcing { scaled_force(t1) } else { Field { coarse: Vec::new(), fine: Vec::new() } };
        let (fc1, ff1) = (&f1.coarse, &f1.fine);
        let forces1 = if forcing { Some((&fc1[..], &ff1[..])) } else { None };
        enforce_with_forces(d, p, &mut star, t1, forces1)?;

        let accel = |a: &[Vec2], u: &[Vec2], um: &[Vec2]| -> Vec<Vec2> {
            a.iter()
                .zip(u)
                .zip(um)
                .map(|((s, u), m)| [(s[0] - 2.0 * u[0] + m[0]) / (dt * dt), (s[1] - 2.0 * u[1] + m[1]) / (dt * dt)])
                .collect()
        };
        let acc = Field {
            coarse: accel(&star.coarse, &self.cur.coarse, &self.prev.coarse),
            fine: accel(&star.fine, &self.cur.fine, &self.prev.fine),
        };
        let la = apply_both(d, &acc)?;
        let ftt = |f1: &[Vec2], f0: &[Vec2], fm: &[Vec2]| -> Vec<Vec2> {
            if !forcing {
                return Vec::new();
            }
            (0..f1.len())
                .map(|k| [(f1[k][0] - 2.0 * f0[k][0] + fm[k][0]) / (dt * dt), (f1[k][1] - 2.0 * f0[k][1] + fm[k][1]) / (dt * dt)])
                .collect()
        };
        let fttc = ftt(fc1, fc0, &fm.coarse);
        let fttf = ftt(ff1, ff0, &fm.fine);
        let mut next = star;
        let corr = |b: &BlockOps, out: &mut [Vec2], la: &[Vec2], jf: &[Vec2]| {
            let g = b.block.grid;
            let j0 = usize::from(b.side() == Side::Fine);
            let c4 = dt.powi(4) / 12.0;
            out.par_chunks_mut(g.stride()).enumerate().for_each(|(i, col)| {
                for (j, o) in col.iter_mut().enumerate().take(g.n2).skip(j0) {
                    let k = g.idx(i, j);
                    let jr = b.tensors.jrho[k];
                    for c in 0..2 {
                        let f = if jf.is_empty() { 0.0 } else { jf[k][c] };
                        o[c] += c4 * (la[k][c] + f) / jr;
                    }
                }
            });
        };
        corr(&d.coarse, &mut next.coarse, &la.coarse, &fttc);
        corr(&d.fine, &mut next.fine, &la.fine, &fttf);
        enforce_with_forces(d, p, &mut next, t1, forces1)?;

        self.prev = std::mem::replace(&mut self.cur, next);
        if forcing {
            self.forces = Some((f0, f1));
        }
        self.t = t1;
        self.step += 1;
        if self.step.is_multiple_of(50) && !self.cur.is_finite() {
            return Err(Error::NonFiniteState { step: self.step });
        }
        Ok(())
    }

    /// Takes `n` steps, calling `hook` after each.
    pub fn run(&mut self, n: usize, mut hook: impl FnMut(&Stepper) -> Result<()>) -> Result<()> {
        for _ in 0..n {
            self.step()?;
            hook(self)?;
        }
        if !self.cur.is_finite() {
            return Err(Error::NonFiniteState { step: self.step });
        }
        Ok(())
    }
}

/// `L` applied on both blocks.
pub fn apply_both(d: &Discretization, u: &Field) -> Result<Field> {
    let (c, f) = rayon::join(|| d.coarse.apply(&u.coarse), || d.fine.apply(&u.fine));
    Ok(Field { coarse: c?, fine: f? })
}

/// Uniform step count and size reaching `t_final` exactly without exceeding `dt_max`.
pub fn uniform_steps(t_final: f64, dt_max: f64) -> (usize, f64) {
    let n = (t_final / dt_max).ceil().max(1.0) as usize;
    (n, t_final / n as f64)
}
