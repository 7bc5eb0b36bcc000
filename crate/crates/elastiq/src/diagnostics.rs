//! Energy, error norms, convergence rates and spectral checks.

use crate::discretization::{BlockOps, Discretization, InterfaceSources, Vec2};
use crate::error::{Error, Result};
use crate::grid::Side;
use crate::sbp_core::GHOST_BETA;
use crate::timestepper::{apply_both, Field};
use nalgebra::DMatrix;

fn dot(a: Vec2, b: Vec2) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

/// `-(v, L u)` plus the interface boundary term, the symmetric form of one block.
fn block_form(b: &BlockOps, v: &[Vec2], lu: &[Vec2], u: &[Vec2]) -> f64 {
    let g = b.block.grid;
    let mut s = 0.0;
    for i in 0..g.n1 {
        for j in 0..g.n2 {
            let k = g.idx(i, j);
            s -= b.cell_weight(i, j) * dot(v[k], lu[k]);
        }
    }
    match b.side() {
        Side::Coarse => {
            let t = b.traction_top(u);
            let j = g.n2 - 1;
            for (i, ti) in t.iter().enumerate() {
                s += g.h1 * b.weights_r[i] * dot(v[g.idx(i, j)], *ti);
            }
        }
        Side::Fine => {
            let t = b.traction_bottom(u);
            for (i, ti) in t.iter().enumerate() {
                s -= g.h1 * b.weights_r[i] * dot(v[g.idx(i, 0)], *ti);
            }
        }
    }
    s
}

/// Fully discrete energy of the level pair `(u0, u1)` one step `dt` apart,
/// for problems with homogeneous Dirichlet data and no forcing.
pub fn discrete_energy(d: &Discretization, u0: &Field, u1: &Field, dt: f64) -> Result<f64> {
    let l0 = apply_both(d, u0)?;
    let l1 = apply_both(d, u1)?;
    let src = InterfaceSources::zero(d.coarse.n1(), d.fine.n1());
    let mut lh0 = l0.fine.clone();
    let mut lh1 = l1.fine.clone();
    for (lh, u) in [(&mut lh0, u0), (&mut lh1, u1)] {
        for (i, e) in d.eta(&u.coarse, &u.fine, &src).into_iter().enumerate() {
            let k = d.fine.idx(i, 0);
            lh[k][0] += e[0];
            lh[k][1] += e[1];
        }
    }
    let mut kinetic = 0.0;
    let mut correction = 0.0;
    for (b, a0, a1, la0, la1) in [
        (&d.coarse, &u0.coarse, &u1.coarse, &l0.coarse, &l1.coarse),
        (&d.fine, &u0.fine, &u1.fine, &lh0, &lh1),
    ] {
        let g = b.block.grid;
        for i in 0..g.n1 {
            for j in 0..g.n2 {
                let k = g.idx(i, j);
                let w = b.cell_weight(i, j);
                let jr = b.tensors.jrho[k];
                let v = [(a1[k][0] - a0[k][0]) / dt, (a1[k][1] - a0[k][1]) / dt];
                kinetic += w * jr * dot(v, v);
                if !b.is_dirichlet(i, j, true) {
                    correction += w * dot(la1[k], la0[k]) / jr;
                }
            }
        }
    }
    let sc = block_form(&d.coarse, &u1.coarse, &l0.coarse, &u0.coarse);
    let sf = block_form(&d.fine, &u1.fine, &l0.fine, &u0.fine);
    Ok(kinetic + sc + sf - dt * dt / 12.0 * correction)
}

/// Weighted l2 norm of `u - exact` over both blocks, `sqrt(sum h1 h2 w J |e|^2)`.
pub fn l2_error(d: &Discretization, u: &Field, exact: &dyn Fn(Side, f64, f64) -> Vec2) -> f64 {
    weighted_error(d, u, exact, true)
}

/// As [`l2_error`] but measured in reference coordinates, without the Jacobian.
pub fn l2_error_reference(d: &Discretization, u: &Field, exact: &dyn Fn(Side, f64, f64) -> Vec2) -> f64 {
    weighted_error(d, u, exact, false)
}

fn weighted_error(d: &Discretization, u: &Field, exact: &dyn Fn(Side, f64, f64) -> Vec2, with_jacobian: bool) -> f64 {
    let mut s = 0.0;
    for (b, v) in [(&d.coarse, &u.coarse), (&d.fine, &u.fine)] {
        let g = b.block.grid;
        for i in 0..g.n1 {
            for j in 0..g.n2 {
                let k = g.idx(i, j);
                let e = exact(b.side(), b.block.x[k], b.block.y[k]);
                let r = [v[k][0] - e[0], v[k][1] - e[1]];
                let jac = if with_jacobian { b.block.metrics.jac[k] } else { 1.0 };
                s += b.cell_weight(i, j) * jac * dot(r, r);
            }
        }
    }
    s.sqrt()
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceRow {
    pub n: usize,
    pub error: f64,
    /// `None` for the coarsest entry.
    pub rate: Option<f64>,
}

pub fn convergence_rates(entries: &[(usize, f64)]) -> Vec<ConvergenceRow> {
    entries
        .iter()
        .enumerate()
        .map(|(k, &(n, e))| ConvergenceRow { n, error: e, rate: (k > 0).then(|| (entries[k - 1].1 / e).log2()) })
        .collect()
}

#[derive(Clone, Debug)]
pub struct Dominance {
    /// `a_ii - sum_{j != i} |a_ij|` per row.
    pub rows: Vec<f64>,
    pub cols: Vec<f64>,
}

impl Dominance {
    pub fn strict(&self) -> bool {
        self.rows.iter().chain(&self.cols).all(|&m| m > 0.0)
    }
}

pub fn dominance(m: &DMatrix<f64>) -> Dominance {
    let n = m.nrows();
    let rows = (0..n).map(|i| m[(i, i)] - (0..n).filter(|&j| j != i).map(|j| m[(i, j)].abs()).sum::<f64>()).collect();
    let cols = (0..n).map(|j| m[(j, j)] - (0..n).filter(|&i| i != j).map(|i| m[(i, j)].abs()).sum::<f64>()).collect();
    Dominance { rows, cols }
}

/// Smallest and largest real parts of the spectrum, plus the largest
/// imaginary part seen.
pub fn eigen_extremes(m: &DMatrix<f64>, cap: usize) -> Result<(f64, f64, f64)> {
    if m.nrows() > cap {
        return Err(Error::CapExceeded { size: m.nrows(), cap });
    }
    let ev = m.complex_eigenvalues();
    let lo = ev.iter().map(|z| z.re).fold(f64::INFINITY, f64::min);
    let hi = ev.iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max);
    let im = ev.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    Ok((lo, hi, im))
}

/// Recovers the interpolation-restriction factor of the interface matrix
/// for constant material on rectangles: the first displacement component
/// of the matrix equals `a I + b F` with known `a`, `b`. Only the interior
/// interface nodes are returned; the corner ghosts are decoupled because
/// the corners carry Dirichlet data.
pub fn stencil_factor(d: &Discretization) -> DMatrix<f64> {
    let m = d.interface_matrix();
    let n = d.interface_len();
    let (jlc, jlf) = d.interface_scaling();
    let kc = d.coarse.idx(n / 2, d.coarse.n2() - 1);
    let kf = d.fine.idx(n - 1, 0);
    let n22 = d.coarse.tensors.n22[kc][0];
    let a = GHOST_BETA * n22 / jlc[n / 2];
    let ratio = d.fine.block.grid.h2 / d.coarse.block.grid.h2 * d.fine.tensors.jrho[kf] / d.coarse.tensors.jrho[kc];
    let b = ratio * GHOST_BETA * n22 / jlf[n - 1];
    DMatrix::from_fn(n - 2, n - 2, |i, j| (m[(2 * i + 2, 2 * j + 2)] - if i == j { a } else { 0.0 }) / b)
}

/// Product of restriction and interpolation on the unit interval.
pub fn restriction_interpolation(q: usize, n_coarse: usize) -> Result<DMatrix<f64>> {
    let pair = crate::interp::build_op_pair(q, n_coarse)?;
    let p = pair.p.to_dense();
    let r = pair.r.to_dense();
    let (nc, nf) = (pair.n_coarse, pair.n_fine);
    Ok(DMatrix::from_fn(nc, nc, |i, j| (0..nf).map(|k| r[i][k] * p[k][j]).sum()))
}

/// Mass-scaled stiffness of one block over its non-Dirichlet unknowns.
#[derive(Clone, Debug)]
pub struct KbarReport {
    pub side: Side,
    pub size: usize,
    pub asymmetry: f64,
    pub min_eigenvalue: f64,
    pub max_eigenvalue: f64,
}

/// Builds `D^{-1/2} S D^{-1/2}` for each block, where `S` is the block's
/// symmetric form restricted to unknowns off the Dirichlet boundary and
/// `D` holds the weights `h1 h2 w J rho`.
pub fn kbar_blocks(d: &Discretization, cap: usize) -> Result<Vec<KbarReport>> {
    [&d.coarse, &d.fine].into_iter().map(|b| kbar_block(b, cap)).collect()
}

fn kbar_block(b: &BlockOps, cap: usize) -> Result<KbarReport> {
    let g = b.block.grid;
    let dofs: Vec<(usize, usize, usize)> = (0..g.n1)
        .flat_map(|i| (0..g.n2).map(move |j| (i, j)))
        .filter(|&(i, j)| !b.is_dirichlet(i, j, true))
        .flat_map(|(i, j)| [(i, j, 0), (i, j, 1)])
        .collect();
    let n = dofs.len();
    if n > cap {
        return Err(Error::CapExceeded { size: n, cap });
    }
    let diag: Vec<f64> = dofs.iter().map(|&(i, j, _)| b.cell_weight(i, j) * b.tensors.jrho[g.idx(i, j)]).collect();
    let mut s = DMatrix::<f64>::zeros(n, n);
    let mut u = vec![[0.0; 2]; b.len()];
    for (col, &(i, j, c)) in dofs.iter().enumerate() {
        u[g.idx(i, j)][c] = 1.0;
        let lu = b.apply(&u)?;
        let edge = match b.side() {
            Side::Coarse => (g.n2 - 1, b.traction_top(&u), 1.0),
            Side::Fine => (0, b.traction_bottom(&u), -1.0),
        };
        for (row, &(ii, jj, cc)) in dofs.iter().enumerate() {
            let mut v = -b.cell_weight(ii, jj) * lu[g.idx(ii, jj)][cc];
            if jj == edge.0 {
                v += edge.2 * g.h1 * b.weights_r[ii] * edge.1[ii][cc];
            }
            s[(row, col)] = v / (diag[row] * diag[col]).sqrt();
        }
        u[g.idx(i, j)][c] = 0.0;
    }
    let asymmetry = (&s - s.transpose()).amax();
    let sym = (&s + s.transpose()) * 0.5;
    let ev = sym.symmetric_eigenvalues();
    Ok(KbarReport { side: b.side(), size: n, asymmetry, min_eigenvalue: ev.min(), max_eigenvalue: ev.max() })
}
