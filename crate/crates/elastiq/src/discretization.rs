//! Spatial discretization of the two-block elastic system: block operators,
//! boundary tractions, the interface correction term and the linear system
//! for the coarse-side ghost values.

use crate::error::{Error, Result};
use crate::grid::{BlockGrid, Side};
use crate::interp::{build_op_pair, build_scaled, ScaledCoupling};
use crate::material::{assemble_tensors, Mat2, MaterialField, MaterialTensors};
use crate::sbp_core::{FirstDeriv, GhostEnds, Order, RowStencils, SecondDeriv, BOUNDARY_DERIV, BOUNDARY_DERIV_GHOST};
use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;

pub type Vec2 = [f64; 2];

/// Second-derivative rows for the three independent entries of a symmetric
/// 2x2 coefficient, sharing one sparsity pattern.
#[derive(Clone, Debug)]
struct TripleStencil {
    start: Vec<usize>,
    ptr: Vec<usize>,
    w: Vec<[f64; 3]>,
}

impl TripleStencil {
    fn new(parts: [&RowStencils; 3]) -> Self {
        let n = parts[0].nrows();
        let mut start = Vec::with_capacity(n);
        let mut ptr = vec![0];
        let mut w = Vec::new();
        for i in 0..n {
            let rows = parts.map(|p| p.row(i));
            debug_assert!(rows.iter().all(|r| r.0 == rows[0].0 && r.1.len() == rows[0].1.len()));
            start.push(rows[0].0);
            for k in 0..rows[0].1.len() {
                w.push([rows[0].1[k], rows[1].1[k], rows[2].1[k]]);
            }
            ptr.push(w.len());
        }
        TripleStencil { start, ptr, w }
    }

    fn build(order: Order, coef: &[[f64; 3]], h: f64, ghosts: GhostEnds) -> Result<Self> {
        let ops = [0, 1, 2].map(|c| {
            let g: Vec<f64> = coef.iter().map(|a| a[c]).collect();
            SecondDeriv::new(order, &g, h, ghosts)
        });
        let [a, b, c] = ops;
        let (a, b, c) = (a?, b?, c?);
        Ok(TripleStencil::new([a.stencils(), b.stencils(), c.stencils()]))
    }

    /// Row `i` applied to values fetched by `get(col)`.
    #[inline]
    fn apply_row(&self, i: usize, get: impl Fn(usize) -> Vec2) -> Vec2 {
        let s = self.start[i];
        let mut out = [0.0; 2];
        for (t, w) in self.w[self.ptr[i]..self.ptr[i + 1]].iter().enumerate() {
            let u = get(s + t);
            out[0] += w[0] * u[0] + w[1] * u[1];
            out[1] += w[1] * u[0] + w[2] * u[1];
        }
        out
    }
}

#[inline]
fn mat_vec(m: &Mat2, v: Vec2) -> Vec2 {
    [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
}

#[inline]
fn sym_vec(m: &[f64; 3], v: Vec2) -> Vec2 {
    [m[0] * v[0] + m[1] * v[1], m[1] * v[0] + m[2] * v[1]]
}

#[inline]
fn transpose(m: &Mat2) -> Mat2 {
    [[m[0][0], m[1][0]], [m[0][1], m[1][1]]]
}

#[inline]
fn add(a: Vec2, b: Vec2) -> Vec2 {
    [a[0] + b[0], a[1] + b[1]]
}

/// Operator `L` of one block together with its geometry and material data.
///
/// The s-direction second derivative treats row `n2` as a ghost row at the
/// top end; on the fine block it is used only by a traction boundary.
#[derive(Clone, Debug)]
pub struct BlockOps {
    pub order: Order,
    pub block: BlockGrid,
    pub tensors: MaterialTensors,
    pub weights_r: Vec<f64>,
    pub weights_s: Vec<f64>,
    d1r: RowStencils,
    d1s: RowStencils,
    g1: Vec<TripleStencil>,
    g2: Vec<TripleStencil>,
}

impl BlockOps {
    pub fn new(order: Order, block: BlockGrid, material: &MaterialField) -> Result<Self> {
        let tensors = assemble_tensors(material, &block)?;
        let g = block.grid;
        let d1r = FirstDeriv::new(order, g.n1, g.h1)?.stencils().clone();
        let d1s = FirstDeriv::new(order, g.n2, g.h2)?.stencils().clone();
        let g1 = (0..g.n2)
            .into_par_iter()
            .map(|j| {
                let coef: Vec<[f64; 3]> = (0..g.n1).map(|i| tensors.n11[g.idx(i, j)]).collect();
                TripleStencil::build(order, &coef, g.h1, GhostEnds::NONE)
            })
            .collect::<Result<Vec<_>>>()?;
        let g2 = (0..g.n1)
            .into_par_iter()
            .map(|i| {
                let coef: Vec<[f64; 3]> = (0..g.n2).map(|j| tensors.n22[g.idx(i, j)]).collect();
                TripleStencil::build(order, &coef, g.h2, GhostEnds::RIGHT)
            })
            .collect::<Result<Vec<_>>>()?;
        let weights_r = crate::sbp_core::make_norm(order, g.n1)?.weights;
        let weights_s = crate::sbp_core::make_norm(order, g.n2)?.weights;
        Ok(BlockOps { order, block, tensors, weights_r, weights_s, d1r, d1s, g1, g2 })
    }

    pub fn n1(&self) -> usize {
        self.block.grid.n1
    }

    pub fn n2(&self) -> usize {
        self.block.grid.n2
    }

    pub fn idx(&self, i: usize, j: usize) -> usize {
        self.block.grid.idx(i, j)
    }

    pub fn len(&self) -> usize {
        self.block.grid.len_with_ghost()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn side(&self) -> Side {
        self.block.side
    }

    /// SBP quadrature weight `h1 h2 w_i w_j` of node `(i, j)`.
    pub fn cell_weight(&self, i: usize, j: usize) -> f64 {
        let g = &self.block.grid;
        g.h1 * g.h2 * self.weights_r[i] * self.weights_s[j]
    }

    fn d_r(&self, u: &[Vec2], i: usize, j: usize) -> Vec2 {
        let (s, w) = self.d1r.row(i);
        let mut out = [0.0; 2];
        for (t, c) in w.iter().enumerate() {
            let v = u[self.idx(s + t, j)];
            out[0] += c * v[0];
            out[1] += c * v[1];
        }
        out
    }

    fn d_s(&self, u: &[Vec2], i: usize, j: usize) -> Vec2 {
        let (s, w) = self.d1s.row(j);
        let base = self.idx(i, 0);
        let mut out = [0.0; 2];
        for (t, c) in w.iter().enumerate() {
            let v = u[base + s + t];
            out[0] += c * v[0];
            out[1] += c * v[1];
        }
        out
    }

    /// `L u` at one node, computed from scratch.
    pub fn apply_at(&self, u: &[Vec2], i: usize, j: usize) -> Vec2 {
        let t = &self.tensors;
        let g1 = self.g1[j].apply_row(i, |c| u[self.idx(c, j)]);
        let base = self.idx(i, 0);
        let g2 = self.g2[i].apply_row(j, |c| u[base + c]);
        let mut cross = [0.0; 2];
        let (s, w) = self.d1r.row(i);
        for (k, c) in w.iter().enumerate() {
            let ii = s + k;
            let f = mat_vec(&t.n12[self.idx(ii, j)], self.d_s(u, ii, j));
            cross[0] += c * f[0];
            cross[1] += c * f[1];
        }
        let (s, w) = self.d1s.row(j);
        for (k, c) in w.iter().enumerate() {
            let jj = s + k;
            let f = mat_vec(&transpose(&t.n12[self.idx(i, jj)]), self.d_r(u, i, jj));
            cross[0] += c * f[0];
            cross[1] += c * f[1];
        }
        add(add(g1, g2), cross)
    }

    /// `L u` on the given row for every `i`.
    pub fn apply_row(&self, u: &[Vec2], j: usize) -> Vec<Vec2> {
        (0..self.n1()).map(|i| self.apply_at(u, i, j)).collect()
    }

    /// `L u` at all nodes; the ghost row of the output is zero.
    pub fn apply(&self, u: &[Vec2]) -> Result<Vec<Vec2>> {
        if u.len() != self.len() {
            return Err(Error::LengthMismatch { expected: self.len(), got: u.len() });
        }
        let (n1, n2) = (self.n1(), self.n2());
        let stride = n2 + 1;
        let t = &self.tensors;
        // fluxes N12 D_s u and N21 D_r u
        let mut flux_s = vec![[0.0; 2]; u.len()];
        let mut flux_r = vec![[0.0; 2]; u.len()];
        flux_s.par_chunks_mut(stride).zip(flux_r.par_chunks_mut(stride)).enumerate().for_each(|(i, (fs, fr))| {
            for j in 0..n2 {
                let k = self.idx(i, j);
                fs[j] = mat_vec(&t.n12[k], self.d_s(u, i, j));
                fr[j] = mat_vec(&transpose(&t.n12[k]), self.d_r(u, i, j));
            }
        });
        let mut out = vec![[0.0; 2]; u.len()];
        out.par_chunks_mut(stride).enumerate().for_each(|(i, col)| {
            let base = i * stride;
            let (rs, rw) = self.d1r.row(i);
            for j in 0..n2 {
                let g1 = self.g1[j].apply_row(i, |c| u[c * stride + j]);
                let g2 = self.g2[i].apply_row(j, |c| u[base + c]);
                let mut acc = add(g1, g2);
                for (k, c) in rw.iter().enumerate() {
                    let f = flux_s[(rs + k) * stride + j];
                    acc[0] += c * f[0];
                    acc[1] += c * f[1];
                }
                let (ss, sw) = self.d1s.row(j);
                for (k, c) in sw.iter().enumerate() {
                    let f = flux_r[base + ss + k];
                    acc[0] += c * f[0];
                    acc[1] += c * f[1];
                }
                col[j] = acc;
            }
        });
        let _ = n1;
        Ok(out)
    }

    /// Normal flux `N21 D_r u + N22 (du/ds)` at the top row, using the ghost row.
    pub fn traction_top(&self, u: &[Vec2]) -> Vec<Vec2> {
        let j = self.n2() - 1;
        let h = self.block.grid.h2;
        (0..self.n1())
            .map(|i| {
                let k = self.idx(i, j);
                let mut ds = [0.0; 2];
                for (m, c) in BOUNDARY_DERIV_GHOST.iter().enumerate() {
                    let v = u[self.idx(i, j + 1 - m)];
                    ds[0] -= c * v[0] / h;
                    ds[1] -= c * v[1] / h;
                }
                add(mat_vec(&transpose(&self.tensors.n12[k]), self.d_r(u, i, j)), sym_vec(&self.tensors.n22[k], ds))
            })
            .collect()
    }

    /// Normal flux `N21 D_r u + N22 (du/ds)` at the bottom row, one-sided.
    pub fn traction_bottom(&self, u: &[Vec2]) -> Vec<Vec2> {
        let h = self.block.grid.h2;
        (0..self.n1())
            .map(|i| {
                let k = self.idx(i, 0);
                let mut ds = [0.0; 2];
                for (m, c) in BOUNDARY_DERIV.iter().enumerate() {
                    let v = u[self.idx(i, m)];
                    ds[0] += c * v[0] / h;
                    ds[1] += c * v[1] / h;
                }
                add(mat_vec(&transpose(&self.tensors.n12[k]), self.d_r(u, i, 0)), sym_vec(&self.tensors.n22[k], ds))
            })
            .collect()
    }

    /// Ghost-row coefficient in `traction_top`.
    pub fn top_ghost_weight(&self) -> f64 {
        -BOUNDARY_DERIV_GHOST[0] / self.block.grid.h2
    }

    /// Sets the top ghost row so that `traction_top` equals `target`.
    pub fn solve_top_ghost(&self, u: &mut [Vec2], target: &[Vec2]) {
        let j = self.n2() - 1;
        let cg = self.top_ghost_weight();
        let current = self.traction_top(u);
        for i in 0..self.n1() {
            let n = self.tensors.n22[self.idx(i, j)];
            let r = [target[i][0] - current[i][0], target[i][1] - current[i][1]];
            // (cg N22) dg = r
            let det = cg * cg * (n[0] * n[2] - n[1] * n[1]);
            let dg = [cg * (n[2] * r[0] - n[1] * r[1]) / det, cg * (n[0] * r[1] - n[1] * r[0]) / det];
            let k = self.idx(i, j + 1);
            u[k][0] += dg[0];
            u[k][1] += dg[1];
        }
    }

    /// Nodes on the physical boundary carrying Dirichlet data.
    pub fn is_dirichlet(&self, i: usize, j: usize, top_dirichlet: bool) -> bool {
        let (n1, n2) = (self.n1(), self.n2());
        if i == 0 || i == n1 - 1 {
            return j < n2;
        }
        match self.side() {
            Side::Coarse => j == 0,
            Side::Fine => top_dirichlet && j == n2 - 1,
        }
    }

    /// Overwrites Dirichlet nodes with `data(x, y)`.
    pub fn apply_dirichlet(&self, u: &mut [Vec2], top_dirichlet: bool, data: &dyn Fn(f64, f64) -> Vec2) {
        let b = &self.block;
        for i in 0..self.n1() {
            for j in 0..self.n2() {
                if self.is_dirichlet(i, j, top_dirichlet) {
                    let k = self.idx(i, j);
                    u[k] = data(b.x[k], b.y[k]);
                }
            }
        }
    }
}

/// Additive terms entering the interface correction at one time level.
#[derive(Clone, Debug, Default)]
pub struct InterfaceSources {
    /// `J F` on the coarse interface row.
    pub coarse: Vec<Vec2>,
    /// `J F` on the fine interface row.
    pub fine: Vec<Vec2>,
    /// Prescribed accelerations at the two coarse interface corners.
    pub corners: [Vec2; 2],
}

impl InterfaceSources {
    pub fn zero(n_coarse: usize, n_fine: usize) -> Self {
        InterfaceSources { coarse: vec![[0.0; 2]; n_coarse], fine: vec![[0.0; 2]; n_fine], corners: [[0.0; 2]; 2] }
    }
}

/// Both blocks, the interface operators and the factorized ghost system.
#[derive(Clone, Debug)]
pub struct Discretization {
    pub order: Order,
    pub coarse: BlockOps,
    pub fine: BlockOps,
    pub coupling: ScaledCoupling,
    jl_coarse: Vec<f64>,
    jl_fine: Vec<f64>,
    matrix: DMatrix<f64>,
    lu: nalgebra::LU<f64, nalgebra::Dyn, nalgebra::Dyn>,
}

impl Discretization {
    pub fn new(order: Order, coarse: BlockOps, fine: BlockOps) -> Result<Self> {
        let nc = coarse.n1();
        if fine.n1() != 2 * nc - 1 {
            return Err(Error::LengthMismatch { expected: 2 * nc - 1, got: fine.n1() });
        }
        let pair = build_op_pair(order.q(), nc)?;
        let jl_coarse = coarse.block.interface_scaling();
        let jl_fine = fine.block.interface_scaling();
        let coupling = build_scaled(pair, &jl_coarse, &jl_fine)?;
        let dim = 2 * nc;
        let placeholder = DMatrix::<f64>::identity(dim, dim);
        let mut d = Discretization {
            order,
            lu: placeholder.clone().lu(),
            matrix: placeholder,
            coarse,
            fine,
            coupling,
            jl_coarse,
            jl_fine,
        };
        d.assemble_system()?;
        Ok(d)
    }

    pub fn interface_len(&self) -> usize {
        self.coarse.n1()
    }

    /// Interface matrix (ghost unknowns interleaved by component).
    pub fn interface_matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    fn assemble_system(&mut self) -> Result<()> {
        let nc = self.coarse.n1();
        let dim = 2 * nc;
        let jg = self.coarse.n2();
        let zero_src = InterfaceSources::zero(nc, self.fine.n1());
        let fine = vec![[0.0; 2]; self.fine.len()];
        let mut m = DMatrix::<f64>::zeros(dim, dim);
        let cols: Vec<Vec<f64>> = (0..dim)
            .into_par_iter()
            .map(|col| {
                let mut c = vec![[0.0; 2]; self.coarse.len()];
                c[self.coarse.idx(col / 2, jg)][col % 2] = 1.0;
                self.traction_residual(&c, &fine, &zero_src).into_iter().flatten().collect()
            })
            .collect();
        for (col, v) in cols.into_iter().enumerate() {
            for (row, x) in v.into_iter().enumerate() {
                m[(row, col)] = x;
            }
        }
        let scale = m.amax();
        let lu = m.clone().lu();
        let u = lu.u();
        let min_pivot = (0..dim).map(|k| u[(k, k)].abs()).fold(f64::INFINITY, f64::min);
        if !(min_pivot > 1e-12 * scale) {
            return Err(Error::SingularInterfaceMatrix);
        }
        self.matrix = m;
        self.lu = lu;
        Ok(())
    }

    /// Coarse interface accelerations mapped to the fine interface, minus the
    /// fine operator there: the correction added on the fine interface row.
    pub fn eta(&self, c: &[Vec2], f: &[Vec2], src: &InterfaceSources) -> Vec<Vec2> {
        let jc = self.coarse.n2() - 1;
        let nc = self.coarse.n1();
        let lc = self.coarse.apply_row(c, jc);
        let acc: Vec<Vec2> = (0..nc)
            .map(|i| {
                if i == 0 {
                    src.corners[0]
                } else if i == nc - 1 {
                    src.corners[1]
                } else {
                    let jr = self.coarse.tensors.jrho[self.coarse.idx(i, jc)];
                    [(lc[i][0] + src.coarse[i][0]) / jr, (lc[i][1] + src.coarse[i][1]) / jr]
                }
            })
            .collect();
        let mapped = self.coupling.interpolate(&acc);
        let lf = self.fine.apply_row(f, 0);
        (0..self.fine.n1())
            .map(|i| {
                let jr = self.fine.tensors.jrho[self.fine.idx(i, 0)];
                [
                    jr * mapped[i][0] - lf[i][0] - src.fine[i][0],
                    jr * mapped[i][1] - lf[i][1] - src.fine[i][1],
                ]
            })
            .collect()
    }

    fn omega1(&self) -> f64 {
        self.order.norm_boundary()[0]
    }

    /// Scaled mismatch of the traction-continuity condition at the coarse
    /// interface nodes.
    pub fn traction_residual(&self, c: &[Vec2], f: &[Vec2], src: &InterfaceSources) -> Vec<Vec2> {
        let tc = self.coarse.traction_top(c);
        let tf = self.fine.traction_bottom(f);
        let eta = self.eta(c, f, src);
        let hf = self.fine.block.grid.h2;
        let w1 = self.omega1();
        let g: Vec<Vec2> = (0..self.fine.n1())
            .map(|i| {
                let s = 1.0 / self.jl_fine[i];
                [s * (tf[i][0] - hf * w1 * eta[i][0]), s * (tf[i][1] - hf * w1 * eta[i][1])]
            })
            .collect();
        let rg = self.coupling.restrict(&g);
        let hc = self.coarse.block.grid.h2;
        (0..self.coarse.n1())
            .map(|i| {
                let s = 1.0 / self.jl_coarse[i];
                [hc * (s * tc[i][0] - rg[i][0]), hc * (s * tc[i][1] - rg[i][1])]
            })
            .collect()
    }

    /// Updates the coarse ghost row so that traction continuity holds.
    pub fn solve_ghost(&self, c: &mut [Vec2], f: &[Vec2], src: &InterfaceSources) -> Result<()> {
        let r = self.traction_residual(c, f, src);
        let b = DVector::from_iterator(r.len() * 2, r.into_iter().flatten());
        let x = self.lu.solve(&b).ok_or(Error::SingularInterfaceMatrix)?;
        let jg = self.coarse.n2();
        for i in 0..self.coarse.n1() {
            let k = self.coarse.idx(i, jg);
            c[k][0] -= x[2 * i];
            c[k][1] -= x[2 * i + 1];
        }
        Ok(())
    }

    /// Copies the interpolated coarse interface row onto the fine interface row.
    pub fn inject(&self, c: &[Vec2], f: &mut [Vec2]) {
        let jc = self.coarse.n2() - 1;
        let row: Vec<Vec2> = (0..self.coarse.n1()).map(|i| c[self.coarse.idx(i, jc)]).collect();
        for (i, v) in self.coupling.interpolate(&row).into_iter().enumerate() {
            f[self.fine.idx(i, 0)] = v;
        }
    }

    /// Interface scaling `J Lambda` on each side.
    pub fn interface_scaling(&self) -> (&[f64], &[f64]) {
        (&self.jl_coarse, &self.jl_fine)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{Mapping, ReferenceGrid};
    use crate::material::Lame;

    fn curved(order: Order, n: usize) -> Discretization {
        let gc = ReferenceGrid::new(n, n.div_ceil(2), order).unwrap();
        let gf = ReferenceGrid::new(2 * n - 1, n, order).unwrap();
        let c = BlockOps::new(
            order,
            BlockGrid::new(Mapping::topography(Side::Coarse), gc, Side::Coarse).unwrap(),
            &MaterialField::Smooth,
        )
        .unwrap();
        let f = BlockOps::new(order, BlockGrid::new(Mapping::topography(Side::Fine), gf, Side::Fine).unwrap(), &MaterialField::Smooth)
            .unwrap();
        Discretization::new(order, c, f).unwrap()
    }

    fn sample(b: &BlockOps, f: impl Fn(f64, f64) -> Vec2) -> Vec<Vec2> {
        (0..b.len()).map(|k| f(b.block.x[k], b.block.y[k])).collect()
    }

    #[test]
    fn pointwise_and_array_application_agree() {
        let d = curved(Order::Four, 25);
        let u = sample(&d.fine, |x, y| [(x + 0.3).sin() * y.cos(), (0.5 * x * y).cos()]);
        let full = d.fine.apply(&u).unwrap();
        for j in [0, 3, 10, 24] {
            let row = d.fine.apply_row(&u, j);
            for i in 0..d.fine.n1() {
                let a = full[d.fine.idx(i, j)];
                assert!((a[0] - row[i][0]).abs() < 1e-9 * (1.0 + a[0].abs()));
                assert!((a[1] - row[i][1]).abs() < 1e-9 * (1.0 + a[1].abs()));
            }
        }
    }

    #[test]
    fn constants_are_annihilated() {
        let d = curved(Order::Six, 25);
        let u = vec![[1.5, -0.7]; d.coarse.len()];
        let l = d.coarse.apply(&u).unwrap();
        assert!(l.iter().flatten().all(|v| v.abs() < 1e-8));
        let t = d.coarse.traction_top(&u);
        assert!(t.iter().flatten().all(|v| v.abs() < 1e-9));
    }

    #[test]
    fn linear_field_gives_zero_on_affine_constant_block() {
        let order = Order::Four;
        let g = ReferenceGrid::new(13, 13, order).unwrap();
        let blk = BlockGrid::new(Mapping::Rectangle { x0: 0.0, lx: 2.0, y0: 0.0, ly: 3.0 }, g, Side::Fine).unwrap();
        let b = BlockOps::new(order, blk, &MaterialField::Constant(Lame { rho: 1.0, mu: 2.0, lambda: 3.0 })).unwrap();
        let u = sample(&b, |x, y| [x - 2.0 * y, 0.5 * x + y]);
        let l = b.apply(&u).unwrap();
        assert!(l.iter().flatten().all(|v| v.abs() < 1e-10));
    }

    #[test]
    fn ghost_solve_enforces_traction_continuity() {
        let d = curved(Order::Four, 23);
        let mut c = sample(&d.coarse, |x, y| [(x * y).sin(), (x - y).cos()]);
        let mut f = sample(&d.fine, |x, y| [(x * y).sin(), (x - y).cos() + 0.1 * x]);
        d.inject(&c, &mut f);
        let src = InterfaceSources::zero(d.coarse.n1(), d.fine.n1());
        d.solve_ghost(&mut c, &f, &src).unwrap();
        let r = d.traction_residual(&c, &f, &src);
        assert!(r.iter().flatten().all(|v| v.abs() < 1e-11), "{r:?}");
    }
}
