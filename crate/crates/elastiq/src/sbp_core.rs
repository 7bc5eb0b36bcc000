//! One-dimensional summation-by-parts building blocks.
//!
//! All operators here act on a uniform grid with `n` nodes and spacing `h`.
//! Second-derivative operators may carry one ghost value at either end; their
//! rows are then indexed against the extended vector (ghost first on the
//! left, ghost last on the right).

use crate::error::{Error, Result};
use crate::tables::*;

/// Number of boundary-modified rows of the second-derivative closure.
pub const CLOSURE_ROWS: usize = 6;

/// Weight of the fifth-difference term used when converting a boundary row
/// to the ghost-point form. This value removes the dependence of the
/// boundary derivative on the sixth node.
pub const GHOST_BETA: f64 = 0.25;

/// One-sided five-point boundary derivative (unit spacing), node 0 first.
pub const BOUNDARY_DERIV: [f64; 5] = [-25.0 / 12.0, 4.0, -3.0, 4.0 / 3.0, -0.25];

/// Boundary derivative using the ghost value; the first weight multiplies the ghost.
pub const BOUNDARY_DERIV_GHOST: [f64; 5] = [-0.25, -5.0 / 6.0, 1.5, -0.5, 1.0 / 12.0];

const FIFTH_DIFF: [f64; 6] = [-1.0, 5.0, -10.0, 10.0, -5.0, 1.0];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    Four,
    Six,
}

impl Order {
    pub fn from_int(p: u32) -> Result<Self> {
        match p {
            4 => Ok(Order::Four),
            6 => Ok(Order::Six),
            _ => Err(Error::WrongOrder(p)),
        }
    }

    pub fn as_int(self) -> u32 {
        match self {
            Order::Four => 4,
            Order::Six => 6,
        }
    }

    /// Boundary accuracy q of the (2q, q) operator family.
    pub fn q(self) -> usize {
        match self {
            Order::Four => 2,
            Order::Six => 3,
        }
    }

    pub fn min_nodes(self) -> usize {
        2 * CLOSURE_ROWS
    }

    pub fn norm_boundary(self) -> &'static [f64] {
        match self {
            Order::Four => &ORDER4_NORM,
            Order::Six => &ORDER6_NORM,
        }
    }

    fn d1_interior(self) -> &'static [f64] {
        const S4: [f64; 5] = [1.0 / 12.0, -2.0 / 3.0, 0.0, 2.0 / 3.0, -1.0 / 12.0];
        const S6: [f64; 7] = [-1.0 / 60.0, 3.0 / 20.0, -0.75, 0.0, 0.75, -3.0 / 20.0, 1.0 / 60.0];
        match self {
            Order::Four => &S4,
            Order::Six => &S6,
        }
    }

    fn d1_boundary(self) -> Vec<&'static [f64]> {
        match self {
            Order::Four => ORDER4_D1_BOUNDARY.iter().map(|r| &r[..]).collect(),
            Order::Six => ORDER6_D1_BOUNDARY.iter().map(|r| &r[..]).collect(),
        }
    }

    /// (rows, columns, coefficient taps) of the boundary table.
    fn g_shape(self) -> (usize, usize, usize) {
        match self {
            Order::Four => (6, 8, 8),
            Order::Six => (6, 9, 9),
        }
    }

    fn g_boundary(self, i: usize, j: usize, k: usize) -> f64 {
        match self {
            Order::Four => ORDER4_G_BOUNDARY[i][j][k],
            Order::Six => ORDER6_G_BOUNDARY[i][j][k],
        }
    }

    fn g_interior(self) -> &'static [(i32, i32, f64)] {
        match self {
            Order::Four => &ORDER4_G_INTERIOR,
            Order::Six => &ORDER6_G_INTERIOR,
        }
    }

    fn g_half_width(self) -> usize {
        self.q()
    }
}

fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::LengthMismatch { expected, got });
    }
    Ok(())
}

/// Row-sparse matrix where every row has a contiguous support.
#[derive(Clone, Debug, PartialEq)]
pub struct RowStencils {
    ncols: usize,
    start: Vec<usize>,
    ptr: Vec<usize>,
    w: Vec<f64>,
}

impl RowStencils {
    pub fn from_rows<I: IntoIterator<Item = (usize, Vec<f64>)>>(ncols: usize, rows: I) -> Self {
        let mut start = Vec::new();
        let mut ptr = vec![0];
        let mut w = Vec::new();
        for (s, r) in rows {
            debug_assert!(s + r.len() <= ncols);
            start.push(s);
            w.extend_from_slice(&r);
            ptr.push(w.len());
        }
        RowStencils { ncols, start, ptr, w }
    }

    pub fn nrows(&self) -> usize {
        self.start.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// First column and weights of row `i`.
    pub fn row(&self, i: usize) -> (usize, &[f64]) {
        (self.start[i], &self.w[self.ptr[i]..self.ptr[i + 1]])
    }

    pub fn apply_row(&self, i: usize, v: &[f64]) -> f64 {
        let (s, w) = self.row(i);
        w.iter().zip(&v[s..s + w.len()]).map(|(a, b)| a * b).sum()
    }

    pub fn apply(&self, v: &[f64]) -> Result<Vec<f64>> {
        check_len(self.ncols, v.len())?;
        Ok((0..self.nrows()).map(|i| self.apply_row(i, v)).collect())
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        (0..self.nrows())
            .map(|i| {
                let mut r = vec![0.0; self.ncols];
                let (s, w) = self.row(i);
                r[s..s + w.len()].copy_from_slice(w);
                r
            })
            .collect()
    }
}

/// Diagonal SBP norm: `(u, v)_h = h * sum(w_j u_j v_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct NormWeights {
    pub order: Order,
    pub weights: Vec<f64>,
}

pub fn make_norm(order: Order, n: usize) -> Result<NormWeights> {
    if n < order.min_nodes() {
        return Err(Error::GridTooSmall { n, min: order.min_nodes() });
    }
    let b = order.norm_boundary();
    let mut weights = vec![1.0; n];
    for (k, &x) in b.iter().enumerate() {
        weights[k] = x;
        weights[n - 1 - k] = x;
    }
    Ok(NormWeights { order, weights })
}

impl NormWeights {
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn inner(&self, h: f64, u: &[f64], v: &[f64]) -> f64 {
        h * self.weights.iter().zip(u).zip(v).map(|((w, a), b)| w * a * b).sum::<f64>()
    }
}

/// First-derivative SBP operator, `H D + (H D)^T = diag(-1, 0, .., 0, 1)`.
#[derive(Clone, Debug)]
pub struct FirstDeriv {
    pub order: Order,
    pub h: f64,
    rows: RowStencils,
}

impl FirstDeriv {
    pub fn new(order: Order, n: usize, h: f64) -> Result<Self> {
        if n < order.min_nodes() {
            return Err(Error::GridTooSmall { n, min: order.min_nodes() });
        }
        let bnd = order.d1_boundary();
        let st = order.d1_interior();
        let hw = st.len() / 2;
        let nb = bnd.len();
        let rows = (0..n).map(|i| {
            if i < nb {
                (0, bnd[i].iter().map(|c| c / h).collect())
            } else if i >= n - nb {
                let r = bnd[n - 1 - i];
                (n - r.len(), r.iter().rev().map(|c| -c / h).collect())
            } else {
                (i - hw, st.iter().map(|c| c / h).collect())
            }
        });
        Ok(FirstDeriv { order, h, rows: RowStencils::from_rows(n, rows) })
    }

    pub fn len(&self) -> usize {
        self.rows.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.nrows() == 0
    }

    pub fn stencils(&self) -> &RowStencils {
        &self.rows
    }

    pub fn apply(&self, v: &[f64]) -> Result<Vec<f64>> {
        self.rows.apply(v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct GhostEnds {
    pub left: bool,
    pub right: bool,
}

impl GhostEnds {
    pub const NONE: GhostEnds = GhostEnds { left: false, right: false };
    pub const BOTH: GhostEnds = GhostEnds { left: true, right: true };
    pub const RIGHT: GhostEnds = GhostEnds { left: false, right: true };
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum End {
    Left,
    Right,
}

/// Boundary derivative at one end. `v` is the extended vector; when `ghost`
/// is set, its outermost entry at that end is the ghost value.
pub fn boundary_derivative(v: &[f64], h: f64, end: End, ghost: bool) -> Result<f64> {
    if v.len() < 5 {
        return Err(Error::LengthMismatch { expected: 5, got: v.len() });
    }
    let w = if ghost { &BOUNDARY_DERIV_GHOST } else { &BOUNDARY_DERIV };
    let n = v.len();
    Ok(match end {
        End::Left => w.iter().zip(v).map(|(a, b)| a * b).sum::<f64>() / h,
        End::Right => -w.iter().enumerate().map(|(k, a)| a * v[n - 1 - k]).sum::<f64>() / h,
    })
}

/// Variable-coefficient second derivative `d/dx(gamma d/dx)`.
#[derive(Clone, Debug)]
pub struct SecondDeriv {
    pub order: Order,
    pub h: f64,
    pub ghosts: GhostEnds,
    gamma_first: f64,
    gamma_last: f64,
    n: usize,
    rows: RowStencils,
}

impl SecondDeriv {
    pub fn new(order: Order, gamma: &[f64], h: f64, ghosts: GhostEnds) -> Result<Self> {
        let op = Self::without_ghosts(order, gamma, h)?;
        if ghosts == GhostEnds::NONE {
            Ok(op)
        } else {
            Ok(convert_to_ghost(&op, ghosts))
        }
    }

    fn without_ghosts(order: Order, gamma: &[f64], h: f64) -> Result<Self> {
        let n = gamma.len();
        if n < order.min_nodes() {
            return Err(Error::GridTooSmall { n, min: order.min_nodes() });
        }
        let (nr, nc, nk) = order.g_shape();
        let hw = order.g_half_width() as i64;
        let ih2 = 1.0 / (h * h);
        let boundary_row = |i: usize, g: &dyn Fn(usize) -> f64| -> Vec<f64> {
            (0..nc).map(|j| (0..nk).map(|k| order.g_boundary(i, j, k) * g(k)).sum::<f64>() * ih2).collect()
        };
        let rows = (0..n).map(|i| {
            if i < nr {
                (0, boundary_row(i, &|k| gamma[k]))
            } else if i >= n - nr {
                let mut r = boundary_row(n - 1 - i, &|k| gamma[n - 1 - k]);
                r.reverse();
                (n - nc, r)
            } else {
                let mut r = vec![0.0; (2 * hw + 1) as usize];
                for &(j, kk, c) in order.g_interior() {
                    let g = gamma[(i as i64 + kk as i64) as usize];
                    r[(j as i64 + hw) as usize] += c * g * ih2;
                }
                (i - hw as usize, r)
            }
        });
        Ok(SecondDeriv {
            order,
            h,
            ghosts: GhostEnds::NONE,
            gamma_first: gamma[0],
            gamma_last: gamma[n - 1],
            n,
            rows: RowStencils::from_rows(n, rows),
        })
    }

    /// Number of grid nodes (ghosts excluded).
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Length of the vector the operator acts on.
    pub fn ext_len(&self) -> usize {
        self.rows.ncols()
    }

    /// Offset of node 0 inside the extended vector.
    pub fn offset(&self) -> usize {
        self.ghosts.left as usize
    }

    pub fn stencils(&self) -> &RowStencils {
        &self.rows
    }

    pub fn apply(&self, v_ext: &[f64]) -> Result<Vec<f64>> {
        self.rows.apply(v_ext)
    }

    /// Coefficient multiplying the ghost value in the boundary row.
    pub fn ghost_coefficient(&self, end: End) -> Option<f64> {
        match end {
            End::Left if self.ghosts.left => Some(self.rows.row(0).1[0]),
            End::Right if self.ghosts.right => {
                let w = self.rows.row(self.n - 1).1;
                Some(w[w.len() - 1])
            }
            _ => None,
        }
    }

    pub fn boundary_derivative(&self, end: End, v_ext: &[f64]) -> Result<f64> {
        check_len(self.ext_len(), v_ext.len())?;
        let ghost = match end {
            End::Left => self.ghosts.left,
            End::Right => self.ghosts.right,
        };
        boundary_derivative(v_ext, self.h, end, ghost)
    }

    /// Boundary-derivative weights over the extended vector.
    fn boundary_row(&self, end: End) -> Vec<f64> {
        let m = self.ext_len();
        let mut r = vec![0.0; m];
        let ghost = match end {
            End::Left => self.ghosts.left,
            End::Right => self.ghosts.right,
        };
        let w = if ghost { BOUNDARY_DERIV_GHOST } else { BOUNDARY_DERIV };
        for (k, c) in w.iter().enumerate() {
            match end {
                End::Left => r[k] = c / self.h,
                End::Right => r[m - 1 - k] = -c / self.h,
            }
        }
        r
    }
}

/// Replaces the boundary rows of a ghost-free operator so that the boundary
/// derivative in its SBP identity uses one ghost value. Only the outermost
/// row at each converted end changes.
pub fn convert_to_ghost(op: &SecondDeriv, ghosts: GhostEnds) -> SecondDeriv {
    assert_eq!(op.ghosts, GhostEnds::NONE, "operator already has ghost points");
    let n = op.n;
    let off = ghosts.left as usize;
    let ncols = n + off + ghosts.right as usize;
    let w1 = op.order.norm_boundary()[0];
    let h2 = op.h * op.h;
    let rows = (0..n).map(|i| {
        let (s, w) = op.rows.row(i);
        let mut w = w.to_vec();
        let mut s = s + off;
        if i == 0 && ghosts.left {
            // row -= beta/(w1 h^2) * gamma_1 * (fifth difference starting at the ghost)
            let c = GHOST_BETA / (w1 * h2) * op.gamma_first;
            let mut r = vec![0.0; w.len().max(5) + 1];
            r[1..1 + w.len()].copy_from_slice(&w);
            for (k, d) in FIFTH_DIFF.iter().enumerate() {
                r[k] -= c * d;
            }
            w = r;
            s -= 1;
        }
        if i == n - 1 && ghosts.right {
            let c = GHOST_BETA / (w1 * h2) * op.gamma_last;
            let mut r = w.clone();
            r.push(0.0);
            let m = r.len();
            for (k, d) in FIFTH_DIFF.iter().enumerate() {
                r[m - 1 - k] -= c * d;
            }
            w = r;
        }
        (s, w)
    });
    SecondDeriv {
        order: op.order,
        h: op.h,
        ghosts,
        gamma_first: op.gamma_first,
        gamma_last: op.gamma_last,
        n,
        rows: RowStencils::from_rows(ncols, rows),
    }
}

/// Dense representation of the symmetric form `S` in
/// `(u, G v)_h = -S(u, v) - g_1 u_1 b_1 v + g_n u_n b_n v`.
///
/// Ghost values cancel between the operator and the boundary derivative, so
/// the form acts on node values only.
#[derive(Clone, Debug)]
pub struct BilinearForm {
    n: usize,
    m: Vec<f64>,
}

impl BilinearForm {
    pub fn from_operator(op: &SecondDeriv) -> Self {
        let n = op.n;
        let off = op.offset();
        let norm = make_norm(op.order, n).expect("operator already validated its size");
        let dense = op.rows.to_dense();
        let b1 = op.boundary_row(End::Left);
        let bn = op.boundary_row(End::Right);
        let mut m = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut s = -op.h * norm.weights[i] * dense[i][j + off];
                if i == 0 {
                    s -= op.gamma_first * b1[j + off];
                }
                if i == n - 1 {
                    s += op.gamma_last * bn[j + off];
                }
                m[i * n + j] = s;
            }
        }
        BilinearForm { n, m }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.m[i * self.n + j]
    }

    pub fn eval(&self, u: &[f64], v: &[f64]) -> f64 {
        (0..self.n)
            .map(|i| u[i] * (0..self.n).map(|j| self.m[i * self.n + j] * v[j]).sum::<f64>())
            .sum()
    }

    /// Largest |S_ij - S_ji|.
    pub fn asymmetry(&self) -> f64 {
        let mut a: f64 = 0.0;
        for i in 0..self.n {
            for j in 0..i {
                a = a.max((self.entry(i, j) - self.entry(j, i)).abs());
            }
        }
        a
    }

    pub fn min_eigenvalue(&self) -> f64 {
        let n = self.n;
        let sym = nalgebra::DMatrix::from_fn(n, n, |i, j| 0.5 * (self.entry(i, j) + self.entry(j, i)));
        sym.symmetric_eigenvalues().min()
    }
}
