//! Order-preserving interpolation (coarse to fine) and restriction (fine to
//! coarse) along a 1:2 interface, plus the geometry-scaled variants used by
//! the interface conditions.

use crate::error::{Error, Result};
use crate::sbp_core::{make_norm, NormWeights, Order, RowStencils};
use crate::tables::*;

/// Interpolation `p` (n_fine x n_coarse) with its compatible restriction `r`.
#[derive(Clone, Debug)]
pub struct OpPair {
    pub q: usize,
    pub n_coarse: usize,
    pub n_fine: usize,
    pub p: RowStencils,
    pub r: RowStencils,
    pub w_coarse: NormWeights,
    pub w_fine: NormWeights,
}

fn order_for_q(q: usize) -> Result<Order> {
    match q {
        2 => Ok(Order::Four),
        3 => Ok(Order::Six),
        _ => Err(Error::WrongOrder(2 * q as u32)),
    }
}

fn stencil_tables(q: usize) -> (&'static [f64], &'static [f64], Vec<&'static [f64]>) {
    match q {
        2 => (&OP2_EVEN, &OP2_ODD, OP2_BOUNDARY.iter().map(|r| &r[..]).collect()),
        _ => (&OP3_EVEN, &OP3_ODD, OP3_BOUNDARY.iter().map(|r| &r[..]).collect()),
    }
}

/// Smallest coarse node count the edge closures of the given pair fit on.
pub fn min_coarse_nodes(q: usize) -> usize {
    let (_, _, blk) = stencil_tables(q);
    (2 * blk[0].len()).max(Order::Four.min_nodes())
}

pub fn build_op_pair(q: usize, n_coarse: usize) -> Result<OpPair> {
    let order = order_for_q(q)?;
    let min = min_coarse_nodes(q);
    if n_coarse < min {
        return Err(Error::GridTooSmall { n: n_coarse, min });
    }
    let nc = n_coarse;
    let nf = 2 * nc - 1;
    let (even, odd, blk) = stencil_tables(q);
    let nb = blk.len();
    let bw = blk[0].len();
    let interior = |i: usize| -> (usize, Vec<f64>) {
        let j = i / 2;
        if i.is_multiple_of(2) {
            (j - q, even.to_vec())
        } else {
            (j + 1 - q, odd.to_vec())
        }
    };
    let prow: Vec<(usize, Vec<f64>)> = (0..nf)
        .map(|i| {
            if i < nb {
                (0, blk[i].to_vec())
            } else if i >= nf - nb {
                let mut w = blk[nf - 1 - i].to_vec();
                w.reverse();
                (nc - bw, w)
            } else {
                interior(i)
            }
        })
        .collect();
    let p = RowStencils::from_rows(nc, prow);
    let w_coarse = make_norm(order, nc)?;
    let w_fine = make_norm(order, nf)?;
    let r = restriction_from(&p, &w_coarse, &w_fine);
    Ok(OpPair { q, n_coarse: nc, n_fine: nf, p, r, w_coarse, w_fine })
}

/// `R = W_c^{-1} P^T W_f / 2`, the restriction compatible with `P`.
fn restriction_from(p: &RowStencils, wc: &NormWeights, wf: &NormWeights) -> RowStencils {
    let nc = p.ncols();
    let nf = p.nrows();
    let mut cols: Vec<Vec<(usize, f64)>> = vec![Vec::new(); nc];
    for i in 0..nf {
        let (s, w) = p.row(i);
        for (k, &c) in w.iter().enumerate() {
            if c != 0.0 {
                cols[s + k].push((i, c * wf.weights[i] / (2.0 * wc.weights[s + k])));
            }
        }
    }
    let rows = cols.into_iter().map(|entries| {
        let lo = entries.iter().map(|e| e.0).min().unwrap_or(0);
        let hi = entries.iter().map(|e| e.0).max().unwrap_or(0);
        let mut w = vec![0.0; hi - lo + 1];
        for (i, c) in entries {
            w[i - lo] = c;
        }
        (lo, w)
    });
    RowStencils::from_rows(nf, rows)
}

impl OpPair {
    pub fn interpolate(&self, vc: &[f64]) -> Result<Vec<f64>> {
        self.p.apply(vc)
    }

    pub fn restrict(&self, vf: &[f64]) -> Result<Vec<f64>> {
        self.r.apply(vf)
    }

    /// Replaces `r`; used to probe the compatibility diagnostic.
    pub fn with_restriction(mut self, r: RowStencils) -> Self {
        self.r = r;
        self
    }
}

/// Largest entry of `h P^T W_f - 2h W_c R` with `h` the fine spacing.
pub fn check_compatibility(p: &RowStencils, r: &RowStencils, wf: &NormWeights, wc: &NormWeights, h: f64) -> f64 {
    let pd = p.to_dense();
    let rd = r.to_dense();
    let mut worst: f64 = 0.0;
    for j in 0..p.ncols() {
        for i in 0..p.nrows() {
            let lhs = h * pd[i][j] * wf.weights[i];
            let rhs = 2.0 * h * wc.weights[j] * rd[j][i];
            worst = worst.max((lhs - rhs).abs());
        }
    }
    worst
}

/// Interface operators scaled by `sqrt(J Lambda)` on each side, acting on
/// component-interleaved 2-vectors.
#[derive(Clone, Debug)]
pub struct ScaledCoupling {
    pub pair: OpPair,
    sqrt_fine: Vec<f64>,
    sqrt_coarse: Vec<f64>,
}

pub fn build_scaled(pair: OpPair, jl_coarse: &[f64], jl_fine: &[f64]) -> Result<ScaledCoupling> {
    if jl_coarse.len() != pair.n_coarse {
        return Err(Error::LengthMismatch { expected: pair.n_coarse, got: jl_coarse.len() });
    }
    if jl_fine.len() != pair.n_fine {
        return Err(Error::LengthMismatch { expected: pair.n_fine, got: jl_fine.len() });
    }
    let root = |v: &[f64]| -> Result<Vec<f64>> {
        v.iter()
            .enumerate()
            .map(|(k, &x)| if x > 0.0 && x.is_finite() { Ok(x.sqrt()) } else { Err(Error::NonPositiveScaling(k)) })
            .collect()
    };
    Ok(ScaledCoupling { sqrt_coarse: root(jl_coarse)?, sqrt_fine: root(jl_fine)?, pair })
}

impl ScaledCoupling {
    pub fn n_coarse(&self) -> usize {
        self.pair.n_coarse
    }

    pub fn n_fine(&self) -> usize {
        self.pair.n_fine
    }

    /// Scaled interpolation of coarse interface values.
    pub fn interpolate(&self, uc: &[[f64; 2]]) -> Vec<[f64; 2]> {
        let p = &self.pair.p;
        (0..p.nrows())
            .map(|i| {
                let (s, w) = p.row(i);
                let mut acc = [0.0; 2];
                for (k, c) in w.iter().enumerate() {
                    let sc = c * self.sqrt_coarse[s + k];
                    acc[0] += sc * uc[s + k][0];
                    acc[1] += sc * uc[s + k][1];
                }
                let d = self.sqrt_fine[i];
                [acc[0] / d, acc[1] / d]
            })
            .collect()
    }

    /// Scaled restriction of fine interface values.
    pub fn restrict(&self, uf: &[[f64; 2]]) -> Vec<[f64; 2]> {
        let r = &self.pair.r;
        (0..r.nrows())
            .map(|j| {
                let (s, w) = r.row(j);
                let mut acc = [0.0; 2];
                for (k, c) in w.iter().enumerate() {
                    let sc = c * self.sqrt_fine[s + k];
                    acc[0] += sc * uf[s + k][0];
                    acc[1] += sc * uf[s + k][1];
                }
                let d = self.sqrt_coarse[j];
                [acc[0] / d, acc[1] / d]
            })
            .collect()
    }

    /// Interface inner product on the fine side, `h1 sum w J Lambda u.v`.
    pub fn inner_fine(&self, h1: f64, u: &[[f64; 2]], v: &[[f64; 2]]) -> f64 {
        side_inner(h1, &self.pair.w_fine.weights, &self.sqrt_fine, u, v)
    }

    /// Interface inner product on the coarse side with spacing `h1`.
    pub fn inner_coarse(&self, h1: f64, u: &[[f64; 2]], v: &[[f64; 2]]) -> f64 {
        side_inner(h1, &self.pair.w_coarse.weights, &self.sqrt_coarse, u, v)
    }
}

fn side_inner(h: f64, w: &[f64], root: &[f64], u: &[[f64; 2]], v: &[[f64; 2]]) -> f64 {
    h * (0..w.len()).map(|i| w[i] * root[i] * root[i] * (u[i][0] * v[i][0] + u[i][1] * v[i][1])).sum::<f64>()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_are_reproduced() {
        for q in [2, 3] {
            let pair = build_op_pair(q, 25).unwrap();
            let f = pair.interpolate(&[1.0; 25]).unwrap();
            assert!(f.iter().all(|v| (v - 1.0).abs() < 1e-12));
            let c = pair.restrict(&vec![1.0; 49]).unwrap();
            assert!(c.iter().all(|v| (v - 1.0).abs() < 1e-12));
        }
    }

    #[test]
    fn centered_rows_reproduce_cubics() {
        let pair = build_op_pair(2, 31).unwrap();
        let hc = 1.0 / 30.0;
        let cubic = |x: f64| 1.0 - 2.0 * x + 0.5 * x * x * x;
        let vc: Vec<f64> = (0..31).map(|j| cubic(j as f64 * hc)).collect();
        let vf = pair.interpolate(&vc).unwrap();
        for (i, v) in vf.iter().enumerate().take(50).skip(10) {
            assert!((v - cubic(i as f64 * hc / 2.0)).abs() < 1e-13);
        }
    }

    #[test]
    fn compatibility_residual_is_round_off() {
        for q in [2, 3] {
            let pair = build_op_pair(q, 41).unwrap();
            let h = 1.0 / (pair.n_fine - 1) as f64;
            let res = check_compatibility(&pair.p, &pair.r, &pair.w_fine, &pair.w_coarse, h);
            assert!(res < 1e-13, "q={q} residual {res}");
        }
    }

    #[test]
    fn perturbed_restriction_is_detected() {
        let pair = build_op_pair(2, 21).unwrap();
        let mut dense = pair.r.to_dense();
        dense[10][20] += 1e-3;
        let r = RowStencils::from_rows(pair.n_fine, dense.into_iter().map(|row| (0, row)));
        let h = 1.0 / (pair.n_fine - 1) as f64;
        let res = check_compatibility(&pair.p, &r, &pair.w_fine, &pair.w_coarse, h);
        assert!((res - 2.0 * h * 1e-3).abs() < 1e-12);
    }
}
