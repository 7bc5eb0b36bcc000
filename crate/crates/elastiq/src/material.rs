//! Isotropic materials and the 2x2 coefficient blocks of the elastic
//! operator in reference coordinates.

use crate::error::{Error, Result};
use crate::grid::BlockGrid;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Lame {
    pub rho: f64,
    pub mu: f64,
    pub lambda: f64,
}

/// Named material fields, evaluated in physical coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MaterialField {
    Constant(Lame),
    /// Smooth field of the manufactured-solution test.
    Smooth,
    /// Upper block of the energy test.
    EnergyFine,
    /// Lower block of the energy test.
    EnergyCoarse,
}

impl MaterialField {
    pub fn eval(&self, x: f64, y: f64) -> Lame {
        let s3 = (3.0 * y).sin();
        match *self {
            MaterialField::Constant(l) => l,
            MaterialField::Smooth => Lame {
                rho: 2.0 + (x + 0.3).sin() * (y - 0.2).sin(),
                mu: 3.0 + (3.0 * x + 0.1).sin() * y.sin(),
                lambda: 21.0 + (x + 0.1).cos() * s3 * s3,
            },
            MaterialField::EnergyFine => Lame {
                rho: 4.0 + (x + 0.3).sin() * (y - 0.2).sin(),
                mu: 3.0 + (3.0 * x + 0.1).sin() * y.sin(),
                lambda: 15.0 + (x + 0.1).cos() * s3 * s3,
            },
            MaterialField::EnergyCoarse => Lame {
                rho: 2.0 + (4.0 * x + 0.3).sin() * (y - 0.2).sin(),
                mu: 3.0 + (3.0 * x + 0.1).sin() * (2.0 * y).sin(),
                lambda: 21.0 + (x + 0.1).cos() * s3 * s3,
            },
        }
    }

    /// Scales both Lame parameters by `a`, keeping the density.
    pub fn scaled_moduli(&self, a: f64) -> Option<MaterialField> {
        match *self {
            MaterialField::Constant(l) => Some(MaterialField::Constant(Lame { rho: l.rho, mu: a * l.mu, lambda: a * l.lambda })),
            _ => None,
        }
    }
}

/// Symmetric 2x2 matrix stored as `[a00, a01, a11]`.
pub type Sym2 = [f64; 3];
pub type Mat2 = [[f64; 2]; 2];

/// Cartesian stiffness blocks `M_il`, with `(M_il)_ab = C_{a i b l}`.
pub fn cartesian_blocks(l: &Lame) -> [[Mat2; 2]; 2] {
    let (mu, la) = (l.mu, l.lambda);
    let m11 = [[2.0 * mu + la, 0.0], [0.0, mu]];
    let m12 = [[0.0, la], [mu, 0.0]];
    let m21 = [[0.0, mu], [la, 0.0]];
    let m22 = [[mu, 0.0], [0.0, 2.0 * mu + la]];
    [[m11, m12], [m21, m22]]
}

/// Per-node coefficient blocks of the operator in reference coordinates.
///
/// `(N_kj)_ab = J sum_{i,l} (dr_k/dx_i) (M_il)_ab (dr_j/dx_l)`, so the
/// reference flux in direction `k` is `sum_j N_kj d(u)/dr_j`.
#[derive(Clone, Debug)]
pub struct MaterialTensors {
    pub n11: Vec<Sym2>,
    pub n22: Vec<Sym2>,
    /// `N21 = N12^T`.
    pub n12: Vec<Mat2>,
    pub rho: Vec<f64>,
    /// `J rho`
    pub jrho: Vec<f64>,
    pub lame: Vec<Lame>,
}

impl MaterialTensors {
    pub fn n21(&self, k: usize) -> Mat2 {
        let m = self.n12[k];
        [[m[0][0], m[1][0]], [m[0][1], m[1][1]]]
    }
}

fn sym_is_pd(a: &Sym2) -> bool {
    a[0] > 0.0 && a[0] * a[2] - a[1] * a[1] > 0.0
}

pub fn assemble_tensors(material: &MaterialField, block: &BlockGrid) -> Result<MaterialTensors> {
    let g = &block.grid;
    let m = &block.metrics;
    let len = g.len_with_ghost();
    let mut t = MaterialTensors {
        n11: vec![[0.0; 3]; len],
        n22: vec![[0.0; 3]; len],
        n12: vec![[[0.0; 2]; 2]; len],
        rho: vec![0.0; len],
        jrho: vec![0.0; len],
        lame: Vec::with_capacity(len),
    };
    for k in 0..len {
        let l = material.eval(block.x[k], block.y[k]);
        if !(l.rho > 0.0 && l.mu > 0.0 && l.lambda >= 0.0) {
            return Err(Error::IndefiniteTensor { i: k / g.stride(), j: k % g.stride() });
        }
        let cm = cartesian_blocks(&l);
        // xi[k][i] = dr_k/dx_i
        let xi = [[m.xi11[k], m.xi21[k]], [m.xi12[k], m.xi22[k]]];
        let nkj = |a: usize, b: usize| -> Mat2 {
            let mut out = [[0.0; 2]; 2];
            for (i, row) in cm.iter().enumerate() {
                for (l2, blk) in row.iter().enumerate() {
                    let c = m.jac[k] * xi[a][i] * xi[b][l2];
                    for p in 0..2 {
                        for q in 0..2 {
                            out[p][q] += c * blk[p][q];
                        }
                    }
                }
            }
            out
        };
        let n11 = nkj(0, 0);
        let n22 = nkj(1, 1);
        t.n11[k] = [n11[0][0], n11[0][1], n11[1][1]];
        t.n22[k] = [n22[0][0], n22[0][1], n22[1][1]];
        t.n12[k] = nkj(0, 1);
        if !(sym_is_pd(&t.n11[k]) && sym_is_pd(&t.n22[k])) {
            return Err(Error::IndefiniteTensor { i: k / g.stride(), j: k % g.stride() });
        }
        t.rho[k] = l.rho;
        t.jrho[k] = l.rho * m.jac[k];
        t.lame.push(l);
    }
    Ok(t)
}

/// `(1/rho) [[tr N11, tr N12], [tr N21, tr N22]]` at node `k`.
pub fn local_speed_matrix(t: &MaterialTensors, k: usize) -> Mat2 {
    let tr12 = t.n12[k][0][0] + t.n12[k][1][1];
    let r = 1.0 / t.rho[k];
    [[r * (t.n11[k][0] + t.n11[k][2]), r * tr12], [r * tr12, r * (t.n22[k][0] + t.n22[k][2])]]
}

/// Eigenvalues of a 2x2 matrix with real spectrum, ascending.
pub fn eig2(a: &Mat2) -> [f64; 2] {
    let tr = a[0][0] + a[1][1];
    let half_diff = 0.5 * (a[0][0] - a[1][1]);
    let disc = (half_diff * half_diff + a[0][1] * a[1][0]).max(0.0).sqrt();
    [0.5 * tr - disc, 0.5 * tr + disc]
}
