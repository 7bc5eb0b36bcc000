//! Reference grids, curvilinear mappings and their metric terms.
//!
//! Node `(i, j)` has reference coordinates `(i h1, j h2)` with `j` running
//! along `s`. Every block stores one extra row `j = n2` above its top edge;
//! on the coarse block it holds the interface ghost values, on the fine
//! block the ghost values of a traction boundary. Node arrays therefore use
//! the stride `n2 + 1`.

use crate::error::{Error, Result};
use crate::sbp_core::Order;
use std::f64::consts::PI;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReferenceGrid {
    pub n1: usize,
    pub n2: usize,
    pub h1: f64,
    pub h2: f64,
}

impl ReferenceGrid {
    pub fn new(n1: usize, n2: usize, order: Order) -> Result<Self> {
        let min = order.min_nodes();
        for n in [n1, n2] {
            if n < min {
                return Err(Error::GridTooSmall { n, min });
            }
        }
        Ok(ReferenceGrid { n1, n2, h1: 1.0 / (n1 - 1) as f64, h2: 1.0 / (n2 - 1) as f64 })
    }

    /// Row stride of node arrays, including the top ghost row.
    pub fn stride(&self) -> usize {
        self.n2 + 1
    }

    pub fn idx(&self, i: usize, j: usize) -> usize {
        i * (self.n2 + 1) + j
    }

    pub fn len_with_ghost(&self) -> usize {
        self.n1 * (self.n2 + 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Coarse,
    Fine,
}

impl Side {
    /// Reference row of the interface: top of the coarse block, bottom of the fine one.
    pub fn interface_row(self, n2: usize) -> usize {
        match self {
            Side::Coarse => n2 - 1,
            Side::Fine => 0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Side::Coarse => "coarse",
            Side::Fine => "fine",
        }
    }
}

/// Partial derivatives of the map `(r, s) -> (x, y)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Partials {
    pub x_r: f64,
    pub x_s: f64,
    pub y_r: f64,
    pub y_s: f64,
}

/// Built-in smooth mappings of the unit square.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Mapping {
    /// `(x0 + lx r, y0 + ly s)`.
    Rectangle { x0: f64, lx: f64, y0: f64, ly: f64 },
    /// Width `2 pi`, bounded below and above by two of the curved surfaces
    /// `bottom`, `interface` and `top` of the topography test geometry.
    Topography { lower: Surface, upper: Surface },
}

/// Curves `y = theta(r)` bounding the topography blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Surface {
    Bottom,
    Interface,
    Top,
}

impl Surface {
    fn eval(self, r: f64) -> (f64, f64) {
        match self {
            Surface::Interface => (PI + 0.2 * (4.0 * PI * r).sin(), 0.8 * PI * (4.0 * PI * r).cos()),
            Surface::Bottom => gaussian_bump(0.0, 0.6, r),
            Surface::Top => gaussian_bump(2.0 * PI, 0.5, r),
        }
    }
}

fn gaussian_bump(base: f64, center: f64, r: f64) -> (f64, f64) {
    let d = r - center;
    let e = 0.2 * (-d * d / 0.04).exp();
    (base + e, -e * 2.0 * d / 0.04)
}

impl Mapping {
    pub fn unit_square() -> Self {
        Mapping::Rectangle { x0: 0.0, lx: 1.0, y0: 0.0, ly: 1.0 }
    }

    pub fn topography(side: Side) -> Self {
        match side {
            Side::Coarse => Mapping::Topography { lower: Surface::Bottom, upper: Surface::Interface },
            Side::Fine => Mapping::Topography { lower: Surface::Interface, upper: Surface::Top },
        }
    }

    pub fn eval(&self, r: f64, s: f64) -> (f64, f64) {
        match *self {
            Mapping::Rectangle { x0, lx, y0, ly } => (x0 + lx * r, y0 + ly * s),
            Mapping::Topography { lower, upper } => {
                let (lo, _) = lower.eval(r);
                let (hi, _) = upper.eval(r);
                (2.0 * PI * r, s * hi + (1.0 - s) * lo)
            }
        }
    }

    pub fn partials(&self, r: f64, s: f64) -> Partials {
        match *self {
            Mapping::Rectangle { lx, ly, .. } => Partials { x_r: lx, x_s: 0.0, y_r: 0.0, y_s: ly },
            Mapping::Topography { lower, upper } => {
                let (lo, dlo) = lower.eval(r);
                let (hi, dhi) = upper.eval(r);
                Partials { x_r: 2.0 * PI, x_s: 0.0, y_r: s * dhi + (1.0 - s) * dlo, y_s: hi - lo }
            }
        }
    }
}

/// Inverse metric derivatives and Jacobian at every node (ghost row included).
#[derive(Clone, Debug)]
pub struct MetricData {
    /// dr/dx
    pub xi11: Vec<f64>,
    /// ds/dx
    pub xi12: Vec<f64>,
    /// dr/dy
    pub xi21: Vec<f64>,
    /// ds/dy
    pub xi22: Vec<f64>,
    pub jac: Vec<f64>,
    /// |grad s| along the interface row, indexed by `i`.
    pub lambda: Vec<f64>,
}

pub fn build_metrics(mapping: &Mapping, grid: &ReferenceGrid, side: Side) -> Result<MetricData> {
    let len = grid.len_with_ghost();
    let mut m = MetricData {
        xi11: vec![0.0; len],
        xi12: vec![0.0; len],
        xi21: vec![0.0; len],
        xi22: vec![0.0; len],
        jac: vec![0.0; len],
        lambda: vec![0.0; grid.n1],
    };
    let jf = side.interface_row(grid.n2);
    for i in 0..grid.n1 {
        for j in 0..=grid.n2 {
            let p = mapping.partials(i as f64 * grid.h1, j as f64 * grid.h2);
            let jac = p.x_r * p.y_s - p.x_s * p.y_r;
            if !(jac > 0.0) {
                return Err(Error::NonPositiveJacobian { i, j });
            }
            let k = grid.idx(i, j);
            m.jac[k] = jac;
            m.xi11[k] = p.y_s / jac;
            m.xi21[k] = -p.x_s / jac;
            m.xi12[k] = -p.y_r / jac;
            m.xi22[k] = p.x_r / jac;
            if j == jf {
                m.lambda[i] = m.xi12[k].hypot(m.xi22[k]);
            }
        }
    }
    Ok(m)
}

/// One block of the two-block domain.
#[derive(Clone, Debug)]
pub struct BlockGrid {
    pub grid: ReferenceGrid,
    pub mapping: Mapping,
    pub metrics: MetricData,
    pub side: Side,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
}

impl BlockGrid {
    pub fn new(mapping: Mapping, grid: ReferenceGrid, side: Side) -> Result<Self> {
        let metrics = build_metrics(&mapping, &grid, side)?;
        let len = grid.len_with_ghost();
        let (mut x, mut y) = (vec![0.0; len], vec![0.0; len]);
        for i in 0..grid.n1 {
            for j in 0..=grid.n2 {
                let (a, b) = mapping.eval(i as f64 * grid.h1, j as f64 * grid.h2);
                let k = grid.idx(i, j);
                x[k] = a;
                y[k] = b;
            }
        }
        Ok(BlockGrid { grid, mapping, metrics, side, x, y })
    }

    pub fn interface_row(&self) -> usize {
        self.side.interface_row(self.grid.n2)
    }

    /// Unit normal on the interface pointing out of this block.
    pub fn outward_normal(&self, i: usize, j: usize) -> Result<[f64; 2]> {
        if j != self.interface_row() || i >= self.grid.n1 {
            return Err(Error::NotOnInterface { i, j });
        }
        let k = self.grid.idx(i, j);
        let (sx, sy) = (self.metrics.xi12[k], self.metrics.xi22[k]);
        let sign = match self.side {
            Side::Coarse => 1.0,
            Side::Fine => -1.0,
        };
        let l = sx.hypot(sy);
        Ok([sign * sx / l, sign * sy / l])
    }

    /// `J Lambda` along the interface row.
    pub fn interface_scaling(&self) -> Vec<f64> {
        let j = self.interface_row();
        (0..self.grid.n1).map(|i| self.metrics.jac[self.grid.idx(i, j)] * self.metrics.lambda[i]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rectangle_metrics() {
        let g = ReferenceGrid::new(13, 13, Order::Four).unwrap();
        let map = Mapping::Rectangle { x0: 0.0, lx: 2.0 * PI, y0: 0.0, ly: 4.0 * PI };
        let m = build_metrics(&map, &g, Side::Fine).unwrap();
        for k in 0..g.len_with_ghost() {
            assert!((m.jac[k] - 8.0 * PI * PI).abs() < 1e-12);
            assert!((m.xi11[k] - 0.5 / PI).abs() < 1e-15);
            assert!((m.xi22[k] - 0.25 / PI).abs() < 1e-15);
            assert_eq!(m.xi12[k], 0.0);
            assert_eq!(m.xi21[k], 0.0);
        }
    }

    #[test]
    fn flat_interface_normals() {
        let g = ReferenceGrid::new(13, 13, Order::Four).unwrap();
        let c = BlockGrid::new(Mapping::Rectangle { x0: 0.0, lx: 2.0 * PI, y0: -4.0 * PI, ly: 4.0 * PI }, g, Side::Coarse)
            .unwrap();
        let f = BlockGrid::new(Mapping::Rectangle { x0: 0.0, lx: 2.0 * PI, y0: 0.0, ly: 4.0 * PI }, g, Side::Fine).unwrap();
        assert_eq!(c.outward_normal(3, 12).unwrap(), [0.0, 1.0]);
        assert_eq!(f.outward_normal(3, 0).unwrap(), [0.0, -1.0]);
        assert!(c.outward_normal(3, 5).is_err());
        assert!((c.metrics.lambda[0] - 0.25 / PI).abs() < 1e-15);
    }

    #[test]
    fn small_grid_rejected() {
        assert!(ReferenceGrid::new(10, 20, Order::Four).is_err());
    }
}
