//! Closed-form reference solutions: the interface (Stoneley) wave between
//! two half-planes and the smooth manufactured solution with its forcing.

use crate::discretization::Vec2;
use crate::error::{Error, Result};
use crate::grid::Side;
use crate::material::{Lame, MaterialField};
use crate::timestepper::Problem;
use num_complex::Complex64 as C64;

/// Materials of the two half-planes: `upper` is `y >= 0` (fine block).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StoneleyParams {
    pub upper: Lame,
    pub lower: Lame,
}

impl StoneleyParams {
    /// One of the four tabulated parameter sets, selected by the shear
    /// modulus of the upper medium (1, 0.1, 0.01 or 0.001).
    pub fn table_row(mu: f64) -> Self {
        StoneleyParams {
            upper: Lame { rho: 1.0, mu, lambda: 1.0 },
            lower: Lame { rho: 1.9999, mu: 2.0 * mu, lambda: 2.0 },
        }
    }

    pub fn table_mus() -> [f64; 4] {
        [1.0, 0.1, 0.01, 0.001]
    }

    fn speeds(l: &Lame) -> (f64, f64) {
        (((l.lambda + 2.0 * l.mu) / l.rho).sqrt(), (l.mu / l.rho).sqrt())
    }

    /// Largest wave speed, the upper end of the root search.
    pub fn max_speed(&self) -> f64 {
        let (a, b) = Self::speeds(&self.upper);
        let (c, d) = Self::speeds(&self.lower);
        a.max(b).max(c).max(d)
    }
}

fn radical(c: f64, speed: f64) -> C64 {
    C64::new(1.0 - (c / speed).powi(2), 0.0).sqrt()
}

/// Decay factors `(gamma, eta)` of the pressure and shear parts.
fn decay(c: f64, l: &Lame) -> (C64, C64) {
    let (a, b) = StoneleyParams::speeds(l);
    (radical(c, a), radical(c, b))
}

/// The 4x4 interface matrix acting on `(A_upper, B_upper, A_lower, B_lower)`.
pub fn interface_matrix(p: &StoneleyParams, c: f64) -> [[C64; 4]; 4] {
    let (gf, ef) = decay(c, &p.upper);
    let (gc, ec) = decay(c, &p.lower);
    let (rf, rc) = (p.upper.rho, p.lower.rho);
    let (mf, mc) = (p.upper.mu, p.lower.mu);
    let one = C64::new(1.0, 0.0);
    let re = |x: f64| C64::new(x, 0.0);
    [
        [one, -ef, -one, -ec],
        [gf, -one, gc, one],
        [re(-rf * c * c + 2.0 * mf), -ef * (2.0 * mf), re(rc * c * c - 2.0 * mc), -ec * (2.0 * mc)],
        [-gf * (2.0 * mf), re(mf * (2.0 - c * c * rf / mf)), -gc * (2.0 * mc), re(-mc * (2.0 - c * c * rc / mc))],
    ]
}

fn det3(m: [[C64; 3]; 3]) -> C64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn minor(m: &[[C64; 4]; 4], r: usize, c: usize) -> [[C64; 3]; 3] {
    let mut out = [[C64::new(0.0, 0.0); 3]; 3];
    for (oi, i) in (0..4).filter(|&i| i != r).enumerate() {
        for (oj, j) in (0..4).filter(|&j| j != c).enumerate() {
            out[oi][oj] = m[i][j];
        }
    }
    out
}

pub fn det4(m: &[[C64; 4]; 4]) -> C64 {
    (0..4).map(|j| m[0][j] * det3(minor(m, 0, j)) * if j % 2 == 0 { 1.0 } else { -1.0 }).sum()
}

fn matrix_scale(m: &[[C64; 4]; 4]) -> f64 {
    m.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Smallest root of the interface determinant in `(1e-6, max speed)`.
///
/// The interval is scanned at 10^4 points for a sign change of the real part
/// where the determinant is real, then bisected.
pub fn stoneley_phase_velocity(p: &StoneleyParams) -> Result<f64> {
    let (lo, hi) = (1e-6, p.max_speed());
    let samples = 10_000;
    let eval = |c: f64| det4(&interface_matrix(p, c));
    let mut scan = Vec::with_capacity(samples + 1);
    let mut prev: Option<(f64, f64)> = None;
    for k in 0..=samples {
        let c = lo + (hi - lo) * k as f64 / samples as f64;
        let m = interface_matrix(p, c);
        let d = det4(&m);
        scan.push((c, d.norm()));
        let real = d.im.abs() <= 1e-12 * matrix_scale(&m).powi(4);
        if !real {
            prev = None;
            continue;
        }
        if let Some((c0, d0)) = prev {
            if d0 == 0.0 {
                return Ok(c0);
            }
            if d0.signum() != d.re.signum() {
                let (mut a, mut b, mut fa) = (c0, c, d0);
                for _ in 0..200 {
                    let m = 0.5 * (a + b);
                    if m <= a || m >= b {
                        break;
                    }
                    let fm = eval(m).re;
                    if fm == 0.0 {
                        return Ok(m);
                    }
                    if fm.signum() == fa.signum() {
                        a = m;
                        fa = fm;
                    } else {
                        b = m;
                    }
                }
                return Ok(0.5 * (a + b));
            }
        }
        prev = Some((c, d.re));
    }
    let stride = (scan.len() / 100).max(1);
    Err(Error::NoRootFound { lo, hi, scan: scan.into_iter().step_by(stride).collect() })
}

/// Amplitudes of the interface wave with the upper pressure amplitude fixed to 1.
#[derive(Clone, Copy, Debug)]
pub struct StoneleyMode {
    pub params: StoneleyParams,
    pub phase_velocity: f64,
    /// `(A_upper, B_upper, A_lower, B_lower)`
    pub amplitudes: [C64; 4],
    /// `|D m| / |D|`
    pub residual: f64,
}

impl StoneleyMode {
    pub fn period(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.phase_velocity
    }
}

pub fn stoneley_mode(p: &StoneleyParams, c: f64) -> Result<StoneleyMode> {
    let m = interface_matrix(p, c);
    let scale = matrix_scale(&m);
    let mut best: Option<([C64; 4], f64)> = None;
    for skip in 0..4 {
        let rows: Vec<usize> = (0..4).filter(|&r| r != skip).collect();
        let a = |r: usize, k: usize| m[rows[r]][k + 1];
        let sys = [[a(0, 0), a(0, 1), a(0, 2)], [a(1, 0), a(1, 1), a(1, 2)], [a(2, 0), a(2, 1), a(2, 2)]];
        let det = det3(sys);
        if det.norm() == 0.0 {
            continue;
        }
        let rhs = [-m[rows[0]][0], -m[rows[1]][0], -m[rows[2]][0]];
        let mut x = [C64::new(0.0, 0.0); 3];
        for (col, xc) in x.iter_mut().enumerate() {
            let mut s = sys;
            for r in 0..3 {
                s[r][col] = rhs[r];
            }
            *xc = det3(s) / det;
        }
        let v = [C64::new(1.0, 0.0), x[0], x[1], x[2]];
        let res = residual_of(&m, &v) / scale;
        if best.is_none_or(|b| res < b.1) {
            best = Some((v, res));
        }
    }
    let (amplitudes, residual) = best.ok_or(Error::DegenerateNullspace(f64::INFINITY))?;
    if !(residual < 1e-9) {
        return Err(Error::DegenerateNullspace(residual));
    }
    Ok(StoneleyMode { params: *p, phase_velocity: c, amplitudes, residual })
}

/// `|D v|` in the max norm.
pub fn residual_of(m: &[[C64; 4]; 4], v: &[C64; 4]) -> f64 {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum::<C64>().norm()).fold(0.0, f64::max)
}

/// Displacement of the interface wave; the real part of the complex expression.
pub fn stoneley_field(mode: &StoneleyMode, side: Side, x: f64, y: f64, t: f64) -> Vec2 {
    let c = mode.phase_velocity;
    let ph = x - c * t;
    let (cs, sn) = (C64::new(ph.cos(), 0.0), C64::new(ph.sin(), 0.0));
    let [af, bf, ac, bc] = mode.amplitudes;
    let yc = C64::new(y, 0.0);
    let (u1, u2) = match side {
        Side::Fine => {
            let (g, e) = decay(c, &mode.params.upper);
            let pa = af * (-g * yc).exp();
            let pb = bf * (-e * yc).exp();
            (pa * cs - pb * e * cs, -pa * g * sn + pb * sn)
        }
        Side::Coarse => {
            let (g, e) = decay(c, &mode.params.lower);
            let pa = ac * (g * yc).exp();
            let pb = bc * (e * yc).exp();
            (pa * cs + pb * e * cs, pa * g * sn + pb * sn)
        }
    };
    [u1.re, u2.re]
}

/// Interface-wave problem on one wavelength with exact Dirichlet data.
pub struct StoneleyProblem {
    pub mode: StoneleyMode,
}

impl Problem for StoneleyProblem {
    fn dirichlet(&self, side: Side, x: f64, y: f64, t: f64) -> Vec2 {
        stoneley_field(&self.mode, side, x, y, t)
    }

    fn dirichlet_accel(&self, side: Side, x: f64, y: f64, t: f64) -> Vec2 {
        let u = stoneley_field(&self.mode, side, x, y, t);
        let c2 = self.mode.phase_velocity.powi(2);
        [-c2 * u[0], -c2 * u[1]]
    }
}

/// Smooth manufactured displacement, stress and body force.
#[derive(Clone, Copy, Debug, Default)]
pub struct Manufactured;

/// Displacement with its first and second spatial derivatives.
struct Jet {
    u: Vec2,
    /// `du[a][i] = d u_a / d x_i`
    du: [[f64; 2]; 2],
    /// `ddu[a][i][l]`
    ddu: [[[f64; 2]; 2]; 2],
}

impl Manufactured {
    pub fn material(&self) -> MaterialField {
        MaterialField::Smooth
    }

    fn jet(&self, x: f64, y: f64, t: f64) -> Jet {
        let (t1, t2) = ((t * t).cos(), t.sin());
        let (cx1, sx1) = ((x + 0.3).cos(), (x + 0.3).sin());
        let (cy, sy) = ((y + 0.2).cos(), (y + 0.2).sin());
        let (cx2, sx2) = ((x + 0.2).cos(), (x + 0.2).sin());
        let u1 = cx1 * sy * t1;
        let u2 = sx2 * cy * t2;
        let a = -sx1 * sy * t1;
        let b = cx1 * cy * t1;
        let c = cx2 * cy * t2;
        let d = -sx2 * sy * t2;
        let u1xy = -sx1 * cy * t1;
        let u2xy = -cx2 * sy * t2;
        Jet {
            u: [u1, u2],
            du: [[a, b], [c, d]],
            ddu: [[[-u1, u1xy], [u1xy, -u1]], [[-u2, u2xy], [u2xy, -u2]]],
        }
    }

    pub fn displacement(&self, x: f64, y: f64, t: f64) -> Vec2 {
        self.jet(x, y, t).u
    }

    pub fn acceleration(&self, x: f64, y: f64, t: f64) -> Vec2 {
        let (cx1, sy) = ((x + 0.3).cos(), (y + 0.2).sin());
        let t1tt = -2.0 * (t * t).sin() - 4.0 * t * t * (t * t).cos();
        let t2tt = -t.sin();
        let u2s = (x + 0.2).sin() * (y + 0.2).cos();
        [cx1 * sy * t1tt, u2s * t2tt]
    }

    /// `sigma[a][i]`
    pub fn stress(&self, x: f64, y: f64, t: f64) -> [[f64; 2]; 2] {
        let l = self.material().eval(x, y);
        let j = self.jet(x, y, t);
        let div = j.du[0][0] + j.du[1][1];
        let s12 = l.mu * (j.du[0][1] + j.du[1][0]);
        [[2.0 * l.mu * j.du[0][0] + l.lambda * div, s12], [s12, 2.0 * l.mu * j.du[1][1] + l.lambda * div]]
    }

    /// `div(sigma)`
    pub fn stress_divergence(&self, x: f64, y: f64, t: f64) -> Vec2 {
        let l = self.material().eval(x, y);
        let (mu, la) = (l.mu, l.lambda);
        let mu_x = 3.0 * (3.0 * x + 0.1).cos() * y.sin();
        let mu_y = (3.0 * x + 0.1).sin() * y.cos();
        let s3 = (3.0 * y).sin();
        let la_x = -(x + 0.1).sin() * s3 * s3;
        let la_y = 3.0 * (x + 0.1).cos() * (6.0 * y).sin();
        let j = self.jet(x, y, t);
        let [[a, b], [c, d]] = j.du;
        let (a_x, a_y, b_y) = (j.ddu[0][0][0], j.ddu[0][0][1], j.ddu[0][1][1]);
        let (c_x, c_y, d_y) = (j.ddu[1][0][0], j.ddu[1][0][1], j.ddu[1][1][1]);
        let (b_x, d_x) = (a_y, c_y);
        let ds11_x = (2.0 * mu_x + la_x) * a + (2.0 * mu + la) * a_x + la_x * d + la * d_x;
        let ds12_y = mu_y * (b + c) + mu * (b_y + c_y);
        let ds21_x = mu_x * (b + c) + mu * (b_x + c_x);
        let ds22_y = (2.0 * mu_y + la_y) * d + (2.0 * mu + la) * d_y + la_y * a + la * a_y;
        [ds11_x + ds12_y, ds21_x + ds22_y]
    }

    /// `F = rho u_tt - div(sigma)`
    pub fn forcing(&self, x: f64, y: f64, t: f64) -> Vec2 {
        let rho = self.material().eval(x, y).rho;
        let acc = self.acceleration(x, y, t);
        let div = self.stress_divergence(x, y, t);
        [rho * acc[0] - div[0], rho * acc[1] - div[1]]
    }
}

impl Problem for Manufactured {
    fn top_traction(&self) -> bool {
        true
    }

    fn has_forcing(&self) -> bool {
        true
    }

    fn forcing(&self, _side: Side, x: f64, y: f64, t: f64) -> Vec2 {
        Manufactured::forcing(self, x, y, t)
    }

    fn dirichlet(&self, _side: Side, x: f64, y: f64, t: f64) -> Vec2 {
        self.displacement(x, y, t)
    }

    fn dirichlet_accel(&self, _side: Side, x: f64, y: f64, t: f64) -> Vec2 {
        self.acceleration(x, y, t)
    }

    fn top_stress(&self, x: f64, y: f64, t: f64) -> [[f64; 2]; 2] {
        self.stress(x, y, t)
    }
}
