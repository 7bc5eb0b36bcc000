use elastiq::analytic::*;
use elastiq::grid::Side;
use elastiq::material::Lame;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn d8(f: &dyn Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    let c = [4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0];
    c.iter().enumerate().map(|(k, c)| c * (f(x + (k + 1) as f64 * h) - f(x - (k + 1) as f64 * h))).sum::<f64>() / h
}

/// Stress from finite differences of the displacement.
fn fd_stress(u: &dyn Fn(f64, f64) -> [f64; 2], l: &dyn Fn(f64, f64) -> Lame, x: f64, y: f64, h: f64) -> [[f64; 2]; 2] {
    let ux = d8(&|s| u(s, y)[0], x, h);
    let uy = d8(&|s| u(x, s)[0], y, h);
    let vx = d8(&|s| u(s, y)[1], x, h);
    let vy = d8(&|s| u(x, s)[1], y, h);
    let m = l(x, y);
    let s12 = m.mu * (uy + vx);
    [[2.0 * m.mu * ux + m.lambda * (ux + vy), s12], [s12, 2.0 * m.mu * vy + m.lambda * (ux + vy)]]
}

fn fd_divergence(sig: &dyn Fn(f64, f64) -> [[f64; 2]; 2], x: f64, y: f64, h: f64) -> [f64; 2] {
    [
        d8(&|s| sig(s, y)[0][0], x, h) + d8(&|s| sig(x, s)[0][1], y, h),
        d8(&|s| sig(s, y)[1][0], x, h) + d8(&|s| sig(x, s)[1][1], y, h),
    ]
}

#[test]
fn manufactured_stress_and_forcing_match_finite_differences() {
    let m = Manufactured;
    let mat = m.material();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let (x, y, t) = (rng.random_range(0.2..6.0), rng.random_range(0.2..6.0), rng.random_range(0.0..1.0));
        let u = |a: f64, b: f64| m.displacement(a, b, t);
        let l = |a: f64, b: f64| mat.eval(a, b);
        let s = fd_stress(&u, &l, x, y, 1e-2);
        let sa = m.stress(x, y, t);
        for a in 0..2 {
            for b in 0..2 {
                assert!((s[a][b] - sa[a][b]).abs() < 1e-8, "stress {a}{b}");
            }
        }
        let div = fd_divergence(&|a, b| m.stress(a, b, t), x, y, 1e-2);
        let acc = d8(&|s| d8(&|r| m.displacement(x, y, r)[0], s, 1e-2), t, 1e-2);
        let rho = mat.eval(x, y).rho;
        let f = m.forcing(x, y, t);
        assert!((f[0] - (rho * acc - div[0])).abs() < 1e-8, "{} vs {}", f[0], rho * acc - div[0]);
        let acc2 = d8(&|s| d8(&|r| m.displacement(x, y, r)[1], s, 1e-2), t, 1e-2);
        assert!((f[1] - (rho * acc2 - div[1])).abs() < 1e-8);
    }
}

#[test]
fn table_phase_velocities() {
    let expect = [0.995069948673601, 0.315111729874378, 0.099674435254786, 0.031520771980397];
    for (mu, c) in StoneleyParams::table_mus().into_iter().zip(expect) {
        let p = StoneleyParams::table_row(mu);
        let cs = stoneley_phase_velocity(&p).unwrap();
        assert!((cs - c).abs() < 1e-11, "mu {mu}: {cs}");
        let d = det4(&interface_matrix(&p, cs));
        let scale = det4(&interface_matrix(&p, 0.5 * cs)).norm();
        assert!(d.norm() < 1e-10 * scale);
    }
}

#[test]
fn stoneley_field_solves_the_equations_in_both_media() {
    let mode = stoneley_mode(&StoneleyParams::table_row(1.0), 0.995069948673601).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (side, lame, sign) in [(Side::Fine, mode.params.upper, 1.0), (Side::Coarse, mode.params.lower, -1.0)] {
        for _ in 0..10 {
            let (x, y, t) = (rng.random_range(0.0..6.3), sign * rng.random_range(0.1..4.0), rng.random_range(0.0..6.0));
            let u = |a: f64, b: f64| stoneley_field(&mode, side, a, b, t);
            let l = |_: f64, _: f64| lame;
            let div = fd_divergence(&|a, b| fd_stress(&u, &l, a, b, 1e-2), x, y, 1e-2);
            let c2 = mode.phase_velocity.powi(2);
            let uu = u(x, y);
            for k in 0..2 {
                assert!((-lame.rho * c2 * uu[k] - div[k]).abs() < 1e-8, "{side:?} comp {k}");
            }
        }
    }
}

#[test]
fn stoneley_field_is_continuous_across_the_interface() {
    let mode = stoneley_mode(&StoneleyParams::table_row(0.1), 0.315111729874378).unwrap();
    for k in 0..12 {
        let (x, t) = (0.5 * k as f64, 0.3 * k as f64);
        let uf = |a: f64, b: f64| stoneley_field(&mode, Side::Fine, a, b, t);
        let uc = |a: f64, b: f64| stoneley_field(&mode, Side::Coarse, a, b, t);
        let (a, b) = (uf(x, 0.0), uc(x, 0.0));
        assert!((a[0] - b[0]).abs() < 1e-12 && (a[1] - b[1]).abs() < 1e-12);
        // One-sided derivatives: shift the stencil into each medium.
        let h = 1e-3;
        let sf = fd_stress(&uf, &|_, _| mode.params.upper, x, 5.0 * h, h);
        let sc = fd_stress(&uc, &|_, _| mode.params.lower, x, -5.0 * h, h);
        let sf0 = fd_stress(&uf, &|_, _| mode.params.upper, x, 6.0 * h, h);
        let sc0 = fd_stress(&uc, &|_, _| mode.params.lower, x, -6.0 * h, h);
        for c in 0..2 {
            // Linear extrapolation of the traction to y = 0 from each side.
            let tf = 6.0 * sf[c][1] - 5.0 * sf0[c][1];
            let tc = 6.0 * sc[c][1] - 5.0 * sc0[c][1];
            assert!((tf - tc).abs() < 1e-4, "traction {c}: {tf} vs {tc}");
        }
    }
}

#[test]
fn mode_amplitudes_are_normalized() {
    let mode = stoneley_mode(&StoneleyParams::table_row(0.01), 0.099674435254786).unwrap();
    assert_eq!(mode.amplitudes[0].re, 1.0);
    assert!(mode.residual < 1e-9);
    assert!((mode.period() - 2.0 * std::f64::consts::PI / 0.099674435254786).abs() < 1e-9);
}
