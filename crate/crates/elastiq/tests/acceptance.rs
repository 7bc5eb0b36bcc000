//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero only when a criterion fails that is not listed as a known
//! deviation. `ELASTIQ_ACCEPTANCE=1,3,7` restricts the run to those criteria.

use elastiq::analytic::{det4, interface_matrix, StoneleyParams};
use elastiq::cli::spectrum_discretization;
use elastiq::diagnostics::{convergence_rates, dominance, eigen_extremes, kbar_blocks, restriction_interpolation, stencil_factor};
use elastiq::interp::{build_op_pair, build_scaled, check_compatibility};
use elastiq::material::Lame;
use elastiq::sbp_core::*;
use elastiq::scenario::{self, BlockSizes};
use elastiq::timestepper::compute_dt_exact;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

/// Criteria whose failure is a documented deviation rather than a regression.
const KNOWN_DEVIATIONS: &[usize] = &[7];

type Criterion = (usize, &'static str, fn(&mut Report));

struct Report {
    lines: Vec<String>,
    ok: bool,
}

impl Report {
    fn new() -> Self {
        Report { lines: Vec::new(), ok: true }
    }

    fn check(&mut self, ok: bool, msg: String) {
        self.lines.push(format!("  [{}] {msg}", if ok { "ok" } else { "FAIL" }));
        self.ok &= ok;
    }

    fn note(&mut self, msg: String) {
        self.lines.push(format!("  {msg}"));
    }
}

fn random_vec(rng: &mut ChaCha8Rng, n: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..n).map(|_| rng.random_range(lo..hi)).collect()
}

fn ip(h: f64, w: &[f64], u: &[f64], v: &[f64]) -> f64 {
    h * w.iter().zip(u).zip(v).map(|((w, a), b)| w * a * b).sum::<f64>()
}

fn sbp_identities(r: &mut Report) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for order in [Order::Four, Order::Six] {
        for n in [16usize, 31, 64] {
            let h = 1.0 / (n - 1) as f64;
            let w = make_norm(order, n).unwrap().weights;
            let d1 = FirstDeriv::new(order, n, h).unwrap();
            let (mut dx, mut dxx, mut gp) = (0.0f64, 0.0f64, 0.0f64);
            for _ in 0..100 {
                let u = random_vec(&mut rng, n, -1.0, 1.0);
                let v = random_vec(&mut rng, n, -1.0, 1.0);
                let g = random_vec(&mut rng, n, 0.5, 2.0);
                let ghosts = random_vec(&mut rng, 2, -1.0, 1.0);
                let res = ip(h, &w, &u, &d1.apply(&v).unwrap()) + ip(h, &w, &d1.apply(&u).unwrap(), &v)
                    - (u[n - 1] * v[n - 1] - u[0] * v[0]);
                dx = dx.max(res.abs());

                let plain = SecondDeriv::new(order, &g, h, GhostEnds::NONE).unwrap();
                let s = BilinearForm::from_operator(&plain);
                let res = ip(h, &w, &u, &plain.apply(&v).unwrap()) + s.eval(&u, &v)
                    + g[0] * u[0] * boundary_derivative(&v, h, End::Left, false).unwrap()
                    - g[n - 1] * u[n - 1] * boundary_derivative(&v, h, End::Right, false).unwrap();
                dxx = dxx.max(res.abs() / n as f64);
                dxx = dxx.max((s.eval(&u, &v) - s.eval(&v, &u)).abs() / n as f64);

                let ghost = SecondDeriv::new(order, &g, h, GhostEnds::BOTH).unwrap();
                let mut ext = vec![ghosts[0]];
                ext.extend_from_slice(&v);
                ext.push(ghosts[1]);
                let res = ip(h, &w, &u, &ghost.apply(&ext).unwrap())
                    + s.eval(&u, &v)
                    + g[0] * u[0] * ghost.boundary_derivative(End::Left, &ext).unwrap()
                    - g[n - 1] * u[n - 1] * ghost.boundary_derivative(End::Right, &ext).unwrap();
                gp = gp.max(res.abs() / n as f64);
            }
            r.check(
                dx < 1e-12 && dxx < 1e-12 && gp < 1e-12,
                format!("order {} n {n}: first {dx:.1e}, second {dxx:.1e}, ghost {gp:.1e}", order.as_int()),
            );
        }
    }
}

fn ghost_conversion(r: &mut Report) {
    let h = 0.07;
    let mut worst = 0.0f64;
    for p in 0..=4 {
        let x0 = 0.3;
        let v: Vec<f64> = (-1..5).map(|i| (x0 + i as f64 * h).powi(p)).collect();
        let exact = if p == 0 { 0.0 } else { p as f64 * x0.powi(p - 1) };
        worst = worst.max((boundary_derivative(&v, h, End::Left, true).unwrap() - exact).abs());
    }
    r.check(worst < 1e-11, format!("ghost boundary derivative on degree <= 4: {worst:.1e}"));
    for (order, w1) in [(Order::Four, 17.0 / 48.0), (Order::Six, 13649.0 / 43200.0)] {
        let n = 31;
        let h = 1.0 / 30.0;
        let g: Vec<f64> = (0..n).map(|i| 1.0 + 0.5 * (i as f64 * h).sin()).collect();
        let plain = SecondDeriv::new(order, &g, h, GhostEnds::NONE).unwrap();
        let ghost = SecondDeriv::new(order, &g, h, GhostEnds::BOTH).unwrap();
        let same = (1..n - 1).all(|i| {
            let (s0, a) = plain.stencils().row(i);
            let (s1, b) = ghost.stencils().row(i);
            s0 + 1 == s1 && a == b
        });
        r.check(same, format!("order {}: interior rows unchanged", order.as_int()));
        let expect = GHOST_BETA * g[0] / (w1 * h * h);
        let got = ghost.ghost_coefficient(End::Left).unwrap();
        r.check(
            (got - expect).abs() < 1e-13 * expect,
            format!("order {}: ghost coefficient {got:.15e}, closed form {expect:.15e}", order.as_int()),
        );
    }
}

fn coupling(r: &mut Report) {
    for q in [2, 3] {
        let mut worst = 0.0f64;
        for nc in [21, 41, 81] {
            let pair = build_op_pair(q, nc).unwrap();
            let h = 1.0 / (pair.n_fine - 1) as f64;
            worst = worst.max(check_compatibility(&pair.p, &pair.r, &pair.w_fine, &pair.w_coarse, h));
        }
        r.check(worst < 1e-13, format!("q={q}: norm compatibility {worst:.1e}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let params = StoneleyParams::table_row(1.0);
    for order in [Order::Four, Order::Six] {
        for (label, d) in [
            ("flat", scenario::stoneley_discretization(order, 25, &params).unwrap()),
            ("curved", scenario::manufactured_discretization(order, 25).unwrap()),
        ] {
            let (jc, jf) = d.interface_scaling();
            let sc = build_scaled(build_op_pair(order.q(), d.coarse.n1()).unwrap(), jc, jf).unwrap();
            let (h1c, h1f) = (d.coarse.block.grid.h1, d.fine.block.grid.h1);
            let mut worst = 0.0f64;
            for _ in 0..20 {
                let uc: Vec<[f64; 2]> = (0..sc.n_coarse()).map(|_| [rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)]).collect();
                let vf: Vec<[f64; 2]> = (0..sc.n_fine()).map(|_| [rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)]).collect();
                let lhs = sc.inner_fine(h1f, &sc.interpolate(&uc), &vf);
                let rhs = sc.inner_coarse(h1c, &uc, &sc.restrict(&vf));
                worst = worst.max((lhs - rhs).abs() / (1.0 + lhs.abs()));
            }
            r.check(worst < 1e-12, format!("order {} {label}: scaled adjoint {worst:.1e}", order.as_int()));
        }
    }
}

fn within(got: f64, expected: f64, factor: f64) -> bool {
    got < expected * factor && got > expected / factor
}

fn manufactured(r: &mut Report) {
    let expected = [7.5505e-5, 4.4768e-6, 2.6793e-7];
    for (order, min_rate) in [(Order::Four, 3.8), (Order::Six, 4.8)] {
        let mut phys = Vec::new();
        let mut refr = Vec::new();
        for (k, n) in [61usize, 121, 241].into_iter().enumerate() {
            let t0 = Instant::now();
            let run = scenario::manufactured_run(order, n, 1.0, 1.3).unwrap();
            r.note(format!(
                "order {} n {n}: error {:.4e}, reference-norm error {:.4e} ({:.0} s)",
                order.as_int(),
                run.final_error,
                run.final_error_reference,
                t0.elapsed().as_secs_f64()
            ));
            if order == Order::Four {
                r.check(
                    within(run.final_error_reference, expected[k], 3.0),
                    format!("order 4 n {n}: reference-norm error {:.4e} vs {:.4e}", run.final_error_reference, expected[k]),
                );
            }
            phys.push((n, run.final_error));
            refr.push((n, run.final_error_reference));
        }
        for (a, b) in convergence_rates(&phys).iter().zip(convergence_rates(&refr)).skip(1) {
            let (ra, rb) = (a.rate.unwrap_or(f64::NAN), b.rate.unwrap_or(f64::NAN));
            r.check(ra >= min_rate, format!("order {} n {}: rate {:.4} (reference norm {:.4})", order.as_int(), a.n, ra, rb));
        }
    }
}

fn stoneley(r: &mut Report) {
    let table = [0.995069948673601, 0.315111729874378, 0.099674435254786, 0.031520771980397];
    for (mu, c) in StoneleyParams::table_mus().into_iter().zip(table) {
        let mode = scenario::stoneley_setup(mu).unwrap();
        let p = StoneleyParams::table_row(mu);
        let det = det4(&interface_matrix(&p, mode.phase_velocity)).norm() / det4(&interface_matrix(&p, 0.5 * mode.phase_velocity)).norm();
        r.check(
            (mode.phase_velocity - c).abs() < 1e-11,
            format!("mu {mu}: c_s {:.15}, table {c:.15}, relative det {det:.1e}", mode.phase_velocity),
        );
    }
    let mode = scenario::stoneley_setup(1.0).unwrap();
    let expected = [5.2044e-5, 2.9083e-6];
    for (order, min_rate) in [(Order::Four, 3.9), (Order::Six, 5.0)] {
        let mut phys = Vec::new();
        let mut refr = Vec::new();
        for (k, n) in [61usize, 121].into_iter().enumerate() {
            let t0 = Instant::now();
            let run = scenario::stoneley_run(order, n, &mode, None, 1.3, 10).unwrap();
            r.note(format!(
                "order {} n {n}: error {:.4e}, reference-norm error {:.4e} ({:.0} s)",
                order.as_int(),
                run.final_error,
                run.final_error_reference,
                t0.elapsed().as_secs_f64()
            ));
            if order == Order::Four {
                r.check(
                    within(run.final_error_reference, expected[k], 3.0),
                    format!("order 4 n {n}: reference-norm error {:.4e} vs {:.4e}", run.final_error_reference, expected[k]),
                );
            }
            phys.push((n, run.final_error));
            refr.push((n, run.final_error_reference));
        }
        let a = &convergence_rates(&phys)[1];
        let b = &convergence_rates(&refr)[1];
        let (ra, rb) = (a.rate.unwrap_or(f64::NAN), b.rate.unwrap_or(f64::NAN));
        r.check(ra >= min_rate, format!("order {}: rate {:.4} (reference norm {:.4})", order.as_int(), ra, rb));
    }
}

fn energy(r: &mut Report) {
    for order in [Order::Four, Order::Six] {
        let t0 = Instant::now();
        let run = scenario::energy_run(order, 61, 100.0, 1.3, 0, 1000).unwrap();
        r.check(
            run.max_drift < 1e-10,
            format!(
                "order {} n 61 T 100: max relative drift {:.2e} over {} steps ({:.0} s)",
                order.as_int(),
                run.max_drift,
                run.history.last().unwrap().0,
                t0.elapsed().as_secs_f64()
            ),
        );
    }
}

fn interface_matrix_analysis(r: &mut Report) {
    for n in [41, 81] {
        let m = stencil_factor(&spectrum_discretization(2, n).unwrap());
        let dom = dominance(&m);
        let rmin = dom.rows.iter().cloned().fold(f64::INFINITY, f64::min);
        let cmin = dom.cols.iter().cloned().fold(f64::INFINITY, f64::min);
        r.check(dom.strict(), format!("q=2 n {n}: row margin {rmin:.4}, column margin {cmin:.4}"));
    }
    let (lo_t, hi_t) = (0.2021759, 2.3393173);
    for n in [41, 81] {
        let m = stencil_factor(&spectrum_discretization(3, n).unwrap());
        let (lo, hi, _) = eigen_extremes(&m, 2000).unwrap();
        let (rlo, rhi, _) = eigen_extremes(&restriction_interpolation(3, n).unwrap(), 2000).unwrap();
        r.check(
            (lo - lo_t).abs() < 1e-6 && (hi - hi_t).abs() < 1e-6,
            format!("q=3 n {n}: eigenvalues [{lo:.7}, {hi:.7}] vs [{lo_t}, {hi_t}]; full RP [{rlo:.7}, {rhi:.7}]"),
        );
    }
}

fn step_bound(r: &mut Report) {
    let c = Lame { rho: 1.0, mu: 1.0, lambda: 2.0 };
    let f = Lame { rho: 2.0, mu: 0.5, lambda: 1.0 };
    let d = scenario::cartesian_discretization(Order::Four, BlockSizes::square(13), 2.0, 1.0, 0.5, c, f).unwrap();
    for k in kbar_blocks(&d, 4000).unwrap() {
        let s = k.max_eigenvalue;
        r.check(
            k.asymmetry < 1e-10 * s && k.min_eigenvalue > -1e-10 * s,
            format!("{:?} block ({} unknowns): asymmetry {:.1e}, eigenvalues [{:.3e}, {:.3e}]", k.side, k.size, k.asymmetry, k.min_eigenvalue, s),
        );
    }
    let dt = compute_dt_exact(&d, 4000).unwrap();
    let steps = 10_000.0;
    match scenario::energy_run_on(&d, steps * 0.99 * dt, 0.99 * dt, 2, 1000) {
        Ok(run) => r.check(run.max_drift < 1e-8, format!("0.99 x bound ({dt:.4e}): stable, max drift {:.1e}", run.max_drift)),
        Err(e) => r.check(false, format!("0.99 x bound: {e}")),
    }
    match scenario::energy_run_on(&d, steps * 1.5 * dt, 1.5 * dt, 2, 1000) {
        Ok(run) => r.check(false, format!("1.5 x bound: stayed finite, max drift {:.1e}", run.max_drift)),
        Err(e) => r.check(true, format!("1.5 x bound: diverged ({e})")),
    }
}

fn main() {
    let selected: Option<Vec<usize>> =
        std::env::var("ELASTIQ_ACCEPTANCE").ok().map(|s| s.split(',').filter_map(|x| x.trim().parse().ok()).collect());
    let criteria: [Criterion; 8] = [
        (1, "summation-by-parts identities", sbp_identities),
        (2, "ghost-point conversion", ghost_conversion),
        (3, "interface coupling compatibility", coupling),
        (4, "manufactured-solution convergence", manufactured),
        (5, "interface wave", stoneley),
        (6, "energy conservation", energy),
        (7, "interface-matrix analysis", interface_matrix_analysis),
        (8, "exact time-step bound", step_bound),
    ];
    let mut unexpected = Vec::new();
    for (id, name, f) in criteria {
        if selected.as_ref().is_some_and(|s| !s.contains(&id)) {
            continue;
        }
        let t0 = Instant::now();
        let mut r = Report::new();
        f(&mut r);
        let status = match (r.ok, KNOWN_DEVIATIONS.contains(&id)) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known deviation)",
            (false, false) => {
                unexpected.push(id);
                "FAIL"
            }
        };
        println!("criterion {id} ({name}): {status} [{:.1} s]", t0.elapsed().as_secs_f64());
        for l in &r.lines {
            println!("{l}");
        }
    }
    if !unexpected.is_empty() {
        println!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
