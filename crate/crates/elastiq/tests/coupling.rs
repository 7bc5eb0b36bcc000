use elastiq::discretization::InterfaceSources;
use elastiq::grid::Side;
use elastiq::interp::*;
use elastiq::scenario;
use elastiq::Order;
use proptest::prelude::*;

#[test]
fn interpolation_and_restriction_are_norm_compatible() {
    for q in [2, 3] {
        for nc in [21, 41, 81] {
            let pair = build_op_pair(q, nc).unwrap();
            let h = 1.0 / (pair.n_fine - 1) as f64;
            let res = check_compatibility(&pair.p, &pair.r, &pair.w_fine, &pair.w_coarse, h);
            assert!(res < 1e-13, "q={q} nc={nc}: {res}");
        }
    }
}

#[test]
fn interpolation_accuracy_in_interior_and_near_edges() {
    for q in [2usize, 3] {
        let pair = build_op_pair(q, 41).unwrap();
        let hc = 1.0 / 40.0;
        // Centered rows are exact to degree 2q - 1, edge rows to degree q - 1.
        for (degree, skip) in [(2 * q - 1, 12), (q - 1, 0)] {
            let f = |x: f64| x.powi(degree as i32) - 0.5 * x;
            let vc: Vec<f64> = (0..41).map(|j| f(j as f64 * hc)).collect();
            let vf = pair.interpolate(&vc).unwrap();
            for (i, v) in vf.iter().enumerate().skip(skip).take(vf.len() - 2 * skip) {
                assert!((v - f(i as f64 * hc / 2.0)).abs() < 1e-12, "q={q} degree {degree} row {i}");
            }
        }
    }
}

fn random_pair(n: usize) -> impl Strategy<Value = (Vec<[f64; 2]>, Vec<[f64; 2]>)> {
    (prop::collection::vec([-1.0..1.0f64, -1.0..1.0f64], n), prop::collection::vec([-1.0..1.0f64, -1.0..1.0f64], 2 * n - 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn scaled_operators_are_adjoint_on_curved_interface((uc, vf) in random_pair(25), six in any::<bool>()) {
        let order = if six { Order::Six } else { Order::Four };
        let d = scenario::manufactured_discretization(order, 25).unwrap();
        let (jc, jf) = d.interface_scaling();
        let sc = build_scaled(build_op_pair(order.q(), 25).unwrap(), jc, jf).unwrap();
        let (h1c, h1f) = (d.coarse.block.grid.h1, d.fine.block.grid.h1);
        let lhs = sc.inner_fine(h1f, &sc.interpolate(&uc), &vf);
        let rhs = sc.inner_coarse(h1c, &uc, &sc.restrict(&vf));
        prop_assert!((lhs - rhs).abs() < 1e-12 * (1.0 + lhs.abs()), "{lhs} vs {rhs}");
    }
}

#[test]
fn flat_interface_scaling_is_constant() {
    let p = elastiq::analytic::StoneleyParams::table_row(1.0);
    let d = scenario::stoneley_discretization(Order::Four, 21, &p).unwrap();
    let (jc, jf) = d.interface_scaling();
    let expect = 2.0 * std::f64::consts::PI;
    assert!(jc.iter().chain(jf).all(|v| (v - expect).abs() < 1e-12), "{jc:?}");
}

#[test]
fn ghost_solve_makes_tractions_continuous_on_curved_interface() {
    for order in [Order::Four, Order::Six] {
        let d = scenario::manufactured_discretization(order, 25).unwrap();
        let sample = |b: &elastiq::discretization::BlockOps, phase: f64| -> Vec<[f64; 2]> {
            (0..b.len()).map(|k| [(b.block.x[k] + phase).sin() * b.block.y[k].cos(), (b.block.x[k] * b.block.y[k]).cos()]).collect()
        };
        let mut c = sample(&d.coarse, 0.0);
        let mut f = sample(&d.fine, 0.1);
        d.inject(&c, &mut f);
        let src = InterfaceSources::zero(d.coarse.n1(), d.fine.n1());
        d.solve_ghost(&mut c, &f, &src).unwrap();
        let r = d.traction_residual(&c, &f, &src);
        let worst = r.iter().flatten().fold(0.0f64, |a, b| a.max(b.abs()));
        assert!(worst < 1e-10, "{order:?}: {worst}");
    }
}

#[test]
fn injection_on_flat_interface_copies_interpolated_values() {
    let p = elastiq::analytic::StoneleyParams::table_row(1.0);
    let d = scenario::stoneley_discretization(Order::Four, 25, &p).unwrap();
    let c: Vec<[f64; 2]> = (0..d.coarse.len()).map(|k| [d.coarse.block.x[k], 1.0]).collect();
    let mut f = vec![[0.0; 2]; d.fine.len()];
    d.inject(&c, &mut f);
    for i in 0..d.fine.n1() {
        let k = d.fine.idx(i, 0);
        assert!((f[k][0] - d.fine.block.x[k]).abs() < 1e-12);
        assert!((f[k][1] - 1.0).abs() < 1e-12);
    }
    assert_eq!(d.fine.side(), Side::Fine);
}
