use elastiq::cli::{dump_operator, main_with_args};
use elastiq::config::{MuSpec, Scenario, ScenarioConfig};
use proptest::prelude::*;
use std::path::Path;

fn run(args: &[&str]) -> i32 {
    main_with_args(std::iter::once("elastiq").chain(args.iter().copied()))
}

fn scenario_strategy() -> impl Strategy<Value = Scenario> {
    prop_oneof![
        Just(Scenario::Manufactured),
        Just(Scenario::Stoneley),
        Just(Scenario::Energy),
        Just(Scenario::Spectrum),
        Just(Scenario::Dispersion)
    ]
}

proptest! {
    #[test]
    fn config_text_round_trips(
        scenario in scenario_strategy(),
        six in any::<bool>(),
        n in prop::collection::vec(12usize..500, 1..4),
        t in prop::option::of(1e-3..1e3f64),
        cfl in 0.1..2.0f64,
        row in 1usize..=4,
        mu in prop::option::of(1e-3..10.0f64),
        seed in any::<u64>(),
    ) {
        let mut c = ScenarioConfig::new(scenario);
        c.order = if six { elastiq::Order::Six } else { elastiq::Order::Four };
        c.n = n;
        c.t_final = t;
        c.cfl = cfl;
        c.mu = mu.map(MuSpec::Value).unwrap_or(MuSpec::Row(row));
        c.seed = seed;
        c.out = "some/dir".into();
        prop_assert_eq!(ScenarioConfig::parse(&c.to_string()).unwrap(), c);
    }
}

#[test]
fn configuration_errors_exit_with_two() {
    assert_eq!(run(&["run", "stoneley", "--order", "5"]), 2);
    assert_eq!(run(&["run", "bogus"]), 2);
    assert_eq!(run(&["run", "manufactured", "--n", "60"]), 2);
    assert_eq!(run(&["run", "energy", "--n", "5"]), 2);
    assert_eq!(run(&["run", "stoneley", "--T=-1"]), 2);
    assert_eq!(run(&["run", "stoneley", "--mu", "r9"]), 2);
    assert_eq!(run(&["run", "stoneley", "--config", "/nonexistent/cfg"]), 2);
    assert_eq!(run(&["dump-operator", "d3-4", "--n", "20"]), 2);
    assert_eq!(run(&["dump-operator", "d1-4", "--n", "4"]), 2);
    assert_eq!(run(&["frobnicate"]), 2);
    assert_eq!(run(&["--help"]), 0);
}

fn read(dir: &Path, name: &str) -> String {
    std::fs::read_to_string(dir.join(name)).unwrap()
}

#[test]
fn repeated_runs_write_identical_files() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for dir in [&a, &b] {
        let out = dir.path().to_str().unwrap();
        assert_eq!(run(&["run", "dispersion", "--out", out]), 0);
        assert_eq!(run(&["run", "energy", "--n", "23", "--T", "0.5", "--seed", "3", "--out", out]), 0);
    }
    for f in ["dispersion.csv", "energy_drift.csv"] {
        let (x, y) = (read(a.path(), f), read(b.path(), f));
        assert_eq!(x, y, "{f}");
        assert!(!x.contains('\r'));
        assert!(x.ends_with('\n'));
    }
    let disp = read(a.path(), "dispersion.csv");
    let mut lines = disp.lines();
    assert!(lines.next().unwrap().starts_with("mu,c_s,period,residual"));
    let first: Vec<&str> = lines.next().unwrap().split(',').collect();
    let c: f64 = first[1].parse().unwrap();
    assert!((c - 0.995069948673601).abs() < 1e-11);
    assert!(first[1].contains('e'), "{}", first[1]);
    assert_eq!(disp.lines().count(), 5);
}

#[test]
fn config_file_and_flags_combine() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    let out = dir.path().join("res");
    std::fs::write(&cfg, format!("scenario = energy\nn = 23\nT = 0.2\nout = {}\n", out.display())).unwrap();
    assert_eq!(run(&["run", "energy", "--config", cfg.to_str().unwrap(), "--seed", "5"]), 0);
    let text = read(&out, "energy_drift.csv");
    assert!(text.starts_with("n,step,t,E,drift\n"));
}

#[test]
fn operator_dumps_have_expected_shape() {
    let d1 = dump_operator("d1-4", 12).unwrap();
    let rows: Vec<Vec<f64>> = d1.lines().map(|l| l.split(',').map(|v| v.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 12);
    assert!(rows.iter().all(|r| r.len() == 12 && r.iter().sum::<f64>().abs() < 1e-10));
    let p = dump_operator("p-q3", 21).unwrap();
    let rows: Vec<Vec<f64>> = p.lines().map(|l| l.split(',').map(|v| v.parse().unwrap()).collect()).collect();
    assert_eq!((rows.len(), rows[0].len()), (41, 21));
    assert!(rows.iter().all(|r| (r.iter().sum::<f64>() - 1.0).abs() < 1e-12));
    let norm = dump_operator("norm-6", 20).unwrap();
    let total: f64 = norm.lines().flat_map(|l| l.split(',').map(|v| v.parse::<f64>().unwrap()).collect::<Vec<_>>()).sum();
    assert!((total - 1.0).abs() < 1e-13);
}
