use elastiq_ffi::*;
use std::ptr;

fn last_error() -> String {
    unsafe {
        let n = elastiq_last_error_message(ptr::null_mut(), 0);
        let mut buf = vec![0 as std::ffi::c_char; n + 1];
        elastiq_last_error_message(buf.as_mut_ptr(), buf.len());
        std::ffi::CStr::from_ptr(buf.as_ptr()).to_string_lossy().into_owned()
    }
}

#[test]
fn stoneley_handle_steps_and_tracks_the_exact_solution() {
    unsafe {
        let mut sim = ptr::null_mut();
        assert_eq!(elastiq_sim_new_stoneley(4, 21, 1.0, 1.3, &mut sim), ElastiqStatus::Ok);
        let (mut t, mut dt, mut e0, mut e1) = (0.0, 0.0, 0.0, 0.0);
        assert_eq!(elastiq_sim_l2_error(sim, &mut e0), ElastiqStatus::Ok);
        assert_eq!(elastiq_sim_step(sim, 20), ElastiqStatus::Ok);
        assert_eq!(elastiq_sim_time(sim, &mut t), ElastiqStatus::Ok);
        assert_eq!(elastiq_sim_dt(sim, &mut dt), ElastiqStatus::Ok);
        assert!((t - 20.0 * dt).abs() < 1e-12);
        assert_eq!(elastiq_sim_l2_error(sim, &mut e1), ElastiqStatus::Ok);
        assert!(e1.is_finite() && e1 < 0.1, "error {e1}");
        elastiq_sim_free(sim);
    }
}

#[test]
fn energy_handle_conserves_energy() {
    unsafe {
        let mut sim = ptr::null_mut();
        assert_eq!(elastiq_sim_new_energy(4, 23, 3, 1.3, &mut sim), ElastiqStatus::Ok);
        let (mut a, mut b) = (0.0, 0.0);
        elastiq_sim_energy(sim, &mut a);
        assert_eq!(elastiq_sim_step(sim, 100), ElastiqStatus::Ok);
        elastiq_sim_energy(sim, &mut b);
        assert!(((b - a) / a).abs() < 1e-11);
        let mut e = 0.0;
        assert_eq!(elastiq_sim_l2_error(sim, &mut e), ElastiqStatus::InvalidArgument);
        assert!(last_error().contains("exact"));
        elastiq_sim_free(sim);
    }
}

#[test]
fn bad_arguments_report_status_and_message() {
    unsafe {
        let mut sim = ptr::null_mut();
        assert_eq!(elastiq_sim_new_stoneley(5, 21, 1.0, 1.3, &mut sim), ElastiqStatus::InvalidArgument);
        assert!(sim.is_null());
        assert_eq!(elastiq_sim_new_stoneley(4, 5, 1.0, 1.3, &mut sim), ElastiqStatus::ConfigError);
        assert!(last_error().contains("grid too small"));
        assert_eq!(elastiq_sim_new_energy(4, 13, 0, 1.3, ptr::null_mut()), ElastiqStatus::NullPointer);
        assert_eq!(elastiq_sim_step(ptr::null_mut(), 1), ElastiqStatus::NullPointer);
        elastiq_sim_free(ptr::null_mut());
    }
}

#[test]
fn truncated_message_is_terminated() {
    unsafe {
        elastiq_sim_step(ptr::null_mut(), 1);
        let mut buf = [1 as std::ffi::c_char; 5];
        let n = elastiq_last_error_message(buf.as_mut_ptr(), buf.len());
        assert!(n > 4);
        assert_eq!(buf[4], 0);
    }
}

#[test]
fn phase_velocity_of_first_table_row() {
    let mut c = 0.0;
    unsafe {
        assert_eq!(elastiq_stoneley_phase_velocity(1.0, &mut c), ElastiqStatus::Ok);
        assert_eq!(elastiq_stoneley_phase_velocity(-1.0, &mut c), ElastiqStatus::InvalidArgument);
    }
    assert!((c - 0.995069948673601).abs() < 1e-11);
}

#[test]
fn generated_header_declares_the_interface() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/elastiq.h")).unwrap();
    for name in [
        "elastiq_sim_new_stoneley",
        "elastiq_sim_new_energy",
        "elastiq_sim_step",
        "elastiq_sim_free",
        "elastiq_last_error_message",
        "typedef struct ElastiqSim ElastiqSim",
    ] {
        assert!(h.contains(name), "{name}");
    }
}
