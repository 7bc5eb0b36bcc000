//! C interface to the elastiq solver.
//!
//! Every function returns an [`ElastiqStatus`]; on failure the message is
//! kept per thread and can be read with [`elastiq_last_error_message`].
//! Simulations are opaque handles created by one of the `elastiq_sim_new_*`
//! functions and released with [`elastiq_sim_free`].

use elastiq::analytic::{stoneley_field, Manufactured, StoneleyParams, StoneleyProblem};
use elastiq::diagnostics::{discrete_energy, l2_error};
use elastiq::discretization::{Discretization, Vec2};
use elastiq::grid::Side;
use elastiq::scenario;
use elastiq::timestepper::{compute_dt_approx, Field, Homogeneous, Problem, Stepper};
use elastiq::{Error, Order};
use std::cell::RefCell;
use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElastiqStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ConfigError = 3,
    NumericalError = 4,
    Panic = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.into());
}

fn status_of(e: &Error) -> ElastiqStatus {
    match e.exit_code() {
        2 => ElastiqStatus::ConfigError,
        _ => ElastiqStatus::NumericalError,
    }
}

fn guard(f: impl FnOnce() -> Result<(), ElastiqStatus>) -> ElastiqStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ElastiqStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            ElastiqStatus::Panic
        }
    }
}

fn fail(e: Error) -> ElastiqStatus {
    set_error(e.to_string());
    status_of(&e)
}

fn order_of(order: u32) -> Result<Order, ElastiqStatus> {
    Order::from_int(order).map_err(|e| {
        set_error(e.to_string());
        ElastiqStatus::InvalidArgument
    })
}

type Exact = Box<dyn Fn(Side, f64, f64, f64) -> Vec2 + Send>;

/// A running simulation.
pub struct ElastiqSim {
    // Declared first so it is dropped before the data it borrows.
    stepper: Stepper<'static>,
    exact: Option<Exact>,
    _problem: Box<dyn Problem + Send>,
    _disc: Box<Discretization>,
}

impl ElastiqSim {
    fn build(
        disc: Discretization,
        problem: Box<dyn Problem + Send>,
        exact: Option<Exact>,
        cfl: f64,
        start: impl FnOnce(&'static Discretization, &'static dyn Problem, f64) -> elastiq::Result<Stepper<'static>>,
    ) -> elastiq::Result<Self> {
        let disc = Box::new(disc);
        // SAFETY: both boxes are owned by the returned value and never moved
        // out or mutated; `stepper` is dropped before them (field order).
        let d: &'static Discretization = unsafe { &*(disc.as_ref() as *const Discretization) };
        let p: &'static dyn Problem = unsafe { &*(problem.as_ref() as *const (dyn Problem + Send) as *const dyn Problem) };
        let dt = compute_dt_approx(d, cfl);
        let stepper = start(d, p, dt)?;
        Ok(ElastiqSim { stepper, exact, _problem: problem, _disc: disc })
    }
}

fn check_cfl(cfl: f64) -> Result<(), ElastiqStatus> {
    if cfl > 0.0 && cfl.is_finite() {
        Ok(())
    } else {
        set_error("cfl must be positive");
        Err(ElastiqStatus::InvalidArgument)
    }
}

unsafe fn store(out: *mut *mut ElastiqSim, sim: ElastiqSim) {
    *out = Box::into_raw(Box::new(sim));
}

/// Interface-wave simulation with upper shear modulus `mu`, started from the
/// exact solution at `t = 0`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn elastiq_sim_new_stoneley(order: u32, n: u32, mu: f64, cfl: f64, out: *mut *mut ElastiqSim) -> ElastiqStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output pointer");
            return Err(ElastiqStatus::NullPointer);
        }
        let order = order_of(order)?;
        check_cfl(cfl)?;
        if !(mu > 0.0 && mu.is_finite()) {
            set_error("mu must be positive");
            return Err(ElastiqStatus::InvalidArgument);
        }
        let mode = scenario::stoneley_setup(mu).map_err(fail)?;
        let disc = scenario::stoneley_discretization(order, n as usize, &StoneleyParams::table_row(mu)).map_err(fail)?;
        let exact: Exact = Box::new(move |s, x, y, t| stoneley_field(&mode, s, x, y, t));
        let sim = ElastiqSim::build(disc, Box::new(StoneleyProblem { mode }), Some(exact), cfl, |d, p, dt| {
            let prev = Field::from_fn(d, |s, x, y| stoneley_field(&mode, s, x, y, -dt));
            let cur = Field::from_fn(d, |s, x, y| stoneley_field(&mode, s, x, y, 0.0));
            Stepper::from_levels(d, p, dt, 0.0, prev, cur)
        })
        .map_err(fail)?;
        store(out, sim);
        Ok(())
    })
}

/// Manufactured-solution simulation on the curved two-block domain.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn elastiq_sim_new_manufactured(order: u32, n: u32, cfl: f64, out: *mut *mut ElastiqSim) -> ElastiqStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output pointer");
            return Err(ElastiqStatus::NullPointer);
        }
        let order = order_of(order)?;
        check_cfl(cfl)?;
        if n.is_multiple_of(2) {
            set_error("n must be odd");
            return Err(ElastiqStatus::InvalidArgument);
        }
        let disc = scenario::manufactured_discretization(order, n as usize).map_err(fail)?;
        let m = Manufactured;
        let exact: Exact = Box::new(move |_, x, y, t| m.displacement(x, y, t));
        let sim = ElastiqSim::build(disc, Box::new(m), Some(exact), cfl, |d, p, dt| {
            let prev = Field::from_fn(d, |_, x, y| m.displacement(x, y, -dt));
            let cur = Field::from_fn(d, |_, x, y| m.displacement(x, y, 0.0));
            Stepper::from_levels(d, p, dt, 0.0, prev, cur)
        })
        .map_err(fail)?;
        store(out, sim);
        Ok(())
    })
}

/// Random initial data with homogeneous Dirichlet boundaries and zero
/// initial velocity; conserves the discrete energy.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn elastiq_sim_new_energy(order: u32, n: u32, seed: u64, cfl: f64, out: *mut *mut ElastiqSim) -> ElastiqStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output pointer");
            return Err(ElastiqStatus::NullPointer);
        }
        let order = order_of(order)?;
        check_cfl(cfl)?;
        if n.is_multiple_of(2) {
            set_error("n must be odd");
            return Err(ElastiqStatus::InvalidArgument);
        }
        let disc = scenario::energy_discretization(order, n as usize).map_err(fail)?;
        let sim = ElastiqSim::build(disc, Box::new(Homogeneous), None, cfl, |d, p, dt| {
            Stepper::taylor_start(d, p, dt, 0.0, scenario::random_field(d, seed), None)
        })
        .map_err(fail)?;
        store(out, sim);
        Ok(())
    })
}

unsafe fn sim_mut<'a>(sim: *mut ElastiqSim) -> Result<&'a mut ElastiqSim, ElastiqStatus> {
    sim.as_mut().ok_or_else(|| {
        set_error("null simulation handle");
        ElastiqStatus::NullPointer
    })
}

unsafe fn write_out(out: *mut f64, v: f64) -> Result<(), ElastiqStatus> {
    if out.is_null() {
        set_error("null output pointer");
        return Err(ElastiqStatus::NullPointer);
    }
    *out = v;
    Ok(())
}

/// Advances `steps` time steps.
///
/// # Safety
/// `sim` must be a handle returned by an `elastiq_sim_new_*` function.
#[no_mangle]
pub unsafe extern "C" fn elastiq_sim_step(sim: *mut ElastiqSim, steps: u64) -> ElastiqStatus {
    guard(|| {
        let s = sim_mut(sim)?;
        s.stepper.run(steps as usize, |_| Ok(())).map_err(fail)
    })
}

/// # Safety
/// `sim` must be a valid handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn elastiq_sim_time(sim: *mut ElastiqSim, out: *mut f64) -> ElastiqStatus {
    guard(|| {
        let s = sim_mut(sim)?;
        write_out(out, s.stepper.t)
    })
}

/// # Safety
/// `sim` must be a valid handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn elastiq_sim_dt(sim: *mut ElastiqSim, out: *mut f64) -> ElastiqStatus {
    guard(|| {
        let s = sim_mut(sim)?;
        write_out(out, s.stepper.dt)
    })
}

/// Discrete energy of the two stored levels. Conserved only for the
/// energy scenario.
///
/// # Safety
/// `sim` must be a valid handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn elastiq_sim_energy(sim: *mut ElastiqSim, out: *mut f64) -> ElastiqStatus {
    guard(|| {
        let s = sim_mut(sim)?;
        let st = &s.stepper;
        let e = discrete_energy(st.disc, &st.prev, &st.cur, st.dt).map_err(fail)?;
        write_out(out, e)
    })
}

/// Weighted l2 error against the exact solution at the current time.
/// Fails with `InvalidArgument` for scenarios without one.
///
/// # Safety
/// `sim` must be a valid handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn elastiq_sim_l2_error(sim: *mut ElastiqSim, out: *mut f64) -> ElastiqStatus {
    guard(|| {
        let s = sim_mut(sim)?;
        let Some(exact) = &s.exact else {
            set_error("scenario has no exact solution");
            return Err(ElastiqStatus::InvalidArgument);
        };
        let t = s.stepper.t;
        let e = l2_error(s.stepper.disc, &s.stepper.cur, &|side, x, y| exact(side, x, y, t));
        write_out(out, e)
    })
}

/// Releases a simulation. Null is accepted.
///
/// # Safety
/// `sim` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn elastiq_sim_free(sim: *mut ElastiqSim) {
    if !sim.is_null() {
        drop(Box::from_raw(sim));
    }
}

/// Interface-wave phase velocity for the tabulated materials with upper
/// shear modulus `mu`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn elastiq_stoneley_phase_velocity(mu: f64, out: *mut f64) -> ElastiqStatus {
    guard(|| {
        if !(mu > 0.0 && mu.is_finite()) {
            set_error("mu must be positive");
            return Err(ElastiqStatus::InvalidArgument);
        }
        let c = elastiq::analytic::stoneley_phase_velocity(&StoneleyParams::table_row(mu)).map_err(fail)?;
        write_out(out, c)
    })
}

/// Copies the calling thread's last error message, NUL-terminated and
/// truncated to `cap` bytes, into `buf`. Returns the full message length
/// in bytes (without the terminator), so a null `buf` queries the size.
///
/// # Safety
/// `buf` must be null or point to `cap` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn elastiq_last_error_message(buf: *mut c_char, cap: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && cap > 0 {
            let n = msg.len().min(cap - 1);
            std::ptr::copy_nonoverlapping(msg.as_ptr() as *const c_char, buf, n);
            *buf.add(n) = 0;
        }
        msg.len()
    })
}
