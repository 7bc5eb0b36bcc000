//! Two-block curvilinear finite-difference solver for the 2D elastic wave
//! equation with a 1:2 nonconforming interface.
//!
//! The coarse block sits below the fine block. Both blocks are discretized
//! with summation-by-parts operators; the blocks are coupled through ghost
//! values on the coarse side of the interface and order-preserving
//! interpolation/restriction along it. Time stepping is a fourth-order
//! predictor-corrector scheme that conserves a discrete energy.

pub mod analytic;
pub mod cli;
pub mod config;
pub mod diagnostics;
pub mod discretization;
pub mod error;
pub mod grid;
pub mod interp;
pub mod material;
pub mod output;
pub mod sbp_core;
pub mod scenario;
pub mod tables;
pub mod timestepper;

pub use error::{Error, Result};
pub use sbp_core::Order;
