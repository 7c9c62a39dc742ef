//! Direction-of-arrival estimation for antenna arrays built from
//! non-coherent sub-arrays.
//!
//! Each sub-array is internally coherent but observes an unknown phase
//! offset at every snapshot. The estimation pipeline lifts the bilinear
//! observation model to a set of row-sparse rank-1 matrices, solves the
//! joint sparse + low-rank convex relaxation with an integrated
//! ADMM + FISTA scheme, and either reads the DOA spectrum directly off the
//! solution ([`estimators::spectrum_proposed1`]) or first synchronizes the
//! sub-array phases through a tight SDP relaxation and runs a coherent
//! estimator on the phase-corrected snapshots
//! ([`phase_sync::solve_phase_sdp`] + MUSIC / single-snapshot l1).
//!
//! The crate is `no_std`-compatible (`alloc` required): disable the default
//! `std` feature for embedded or cross-checked builds. File formats, the
//! CLI, and the Monte Carlo benchmark harness live in the companion
//! `doa-cli` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod dictionary;
pub mod error;
pub mod estimators;
pub mod geometry;
pub mod grid;
pub mod linalg;
pub mod metrics;
pub mod phase_sync;
pub mod prox;
pub mod sim;
pub mod solver;

pub use error::Error;

/// Complex sample type used across the crate.
pub type C64 = num_complex::Complex<f64>;

/// Crate-local result alias.
pub type Result<T> = core::result::Result<T, Error>;
