//! Power consumption model for cellular base stations.
//!
//! A station's input power splits into three components: transmission
//! power (per-antenna power amplifiers and RF chains), computation power
//! (the baseband unit, estimated from the Landauer limit upward), and the
//! conversion/supply/cooling overhead that scales the whole budget. The
//! crate models both a classical macro cell and a small cell, reproduces
//! published EARTH-project reference figures at a 10 MHz, 2-antenna
//! configuration, and evaluates how the split shifts as massive-MIMO
//! antenna counts and millimeter-wave bandwidths grow — the regime where
//! the small cell's computation power overtakes its transmission power.
//!
//! Layering, bottom up:
//!
//! * [`landauer`] — switching energy and the GOPS → throughput → watts chain
//! * [`bbu`] — the eight-part baseband workload table and its scaling law
//! * [`bs_power`] — transmission power, loss cascade, whole-station breakdown
//! * [`earth`] — published comparison figures and the comparison point
//! * [`sweep`] — grids, figure series and the validation report
//! * [`config`] — TOML profile overrides
//! * [`cli`] — the `cellwatt` binary's front end
//!
//! # Example
//!
//! Evaluate the built-in small-cell profile on a wide-band, many-antenna
//! configuration and see computation dominate the budget:
//!
//! ```
//! use cellwatt::bs_power::{breakdown, BsProfile};
//! use cellwatt::{BsClass, ChipTechnology, SystemParams, ThroughputModel};
//!
//! let profile = BsProfile::builtin(BsClass::Small);
//! let params = SystemParams {
//!     bandwidth_hz: 100e6,
//!     antennas: 16,
//!     ..SystemParams::default_real()
//! };
//! let b = breakdown(&profile, &params, &ChipTechnology::default(), &ThroughputModel::default())?;
//! assert!(b.computation_ratio > 0.75);
//! assert!((b.transmission_w + b.computation_w + b.overhead_w - b.total_w).abs() < 1e-9);
//! # Ok::<(), cellwatt::Error>(())
//! ```

// Validation deliberately writes `!(x > 0.0)` instead of `x <= 0.0`: the
// negated form also rejects NaN, which the "simpler" comparison lets through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bbu;
pub mod bs_power;
pub mod cli;
pub mod config;
pub mod earth;
pub mod error;
pub mod landauer;
mod render;
pub mod sweep;

pub use bbu::{BsClass, CalibrationScalar, PartName, SystemParams};
pub use bs_power::{BsProfile, LossRates, PowerBreakdown, TransmissionProfile};
pub use config::ModelConfig;
pub use error::{Error, Result};
pub use landauer::{ChipTechnology, ThroughputModel};
pub use sweep::{Figure, SweepAxis, SweepSpec, ValidationReport};
