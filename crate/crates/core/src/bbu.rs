//! Baseband-unit computation power.
//!
//! The baseband unit is modeled as eight hardware parts (DPD, filtering,
//! CPRI/SERDES link, OFDM processing, linear and non-linear frequency-domain
//! processing, FEC, platform CPU), each rated in GOPS for a reference system
//! configuration. A real configuration scales every part by
//!
//! ```text
//! α_p = Π_i (X_i,real / X_i,ref)^(S_i(p))
//! ```
//!
//! over the six system dimensions bandwidth, modulation order, coding rate,
//! antenna count and time/frequency duty cycles, with per-part integer
//! exponents. The calibrated baseband power is then
//!
//! ```text
//! P_BB = c · Σ_p α_p · P_p(ref)
//! ```
//!
//! where `P_p(ref)` comes from the Landauer chain in [`crate::landauer`]
//! and `c` is a per-class scalar fit once against a measured (or published)
//! baseband power, absorbing everything the switching-energy floor does not
//! see: memory, I/O, voltage margins, dark silicon.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};
use crate::landauer::{part_power, ChipTechnology, ThroughputModel};

/// Base-station class: the two deployment types the built-in data covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BsClass {
    Macro,
    Small,
}

impl BsClass {
    pub const ALL: [BsClass; 2] = [BsClass::Macro, BsClass::Small];

    pub fn label(self) -> &'static str {
        match self {
            BsClass::Macro => "macro",
            BsClass::Small => "small",
        }
    }
}

impl fmt::Display for BsClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for BsClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "macro" => Ok(BsClass::Macro),
            "small" => Ok(BsClass::Small),
            other => Err(format!("unknown BS class `{other}` (expected macro|small)")),
        }
    }
}

/// One operating configuration of a base station.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SystemParams {
    /// Occupied bandwidth [Hz].
    pub bandwidth_hz: f64,
    /// Number of antennas (spatial streams).
    pub antennas: u32,
    /// Modulation order in bits per symbol (6 for 64-QAM).
    pub modulation_bits: u32,
    /// Channel coding rate, in (0, 1].
    pub coding_rate: f64,
    /// Fraction of time the BS transmits, in (0, 1].
    pub time_duty: f64,
    /// Fraction of subcarriers in use, in (0, 1].
    pub freq_duty: f64,
}

impl SystemParams {
    /// Default real-world configuration: 20 MHz, one antenna, 64-QAM at
    /// coding rate 5/6, full duty cycles.
    pub fn default_real() -> Self {
        SystemParams {
            bandwidth_hz: 20e6,
            antennas: 1,
            modulation_bits: 6,
            coding_rate: 5.0 / 6.0,
            time_duty: 1.0,
            freq_duty: 1.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.bandwidth_hz > 0.0 && self.bandwidth_hz.is_finite()) {
            return Err(Error::domain(
                "bandwidth_hz",
                "0 < bandwidth_hz, finite",
                self.bandwidth_hz,
            ));
        }
        if self.antennas == 0 {
            return Err(Error::domain("antennas", "antennas >= 1", 0.0));
        }
        if self.modulation_bits == 0 {
            return Err(Error::domain("modulation_bits", "modulation_bits >= 1", 0.0));
        }
        if !(self.coding_rate > 0.0 && self.coding_rate <= 1.0) {
            return Err(Error::domain("coding_rate", "0 < coding_rate <= 1", self.coding_rate));
        }
        if !(self.time_duty > 0.0 && self.time_duty <= 1.0) {
            return Err(Error::domain("time_duty", "0 < time_duty <= 1", self.time_duty));
        }
        if !(self.freq_duty > 0.0 && self.freq_duty <= 1.0) {
            return Err(Error::domain("freq_duty", "0 < freq_duty <= 1", self.freq_duty));
        }
        Ok(())
    }
}

/// Reference configuration the per-part GOPS ratings refer to:
/// 20 MHz, one antenna, 64-QAM, rate 1, full duty cycles.
pub fn reference_params() -> SystemParams {
    SystemParams {
        bandwidth_hz: 20e6,
        antennas: 1,
        modulation_bits: 6,
        coding_rate: 1.0,
        time_duty: 1.0,
        freq_duty: 1.0,
    }
}

/// The eight baseband hardware parts, in canonical table order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PartName {
    Dpd,
    Filter,
    Cpri,
    Ofdm,
    FdLinear,
    FdNonlinear,
    Fec,
    Cpu,
}

impl PartName {
    pub const ALL: [PartName; 8] = [
        PartName::Dpd,
        PartName::Filter,
        PartName::Cpri,
        PartName::Ofdm,
        PartName::FdLinear,
        PartName::FdNonlinear,
        PartName::Fec,
        PartName::Cpu,
    ];

    pub fn label(self) -> &'static str {
        match self {
            PartName::Dpd => "dpd",
            PartName::Filter => "filter",
            PartName::Cpri => "cpri",
            PartName::Ofdm => "ofdm",
            PartName::FdLinear => "fd_linear",
            PartName::FdNonlinear => "fd_nonlinear",
            PartName::Fec => "fec",
            PartName::Cpu => "cpu",
        }
    }
}

impl fmt::Display for PartName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for PartName {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        PartName::ALL
            .iter()
            .copied()
            .find(|p| p.label() == s)
            .ok_or_else(|| format!("unknown part `{s}`"))
    }
}

/// Scaling exponents of one part over the six system dimensions.
///
/// Each exponent is 0 (the part does not care), 1 (linear) or 2
/// (quadratic, e.g. cross-antenna non-linear processing).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalingExponents {
    pub bw: u8,
    pub m: u8,
    pub r: u8,
    pub ant: u8,
    pub dt: u8,
    pub df: u8,
}

impl ScalingExponents {
    pub fn validate(&self) -> Result<()> {
        for (name, s) in [
            ("bw", self.bw),
            ("m", self.m),
            ("r", self.r),
            ("ant", self.ant),
            ("dt", self.dt),
            ("df", self.df),
        ] {
            if s > 2 {
                // the table only uses {0, 1, 2}; anything else is a typo
                return Err(Error::Domain {
                    name: "exponent",
                    constraint: "scaling exponents must be in {0, 1, 2}",
                    value: f64::from(s),
                })
                .map_err(|e| match e {
                    Error::Domain { constraint, value, .. } => {
                        Error::Config(format!("part exponent `{name}`: {constraint}, got {value}"))
                    }
                    other => other,
                });
            }
        }
        Ok(())
    }
}

/// One row of the baseband workload table: per-class GOPS ratings at the
/// reference configuration plus the scaling exponents.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BbuPartProfile {
    pub name: PartName,
    pub gops_macro: f64,
    pub gops_small: f64,
    pub exponents: ScalingExponents,
}

impl BbuPartProfile {
    pub fn gops_for(&self, class: BsClass) -> f64 {
        match class {
            BsClass::Macro => self.gops_macro,
            BsClass::Small => self.gops_small,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.gops_macro >= 0.0) {
            return Err(Error::domain("gops_macro", "gops_macro >= 0", self.gops_macro));
        }
        if !(self.gops_small >= 0.0) {
            return Err(Error::domain("gops_small", "gops_small >= 0", self.gops_small));
        }
        self.exponents.validate()
    }
}

const fn row(name: PartName, gops_macro: f64, gops_small: f64, e: [u8; 6]) -> BbuPartProfile {
    BbuPartProfile {
        name,
        gops_macro,
        gops_small,
        exponents: ScalingExponents { bw: e[0], m: e[1], r: e[2], ant: e[3], dt: e[4], df: e[5] },
    }
}

/// Built-in workload table for both classes.
///
/// Exponent columns are ordered (bandwidth, modulation, coding rate,
/// antennas, time duty, frequency duty). Only the non-linear
/// frequency-domain stage scales quadratically with the antenna count;
/// the CPU row is flat except for the antenna dimension.
pub fn builtin_part_table() -> Vec<BbuPartProfile> {
    vec![
        row(PartName::Dpd, 160.0, 0.0, [1, 0, 0, 1, 1, 0]),
        row(PartName::Filter, 400.0, 250.0, [1, 0, 0, 1, 1, 0]),
        row(PartName::Cpri, 720.0, 0.0, [1, 1, 1, 1, 1, 1]),
        row(PartName::Ofdm, 160.0, 120.0, [1, 0, 0, 1, 1, 0]),
        row(PartName::FdLinear, 90.0, 50.0, [1, 0, 0, 1, 1, 1]),
        row(PartName::FdNonlinear, 30.0, 15.0, [1, 0, 0, 2, 1, 1]),
        row(PartName::Fec, 140.0, 130.0, [1, 1, 1, 1, 1, 1]),
        row(PartName::Cpu, 400.0, 40.0, [0, 0, 0, 1, 0, 0]),
    ]
}

/// Per-class scalar reconciling the Landauer-floor estimate with a measured
/// baseband power; carries a note on where the fit came from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CalibrationScalar {
    pub value: f64,
    pub provenance: String,
}

impl CalibrationScalar {
    /// No calibration: the raw switching-energy estimate.
    pub fn raw() -> Self {
        CalibrationScalar { value: 1.0, provenance: "raw (uncalibrated)".to_owned() }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.value > 0.0 && self.value.is_finite()) {
            return Err(Error::domain("calibration", "0 < calibration, finite", self.value));
        }
        Ok(())
    }
}

/// Per-part baseband powers plus their sum [W].
#[derive(Debug, Clone, PartialEq)]
pub struct BbuPower {
    /// Calibrated per-part contributions in table order; they sum exactly
    /// to `total_w`.
    pub per_part_w: Vec<(PartName, f64)>,
    pub total_w: f64,
}

/// Workload scaling factor α of one part between two configurations.
///
/// Multiplicative across the six dimensions; exactly 1 when `real` equals
/// `reference`.
pub fn part_scaling_factor(
    part: &BbuPartProfile,
    real: &SystemParams,
    reference: &SystemParams,
) -> Result<f64> {
    part.validate()?;
    real.validate()?;
    reference.validate()?;
    let e = &part.exponents;
    let dim = |real_v: f64, ref_v: f64, s: u8| (real_v / ref_v).powi(i32::from(s));
    Ok(dim(real.bandwidth_hz, reference.bandwidth_hz, e.bw)
        * dim(f64::from(real.modulation_bits), f64::from(reference.modulation_bits), e.m)
        * dim(real.coding_rate, reference.coding_rate, e.r)
        * dim(f64::from(real.antennas), f64::from(reference.antennas), e.ant)
        * dim(real.time_duty, reference.time_duty, e.dt)
        * dim(real.freq_duty, reference.freq_duty, e.df))
}

/// Uncalibrated per-part powers of the built-in table at the reference
/// configuration (α = 1 for every part).
pub fn reference_bbu_power(
    class: BsClass,
    chip: &ChipTechnology,
    model: &ThroughputModel,
) -> Result<BbuPower> {
    bbu_power_with(
        &builtin_part_table(),
        class,
        &reference_params(),
        &reference_params(),
        chip,
        model,
        &CalibrationScalar::raw(),
    )
}

/// Calibrated baseband power of the built-in table at a real configuration.
pub fn bbu_power(
    class: BsClass,
    real: &SystemParams,
    chip: &ChipTechnology,
    model: &ThroughputModel,
    calibration: &CalibrationScalar,
) -> Result<BbuPower> {
    bbu_power_with(
        &builtin_part_table(),
        class,
        real,
        &reference_params(),
        chip,
        model,
        calibration,
    )
}

/// Calibrated baseband power of an arbitrary part table.
///
/// Each per-part entry already includes the calibration scalar, so the
/// entries sum exactly to `total_w`.
pub fn bbu_power_with(
    parts: &[BbuPartProfile],
    class: BsClass,
    real: &SystemParams,
    reference: &SystemParams,
    chip: &ChipTechnology,
    model: &ThroughputModel,
    calibration: &CalibrationScalar,
) -> Result<BbuPower> {
    calibration.validate()?;
    let mut per_part_w = Vec::with_capacity(parts.len());
    let mut total_w = 0.0;
    for part in parts {
        let alpha = part_scaling_factor(part, real, reference)?;
        let raw = part_power(part.gops_for(class), chip, model)?;
        let watts = calibration.value * alpha * raw;
        total_w += watts;
        per_part_w.push((part.name, watts));
    }
    Ok(BbuPower { per_part_w, total_w })
}

/// Fits the calibration scalar so the built-in table reproduces
/// `measured_pbb_w` at the configuration `at`.
pub fn calibrate(
    class: BsClass,
    measured_pbb_w: f64,
    at: &SystemParams,
    chip: &ChipTechnology,
    model: &ThroughputModel,
) -> Result<CalibrationScalar> {
    calibrate_with(
        &builtin_part_table(),
        class,
        measured_pbb_w,
        at,
        &reference_params(),
        chip,
        model,
    )
}

/// Fits the calibration scalar of an arbitrary part table.
pub fn calibrate_with(
    parts: &[BbuPartProfile],
    class: BsClass,
    measured_pbb_w: f64,
    at: &SystemParams,
    reference: &SystemParams,
    chip: &ChipTechnology,
    model: &ThroughputModel,
) -> Result<CalibrationScalar> {
    if !(measured_pbb_w > 0.0 && measured_pbb_w.is_finite()) {
        return Err(Error::domain("measured_pbb_w", "0 < measured_pbb_w, finite", measured_pbb_w));
    }
    let uncalibrated =
        bbu_power_with(parts, class, at, reference, chip, model, &CalibrationScalar::raw())?;
    if uncalibrated.total_w <= 0.0 {
        return Err(Error::CalibrationImpossible);
    }
    Ok(CalibrationScalar {
        value: measured_pbb_w / uncalibrated.total_w,
        provenance: format!(
            "fit: {class} P_BB = {measured_pbb_w} W at {} Hz, {} antennas, M={}, R={}, dt={}, df={}",
            at.bandwidth_hz, at.antennas, at.modulation_bits, at.coding_rate, at.time_duty, at.freq_duty
        ),
    })
}

// ---------------------------------------------------------------------------
// tests
// ---------------------------------------------------------------------------
