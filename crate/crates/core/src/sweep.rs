//! Parameter sweeps, figure grids and the EARTH validation report.
//!
//! Two canonical grids cover the published curves: an antenna sweep
//! {1, 2, 4, ..., 128} at 20 MHz and a bandwidth sweep
//! {5, 10, 20, 40, 80, 100, 200, 400} MHz at 4 antennas, both for the
//! macro and small profiles. `fig4*` series plot the computation power,
//! `fig5*` the computation ratio, over the same grids.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::bbu::{BsClass, SystemParams};
use crate::bs_power::{breakdown, BsProfile, PowerBreakdown};
use crate::earth;
use crate::error::{Error, Result};
use crate::landauer::{ChipTechnology, ThroughputModel};

/// Which system dimension a sweep walks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepAxis {
    Antennas,
    BandwidthHz,
}

impl SweepAxis {
    pub fn label(self) -> &'static str {
        match self {
            SweepAxis::Antennas => "antennas",
            SweepAxis::BandwidthHz => "bandwidth_hz",
        }
    }
}

impl fmt::Display for SweepAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A sweep: axis, grid values, the configuration every other dimension is
/// held at, and the classes to evaluate.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub axis: SweepAxis,
    pub values: Vec<f64>,
    pub base_params: SystemParams,
    pub classes: Vec<BsClass>,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.values.is_empty() {
            return Err(Error::Config("sweep needs at least one axis value".into()));
        }
        if self.classes.is_empty() {
            return Err(Error::Config("sweep needs at least one BS class".into()));
        }
        for w in self.values.windows(2) {
            if !(w[1] > w[0]) {
                return Err(Error::Config(format!(
                    "sweep values must be strictly increasing, got {} after {}",
                    w[1], w[0]
                )));
            }
        }
        for &v in &self.values {
            match self.axis {
                SweepAxis::Antennas => {
                    if !(v >= 1.0 && v.fract() == 0.0 && v <= f64::from(u32::MAX)) {
                        return Err(Error::Config(format!(
                            "antenna sweep values must be positive integers, got {v}"
                        )));
                    }
                }
                SweepAxis::BandwidthHz => {
                    if !(v > 0.0 && v.is_finite()) {
                        return Err(Error::Config(format!(
                            "bandwidth sweep values must be positive, got {v}"
                        )));
                    }
                }
            }
        }
        self.base_params.validate()
    }

    /// The configuration of one grid point.
    fn params_at(&self, value: f64) -> SystemParams {
        let mut p = self.base_params.clone();
        match self.axis {
            SweepAxis::Antennas => p.antennas = value as u32,
            SweepAxis::BandwidthHz => p.bandwidth_hz = value,
        }
        p
    }
}

/// One evaluated grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepPoint {
    pub axis_value: f64,
    pub class: BsClass,
    pub breakdown: PowerBreakdown,
}

/// Runs a sweep over the matching profiles: one point per
/// (value × class), ordered by axis value, classes in spec order.
pub fn sweep(
    spec: &SweepSpec,
    profiles: &[BsProfile],
    chip: &ChipTechnology,
    model: &ThroughputModel,
) -> Result<Vec<SweepPoint>> {
    spec.validate()?;
    let mut points = Vec::with_capacity(spec.values.len() * spec.classes.len());
    for &value in &spec.values {
        let params = spec.params_at(value);
        for &class in &spec.classes {
            let profile = profiles
                .iter()
                .find(|p| p.class == class)
                .ok_or_else(|| Error::Config(format!("no profile for class `{class}`")))?;
            let b = breakdown(profile, &params, chip, model)
                .map_err(|e| Error::SweepPoint { axis_value: value, source: Box::new(e) })?;
            points.push(SweepPoint { axis_value: value, class, breakdown: b });
        }
    }
    Ok(points)
}

/// The four published figure panels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Figure {
    Fig4a,
    Fig4b,
    Fig5a,
    Fig5b,
}

impl Figure {
    pub const ALL: [Figure; 4] = [Figure::Fig4a, Figure::Fig4b, Figure::Fig5a, Figure::Fig5b];

    pub fn label(self) -> &'static str {
        match self {
            Figure::Fig4a => "fig4a",
            Figure::Fig4b => "fig4b",
            Figure::Fig5a => "fig5a",
            Figure::Fig5b => "fig5b",
        }
    }

    /// What the panel plots.
    pub fn quantity(self) -> FigureQuantity {
        match self {
            Figure::Fig4a | Figure::Fig4b => FigureQuantity::ComputationPower,
            Figure::Fig5a | Figure::Fig5b => FigureQuantity::ComputationRatio,
        }
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for Figure {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Figure::ALL
            .iter()
            .copied()
            .find(|f| f.label() == s)
            .ok_or_else(|| format!("unknown figure `{s}` (expected fig4a|fig4b|fig5a|fig5b)"))
    }
}

/// Quantity a figure panel plots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FigureQuantity {
    ComputationPower,
    ComputationRatio,
}

impl FigureQuantity {
    pub fn label(self) -> &'static str {
        match self {
            FigureQuantity::ComputationPower => "computation_w",
            FigureQuantity::ComputationRatio => "computation_ratio",
        }
    }
}

/// Grid of one figure panel; both classes, default real parameters on the
/// held dimensions.
pub fn figure_spec(which: Figure) -> SweepSpec {
    let mut base = SystemParams::default_real();
    match which {
        Figure::Fig4a | Figure::Fig5a => SweepSpec {
            axis: SweepAxis::Antennas,
            values: vec![1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0, 128.0],
            base_params: base,
            classes: vec![BsClass::Macro, BsClass::Small],
        },
        Figure::Fig4b | Figure::Fig5b => {
            base.antennas = 4;
            SweepSpec {
                axis: SweepAxis::BandwidthHz,
                values: vec![5e6, 10e6, 20e6, 40e6, 80e6, 100e6, 200e6, 400e6],
                base_params: base,
                classes: vec![BsClass::Macro, BsClass::Small],
            }
        }
    }
}

/// A figure panel's data: the full sweep plus which column it plots.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureSeries {
    pub figure: Figure,
    pub quantity: FigureQuantity,
    pub axis: SweepAxis,
    pub points: Vec<SweepPoint>,
}

/// Evaluates one figure panel.
pub fn figure_series(
    which: Figure,
    profiles: &[BsProfile],
    chip: &ChipTechnology,
    model: &ThroughputModel,
) -> Result<FigureSeries> {
    let spec = figure_spec(which);
    let points = sweep(&spec, profiles, chip, model)?;
    Ok(FigureSeries { figure: which, quantity: which.quantity(), axis: spec.axis, points })
}

/// One line of the validation report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationRow {
    pub class: BsClass,
    /// `total_w` or `computation_w`.
    pub quantity: &'static str,
    /// What this build computes [W].
    pub model_w: f64,
    /// Published model value [W].
    pub reference_model_w: f64,
    /// Published measurement [W].
    pub measured_w: f64,
    /// |model − reference_model| / reference_model.
    pub rel_err_vs_model: f64,
    /// |model − measured| / measured.
    pub rel_err_vs_measured: f64,
}

/// Model-vs-published comparison at the EARTH point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    /// The comparison configuration (10 MHz, 2 antennas, 64-QAM, R = 5/6).
    pub params: SystemParams,
    pub rows: Vec<ValidationRow>,
}

impl ValidationReport {
    /// Largest relative error against the published model values.
    pub fn max_rel_err_vs_model(&self) -> f64 {
        self.rows.iter().map(|r| r.rel_err_vs_model).fold(0.0, f64::max)
    }

    pub fn within(&self, tolerance: f64) -> bool {
        self.max_rel_err_vs_model() <= tolerance
    }
}

/// Evaluates both profiles at the EARTH comparison point and tabulates the
/// errors against the published figures.
pub fn validate_earth(
    profiles: &[BsProfile],
    chip: &ChipTechnology,
    model: &ThroughputModel,
) -> Result<ValidationReport> {
    let params = earth::comparison_params();
    let mut rows = Vec::with_capacity(4);
    for &class in &BsClass::ALL {
        let profile = profiles
            .iter()
            .find(|p| p.class == class)
            .ok_or_else(|| Error::Config(format!("no profile for class `{class}`")))?;
        let b = breakdown(profile, &params, chip, model)?;
        let (ref_total, meas_total, ref_comp, meas_comp) = match class {
            BsClass::Macro => (
                earth::MACRO_MODEL_TOTAL_W,
                earth::MACRO_MEASURED_TOTAL_W,
                earth::MACRO_MODEL_COMPUTATION_W,
                earth::MACRO_MEASURED_COMPUTATION_W,
            ),
            BsClass::Small => (
                earth::SMALL_MODEL_TOTAL_W,
                earth::SMALL_MEASURED_TOTAL_W,
                earth::SMALL_MODEL_COMPUTATION_W,
                earth::SMALL_MEASURED_COMPUTATION_W,
            ),
        };
        rows.push(ValidationRow {
            class,
            quantity: "total_w",
            model_w: b.total_w,
            reference_model_w: ref_total,
            measured_w: meas_total,
            rel_err_vs_model: (b.total_w - ref_total).abs() / ref_total,
            rel_err_vs_measured: (b.total_w - meas_total).abs() / meas_total,
        });
        rows.push(ValidationRow {
            class,
            quantity: "computation_w",
            model_w: b.computation_w,
            reference_model_w: ref_comp,
            measured_w: meas_comp,
            rel_err_vs_model: (b.computation_w - ref_comp).abs() / ref_comp,
            rel_err_vs_measured: (b.computation_w - meas_comp).abs() / meas_comp,
        });
    }
    Ok(ValidationReport { params, rows })
}

// ---------------------------------------------------------------------------
// tests
// ---------------------------------------------------------------------------
