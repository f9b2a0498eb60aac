//! Whole-station power composition.
//!
//! A base station's input power splits three ways:
//!
//! ```text
//! P_in = (N·(P_PA + P_RF) + P_BB) / ((1-σ_DC)(1-σ_MS)(1-σ_cool))
//! ```
//!
//! — per-antenna power amplifier and RF chain power (transmission), the
//! baseband computation power from [`crate::bbu`], and the conversion,
//! supply and cooling overhead expressed as loss rates on the total. When
//! the PA is described by its radiated output power, conversion efficiency
//! and feeder loss,
//!
//! ```text
//! P_PA = P_out / (η_PA · (1 - σ_feed))
//! ```

use serde::{Deserialize, Serialize};

use crate::bbu::{
    bbu_power_with, builtin_part_table, calibrate, BbuPartProfile, BsClass, CalibrationScalar,
    SystemParams,
};
use crate::earth;
use crate::error::{Error, Result};
use crate::landauer::{ChipTechnology, ThroughputModel};

/// Optional physical decomposition of a PA power figure.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PaDecomposition {
    /// Radiated output power [W].
    pub p_out_w: f64,
    /// PA conversion efficiency, in (0, 1].
    pub eta_pa: f64,
    /// Feeder loss as a linear fraction, in [0, 1) (0.5 for a -3 dB feeder).
    pub feed_loss: f64,
}

/// Per-antenna transmission hardware of one BS class.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransmissionProfile {
    /// Power amplifier consumption per antenna [W].
    pub pa_power_w: f64,
    /// RF chain consumption per antenna [W].
    pub rf_power_w: f64,
    /// Where `pa_power_w` came from, if it was derived rather than measured.
    pub decomposition: Option<PaDecomposition>,
}

impl TransmissionProfile {
    pub fn validate(&self) -> Result<()> {
        if !(self.pa_power_w >= 0.0 && self.pa_power_w.is_finite()) {
            return Err(Error::domain("pa_power_w", "pa_power_w >= 0, finite", self.pa_power_w));
        }
        if !(self.rf_power_w >= 0.0 && self.rf_power_w.is_finite()) {
            return Err(Error::domain("rf_power_w", "rf_power_w >= 0, finite", self.rf_power_w));
        }
        if let Some(d) = &self.decomposition {
            let derived = pa_power(d.p_out_w, d.eta_pa, d.feed_loss)?;
            let scale = self.pa_power_w.abs().max(1.0);
            if (derived - self.pa_power_w).abs() > 1e-9 * scale {
                return Err(Error::Config(format!(
                    "pa_power_w = {} is inconsistent with its decomposition \
                     p_out/(eta*(1-feed)) = {derived}",
                    self.pa_power_w
                )));
            }
        }
        Ok(())
    }
}

/// Loss rates applied to the whole station's power budget.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LossRates {
    /// DC-DC conversion loss rate, in [0, 1).
    pub sigma_dc: f64,
    /// Mains supply loss rate, in [0, 1).
    pub sigma_ms: f64,
    /// Active cooling loss rate, in [0, 1); 0 for convection-cooled units.
    pub sigma_cool: f64,
}

impl LossRates {
    /// Fraction of the input power that reaches the load: `Π (1-σ)`.
    pub fn product(&self) -> f64 {
        (1.0 - self.sigma_dc) * (1.0 - self.sigma_ms) * (1.0 - self.sigma_cool)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, s) in [
            ("sigma_dc", self.sigma_dc),
            ("sigma_ms", self.sigma_ms),
            ("sigma_cool", self.sigma_cool),
        ] {
            if !(0.0..1.0).contains(&s) {
                return Err(Error::Domain { name, constraint: "0 <= sigma < 1", value: s });
            }
        }
        // individually < 1 already guarantees this; keep the check explicit
        // so a future relaxation cannot divide by zero
        if !(self.product() > 0.0) {
            return Err(Error::domain("losses", "(1-sigma) product > 0", self.product()));
        }
        Ok(())
    }
}

/// Everything that defines one base station class for this model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BsProfile {
    pub class: BsClass,
    pub transmission: TransmissionProfile,
    pub losses: LossRates,
    /// Baseband workload table (per-class GOPS columns; `class` selects).
    pub parts: Vec<BbuPartProfile>,
    /// Configuration the GOPS ratings refer to.
    pub reference: SystemParams,
    pub calibration: CalibrationScalar,
}

impl BsProfile {
    /// Built-in profile of one class, calibrated against the published
    /// EARTH-point baseband figures under the default chip and throughput
    /// models.
    pub fn builtin(class: BsClass) -> Self {
        let chip = ChipTechnology::default();
        let model = ThroughputModel::default();
        let target = match class {
            BsClass::Macro => earth::MACRO_MODEL_COMPUTATION_W,
            BsClass::Small => earth::SMALL_MODEL_COMPUTATION_W,
        };
        let calibration = calibrate(class, target, &earth::comparison_params(), &chip, &model)
            .expect("built-in table has positive workload at the comparison point");
        let (transmission, losses) = match class {
            BsClass::Macro => (
                TransmissionProfile { pa_power_w: 102.6, rf_power_w: 11.4, decomposition: None },
                LossRates { sigma_dc: 0.06, sigma_ms: 0.07, sigma_cool: 0.09 },
            ),
            BsClass::Small => (
                TransmissionProfile { pa_power_w: 1.0, rf_power_w: 0.19, decomposition: None },
                // small cells are convection cooled
                LossRates { sigma_dc: 0.08, sigma_ms: 0.10, sigma_cool: 0.0 },
            ),
        };
        BsProfile {
            class,
            transmission,
            losses,
            parts: builtin_part_table(),
            reference: crate::bbu::reference_params(),
            calibration,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.transmission.validate()?;
        self.losses.validate()?;
        if self.parts.is_empty() {
            return Err(Error::Config("profile has an empty part table".into()));
        }
        for p in &self.parts {
            p.validate()?;
        }
        self.reference.validate()?;
        self.calibration.validate()
    }
}

/// Both built-in profiles, macro first.
pub fn builtin_profiles() -> Vec<BsProfile> {
    vec![BsProfile::builtin(BsClass::Macro), BsProfile::builtin(BsClass::Small)]
}

/// PA consumption from its radiated output power:
/// `P_out / (η_PA · (1-σ_feed))` [W].
pub fn pa_power(p_out_w: f64, eta_pa: f64, feed_loss: f64) -> Result<f64> {
    if !(p_out_w >= 0.0 && p_out_w.is_finite()) {
        return Err(Error::domain("p_out_w", "p_out_w >= 0, finite", p_out_w));
    }
    if !(eta_pa > 0.0 && eta_pa <= 1.0) {
        return Err(Error::domain("eta_pa", "0 < eta_pa <= 1", eta_pa));
    }
    if !(0.0..1.0).contains(&feed_loss) {
        return Err(Error::domain("feed_loss", "0 <= feed_loss < 1", feed_loss));
    }
    Ok(p_out_w / (eta_pa * (1.0 - feed_loss)))
}

/// Transmission power of `antennas` parallel chains:
/// `N·(P_PA + P_RF)` [W].
pub fn transmission_power(profile: &TransmissionProfile, antennas: u32) -> Result<f64> {
    profile.validate()?;
    if antennas == 0 {
        return Err(Error::domain("antennas", "antennas >= 1", 0.0));
    }
    Ok(f64::from(antennas) * (profile.pa_power_w + profile.rf_power_w))
}

/// Station input power covering transmission, computation and losses [W].
pub fn total_power(transmission_w: f64, computation_w: f64, losses: &LossRates) -> Result<f64> {
    losses.validate()?;
    if !(transmission_w >= 0.0) {
        return Err(Error::domain("transmission_w", "transmission_w >= 0", transmission_w));
    }
    if !(computation_w >= 0.0) {
        return Err(Error::domain("computation_w", "computation_w >= 0", computation_w));
    }
    Ok((transmission_w + computation_w) / losses.product())
}

/// Full power breakdown of one station at one configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerBreakdown {
    /// Calibrated per-part baseband contributions in table order [W].
    pub per_part_w: Vec<(crate::bbu::PartName, f64)>,
    /// Baseband computation power (sum of the parts) [W].
    pub computation_w: f64,
    /// PA + RF transmission power over all antennas [W].
    pub transmission_w: f64,
    /// Conversion, supply and cooling overhead [W].
    pub overhead_w: f64,
    /// Station input power [W].
    pub total_w: f64,
    /// computation_w / total_w.
    pub computation_ratio: f64,
}

/// Evaluates one profile at one configuration.
pub fn breakdown(
    bs: &BsProfile,
    params: &SystemParams,
    chip: &ChipTechnology,
    model: &ThroughputModel,
) -> Result<PowerBreakdown> {
    bs.validate()?;
    let bbu =
        bbu_power_with(&bs.parts, bs.class, params, &bs.reference, chip, model, &bs.calibration)?;
    let transmission_w = transmission_power(&bs.transmission, params.antennas)?;
    let total_w = total_power(transmission_w, bbu.total_w, &bs.losses)?;
    let computation_ratio = if total_w > 0.0 { bbu.total_w / total_w } else { 0.0 };
    Ok(PowerBreakdown {
        per_part_w: bbu.per_part_w,
        computation_w: bbu.total_w,
        transmission_w,
        overhead_w: total_w - transmission_w - bbu.total_w,
        total_w,
        computation_ratio,
    })
}

// ---------------------------------------------------------------------------
// tests
// ---------------------------------------------------------------------------
