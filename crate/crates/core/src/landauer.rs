//! Physics chain from a rated workload to computation power.
//!
//! Erasing one bit of information dissipates at least `k·T·ln2` — the
//! Landauer limit. A practical transistor switches at a multiple ε of that
//! bound, so the energy per equivalent logic operation is
//!
//! ```text
//! E_FET = ε · k · T · ln2
//! ```
//!
//! Baseband workloads are rated in GOPS on a reference word width; the
//! instruction rate converts to an equivalent bit-switching throughput via
//! the measured power law
//!
//! ```text
//! IPS = GOPS · 1e9 / word_width
//! ρ   = (IPS / ω)^(1/γ)
//! ```
//!
//! and the power drawn by one hardware part is simply `ρ · E_FET`. At the
//! 22 nm node ε ≈ 10³; ω = 0.1 and γ = 0.64 are the fitted constants of the
//! throughput law.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Semiconductor process operating point for switching-energy computation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChipTechnology {
    /// Process feature size [nm]. Informational: the energy ratio below is
    /// what actually enters the power figures.
    pub feature_size_nm: f64,
    /// Ratio ε of the transistor switching energy to the Landauer limit.
    pub power_coefficient: f64,
    /// Junction temperature [K].
    pub temperature_k: f64,
    /// Boltzmann constant [J/K].
    pub boltzmann: f64,
}

impl Default for ChipTechnology {
    /// 22 nm node at room temperature: ε = 10³, T = 300 K.
    fn default() -> Self {
        ChipTechnology {
            feature_size_nm: 22.0,
            power_coefficient: 1e3,
            temperature_k: 300.0,
            boltzmann: 1.38e-23,
        }
    }
}

impl ChipTechnology {
    /// Checks the physical domain of every field.
    pub fn validate(&self) -> Result<()> {
        if !(self.feature_size_nm > 0.0) {
            return Err(Error::domain(
                "feature_size_nm",
                "feature_size_nm > 0",
                self.feature_size_nm,
            ));
        }
        if !(self.power_coefficient >= 1.0) {
            return Err(Error::domain(
                "power_coefficient",
                "power_coefficient >= 1 (a real switch cannot beat the Landauer limit)",
                self.power_coefficient,
            ));
        }
        if !(self.temperature_k > 0.0) {
            return Err(Error::domain("temperature_k", "temperature_k > 0", self.temperature_k));
        }
        if !(self.boltzmann > 0.0) {
            return Err(Error::domain("boltzmann", "boltzmann > 0", self.boltzmann));
        }
        Ok(())
    }
}

/// Fitted law converting an instruction rate to an equivalent
/// bit-switching throughput.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThroughputModel {
    /// Scale constant ω of the throughput law.
    pub omega: f64,
    /// Exponent γ of the throughput law, in (0, 1].
    pub gamma: f64,
    /// Word width the GOPS ratings refer to [bits per instruction].
    pub word_width_bits: u32,
}

impl Default for ThroughputModel {
    fn default() -> Self {
        ThroughputModel { omega: 0.1, gamma: 0.64, word_width_bits: 64 }
    }
}

impl ThroughputModel {
    pub fn validate(&self) -> Result<()> {
        if !(self.omega > 0.0) {
            return Err(Error::domain("omega", "omega > 0", self.omega));
        }
        if !(self.gamma > 0.0 && self.gamma <= 1.0) {
            return Err(Error::domain("gamma", "0 < gamma <= 1", self.gamma));
        }
        if self.word_width_bits == 0 {
            return Err(Error::domain("word_width_bits", "word_width_bits >= 1", 0.0));
        }
        Ok(())
    }
}

/// Minimum energy to erase one bit at the chip's temperature: `k·T·ln2` [J].
pub fn landauer_limit(chip: &ChipTechnology) -> Result<f64> {
    chip.validate()?;
    Ok(chip.boltzmann * chip.temperature_k * std::f64::consts::LN_2)
}

/// Energy per equivalent logic operation of a real transistor:
/// `ε·k·T·ln2` [J].
pub fn switching_energy(chip: &ChipTechnology) -> Result<f64> {
    Ok(chip.power_coefficient * landauer_limit(chip)?)
}

/// Instruction rate of a workload rated in GOPS [instructions/s].
pub fn gops_to_ips(gops: f64, model: &ThroughputModel) -> Result<f64> {
    model.validate()?;
    if !(gops >= 0.0) {
        return Err(Error::domain("gops", "gops >= 0", gops));
    }
    Ok(gops * 1e9 / f64::from(model.word_width_bits))
}

/// Equivalent bit-switching throughput `ρ = (IPS/ω)^(1/γ)` [bit ops/s].
pub fn ips_to_throughput(ips: f64, model: &ThroughputModel) -> Result<f64> {
    model.validate()?;
    if !(ips >= 0.0) {
        return Err(Error::domain("ips", "ips >= 0", ips));
    }
    Ok((ips / model.omega).powf(model.gamma.recip()))
}

/// Computation power of one hardware part rated at `gops` [W].
///
/// Strictly increasing in the workload, in ε and in T; exactly zero for a
/// zero workload.
pub fn part_power(gops: f64, chip: &ChipTechnology, model: &ThroughputModel) -> Result<f64> {
    let ips = gops_to_ips(gops, model)?;
    let rho = ips_to_throughput(ips, model)?;
    Ok(rho * switching_energy(chip)?)
}

// ---------------------------------------------------------------------------
// tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    // Expected values below were frozen from an independent high-precision
    // (50-digit) recomputation of the formulas in this module's docs.

    #[test]
    fn landauer_limit_at_room_temperature() {
        let chip = ChipTechnology::default();
        assert_relative_eq!(
            landauer_limit(&chip).unwrap(),
            2.8696293275181736e-21,
            max_relative = 1e-15
        );
    }

    #[test]
    fn landauer_limit_at_one_kelvin_is_k_ln2() {
        let chip = ChipTechnology { temperature_k: 1.0, ..ChipTechnology::default() };
        assert_relative_eq!(
            landauer_limit(&chip).unwrap(),
            9.565431091727245e-24,
            max_relative = 1e-15
        );
    }

    #[test]
    fn landauer_limit_doubles_exactly_with_temperature() {
        let t300 = ChipTechnology::default();
        let t600 = ChipTechnology { temperature_k: 600.0, ..ChipTechnology::default() };
        // scaling by a power of two commutes exactly with rounding
        assert_eq!(
            landauer_limit(&t600).unwrap(),
            2.0 * landauer_limit(&t300).unwrap(),
            "k·T·ln2 must be exactly linear in T for a power-of-two factor"
        );
    }

    #[test]
    fn switching_energy_at_default_node() {
        let chip = ChipTechnology::default();
        assert_relative_eq!(
            switching_energy(&chip).unwrap(),
            2.8696293275181736e-18,
            max_relative = 1e-15
        );
    }

    #[test]
    fn switching_energy_with_unit_coefficient_is_the_limit_itself() {
        let chip = ChipTechnology { power_coefficient: 1.0, ..ChipTechnology::default() };
        assert_eq!(switching_energy(&chip).unwrap(), landauer_limit(&chip).unwrap());
    }

    #[test]
    fn gops_conversion_on_the_default_word_width() {
        let model = ThroughputModel::default();
        // one instruction per word-width bit: 64 GOPS -> 1e9 IPS
        assert_eq!(gops_to_ips(64.0, &model).unwrap(), 1e9);
        assert_eq!(gops_to_ips(720.0, &model).unwrap(), 1.125e10);
        assert_eq!(gops_to_ips(0.0, &model).unwrap(), 0.0);
    }

    #[test]
    fn negative_workload_is_rejected() {
        let model = ThroughputModel::default();
        let err = gops_to_ips(-1.0, &model).unwrap_err();
        assert!(
            err.to_string().contains("gops"),
            "diagnostic should name the parameter, got: {err}"
        );
        assert!(ips_to_throughput(-1.0, &model).is_err());
    }

    #[test]
    fn throughput_law_fixed_point_and_power_law() {
        let model = ThroughputModel::default();
        // at IPS = ω the law collapses to 1
        assert_eq!(ips_to_throughput(0.1, &model).unwrap(), 1.0);
        // 250 GOPS -> 3.90625e9 IPS -> (3.90625e10)^(1/0.64)
        let rho = ips_to_throughput(3.90625e9, &model).unwrap();
        assert_relative_eq!(rho, 3.545071952012042e16, max_relative = 1e-13);
        assert_eq!(ips_to_throughput(0.0, &model).unwrap(), 0.0);
    }

    #[test]
    fn throughput_homogeneity_factor() {
        let model = ThroughputModel::default();
        // doubling IPS multiplies ρ by 2^(1/0.64)
        let r1 = ips_to_throughput(1e9, &model).unwrap();
        let r2 = ips_to_throughput(2e9, &model).unwrap();
        assert_relative_eq!(r2 / r1, 2.9536522918789986, max_relative = 1e-13);
    }

    #[test]
    fn part_power_of_a_filter_class_workload() {
        let chip = ChipTechnology::default();
        let model = ThroughputModel::default();
        assert_relative_eq!(
            part_power(250.0, &chip, &model).unwrap(),
            0.10173042441655855,
            max_relative = 1e-13
        );
    }

    #[test]
    fn part_power_is_zero_iff_workload_is_zero() {
        let chip = ChipTechnology::default();
        let model = ThroughputModel::default();
        assert_eq!(part_power(0.0, &chip, &model).unwrap(), 0.0);
        assert!(part_power(1e-6, &chip, &model).unwrap() > 0.0);
    }

    #[test]
    fn part_power_is_monotonic_in_workload_epsilon_and_temperature() {
        let chip = ChipTechnology::default();
        let model = ThroughputModel::default();
        let base = part_power(100.0, &chip, &model).unwrap();
        assert!(part_power(101.0, &chip, &model).unwrap() > base);

        let hotter = ChipTechnology { temperature_k: 310.0, ..ChipTechnology::default() };
        assert!(part_power(100.0, &hotter, &model).unwrap() > base);

        let leakier = ChipTechnology { power_coefficient: 2e3, ..ChipTechnology::default() };
        assert!(part_power(100.0, &leakier, &model).unwrap() > base);
    }

    #[test]
    fn invalid_chip_parameters_are_rejected() {
        let frozen = ChipTechnology { temperature_k: 0.0, ..ChipTechnology::default() };
        assert!(landauer_limit(&frozen).is_err());

        // below the Landauer bound
        let impossible = ChipTechnology { power_coefficient: 0.5, ..ChipTechnology::default() };
        assert!(switching_energy(&impossible).is_err());

        let degenerate = ThroughputModel { gamma: 0.0, ..ThroughputModel::default() };
        assert!(ips_to_throughput(1.0, &degenerate).is_err());
    }
}
