//! Profile overrides from a TOML file.
//!
//! A run starts from the built-in chip, throughput model and class
//! profiles; an optional file overrides any subset of their fields. Field
//! names mirror the domain types one to one:
//!
//! ```toml
//! [chip]
//! power_coefficient = 1000.0
//! temperature_k = 300.0
//!
//! [small.transmission]
//! rf_power_w = 0.5
//!
//! [small.losses]
//! sigma_dc = 0.08
//!
//! [[parts]]
//! name = "filter"
//! gops_small = 300.0
//! exponents = { bw = 1, m = 0, r = 0, ant = 1, dt = 1, df = 0 }
//! ```
//!
//! `[[parts]]` entries override the matching row of the workload table by
//! name (the eight names are fixed). Every merged value is re-validated
//! against the same invariants as the built-ins before anything runs.

use serde::Deserialize;
use std::path::Path;

use crate::bbu::{BsClass, PartName, ScalingExponents};
use crate::bs_power::{pa_power, BsProfile, PaDecomposition};
use crate::error::{Error, Result};
use crate::landauer::{ChipTechnology, ThroughputModel};

/// A fully resolved model configuration: chip, throughput law and one
/// profile per class.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelConfig {
    pub chip: ChipTechnology,
    pub throughput: ThroughputModel,
    pub profiles: Vec<BsProfile>,
}

impl Default for ModelConfig {
    fn default() -> Self {
        ModelConfig {
            chip: ChipTechnology::default(),
            throughput: ThroughputModel::default(),
            profiles: crate::bs_power::builtin_profiles(),
        }
    }
}

impl ModelConfig {
    pub fn profile(&self, class: BsClass) -> Result<&BsProfile> {
        self.profiles
            .iter()
            .find(|p| p.class == class)
            .ok_or_else(|| Error::Config(format!("no profile for class `{class}`")))
    }

    pub fn validate(&self) -> Result<()> {
        self.chip.validate()?;
        self.throughput.validate()?;
        for p in &self.profiles {
            p.validate()?;
        }
        Ok(())
    }
}

// --- file schema (every field optional, merged onto the built-ins) --------

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    chip: Option<ChipOverride>,
    throughput: Option<ThroughputOverride>,
    #[serde(rename = "macro")]
    macro_profile: Option<ProfileOverride>,
    small: Option<ProfileOverride>,
    parts: Option<Vec<PartOverride>>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ChipOverride {
    feature_size_nm: Option<f64>,
    power_coefficient: Option<f64>,
    temperature_k: Option<f64>,
    boltzmann: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ThroughputOverride {
    omega: Option<f64>,
    gamma: Option<f64>,
    word_width_bits: Option<u32>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProfileOverride {
    transmission: Option<TransmissionOverride>,
    losses: Option<LossOverride>,
    calibration: Option<CalibrationOverride>,
    reference: Option<ReferenceOverride>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct TransmissionOverride {
    pa_power_w: Option<f64>,
    rf_power_w: Option<f64>,
    p_out_w: Option<f64>,
    eta_pa: Option<f64>,
    feed_loss: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct LossOverride {
    sigma_dc: Option<f64>,
    sigma_ms: Option<f64>,
    sigma_cool: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct CalibrationOverride {
    value: Option<f64>,
    provenance: Option<String>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ReferenceOverride {
    bandwidth_hz: Option<f64>,
    antennas: Option<u32>,
    modulation_bits: Option<u32>,
    coding_rate: Option<f64>,
    time_duty: Option<f64>,
    freq_duty: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartOverride {
    name: String,
    gops_macro: Option<f64>,
    gops_small: Option<f64>,
    exponents: Option<ExponentsOverride>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExponentsOverride {
    bw: Option<u8>,
    m: Option<u8>,
    r: Option<u8>,
    ant: Option<u8>,
    dt: Option<u8>,
    df: Option<u8>,
}

fn set<T: Copy>(target: &mut T, value: Option<T>) {
    if let Some(v) = value {
        *target = v;
    }
}

fn apply_profile(profile: &mut BsProfile, over: &ProfileOverride) -> Result<()> {
    if let Some(tx) = &over.transmission {
        set(&mut profile.transmission.pa_power_w, tx.pa_power_w);
        set(&mut profile.transmission.rf_power_w, tx.rf_power_w);
        let any_decomp = tx.p_out_w.is_some() || tx.eta_pa.is_some() || tx.feed_loss.is_some();
        if any_decomp {
            let (p_out_w, eta_pa, feed_loss) = match (tx.p_out_w, tx.eta_pa, tx.feed_loss) {
                (Some(p), Some(e), Some(f)) => (p, e, f),
                _ => {
                    return Err(Error::Config(
                        "transmission decomposition needs all of p_out_w, eta_pa, feed_loss".into(),
                    ))
                }
            };
            let derived = pa_power(p_out_w, eta_pa, feed_loss)?;
            if tx.pa_power_w.is_none() {
                profile.transmission.pa_power_w = derived;
            }
            profile.transmission.decomposition =
                Some(PaDecomposition { p_out_w, eta_pa, feed_loss });
        } else if tx.pa_power_w.is_some() {
            // a bare PA figure invalidates any stored decomposition
            profile.transmission.decomposition = None;
        }
    }
    if let Some(l) = &over.losses {
        set(&mut profile.losses.sigma_dc, l.sigma_dc);
        set(&mut profile.losses.sigma_ms, l.sigma_ms);
        set(&mut profile.losses.sigma_cool, l.sigma_cool);
    }
    if let Some(c) = &over.calibration {
        if let Some(v) = c.value {
            profile.calibration.value = v;
            profile.calibration.provenance =
                c.provenance.clone().unwrap_or_else(|| "overrides file".to_owned());
        } else if let Some(p) = &c.provenance {
            profile.calibration.provenance = p.clone();
        }
    }
    if let Some(r) = &over.reference {
        set(&mut profile.reference.bandwidth_hz, r.bandwidth_hz);
        set(&mut profile.reference.antennas, r.antennas);
        set(&mut profile.reference.modulation_bits, r.modulation_bits);
        set(&mut profile.reference.coding_rate, r.coding_rate);
        set(&mut profile.reference.time_duty, r.time_duty);
        set(&mut profile.reference.freq_duty, r.freq_duty);
    }
    Ok(())
}

fn apply_part(table: &mut [crate::bbu::BbuPartProfile], over: &PartOverride) -> Result<()> {
    let name: PartName =
        over.name.parse().map_err(|e: String| Error::Config(format!("parts: {e}")))?;
    let row =
        table.iter_mut().find(|p| p.name == name).expect("built-in table covers every part name");
    set(&mut row.gops_macro, over.gops_macro);
    set(&mut row.gops_small, over.gops_small);
    if let Some(e) = &over.exponents {
        let mut merged: ScalingExponents = row.exponents;
        set(&mut merged.bw, e.bw);
        set(&mut merged.m, e.m);
        set(&mut merged.r, e.r);
        set(&mut merged.ant, e.ant);
        set(&mut merged.dt, e.dt);
        set(&mut merged.df, e.df);
        row.exponents = merged;
    }
    Ok(())
}

/// Parses a TOML override string and merges it onto the built-ins.
pub fn parse_overrides(text: &str) -> Result<ModelConfig> {
    let file: FileConfig =
        toml::from_str(text).map_err(|e| Error::Config(format!("overrides file: {e}")))?;
    let mut config = ModelConfig::default();

    if let Some(c) = &file.chip {
        set(&mut config.chip.feature_size_nm, c.feature_size_nm);
        set(&mut config.chip.power_coefficient, c.power_coefficient);
        set(&mut config.chip.temperature_k, c.temperature_k);
        set(&mut config.chip.boltzmann, c.boltzmann);
    }
    if let Some(t) = &file.throughput {
        set(&mut config.throughput.omega, t.omega);
        set(&mut config.throughput.gamma, t.gamma);
        set(&mut config.throughput.word_width_bits, t.word_width_bits);
    }

    // a shared part table: overrides apply to every profile
    let mut table = crate::bbu::builtin_part_table();
    if let Some(parts) = &file.parts {
        for over in parts {
            apply_part(&mut table, over)?;
        }
    }
    for profile in &mut config.profiles {
        profile.parts = table.clone();
        let over = match profile.class {
            BsClass::Macro => &file.macro_profile,
            BsClass::Small => &file.small,
        };
        if let Some(over) = over {
            apply_profile(profile, over)?;
        }
    }

    config.validate()?;
    Ok(config)
}

/// Loads and merges an overrides file.
pub fn load_model_config(path: &Path) -> Result<ModelConfig> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read `{}`: {e}", path.display())))?;
    parse_overrides(&text)
}

// ---------------------------------------------------------------------------
// tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_overrides_keep_the_builtins() {
        let config = parse_overrides("").unwrap();
        assert_eq!(config, ModelConfig::default());
    }

    #[test]
    fn partial_override_touches_only_its_field() {
        let config = parse_overrides("[small.transmission]\nrf_power_w = 0.5\n").unwrap();
        let small = config.profile(BsClass::Small).unwrap();
        assert_eq!(small.transmission.rf_power_w, 0.5);
        assert_eq!(small.transmission.pa_power_w, 1.0, "untouched field keeps its default");
        let default_macro = ModelConfig::default();
        assert_eq!(
            config.profile(BsClass::Macro).unwrap(),
            default_macro.profile(BsClass::Macro).unwrap()
        );
    }

    #[test]
    fn chip_and_part_overrides_merge() {
        let text = r#"
[chip]
temperature_k = 350.0

[[parts]]
name = "filter"
gops_small = 300.0
"#;
        let config = parse_overrides(text).unwrap();
        assert_eq!(config.chip.temperature_k, 350.0);
        assert_eq!(config.chip.power_coefficient, 1e3);
        let small = config.profile(BsClass::Small).unwrap();
        let filter = small.parts.iter().find(|p| p.name == PartName::Filter).unwrap();
        assert_eq!(filter.gops_small, 300.0);
        assert_eq!(filter.gops_macro, 400.0, "other column untouched");
    }

    #[test]
    fn decomposition_override_derives_the_pa_figure() {
        let text = r#"
[macro.transmission]
p_out_w = 20.0
eta_pa = 0.39
feed_loss = 0.5
"#;
        let config = parse_overrides(text).unwrap();
        let tx = &config.profile(BsClass::Macro).unwrap().transmission;
        assert!((tx.pa_power_w - 102.56410256410257).abs() < 1e-9);
        assert!(tx.decomposition.is_some());
    }

    #[test]
    fn incomplete_decomposition_is_rejected() {
        let err = parse_overrides("[macro.transmission]\np_out_w = 20.0\n").unwrap_err();
        assert!(err.to_string().contains("p_out_w, eta_pa, feed_loss"), "{err}");
    }

    #[test]
    fn total_cooling_loss_is_rejected() {
        let err = parse_overrides("[small.losses]\nsigma_cool = 1.0\n").unwrap_err();
        assert!(err.to_string().contains("sigma_cool"), "{err}");
    }

    #[test]
    fn unknown_fields_and_parts_are_rejected_by_name() {
        let err = parse_overrides("[small.transmission]\nrf_poower_w = 0.5\n").unwrap_err();
        assert!(err.to_string().contains("rf_poower_w"), "{err}");

        let err = parse_overrides("[[parts]]\nname = \"turbo\"\n").unwrap_err();
        assert!(err.to_string().contains("turbo"), "{err}");
    }

    #[test]
    fn out_of_range_exponent_is_rejected() {
        let text = "[[parts]]\nname = \"fec\"\nexponents = { bw = 3, m = 1, r = 1, ant = 1, dt = 1, df = 1 }\n";
        let err = parse_overrides(text).unwrap_err();
        assert!(err.to_string().contains("{0, 1, 2}"), "{err}");
    }

    #[test]
    fn calibration_override_replaces_value_and_provenance() {
        let config =
            parse_overrides("[small.calibration]\nvalue = 10.0\nprovenance = \"bench\"\n").unwrap();
        let c = &config.profile(BsClass::Small).unwrap().calibration;
        assert_eq!(c.value, 10.0);
        assert_eq!(c.provenance, "bench");
    }

    #[test]
    fn missing_file_is_a_config_error() {
        let err = load_model_config(Path::new("/nonexistent/overrides.toml")).unwrap_err();
        assert!(matches!(err, Error::Config(_)));
    }
}
