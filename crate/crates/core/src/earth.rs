//! EARTH-project comparison data.
//!
//! The EARTH project published measured power figures for deployed macro
//! and small (femto-class) base stations at a 10 MHz, 2×2-antenna
//! configuration. The built-in profiles calibrate their baseband scalar so
//! that the model reproduces the corresponding published model values at
//! exactly that configuration, and the `validate` report compares both.

use crate::bbu::SystemParams;

/// Macro cell, measured: total input power [W].
pub const MACRO_MEASURED_TOTAL_W: f64 = 321.6;
/// Macro cell, measured: baseband computation power [W].
pub const MACRO_MEASURED_COMPUTATION_W: f64 = 29.68;
/// Macro cell: total input power the calibrated model reproduces [W].
pub const MACRO_MODEL_TOTAL_W: f64 = 317.84;
/// Macro cell: baseband power the default calibration is fit to [W].
pub const MACRO_MODEL_COMPUTATION_W: f64 = 24.78;

/// Small cell, measured: total input power [W].
pub const SMALL_MEASURED_TOTAL_W: f64 = 6.2;
/// Small cell, measured: baseband computation power [W].
pub const SMALL_MEASURED_COMPUTATION_W: f64 = 2.4;
/// Small cell: total input power the calibrated model reproduces [W].
pub const SMALL_MODEL_TOTAL_W: f64 = 7.22;
/// Small cell: baseband power the default calibration is fit to [W].
pub const SMALL_MODEL_COMPUTATION_W: f64 = 3.6;

/// Configuration of the comparison: 10 MHz, 2 antennas, 64-QAM at coding
/// rate 5/6, full duty cycles.
pub fn comparison_params() -> SystemParams {
    SystemParams {
        bandwidth_hz: 10e6,
        antennas: 2,
        modulation_bits: 6,
        coding_rate: 5.0 / 6.0,
        time_duty: 1.0,
        freq_duty: 1.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comparison_point_is_valid_and_narrowband() {
        let p = comparison_params();
        p.validate().unwrap();
        assert_eq!(p.bandwidth_hz, 10e6);
        assert_eq!(p.antennas, 2);
    }

    #[test]
    fn model_figures_sit_near_the_measurements() {
        // sanity on the data itself: model and measurement agree to ~20%
        assert!(
            (MACRO_MODEL_TOTAL_W - MACRO_MEASURED_TOTAL_W).abs() / MACRO_MEASURED_TOTAL_W < 0.2
        );
        assert!(
            (SMALL_MODEL_TOTAL_W - SMALL_MEASURED_TOTAL_W).abs() / SMALL_MEASURED_TOTAL_W < 0.2
        );
    }
}
