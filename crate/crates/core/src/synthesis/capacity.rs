//! Scale estimate for a given optical band and per-channel bandwidth.

use crate::error::{Error, Result};

/// Speed of light, km/s. Dividing by a wavelength in nm yields GHz.
pub const SPEED_OF_LIGHT_KM_S: f64 = 299_792.458;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacityEstimate {
    /// Optical bandwidth between the two wavelengths, GHz.
    pub delta_f: f64,
    pub max_channels: u64,
    pub max_operands: u32,
    pub modulators_proposed: u64,
    /// Microring electro-optic arrays need `N^2` modulators.
    pub modulators_eo: u64,
}

impl CapacityEstimate {
    /// `delta_f` truncated to 0.1 GHz for display.
    pub fn delta_f_display(&self) -> String {
        format!("{:.1}", (self.delta_f * 10.0).floor() / 10.0)
    }
}

/// Modulators needed for `n` operands: `(n, n^2)` for the spectral cascade
/// and a microring electro-optic array respectively.
pub fn modulator_counts(n: u64) -> (u64, u64) {
    (n, n * n)
}

pub fn estimate_capacity(lambda1_nm: f64, lambda2_nm: f64, channel_bandwidth_ghz: f64) -> Result<CapacityEstimate> {
    if !(lambda1_nm > 0.0 && lambda2_nm > lambda1_nm && lambda2_nm.is_finite()) {
        return Err(Error::InvalidCapacityInput(format!(
            "need 0 < lambda1 < lambda2, got {lambda1_nm} and {lambda2_nm}"
        )));
    }
    if !(channel_bandwidth_ghz > 0.0 && channel_bandwidth_ghz.is_finite()) {
        return Err(Error::InvalidCapacityInput(format!(
            "channel bandwidth must be positive, got {channel_bandwidth_ghz}"
        )));
    }
    let delta_f = SPEED_OF_LIGHT_KM_S * 1e3 / lambda1_nm - SPEED_OF_LIGHT_KM_S * 1e3 / lambda2_nm;
    let max_channels = (delta_f / channel_bandwidth_ghz).floor() as u64;
    let max_operands = if max_channels == 0 { 0 } else { max_channels.ilog2() };
    let (modulators_proposed, modulators_eo) = modulator_counts(u64::from(max_operands));
    Ok(CapacityEstimate {
        delta_f,
        max_channels,
        max_operands,
        modulators_proposed,
        modulators_eo,
    })
}
