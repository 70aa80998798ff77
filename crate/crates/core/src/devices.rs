//! Optical elements as transformations on per-channel power spectra.
//!
//! Powers are linear mW throughout; dB and dBm appear only in parameters and
//! reports. Every element adds powers incoherently.

use serde::{Deserialize, Serialize};

use crate::channel::{plus_set, ChannelMask, WavelengthGrid};
use crate::error::{Error, Result};

pub fn db_to_ratio(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

pub fn dbm_to_mw(dbm: f64) -> f64 {
    10f64.powf(dbm / 10.0)
}

/// `0 mW` maps to `-inf` dBm.
pub fn mw_to_dbm(mw: f64) -> f64 {
    if mw <= 0.0 {
        f64::NEG_INFINITY
    } else {
        10.0 * mw.log10()
    }
}

/// Physical parameters of the device chain.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DeviceParams {
    /// Per-channel source power, dBm.
    pub source_power: f64,
    /// Loss of every spectral modulator stage (and spatial switch), dB.
    pub sm_insertion_loss: f64,
    /// Extra suppression of the blocked branch, dB.
    pub stage_extinction: f64,
    pub edfa_gain: f64,
    /// The amplifier sits after this stage (clamped to the last stage).
    pub edfa_position: usize,
    /// ASE floor at the longest wavelength, dBm.
    pub ase_floor_long: f64,
    /// ASE floor at the shortest wavelength, dBm.
    pub ase_floor_short: f64,
    pub ws_insertion_loss: f64,
    /// Lossless, infinitely extinguishing, noiseless chain.
    pub ideal_mode: bool,
}

impl Default for DeviceParams {
    fn default() -> Self {
        Self {
            source_power: 0.0,
            sm_insertion_loss: 4.0,
            stage_extinction: 25.0,
            edfa_gain: 16.0,
            edfa_position: 4,
            ase_floor_long: -45.0,
            ase_floor_short: -35.0,
            ws_insertion_loss: 5.0,
            ideal_mode: false,
        }
    }
}

impl DeviceParams {
    pub fn ideal() -> Self {
        Self {
            ideal_mode: true,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let finite = [
            ("source_power", self.source_power),
            ("sm_insertion_loss", self.sm_insertion_loss),
            ("stage_extinction", self.stage_extinction),
            ("edfa_gain", self.edfa_gain),
            ("ase_floor_long", self.ase_floor_long),
            ("ase_floor_short", self.ase_floor_short),
            ("ws_insertion_loss", self.ws_insertion_loss),
        ];
        if let Some((name, _)) = finite.iter().find(|(_, v)| !v.is_finite()) {
            return Err(Error::InvalidParams(format!("{name} must be finite")));
        }
        if self.stage_extinction <= 0.0 {
            return Err(Error::InvalidParams("stage_extinction must be > 0 dB".into()));
        }
        if self.ase_floor_short < self.ase_floor_long {
            return Err(Error::InvalidParams(
                "ase_floor_short must be >= ase_floor_long".into(),
            ));
        }
        if self.sm_insertion_loss < 0.0 || self.ws_insertion_loss < 0.0 {
            return Err(Error::InvalidParams("insertion losses must be >= 0 dB".into()));
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let params: Self = serde_json::from_str(text)?;
        params.validate()?;
        Ok(params)
    }

    pub fn source_mw(&self) -> f64 {
        dbm_to_mw(self.source_power)
    }

    /// Transmission of the selected branch of a stage or switch.
    pub fn pass_factor(&self) -> f64 {
        if self.ideal_mode {
            1.0
        } else {
            db_to_ratio(-self.sm_insertion_loss)
        }
    }

    /// Transmission of the blocked branch.
    pub fn block_factor(&self) -> f64 {
        if self.ideal_mode {
            0.0
        } else {
            db_to_ratio(-(self.sm_insertion_loss + self.stage_extinction))
        }
    }

    pub fn ws_factor(&self) -> f64 {
        if self.ideal_mode {
            1.0
        } else {
            db_to_ratio(-self.ws_insertion_loss)
        }
    }

    /// ASE floor added at channel `c` of `grid`, in mW.
    pub fn ase_mw(&self, grid: &WavelengthGrid, c: usize) -> f64 {
        if self.ideal_mode {
            return 0.0;
        }
        let n = grid.channel_count;
        let frac = if n <= 1 {
            0.0
        } else {
            (grid.wavelength(c) - grid.wavelength(0)) / (grid.wavelength(n - 1) - grid.wavelength(0))
        };
        dbm_to_mw(self.ase_floor_short + (self.ase_floor_long - self.ase_floor_short) * frac)
    }
}

/// Per-channel optical power, mW.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumState {
    powers: Vec<f64>,
}

impl SpectrumState {
    pub fn new(powers: Vec<f64>) -> Result<Self> {
        if let Some(p) = powers.iter().find(|p| !(**p >= 0.0)) {
            return Err(Error::InvalidParams(format!("negative or NaN power {p}")));
        }
        Ok(Self { powers })
    }

    pub fn zeros(len: usize) -> Self {
        Self { powers: vec![0.0; len] }
    }

    pub fn uniform(len: usize, mw: f64) -> Self {
        Self { powers: vec![mw.max(0.0); len] }
    }

    /// Source spectrum: `source_power` on every channel.
    pub fn source(grid: &WavelengthGrid, params: &DeviceParams) -> Self {
        Self::uniform(grid.channel_count, params.source_mw())
    }

    pub fn len(&self) -> usize {
        self.powers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn powers(&self) -> &[f64] {
        &self.powers
    }

    pub fn dbm(&self) -> Vec<f64> {
        self.powers.iter().map(|&p| mw_to_dbm(p)).collect()
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            powers: self.powers.iter().map(|p| p * factor).collect(),
        }
    }

    fn check_len(&self, expected: usize) -> Result<()> {
        if self.powers.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                actual: self.powers.len(),
            });
        }
        Ok(())
    }
}

/// One square-wave spectral modulator: a WSS split into '+'/'-' halves and a
/// 2x1 switch choosing between them.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralModulatorStage {
    pub stage_index: usize,
    pub plus_mask: ChannelMask,
}

impl SpectralModulatorStage {
    pub fn new(stage_index: usize, operands: usize) -> Result<Self> {
        Ok(Self {
            stage_index,
            plus_mask: plus_set(stage_index, operands)?,
        })
    }
}

pub fn apply_sm(
    s: &SpectrumState,
    stage: &SpectralModulatorStage,
    bit: bool,
    p: &DeviceParams,
) -> Result<SpectrumState> {
    apply_sm_level(s, stage, if bit { 1.0 } else { 0.0 }, p)
}

/// Spectral modulator whose switch sits at an analog state `level` in `[0, 1]`
/// (0 selects the '-' half, 1 the '+' half); the two branch transmissions mix
/// linearly in between.
pub fn apply_sm_level(
    s: &SpectrumState,
    stage: &SpectralModulatorStage,
    level: f64,
    p: &DeviceParams,
) -> Result<SpectrumState> {
    s.check_len(stage.plus_mask.len())?;
    let level = level.clamp(0.0, 1.0);
    let (pass, block) = (p.pass_factor(), p.block_factor());
    let t_plus = level * pass + (1.0 - level) * block;
    let t_minus = level * block + (1.0 - level) * pass;
    let powers = s
        .powers
        .iter()
        .zip(stage.plus_mask.iter())
        .map(|(&pw, plus)| pw * if plus { t_plus } else { t_minus })
        .collect();
    Ok(SpectrumState { powers })
}

/// Gain followed by an additive ASE floor tilted from `ase_floor_short` at the
/// shortest wavelength to `ase_floor_long` at the longest.
pub fn apply_edfa(s: &SpectrumState, grid: &WavelengthGrid, p: &DeviceParams) -> Result<SpectrumState> {
    s.check_len(grid.channel_count)?;
    if p.ideal_mode {
        return Ok(s.clone());
    }
    let gain = db_to_ratio(p.edfa_gain);
    let powers = s
        .powers
        .iter()
        .enumerate()
        .map(|(c, &pw)| pw * gain + p.ase_mw(grid, c))
        .collect();
    Ok(SpectrumState { powers })
}

/// Waveshaper: passes masked channels with `ws_insertion_loss`, blocks the rest completely.
pub fn apply_waveshaper(s: &SpectrumState, mask: &ChannelMask, p: &DeviceParams) -> Result<SpectrumState> {
    s.check_len(mask.len())?;
    let factor = p.ws_factor();
    let powers = s
        .powers
        .iter()
        .zip(mask.iter())
        .map(|(&pw, pass)| if pass { pw * factor } else { 0.0 })
        .collect();
    Ok(SpectrumState { powers })
}

/// 1x2 switch: `bit = 1` routes to the upper port. Returns `(upper, lower)`.
pub fn apply_spatial_switch(s: &SpectrumState, bit: bool, p: &DeviceParams) -> (SpectrumState, SpectrumState) {
    apply_spatial_switch_level(s, if bit { 1.0 } else { 0.0 }, p)
}

pub fn apply_spatial_switch_level(s: &SpectrumState, level: f64, p: &DeviceParams) -> (SpectrumState, SpectrumState) {
    let (upper, lower) = switch_gains(level, p);
    (s.scaled(upper), s.scaled(lower))
}

/// `(upper, lower)` port transmissions of a 1x2 switch at analog state `level`.
pub(crate) fn switch_gains(level: f64, p: &DeviceParams) -> (f64, f64) {
    let level = level.clamp(0.0, 1.0);
    let (pass, block) = (p.pass_factor(), p.block_factor());
    (
        level * pass + (1.0 - level) * block,
        level * block + (1.0 - level) * pass,
    )
}

pub fn combine_coupler(a: &SpectrumState, b: &SpectrumState) -> Result<SpectrumState> {
    a.check_len(b.len())?;
    Ok(SpectrumState {
        powers: a.powers.iter().zip(&b.powers).map(|(x, y)| x + y).collect(),
    })
}

/// Photodetector: total power, mW.
pub fn detect(s: &SpectrumState) -> f64 {
    s.powers.iter().sum()
}

/// `10 log10(min(high) / max(low))`; `+inf` when every low level is zero.
pub fn extinction_ratio(high_levels: &[f64], low_levels: &[f64]) -> Result<f64> {
    if high_levels.is_empty() || low_levels.is_empty() {
        return Err(Error::EmptySet);
    }
    let min_high = high_levels.iter().copied().fold(f64::INFINITY, f64::min);
    let max_low = low_levels.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !(min_high > 0.0) {
        return Err(Error::InvalidParams(format!("min(high) = {min_high} must be > 0")));
    }
    if max_low <= 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(10.0 * (min_high / max_low).log10())
}
