//! End-to-end evaluation of a configured array.

use crate::channel::InputVector;
use crate::devices::{
    apply_edfa, apply_sm_level, apply_spatial_switch_level, combine_coupler, detect, mw_to_dbm, SpectrumState,
};
use crate::error::{Error, Result};
use crate::sim::config::PlaConfig;

/// Largest operand count swept exhaustively by calibration.
pub const MAX_CALIBRATION_OPERANDS: usize = 16;

/// Waveshaper-input spectrum of every spatial port for analog operand
/// levels in `[0, 1]`.
///
/// Stages `1..=N_w` run in order with the amplifier after
/// [`PlaConfig::edfa_after`] stages; the switch tree then splits the
/// spectrum, operand `N_w + 1` at the root. Returned in port order.
pub fn port_spectra(cfg: &PlaConfig, levels: &[f64]) -> Result<Vec<SpectrumState>> {
    if levels.len() != cfg.operand_count() {
        return Err(Error::LengthMismatch {
            expected: cfg.operand_count(),
            actual: levels.len(),
        });
    }
    let (p, grid) = (cfg.params(), cfg.grid());
    let edfa_after = cfg.edfa_after();
    let mut s = SpectrumState::source(grid, p);
    for (k, stage) in cfg.stages().iter().enumerate() {
        if k == edfa_after {
            s = apply_edfa(&s, grid, p)?;
        }
        s = apply_sm_level(&s, stage, levels[k], p)?;
    }
    if edfa_after == cfg.stages().len() {
        s = apply_edfa(&s, grid, p)?;
    }
    // breadth-first tree: after level k the list holds 2^k ports, lower
    // (operand = 0) before upper
    let mut ports = vec![s];
    for &level in &levels[cfg.wavelength_operands()..] {
        ports = ports
            .iter()
            .flat_map(|s| {
                let (upper, lower) = apply_spatial_switch_level(s, level, p);
                [lower, upper]
            })
            .collect();
    }
    Ok(ports)
}

/// Power reaching the detector of every output, mW.
pub fn output_powers_at_levels(cfg: &PlaConfig, levels: &[f64]) -> Result<Vec<f64>> {
    let ports = port_spectra(cfg, levels)?;
    let ws = cfg.params().ws_factor();
    Ok(cfg
        .outputs()
        .iter()
        .map(|out| {
            out.port_masks
                .iter()
                .zip(&ports)
                .map(|(mask, s)| masked_power(s, mask, ws))
                .sum()
        })
        .collect())
}

/// `detect(apply_waveshaper(s, mask))` without the intermediate spectrum.
fn masked_power(s: &SpectrumState, mask: &crate::channel::ChannelMask, ws_factor: f64) -> f64 {
    mask.ones().map(|c| s.powers()[c]).sum::<f64>() * ws_factor
}

pub fn output_powers(cfg: &PlaConfig, x: &InputVector) -> Result<Vec<f64>> {
    output_powers_at_levels(cfg, &levels_of(x))
}

pub(crate) fn levels_of(x: &InputVector) -> Vec<f64> {
    x.bits().iter().map(|&b| if b { 1.0 } else { 0.0 }).collect()
}

/// Reference path through the discrete device functions (waveshaper per port,
/// coupler, photodetector). Slower than [`output_powers`]; used to cross-check it.
pub fn output_powers_reference(cfg: &PlaConfig, x: &InputVector) -> Result<Vec<f64>> {
    let ports = port_spectra(cfg, &levels_of(x))?;
    let p = cfg.params();
    cfg.outputs()
        .iter()
        .map(|out| {
            let mut total = SpectrumState::zeros(cfg.grid().channel_count);
            for (mask, s) in out.port_masks.iter().zip(&ports) {
                total = combine_coupler(&total, &crate::devices::apply_waveshaper(s, mask, p)?)?;
            }
            Ok(detect(&total))
        })
        .collect()
}

/// Calibrated decision level of one output.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputCalibration {
    pub name: String,
    /// Decision threshold, mW.
    pub threshold: f64,
    /// Lowest logic-high power, mW (`+inf` if the output is never high).
    pub min_high: f64,
    /// Highest logic-low power, mW (`-inf` if the output is never low).
    pub max_low: f64,
    /// `10 log10(min_high / max_low)`, dB; `+inf` when one side is empty or all lows are dark.
    pub margin_db: f64,
}

/// Sweeps all `2^N` inputs and places each output's threshold at the dB
/// midpoint of its closest high and low levels; `min(high) / 2` when every
/// low level is dark.
pub fn calibrate_thresholds(cfg: &PlaConfig) -> Result<Vec<OutputCalibration>> {
    let n = cfg.operand_count();
    if n > MAX_CALIBRATION_OPERANDS {
        return Err(Error::InvalidConfig(format!(
            "calibration sweeps 2^N inputs; N = {n} exceeds {MAX_CALIBRATION_OPERANDS}"
        )));
    }
    let k = cfg.outputs().len();
    let mut min_high = vec![f64::INFINITY; k];
    let mut max_low = vec![f64::NEG_INFINITY; k];
    let mut levels = vec![0.0; n];
    for g in 0..1usize << n {
        for (j, level) in levels.iter_mut().enumerate() {
            *level = if g >> (n - 1 - j) & 1 == 1 { 1.0 } else { 0.0 };
        }
        let powers = output_powers_at_levels(cfg, &levels)?;
        for (o, &pw) in powers.iter().enumerate() {
            if cfg.expected(o, g) {
                min_high[o] = min_high[o].min(pw);
            } else {
                max_low[o] = max_low[o].max(pw);
            }
        }
    }
    cfg.outputs()
        .iter()
        .enumerate()
        .map(|(o, out)| {
            let (hi, lo) = (min_high[o], max_low[o]);
            let (threshold, margin_db) = if hi.is_infinite() {
                // never high: anything at or above the brightest low is impossible
                (f64::INFINITY, f64::INFINITY)
            } else if hi <= lo || hi <= 0.0 {
                return Err(Error::NonSeparable {
                    name: out.name.clone(),
                    min_high: hi,
                    max_low: lo,
                });
            } else if lo <= 0.0 {
                (hi / 2.0, f64::INFINITY)
            } else {
                ((hi * lo).sqrt(), 10.0 * (hi / lo).log10())
            };
            Ok(OutputCalibration {
                name: out.name.clone(),
                threshold,
                min_high: hi,
                max_low: lo,
                margin_db,
            })
        })
        .collect()
}

/// Detected powers and decisions for one input.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalResult {
    pub names: Vec<String>,
    pub powers_mw: Vec<f64>,
    pub thresholds: Vec<f64>,
    pub decisions: Vec<bool>,
}

impl EvalResult {
    pub fn powers_dbm(&self) -> Vec<f64> {
        self.powers_mw.iter().map(|&p| mw_to_dbm(p)).collect()
    }
}

/// A configuration together with its calibrated thresholds.
#[derive(Debug, Clone)]
pub struct PlaSimulator {
    cfg: PlaConfig,
    calibration: Vec<OutputCalibration>,
}

impl PlaSimulator {
    pub fn calibrated(cfg: PlaConfig) -> Result<Self> {
        let calibration = calibrate_thresholds(&cfg)?;
        Ok(Self { cfg, calibration })
    }

    /// Uses caller-supplied thresholds (one per output, mW), e.g. for
    /// configurations too large to sweep.
    pub fn with_thresholds(cfg: PlaConfig, thresholds: &[f64]) -> Result<Self> {
        if thresholds.len() != cfg.outputs().len() {
            return Err(Error::LengthMismatch {
                expected: cfg.outputs().len(),
                actual: thresholds.len(),
            });
        }
        let calibration = cfg
            .outputs()
            .iter()
            .zip(thresholds)
            .map(|(out, &threshold)| OutputCalibration {
                name: out.name.clone(),
                threshold,
                min_high: f64::NAN,
                max_low: f64::NAN,
                margin_db: f64::NAN,
            })
            .collect();
        Ok(Self { cfg, calibration })
    }

    pub fn config(&self) -> &PlaConfig {
        &self.cfg
    }

    pub fn calibration(&self) -> &[OutputCalibration] {
        &self.calibration
    }

    pub fn thresholds(&self) -> Vec<f64> {
        self.calibration.iter().map(|c| c.threshold).collect()
    }

    pub fn evaluate(&self, x: &InputVector) -> Result<EvalResult> {
        let powers_mw = output_powers(&self.cfg, x)?;
        Ok(self.decide(powers_mw))
    }

    pub(crate) fn decide(&self, powers_mw: Vec<f64>) -> EvalResult {
        let thresholds = self.thresholds();
        let decisions = powers_mw.iter().zip(&thresholds).map(|(p, t)| p > t).collect();
        EvalResult {
            names: self.cfg.outputs().iter().map(|o| o.name.clone()).collect(),
            powers_mw,
            thresholds,
            decisions,
        }
    }
}

/// One-shot evaluation: calibrates `cfg`, then evaluates `x`. Build a
/// [`PlaSimulator`] once when evaluating many inputs.
pub fn evaluate(cfg: &PlaConfig, x: &InputVector) -> Result<EvalResult> {
    PlaSimulator::calibrated(cfg.clone())?.evaluate(x)
}
