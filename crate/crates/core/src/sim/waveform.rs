//! Time-domain evaluation with NRZ-driven switches.
//!
//! Each operand's switch follows its bit stream with raised-cosine edges of
//! width `rise_time_fraction * T` centred on the bit boundaries. Switches are
//! the only time-varying elements and propagation delay is zero, so every
//! sample is a static evaluation at the instantaneous analog switch states.

use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::sim::engine::{output_powers_at_levels, PlaSimulator};
use crate::sim::report::fmt_mw;

#[derive(Debug, Clone, PartialEq)]
pub struct Waveform {
    pub name: String,
    /// Samples per second.
    pub sample_rate: f64,
    /// Bits per second.
    pub bit_rate: f64,
    /// Detected power, mW.
    pub samples: Vec<f64>,
    /// Decision threshold used for [`Waveform::decisions`], mW.
    pub threshold: f64,
}

impl Waveform {
    pub fn samples_per_bit(&self) -> usize {
        (self.sample_rate / self.bit_rate).round() as usize
    }

    pub fn bit_count(&self) -> usize {
        self.samples.len() / self.samples_per_bit()
    }

    /// Sample time in picoseconds.
    pub fn time_ps(&self, i: usize) -> f64 {
        i as f64 / self.sample_rate * 1e12
    }

    pub fn mid_bit_samples(&self) -> Vec<f64> {
        let spb = self.samples_per_bit();
        (0..self.bit_count()).map(|k| self.samples[k * spb + spb / 2]).collect()
    }

    /// Thresholded mid-bit samples.
    pub fn decisions(&self) -> Vec<bool> {
        self.mid_bit_samples().into_iter().map(|p| p > self.threshold).collect()
    }
}

/// Analog switch state of an NRZ stream at time `t`, in bit periods.
pub fn nrz_level(bits: &[bool], t: f64, rise_time_fraction: f64) -> f64 {
    let value = |k: usize| if bits[k] { 1.0 } else { 0.0 };
    if bits.is_empty() {
        return 0.0;
    }
    let k = (t.max(0.0).floor() as usize).min(bits.len() - 1);
    let r = rise_time_fraction;
    let half = r / 2.0;
    let edge = |from: f64, to: f64, start: f64| {
        let u = (t - start) / r;
        from + (to - from) * (1.0 - (PI * u).cos()) / 2.0
    };
    if r > 0.0 && k >= 1 && t - (k as f64) < half {
        return edge(value(k - 1), value(k), k as f64 - half);
    }
    if r > 0.0 && k + 1 < bits.len() && t > (k + 1) as f64 - half {
        return edge(value(k), value(k + 1), (k + 1) as f64 - half);
    }
    value(k)
}

/// Drives every operand with its stream and samples all outputs.
///
/// Mid-bit samples see settled switches whenever
/// `rise_time_fraction <= 2 * (samples_per_bit / 2) / samples_per_bit`
/// (any fraction up to 1 for even `samples_per_bit`).
pub fn run_waveform(
    sim: &PlaSimulator,
    streams: &[Vec<bool>],
    bit_rate: f64,
    samples_per_bit: usize,
    rise_time_fraction: f64,
) -> Result<Vec<Waveform>> {
    let cfg = sim.config();
    if streams.len() != cfg.operand_count() {
        return Err(Error::InvalidWaveform(format!(
            "{} streams for {} operands",
            streams.len(),
            cfg.operand_count()
        )));
    }
    let bits = streams.first().map_or(0, Vec::len);
    if bits == 0 || streams.iter().any(|s| s.len() != bits) {
        return Err(Error::InvalidWaveform("streams must be nonempty and of equal length".into()));
    }
    if samples_per_bit < 2 {
        return Err(Error::InvalidWaveform("samples_per_bit must be >= 2".into()));
    }
    if !(bit_rate > 0.0 && bit_rate.is_finite()) {
        return Err(Error::InvalidWaveform(format!("bit rate {bit_rate} must be positive")));
    }
    if !(0.0..=1.0).contains(&rise_time_fraction) {
        return Err(Error::InvalidWaveform(format!(
            "rise_time_fraction {rise_time_fraction} outside [0, 1]"
        )));
    }
    let outputs = cfg.outputs().len();
    let mut samples = vec![Vec::with_capacity(bits * samples_per_bit); outputs];
    let mut levels = vec![0.0; streams.len()];
    for i in 0..bits * samples_per_bit {
        let t = i as f64 / samples_per_bit as f64;
        for (level, stream) in levels.iter_mut().zip(streams) {
            *level = nrz_level(stream, t, rise_time_fraction);
        }
        for (o, p) in output_powers_at_levels(cfg, &levels)?.into_iter().enumerate() {
            samples[o].push(p);
        }
    }
    let sample_rate = bit_rate * samples_per_bit as f64;
    Ok(cfg
        .outputs()
        .iter()
        .zip(samples)
        .zip(sim.thresholds())
        .map(|((out, samples), threshold)| Waveform {
            name: out.name.clone(),
            sample_rate,
            bit_rate,
            samples,
            threshold,
        })
        .collect())
}

/// `time_ps,<output>...`; powers in mW.
pub fn waveforms_to_csv(waveforms: &[Waveform]) -> String {
    let mut out = String::from("time_ps");
    for w in waveforms {
        let _ = write!(out, ",{}", w.name);
    }
    out.push('\n');
    let Some(first) = waveforms.first() else {
        return out;
    };
    for i in 0..first.samples.len() {
        let _ = write!(out, "{:.3}", first.time_ps(i));
        for w in waveforms {
            let _ = write!(out, ",{}", fmt_mw(w.samples[i]));
        }
        out.push('\n');
    }
    out
}
