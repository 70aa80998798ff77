//! Confusion matrices and fixed-format text reports.

use std::fmt::Write as _;

use crate::channel::minterm_of_channel;
use crate::devices::mw_to_dbm;
use crate::error::{Error, Result};
use crate::sim::config::PlaConfig;
use crate::sim::engine::{port_spectra, PlaSimulator};

/// dB values with two decimals; infinities as `inf` / `-inf`.
pub fn fmt_db(db: f64) -> String {
    if db == f64::INFINITY {
        "inf".into()
    } else if db == f64::NEG_INFINITY {
        "-inf".into()
    } else {
        format!("{db:.2}")
    }
}

/// mW values with four significant figures.
pub fn fmt_mw(mw: f64) -> String {
    format!("{mw:.3e}")
}

/// Per-channel waveshaper-input power for every input state of a
/// wavelength-only configuration; `rows[i][c]` in mW.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfusionMatrix {
    pub rows: Vec<Vec<f64>>,
}

pub fn confusion_matrix(cfg: &PlaConfig) -> Result<ConfusionMatrix> {
    if cfg.spatial_operands() != 0 {
        return Err(Error::InvalidConfig(
            "confusion matrix needs a wavelength-only configuration".into(),
        ));
    }
    let n = cfg.operand_count();
    let rows = (0..1usize << n)
        .map(|i| {
            let x = minterm_of_channel(i, n)?;
            let mut ports = port_spectra(cfg, &crate::sim::engine::levels_of(&x))?;
            Ok(ports.remove(0).powers().to_vec())
        })
        .collect::<Result<_>>()?;
    Ok(ConfusionMatrix { rows })
}

impl ConfusionMatrix {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn dbm(&self, input: usize, channel: usize) -> f64 {
        mw_to_dbm(self.rows[input][channel])
    }

    /// Diagonal minus brightest off-diagonal entry of each row, dB.
    pub fn row_margins_db(&self) -> Vec<f64> {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let off = row
                    .iter()
                    .enumerate()
                    .filter(|&(c, _)| c != i)
                    .map(|(_, &p)| p)
                    .fold(0.0, f64::max);
                mw_to_dbm(row[i]) - mw_to_dbm(off)
            })
            .collect()
    }

    pub fn min_margin_db(&self) -> f64 {
        self.row_margins_db().into_iter().fold(f64::INFINITY, f64::min)
    }

    /// Header `input,0,1,...`; one row per input state, cells in dBm.
    pub fn to_csv(&self) -> String {
        let n = self.size();
        let mut out = String::with_capacity(n * n * 8);
        out.push_str("input");
        for c in 0..self.rows.first().map_or(0, Vec::len) {
            let _ = write!(out, ",{c}");
        }
        out.push('\n');
        for (i, row) in self.rows.iter().enumerate() {
            let _ = write!(out, "{i}");
            for &p in row {
                let _ = write!(out, ",{}", fmt_db(mw_to_dbm(p)));
            }
            out.push('\n');
        }
        out
    }
}

/// Exhaustive sweep of a calibrated array.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    /// `powers[g][o]`, mW.
    pub powers: Vec<Vec<f64>>,
    pub decisions: Vec<Vec<bool>>,
}

pub fn sweep(sim: &PlaSimulator) -> Result<SweepReport> {
    let n = sim.config().operand_count();
    let mut powers = Vec::with_capacity(1 << n);
    let mut decisions = Vec::with_capacity(1 << n);
    for g in 0..1usize << n {
        let r = sim.evaluate(&minterm_of_channel(g, n)?)?;
        decisions.push(r.decisions);
        powers.push(r.powers_mw);
    }
    Ok(SweepReport { powers, decisions })
}

impl SweepReport {
    /// Inputs where some decision differs from the ideal truth table.
    pub fn mismatches(&self, cfg: &PlaConfig) -> Vec<usize> {
        self.decisions
            .iter()
            .enumerate()
            .filter(|(g, d)| d.iter().enumerate().any(|(o, &v)| v != cfg.expected(o, *g)))
            .map(|(g, _)| g)
            .collect()
    }

    /// Columns: `input,bits`, then `<name>_dbm,<name>` per output.
    pub fn to_csv(&self, sim: &PlaSimulator) -> String {
        let cfg = sim.config();
        let n = cfg.operand_count();
        let mut out = String::from("input,bits");
        for o in cfg.outputs() {
            let _ = write!(out, ",{0}_dbm,{0}", o.name);
        }
        out.push('\n');
        for (g, (powers, decisions)) in self.powers.iter().zip(&self.decisions).enumerate() {
            let _ = write!(out, "{g},{:0n$b}", g, n = n);
            for (&p, &d) in powers.iter().zip(decisions) {
                let _ = write!(out, ",{},{}", fmt_db(mw_to_dbm(p)), u8::from(d));
            }
            out.push('\n');
        }
        out
    }
}

/// `margin_db <name>=<dB> ...` for every output.
pub fn margin_summary(sim: &PlaSimulator) -> String {
    let mut out = String::from("margin_db");
    for cal in sim.calibration() {
        let _ = write!(out, " {}={}", cal.name, fmt_db(cal.margin_db));
    }
    out
}
