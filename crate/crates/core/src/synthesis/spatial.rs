//! Wavelength + space expansion.
//!
//! The first `N_w` operands drive the spectral modulator cascade; the
//! remaining `d` drive a depth-`d` tree of 1x2 switches. Port `p` is the tree
//! leaf reached when the spatial operands, read most significant first, equal
//! `p`, so channel `c` on port `p` carries global minterm `c * 2^d + p`.

use crate::channel::{channel_index, check_operands, ChannelMask, InputVector};
use crate::error::{Error, Result};
use crate::synthesis::table::NamedTable;

#[derive(Debug, Clone, PartialEq)]
pub struct SpatialPlan {
    pub wavelength_operands: usize,
    pub spatial_operands: usize,
    pub port_count: usize,
    /// `port_assignment[p]` = values of operands `N_w+1 ..= N_w+d` selecting port `p`.
    pub port_assignment: Vec<Vec<bool>>,
    pub output_names: Vec<String>,
    /// `port_masks[output][port]`.
    pub port_masks: Vec<Vec<ChannelMask>>,
}

impl SpatialPlan {
    pub fn total_operands(&self) -> usize {
        self.wavelength_operands + self.spatial_operands
    }

    pub fn channel_count(&self) -> usize {
        1 << self.wavelength_operands
    }

    pub fn global_minterm(&self, port: usize, channel: usize) -> usize {
        channel << self.spatial_operands | port
    }

    /// `(port, channel)` addressing the input vector `x`.
    pub fn locate(&self, x: &InputVector) -> Result<(usize, usize)> {
        if x.len() != self.total_operands() {
            return Err(Error::LengthMismatch {
                expected: self.total_operands(),
                actual: x.len(),
            });
        }
        let (wl, sp) = x.bits().split_at(self.wavelength_operands);
        let channel = channel_index(&InputVector::new(wl.to_vec()));
        let port = channel_index(&InputVector::new(sp.to_vec()));
        Ok((port, channel))
    }

    /// Output `output` at `x`, read straight from the per-port masks.
    pub fn lookup(&self, output: usize, x: &InputVector) -> Result<bool> {
        let (port, channel) = self.locate(x)?;
        Ok(self.port_masks[output][port].get(channel))
    }
}

pub fn plan_spatial(total_operands: usize, wavelength_operands: usize, functions: &[NamedTable]) -> Result<SpatialPlan> {
    check_operands(total_operands)?;
    if wavelength_operands == 0 || total_operands <= wavelength_operands {
        return Err(Error::InvalidPlan(format!(
            "need total operands ({total_operands}) > wavelength operands ({wavelength_operands}) >= 1"
        )));
    }
    let d = total_operands - wavelength_operands;
    let port_count = 1usize << d;
    let channels = 1usize << wavelength_operands;
    for f in functions {
        if f.table.input_count() != total_operands {
            return Err(Error::LengthMismatch {
                expected: 1 << total_operands,
                actual: f.table.len(),
            });
        }
    }
    let port_assignment = (0..port_count)
        .map(|p| (0..d).map(|k| p >> (d - 1 - k) & 1 == 1).collect())
        .collect();
    let port_masks = functions
        .iter()
        .map(|f| {
            (0..port_count)
                .map(|p| ChannelMask::from_bools((0..channels).map(|c| f.table.get(c << d | p))))
                .collect()
        })
        .collect();
    Ok(SpatialPlan {
        wavelength_operands,
        spatial_operands: d,
        port_count,
        port_assignment,
        output_names: functions.iter().map(|f| f.name.clone()).collect(),
        port_masks,
    })
}
