use serde::{Deserialize, Serialize};

use crate::channel::{ChannelMask, WavelengthGrid};
use crate::devices::{DeviceParams, SpectralModulatorStage};
use crate::error::{Error, Result, MAX_OPERANDS};
use crate::synthesis::spatial::{plan_spatial, SpatialPlan};
use crate::synthesis::table::NamedTable;

/// One waveshaper output; `port_masks[p]` filters spatial port `p` (a single
/// mask when there is no switch tree).
#[derive(Debug, Clone, PartialEq)]
pub struct PlaOutput {
    pub name: String,
    pub port_masks: Vec<ChannelMask>,
}

/// A validated device chain: `N_w` spectral modulator stages over a
/// `2^N_w`-channel grid, an optional switch tree for the remaining operands,
/// and per-output waveshaper masks.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaConfig {
    operand_count: usize,
    grid: WavelengthGrid,
    params: DeviceParams,
    outputs: Vec<PlaOutput>,
    stages: Vec<SpectralModulatorStage>,
}

impl PlaConfig {
    pub fn new(operand_count: usize, grid: WavelengthGrid, params: DeviceParams, outputs: Vec<PlaOutput>) -> Result<Self> {
        grid.validate()?;
        params.validate()?;
        let wl = grid.operands().ok_or_else(|| {
            Error::InvalidConfig(format!("channel_count {} is not a power of two", grid.channel_count))
        })?;
        if operand_count > MAX_OPERANDS {
            return Err(Error::TooManyOperands(operand_count));
        }
        if operand_count < wl {
            return Err(Error::InvalidConfig(format!(
                "{} channels need at least {wl} operands, got {operand_count}",
                grid.channel_count
            )));
        }
        let ports = 1usize << (operand_count - wl);
        for out in &outputs {
            if out.port_masks.len() != ports {
                return Err(Error::InvalidConfig(format!(
                    "output `{}` has {} port masks, expected {ports}",
                    out.name,
                    out.port_masks.len()
                )));
            }
            if let Some(m) = out.port_masks.iter().find(|m| m.len() != grid.channel_count) {
                return Err(Error::InvalidConfig(format!(
                    "output `{}` mask has {} channels, grid has {}",
                    out.name,
                    m.len(),
                    grid.channel_count
                )));
            }
        }
        let stages = (1..=wl)
            .map(|j| SpectralModulatorStage::new(j, wl))
            .collect::<Result<_>>()?;
        Ok(Self {
            operand_count,
            grid,
            params,
            outputs,
            stages,
        })
    }

    /// Experimental layout: 8 stages, 256 channels at 0.15 nm, amplifier after
    /// stage 4, no outputs.
    pub fn default_layout() -> Self {
        Self::new(8, WavelengthGrid::default(), DeviceParams::default(), Vec::new())
            .expect("default layout is valid")
    }

    /// Realises `tables` (all over the same `N` inputs) on a copy of `template`'s
    /// grid. Up to `log2(template.channel_count)` operands go on wavelengths; the
    /// rest are moved to a switch tree.
    pub fn for_tables(template: &WavelengthGrid, params: DeviceParams, tables: &[NamedTable]) -> Result<Self> {
        let n = tables
            .first()
            .map(|t| t.table.input_count())
            .ok_or_else(|| Error::InvalidConfig("no output tables".into()))?;
        if let Some(t) = tables.iter().find(|t| t.table.input_count() != n) {
            return Err(Error::InvalidConfig(format!(
                "table `{}` has {} inputs, expected {n}",
                t.name,
                t.table.input_count()
            )));
        }
        let max_wl = template
            .operands()
            .ok_or_else(|| Error::InvalidConfig("template grid is not a power of two".into()))?;
        let wl = n.min(max_wl);
        let grid = WavelengthGrid::new(1 << wl, template.start_wavelength, template.spacing)?;
        if wl == n {
            let outputs = tables
                .iter()
                .map(|t| PlaOutput {
                    name: t.name.clone(),
                    port_masks: vec![t.table.outputs().clone()],
                })
                .collect();
            Self::new(n, grid, params, outputs)
        } else {
            Self::from_plan(grid, params, &plan_spatial(n, wl, tables)?)
        }
    }

    pub fn from_plan(grid: WavelengthGrid, params: DeviceParams, plan: &SpatialPlan) -> Result<Self> {
        if grid.channel_count != plan.channel_count() {
            return Err(Error::InvalidConfig(format!(
                "plan needs {} channels, grid has {}",
                plan.channel_count(),
                grid.channel_count
            )));
        }
        let outputs = plan
            .output_names
            .iter()
            .zip(&plan.port_masks)
            .map(|(name, masks)| PlaOutput {
                name: name.clone(),
                port_masks: masks.clone(),
            })
            .collect();
        Self::new(plan.total_operands(), grid, params, outputs)
    }

    /// Same chain with different outputs.
    pub fn with_outputs(&self, outputs: Vec<PlaOutput>) -> Result<Self> {
        Self::new(self.operand_count, self.grid, self.params.clone(), outputs)
    }

    pub fn with_params(&self, params: DeviceParams) -> Result<Self> {
        Self::new(self.operand_count, self.grid, params, self.outputs.clone())
    }

    pub fn operand_count(&self) -> usize {
        self.operand_count
    }

    pub fn wavelength_operands(&self) -> usize {
        self.stages.len()
    }

    pub fn spatial_operands(&self) -> usize {
        self.operand_count - self.stages.len()
    }

    pub fn port_count(&self) -> usize {
        1 << self.spatial_operands()
    }

    pub fn grid(&self) -> &WavelengthGrid {
        &self.grid
    }

    pub fn params(&self) -> &DeviceParams {
        &self.params
    }

    pub fn outputs(&self) -> &[PlaOutput] {
        &self.outputs
    }

    pub fn stages(&self) -> &[SpectralModulatorStage] {
        &self.stages
    }

    /// Number of stages preceding the amplifier.
    pub fn edfa_after(&self) -> usize {
        self.params.edfa_position.min(self.stages.len())
    }

    /// Switch-tree view of the outputs, when spatial operands exist.
    pub fn spatial_plan(&self) -> Option<SpatialPlan> {
        let d = self.spatial_operands();
        (d > 0).then(|| SpatialPlan {
            wavelength_operands: self.wavelength_operands(),
            spatial_operands: d,
            port_count: 1 << d,
            port_assignment: (0..1usize << d)
                .map(|p| (0..d).map(|k| p >> (d - 1 - k) & 1 == 1).collect())
                .collect(),
            output_names: self.outputs.iter().map(|o| o.name.clone()).collect(),
            port_masks: self.outputs.iter().map(|o| o.port_masks.clone()).collect(),
        })
    }

    /// Ideal truth value of output `k` at global minterm `g`.
    pub fn expected(&self, k: usize, g: usize) -> bool {
        let d = self.spatial_operands();
        self.outputs[k].port_masks[g & ((1 << d) - 1)].get(g >> d)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ConfigDoc = serde_json::from_str(text)?;
        doc.into_config()
    }

    pub fn to_json(&self) -> Result<String> {
        let outputs = self
            .outputs
            .iter()
            .map(|o| {
                if self.spatial_operands() == 0 {
                    OutputDoc {
                        name: o.name.clone(),
                        mask_hex: Some(o.port_masks[0].to_hex()),
                        port_masks: None,
                    }
                } else {
                    OutputDoc {
                        name: o.name.clone(),
                        mask_hex: None,
                        port_masks: Some(o.port_masks.iter().map(ChannelMask::to_hex).collect()),
                    }
                }
            })
            .collect();
        let doc = ConfigDoc {
            operand_count: self.operand_count,
            grid: self.grid,
            params: self.params.clone(),
            outputs,
        };
        Ok(serde_json::to_string_pretty(&doc)?)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigDoc {
    operand_count: usize,
    grid: WavelengthGrid,
    #[serde(default)]
    params: DeviceParams,
    #[serde(default)]
    outputs: Vec<OutputDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OutputDoc {
    name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mask_hex: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    port_masks: Option<Vec<String>>,
}

impl ConfigDoc {
    fn into_config(self) -> Result<PlaConfig> {
        let len = self.grid.channel_count;
        let outputs = self
            .outputs
            .into_iter()
            .map(|o| {
                let port_masks = match (o.mask_hex, o.port_masks) {
                    (Some(hex), None) => vec![ChannelMask::from_hex(&hex, len)?],
                    (None, Some(list)) => list
                        .iter()
                        .map(|hex| ChannelMask::from_hex(hex, len))
                        .collect::<Result<_>>()?,
                    _ => {
                        return Err(Error::InvalidConfig(format!(
                            "output `{}` needs exactly one of mask_hex or port_masks",
                            o.name
                        )))
                    }
                };
                Ok(PlaOutput { name: o.name, port_masks })
            })
            .collect::<Result<_>>()?;
        PlaConfig::new(self.operand_count, self.grid, self.params, outputs)
    }
}
