//! Cellular automaton driven by a simulated nine-input array.

use crate::channel::{minterm_of_channel, WavelengthGrid};
use crate::devices::DeviceParams;
use crate::error::{Error, Result};
use crate::life::grid::CellGrid;
use crate::life::rules::{conway_truth_table, neighborhood_index};
use crate::sim::config::PlaConfig;
use crate::sim::engine::{OutputCalibration, PlaSimulator};
use crate::synthesis::table::{NamedTable, TruthTable};

/// Nine-input array (8 wavelength operands + 1 switch) realising `rule`.
pub fn rule_pla(rule: &TruthTable, params: DeviceParams) -> Result<PlaConfig> {
    PlaConfig::for_tables(&WavelengthGrid::default(), params, &[NamedTable::new("next", rule.clone())])
}

pub fn conway_pla(params: DeviceParams) -> Result<PlaConfig> {
    rule_pla(&conway_truth_table(), params)
}

/// Calibrated nine-input array plus its thresholded response to each of the
/// 512 neighbourhoods. Evaluation is deterministic, so each neighbourhood is
/// evaluated optically once and reused for every cell showing it.
#[derive(Debug, Clone)]
pub struct LifeEngine {
    sim: PlaSimulator,
    response: Vec<bool>,
}

impl LifeEngine {
    pub fn new(pla9: PlaConfig) -> Result<Self> {
        if pla9.operand_count() != 9 || pla9.outputs().len() != 1 {
            return Err(Error::InvalidConfig(format!(
                "cellular automaton needs 9 operands and one output, got {} and {}",
                pla9.operand_count(),
                pla9.outputs().len()
            )));
        }
        let sim = PlaSimulator::calibrated(pla9)?;
        let response = (0..512)
            .map(|g| Ok(sim.evaluate(&minterm_of_channel(g, 9)?)?.decisions[0]))
            .collect::<Result<_>>()?;
        Ok(Self { sim, response })
    }

    pub fn calibration(&self) -> &OutputCalibration {
        &self.sim.calibration()[0]
    }

    /// Thresholded optical output for neighbourhood index `g`.
    pub fn response(&self, g: usize) -> bool {
        self.response[g]
    }

    pub fn step(&self, g: &CellGrid) -> CellGrid {
        g.map_cells(|r, c| self.response[neighborhood_index(&g.neighborhood(r, c))])
    }

    /// `trace[0] = g`, `trace[k + 1] = step(trace[k])`.
    pub fn run(&self, g: &CellGrid, steps: usize) -> Vec<CellGrid> {
        let mut trace = Vec::with_capacity(steps + 1);
        trace.push(g.clone());
        for k in 0..steps {
            let next = self.step(&trace[k]);
            trace.push(next);
        }
        trace
    }
}

pub fn step(g: &CellGrid, pla9: &PlaConfig) -> Result<CellGrid> {
    Ok(LifeEngine::new(pla9.clone())?.step(g))
}

pub fn run(g: &CellGrid, steps: usize, pla9: &PlaConfig) -> Result<Vec<CellGrid>> {
    Ok(LifeEngine::new(pla9.clone())?.run(g, steps))
}
