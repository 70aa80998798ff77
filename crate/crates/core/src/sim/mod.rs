//! Device-chain assembly, evaluation and reports.

pub mod config;
pub mod engine;
pub mod report;
pub mod waveform;

pub use config::{PlaConfig, PlaOutput};
pub use engine::{calibrate_thresholds, evaluate, output_powers, EvalResult, OutputCalibration, PlaSimulator};
pub use report::{confusion_matrix, sweep, ConfusionMatrix, SweepReport};
pub use waveform::{run_waveform, waveforms_to_csv, Waveform};
