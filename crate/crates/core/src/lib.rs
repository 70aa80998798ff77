//! Simulator and compiler for a wavelength-parallel optical programmable
//! logic array.
//!
//! `N` cascaded spectral modulators carve a `2^N`-channel comb so that every
//! input vector leaves exactly one channel lit: channel `c` *is* minterm `c`.
//! A waveshaper then ORs the minterms of a target function by passing their
//! channels to a photodetector. This crate provides
//!
//! * [`channel`]: the channel address space and stage partitions,
//! * [`devices`]: per-element spectral transfer models with loss, finite
//!   extinction and amplifier noise,
//! * [`synthesis`]: expression parsing, truth tables, standard arithmetic
//!   bundles, wavelength + space expansion and a capacity estimate,
//! * [`sim`]: whole-chain evaluation, threshold calibration, confusion
//!   matrices and NRZ waveforms,
//! * [`life`]: Conway's Game of Life evaluated cell by cell on a nine-input array.

pub mod channel;
pub mod devices;
pub mod error;
pub mod life;
pub mod sim;
pub mod synthesis;

pub use channel::{channel_index, minterm_of_channel, plus_set, ChannelMask, InputVector, WavelengthGrid};
pub use devices::{DeviceParams, SpectrumState};
pub use error::{Error, ParseError, Result};
pub use sim::{PlaConfig, PlaSimulator};
pub use synthesis::{NamedTable, TruthTable};
