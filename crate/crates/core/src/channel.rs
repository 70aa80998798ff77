//! Wavelength-channel address space.
//!
//! An `N`-operand array uses `2^N` channels. Operand `x_1` drives stage 1 and
//! is the most significant bit of the channel index, so the channel lit by an
//! input vector is numerically equal to the input read as a binary number.
//! Stage `j` passes, in its `1` state, every channel whose bit `N - j` is set:
//! a square wave of block size `2^(N-j)`, halving at every stage.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, MAX_OPERANDS};

/// Default channel spacing of the experimental layout, in nm.
pub const DEFAULT_SPACING_NM: f64 = 0.15;
/// Default start wavelength, in nm (256 channels then span 1530.0 to 1568.25 nm).
pub const DEFAULT_START_NM: f64 = 1530.0;

/// Ordered set of equally spaced wavelength channels.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WavelengthGrid {
    pub channel_count: usize,
    #[serde(rename = "start_nm")]
    pub start_wavelength: f64,
    #[serde(rename = "spacing_nm")]
    pub spacing: f64,
}

impl WavelengthGrid {
    pub fn new(channel_count: usize, start_wavelength: f64, spacing: f64) -> Result<Self> {
        let grid = Self {
            channel_count,
            start_wavelength,
            spacing,
        };
        grid.validate()?;
        Ok(grid)
    }

    /// Grid of `2^operands` channels at the default start and spacing.
    pub fn for_operands(operands: usize) -> Result<Self> {
        check_operands(operands)?;
        Self::new(1 << operands, DEFAULT_START_NM, DEFAULT_SPACING_NM)
    }

    pub fn validate(&self) -> Result<()> {
        if self.channel_count == 0 {
            return Err(Error::InvalidGrid("channel_count must be positive".into()));
        }
        if self.channel_count > 1 << MAX_OPERANDS {
            return Err(Error::InvalidGrid(format!(
                "channel_count {} exceeds 2^{MAX_OPERANDS}",
                self.channel_count
            )));
        }
        if !(self.spacing > 0.0 && self.spacing.is_finite()) {
            return Err(Error::InvalidGrid(format!("spacing {} must be positive", self.spacing)));
        }
        if !(self.start_wavelength > 0.0 && self.start_wavelength.is_finite()) {
            return Err(Error::InvalidGrid(format!(
                "start wavelength {} must be positive",
                self.start_wavelength
            )));
        }
        Ok(())
    }

    /// Number of operands addressed by this grid, if the channel count is a power of two.
    pub fn operands(&self) -> Option<usize> {
        self.channel_count
            .is_power_of_two()
            .then(|| self.channel_count.trailing_zeros() as usize)
    }

    /// Center wavelength of channel `c`, in nm.
    pub fn wavelength(&self, c: usize) -> f64 {
        self.start_wavelength + c as f64 * self.spacing
    }

    pub fn wavelengths(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.channel_count).map(|c| self.wavelength(c))
    }
}

impl Default for WavelengthGrid {
    fn default() -> Self {
        Self {
            channel_count: 256,
            start_wavelength: DEFAULT_START_NM,
            spacing: DEFAULT_SPACING_NM,
        }
    }
}

pub(crate) fn check_operands(n: usize) -> Result<()> {
    if n > MAX_OPERANDS {
        Err(Error::TooManyOperands(n))
    } else {
        Ok(())
    }
}

/// Pass/block pattern over the channels of a grid (`true` = pass).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChannelMask {
    words: Vec<u64>,
    len: usize,
}

impl ChannelMask {
    pub fn empty(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn full(len: usize) -> Self {
        let mut mask = Self {
            words: vec![u64::MAX; len.div_ceil(64)],
            len,
        };
        mask.clear_tail();
        mask
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut words = Vec::new();
        let mut len = 0;
        for bit in bits {
            if len % 64 == 0 {
                words.push(0);
            }
            if bit {
                words[len / 64] |= 1 << (len % 64);
            }
            len += 1;
        }
        Self { words, len }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Result<Self> {
        let mut mask = Self::empty(len);
        for c in indices {
            if c >= len {
                return Err(Error::LengthMismatch {
                    expected: len,
                    actual: c + 1,
                });
            }
            mask.set(c, true);
        }
        Ok(mask)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Panics if `c` is out of range.
    pub fn get(&self, c: usize) -> bool {
        assert!(c < self.len, "channel {c} out of range {}", self.len);
        self.words[c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, c: usize, pass: bool) {
        assert!(c < self.len, "channel {c} out of range {}", self.len);
        if pass {
            self.words[c / 64] |= 1 << (c % 64);
        } else {
            self.words[c / 64] &= !(1 << (c % 64));
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(|c| self.get(c))
    }

    /// Indices of the passed channels, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&c| self.get(c))
    }

    pub fn complement(&self) -> Self {
        let mut mask = Self {
            words: self.words.iter().map(|w| !w).collect(),
            len: self.len,
        };
        mask.clear_tail();
        mask
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a | b)
    }

    fn zip_with(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Result<Self> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                actual: other.len,
            });
        }
        Ok(Self {
            words: self.words.iter().zip(&other.words).map(|(&a, &b)| op(a, b)).collect(),
            len: self.len,
        })
    }

    fn clear_tail(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Lowercase hex, most significant digit first, channel 0 in the lowest bit
    /// of the last digit. Uses `ceil(len / 4)` digits (at least one).
    pub fn to_hex(&self) -> String {
        let digits = hex_digits(self.len);
        let mut out = String::with_capacity(digits);
        for d in (0..digits).rev() {
            let mut nibble = 0u32;
            for b in 0..4 {
                let c = d * 4 + b;
                if c < self.len && self.get(c) {
                    nibble |= 1 << b;
                }
            }
            out.push(char::from_digit(nibble, 16).expect("nibble < 16"));
        }
        out
    }

    /// Inverse of [`ChannelMask::to_hex`]. Requires exactly `ceil(len / 4)`
    /// digits and no set bits beyond `len`.
    pub fn from_hex(hex: &str, len: usize) -> Result<Self> {
        let hex = hex.trim();
        let digits = hex_digits(len);
        if hex.len() != digits {
            return Err(Error::InvalidHex(format!(
                "expected {digits} hex digits for {len} channels, got {}",
                hex.len()
            )));
        }
        let mut mask = Self::empty(len);
        for (i, ch) in hex.chars().rev().enumerate() {
            let nibble = ch
                .to_digit(16)
                .ok_or_else(|| Error::InvalidHex(format!("invalid hex digit `{ch}`")))?;
            for b in 0..4 {
                if nibble >> b & 1 == 1 {
                    let c = i * 4 + b;
                    if c >= len {
                        return Err(Error::InvalidHex(format!(
                            "bit {c} set beyond {len} channels"
                        )));
                    }
                    mask.set(c, true);
                }
            }
        }
        Ok(mask)
    }
}

pub(crate) fn hex_digits(len: usize) -> usize {
    len.div_ceil(4).max(1)
}

impl fmt::Debug for ChannelMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChannelMask({}; 0x{})", self.len, self.to_hex())
    }
}

/// Ordered operand values `(x_1, ..., x_N)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InputVector(Vec<bool>);

impl InputVector {
    pub fn new(bits: Vec<bool>) -> Self {
        Self(bits)
    }

    /// Parses a string of `0`/`1`, `x_1` first.
    pub fn parse(text: &str) -> Result<Self> {
        text.trim()
            .chars()
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Format(format!("invalid bit `{other}` in input vector"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for InputVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Channel lit by `x`: `sum_j x_j * 2^(N - j)`.
pub fn channel_index(x: &InputVector) -> usize {
    x.bits().iter().fold(0, |acc, &b| acc << 1 | usize::from(b))
}

pub fn minterm_of_channel(c: usize, operands: usize) -> Result<InputVector> {
    check_operands(operands)?;
    if c >= 1 << operands {
        return Err(Error::ChannelOutOfRange { channel: c, operands });
    }
    Ok(InputVector(
        (0..operands).map(|j| c >> (operands - 1 - j) & 1 == 1).collect(),
    ))
}

/// Channels passed by stage `stage` (1-based) in its `1` state.
pub fn plus_set(stage: usize, operands: usize) -> Result<ChannelMask> {
    check_operands(operands)?;
    if stage == 0 || stage > operands {
        return Err(Error::StageOutOfRange { stage, operands });
    }
    let bit = operands - stage;
    Ok(ChannelMask::from_bools((0..1usize << operands).map(|c| c >> bit & 1 == 1)))
}
