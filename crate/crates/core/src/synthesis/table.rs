use serde::{Deserialize, Serialize};

use crate::channel::{
    channel_index, check_operands, hex_digits, minterm_of_channel, ChannelMask, InputVector, WavelengthGrid,
};
use crate::error::{Error, Result};
use crate::synthesis::expr::BoolExpr;

/// Single-output Boolean function of `N` inputs, stored in channel order:
/// entry `c` is the value at `minterm_of_channel(c, N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    input_count: usize,
    outputs: ChannelMask,
}

impl TruthTable {
    pub fn new(input_count: usize, outputs: ChannelMask) -> Result<Self> {
        check_operands(input_count)?;
        if outputs.len() != 1 << input_count {
            return Err(Error::LengthMismatch {
                expected: 1 << input_count,
                actual: outputs.len(),
            });
        }
        Ok(Self { input_count, outputs })
    }

    /// Builds the table from a function of the channel (minterm) index.
    pub fn from_index_fn(input_count: usize, f: impl FnMut(usize) -> bool) -> Result<Self> {
        check_operands(input_count)?;
        Ok(Self {
            input_count,
            outputs: ChannelMask::from_bools((0..1usize << input_count).map(f)),
        })
    }

    pub fn constant(input_count: usize, value: bool) -> Result<Self> {
        Self::from_index_fn(input_count, |_| value)
    }

    pub fn input_count(&self) -> usize {
        self.input_count
    }

    pub fn len(&self) -> usize {
        self.outputs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.outputs.is_empty()
    }

    pub fn get(&self, c: usize) -> bool {
        self.outputs.get(c)
    }

    pub fn lookup(&self, x: &InputVector) -> Result<bool> {
        if x.len() != self.input_count {
            return Err(Error::LengthMismatch {
                expected: self.input_count,
                actual: x.len(),
            });
        }
        Ok(self.get(channel_index(x)))
    }

    /// Number of true minterms.
    pub fn popcount(&self) -> usize {
        self.outputs.count_ones()
    }

    pub fn outputs(&self) -> &ChannelMask {
        &self.outputs
    }

    pub fn complement(&self) -> Self {
        Self {
            input_count: self.input_count,
            outputs: self.outputs.complement(),
        }
    }

    pub fn to_hex(&self) -> String {
        self.outputs.to_hex()
    }

    pub fn from_hex(input_count: usize, hex: &str) -> Result<Self> {
        check_operands(input_count)?;
        Self::new(input_count, ChannelMask::from_hex(hex, 1 << input_count)?)
    }

    /// Two-line file: `N=<int>` then the hex bitmask.
    pub fn to_file_string(&self) -> String {
        format!("N={}\n{}\n", self.input_count, self.to_hex())
    }

    pub fn from_file_str(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Format("empty truth table file".into()))?;
        let n: usize = header
            .strip_prefix("N=")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| Error::Format(format!("expected `N=<int>`, got `{header}`")))?;
        let hex = lines
            .next()
            .ok_or_else(|| Error::Format("missing hex line".into()))?;
        if let Some(extra) = lines.next() {
            return Err(Error::Format(format!("unexpected trailing line `{extra}`")));
        }
        Self::from_hex(n, hex)
    }
}

/// Tabulates `e` with variable `j` bound to operand `x_{j+1}`.
pub fn truth_table(e: &BoolExpr, variables: &[String]) -> Result<TruthTable> {
    let n = variables.len();
    check_operands(n)?;
    let resolved = e.resolve(variables).ok_or_else(|| {
        Error::Format(format!("expression `{e}` uses a variable outside {variables:?}"))
    })?;
    let mut bits = vec![false; n];
    TruthTable::from_index_fn(n, |c| {
        for (j, b) in bits.iter_mut().enumerate() {
            *b = c >> (n - 1 - j) & 1 == 1;
        }
        resolved.eval(&bits)
    })
}

/// The waveshaper mask realising `tt`: channel `c` passes iff the function is 1 there.
pub fn compile_mask(tt: &TruthTable, grid: &WavelengthGrid) -> Result<ChannelMask> {
    if grid.channel_count != tt.len() {
        return Err(Error::LengthMismatch {
            expected: grid.channel_count,
            actual: tt.len(),
        });
    }
    Ok(tt.outputs.clone())
}

/// Named table inside a function bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedTable {
    pub name: String,
    pub table: TruthTable,
}

impl NamedTable {
    pub fn new(name: impl Into<String>, table: TruthTable) -> Self {
        Self {
            name: name.into(),
            table,
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BundleEntry {
    name: String,
    truth_table_hex: String,
}

pub fn bundle_to_json(tables: &[NamedTable]) -> Result<String> {
    let entries: Vec<_> = tables
        .iter()
        .map(|t| BundleEntry {
            name: t.name.clone(),
            truth_table_hex: t.table.to_hex(),
        })
        .collect();
    Ok(serde_json::to_string_pretty(&entries)?)
}

/// Reads a bundle. With `input_count = None` the operand count is inferred
/// from the hex length, which is only unambiguous for `N >= 3`; a one-digit
/// mask is read as `N = 2`.
pub fn bundle_from_json(text: &str, input_count: Option<usize>) -> Result<Vec<NamedTable>> {
    let entries: Vec<BundleEntry> = serde_json::from_str(text)?;
    entries
        .into_iter()
        .map(|entry| {
            let hex = entry.truth_table_hex.trim();
            let n = match input_count {
                Some(n) => n,
                None => infer_operands(hex.len())?,
            };
            Ok(NamedTable::new(entry.name, TruthTable::from_hex(n, hex)?))
        })
        .collect()
}

fn infer_operands(digits: usize) -> Result<usize> {
    (2..=crate::error::MAX_OPERANDS)
        .find(|&n| hex_digits(1 << n) == digits)
        .ok_or_else(|| Error::InvalidHex(format!("{digits} hex digits is not a power-of-two table")))
}

/// All `2^n` input vectors in channel order.
pub fn minterms(n: usize) -> impl Iterator<Item = InputVector> {
    (0..1usize << n).map(move |c| minterm_of_channel(c, n).expect("c < 2^n"))
}
