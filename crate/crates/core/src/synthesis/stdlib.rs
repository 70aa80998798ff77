//! Generators for the standard function bundles.
//!
//! Arithmetic functions take eight operands ordered `A4 A3 A2 A1 B4 B3 B2 B1`
//! (`A4` on stage 1), so channel `c` carries `a = c >> 4`, `b = c & 15`.
//! Multi-bit outputs are listed most significant first.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::synthesis::table::{NamedTable, TruthTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StdFunction {
    Decoder(usize),
    Comparator4,
    Adder4,
    Multiplier4,
}

impl StdFunction {
    pub fn input_count(&self) -> usize {
        match self {
            Self::Decoder(n) => *n,
            _ => 8,
        }
    }

    pub fn tables(&self) -> Result<Vec<NamedTable>> {
        match *self {
            Self::Decoder(n) => decoder(n),
            Self::Comparator4 => comparator4(),
            Self::Adder4 => adder4(),
            Self::Multiplier4 => multiplier4(),
        }
    }
}

impl FromStr for StdFunction {
    type Err = Error;

    /// Accepts `decoder` (8 inputs), `decoder(N)`, `decoderN`, `comparator4`,
    /// `adder4` and `multiplier4`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "decoder" => return Ok(Self::Decoder(8)),
            "comparator4" => return Ok(Self::Comparator4),
            "adder4" => return Ok(Self::Adder4),
            "multiplier4" => return Ok(Self::Multiplier4),
            _ => {}
        }
        s.strip_prefix("decoder")
            .map(|rest| rest.trim_start_matches('(').trim_end_matches(')'))
            .and_then(|n| n.parse().ok())
            .map(Self::Decoder)
            .ok_or_else(|| Error::UnknownFunction(s.to_string()))
    }
}

impl fmt::Display for StdFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Decoder(n) => write!(f, "decoder({n})"),
            Self::Comparator4 => f.write_str("comparator4"),
            Self::Adder4 => f.write_str("adder4"),
            Self::Multiplier4 => f.write_str("multiplier4"),
        }
    }
}

pub fn stdlib_function(name: &str) -> Result<Vec<NamedTable>> {
    name.parse::<StdFunction>()?.tables()
}

/// One singleton table per channel, named `m<k>`.
pub fn decoder(n: usize) -> Result<Vec<NamedTable>> {
    crate::channel::check_operands(n)?;
    (0..1usize << n)
        .map(|k| Ok(NamedTable::new(format!("m{k}"), TruthTable::from_index_fn(n, |c| c == k)?)))
        .collect()
}

fn operands(c: usize) -> (usize, usize) {
    (c >> 4, c & 0xf)
}

pub fn comparator4() -> Result<Vec<NamedTable>> {
    let cmp = |name: &str, f: fn(usize, usize) -> bool| -> Result<NamedTable> {
        Ok(NamedTable::new(
            name,
            TruthTable::from_index_fn(8, |c| {
                let (a, b) = operands(c);
                f(a, b)
            })?,
        ))
    };
    Ok(vec![
        cmp("A>B", |a, b| a > b)?,
        cmp("A=B", |a, b| a == b)?,
        cmp("A<B", |a, b| a < b)?,
    ])
}

/// Output bits `O<width>..O1` of `f(a, b)`.
fn arithmetic(width: usize, f: fn(usize, usize) -> usize) -> Result<Vec<NamedTable>> {
    (1..=width)
        .rev()
        .map(|k| {
            let table = TruthTable::from_index_fn(8, |c| {
                let (a, b) = operands(c);
                f(a, b) >> (k - 1) & 1 == 1
            })?;
            Ok(NamedTable::new(format!("O{k}"), table))
        })
        .collect()
}

pub fn adder4() -> Result<Vec<NamedTable>> {
    arithmetic(5, |a, b| a + b)
}

pub fn multiplier4() -> Result<Vec<NamedTable>> {
    arithmetic(8, |a, b| a * b)
}

/// Reads `(O_w ... O_1)` decisions, most significant first, as an integer.
pub fn decode_word(bits: &[bool]) -> usize {
    bits.iter().fold(0, |acc, &b| acc << 1 | usize::from(b))
}
