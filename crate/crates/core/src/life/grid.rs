use std::fmt;
use std::fmt::Write as _;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Boundary {
    /// Cells outside the field are dead.
    #[default]
    Dead,
    /// The field wraps around on both axes.
    Toroidal,
}

/// Binary cell field, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct CellGrid {
    width: usize,
    height: usize,
    cells: Vec<bool>,
    boundary: Boundary,
}

impl CellGrid {
    pub fn new(width: usize, height: usize, boundary: Boundary) -> Result<Self> {
        if width < 3 || height < 3 {
            return Err(Error::InvalidGrid2d(format!("{width}x{height} is smaller than 3x3")));
        }
        Ok(Self {
            width,
            height,
            cells: vec![false; width * height],
            boundary,
        })
    }

    pub fn from_rows(rows: &[Vec<bool>], boundary: Boundary) -> Result<Self> {
        let height = rows.len();
        let width = rows.iter().map(Vec::len).max().unwrap_or(0);
        let mut grid = Self::new(width, height, boundary)?;
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                grid.set(r, c, v);
            }
        }
        Ok(grid)
    }

    /// Plain-text pattern: `.` dead, `O` live, lines starting with `#` ignored.
    /// Short rows are padded with dead cells.
    pub fn parse_pattern(text: &str, boundary: Boundary) -> Result<Self> {
        let rows = text
            .lines()
            .map(str::trim_end)
            .filter(|l| !l.starts_with('#'))
            .enumerate()
            .map(|(r, line)| {
                line.chars()
                    .enumerate()
                    .map(|(c, ch)| match ch {
                        '.' => Ok(false),
                        'O' => Ok(true),
                        other => Err(Error::Format(format!(
                            "invalid cell `{other}` at row {r}, column {c}"
                        ))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        // trailing blank lines carry no rows
        let keep = rows.iter().rposition(|r| !r.is_empty()).map_or(0, |i| i + 1);
        Self::from_rows(&rows[..keep], boundary)
    }

    pub fn to_pattern(&self) -> String {
        let mut out = String::with_capacity((self.width + 1) * self.height);
        for r in 0..self.height {
            for c in 0..self.width {
                out.push(if self.get(r, c) { 'O' } else { '.' });
            }
            out.push('\n');
        }
        out
    }

    /// Copy of this grid centred on a larger `width x height` field.
    pub fn centered_in(&self, width: usize, height: usize) -> Result<Self> {
        if width < self.width || height < self.height {
            return Err(Error::InvalidGrid2d(format!(
                "{}x{} pattern does not fit in {width}x{height}",
                self.width, self.height
            )));
        }
        let mut grid = Self::new(width, height, self.boundary)?;
        let (dr, dc) = ((height - self.height) / 2, (width - self.width) / 2);
        for (r, c) in self.live_cells() {
            grid.set(r + dr, c + dc, true);
        }
        Ok(grid)
    }

    pub fn with_boundary(mut self, boundary: Boundary) -> Self {
        self.boundary = boundary;
        self
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.cells[row * self.width + col]
    }

    pub fn set(&mut self, row: usize, col: usize, live: bool) {
        self.cells[row * self.width + col] = live;
    }

    pub fn population(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    pub fn live_cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.height)
            .flat_map(move |r| (0..self.width).map(move |c| (r, c)))
            .filter(|&(r, c)| self.get(r, c))
    }

    /// State at `(row + dr, col + dc)` under the boundary mode.
    pub fn offset(&self, row: usize, col: usize, dr: isize, dc: isize) -> bool {
        let (r, c) = (row as isize + dr, col as isize + dc);
        let (h, w) = (self.height as isize, self.width as isize);
        match self.boundary {
            Boundary::Dead => (0..h).contains(&r) && (0..w).contains(&c) && self.get(r as usize, c as usize),
            Boundary::Toroidal => self.get(r.rem_euclid(h) as usize, c.rem_euclid(w) as usize),
        }
    }

    /// Operands `I_1..I_9` = (NW, N, NE, W, C, E, SW, S, SE).
    pub fn neighborhood(&self, row: usize, col: usize) -> [bool; 9] {
        let mut out = [false; 9];
        for (k, slot) in out.iter_mut().enumerate() {
            *slot = self.offset(row, col, k as isize / 3 - 1, k as isize % 3 - 1);
        }
        out
    }

    /// Builds the next generation from a per-cell rule.
    pub fn map_cells(&self, mut rule: impl FnMut(usize, usize) -> bool) -> Self {
        let mut next = self.clone();
        for r in 0..self.height {
            for c in 0..self.width {
                next.set(r, c, rule(r, c));
            }
        }
        next
    }

    /// Plain (P2) greymap, live cells white, `scale` pixels per cell.
    pub fn to_pgm(&self, scale: usize) -> String {
        let scale = scale.max(1);
        let mut out = format!("P2\n{} {}\n255\n", self.width * scale, self.height * scale);
        for r in 0..self.height * scale {
            let row: Vec<&str> = (0..self.width * scale)
                .map(|c| if self.get(r / scale, c / scale) { "255" } else { "0" })
                .collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }
}

impl fmt::Debug for CellGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CellGrid {}x{} {:?}", self.width, self.height, self.boundary)?;
        f.write_str(&self.to_pattern())
    }
}

/// Pattern blocks separated by blank lines, each headed by `# step <k>`.
pub fn trace_to_text(trace: &[CellGrid]) -> String {
    let mut out = String::new();
    for (k, grid) in trace.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "# step {k}");
        out.push_str(&grid.to_pattern());
    }
    out
}
