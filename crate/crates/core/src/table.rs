//! Seeded mex recurrences over pairs of counts.
//!
//! All four functions share one recurrence: a cell's value is the mex of every
//! value earlier in its row and its column. They differ only in which cells are
//! pinned to a fixed value up front.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest table side built unless a caller asks for a different capacity.
pub const DEFAULT_MAX_N: usize = 512;

/// Minimum excluded nonnegative integer. Negative members are ignored.
pub fn mex<I>(values: I) -> u32
where
    I: IntoIterator<Item = i32>,
{
    let mut seen: Vec<bool> = Vec::new();
    for v in values {
        if v < 0 {
            continue;
        }
        let v = v as usize;
        if v >= seen.len() {
            seen.resize(v + 1, false);
        }
        seen[v] = true;
    }
    seen.iter().position(|&s| !s).unwrap_or(seen.len()) as u32
}

/// One of the four seeded recurrences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeedSpec {
    /// Two-pile nim: `(0,0) -> 0`.
    G0,
    /// Terminal pinned to 1: `(0,0) -> 1`.
    G1,
    /// Misère two-pile nim: `(0,0) -> -1`.
    GM1,
    /// Moves to `(0,1)` and `(1,0)` forbidden: `(0,0) -> 0`, `(0,1),(1,0) -> -1`.
    GM1Star,
}

impl SeedSpec {
    pub const ALL: [SeedSpec; 4] = [SeedSpec::G0, SeedSpec::G1, SeedSpec::GM1, SeedSpec::GM1Star];

    /// The pinned cells of this recurrence.
    pub fn seeds(self) -> &'static [((usize, usize), i32)] {
        match self {
            SeedSpec::G0 => &[((0, 0), 0)],
            SeedSpec::G1 => &[((0, 0), 1)],
            SeedSpec::GM1 => &[((0, 0), -1)],
            SeedSpec::GM1Star => &[((0, 0), 0), ((0, 1), -1), ((1, 0), -1)],
        }
    }

    pub fn seed_at(self, x: usize, y: usize) -> Option<i32> {
        self.seeds()
            .iter()
            .find(|(cell, _)| *cell == (x, y))
            .map(|&(_, v)| v)
    }

    pub fn name(self) -> &'static str {
        match self {
            SeedSpec::G0 => "G0",
            SeedSpec::G1 => "G1",
            SeedSpec::GM1 => "GM1",
            SeedSpec::GM1Star => "GM1STAR",
        }
    }
}

impl fmt::Display for SeedSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeedSpec {
    type Err = TableError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "G0" => Ok(SeedSpec::G0),
            "G1" => Ok(SeedSpec::G1),
            "GM1" | "G-1" => Ok(SeedSpec::GM1),
            "GM1STAR" | "GM1*" | "G*-1" => Ok(SeedSpec::GM1Star),
            _ => Err(TableError::UnknownFunction(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("table size must be at least 1")]
    Empty,
    #[error("table size {requested} exceeds the maximum of {max}")]
    Capacity { requested: usize, max: usize },
    #[error("cell ({x}, {y}) is outside the built {n}x{n} table")]
    OutOfRange { x: usize, y: usize, n: usize },
    #[error("unknown function `{0}` (expected G0, G1, GM1 or GM1STAR)")]
    UnknownFunction(String),
}

/// Builds value tables up to a configurable side length.
#[derive(Debug, Clone, Copy)]
pub struct TableBuilder {
    max_n: usize,
}

impl Default for TableBuilder {
    fn default() -> Self {
        TableBuilder { max_n: DEFAULT_MAX_N }
    }
}

impl TableBuilder {
    pub fn with_max_n(max_n: usize) -> Self {
        TableBuilder { max_n }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// Fills an `n`x`n` table row-major. Each cell depends only on its row
    /// prefix and column prefix, both of which are already filled.
    pub fn build(&self, spec: SeedSpec, n: usize) -> Result<ValueTable, TableError> {
        if n == 0 {
            return Err(TableError::Empty);
        }
        if n > self.max_n {
            return Err(TableError::Capacity {
                requested: n,
                max: self.max_n,
            });
        }

        let mut cells = vec![0i32; n * n];
        // The mex of at most x+y entries is at most x+y.
        let mut marks = vec![false; 2 * n];
        for x in 0..n {
            for y in 0..n {
                if let Some(v) = spec.seed_at(x, y) {
                    cells[x * n + y] = v;
                    continue;
                }
                let bound = x + y + 1;
                marks[..bound].fill(false);
                let column = (0..x).map(|xp| cells[xp * n + y]);
                let row = cells[x * n..x * n + y].iter().copied();
                for v in column.chain(row) {
                    if v >= 0 && (v as usize) < bound {
                        marks[v as usize] = true;
                    }
                }
                let value = marks[..bound].iter().position(|&m| !m).unwrap_or(bound);
                cells[x * n + y] = value as i32;
            }
        }
        debug_assert!(cells.iter().all(|&v| v >= -1));
        Ok(ValueTable { spec, n, cells })
    }
}

/// Builds a table with the default capacity.
pub fn build_table(spec: SeedSpec, n: usize) -> Result<ValueTable, TableError> {
    TableBuilder::default().build(spec, n)
}

/// Immutable square table of recurrence values, indexed `(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueTable {
    spec: SeedSpec,
    n: usize,
    cells: Vec<i32>,
}

impl ValueTable {
    pub fn spec(&self) -> SeedSpec {
        self.spec
    }

    /// Side length.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, x: usize, y: usize) -> Result<i32, TableError> {
        if x >= self.n || y >= self.n {
            return Err(TableError::OutOfRange { x, y, n: self.n });
        }
        Ok(self.cells[x * self.n + y])
    }

    /// Row `x` as a slice; panics if `x` is out of range.
    pub fn row(&self, x: usize) -> &[i32] {
        &self.cells[x * self.n..(x + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i32]> {
        self.cells.chunks(self.n)
    }
}
