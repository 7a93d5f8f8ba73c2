//! Closed-form descriptions of where `GM1` and `GM1STAR` take the values 0 to 3,
//! and the 2x2 block symmetry of `GM1STAR`.
//!
//! Each class is a periodic family `{(m*n + a, m*n + b) | n >= n_min}` (a union
//! of a few such patterns) plus a finite list of exceptional cells. The lists
//! are written out literally rather than simplified, so a transcription error
//! shows up as a mismatch against the tables.

use crate::table::{SeedSpec, TableError, ValueTable};

/// Which function a [`ValueClass`] describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Function {
    GM1,
    GM1Star,
}

/// One arm of a periodic family: cells `(period*n + dx, period*n + dy)` for `n >= n_min`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pattern {
    pub period: i64,
    pub dx: i64,
    pub dy: i64,
    pub n_min: i64,
}

impl Pattern {
    const fn new(period: i64, dx: i64, dy: i64, n_min: i64) -> Self {
        Pattern { period, dx, dy, n_min }
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        let (sx, sy) = (x as i64 - self.dx, y as i64 - self.dy);
        if sx != sy || sx.rem_euclid(self.period) != 0 {
            return false;
        }
        sx.div_euclid(self.period) >= self.n_min
    }
}

/// The set of cells where a function takes the value `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValueClass {
    pub function: Function,
    pub k: u8,
    pub family: &'static [Pattern],
    pub exceptions: &'static [(usize, usize)],
}

impl ValueClass {
    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.family.iter().any(|p| p.contains(x, y)) || self.exceptions.contains(&(x, y))
    }
}

const A: [ValueClass; 4] = [
    ValueClass {
        function: Function::GM1,
        k: 0,
        family: &[Pattern::new(1, 0, 0, 2)],
        exceptions: &[(0, 1), (1, 0)],
    },
    ValueClass {
        function: Function::GM1,
        k: 1,
        family: &[Pattern::new(2, 0, -1, 2), Pattern::new(2, -1, 0, 2)],
        exceptions: &[(0, 2), (1, 1), (2, 0)],
    },
    ValueClass {
        function: Function::GM1,
        k: 2,
        family: &[Pattern::new(2, 0, 1, 2), Pattern::new(2, 1, 0, 2)],
        exceptions: &[(0, 3), (1, 2), (2, 1), (3, 0)],
    },
    ValueClass {
        function: Function::GM1,
        k: 3,
        family: &[
            Pattern::new(4, -2, 0, 2),
            Pattern::new(4, -1, 1, 2),
            Pattern::new(4, 0, -2, 2),
            Pattern::new(4, 1, -1, 2),
        ],
        exceptions: &[(0, 4), (1, 3), (2, 5), (3, 1), (4, 0), (5, 2)],
    },
];

const B: [ValueClass; 4] = [
    ValueClass {
        function: Function::GM1Star,
        k: 0,
        family: &[Pattern::new(1, 0, 0, 0)],
        exceptions: &[],
    },
    ValueClass {
        function: Function::GM1Star,
        k: 1,
        family: &[Pattern::new(2, 0, 1, 2), Pattern::new(2, 1, 0, 2)],
        exceptions: &[(0, 2), (1, 3), (2, 0), (3, 1)],
    },
    ValueClass {
        function: Function::GM1Star,
        k: 2,
        family: &[
            Pattern::new(4, 2, 0, 1),
            Pattern::new(4, 3, 1, 1),
            Pattern::new(4, 0, 2, 1),
            Pattern::new(4, 1, 3, 1),
        ],
        exceptions: &[(0, 3), (1, 2), (2, 1), (3, 0)],
    },
    ValueClass {
        function: Function::GM1Star,
        k: 3,
        family: &[
            Pattern::new(4, -2, 0, 2),
            Pattern::new(4, -1, 1, 2),
            Pattern::new(4, 0, -2, 2),
            Pattern::new(4, 1, -1, 2),
        ],
        exceptions: &[(0, 4), (1, 5), (2, 3), (3, 2), (4, 0), (5, 1)],
    },
];

/// The class of cells where `GM1` equals `k`. Panics unless `k <= 3`.
pub fn a_class(k: u8) -> &'static ValueClass {
    assert!(k <= 3, "closed forms exist only for values 0..=3, got {k}");
    &A[k as usize]
}

/// The class of cells where `GM1STAR` equals `k`. Panics unless `k <= 3`.
pub fn b_class(k: u8) -> &'static ValueClass {
    assert!(k <= 3, "closed forms exist only for values 0..=3, got {k}");
    &B[k as usize]
}

/// Whether `GM1(x, y) = k`, decided without a table. Panics unless `k <= 3`.
pub fn in_a(k: u8, x: usize, y: usize) -> bool {
    a_class(k).contains(x, y)
}

/// Whether `GM1STAR(x, y) = k`, decided without a table. Panics unless `k <= 3`.
pub fn in_b(k: u8, x: usize, y: usize) -> bool {
    b_class(k).contains(x, y)
}

/// A cell pair that breaks the block symmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryMismatch {
    pub cell: (usize, usize),
    pub partner: (usize, usize),
    pub values: (i32, i32),
}

/// Every violation of `T(2n, 2m) = T(2n+1, 2m+1)` and `T(2n+1, 2m) = T(2n, 2m+1)`
/// for `n, m <= bound`.
pub fn block_symmetry_mismatches(table: &ValueTable, bound: usize) -> Result<Vec<SymmetryMismatch>, TableError> {
    if 2 * bound + 1 >= table.n() {
        return Err(TableError::OutOfRange {
            x: 2 * bound + 1,
            y: 2 * bound + 1,
            n: table.n(),
        });
    }
    let mut out = Vec::new();
    for n in 0..=bound {
        for m in 0..=bound {
            let pairs = [
                ((2 * n, 2 * m), (2 * n + 1, 2 * m + 1)),
                ((2 * n + 1, 2 * m), (2 * n, 2 * m + 1)),
            ];
            for (a, b) in pairs {
                let va = table.value(a.0, a.1)?;
                let vb = table.value(b.0, b.1)?;
                if va != vb {
                    out.push(SymmetryMismatch {
                        cell: a,
                        partner: b,
                        values: (va, vb),
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Whether `table` splits into 2x2 blocks with equal diagonally opposite entries
/// for all block indices up to `bound`. Panics if `table` is not `GM1STAR`.
pub fn block_symmetric(table: &ValueTable, bound: usize) -> Result<bool, TableError> {
    assert_eq!(table.spec(), SeedSpec::GM1Star, "block symmetry is a GM1STAR property");
    Ok(block_symmetry_mismatches(table, bound)?.is_empty())
}
