//! Classical nim facts: XOR Grundy values and the two-pile misère reading of
//! the `GM1` table.

use crate::outcome::Outcome;
use crate::table::{TableError, ValueTable};
use crate::SeedSpec;

/// Pile sizes of a nim position. Empty means terminal.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct NimPosition(pub Vec<u64>);

impl NimPosition {
    pub fn new(piles: impl Into<Vec<u64>>) -> Self {
        NimPosition(piles.into())
    }

    pub fn piles(&self) -> &[u64] {
        &self.0
    }
}

pub fn nim_grundy(p: &NimPosition) -> u64 {
    p.0.iter().fold(0, |acc, &pile| acc ^ pile)
}

pub fn nim_outcome_normal(p: &NimPosition) -> Outcome {
    if nim_grundy(p) == 0 {
        Outcome::P
    } else {
        Outcome::N
    }
}

/// Two-pile misère nim, read off the `GM1` table: `P` exactly where the value is 0.
///
/// Panics if `gm1` is not a `GM1` table.
pub fn misere_two_pile_outcome(gm1: &ValueTable, x: usize, y: usize) -> Result<Outcome, TableError> {
    assert_eq!(gm1.spec(), SeedSpec::GM1, "misère two-pile nim needs the GM1 table");
    Ok(if gm1.value(x, y)? == 0 {
        Outcome::P
    } else {
        Outcome::N
    })
}
