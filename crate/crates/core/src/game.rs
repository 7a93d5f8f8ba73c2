//! Linear two-player goishi hiroi.
//!
//! A position `(x, y, z)` is the stone line `A^x B^y A^z`. Empty points are
//! skipped while tracing, so a move removes one or more consecutive stones of
//! a single block. Once the middle block is gone the two `A` blocks are one
//! block of `x + z` stones; such positions are reported as `(x + z, 0, 0)`.
//!
//! Outcomes come from the two value tables: under normal play `(x, y, z)` is
//! `P` iff `y = GM1(x, z) + 1`, and under misère play iff `y = GM1STAR(x, z) + 1`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::outcome::{Convention, Outcome};
use crate::table::{SeedSpec, TableBuilder, TableError, ValueTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Position {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl Position {
    pub const TERMINAL: Position = Position { x: 0, y: 0, z: 0 };

    pub const fn new(x: usize, y: usize, z: usize) -> Self {
        Position { x, y, z }
    }

    pub fn total(&self) -> usize {
        self.x + self.y + self.z
    }

    pub fn is_terminal(&self) -> bool {
        self.total() == 0
    }

    /// Merges the two outer blocks when the middle one is empty.
    pub fn canonicalize(self) -> Position {
        if self.y == 0 {
            Position::new(self.x + self.z, 0, 0)
        } else {
            self
        }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

pub fn canonicalize(g: Position) -> Position {
    g.canonicalize()
}

/// Which stones a move sweeps up.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "block", content = "taken")]
pub enum Pickup {
    Left(usize),
    Middle(usize),
    Right(usize),
    /// Middle block empty: the sweep runs over both `A` blocks as one.
    Merged(usize),
}

impl Pickup {
    pub fn taken(&self) -> usize {
        match *self {
            Pickup::Left(k) | Pickup::Middle(k) | Pickup::Right(k) | Pickup::Merged(k) => k,
        }
    }
}

impl fmt::Display for Pickup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (k, block) = match *self {
            Pickup::Left(k) => (k, "left block"),
            Pickup::Middle(k) => (k, "middle block"),
            Pickup::Right(k) => (k, "right block"),
            Pickup::Merged(k) => (k, "merged outer blocks"),
        };
        let noun = if k == 1 { "stone" } else { "stones" };
        write!(f, "pick up {k} {noun} from the {block}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    pub from: Position,
    pub to: Position,
    pub pickup: Pickup,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} ({})", self.from, self.to, self.pickup)
    }
}

/// All legal moves, in the engine's tie-break order: middle reductions by
/// increasing new size, then left, then right. With an empty middle block the
/// merged block is reduced by increasing remaining total.
pub fn moves(g: Position) -> Vec<Move> {
    let mut out = Vec::new();
    if g.y == 0 {
        let total = g.x + g.z;
        for t in 0..total {
            out.push(Move {
                from: g,
                to: Position::new(t, 0, 0),
                pickup: Pickup::Merged(total - t),
            });
        }
        return out;
    }
    for y in 0..g.y {
        out.push(Move {
            from: g,
            to: Position { y, ..g },
            pickup: Pickup::Middle(g.y - y),
        });
    }
    for x in 0..g.x {
        out.push(Move {
            from: g,
            to: Position { x, ..g },
            pickup: Pickup::Left(g.x - x),
        });
    }
    for z in 0..g.z {
        out.push(Move {
            from: g,
            to: Position { z, ..g },
            pickup: Pickup::Right(g.z - z),
        });
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("position {position} needs outer blocks below {max_n}; rebuild with a larger table")]
    Capacity { position: Position, max_n: usize },
    #[error(transparent)]
    Table(#[from] TableError),
}

/// Theorem-backed outcome oracle and perfect-play move selection.
///
/// Holds the `GM1` (normal play) and `GM1STAR` (misère play) tables.
#[derive(Debug, Clone)]
pub struct Engine {
    gm1: ValueTable,
    gm1_star: ValueTable,
}

impl Engine {
    /// Builds both tables with side `n`, so outer blocks of up to `n - 1` stones are supported.
    pub fn new(n: usize) -> Result<Self, GameError> {
        Self::with_builder(&TableBuilder::default(), n)
    }

    pub fn with_builder(builder: &TableBuilder, n: usize) -> Result<Self, GameError> {
        Ok(Engine {
            gm1: builder.build(SeedSpec::GM1, n)?,
            gm1_star: builder.build(SeedSpec::GM1Star, n)?,
        })
    }

    /// Table side length; outer blocks must be smaller than this.
    pub fn max_n(&self) -> usize {
        self.gm1.n()
    }

    pub fn table(&self, c: Convention) -> &ValueTable {
        match c {
            Convention::Normal => &self.gm1,
            Convention::Misere => &self.gm1_star,
        }
    }

    /// Outer blocks must fit the table. With an empty middle block only the
    /// merged total matters, and any total up to `2 * (n - 1)` fits.
    fn check(&self, g: Position) -> Result<(), GameError> {
        let n = self.max_n();
        let fits = if g.y == 0 {
            g.x + g.z <= 2 * (n - 1)
        } else {
            g.x < n && g.z < n
        };
        if !fits {
            return Err(GameError::Capacity {
                position: g,
                max_n: n,
            });
        }
        Ok(())
    }

    /// Looks up the table value for the outer blocks. With an empty middle
    /// block only the total matters, so the total is split to fit the table.
    fn lookup(&self, g: Position, c: Convention) -> i32 {
        let table = self.table(c);
        let (x, z) = if g.y == 0 && (g.x >= table.n() || g.z >= table.n()) {
            let total = g.x + g.z;
            let x = total.min(table.n() - 1);
            (x, total - x)
        } else {
            (g.x, g.z)
        };
        table.value(x, z).expect("callers check capacity")
    }

    fn classify(&self, g: Position, c: Convention) -> Outcome {
        if g.y as i64 == self.lookup(g, c) as i64 + 1 {
            Outcome::P
        } else {
            Outcome::N
        }
    }

    /// `GM1(x, z)` under normal play, `GM1STAR(x, z)` under misère play.
    pub fn aux_value(&self, g: Position, c: Convention) -> Result<i32, GameError> {
        self.check(g)?;
        Ok(self.lookup(g, c))
    }

    pub fn outcome(&self, g: Position, c: Convention) -> Result<Outcome, GameError> {
        self.check(g)?;
        Ok(self.classify(g, c))
    }

    /// All moves from `g` paired with the outcome class of the resulting position.
    pub fn classified_moves(&self, g: Position, c: Convention) -> Result<Vec<(Move, Outcome)>, GameError> {
        self.check(g)?;
        Ok(moves(g)
            .into_iter()
            .map(|m| (m, self.classify(m.to, c)))
            .collect())
    }

    /// First move in tie-break order that reaches a `P`-position, or `None`
    /// when `g` itself is a `P`-position.
    pub fn winning_move(&self, g: Position, c: Convention) -> Result<Option<Move>, GameError> {
        self.check(g)?;
        if self.classify(g, c).is_p() {
            return Ok(None);
        }
        let found = moves(g).into_iter().find(|m| self.classify(m.to, c).is_p());
        debug_assert!(found.is_some() || g.is_terminal());
        Ok(found)
    }

    /// The engine's reply: the winning move if there is one, otherwise the
    /// first legal move. `None` only at the terminal position.
    pub fn engine_move(&self, g: Position, c: Convention) -> Result<Option<Move>, GameError> {
        match self.winning_move(g, c)? {
            Some(m) => Ok(Some(m)),
            None => Ok(moves(g).into_iter().next()),
        }
    }

    /// The move built directly from the case analysis of the outcome
    /// characterisation, without scanning the option list:
    ///
    /// * middle block too large: shrink it to `value + 1`;
    /// * middle block empty: take everything (normal) or leave one stone (misère);
    /// * otherwise some outer reduction hits value `y - 1` by the mex property.
    ///
    /// Returns `None` for `P`-positions and the terminal position.
    pub fn constructive_move(&self, g: Position, c: Convention) -> Result<Option<Move>, GameError> {
        self.check(g)?;
        if g.is_terminal() || self.classify(g, c).is_p() {
            return Ok(None);
        }
        let table = self.table(c);
        let target = self.lookup(g, c) + 1;
        let y = g.y as i32;
        let to = if y > target {
            Position { y: target as usize, ..g }
        } else if g.y == 0 {
            match c {
                Convention::Normal => Position::TERMINAL,
                Convention::Misere => Position::new(1, 0, 0),
            }
        } else {
            let want = y - 1;
            let left = (0..g.x).find(|&x| table.value(x, g.z) == Ok(want));
            match left {
                Some(x) => Position { x, ..g },
                None => {
                    let z = (0..g.z)
                        .find(|&z| table.value(g.x, z) == Ok(want))
                        .expect("mex guarantees a smaller value is present");
                    Position { z, ..g }
                }
            }
        };
        Ok(moves(g).into_iter().find(|m| m.to == to))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tos(g: Position) -> Vec<Position> {
        moves(g).into_iter().map(|m| m.to).collect()
    }

    #[test]
    fn move_examples() {
        assert!(tos(Position::new(5, 3, 4)).contains(&Position::new(5, 1, 4)));
        assert!(tos(Position::new(2, 0, 2)).contains(&Position::TERMINAL));
        assert!(moves(Position::TERMINAL).is_empty());
    }

    #[test]
    fn figure_sequence_is_legal() {
        let line = [
            Position::new(5, 3, 4),
            Position::new(5, 1, 4),
            Position::new(2, 1, 4),
            Position::new(2, 1, 2),
            Position::new(2, 0, 2),
            Position::new(0, 0, 0),
        ];
        for pair in line.windows(2) {
            assert!(tos(pair[0]).contains(&pair[1]), "{} -> {}", pair[0], pair[1]);
        }
    }

    #[test]
    fn move_counts_and_order() {
        let g = Position::new(2, 3, 1);
        let ms = moves(g);
        assert_eq!(ms.len(), 6);
        assert_eq!(ms[0].to, Position::new(2, 0, 1));
        assert_eq!(ms[0].pickup, Pickup::Middle(3));
        assert_eq!(ms[3].to, Position::new(0, 3, 1));
        assert_eq!(ms[5].to, Position::new(2, 3, 0));

        let merged = moves(Position::new(2, 0, 3));
        assert_eq!(merged.len(), 5);
        assert_eq!(merged[1].to, Position::new(1, 0, 0));
        assert_eq!(merged[1].pickup, Pickup::Merged(4));
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonicalize(Position::new(2, 0, 2)), Position::new(4, 0, 0));
        assert_eq!(canonicalize(Position::new(5, 3, 4)), Position::new(5, 3, 4));
        assert_eq!(canonicalize(Position::TERMINAL), Position::TERMINAL);
    }

    #[test]
    fn outcome_examples() {
        let e = Engine::new(16).unwrap();
        assert_eq!(e.outcome(Position::new(2, 1, 2), Convention::Normal), Ok(Outcome::P));
        assert_eq!(e.outcome(Position::TERMINAL, Convention::Normal), Ok(Outcome::P));
        assert_eq!(e.outcome(Position::TERMINAL, Convention::Misere), Ok(Outcome::N));
        assert_eq!(e.outcome(Position::new(1, 0, 0), Convention::Misere), Ok(Outcome::P));
        assert_eq!(e.outcome(Position::new(5, 3, 4), Convention::Normal), Ok(Outcome::P));
    }

    #[test]
    fn winning_move_examples() {
        let e = Engine::new(16).unwrap();
        let m = e.winning_move(Position::new(3, 3, 3), Convention::Normal).unwrap().unwrap();
        assert_eq!(m.to, Position::new(3, 1, 3));

        for (x, z) in [(1, 0), (0, 5), (4, 7), (15, 15)] {
            let m = e.winning_move(Position::new(x, 0, z), Convention::Normal).unwrap().unwrap();
            assert_eq!(m.to, Position::TERMINAL);
        }

        let m = e.winning_move(Position::new(0, 0, 5), Convention::Misere).unwrap().unwrap();
        assert_eq!(m.to, Position::new(1, 0, 0));
        assert_eq!(m.pickup, Pickup::Merged(4));

        assert_eq!(e.winning_move(Position::new(2, 1, 2), Convention::Normal), Ok(None));
        let m = e.winning_move(Position::new(1, 1, 1), Convention::Normal).unwrap().unwrap();
        assert_eq!(m.to, Position::new(0, 1, 1));
    }

    #[test]
    fn engine_move_from_lost_position_takes_first_option() {
        let e = Engine::new(16).unwrap();
        let m = e.engine_move(Position::new(2, 1, 2), Convention::Normal).unwrap().unwrap();
        assert_eq!(m.to, Position::new(2, 0, 2));
        assert_eq!(e.engine_move(Position::TERMINAL, Convention::Misere), Ok(None));
    }

    #[test]
    fn capacity_is_enforced_on_outer_blocks() {
        let e = Engine::new(8).unwrap();
        assert!(e.outcome(Position::new(7, 1000, 7), Convention::Normal).is_ok());
        assert_eq!(
            e.outcome(Position::new(8, 1, 0), Convention::Normal),
            Err(GameError::Capacity {
                position: Position::new(8, 1, 0),
                max_n: 8
            })
        );
        assert_eq!(e.outcome(Position::new(14, 0, 0), Convention::Normal), Ok(Outcome::N));
        assert!(e.outcome(Position::new(15, 0, 0), Convention::Normal).is_err());
        assert!(e.outcome(Position::new(9, 0, 6), Convention::Misere).is_err());
        // Merged options beyond the table side still classify.
        let m = e.winning_move(Position::new(7, 0, 7), Convention::Misere).unwrap().unwrap();
        assert_eq!(m.to, Position::new(1, 0, 0));
    }

    #[test]
    fn constructive_move_reaches_p() {
        let e = Engine::new(20).unwrap();
        for c in Convention::BOTH {
            for x in 0..20 {
                for y in 0..20 {
                    for z in 0..20 {
                        let g = Position::new(x, y, z);
                        let m = e.constructive_move(g, c).unwrap();
                        match e.outcome(g, c).unwrap() {
                            Outcome::P => assert!(m.is_none()),
                            Outcome::N if g.is_terminal() => assert!(m.is_none()),
                            Outcome::N => {
                                let m = m.unwrap_or_else(|| panic!("no move from {g} ({c})"));
                                assert_eq!(e.outcome(m.to, c), Ok(Outcome::P), "{m}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pickup_display() {
        assert_eq!(Pickup::Middle(2).to_string(), "pick up 2 stones from the middle block");
        assert_eq!(Pickup::Left(1).to_string(), "pick up 1 stone from the left block");
    }
}
