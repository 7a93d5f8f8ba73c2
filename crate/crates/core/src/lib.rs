//! Exact analysis of linear two-player goishi hiroi.
//!
//! The stone line `A^x B^y A^z` is solved through seeded mex tables:
//!
//! * [`table`]: the mex recurrence and the four seeded tables `G0`, `G1`,
//!   `GM1` and `GM1STAR`;
//! * [`nim`]: XOR values of nim and the misère two-pile reading of `GM1`;
//! * [`game`]: positions, legal moves, outcome classes and perfect play;
//! * [`oracle`]: brute-force solvers that recompute everything from the rules;
//! * [`closedform`]: closed forms for small table values and block symmetry;
//! * [`cli`] and [`service`]: table rendering, verification sweeps and the
//!   JSON analysis API.
//!
//! ```
//! use goishi::{Convention, Engine, Outcome, Position};
//!
//! let engine = Engine::new(16).unwrap();
//! let g = Position::new(5, 3, 4);
//! assert_eq!(engine.outcome(g, Convention::Normal).unwrap(), Outcome::P);
//! ```

pub mod cli;
pub mod closedform;
pub mod game;
pub mod nim;
pub mod oracle;
mod outcome;
pub mod service;
pub mod table;

pub use game::{canonicalize, moves, Engine, GameError, Move, Pickup, Position};
pub use outcome::{Convention, Outcome, ParseConventionError};
pub use table::{build_table, mex, SeedSpec, TableBuilder, TableError, ValueTable, DEFAULT_MAX_N};
