//! Brute-force solvers used to check the table-based results.
//!
//! Nothing here reads a value table. Win/loss and Grundy values are computed by
//! exhaustive memoized search over an explicit option function, so they are an
//! independent route to every outcome the [`Engine`](crate::Engine) reports.

use std::collections::{HashMap, HashSet};
use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

use crate::game::Position;
use crate::outcome::{Convention, Outcome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("state {0} lies outside the graph's caps")]
    OutsideCaps(String),
}

/// A finite, acyclic game graph.
pub trait GameGraph {
    type State: Copy + Eq + Hash + Debug;

    /// Whether `s` belongs to the bounded state universe. The universe must be
    /// closed under [`options`](GameGraph::options).
    fn contains(&self, s: &Self::State) -> bool;

    /// Every option of `s`, in canonical form, without duplicates.
    fn options(&self, s: &Self::State) -> Vec<Self::State>;

    /// Representative used as the memo key.
    fn canonical(&self, s: Self::State) -> Self::State {
        s
    }
}

fn mex_of(values: impl IntoIterator<Item = u32>) -> u32 {
    let present: HashSet<u32> = values.into_iter().collect();
    (0..).find(|v| !present.contains(v)).unwrap()
}

/// Memoized solver over one graph. Each instance owns its memo tables.
pub struct Solver<G: GameGraph> {
    graph: G,
    normal: HashMap<G::State, Outcome>,
    misere: HashMap<G::State, Outcome>,
    grundy: HashMap<G::State, u32>,
}

impl<G: GameGraph> Solver<G> {
    pub fn new(graph: G) -> Self {
        Solver {
            graph,
            normal: HashMap::new(),
            misere: HashMap::new(),
            grundy: HashMap::new(),
        }
    }

    pub fn graph(&self) -> &G {
        &self.graph
    }

    fn enter(&self, g: G::State) -> Result<G::State, OracleError> {
        if !self.graph.contains(&g) {
            return Err(OracleError::OutsideCaps(format!("{g:?}")));
        }
        Ok(self.graph.canonical(g))
    }

    /// Win/loss classification. A state is `N` iff some option is `P`;
    /// terminals are `P` under normal play and `N` under misère play.
    pub fn solve(&mut self, g: G::State, c: Convention) -> Result<Outcome, OracleError> {
        let root = self.enter(g)?;
        let terminal = match c {
            Convention::Normal => Outcome::P,
            Convention::Misere => Outcome::N,
        };
        let graph = &self.graph;
        let memo = match c {
            Convention::Normal => &mut self.normal,
            Convention::Misere => &mut self.misere,
        };
        // Explicit stack: a state is resolved once all its options are.
        let mut stack = vec![root];
        while let Some(&s) = stack.last() {
            if memo.contains_key(&s) {
                stack.pop();
                continue;
            }
            let opts = graph.options(&s);
            let pending: Vec<_> = opts.iter().filter(|o| !memo.contains_key(o)).copied().collect();
            if pending.is_empty() {
                let outcome = if opts.is_empty() {
                    terminal
                } else if opts.iter().any(|o| memo[o] == Outcome::P) {
                    Outcome::N
                } else {
                    Outcome::P
                };
                memo.insert(s, outcome);
                stack.pop();
            } else {
                stack.extend(pending);
            }
        }
        Ok(memo[&root])
    }

    /// Normal-play Grundy value: mex of the options' values.
    pub fn grundy(&mut self, g: G::State) -> Result<u32, OracleError> {
        let root = self.enter(g)?;
        let graph = &self.graph;
        let memo = &mut self.grundy;
        let mut stack = vec![root];
        while let Some(&s) = stack.last() {
            if memo.contains_key(&s) {
                stack.pop();
                continue;
            }
            let opts = graph.options(&s);
            let pending: Vec<_> = opts.iter().filter(|o| !memo.contains_key(o)).copied().collect();
            if pending.is_empty() {
                let value = mex_of(opts.iter().map(|o| memo[o]));
                memo.insert(s, value);
                stack.pop();
            } else {
                stack.extend(pending);
            }
        }
        Ok(memo[&root])
    }

    /// Options of `g` as seen by this solver's graph.
    pub fn options(&self, g: G::State) -> Result<Vec<G::State>, OracleError> {
        let s = self.enter(g)?;
        Ok(self.graph.options(&s))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Stone {
    A,
    B,
}

/// Goishi hiroi on a line, simulated on the run-length encoded stone sequence.
///
/// A move removes `k >= 1` consecutive stones from one run; runs of the same
/// colour that become adjacent merge. States are capped at `cap` per
/// coordinate, plus merged single-block states of up to `2 * cap` stones.
#[derive(Debug, Clone, Copy)]
pub struct GoishiGraph {
    cap: usize,
}

impl GoishiGraph {
    pub fn new(cap: usize) -> Self {
        GoishiGraph { cap }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn runs(g: &Position) -> Vec<(Stone, usize)> {
        normalize(vec![(Stone::A, g.x), (Stone::B, g.y), (Stone::A, g.z)])
    }

    fn decode(runs: &[(Stone, usize)]) -> Position {
        use Stone::*;
        match runs {
            [] => Position::new(0, 0, 0),
            [(A, t)] => Position::new(*t, 0, 0),
            [(B, y)] => Position::new(0, *y, 0),
            [(A, x), (B, y)] => Position::new(*x, *y, 0),
            [(B, y), (A, z)] => Position::new(0, *y, *z),
            [(A, x), (B, y), (A, z)] => Position::new(*x, *y, *z),
            other => unreachable!("sequence {other:?} has more than two colour changes"),
        }
    }
}

fn normalize(runs: Vec<(Stone, usize)>) -> Vec<(Stone, usize)> {
    let mut out: Vec<(Stone, usize)> = Vec::with_capacity(runs.len());
    for (stone, len) in runs {
        if len == 0 {
            continue;
        }
        match out.last_mut() {
            Some((last, n)) if *last == stone => *n += len,
            _ => out.push((stone, len)),
        }
    }
    out
}

impl GameGraph for GoishiGraph {
    type State = Position;

    fn contains(&self, s: &Position) -> bool {
        let boxed = s.x <= self.cap && s.y <= self.cap && s.z <= self.cap;
        let merged = s.y == 0 && s.x + s.z <= 2 * self.cap;
        boxed || merged
    }

    fn options(&self, s: &Position) -> Vec<Position> {
        let runs = Self::runs(s);
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for i in 0..runs.len() {
            for k in 1..=runs[i].1 {
                let mut next = runs.clone();
                next[i].1 -= k;
                let to = Self::decode(&normalize(next));
                if seen.insert(to) {
                    out.push(to);
                }
            }
        }
        out
    }

    fn canonical(&self, s: Position) -> Position {
        Self::decode(&Self::runs(&s))
    }
}

/// Nim on `K` piles, each capped at `cap`, with moves into `forbidden` removed.
#[derive(Debug, Clone)]
pub struct NimGraph<const K: usize> {
    cap: usize,
    forbidden: HashSet<[usize; K]>,
}

impl<const K: usize> NimGraph<K> {
    pub fn new(cap: usize) -> Self {
        NimGraph {
            cap,
            forbidden: HashSet::new(),
        }
    }

    pub fn with_forbidden(cap: usize, forbidden: impl IntoIterator<Item = [usize; K]>) -> Self {
        NimGraph {
            cap,
            forbidden: forbidden.into_iter().collect(),
        }
    }
}

impl<const K: usize> GameGraph for NimGraph<K> {
    type State = [usize; K];

    fn contains(&self, s: &[usize; K]) -> bool {
        s.iter().all(|&p| p <= self.cap)
    }

    fn options(&self, s: &[usize; K]) -> Vec<[usize; K]> {
        let mut out = Vec::new();
        for i in 0..K {
            for v in 0..s[i] {
                let mut next = *s;
                next[i] = v;
                if !self.forbidden.contains(&next) {
                    out.push(next);
                }
            }
        }
        out
    }
}

/// Two-pile nim with every move into `forbidden` deleted.
pub fn forbidden_nim_graph(forbidden: &[(usize, usize)], cap: usize) -> NimGraph<2> {
    NimGraph::with_forbidden(cap, forbidden.iter().map(|&(x, y)| [x, y]))
}

/// Solves a goishi position with a fresh solver sized to it.
pub fn solve_goishi(g: Position, c: Convention) -> Outcome {
    let cap = g.x.max(g.y).max(g.z);
    Solver::new(GoishiGraph::new(cap))
        .solve(g, c)
        .expect("cap covers the position")
}
