//! Command implementations behind the `goishi` binary.
//!
//! Everything here returns text or reports so the commands can be tested
//! without spawning a process.

use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::closedform::{block_symmetry_mismatches, in_a, in_b};
use crate::game::{Engine, GameError, Position};
use crate::nim::{misere_two_pile_outcome, nim_outcome_normal, NimPosition};
use crate::oracle::{forbidden_nim_graph, GoishiGraph, NimGraph, Solver};
use crate::outcome::Convention;
use crate::table::{SeedSpec, TableBuilder, TableError, ValueTable};

/// Largest coordinate the goishi oracle sweep will visit.
pub const ORACLE_SWEEP_CAP: usize = 40;
/// Largest pile the forbidden-move Grundy check will visit.
pub const ORACLE_GRUNDY_CAP: usize = 60;

const FIXTURES: [(SeedSpec, &str); 4] = [
    (SeedSpec::G0, include_str!("../fixtures/g0.csv")),
    (SeedSpec::G1, include_str!("../fixtures/g1.csv")),
    (SeedSpec::GM1, include_str!("../fixtures/gm1.csv")),
    (SeedSpec::GM1Star, include_str!("../fixtures/gm1star.csv")),
];

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Game(#[from] GameError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// Process exit code: usage and capacity errors are both 2.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Markdown,
}

impl FromStr for TableFormat {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(TableFormat::Csv),
            "markdown" | "md" => Ok(TableFormat::Markdown),
            other => Err(CliError::Usage(format!("unknown format `{other}` (expected csv or markdown)"))),
        }
    }
}

/// Renders a table with rows indexed by `x` and columns by `y`.
pub fn render_table(table: &ValueTable, format: TableFormat, header: bool) -> String {
    let n = table.n();
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            if header {
                out.push_str("x\\y");
                for y in 0..n {
                    write!(out, ",{y}").unwrap();
                }
                out.push('\n');
            }
            for (x, row) in table.rows().enumerate() {
                if header {
                    write!(out, "{x},").unwrap();
                }
                let cells: Vec<String> = row.iter().map(i32::to_string).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
        }
        TableFormat::Markdown => {
            out.push_str("| x\\y |");
            for y in 0..n {
                write!(out, " {y} |").unwrap();
            }
            out.push_str("\n|---|");
            out.push_str(&"---|".repeat(n));
            out.push('\n');
            for (x, row) in table.rows().enumerate() {
                write!(out, "| **{x}** |").unwrap();
                for v in row {
                    write!(out, " {v} |").unwrap();
                }
                out.push('\n');
            }
        }
    }
    out
}

pub fn cmd_table(
    builder: &TableBuilder,
    function: SeedSpec,
    size: usize,
    format: TableFormat,
    header: bool,
) -> Result<String, CliError> {
    let table = builder.build(function, size)?;
    Ok(render_table(&table, format, header))
}

fn engine_for(builder: &TableBuilder, g: Position) -> Result<Engine, CliError> {
    let n = g.x.max(g.z) + 1;
    if n > builder.max_n() {
        return Err(GameError::Capacity {
            position: g,
            max_n: builder.max_n(),
        }
        .into());
    }
    Ok(Engine::with_builder(builder, n)?)
}

/// Outcome class followed by the table value it was read from, e.g. `P GM1(2,2)=0`.
pub fn cmd_outcome(builder: &TableBuilder, g: Position, c: Convention) -> Result<String, CliError> {
    let engine = engine_for(builder, g)?;
    let outcome = engine.outcome(g, c)?;
    let aux = engine.aux_value(g, c)?;
    let name = engine.table(c).spec();
    Ok(format!("{outcome} {name}({},{})={aux}\n", g.x, g.z))
}

pub fn cmd_best_move(builder: &TableBuilder, g: Position, c: Convention) -> Result<String, CliError> {
    let engine = engine_for(builder, g)?;
    Ok(match engine.winning_move(g, c)? {
        Some(m) => format!("{} [{}]\n", m.to, m.pickup),
        None => "no winning move (P-position)\n".to_string(),
    })
}

/// Verification suites runnable from `goishi verify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    /// Generated tables against the hand-transcribed 12x12 fixtures.
    Tables,
    /// Theorem-based goishi outcomes against the brute-force solver.
    Theorems,
    /// Closed forms for values 0..=3 against the tables.
    ClosedForm,
    /// 2x2 block symmetry of `GM1STAR`.
    Symmetry,
    /// Forbidden-move two-pile nim Grundy values against `GM1` and `GM1STAR`.
    OracleGrundy,
    /// `G0 = x XOR y`, the `G1`/`G0` swap, and nim outcome checks.
    Nim,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Tables,
        Check::Theorems,
        Check::ClosedForm,
        Check::Symmetry,
        Check::OracleGrundy,
        Check::Nim,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Tables => "tables",
            Check::Theorems => "theorems",
            Check::ClosedForm => "closedform",
            Check::Symmetry => "symmetry",
            Check::OracleGrundy => "oracle-grundy",
            Check::Nim => "nim",
        }
    }
}

impl FromStr for Check {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| CliError::Usage(format!("unknown check `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub inputs: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub check: Check,
    pub range: String,
    pub cases: usize,
    pub mismatches: Vec<Mismatch>,
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} {:<13} {} ({} cases, {} mismatches)",
            self.check.name(),
            self.range,
            self.cases,
            self.mismatches.len()
        )?;
        for m in self.mismatches.iter().take(10) {
            write!(f, "\n    {}: expected {}, got {}", m.inputs, m.expected, m.actual)?;
        }
        if self.mismatches.len() > 10 {
            write!(f, "\n    ... {} more", self.mismatches.len() - 10)?;
        }
        Ok(())
    }
}

/// Collects mismatches for one check.
struct Tally {
    cases: usize,
    mismatches: Vec<Mismatch>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            mismatches: Vec::new(),
        }
    }

    fn expect<T: PartialEq + fmt::Debug>(&mut self, inputs: impl FnOnce() -> String, expected: T, actual: T) {
        self.cases += 1;
        if expected != actual {
            self.mismatches.push(Mismatch {
                inputs: inputs(),
                expected: format!("{expected:?}"),
                actual: format!("{actual:?}"),
            });
        }
    }
}

/// Parses a fixture: one comma-separated row per line.
pub fn parse_fixture(text: &str) -> Vec<Vec<i32>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split(',').map(|v| v.trim().parse().expect("fixture cell")).collect())
        .collect()
}

/// The hand-transcribed 12x12 table for `spec`.
pub fn fixture(spec: SeedSpec) -> Vec<Vec<i32>> {
    let (_, text) = FIXTURES.iter().find(|(s, _)| *s == spec).unwrap();
    parse_fixture(text)
}

/// Runs one check over `0..=max` (clamped to the check's own limits).
pub fn run_check(builder: &TableBuilder, check: Check, max: usize) -> Result<VerifyReport, CliError> {
    let start = Instant::now();
    let mut tally = Tally::new();
    let range;
    match check {
        Check::Tables => {
            let n = (max + 1).min(12);
            range = format!("{n}x{n} cells of each fixture");
            for spec in SeedSpec::ALL {
                let table = builder.build(spec, n)?;
                let fixture = fixture(spec);
                for (x, row) in fixture.iter().take(n).enumerate() {
                    for (y, &expected) in row.iter().take(n).enumerate() {
                        tally.expect(|| format!("{spec}({x},{y})"), expected, table.value(x, y)?);
                    }
                }
            }
        }
        Check::Theorems => {
            let cap = max.min(ORACLE_SWEEP_CAP);
            range = format!("0 <= x,y,z <= {cap}, both conventions");
            let engine = Engine::with_builder(builder, cap + 1)?;
            let results = std::thread::scope(|scope| {
                let handles: Vec<_> = Convention::BOTH
                    .into_iter()
                    .map(|c| {
                        let engine = &engine;
                        scope.spawn(move || {
                            let mut solver = Solver::new(GoishiGraph::new(cap));
                            let mut local = Tally::new();
                            for x in 0..=cap {
                                for y in 0..=cap {
                                    for z in 0..=cap {
                                        let g = Position::new(x, y, z);
                                        let expected = solver.solve(g, c).expect("within cap");
                                        let actual = engine.outcome(g, c).expect("within capacity");
                                        local.expect(|| format!("{g} {c}"), expected, actual);
                                    }
                                }
                            }
                            local
                        })
                    })
                    .collect();
                handles.into_iter().map(|h| h.join().unwrap()).collect::<Vec<_>>()
            });
            for local in results {
                tally.cases += local.cases;
                tally.mismatches.extend(local.mismatches);
            }
        }
        Check::ClosedForm => {
            range = format!("0 <= x,y <= {max}, values 0..=3");
            let gm1 = builder.build(SeedSpec::GM1, max + 1)?;
            let star = builder.build(SeedSpec::GM1Star, max + 1)?;
            for x in 0..=max {
                for y in 0..=max {
                    let a = gm1.value(x, y)?;
                    let b = star.value(x, y)?;
                    for k in 0..=3u8 {
                        tally.expect(|| format!("A{k}({x},{y})"), a == k as i32, in_a(k, x, y));
                        tally.expect(|| format!("B{k}({x},{y})"), b == k as i32, in_b(k, x, y));
                    }
                }
            }
        }
        Check::Symmetry => {
            let bound = max.min(builder.max_n().saturating_sub(2) / 2);
            range = format!("0 <= n,m <= {bound}");
            let star = builder.build(SeedSpec::GM1Star, 2 * bound + 2)?;
            tally.cases = 2 * (bound + 1) * (bound + 1);
            tally.mismatches = block_symmetry_mismatches(&star, bound)?
                .into_iter()
                .map(|m| Mismatch {
                    inputs: format!("{:?} vs {:?}", m.cell, m.partner),
                    expected: m.values.0.to_string(),
                    actual: m.values.1.to_string(),
                })
                .collect();
        }
        Check::OracleGrundy => {
            let cap = max.min(ORACLE_GRUNDY_CAP);
            range = format!("0 <= x,y <= {cap}");
            let gm1 = builder.build(SeedSpec::GM1, cap + 1)?;
            let star = builder.build(SeedSpec::GM1Star, cap + 1)?;
            let mut misere = Solver::new(forbidden_nim_graph(&[(0, 0)], cap));
            let mut starred = Solver::new(forbidden_nim_graph(&[(0, 1), (1, 0)], cap));
            for x in 0..=cap {
                for y in 0..=cap {
                    if (x, y) != (0, 0) {
                        let g = misere.grundy([x, y]).expect("within cap") as i32;
                        tally.expect(|| format!("GM1({x},{y})"), g, gm1.value(x, y)?);
                    }
                    if !matches!((x, y), (0, 1) | (1, 0)) {
                        let g = starred.grundy([x, y]).expect("within cap") as i32;
                        tally.expect(|| format!("GM1STAR({x},{y})"), g, star.value(x, y)?);
                    }
                }
            }
        }
        Check::Nim => {
            let n = max + 1;
            range = format!("0 <= x,y <= {max}");
            let g0 = builder.build(SeedSpec::G0, n)?;
            let g1 = builder.build(SeedSpec::G1, n)?;
            for x in 0..n {
                for y in 0..n {
                    tally.expect(|| format!("G0({x},{y})"), (x ^ y) as i32, g0.value(x, y)?);
                    let swapped = x <= 1 && y <= 1;
                    let expected = if swapped { 1 - g0.value(x, y)? } else { g0.value(x, y)? };
                    tally.expect(|| format!("G1({x},{y})"), expected, g1.value(x, y)?);
                }
            }
            let cap = max.min(ORACLE_SWEEP_CAP);
            let gm1 = builder.build(SeedSpec::GM1, cap + 1)?;
            let mut plain = Solver::new(NimGraph::<2>::new(cap));
            for x in 0..=cap {
                for y in 0..=cap {
                    tally.expect(
                        || format!("misere nim ({x},{y})"),
                        plain.solve([x, y], Convention::Misere).expect("within cap"),
                        misere_two_pile_outcome(&gm1, x, y)?,
                    );
                }
            }
            let cap = max.min(15);
            let mut three = Solver::new(NimGraph::<3>::new(cap));
            for x in 0..=cap {
                for y in 0..=cap {
                    for z in 0..=cap {
                        let p = NimPosition::new([x as u64, y as u64, z as u64]);
                        tally.expect(
                            || format!("nim ({x},{y},{z})"),
                            three.solve([x, y, z], Convention::Normal).expect("within cap"),
                            nim_outcome_normal(&p),
                        );
                    }
                }
            }
        }
    }
    Ok(VerifyReport {
        check,
        range,
        cases: tally.cases,
        mismatches: tally.mismatches,
        elapsed: start.elapsed(),
    })
}

/// Parses `--checks`: a comma-separated list, or `all`.
pub fn parse_checks(s: &str) -> Result<Vec<Check>, CliError> {
    if s == "all" {
        return Ok(Check::ALL.to_vec());
    }
    s.split(',').map(|c| c.trim().parse()).collect()
}

/// Runs the selected checks; `Ok(true)` when every report passed.
pub fn cmd_verify(
    builder: &TableBuilder,
    max: usize,
    checks: &[Check],
    mut sink: impl FnMut(&VerifyReport),
) -> Result<bool, CliError> {
    if max >= builder.max_n() {
        return Err(TableError::Capacity {
            requested: max + 1,
            max: builder.max_n(),
        }
        .into());
    }
    let mut all = true;
    for &check in checks {
        let report = run_check(builder, check, max)?;
        all &= report.passed();
        sink(&report);
    }
    Ok(all)
}
