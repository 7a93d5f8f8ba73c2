// Recomputes outcomes and Grundy values by brute force and compares them with
// the table-based answers.
//
//     cargo run --example oracle_crosscheck

use goishi::oracle::{forbidden_nim_graph, GoishiGraph, Solver};
use goishi::{build_table, Convention, Engine, Position, SeedSpec};

pub fn run_example() -> Result<String, Box<dyn std::error::Error>> {
    let cap = 15;
    let engine = Engine::new(cap + 1)?;
    let mut out = String::new();

    for c in Convention::BOTH {
        let mut solver = Solver::new(GoishiGraph::new(cap));
        let mut disagreements = 0;
        for x in 0..=cap {
            for y in 0..=cap {
                for z in 0..=cap {
                    let g = Position::new(x, y, z);
                    if solver.solve(g, c)? != engine.outcome(g, c)? {
                        disagreements += 1;
                    }
                }
            }
        }
        out.push_str(&format!("goishi {c}: {disagreements} disagreements over {} positions\n", (cap + 1).pow(3)));
    }

    for (spec, forbidden) in [
        (SeedSpec::GM1, vec![(0, 0)]),
        (SeedSpec::GM1Star, vec![(0, 1), (1, 0)]),
    ] {
        let table = build_table(spec, cap + 1)?;
        let mut solver = Solver::new(forbidden_nim_graph(&forbidden, cap));
        let mut disagreements = 0;
        for x in 0..=cap {
            for y in 0..=cap {
                if forbidden.contains(&(x, y)) {
                    continue;
                }
                if solver.grundy([x, y])? as i32 != table.value(x, y)? {
                    disagreements += 1;
                }
            }
        }
        out.push_str(&format!("{spec} vs nim forbidding moves to {forbidden:?}: {disagreements} disagreements\n"));
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", run_example()?);
    Ok(())
}
