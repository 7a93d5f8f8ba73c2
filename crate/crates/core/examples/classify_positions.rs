// Classifies a handful of positions under both conventions and shows the
// table value behind each answer.
//
//     cargo run --example classify_positions

use goishi::{Convention, Engine, Position};

pub fn run_example() -> Result<String, Box<dyn std::error::Error>> {
    let engine = Engine::new(32)?;
    let positions = [
        Position::new(5, 3, 4),
        Position::new(2, 1, 2),
        Position::new(1, 1, 1),
        Position::new(0, 0, 5),
        Position::new(3, 3, 3),
        Position::new(0, 0, 0),
    ];
    let mut out = String::new();
    for g in positions {
        for c in Convention::BOTH {
            let outcome = engine.outcome(g, c)?;
            let value = engine.aux_value(g, c)?;
            let name = engine.table(c).spec();
            out.push_str(&format!("{g} {c:<6} {outcome}   {name}({}, {}) = {value}\n", g.x, g.z));
        }
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", run_example()?);
    Ok(())
}
