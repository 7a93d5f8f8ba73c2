// The engine plays a full game against a random opponent and prints the
// transcript. The engine moves first from an N-position, so it always wins.
//
//     cargo run --example perfect_play

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use goishi::{moves, Convention, Engine, Position};

fn game(engine: &Engine, start: Position, c: Convention, rng: &mut ChaCha8Rng) -> Result<(String, bool), Box<dyn std::error::Error>> {
    let mut out = format!("{c} play from {start}\n");
    let mut g = start;
    let mut engine_turn = true;
    let mut engine_last = false;
    while !g.is_terminal() {
        let m = if engine_turn {
            engine.engine_move(g, c)?.expect("non-terminal")
        } else {
            *moves(g).choose(rng).expect("non-terminal")
        };
        let who = if engine_turn { "engine" } else { "random" };
        out.push_str(&format!("  {who:<6} {} -> {}  ({})\n", m.from, m.to, m.pickup));
        g = m.to;
        engine_last = engine_turn;
        engine_turn = !engine_turn;
    }
    let won = match c {
        Convention::Normal => engine_last,
        Convention::Misere => !engine_last,
    };
    out.push_str(&format!("  engine {}\n", if won { "wins" } else { "loses" }));
    Ok((out, won))
}

pub fn run_example() -> Result<String, Box<dyn std::error::Error>> {
    let engine = Engine::new(16)?;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut out = String::new();
    for (start, c) in [
        (Position::new(6, 4, 9), Convention::Normal),
        (Position::new(6, 4, 9), Convention::Misere),
    ] {
        let (text, won) = game(&engine, start, c, &mut rng)?;
        assert!(won);
        out.push_str(&text);
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", run_example()?);
    Ok(())
}
