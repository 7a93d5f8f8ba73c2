// Nim values by XOR and two-pile misère nim read off the GM1 table.
//
//     cargo run --example nim_facts

use goishi::nim::{misere_two_pile_outcome, nim_grundy, nim_outcome_normal, NimPosition};
use goishi::{build_table, Outcome, SeedSpec};

pub fn run_example() -> Result<String, Box<dyn std::error::Error>> {
    let mut out = String::new();
    for piles in [vec![], vec![3, 5], vec![5, 3, 4], vec![1, 2, 3]] {
        let p = NimPosition::new(piles);
        out.push_str(&format!("nim {:?}: grundy {}, {}\n", p.piles(), nim_grundy(&p), nim_outcome_normal(&p)));
    }
    let gm1 = build_table(SeedSpec::GM1, 10)?;
    let mut p_positions = Vec::new();
    for x in 0..10 {
        for y in 0..10 {
            if misere_two_pile_outcome(&gm1, x, y)? == Outcome::P {
                p_positions.push((x, y));
            }
        }
    }
    out.push_str(&format!("misère two-pile nim P-positions below 10: {p_positions:?}\n"));
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", run_example()?);
    Ok(())
}
