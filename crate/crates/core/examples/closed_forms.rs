// Lists the small-value classes of GM1 and GM1STAR near the origin and checks
// the 2x2 block symmetry of GM1STAR.
//
//     cargo run --example closed_forms

use goishi::closedform::{block_symmetric, in_a, in_b};
use goishi::{build_table, SeedSpec};

pub fn run_example() -> Result<String, Box<dyn std::error::Error>> {
    let limit = 14;
    let mut out = String::new();
    for k in 0..=3u8 {
        let a: Vec<_> = cells(limit, |x, y| in_a(k, x, y));
        let b: Vec<_> = cells(limit, |x, y| in_b(k, x, y));
        out.push_str(&format!("GM1 = {k}:     {a:?}\n"));
        out.push_str(&format!("GM1STAR = {k}: {b:?}\n"));
    }
    let star = build_table(SeedSpec::GM1Star, 202)?;
    out.push_str(&format!("GM1STAR block symmetric up to n,m = 100: {}\n", block_symmetric(&star, 100)?));
    Ok(out)
}

fn cells(limit: usize, pred: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    (0..=limit)
        .flat_map(|x| (0..=limit).map(move |y| (x, y)))
        .filter(|&(x, y)| pred(x, y))
        .collect()
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", run_example()?);
    Ok(())
}
