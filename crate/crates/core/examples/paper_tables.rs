// Prints the 12x12 tables of all four seeded recurrences.
//
//     cargo run --example paper_tables

use goishi::cli::{render_table, TableFormat};
use goishi::{build_table, SeedSpec};

pub fn run_example() -> Result<String, Box<dyn std::error::Error>> {
    let mut out = String::new();
    for spec in SeedSpec::ALL {
        let table = build_table(spec, 12)?;
        out.push_str(&format!("{spec}\n\n"));
        out.push_str(&render_table(&table, TableFormat::Markdown, false));
        out.push('\n');
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", run_example()?);
    Ok(())
}
