//! Prints the cellular foam basis of a sign string with degrees, and the
//! graded dimensions of its shape pairs.
//!
//! `cargo run --example foam_basis -- +-+-`

use std::collections::BTreeMap;

use sl3web::foamword::enumerate_cellular_basis;
use sl3web::ladderweb::SignString;

fn main() -> Result<(), sl3web::Error> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "+++".into());
    let signs: SignString = arg.parse()?;
    let basis = enumerate_cellular_basis(&signs)?;
    let mut by_degree = BTreeMap::new();
    for b in &basis {
        println!("{:<24} {:<24} degree {:>2}", b.top_tableau.to_string(), b.bottom_tableau.to_string(), b.degree());
        println!("    {}", b.word);
        *by_degree.entry(b.degree()).or_insert(0) += 1;
    }
    println!("{} basis foams; by degree {by_degree:?}", basis.len());
    Ok(())
}
