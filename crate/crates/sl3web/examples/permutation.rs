//! Sorts a filling into a reference filling by adjacent swaps and reads each
//! swap as a foam generator.

use sl3web::foamword::{minimal_permutation, swap_generators};
use sl3web::tableaux::{parse_multitableau, superstandard};

fn main() -> Result<(), sl3web::Error> {
    let t = parse_multitableau("(1 3/6 | 5 | 2 4/7)", 2)?;
    let reference = superstandard(&t.shape());
    let sigma = minimal_permutation(&t, &reference)?;
    println!("{t} -> {reference}: {sigma}");
    for (j, step) in sigma.applied.iter().zip(&sigma.steps) {
        println!("  τ{j}  {step}");
    }
    let generators: Vec<String> = swap_generators(&t, &reference)?.iter().map(ToString::to_string).collect();
    println!("generators: {}", generators.join(", "));
    Ok(())
}
