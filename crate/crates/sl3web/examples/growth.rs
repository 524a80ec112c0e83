//! Fills the hexagon web along one of its flows, prints the tower of weight
//! diagrams and grows the web back from the filling.

use sl3web::bijection::{classify_steps, grow, iota, weight_diagram_tower};
use sl3web::flows::enumerate_flows;
use sl3web::presets::preset;

fn main() -> Result<(), sl3web::Error> {
    let web = preset("hexagon")?.web();
    let flows = enumerate_flows(&web);
    println!("{} on {} strands has {} flows", web.word, web.n, flows.len());
    let flow = flows.iter().max_by_key(|f| f.weight).expect("the hexagon has flows");
    let t = iota(&web, flow)?;
    let steps: Vec<String> = classify_steps(&web, flow)?.iter().map(ToString::to_string).collect();
    println!("flow of weight {}: {}", flow.weight, steps.join(" "));
    println!("filling {t}, degree {}", t.bkw_degree().0);
    for (k, diagram) in weight_diagram_tower(&t).iter().enumerate() {
        println!("{k:>3}  {diagram}");
    }
    let grown = grow(&t, Some(web.n))?;
    println!("grown back: {}", grown.word);
    assert_eq!(grown.word, web.word);
    assert_eq!(grown.moves, flow.moves);
    Ok(())
}
