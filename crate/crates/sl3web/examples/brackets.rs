//! Evaluates the closed preset webs by summing over their flows.

use sl3web::presets::PRESETS;

fn main() {
    for p in PRESETS {
        let closed = p.closed();
        let mut weights = closed.flow_weights();
        weights.sort();
        println!("{:<15} {:>3} flows  bracket {}", p.name, weights.len(), closed.bracket());
    }
}
