//! Expands basis webs into boundary states by counting flows, showing the
//! leading state of each web with coefficient 1.

use sl3web::flows::{canonical_flow, state_string, tensor_expansion};
use sl3web::ladderweb::{enumerate_basis, SignString};

fn main() -> Result<(), sl3web::Error> {
    let signs: SignString = "+++---".parse()?;
    for (t, web) in enumerate_basis(&signs)? {
        let lead = state_string(canonical_flow(&web, &t)?.top());
        println!("{}  leading state {lead}", web.word);
        for (state, coeff) in tensor_expansion(&web).iter().rev() {
            let mark = if *state == lead { "*" } else { " " };
            println!("  {mark} {state}  {coeff}");
        }
    }
    Ok(())
}
