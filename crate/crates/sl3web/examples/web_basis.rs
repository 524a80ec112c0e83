//! Lists the web basis of a sign string together with the semistandard
//! tableau each ladder word was read from.
//!
//! `cargo run --example web_basis -- +-+-`

use sl3web::ladderweb::{enumerate_basis, SignString};

fn main() -> Result<(), sl3web::Error> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "+-+-+-".into());
    let signs: SignString = arg.parse()?;
    let basis = enumerate_basis(&signs)?;
    println!("{signs}: {} basis webs", basis.len());
    for (t, web) in &basis {
        println!();
        println!("{t}  ->  {}", web.word);
        println!("{}", web.render());
    }
    Ok(())
}
