//! Simplifies G1 down to a Coxeter-style presentation.
use conecover::engine::tietze_simplify;
use conecover::monodromy::full_factorization;
use conecover::van_kampen::{presentation_g, presentation_g1};

fn main() -> conecover::Result<()> {
    let k: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let g1 = presentation_g1(&presentation_g(&full_factorization(k)?))?;
    let total: usize = g1.relators.iter().map(|r| r.len()).sum();
    println!("before: {} generators, {} relators, {total} letters", g1.rank(), g1.relators.len());
    let s = tietze_simplify(&g1);
    print!("{}", s.to_text());
    Ok(())
}
