//! Relators of G and G1 read off the factorization for six planes.
use conecover::monodromy::full_factorization;
use conecover::van_kampen::{presentation_g, presentation_g1};

fn main() -> conecover::Result<()> {
    let g = presentation_g(&full_factorization(6)?);
    for (r, tag) in g.relators.iter().zip(&g.tags).take(12) {
        println!("{tag:>16}  {r}");
    }
    println!("... {} relators on {} generators", g.relators.len(), g.rank());

    let g1 = presentation_g1(&g)?;
    println!("G1 adds {} squares", g1.relators.len() - g.relators.len());
    Ok(())
}
