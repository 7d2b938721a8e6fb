//! Abelian invariants of G and G1.
use conecover::engine::abelianization;
use conecover::monodromy::full_factorization;
use conecover::van_kampen::{presentation_g, presentation_g1};

fn main() -> conecover::Result<()> {
    for k in 4..=8 {
        let g = presentation_g(&full_factorization(k)?);
        let g1 = presentation_g1(&g)?;
        println!("k={k}: G^ab = {:?}, G1^ab = {:?}", abelianization(&g)?, abelianization(&g1)?);
    }
    Ok(())
}
