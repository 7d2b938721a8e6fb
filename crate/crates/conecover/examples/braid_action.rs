//! Half-twists acting on the free group of the punctured line.
use conecover::braid::{half_twist, Side};
use conecover::free_group::{FreeWord, GeneratorSymbol};
use conecover::monodromy::pair_twist;

fn main() -> conecover::Result<()> {
    let lines = 5;
    let s = |x: &str| x.parse::<GeneratorSymbol>().unwrap();

    let z = half_twist(s("4"), s("5"), Side::Below, lines)?;
    let full = pair_twist(s("5"), 4, lines)?;
    println!("Z(4,5) induces {}", z.underlying_permutation());
    println!("{full} induces {}", full.underlying_permutation());

    for x in ["4", "4'", "5"] {
        let w: FreeWord = x.parse()?;
        println!("  {x:>3} -> {}", full.act_on(&w));
    }

    let above = half_twist(s("1"), s("5'"), Side::Above, lines)?.power(2);
    let phi = above.action();
    println!(
        "Zbar(1,5')^2 moves {} of {} generators",
        (1..=phi.rank()).filter(|&p| phi.image(p).into_owned() != FreeWord::from_position(p)).count(),
        phi.rank()
    );
    Ok(())
}
