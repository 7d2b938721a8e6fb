//! Stabilizer chain orders and the edge homomorphism onto S_k.
use conecover::engine::{edge_homomorphism, group_order, Permutation, StabilizerChain};

fn main() -> conecover::Result<()> {
    let cycle = Permutation::from_images(vec![1, 2, 3, 4, 0]);
    let swap = Permutation::transposition(5, 1, 2);
    println!("<{cycle}, {swap}> has order {}", group_order(5, &[cycle.clone(), swap.clone()]));
    let chain = StabilizerChain::new(5, std::slice::from_ref(&cycle));
    println!("<{cycle}> has order {} and contains {swap}: {}", chain.order(), chain.contains(&swap));

    for (g, p) in edge_homomorphism(5)? {
        println!("  {g} -> {p}");
    }
    Ok(())
}
