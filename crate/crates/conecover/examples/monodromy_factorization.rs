//! Prints the braid monodromy factorization for k planes (default 5).
use conecover::monodromy::{build_m, exponent_sum, full_factorization};

fn main() -> conecover::Result<()> {
    let k: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let f = full_factorization(k)?;
    print!("{}", f.to_text());
    println!("{} factors, exponent sum {}", f.len(), exponent_sum(&f));
    let m = build_m(k - 1)?;
    println!("M{} alone: {} factors, exponent sum {}", k - 1, m.len(), exponent_sum(&m));
    Ok(())
}
