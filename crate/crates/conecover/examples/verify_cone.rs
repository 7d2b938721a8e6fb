//! Full verification for k = 4..8 (or the range given as two arguments).
use conecover::engine::{verify_with, Strategy, VerifyOptions};

fn main() -> conecover::Result<()> {
    let args: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (from, to) = match args[..] {
        [a, b] => (a, b),
        [a] => (a, a),
        _ => (4, 8),
    };
    for k in from..=to {
        let r = verify_with(k, VerifyOptions { strategy: Strategy::Felsch, ..Default::default() })?;
        println!(
            "k={k}: |G1| = {} of {}, pi1 trivial: {:?}, {} ms",
            r.g1_order.as_deref().unwrap_or("?"),
            r.expected_order,
            r.pi1_trivial,
            r.runtime_ms
        );
    }
    Ok(())
}
