//! Todd-Coxeter on a few small groups with both strategies.
use conecover::engine::{enumerate, Strategy};
use conecover::free_group::FreeWord;
use conecover::van_kampen::{GroupPresentation, Stage};

fn pres(lines: u32, rels: &[&str], gens: usize) -> GroupPresentation {
    let rels = rels.iter().map(|r| r.parse::<FreeWord>().unwrap());
    let mut p = GroupPresentation::new(lines, rels, Stage::Simplified);
    p.generators.truncate(gens);
    p
}

fn main() {
    let groups = [
        ("Z/7", pres(1, &["1 1 1 1 1 1 1"], 1)),
        ("Q8", pres(1, &["1 1 1 1", "1 1 1'^-1 1'^-1", "1'^-1 1 1' 1"], 2)),
        ("S4", pres(2, &["1 1", "1' 1'", "2 2", "1 1' 1 1' 1 1'", "1' 2 1' 2 1' 2", "1 2 1 2"], 3)),
        ("free", pres(1, &[], 1)),
    ];
    for (name, p) in &groups {
        for s in [Strategy::Hlt, Strategy::Felsch] {
            match enumerate(p, 10_000, s) {
                Ok(e) => println!("{name:>5} {s:>6}: order {} (peak {} cosets)", e.order, e.max_cosets_used),
                Err(e) => println!("{name:>5} {s:>6}: {e}"),
            }
        }
    }
}
