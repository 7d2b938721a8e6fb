#![allow(dead_code)]

use conecover::free_group::FreeWord;

pub fn w(s: &str) -> FreeWord {
    s.parse().unwrap()
}

fn comm(a: &str, b: &str) -> FreeWord {
    FreeWord::commutator(&w(a), &w(b))
}

fn tri(a: &str, b: &str) -> FreeWord {
    FreeWord::triple(&w(a), &w(b))
}

fn eq(a: &str, b: &str) -> FreeWord {
    w(a).multiply(&w(b).inverse())
}

/// Relators printed for six planes, transcribed by hand and grouped by the
/// braid they come from. Written as equations `a = b`, commutators `[a, b]`
/// and triples `<a, b>`.
pub fn printed_k6() -> Vec<(&'static str, Vec<FreeWord>)> {
    let x2 = "3' 3 2' 2 1 2^-1 2'^-1 3^-1 3'^-1";
    let x2p = "3' 3 2' 2 1' 2^-1 2'^-1 3^-1 3'^-1";
    let w5 = "4' 4 3' 3 2' 2 1 2^-1 2'^-1 3^-1 3'^-1 4^-1 4'^-1";
    let w5p = "4' 4 3' 3 2' 2 1' 2^-1 2'^-1 3^-1 3'^-1 4^-1 4'^-1";
    let c5 = "5^-1 5' 5";
    let c9 = "5 4 5^-1";
    let c12 = "5 4^-1 4' 4 5^-1";
    let c17 = "5 4 5^-1 3 5 4^-1 5^-1";
    let c17p = "5 4 5^-1 3' 5 4^-1 5^-1";
    vec![
        ("cusp 4 5", vec![tri("4", "5"), tri("4'", "5"), tri("4^-1 4' 4", "5")]),
        ("node 1 5", vec![comm(x2, "5"), comm(x2p, "5")]),
        ("node 2 5", vec![comm("3' 3 2 3^-1 3'^-1", "5"), comm("3' 3 2' 3^-1 3'^-1", "5")]),
        ("node 3 5", vec![comm("3", "5"), comm("3'", "5")]),
        ("above 1 5'", vec![comm(w5, c5), comm(w5p, c5)]),
        (
            "above 2 5'",
            vec![
                comm("4' 4 3' 3 2 3^-1 3'^-1 4^-1 4'^-1", c5),
                comm("4' 4 3' 3 2' 3^-1 3'^-1 4^-1 4'^-1", c5),
            ],
        ),
        ("above 3 5'", vec![comm("4' 4 3 4^-1 4'^-1", c5), comm("4' 4 3' 4^-1 4'^-1", c5)]),
        ("branch 5", vec![eq("5'", "5 4' 4 5 4^-1 4'^-1 5^-1")]),
        ("cusp 3 4", vec![tri("3", c9), tri("3'", c9), tri("3^-1 3' 3", c9)]),
        ("node 1 4", vec![comm("2' 2 1 2^-1 2'^-1", c9), comm("2' 2 1' 2^-1 2'^-1", c9)]),
        ("node 2 4", vec![comm("2", c9), comm("2'", c9)]),
        ("above 1 4'", vec![comm(x2, c12), comm(x2p, c12)]),
        ("above 2 4'", vec![comm("3' 3 2 3^-1 3'^-1", c12), comm("3' 3 2' 3^-1 3'^-1", c12)]),
        ("branch 4", vec![eq("3^-1 3'^-1 5 4^-1 4' 4 5^-1 3' 3", c9)]),
        ("cusp 1' 2", vec![tri("1'", "2"), tri("1'", "2'"), tri("1'", "2^-1 2' 2")]),
        ("branch 1", vec![eq("1", "2' 2 1' 2^-1 2'^-1")]),
        (
            "cusp 2 3",
            vec![
                tri("2' 2 1' 2 1'^-1 2^-1 2'^-1", c17),
                tri("2' 2 1' 2' 1'^-1 2^-1 2'^-1", c17),
                tri("2' 2 1' 2^-1 2' 2 1'^-1 2^-1 2'^-1", c17),
            ],
        ),
        (
            "branch 3",
            vec![eq(
                "3",
                "5 4^-1 5^-1 2' 2 1' 2^-1 2'^-1 1'^-1 2^-1 2'^-1 5 4 5^-1 3^-1 3' 3 5 4^-1 5^-1 2' 2 1' 2' 2 1'^-1 2^-1 2'^-1 5 4 5^-1",
            )],
        ),
        ("quad 1 3", vec![comm("1", c17), comm("1'", c17), comm("1", c17p), comm("1'", c17p)]),
    ]
}

pub fn factorial(k: u32) -> u128 {
    (1..=k as u128).product()
}

/// Atomic factor count from the compound structure alone: per M_j a cusp
/// (3), 2(j-2) node and 2(j-2) above factors and one branch; B3 has
/// 3 + 1 + 3 + 1 + 4; plus one branch per line.
pub fn expected_factor_count(k: u32) -> usize {
    let n = k - 1;
    let m: u32 = (4..=n).map(|j| 3 + 4 * (j - 2) + 1).sum();
    (n + m + 12) as usize
}

/// Exponent sum counted the same way: cusp 9, node factor 2, branch 1.
pub fn expected_m_exponent(j: u32) -> u64 {
    (9 + 2 * 4 * (j - 2) + 1) as u64
}

pub fn expected_b3_exponent() -> u64 {
    // two cusps, two branches, four squares
    9 + 1 + 9 + 1 + 4 * 2
}

pub fn expected_b_exponent(k: u32) -> u64 {
    expected_b3_exponent() + (4..=k).map(expected_m_exponent).sum::<u64>()
}
