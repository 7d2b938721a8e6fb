//! One PASS/FAIL line per acceptance criterion.
//!
//! Set CONECOVER_ACCEPT_K9=1 to include the optional k=9 run.

mod common;

use std::time::{Duration, Instant};

use common::{expected_b3_exponent, expected_b_exponent, expected_m_exponent, factorial, printed_k6, w};
use conecover::cli;
use conecover::engine::{
    abelianization, edge_homomorphism, enumerate, tietze_simplify, verify_homomorphism, verify_with, Strategy,
    VerificationReport, VerifyOptions,
};
use conecover::free_group::FreeWord;
use conecover::invariants::{chern_c1sq, chern_data, Classification};
use conecover::monodromy::{build_b, build_b3, build_m, exponent_sum, full_factorization};
use conecover::van_kampen::{presentation_g, presentation_g1, projective_relator, GroupPresentation};
use num_bigint::BigUint;

/// Printed values that disagree with independent counting (see README).
const PRINTED_B3_EXPONENT: u64 = 24;
const PRINTED_B5_EXPONENT: u64 = 84;

struct Tally {
    failed: Vec<String>,
    known: Vec<String>,
}

impl Tally {
    fn line(&mut self, id: &str, ok: bool, detail: String) {
        println!("{} [{id}] {detail}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            self.failed.push(id.to_string());
        }
    }

    /// A check against a printed value known to be inconsistent.
    fn known(&mut self, id: &str, ok: bool, detail: String) {
        println!("{} [{id}] {detail}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            self.known.push(id.to_string());
        }
    }
}

fn g1(k: u32) -> GroupPresentation {
    presentation_g1(&presentation_g(&full_factorization(k).unwrap())).unwrap()
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn report_ok(r: &VerificationReport, k: u32) -> bool {
    r.g1_order.as_deref() == Some(factorial(k).to_string().as_str())
        && r.hom_verified
        && r.surjective
        && r.pi1_trivial == Some(true)
}

fn criterion1(t: &mut Tally) {
    let start = Instant::now();
    let r = verify_with(6, VerifyOptions::default()).unwrap();
    let el = start.elapsed();
    t.line(
        "1",
        report_ok(&r, 6) && el < Duration::from_secs(5),
        format!(
            "k=6: |G1| = {} (want 720), epimorphism {} / {}, pi1_trivial {:?}, {} (< 5s)",
            r.g1_order.as_deref().unwrap_or("overflow"),
            r.hom_verified,
            r.surjective,
            r.pi1_trivial,
            secs(el)
        ),
    );
}

fn criterion2(t: &mut Tally) {
    let p = presentation_g(&full_factorization(6).unwrap());
    let direct: Vec<Vec<i32>> = p.relators.iter().map(|r| r.cyclic_key()).collect();
    let ident: Vec<Vec<i32>> = p.relators.iter().map(|r| r.identify_primes().cyclic_key()).collect();
    let mut printed: Vec<FreeWord> = Vec::new();
    for (name, rels) in printed_k6() {
        let mut modes = Vec::new();
        for r in &rels {
            if direct.contains(&r.cyclic_key()) {
                modes.push("direct");
            } else if ident.contains(&r.identify_primes().cyclic_key()) {
                modes.push("with j'=j");
            } else {
                modes.push("missing");
            }
        }
        let ok = !modes.contains(&"missing");
        t.line(&format!("2/{name}"), ok, format!("{} relators: {}", rels.len(), modes.join(", ")));
        printed.extend(rels);
    }
    let proj = w("5' 5 4' 4 3' 3 2' 2 1' 1");
    t.line(
        "2/projective",
        proj == projective_relator(5) && p.relators.iter().any(|r| r.cyclically_equal(&proj)),
        "5'54'43'32'21'1 = e generated".into(),
    );
    let vertex: Vec<&FreeWord> =
        p.relators.iter().zip(&p.tags).filter(|(_, t)| *t == "vertex/branch").map(|x| x.0).collect();
    let all_branch = (1..=5).all(|j| vertex.iter().any(|r| r.cyclically_equal(&w(&format!("{j} {j}'^-1")))));
    t.line(
        "2/vertex",
        all_branch && vertex.len() == 5,
        format!("j = j' for j=1..5 from {} vertex factors", vertex.len()),
    );
    let pk: Vec<Vec<i32>> = printed.iter().map(|r| r.cyclic_key()).collect();
    let pi: Vec<Vec<i32>> = printed.iter().map(|r| r.identify_primes().cyclic_key()).collect();
    let extra = p
        .relators
        .iter()
        .zip(&p.tags)
        .filter(|(_, t)| *t != "vertex/branch" && *t != "projective")
        .filter(|(r, _)| !pk.contains(&r.cyclic_key()) && !pi.contains(&r.identify_primes().cyclic_key()))
        .count();
    t.line("2/no-extra", extra == 0, format!("{extra} generated relators outside the printed families"));
}

fn criterion3_and_7(t: &mut Tally) {
    let mut total = Duration::ZERO;
    let mut agree = true;
    let mut detail = Vec::new();
    for k in 4..=8 {
        let start = Instant::now();
        let r = verify_with(k, VerifyOptions::default()).unwrap();
        let el = start.elapsed();
        total += el;
        t.line(
            &format!("3/k={k}"),
            report_ok(&r, k),
            format!("|G1| = {} (want {}), {}", r.g1_order.as_deref().unwrap_or("overflow"), factorial(k), secs(el)),
        );
        let f = verify_with(k, VerifyOptions { strategy: Strategy::Felsch, ..Default::default() }).unwrap();
        agree &= f.g1_order == r.g1_order && f.g1_order.is_some();
        detail.push(format!("k={k}: {}", f.g1_order.as_deref().unwrap_or("overflow")));
    }
    t.line("3/runtime", total < Duration::from_secs(60), format!("k=4..8 total {} (< 60s)", secs(total)));
    if std::env::var("CONECOVER_ACCEPT_K9").is_ok_and(|v| v == "1") {
        let start = Instant::now();
        let r = verify_with(9, VerifyOptions::default()).unwrap();
        let el = start.elapsed();
        t.line(
            "3/k=9",
            report_ok(&r, 9) && el < Duration::from_secs(600),
            format!("|G1| = {} (want 362880), {} (< 10min)", r.g1_order.as_deref().unwrap_or("overflow"), secs(el)),
        );
    } else {
        println!("SKIP [3/k=9] optional; set CONECOVER_ACCEPT_K9=1");
    }
    t.line("7/strategies", agree, format!("Felsch agrees with HLT: {}", detail.join(", ")));

    let mut same = true;
    let mut orders = Vec::new();
    for k in 4..=6 {
        let raw = g1(k);
        let a = enumerate(&raw, 1_000_000, Strategy::Hlt).map(|e| e.order).ok();
        let b = enumerate(&tietze_simplify(&raw), 1_000_000, Strategy::Hlt).map(|e| e.order).ok();
        same &= a.is_some() && a == b;
        orders.push(format!("k={k}: raw {a:?} simplified {b:?}"));
    }
    t.line("7/tietze", same, orders.join(", "));

    let mut ab = Vec::new();
    let mut all_two = true;
    for k in 4..=8 {
        let a = abelianization(&g1(k)).unwrap();
        all_two &= a == [2];
        ab.push(format!("k={k}: {a:?}"));
    }
    t.line("7/abelianization", all_two, ab.join(", "));
}

fn criterion4(t: &mut Tally) {
    let c5 = chern_c1sq(5, 8).unwrap();
    let c6 = chern_c1sq(6, 10).unwrap();
    t.line(
        "4/printed",
        c5 == BigUint::from(120u32) && c6 == BigUint::from(2880u32),
        format!("c1^2(5) = {c5} (want 120), c1^2(6) = {c6} (want 2880)"),
    );
    let mut ok = true;
    for k in 5..=10 {
        let c = chern_data(k).unwrap();
        let want = BigUint::from(factorial(k)) * BigUint::from((k - 4) * (k - 4));
        ok &= c.c1_squared == want && c.classification == Classification::GeneralType;
    }
    let four = chern_data(4).unwrap();
    t.line(
        "4/formula",
        ok && four.classification == Classification::NotDetermined,
        format!("k!(k-4)^2 and general_type for k=5..10; k=4 gives {} / {}", four.c1_squared, four.classification),
    );
}

fn criterion5(t: &mut Tally) {
    let start = Instant::now();
    let mut bad = 0;
    let mut count = 0;
    for k in 4..=10 {
        let g = presentation_g(&full_factorization(k).unwrap());
        count += g.relators.len();
        if let Err(v) = verify_homomorphism(&g, &edge_homomorphism(k).unwrap()) {
            bad += v.len();
        }
    }
    let el = start.elapsed();
    t.line(
        "5",
        bad == 0 && el < Duration::from_secs(5),
        format!("{count} relators for k=4..10, {bad} not mapped to the identity, {} (< 5s)", secs(el)),
    );
}

fn criterion6(t: &mut Tally) {
    let mut ok = true;
    let mut vals = Vec::new();
    for k in 4..=9 {
        let e = exponent_sum(&build_m(k).unwrap());
        ok &= e == 8 * k as u64 - 6 && e == expected_m_exponent(k);
        vals.push(format!("{k}:{e}"));
    }
    t.line("6/M_k", ok, format!("exponent_sum(M_k) = 8k-6: {}", vals.join(" ")));

    let b3 = exponent_sum(&build_b3().unwrap());
    let b5 = exponent_sum(&build_b(5).unwrap());
    t.line(
        "6/counted",
        b3 == expected_b3_exponent() && b5 == expected_b_exponent(5),
        format!("B3 = {b3}, B5 = {b5} (independent count {} and {})", expected_b3_exponent(), expected_b_exponent(5)),
    );
    t.known(
        "6/B3-printed",
        b3 == PRINTED_B3_EXPONENT,
        format!("B3 = {b3}, printed criterion says {PRINTED_B3_EXPONENT}"),
    );
    t.known(
        "6/B5-printed",
        b5 == PRINTED_B5_EXPONENT,
        format!("B5 = {b5}, printed criterion says {PRINTED_B5_EXPONENT}"),
    );

    let rec = (4..=9).all(|k| {
        exponent_sum(&build_b(k).unwrap())
            == exponent_sum(&build_m(k).unwrap()) + exponent_sum(&build_b(k - 1).unwrap())
    });
    t.line("6/recursion", rec, "B_k = M_k + B_(k-1) for k=4..9".into());
}

fn emit(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(std::iter::once("conecover").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn criterion8(t: &mut Tally) {
    let cases: [&[&str]; 4] = [
        &["emit", "factorization", "--k", "6"],
        &["emit", "factorization", "--k", "6", "--format", "json"],
        &["emit", "presentation", "--k", "6", "--stage", "raw", "--format", "json"],
        &["emit", "presentation", "--k", "6", "--stage", "simplified"],
    ];
    let same = cases.iter().all(|c| {
        let (a, b) = (emit(c), emit(c));
        a.0 == 0 && !a.1.is_empty() && a == b
    });
    t.line("8/emit", same, format!("{} emit invocations byte-identical across two runs", cases.len()));

    let keys = [
        "schema_version",
        "k",
        "d",
        "m",
        "factor_count",
        "relator_count",
        "exponent_sum",
        "g1_order",
        "expected_order",
        "hom_verified",
        "surjective",
        "pi1_trivial",
        "c1_squared",
        "classification",
        "max_cosets_used",
        "runtime_ms",
    ];
    let mut ok = true;
    for args in [&["verify", "--k", "5"][..], &["verify", "--k", "5", "--max-cosets", "10"]] {
        let (_, out) = emit(args);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let obj = v.as_object().unwrap();
        ok &= obj.len() == keys.len() && keys.iter().all(|k| obj.contains_key(*k));
        ok &= v["schema_version"] == 1 && v["c1_squared"].is_string() && v["expected_order"].is_string();
        ok &= v["g1_order"].is_string() || (v["g1_order"].is_null() && v["pi1_trivial"].is_null());
    }
    t.line("8/schema", ok, "report JSON has exactly the frozen fields with the frozen types".into());
}

fn main() {
    let mut t = Tally { failed: Vec::new(), known: Vec::new() };
    criterion1(&mut t);
    criterion2(&mut t);
    criterion3_and_7(&mut t);
    criterion4(&mut t);
    criterion5(&mut t);
    criterion6(&mut t);
    criterion8(&mut t);
    println!("acceptance: {} failed, {} known discrepancies ({})", t.failed.len(), t.known.len(), t.known.join(", "));
    if !t.failed.is_empty() {
        eprintln!("failed: {}", t.failed.join(", "));
        std::process::exit(1);
    }
}
