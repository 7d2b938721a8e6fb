use std::time::Instant;

use log::{info, warn};
use serde::{Deserialize, Serialize};

use super::coset::{enumerate, Strategy};
use super::permutation::{group_order, Permutation};
use super::tietze::tietze_simplify;
use crate::error::{Error, Result};
use crate::free_group::{FreeWord, GeneratorSymbol};
use crate::invariants::{chern_data, factorial, Classification};
use crate::monodromy::{exponent_sum, full_factorization};
use crate::van_kampen::{presentation_g, presentation_g1, GroupPresentation};

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_MAX_COSETS: usize = 1_000_000;
pub const MAX_COSETS_ENV: &str = "CONECOVER_MAX_COSETS";

/// Generator images in a symmetric group.
pub type GeneratorMap = Vec<(GeneratorSymbol, Permutation)>;

/// Γj and Γj' both go to the transposition (j j+1) in S_k.
pub fn edge_homomorphism(k: u32) -> Result<GeneratorMap> {
    if k < 2 {
        return Err(Error::KTooSmall { what: "edge homomorphism", k, min: 2 });
    }
    let mut m = Vec::new();
    for j in 1..k {
        let t = Permutation::transposition(k as usize, j, j + 1);
        m.push((GeneratorSymbol::unprimed(j), t.clone()));
        m.push((GeneratorSymbol::primed(j), t));
    }
    Ok(m)
}

fn evaluate(w: &FreeWord, phi: &GeneratorMap, degree: usize) -> Permutation {
    let mut acc = Permutation::identity(degree);
    for &x in w.letters() {
        let g = GeneratorSymbol::from_position(x.unsigned_abs());
        let img = &phi.iter().find(|(h, _)| *h == g).expect("generator not mapped").1;
        acc = if x > 0 { acc.then(img) } else { acc.then(&img.inverse()) };
    }
    acc
}

/// `Ok` when every relator maps to the identity; otherwise the failures.
pub fn verify_homomorphism(p: &GroupPresentation, phi: &GeneratorMap) -> std::result::Result<(), Vec<FreeWord>> {
    let degree = phi.first().map(|(_, q)| q.degree()).unwrap_or(0);
    let bad: Vec<FreeWord> = p.relators.iter().filter(|r| !evaluate(r, phi, degree).is_identity()).cloned().collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad)
    }
}

/// Order of the group generated by the images of the presentation's generators.
pub fn image_order(p: &GroupPresentation, phi: &GeneratorMap) -> u128 {
    let degree = phi.first().map(|(_, q)| q.degree()).unwrap_or(0);
    let gens: Vec<Permutation> =
        p.generators.iter().filter_map(|g| phi.iter().find(|(h, _)| h == g)).map(|(_, q)| q.clone()).collect();
    group_order(degree, &gens)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub k: u32,
    pub d: u32,
    pub m: u32,
    pub factor_count: usize,
    pub relator_count: usize,
    pub exponent_sum: u64,
    /// `null` when the enumeration overflowed.
    pub g1_order: Option<String>,
    pub expected_order: String,
    pub hom_verified: bool,
    pub surjective: bool,
    #[serde(skip)]
    pub isomorphic: bool,
    /// `null` when undetermined.
    pub pi1_trivial: Option<bool>,
    pub c1_squared: String,
    pub classification: Classification,
    pub max_cosets_used: usize,
    pub runtime_ms: u64,
}

impl VerificationReport {
    pub fn overflowed(&self) -> bool {
        self.g1_order.is_none()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).unwrap()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub max_cosets: usize,
    pub strategy: Strategy,
    /// Enumerate G1 as extracted, without simplification.
    pub raw: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_cosets: DEFAULT_MAX_COSETS, strategy: Strategy::Hlt, raw: false }
    }
}

pub fn verify_simply_connected(k: u32, max_cosets: usize) -> Result<VerificationReport> {
    verify_with(k, VerifyOptions { max_cosets, ..Default::default() })
}

/// Full pipeline. An overflow is not an error: the report comes back with
/// `g1_order` and `pi1_trivial` unset.
pub fn verify_with(k: u32, opts: VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let chern = chern_data(k)?;
    let f = full_factorization(k)?;
    let g = presentation_g(&f);
    let g1 = presentation_g1(&g)?;
    let phi = edge_homomorphism(k)?;
    let hom_verified = match verify_homomorphism(&g1, &phi) {
        Ok(()) => true,
        Err(bad) => {
            warn!("{} relators do not map to the identity in S_{k}", bad.len());
            false
        }
    };
    let expected = factorial(k);
    let surjective = image_order(&g1, &phi).to_string() == expected.to_string();
    let target = if opts.raw { g1.clone() } else { tietze_simplify(&g1) };
    info!("k={k}: enumerating {} generators, {} relators", target.generators.len(), target.relators.len());
    let run = enumerate(&target, opts.max_cosets, opts.strategy);
    let (g1_order, max_used) = match run {
        Ok(e) => (Some(e.order.to_string()), e.max_cosets_used),
        Err(o) => {
            warn!("k={k}: {o}");
            (None, o.max_cosets_used)
        }
    };
    let isomorphic = hom_verified && surjective && g1_order.as_deref() == Some(&expected.to_string());
    let pi1_trivial = g1_order.as_ref().map(|_| isomorphic);
    Ok(VerificationReport {
        schema_version: SCHEMA_VERSION,
        k,
        d: chern.d,
        m: chern.m,
        factor_count: f.len(),
        relator_count: g.relators.len(),
        exponent_sum: exponent_sum(&f),
        g1_order,
        expected_order: expected.to_string(),
        hom_verified,
        surjective,
        isomorphic,
        pi1_trivial,
        c1_squared: chern.c1_squared.to_string(),
        classification: chern.classification,
        max_cosets_used: max_used,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}
