//! Degeneration parameters and the Chern number c1² of the Galois cover.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    GeneralType,
    NotDetermined,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::GeneralType => "general_type",
            Classification::NotDetermined => "not_determined",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernData {
    /// degree of the generic projection (number of planes)
    pub d: u32,
    /// degree of the branch curve
    pub m: u32,
    pub c1_squared: BigUint,
    pub classification: Classification,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegenerationParams {
    pub d: u32,
    pub m: u32,
    pub lines: u32,
}

/// Cone over a chain of k-1 lines: d = k planes, m = 2(k-1).
pub fn degeneration_params(k: u32) -> Result<DegenerationParams> {
    if k < 3 {
        return Err(Error::KTooSmall { what: "degeneration", k, min: 3 });
    }
    Ok(DegenerationParams { d: k, m: 2 * (k - 1), lines: k - 1 })
}

pub fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, i| acc * i)
}

/// `d! (m-6)^2 / 4`, exact. Fails when the quotient is not an integer.
pub fn chern_c1sq(d: u32, m: u32) -> Result<BigUint> {
    let diff = (m as i64 - 6).unsigned_abs();
    let num = factorial(d) * BigUint::from(diff * diff);
    let four = BigUint::from(4u32);
    if !(&num % &four).is_zero() {
        return Err(Error::Malformed(format!("d!(m-6)^2/4 is not integral for d={d}, m={m}")));
    }
    Ok(num / four)
}

pub fn classify(c: &ChernData) -> Classification {
    if c.c1_squared.is_zero() {
        Classification::NotDetermined
    } else {
        Classification::GeneralType
    }
}

pub fn chern_data(k: u32) -> Result<ChernData> {
    let p = degeneration_params(k)?;
    let mut c =
        ChernData { d: p.d, m: p.m, c1_squared: chern_c1sq(p.d, p.m)?, classification: Classification::NotDetermined };
    c.classification = classify(&c);
    Ok(c)
}
