//! Presentations of G = π1(CP² - S) and of G1 = G / <Γ², Γ'²> read off a
//! braid monodromy factorization.

use std::fmt;
use std::str::FromStr;

use log::debug;
use serde::{Deserialize, Serialize};

use crate::braid::lasso_pair;
use crate::error::{Error, Result};
use crate::free_group::{FreeWord, GeneratorSymbol};
use crate::monodromy::{Factorization, MonodromyFactor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Stage {
    G,
    G1,
    Simplified,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::G => "G",
            Stage::G1 => "G1",
            Stage::Simplified => "simplified",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: Vec<GeneratorSymbol>,
    pub relators: Vec<FreeWord>,
    /// Provenance per relator.
    pub tags: Vec<String>,
    pub stage: Stage,
}

#[derive(Serialize, Deserialize)]
struct JsonRelator {
    tag: String,
    word: String,
}

#[derive(Serialize, Deserialize)]
struct JsonPresentation {
    stage: Stage,
    generators: Vec<String>,
    relators: Vec<JsonRelator>,
}

impl GroupPresentation {
    /// Presentation on the 2n generators; empty relators are dropped and the
    /// rest cyclically reduced.
    pub fn new(lines: u32, relators: impl IntoIterator<Item = FreeWord>, stage: Stage) -> Self {
        let mut p = GroupPresentation {
            generators: GeneratorSymbol::all(lines),
            relators: Vec::new(),
            tags: Vec::new(),
            stage,
        };
        for r in relators {
            p.push(r, "input");
        }
        p
    }

    /// Returns false when the relator was trivial and dropped.
    pub fn push(&mut self, r: FreeWord, tag: &str) -> bool {
        let r = r.cyclically_reduce();
        if r.is_empty() {
            return false;
        }
        self.relators.push(r);
        self.tags.push(tag.to_string());
        true
    }

    pub fn lines(&self) -> u32 {
        self.generators.iter().map(|g| g.index).max().unwrap_or(0)
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from("gens:");
        for g in &self.generators {
            s.push_str(&format!(" {g}"));
        }
        s.push('\n');
        for r in &self.relators {
            s.push_str(&r.to_string());
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> String {
        let j = JsonPresentation {
            stage: self.stage,
            generators: self.generators.iter().map(|g| g.to_string()).collect(),
            relators: self
                .relators
                .iter()
                .zip(&self.tags)
                .map(|(r, t)| JsonRelator { tag: t.clone(), word: r.to_string() })
                .collect(),
        };
        serde_json::to_string_pretty(&j).unwrap()
    }

    /// Parses the text format produced by [`to_text`](Self::to_text).
    pub fn from_text(text: &str, stage: Stage) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let head = lines.next().ok_or_else(|| Error::Parse("missing gens line".into()))?;
        let gens = head.strip_prefix("gens:").ok_or_else(|| Error::Parse(head.to_string()))?;
        let generators = gens.split_whitespace().map(GeneratorSymbol::from_str).collect::<Result<Vec<_>>>()?;
        let mut p = GroupPresentation { generators, relators: Vec::new(), tags: Vec::new(), stage };
        for l in lines {
            let r: FreeWord = l.parse()?;
            for &x in r.letters() {
                let g = GeneratorSymbol::from_position(x.unsigned_abs());
                if !p.generators.contains(&g) {
                    return Err(Error::Parse(format!("{g} not among the generators")));
                }
            }
            p.push(r, "input");
        }
        Ok(p)
    }
}

/// Relator of one atomic factor; empty when it is trivial in the free group.
pub fn relators_of_factor(f: &MonodromyFactor) -> Vec<FreeWord> {
    let (a, b) = lasso_pair(f.core(), &f.conjugator);
    let r = match f.power {
        1 => a.multiply(&b.inverse()),
        2 => FreeWord::commutator(&a, &b),
        _ => FreeWord::triple(&a, &b),
    };
    let r = r.cyclically_reduce();
    if r.is_empty() {
        vec![]
    } else {
        vec![r]
    }
}

/// `Γn' Γn ... Γ1' Γ1`
pub fn projective_relator(n: u32) -> FreeWord {
    FreeWord::from_letters(
        (1..=n).rev().flat_map(|j| {
            [GeneratorSymbol::primed(j).position() as i32, GeneratorSymbol::unprimed(j).position() as i32]
        }),
    )
}

pub fn presentation_g(f: &Factorization) -> GroupPresentation {
    let mut p = GroupPresentation {
        generators: GeneratorSymbol::all(f.lines),
        relators: Vec::new(),
        tags: Vec::new(),
        stage: Stage::G,
    };
    let mut dropped = 0;
    for (factor, tag) in f.iter() {
        let rs = relators_of_factor(factor);
        if rs.is_empty() {
            dropped += 1;
        }
        for r in rs {
            if !p.push(r, tag) {
                dropped += 1;
            }
        }
    }
    p.push(projective_relator(f.lines), "projective");
    if dropped > 0 {
        debug!("dropped {dropped} trivial relators");
    }
    p
}

pub fn presentation_g1(p: &GroupPresentation) -> Result<GroupPresentation> {
    if p.stage != Stage::G {
        return Err(Error::WrongStage { found: p.stage.to_string(), expected: Stage::G.to_string() });
    }
    let mut q = p.clone();
    for g in &p.generators {
        let x = FreeWord::generator(*g);
        q.push(x.multiply(&x), "square");
    }
    q.stage = Stage::G1;
    Ok(q)
}
