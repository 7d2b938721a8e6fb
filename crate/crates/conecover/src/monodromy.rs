//! Braid monodromy factorization of the branch curve for the cone over the
//! stick curve with k lines in a chain.
//!
//! `B_3` is the base case, `B_k = M_k · (B_{k-1})^{Z^2_{(k-1)(k-1)',k}}`, and
//! the full factorization prepends one branch factor `Z_{jj'}` per line.

use std::fmt;

use crate::braid::{half_twist, BraidWord, HalfTwistLetter, Side, StrandLabel};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonodromyFactor {
    pub core_a: StrandLabel,
    pub core_b: StrandLabel,
    pub side: Side,
    pub power: u8,
    pub conjugator: BraidWord,
}

impl MonodromyFactor {
    pub fn new(a: StrandLabel, b: StrandLabel, side: Side, power: u8, lines: u32) -> Result<Self> {
        if !(1..=3).contains(&power) {
            return Err(Error::Malformed(format!("power {power}")));
        }
        let w = half_twist(a, b, side, lines)?;
        let l = w.letters()[0];
        Ok(MonodromyFactor { core_a: l.a, core_b: l.b, side, power, conjugator: BraidWord::empty(lines) })
    }

    pub fn core(&self) -> HalfTwistLetter {
        HalfTwistLetter { a: self.core_a, b: self.core_b, side: self.side, sign: 1 }
    }

    /// Post-multiplies the conjugator, i.e. conjugates the whole factor by `c`.
    pub fn conjugated_by(mut self, c: &BraidWord) -> Result<Self> {
        self.conjugator = self.conjugator.multiply(c)?;
        Ok(self)
    }

    /// The braid `(Z^power)^conjugator` as a flat word.
    pub fn braid(&self) -> BraidWord {
        let core = BraidWord::from_letters([self.core()], self.conjugator.lines()).unwrap();
        crate::braid::conjugate(&core.power(self.power as i32), &self.conjugator).unwrap()
    }
}

impl fmt::Display for MonodromyFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z({},{}) side={} pow={} conj={}", self.core_a, self.core_b, self.side, self.power, self.conjugator)
    }
}

/// Compound braids of the regeneration rules, before expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Compound {
    /// `Z^2_{i, jj'}`: a single strand around a pair.
    NodePair { point: StrandLabel, pair: u32, side: Side },
    /// `Z^2_{ii', jj'}`
    NodeQuad { left: u32, right: u32 },
    /// `Z^3_{i, jj'}`
    Cusp { point: StrandLabel, pair: u32 },
}

impl Compound {
    pub fn name(&self) -> &'static str {
        match self {
            Compound::NodePair { side: Side::Below, .. } => "node",
            Compound::NodePair { side: Side::Above, .. } => "node-above",
            Compound::NodeQuad { .. } => "quad",
            Compound::Cusp { .. } => "cusp",
        }
    }
}

fn pair_strands(j: u32) -> (StrandLabel, StrandLabel) {
    (StrandLabel::unprimed(j), StrandLabel::primed(j))
}

fn check_pair(point: StrandLabel, j: u32, lines: u32) -> Result<()> {
    if point.index == j {
        return Err(Error::Malformed(format!("{point} belongs to the pair {j}{j}'")));
    }
    if j == 0 || j > lines || point.index > lines {
        return Err(Error::OutOfRange { label: format!("{point}; {j}{j}'"), lines });
    }
    Ok(())
}

/// Atomic factors of a compound, all with empty conjugator.
pub fn expand_compound(c: Compound, lines: u32) -> Result<Vec<MonodromyFactor>> {
    match c {
        Compound::NodePair { point, pair, side } => {
            check_pair(point, pair, lines)?;
            let (u, p) = pair_strands(pair);
            Ok(vec![MonodromyFactor::new(p, point, side, 2, lines)?, MonodromyFactor::new(u, point, side, 2, lines)?])
        }
        Compound::NodeQuad { left, right } => {
            if left == right {
                return Err(Error::Malformed(format!("quad on {left}{left}' twice")));
            }
            let (i, ip) = pair_strands(left);
            let (j, jp) = pair_strands(right);
            [(ip, jp), (i, jp), (ip, j), (i, j)]
                .into_iter()
                .map(|(a, b)| MonodromyFactor::new(a, b, Side::Below, 2, lines))
                .collect()
        }
        Compound::Cusp { point, pair } => {
            check_pair(point, pair, lines)?;
            let (u, p) = pair_strands(pair);
            let z = half_twist(u, p, Side::Below, lines)?;
            [BraidWord::empty(lines), z.clone(), z.invert()]
                .iter()
                .map(|c| MonodromyFactor::new(u, point, Side::Below, 3, lines)?.conjugated_by(c))
                .collect()
        }
    }
}

/// The compound `Z^2_{i, jj'}` as a braid word, primed strand first.
pub fn pair_twist(point: StrandLabel, pair: u32, lines: u32) -> Result<BraidWord> {
    check_pair(point, pair, lines)?;
    let (u, p) = pair_strands(pair);
    half_twist(p, point, Side::Below, lines)?.power(2).multiply(&half_twist(u, point, Side::Below, lines)?.power(2))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factorization {
    pub factors: Vec<MonodromyFactor>,
    /// Provenance per factor, e.g. `M5/cusp` or `vertex/branch`.
    pub tags: Vec<String>,
    pub lines: u32,
}

impl Factorization {
    pub fn new(lines: u32) -> Self {
        Factorization { factors: Vec::new(), tags: Vec::new(), lines }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    fn push_compound(&mut self, source: &str, c: Compound, conj: &BraidWord) -> Result<()> {
        for f in expand_compound(c, self.lines)? {
            self.factors.push(f.conjugated_by(conj)?);
            self.tags.push(format!("{source}/{}", c.name()));
        }
        Ok(())
    }

    fn push_branch(&mut self, source: &str, j: u32, conj: &BraidWord) -> Result<()> {
        let (u, p) = pair_strands(j);
        self.factors.push(MonodromyFactor::new(u, p, Side::Below, 1, self.lines)?.conjugated_by(conj)?);
        self.tags.push(format!("{source}/branch"));
        Ok(())
    }

    fn extend(&mut self, other: Factorization) {
        self.factors.extend(other.factors);
        self.tags.extend(other.tags);
    }

    fn conjugate_all(mut self, c: &BraidWord) -> Result<Self> {
        for f in self.factors.iter_mut() {
            f.conjugator = f.conjugator.multiply(c)?;
        }
        Ok(self)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MonodromyFactor, &str)> {
        self.factors.iter().zip(self.tags.iter().map(|s| s.as_str()))
    }

    /// One factor per line: `[tag] Z(a,b) side=.. pow=.. conj=..`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (f, tag) in self.iter() {
            s.push_str(&format!("[{tag}] {f}\n"));
        }
        s
    }
}

pub fn exponent_sum(f: &Factorization) -> u64 {
    f.factors.iter().map(|x| x.power as u64).sum()
}

fn m_on(k: u32, lines: u32) -> Result<Factorization> {
    if k < 2 {
        return Err(Error::KTooSmall { what: "M_k", k, min: 2 });
    }
    if lines < k {
        return Err(Error::OutOfRange { label: format!("M_{k}"), lines });
    }
    let src = format!("M{k}");
    let pt = StrandLabel::unprimed(k);
    let empty = BraidWord::empty(lines);
    let mut f = Factorization::new(lines);
    f.push_compound(&src, Compound::Cusp { point: pt, pair: k - 1 }, &empty)?;
    for j in 1..k.saturating_sub(1) {
        let mut conj = BraidWord::empty(lines);
        for t in j + 1..k - 1 {
            conj = conj.multiply(&pair_twist(pt, t, lines)?.invert())?;
        }
        f.push_compound(&src, Compound::NodePair { point: pt, pair: j, side: Side::Below }, &conj)?;
    }
    for j in 1..k.saturating_sub(1) {
        let c = Compound::NodePair { point: StrandLabel::primed(k), pair: j, side: Side::Above };
        f.push_compound(&src, c, &empty)?;
    }
    f.push_branch(&src, k, &pair_twist(pt, k - 1, lines)?)?;
    Ok(f)
}

fn b3_on(lines: u32) -> Result<Factorization> {
    let src = "B3";
    let mut f = Factorization::new(lines);
    let empty = BraidWord::empty(lines);
    let p1 = StrandLabel::primed(1);
    let z1p = pair_twist(p1, 2, lines)?;
    let z3 = pair_twist(StrandLabel::unprimed(3), 2, lines)?;
    f.push_compound(src, Compound::Cusp { point: p1, pair: 2 }, &empty)?;
    f.push_branch(src, 1, &z1p)?;
    f.push_compound(src, Compound::Cusp { point: StrandLabel::unprimed(3), pair: 2 }, &z1p)?;
    f.push_branch(src, 3, &z3.multiply(&z1p)?)?;
    f.push_compound(src, Compound::NodeQuad { left: 1, right: 3 }, &empty)?;
    Ok(f)
}

fn b_on(k: u32, lines: u32) -> Result<Factorization> {
    if k == 3 {
        return b3_on(lines);
    }
    let mut f = m_on(k, lines)?;
    let outer = pair_twist(StrandLabel::unprimed(k), k - 1, lines)?;
    f.extend(b_on(k - 1, lines)?.conjugate_all(&outer)?);
    Ok(f)
}

/// `M_k` on k lines.
pub fn build_m(k: u32) -> Result<Factorization> {
    m_on(k, k)
}

pub fn build_b3() -> Result<Factorization> {
    b3_on(3)
}

/// `B_k` on k lines.
pub fn build_b(k: u32) -> Result<Factorization> {
    if k < 3 {
        return Err(Error::KTooSmall { what: "B_k", k, min: 3 });
    }
    b_on(k, k)
}

/// Vertex branch factors followed by `B_{k-1}`; k planes, k-1 lines.
pub fn full_factorization(k: u32) -> Result<Factorization> {
    if k < 4 {
        return Err(Error::KTooSmall { what: "full factorization", k, min: 4 });
    }
    let n = k - 1;
    let mut f = Factorization::new(n);
    let empty = BraidWord::empty(n);
    for j in 1..=n {
        f.push_branch("vertex", j, &empty)?;
    }
    f.extend(build_b(n)?);
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> StrandLabel {
        x.parse().unwrap()
    }

    #[test]
    fn compound_shapes() {
        let np = expand_compound(Compound::NodePair { point: s("5"), pair: 4, side: Side::Below }, 5).unwrap();
        assert_eq!(np.len(), 2);
        assert!(np.iter().all(|f| f.power == 2));
        let q = expand_compound(Compound::NodeQuad { left: 1, right: 3 }, 3).unwrap();
        let cores: Vec<String> = q.iter().map(|f| format!("{}{}", f.core_a, f.core_b)).collect();
        assert_eq!(cores, ["1'3'", "13'", "1'3", "13"]);
        let c = expand_compound(Compound::Cusp { point: s("5"), pair: 4 }, 5).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c.iter().map(|f| f.power as u32).sum::<u32>(), 9);
        assert_eq!(c[1].conjugator.to_string(), "Z(4,4')");
        assert_eq!(c[2].conjugator.to_string(), "Z(4,4')^-1");
        assert!(expand_compound(Compound::Cusp { point: s("4'"), pair: 4 }, 5).is_err());
        assert!(expand_compound(Compound::NodeQuad { left: 2, right: 2 }, 5).is_err());
    }

    #[test]
    fn m2_is_cusp_and_branch() {
        let m = build_m(2).unwrap();
        assert_eq!(m.len(), 4);
        assert_eq!(exponent_sum(&m), 10);
        assert!(build_m(1).is_err());
    }

    #[test]
    fn small_exponent_sums() {
        assert_eq!(exponent_sum(&Factorization::new(3)), 0);
        assert_eq!(exponent_sum(&build_m(4).unwrap()), 26);
        assert_eq!(exponent_sum(&build_m(5).unwrap()), 34);
        assert_eq!(build_b(3).unwrap(), build_b3().unwrap());
    }

    #[test]
    fn pair_twist_conjugation_order() {
        let w = pair_twist(s("4"), 3, 4).unwrap();
        assert_eq!(w.to_string(), "Z(3',4)^2 Z(3,4)^2");
        let w = pair_twist(s("1'"), 2, 3).unwrap();
        assert_eq!(w.to_string(), "Z(1',2')^2 Z(1',2)^2");
    }

    #[test]
    fn text_export_line() {
        let f = full_factorization(4).unwrap();
        let text = f.to_text();
        assert_eq!(text.lines().next().unwrap(), "[vertex/branch] Z(1,1') side=below pow=1 conj=e");
        assert_eq!(text.lines().count(), 15);
    }
}
