//! Half-twist braid words on the strands 1, 1', ..., n, n' and their action
//! on the free group.
//!
//! Letters act on the right: `action(c1 c2) = action(c2) ∘ action(c1)`, which
//! matches the conjugation convention `a^b = b^-1 a b`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::engine::Permutation;
use crate::error::{Error, Result};
use crate::free_group::{FreeAutomorphism, FreeWord, GeneratorSymbol};

/// A strand carries the same label as its generator.
pub type StrandLabel = GeneratorSymbol;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Below,
    Above,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Below => "below",
            Side::Above => "above",
        })
    }
}

/// Half-twist exchanging strands `a < b` along a path below or above the axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HalfTwistLetter {
    pub a: StrandLabel,
    pub b: StrandLabel,
    pub side: Side,
    pub sign: i8,
}

/// Adjacent generator `sigma_i^e` on positions `(i, i+1)`.
type Adjacent = (u32, i8);

impl HalfTwistLetter {
    pub fn inverse(self) -> Self {
        HalfTwistLetter { sign: -self.sign, ..self }
    }

    pub fn positions(self) -> (u32, u32) {
        (self.a.position(), self.b.position())
    }

    /// The band `beta` carrying strand `p` next to `q`: `sigma_{q-2}^e ... sigma_p^e`.
    ///
    /// Below the axis every crossing is negative. Above the axis every crossing
    /// is positive, except that an unprimed left end passes its own primed
    /// partner from below.
    fn band(self) -> Vec<Adjacent> {
        let (p, q) = self.positions();
        let mut beta = Vec::new();
        for r in (p..q.saturating_sub(1)).rev() {
            let e = match self.side {
                Side::Below => -1,
                Side::Above if r == p && p % 2 == 1 => -1,
                Side::Above => 1,
            };
            beta.push((r, e));
        }
        beta
    }

    /// `beta^-1 sigma_{q-1}^sign beta`
    fn adjacent_word(self) -> Vec<Adjacent> {
        let beta = self.band();
        let q = self.b.position();
        let mut out: Vec<Adjacent> = beta.iter().rev().map(|&(i, e)| (i, -e)).collect();
        out.push((q - 1, self.sign));
        out.extend(beta);
        out
    }
}

impl fmt::Display for HalfTwistLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z = match self.side {
            Side::Below => "Z",
            Side::Above => "Zbar",
        };
        write!(f, "{}({},{})", z, self.a, self.b)?;
        if self.sign < 0 {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// Applies `sigma_i^e` to a free word, in place of the old one.
fn apply_adjacent(w: &[i32], (i, e): Adjacent) -> Vec<i32> {
    let (a, b) = (i as i32, i as i32 + 1);
    let mut out: Vec<i32> = Vec::with_capacity(w.len() + 4);
    let mut push = |x: i32| {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    };
    for &x in w {
        let g = x.abs();
        let (img, n) = match (e > 0, g) {
            (true, g) if g == a => ([b, 0, 0], 1),
            (true, g) if g == b => ([b, a, -b], 3),
            (false, g) if g == b => ([a, 0, 0], 1),
            (false, g) if g == a => ([-a, b, a], 3),
            _ => ([g, 0, 0], 1),
        };
        let img = &img[..n];
        if x > 0 {
            img.iter().for_each(|&y| push(y));
        } else {
            img.iter().rev().for_each(|&y| push(-y));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    letters: Vec<HalfTwistLetter>,
    lines: u32,
}

/// Single-letter word `Z_{ab}` (or its barred version) with sign +1.
pub fn half_twist(a: StrandLabel, b: StrandLabel, side: Side, lines: u32) -> Result<BraidWord> {
    for s in [a, b] {
        if s.index > lines {
            return Err(Error::OutOfRange { label: s.to_string(), lines });
        }
    }
    if a == b {
        return Err(Error::SameStrand(a.to_string()));
    }
    let (a, b) = if a.position() < b.position() { (a, b) } else { (b, a) };
    Ok(BraidWord { letters: vec![HalfTwistLetter { a, b, side, sign: 1 }], lines })
}

/// `c^-1 x c`
pub fn conjugate(x: &BraidWord, c: &BraidWord) -> Result<BraidWord> {
    c.invert().multiply(x)?.multiply(c)
}

impl BraidWord {
    pub fn empty(lines: u32) -> Self {
        BraidWord { letters: Vec::new(), lines }
    }

    pub fn from_letters(letters: impl IntoIterator<Item = HalfTwistLetter>, lines: u32) -> Result<Self> {
        let mut w = BraidWord::empty(lines);
        for l in letters {
            if l.b.index > lines {
                return Err(Error::OutOfRange { label: l.b.to_string(), lines });
            }
            if l.a.position() >= l.b.position() {
                return Err(Error::Malformed(format!("letter {l} is not normalized")));
            }
            w.push(l);
        }
        Ok(w)
    }

    fn push(&mut self, l: HalfTwistLetter) {
        if self.letters.last() == Some(&l.inverse()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn letters(&self) -> &[HalfTwistLetter] {
        &self.letters
    }

    pub fn lines(&self) -> u32 {
        self.lines
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn multiply(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.lines != other.lines {
            return Err(Error::AmbientMismatch(self.lines, other.lines));
        }
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        Ok(w)
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord { letters: self.letters.iter().rev().map(|l| l.inverse()).collect(), lines: self.lines }
    }

    pub fn power(&self, p: i32) -> BraidWord {
        let base = if p < 0 { self.invert() } else { self.clone() };
        let mut w = BraidWord::empty(self.lines);
        for _ in 0..p.unsigned_abs() {
            for &l in &base.letters {
                w.push(l);
            }
        }
        w
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign as i64).sum()
    }

    fn adjacent(&self) -> impl Iterator<Item = Adjacent> + '_ {
        self.letters.iter().flat_map(|l| l.adjacent_word())
    }

    /// Image of one free word under the action of this braid.
    pub fn act_on(&self, w: &FreeWord) -> FreeWord {
        let mut cur = w.letters().to_vec();
        for s in self.adjacent() {
            cur = apply_adjacent(&cur, s);
        }
        FreeWord::from_letters(cur)
    }

    /// Action on the free group of rank 2n.
    pub fn action(&self) -> FreeAutomorphism {
        let rank = 2 * self.lines;
        FreeAutomorphism::from_images((1..=rank).map(|p| self.act_on(&FreeWord::from_position(p))).collect())
    }

    /// Product of the letters' transpositions, first letter applied first.
    pub fn underlying_permutation(&self) -> Permutation {
        let mut img: Vec<u32> = (0..2 * self.lines).collect();
        for l in &self.letters {
            let (p, q) = l.positions();
            for x in img.iter_mut() {
                if *x == p - 1 {
                    *x = q - 1;
                } else if *x == q - 1 {
                    *x = p - 1;
                }
            }
        }
        Permutation::from_images(img)
    }
}

/// Relator helper: image of `x_{q-1}` and `x_q` after the core band of
/// `core` followed by the conjugator `c`.
pub(crate) fn lasso_pair(core: HalfTwistLetter, c: &BraidWord) -> (FreeWord, FreeWord) {
    let q = core.b.position();
    let run = |start: u32| {
        let mut cur = vec![start as i32];
        for s in core.band().into_iter().chain(c.adjacent()) {
            cur = apply_adjacent(&cur, s);
        }
        FreeWord::from_letters(cur)
    };
    (run(q - 1), run(q))
}

impl fmt::Display for BraidWord {
    /// Runs of equal letters are grouped, e.g. `Z(3',4)^2 Z(3,4)^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let mut i = 0;
        let mut first = true;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == l {
                j += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let z = match l.side {
                Side::Below => "Z",
                Side::Above => "Zbar",
            };
            let e = (j - i) as i64 * l.sign as i64;
            write!(f, "{}({},{})", z, l.a, l.b)?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
            i = j;
        }
        Ok(())
    }
}
