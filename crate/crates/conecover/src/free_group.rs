//! Reduced words over the generators Γ1, Γ1', ..., Γn, Γn'.
//!
//! A generator is stored by its position: `j` sits at `2j-1` and `j'` at `2j`.
//! A letter is a nonzero `i32`, negative for the inverse.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GeneratorSymbol {
    pub index: u32,
    pub primed: bool,
}

impl GeneratorSymbol {
    pub fn new(index: u32, primed: bool) -> Self {
        assert!(index >= 1, "generator index starts at 1");
        GeneratorSymbol { index, primed }
    }

    pub fn unprimed(index: u32) -> Self {
        Self::new(index, false)
    }

    pub fn primed(index: u32) -> Self {
        Self::new(index, true)
    }

    pub fn position(self) -> u32 {
        2 * self.index - 1 + self.primed as u32
    }

    pub fn from_position(pos: u32) -> Self {
        assert!(pos >= 1);
        GeneratorSymbol { index: pos.div_ceil(2), primed: pos.is_multiple_of(2) }
    }

    /// All 2n generators in position order.
    pub fn all(lines: u32) -> Vec<GeneratorSymbol> {
        (1..=2 * lines).map(Self::from_position).collect()
    }
}

impl fmt::Display for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.primed {
            write!(f, "{}'", self.index)
        } else {
            write!(f, "{}", self.index)
        }
    }
}

impl FromStr for GeneratorSymbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (body, primed) = match s.strip_suffix('\'') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let index: u32 = body.parse().map_err(|_| Error::Parse(s.to_string()))?;
        if index == 0 {
            return Err(Error::Parse(s.to_string()));
        }
        Ok(GeneratorSymbol::new(index, primed))
    }
}

/// Freely reduced word. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    letters: Vec<i32>,
}

fn push_reduced(out: &mut Vec<i32>, x: i32) {
    if out.last() == Some(&-x) {
        out.pop();
    } else {
        out.push(x);
    }
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    /// Builds a word from signed positions, reducing as it goes.
    pub fn from_letters<I: IntoIterator<Item = i32>>(letters: I) -> Self {
        let mut out = Vec::new();
        for x in letters {
            assert!(x != 0, "letter 0 is not a generator");
            push_reduced(&mut out, x);
        }
        FreeWord { letters: out }
    }

    pub fn generator(g: GeneratorSymbol) -> Self {
        FreeWord { letters: vec![g.position() as i32] }
    }

    pub fn from_position(pos: u32) -> Self {
        FreeWord { letters: vec![pos as i32] }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<i32> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest position mentioned, 0 for the empty word.
    pub fn max_position(&self) -> u32 {
        self.letters.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0)
    }

    pub fn multiply(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.letters.clone();
        for &x in &other.letters {
            push_reduced(&mut out, x);
        }
        FreeWord { letters: out }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord { letters: self.letters.iter().rev().map(|x| -x).collect() }
    }

    pub fn pow(&self, p: i32) -> FreeWord {
        let base = if p < 0 { self.inverse() } else { self.clone() };
        let mut out = FreeWord::identity();
        for _ in 0..p.unsigned_abs() {
            out = out.multiply(&base);
        }
        out
    }

    /// `u v u^-1 v^-1`
    pub fn commutator(u: &FreeWord, v: &FreeWord) -> FreeWord {
        u.multiply(v).multiply(&u.inverse()).multiply(&v.inverse())
    }

    /// `u v u v^-1 u^-1 v^-1`
    pub fn triple(u: &FreeWord, v: &FreeWord) -> FreeWord {
        let (ui, vi) = (u.inverse(), v.inverse());
        u.multiply(v).multiply(u).multiply(&vi).multiply(&ui).multiply(&vi)
    }

    pub fn substitute(&self, phi: &FreeAutomorphism) -> FreeWord {
        let mut out = Vec::with_capacity(self.letters.len());
        for &x in &self.letters {
            let img = phi.image(x.unsigned_abs());
            if x > 0 {
                for &y in img.letters() {
                    push_reduced(&mut out, y);
                }
            } else {
                for &y in img.letters().iter().rev() {
                    push_reduced(&mut out, -y);
                }
            }
        }
        FreeWord { letters: out }
    }

    /// Shortest cyclic conjugate obtained by trimming `x ... x^-1` ends.
    pub fn cyclically_reduce(&self) -> FreeWord {
        let w = &self.letters;
        let (mut i, mut j) = (0, w.len());
        while j - i > 1 && w[i] == -w[j - 1] {
            i += 1;
            j -= 1;
        }
        FreeWord { letters: w[i..j].to_vec() }
    }

    /// Canonical representative of the class under cyclic rotation and inversion.
    pub fn cyclic_key(&self) -> Vec<i32> {
        let a = self.cyclically_reduce();
        let b = a.inverse();
        let mut best = a.letters.clone();
        for v in [&a.letters, &b.letters] {
            for r in 0..v.len() {
                let rot: Vec<i32> = v[r..].iter().chain(&v[..r]).copied().collect();
                if rot < best {
                    best = rot;
                }
            }
        }
        best
    }

    /// Equal as relators: same cyclic reduction up to rotation and inversion.
    pub fn cyclically_equal(&self, other: &FreeWord) -> bool {
        self.cyclic_key() == other.cyclic_key()
    }

    /// Image under Γj' -> Γj.
    pub fn identify_primes(&self) -> FreeWord {
        FreeWord::from_letters(self.letters.iter().map(|&x| {
            let p = x.unsigned_abs();
            let q = if p % 2 == 0 { p - 1 } else { p } as i32;
            if x > 0 {
                q
            } else {
                -q
            }
        }))
    }

    /// Exponent sum of each position `1..=rank`, indexed from 0.
    pub fn exponent_sums(&self, rank: u32) -> Vec<i64> {
        let mut v = vec![0i64; rank as usize];
        for &x in &self.letters {
            v[x.unsigned_abs() as usize - 1] += x.signum() as i64;
        }
        v
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (i, &x) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", GeneratorSymbol::from_position(x.unsigned_abs()))?;
            if x < 0 {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

impl FromStr for FreeWord {
    type Err = Error;

    /// Space separated tokens such as `4' 4 5^-1`; `e` or blank is the identity.
    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "e" {
                continue;
            }
            let (body, neg) = match tok.strip_suffix("^-1") {
                Some(b) => (b, true),
                None => (tok, false),
            };
            let p = body.parse::<GeneratorSymbol>()?.position() as i32;
            letters.push(if neg { -p } else { p });
        }
        Ok(FreeWord::from_letters(letters))
    }
}

/// Endomorphism of the free group given by generator images, indexed by position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeAutomorphism {
    images: Vec<FreeWord>,
}

impl FreeAutomorphism {
    pub fn identity(rank: u32) -> Self {
        FreeAutomorphism { images: (1..=rank).map(FreeWord::from_position).collect() }
    }

    pub fn from_images(images: Vec<FreeWord>) -> Self {
        FreeAutomorphism { images }
    }

    pub fn rank(&self) -> u32 {
        self.images.len() as u32
    }

    /// Image of the generator at `pos`; positions past the rank are fixed.
    pub fn image(&self, pos: u32) -> std::borrow::Cow<'_, FreeWord> {
        match self.images.get(pos as usize - 1) {
            Some(w) => std::borrow::Cow::Borrowed(w),
            None => std::borrow::Cow::Owned(FreeWord::from_position(pos)),
        }
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        w.substitute(self)
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &FreeAutomorphism) -> FreeAutomorphism {
        FreeAutomorphism { images: self.images.iter().map(|w| next.apply(w)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, w)| w.letters() == [i as i32 + 1])
    }

    /// Splits the image of `pos` as `w y w^-1` for a generator `y`.
    pub fn conjugate_form(&self, pos: u32) -> Option<(FreeWord, u32)> {
        let img = self.image(pos);
        let l = img.letters();
        if l.len().is_multiple_of(2) {
            return None;
        }
        let h = l.len() / 2;
        if l[h] < 0 {
            return None;
        }
        let w = FreeWord { letters: l[..h].to_vec() };
        if w.inverse().letters() != &l[h + 1..] {
            return None;
        }
        Some((w, l[h] as u32))
    }

    /// Permutation of positions read off the conjugate-of-generator images.
    pub fn induced_permutation(&self) -> Option<crate::engine::Permutation> {
        let mut img = Vec::with_capacity(self.images.len());
        for p in 1..=self.rank() {
            let (_, y) = self.conjugate_form(p)?;
            img.push(y - 1);
        }
        crate::engine::Permutation::try_from_images(img)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    #[test]
    fn positions() {
        assert_eq!(GeneratorSymbol::primed(3).position(), 6);
        assert_eq!(GeneratorSymbol::from_position(5), GeneratorSymbol::unprimed(3));
        assert_eq!("4'".parse::<GeneratorSymbol>().unwrap().to_string(), "4'");
        assert!("0".parse::<GeneratorSymbol>().is_err());
    }

    #[test]
    fn cancellation() {
        assert_eq!(w("2' 2 1'").multiply(&w("1'^-1")), w("2' 2"));
        let u = w("3 4^-1 1'");
        assert!(u.multiply(&u.inverse()).is_empty());
        assert_eq!(FreeWord::identity().multiply(&u), u);
    }

    #[test]
    fn display_roundtrip() {
        let u = w("4 5 4 5^-1 4^-1 5^-1");
        assert_eq!(u.to_string(), "4 5 4 5^-1 4^-1 5^-1");
        assert_eq!(FreeWord::identity().to_string(), "e");
    }

    #[test]
    fn substitute_table_entry() {
        let mut imgs: Vec<FreeWord> = (1..=10).map(FreeWord::from_position).collect();
        imgs[4] = w("4 3 4^-1");
        let phi = FreeAutomorphism::from_images(imgs);
        assert_eq!(w("3").substitute(&phi), w("4 3 4^-1"));
        assert!(w("3 3^-1").substitute(&phi).is_empty());
    }

    #[test]
    fn cyclic_reduction() {
        assert_eq!(w("1 2 1^-1").cyclically_reduce(), w("2"));
        assert!(FreeWord::identity().cyclically_reduce().is_empty());
        let t = FreeWord::triple(&w("4"), &w("5"));
        let g = w("4");
        let conj = g.multiply(&t).multiply(&g.inverse());
        assert!(conj.cyclically_equal(&t));
        assert!(t.inverse().cyclically_equal(&t));
        assert!(!t.cyclically_equal(&w("4 5")));
    }

    #[test]
    fn conjugate_form_detects_shape() {
        let mut imgs: Vec<FreeWord> = (1..=4).map(FreeWord::from_position).collect();
        imgs[0] = w("2 1' 2^-1");
        let phi = FreeAutomorphism::from_images(imgs);
        assert_eq!(phi.conjugate_form(1), Some((w("2"), 2)));
        assert_eq!(phi.conjugate_form(3), Some((FreeWord::identity(), 3)));
    }
}
