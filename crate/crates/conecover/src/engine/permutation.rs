use std::fmt;

/// Permutation of `0..d`, printed on points `1..=d`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Permutation { images: (0..d as u32).collect() }
    }

    /// Panics unless `images` is a bijection of `0..len`.
    pub fn from_images(images: Vec<u32>) -> Self {
        Self::try_from_images(images).expect("not a bijection")
    }

    pub fn try_from_images(images: Vec<u32>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let slot = seen.get_mut(x as usize)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(Permutation { images })
    }

    /// Transposition of the 1-based points `a` and `b`.
    pub fn transposition(d: usize, a: u32, b: u32) -> Self {
        let mut p = Self::identity(d);
        p.images.swap(a as usize - 1, b as usize - 1);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&x| next.apply(x)).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn first_moved(&self) -> Option<u32> {
        self.images.iter().enumerate().find(|&(i, &x)| i as u32 != x).map(|(i, _)| i as u32)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation on 1-based points, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.images.len()];
        let mut any = false;
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                first = false;
                write!(f, "{}", x + 1)?;
                x = self.images[x] as usize;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

struct Level {
    base: u32,
    // transversal[x] maps the base point to x
    transversal: Vec<Option<Permutation>>,
}

fn orbit_transversal(base: u32, gens: &[&Permutation], d: usize) -> Vec<Option<Permutation>> {
    let mut t: Vec<Option<Permutation>> = vec![None; d];
    t[base as usize] = Some(Permutation::identity(d));
    let mut queue = vec![base];
    while let Some(x) = queue.pop() {
        let u = t[x as usize].clone().unwrap();
        for g in gens {
            let y = g.apply(x);
            if t[y as usize].is_none() {
                t[y as usize] = Some(u.then(g));
                queue.push(y);
            }
        }
    }
    t
}

/// Strips `g` through the levels and returns the residue.
fn sift(levels: &[Level], mut g: Permutation) -> Permutation {
    for lvl in levels {
        let b = g.apply(lvl.base);
        match &lvl.transversal[b as usize] {
            Some(u) => g = g.then(&u.inverse()),
            None => return g,
        }
    }
    g
}

/// Base and strong generating set from the deterministic Schreier-Sims
/// algorithm. Meant for small degrees.
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(degree: usize, gens: &[Permutation]) -> Self {
        let mut strong: Vec<Permutation> = Vec::new();
        let mut bases: Vec<u32> = Vec::new();
        let add = |g: Permutation, strong: &mut Vec<Permutation>, bases: &mut Vec<u32>| {
            if bases.iter().all(|&b| g.apply(b) == b) {
                bases.push(g.first_moved().unwrap());
            }
            strong.push(g);
        };
        for g in gens {
            assert_eq!(g.degree(), degree);
            if !g.is_identity() {
                add(g.clone(), &mut strong, &mut bases);
            }
        }
        'outer: loop {
            let mut levels: Vec<Level> = Vec::new();
            for i in (0..bases.len()).rev() {
                let s_i: Vec<&Permutation> =
                    strong.iter().filter(|g| bases[..i].iter().all(|&b| g.apply(b) == b)).collect();
                let transversal = orbit_transversal(bases[i], &s_i, degree);
                let level = Level { base: bases[i], transversal };
                for (x, u) in level.transversal.iter().enumerate() {
                    let Some(u) = u else { continue };
                    for s in &s_i {
                        let y = s.apply(x as u32);
                        let v = level.transversal[y as usize].as_ref().unwrap();
                        let sg = u.then(s).then(&v.inverse());
                        let h = sift(&levels, sg);
                        if !h.is_identity() {
                            add(h, &mut strong, &mut bases);
                            continue 'outer;
                        }
                    }
                }
                // levels holds i+1.. in order
                levels.insert(0, level);
            }
            return StabilizerChain { degree, levels };
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.transversal.iter().flatten().count() as u128).product()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        sift(&self.levels, g.clone()).is_identity()
    }
}

pub fn group_order(degree: usize, gens: &[Permutation]) -> u128 {
    StabilizerChain::new(degree, gens).order()
}
