//! Tietze simplification.
//!
//! Every step either eliminates a generator through a relator of length two,
//! or replaces one relator by a word equal to it modulo the other relators.
//! Generators with a square relator are treated as involutions: their inverse
//! letters are rewritten positively and `x x` cancels in the other relators.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use log::debug;

use crate::free_group::{FreeWord, GeneratorSymbol};
use crate::van_kampen::{GroupPresentation, Stage};

/// Relators up to this length feed the breadth-first shortening search.
const BFS_SOURCE_MAX: usize = 8;
/// Relators up to this length feed the greedy subword rewriting.
const GREEDY_SOURCE_MAX: usize = 24;
/// The search only targets relators longer than this.
const BFS_TARGET_MIN: usize = 6;

#[derive(Clone, Copy, Debug)]
pub struct TietzeOptions {
    /// Cap on states visited per breadth-first search; 0 disables the search.
    pub bfs_states: usize,
}

impl Default for TietzeOptions {
    fn default() -> Self {
        TietzeOptions { bfs_states: 20_000 }
    }
}

struct Ctx {
    involution: Vec<bool>,
}

impl Ctx {
    fn is_inv(&self, x: i32) -> bool {
        self.involution.get(x.unsigned_abs() as usize).copied().unwrap_or(false)
    }

    fn normal(&self, x: i32) -> i32 {
        if self.is_inv(x) {
            x.abs()
        } else {
            x
        }
    }

    fn cancels(&self, a: i32, b: i32) -> bool {
        a == -b || (a == b && self.is_inv(a))
    }

    fn reduce(&self, w: &[i32]) -> Vec<i32> {
        let mut out: Vec<i32> = Vec::with_capacity(w.len());
        for &x in w {
            let x = self.normal(x);
            match out.last() {
                Some(&y) if self.cancels(x, y) => {
                    out.pop();
                }
                _ => out.push(x),
            }
        }
        let (mut i, mut j) = (0, out.len());
        while j - i > 1 && self.cancels(out[i], out[j - 1]) {
            i += 1;
            j -= 1;
        }
        out[i..j].to_vec()
    }

    fn inverse(&self, w: &[i32]) -> Vec<i32> {
        w.iter().rev().map(|&x| self.normal(-x)).collect()
    }

    /// Least rotation of the word or its inverse.
    fn key(&self, w: &[i32]) -> Vec<i32> {
        let inv = self.inverse(w);
        let mut best = w.to_vec();
        for v in [w, &inv[..]] {
            for r in 0..v.len() {
                if v[r..].iter().chain(&v[..r]).lt(best.iter()) {
                    best = v[r..].iter().chain(&v[..r]).copied().collect();
                }
            }
        }
        best
    }
}

struct Rules {
    /// lhs -> (rhs, source relator), shortest rhs first
    map: HashMap<Vec<i32>, Vec<(Vec<i32>, usize)>>,
    lengths: Vec<usize>,
}

impl Rules {
    /// `l -> r` for every way of reading a relator cyclically as `l r^-1`
    /// with `|l| >= |r|` (strictly longer when `strict`).
    fn build(ctx: &Ctx, rels: &[Vec<i32>], max_len: usize, strict: bool) -> Rules {
        let mut map: HashMap<Vec<i32>, Vec<(Vec<i32>, usize)>> = HashMap::new();
        for (idx, r) in rels.iter().enumerate() {
            let m = r.len();
            if m > max_len || m < 2 {
                continue;
            }
            let inv = ctx.inverse(r);
            for v in [r, &inv] {
                for s in 0..m {
                    let rot: Vec<i32> = v[s..].iter().chain(&v[..s]).copied().collect();
                    let lo = if strict { m / 2 + 1 } else { m.div_ceil(2) };
                    for h in lo..=m {
                        let lhs = rot[..h].to_vec();
                        let rhs = ctx.inverse(&rot[h..]);
                        let e = map.entry(lhs).or_default();
                        if !e.iter().any(|(x, i)| *x == rhs && *i == idx) {
                            e.push((rhs, idx));
                        }
                    }
                }
            }
        }
        for v in map.values_mut() {
            v.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then(a.0.cmp(&b.0)).then(a.1.cmp(&b.1)));
        }
        let mut lengths: Vec<usize> = map.keys().map(|k| k.len()).collect::<BTreeSet<_>>().into_iter().collect();
        lengths.reverse();
        Rules { map, lengths }
    }

    /// Right-hand sides for `lhs` from sources other than `exclude` and not
    /// marked in `stale`.
    fn lookup<'a>(&'a self, lhs: &[i32], exclude: usize, stale: &'a [bool]) -> impl Iterator<Item = &'a Vec<i32>> {
        self.map
            .get(lhs)
            .into_iter()
            .flatten()
            .filter(move |(_, i)| *i != exclude && !stale.get(*i).copied().unwrap_or(false))
            .map(|(r, _)| r)
    }
}

fn cyclic_sub(w: &[i32], start: usize, len: usize) -> Vec<i32> {
    (0..len).map(|t| w[(start + t) % w.len()]).collect()
}

/// Replaces the cyclic subword `w[start..start+len]` by `rhs`.
fn splice(w: &[i32], start: usize, len: usize, rhs: &[i32]) -> Vec<i32> {
    let mut out = rhs.to_vec();
    out.extend((len..w.len()).map(|t| w[(start + t) % w.len()]));
    out
}

/// One strictly shortening rewrite of `w`, if any.
fn shorten_once(ctx: &Ctx, rules: &Rules, w: &[i32], me: usize) -> Option<Vec<i32>> {
    for &h in &rules.lengths {
        if h > w.len() {
            continue;
        }
        for s in 0..w.len() {
            let lhs = cyclic_sub(w, s, h);
            if let Some(rhs) = rules.lookup(&lhs, me, &[]).next() {
                if rhs.len() < h {
                    let out = ctx.reduce(&splice(w, s, h, rhs));
                    if out.len() < w.len() {
                        return Some(out);
                    }
                }
            }
        }
    }
    None
}

/// Breadth-first search over equal-or-shorter rewrites for a strictly
/// shorter relator.
fn bfs_shorten(ctx: &Ctx, rules: &Rules, w: &[i32], me: usize, stale: &[bool], cap: usize) -> Option<Vec<i32>> {
    let start = ctx.key(w);
    let mut seen: HashSet<Vec<i32>> = HashSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        for &h in &rules.lengths {
            if h > cur.len() {
                continue;
            }
            for s in 0..cur.len() {
                let lhs = cyclic_sub(&cur, s, h);
                for rhs in rules.lookup(&lhs, me, stale) {
                    if rhs.len() > h {
                        continue;
                    }
                    let next = ctx.reduce(&splice(&cur, s, h, rhs));
                    if next.len() < w.len() {
                        return Some(next);
                    }
                    let k = ctx.key(&next);
                    if seen.len() < cap && seen.insert(k.clone()) {
                        queue.push_back(k);
                    }
                }
            }
        }
    }
    None
}

/// Picks the elimination: lexicographically smallest length-2 relator on two
/// distinct generators, dropping its primed (else larger) generator.
fn pick_elimination(ctx: &Ctx, rels: &[Vec<i32>]) -> Option<(u32, Vec<i32>)> {
    // ordered by the generator positions involved, then by the word
    let mut cands: Vec<([u32; 2], Vec<i32>)> = rels
        .iter()
        .filter(|r| r.len() == 2 && r[0].abs() != r[1].abs())
        .map(|r| {
            let (x, y) = (r[0].unsigned_abs(), r[1].unsigned_abs());
            ([x.min(y), x.max(y)], ctx.key(r))
        })
        .collect();
    cands.sort();
    let (_, r) = cands.into_iter().next()?;
    let (a, b) = (r[0], r[1]);
    let rank = |x: i32| {
        let g = GeneratorSymbol::from_position(x.unsigned_abs());
        (g.primed, g.position())
    };
    // drop letter `b`: b = a^-1
    let (keep, drop) = if rank(b) > rank(a) { (a, b) } else { (b, a) };
    let g = drop.unsigned_abs();
    let image = if drop > 0 { vec![-keep] } else { vec![keep] };
    Some((g, image))
}

fn substitute(w: &[i32], g: u32, image: &[i32]) -> Vec<i32> {
    let mut out = Vec::with_capacity(w.len());
    for &x in w {
        if x.unsigned_abs() == g {
            if x > 0 {
                out.extend_from_slice(image);
            } else {
                out.extend(image.iter().rev().map(|y| -y));
            }
        } else {
            out.push(x);
        }
    }
    out
}

fn dedupe(ctx: &Ctx, rels: Vec<Vec<i32>>) -> Vec<Vec<i32>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for r in rels {
        let r = ctx.reduce(&r);
        if r.is_empty() {
            continue;
        }
        if seen.insert(ctx.key(&r)) {
            out.push(r);
        }
    }
    out
}

pub fn tietze_simplify(p: &GroupPresentation) -> GroupPresentation {
    tietze_simplify_with(p, TietzeOptions::default())
}

pub fn tietze_simplify_with(p: &GroupPresentation, opts: TietzeOptions) -> GroupPresentation {
    let max_pos = p.generators.iter().map(|g| g.position()).max().unwrap_or(0) as usize;
    let mut gens: BTreeSet<u32> = p.generators.iter().map(|g| g.position()).collect();
    let mut ctx = Ctx { involution: vec![false; max_pos + 1] };
    // relators other than the squares of involutions
    let mut rels: Vec<Vec<i32>> = dedupe(&ctx, p.relators.iter().map(|r| r.letters().to_vec()).collect());

    loop {
        let before: (usize, usize, usize) = (gens.len(), rels.len(), rels.iter().map(|r| r.len()).sum());

        while let Some((g, image)) = pick_elimination(&ctx, &rels) {
            debug!("eliminate {} -> {:?}", GeneratorSymbol::from_position(g), image);
            if ctx.involution[g as usize] {
                ctx.involution[image[0].unsigned_abs() as usize] = true;
            }
            rels = dedupe(&ctx, rels.iter().map(|r| substitute(r, g, &image)).collect());
            gens.remove(&g);
        }

        // squares become involution flags
        let mut changed_inv = false;
        for r in &rels {
            if r.len() == 2 && r[0] == r[1] && !ctx.is_inv(r[0]) {
                ctx.involution[r[0].unsigned_abs() as usize] = true;
                changed_inv = true;
            }
        }
        if changed_inv {
            rels.retain(|r| !(r.len() == 2 && r[0] == r[1]));
            rels = dedupe(&ctx, rels);
        }

        // greedy shortening until stable
        loop {
            let rules = Rules::build(&ctx, &rels, GREEDY_SOURCE_MAX, true);
            let mut changed = false;
            let mut order: Vec<usize> = (0..rels.len()).collect();
            order.sort_by_key(|&i| std::cmp::Reverse(rels[i].len()));
            for i in order {
                if let Some(s) = shorten_once(&ctx, &rules, &rels[i], i) {
                    rels[i] = s;
                    changed = true;
                    break;
                }
            }
            rels = dedupe(&ctx, rels);
            if !changed {
                break;
            }
        }

        if opts.bfs_states > 0 {
            let rules = Rules::build(&ctx, &rels, BFS_SOURCE_MAX, false);
            let mut order: Vec<usize> = (0..rels.len()).filter(|&i| rels[i].len() > BFS_TARGET_MIN).collect();
            order.sort_by_key(|&i| std::cmp::Reverse(rels[i].len()));
            // a relator changed in this pass no longer backs its old rules
            let mut stale = vec![false; rels.len()];
            for i in order {
                if let Some(s) = bfs_shorten(&ctx, &rules, &rels[i], i, &stale, opts.bfs_states) {
                    debug!("search shortened a relator from {} to {}", rels[i].len(), s.len());
                    rels[i] = s;
                    stale[i] = true;
                }
            }
            rels = dedupe(&ctx, rels);
        }

        let after = (gens.len(), rels.len(), rels.iter().map(|r| r.len()).sum());
        if after == before && !changed_inv {
            break;
        }
    }

    let mut out: Vec<Vec<i32>> = rels.iter().map(|r| ctx.key(r)).collect();
    for &g in &gens {
        if ctx.involution[g as usize] {
            out.push(vec![g as i32, g as i32]);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    let mut q = GroupPresentation {
        generators: gens.iter().map(|&g| GeneratorSymbol::from_position(g)).collect(),
        relators: Vec::new(),
        tags: Vec::new(),
        stage: Stage::Simplified,
    };
    for r in out {
        q.push(FreeWord::from_letters(r), "simplified");
    }
    q
}
