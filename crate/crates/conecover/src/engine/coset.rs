//! Todd-Coxeter enumeration of the cosets of the trivial subgroup.
//!
//! Two strategies share one table: relator scanning (HLT) with lookahead and
//! compaction when the table fills, and the Felsch strategy which defines the
//! first free entry and chases deductions through every relator conjugate.

use std::fmt;

use log::{debug, trace};
use serde::{Deserialize, Serialize};

use crate::van_kampen::GroupPresentation;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    #[default]
    Hlt,
    Felsch,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Hlt => "hlt",
            Strategy::Felsch => "felsch",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Enumerated {
    pub order: u64,
    /// Largest number of coset slots in use at any time.
    pub max_cosets_used: usize,
    pub defined: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("coset table overflow: more than {limit} cosets needed")]
pub struct Overflow {
    pub limit: usize,
    pub max_cosets_used: usize,
}

const NONE: u32 = 0;

struct Table {
    ncols: usize,
    cap: usize,
    /// rows 1..=n; row 0 is unused so that 0 can mean "undefined"
    rows: Vec<u32>,
    parent: Vec<u32>,
    n: usize,
    live: usize,
    peak: usize,
    defined: u64,
    events: u64,
    queue: Vec<u32>,
    deductions: Vec<(u32, u32)>,
    track_deductions: bool,
}

impl Table {
    fn new(ncols: usize, cap: usize) -> Self {
        let start = 1024.min(cap) + 1;
        let mut t = Table {
            ncols,
            cap,
            rows: vec![NONE; start * ncols],
            parent: vec![0; start],
            n: 1,
            live: 1,
            peak: 1,
            defined: 1,
            events: 0,
            queue: Vec::new(),
            deductions: Vec::new(),
            track_deductions: false,
        };
        t.parent[1] = 1;
        t
    }

    #[inline]
    fn get(&self, c: u32, x: u32) -> u32 {
        self.rows[c as usize * self.ncols + x as usize]
    }

    #[inline]
    fn set(&mut self, c: u32, x: u32, v: u32) {
        self.rows[c as usize * self.ncols + x as usize] = v;
    }

    #[inline]
    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn link(&mut self, c: u32, x: u32, d: u32) {
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        self.events += 1;
        if self.track_deductions {
            self.deductions.push((c, x));
        }
    }

    /// New coset `c^x`; `None` when the table is full.
    fn define(&mut self, c: u32, x: u32) -> Option<u32> {
        if self.n >= self.cap {
            return None;
        }
        self.n += 1;
        let d = self.n;
        if (d + 1) * self.ncols > self.rows.len() {
            let want = ((d + 1) * 2).min(self.cap + 1);
            self.rows.resize(want * self.ncols, NONE);
            self.parent.resize(want, 0);
        }
        // rows past n may hold stale entries after compaction
        self.rows[d * self.ncols..(d + 1) * self.ncols].fill(NONE);
        let d = d as u32;
        self.parent[d as usize] = d;
        self.live += 1;
        self.defined += 1;
        self.peak = self.peak.max(self.n);
        self.link(c, x, d);
        Some(d)
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut s = c;
        while self.parent[s as usize] != s {
            let next = self.parent[s as usize];
            self.parent[s as usize] = r;
            s = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (x, y) = (self.rep(a), self.rep(b));
        if x != y {
            let (lo, hi) = if x < y { (x, y) } else { (y, x) };
            self.parent[hi as usize] = lo;
            self.live -= 1;
            self.events += 1;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for x in 0..self.ncols as u32 {
                let d = self.get(g, x);
                if d == NONE {
                    continue;
                }
                self.set(d, x ^ 1, NONE);
                let mu = self.rep(g);
                let nu = self.rep(d);
                let mux = self.get(mu, x);
                if mux != NONE {
                    self.merge(nu, mux);
                } else {
                    let nux = self.get(nu, x ^ 1);
                    if nux != NONE {
                        self.merge(mu, nux);
                    } else {
                        self.link(mu, x, nu);
                    }
                }
            }
        }
    }

    /// Scans `w` at `a`. With `fill`, gaps are closed by new definitions;
    /// without, a single gap becomes a deduction. Returns false on overflow.
    fn scan(&mut self, a: u32, w: &[u32], fill: bool) -> bool {
        let (mut f, mut b) = (a, a);
        let (mut i, mut j) = (0usize, w.len());
        loop {
            while i < j {
                let v = self.get(f, w[i]);
                if v == NONE {
                    break;
                }
                f = v;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return true;
            }
            while j > i {
                let v = self.get(b, w[j - 1] ^ 1);
                if v == NONE {
                    break;
                }
                b = v;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return true;
            }
            if j == i + 1 {
                self.link(f, w[i], b);
                return true;
            }
            if !fill {
                return true;
            }
            match self.define(f, w[i]) {
                Some(_) => {}
                None => return false,
            }
        }
    }

    /// Renumbers live cosets to 1..=live. Returns the old-to-new map.
    fn compact(&mut self) -> Vec<u32> {
        for c in 1..=self.n as u32 {
            self.rep(c);
        }
        let mut map = vec![0u32; self.n + 1];
        let mut next = 0u32;
        for c in 1..=self.n as u32 {
            if self.is_live(c) {
                next += 1;
                map[c as usize] = next;
            }
        }
        for c in 1..=self.n as u32 {
            let m = map[c as usize];
            if m == 0 {
                continue;
            }
            for x in 0..self.ncols as u32 {
                let v = self.get(c, x);
                let v = if v == NONE { NONE } else { map[self.parent[v as usize] as usize] };
                self.set(m, x, v);
            }
        }
        self.n = next as usize;
        for c in 1..=self.n {
            self.parent[c] = c as u32;
        }
        debug!("compacted to {} cosets", self.n);
        map
    }

    fn first_gap(&self, from: u32) -> Option<(u32, u32)> {
        for c in from..=self.n as u32 {
            if !self.is_live(c) {
                continue;
            }
            for x in 0..self.ncols as u32 {
                if self.get(c, x) == NONE {
                    return Some((c, x));
                }
            }
        }
        None
    }

    /// Scans every live coset with every relator, filling when asked.
    fn full_pass(&mut self, rels: &[Vec<u32>], fill: bool) -> bool {
        let mut c = 1u32;
        while c as usize <= self.n {
            if self.is_live(c) {
                for r in rels {
                    if !self.is_live(c) {
                        break;
                    }
                    if !self.scan(c, r, fill) {
                        return false;
                    }
                }
                if fill && self.is_live(c) {
                    for x in 0..self.ncols as u32 {
                        if self.get(c, x) == NONE && self.define(c, x).is_none() {
                            return false;
                        }
                    }
                }
            }
            c += 1;
        }
        true
    }
}

/// Relators as column sequences over the presentation's generators.
fn columns(p: &GroupPresentation) -> Vec<Vec<u32>> {
    let mut col_of = std::collections::HashMap::new();
    for (i, g) in p.generators.iter().enumerate() {
        col_of.insert(g.position(), i as u32);
    }
    p.relators
        .iter()
        .map(|r| {
            r.letters()
                .iter()
                .map(|&x| {
                    let c = col_of[&x.unsigned_abs()] * 2;
                    if x > 0 {
                        c
                    } else {
                        c + 1
                    }
                })
                .collect()
        })
        .collect()
}

fn hlt(t: &mut Table, rels: &[Vec<u32>]) -> bool {
    let mut a = 1u32;
    'cosets: while a as usize <= t.n {
        if !t.is_live(a) {
            a += 1;
            continue;
        }
        for r in rels {
            if !t.scan(a, r, true) {
                match make_room(t, rels, a) {
                    Some(m) => {
                        a = m;
                        continue 'cosets;
                    }
                    None => return false,
                }
            }
            if !t.is_live(a) {
                break;
            }
        }
        for x in 0..t.ncols as u32 {
            if t.is_live(a) && t.get(a, x) == NONE && t.define(a, x).is_none() {
                match make_room(t, rels, a) {
                    Some(m) => {
                        a = m;
                        continue 'cosets;
                    }
                    None => return false,
                }
            }
        }
        a += 1;
    }
    true
}

/// Lookahead, then compaction. Returns the new number of the first live coset
/// at or after `a`, or `None` when nothing could be freed.
fn make_room(t: &mut Table, rels: &[Vec<u32>], a: u32) -> Option<u32> {
    if t.live == t.n {
        trace!("lookahead at {} cosets", t.n);
        for c in 1..=t.n as u32 {
            for r in rels {
                if !t.is_live(c) {
                    break;
                }
                t.scan(c, r, false);
            }
        }
    }
    if t.live == t.n {
        return None;
    }
    let mut c = a;
    while c as usize <= t.n && !t.is_live(c) {
        c += 1;
    }
    let map = t.compact();
    Some(map.get(c as usize).copied().filter(|&m| m != 0).unwrap_or(t.n as u32 + 1))
}

fn felsch(t: &mut Table, rels: &[Vec<u32>]) -> bool {
    // every cyclic conjugate of every relator and inverse, keyed by first column
    let mut by_col: Vec<Vec<Vec<u32>>> = vec![Vec::new(); t.ncols];
    for r in rels {
        let inv: Vec<u32> = r.iter().rev().map(|x| x ^ 1).collect();
        for w in [r, &inv] {
            for s in 0..w.len() {
                let rot: Vec<u32> = w[s..].iter().chain(&w[..s]).copied().collect();
                let list = &mut by_col[rot[0] as usize];
                if !list.contains(&rot) {
                    list.push(rot);
                }
            }
        }
    }
    t.track_deductions = true;
    let mut from = 1u32;
    loop {
        while let Some((c, x)) = t.deductions.pop() {
            if !t.is_live(c) {
                continue;
            }
            for w in &by_col[x as usize] {
                if !t.is_live(c) {
                    break;
                }
                t.scan(c, w, false);
            }
            let d = t.get(c, x);
            if d != NONE && t.is_live(d) {
                for w in &by_col[(x ^ 1) as usize] {
                    if !t.is_live(d) {
                        break;
                    }
                    t.scan(d, w, false);
                }
            }
        }
        let gap = t.first_gap(from).or_else(|| t.first_gap(1));
        let Some((c, x)) = gap else {
            let before = t.events;
            t.full_pass(rels, false);
            if t.events == before {
                return true;
            }
            continue;
        };
        from = c;
        if t.n >= t.cap {
            if t.live == t.n {
                return false;
            }
            t.deductions.clear();
            t.compact();
            // compaction can leave deductions unchecked, so rescan from scratch
            t.full_pass(rels, false);
            from = 1;
            continue;
        }
        t.define(c, x);
    }
}

/// Order of the group presented by `p`, or overflow past `max_cosets`.
pub fn todd_coxeter(p: &GroupPresentation, max_cosets: usize) -> Result<Enumerated, Overflow> {
    enumerate(p, max_cosets, Strategy::Hlt)
}

pub fn enumerate(p: &GroupPresentation, max_cosets: usize, strategy: Strategy) -> Result<Enumerated, Overflow> {
    assert!(max_cosets >= 1);
    let rels = columns(p);
    let mut t = Table::new(2 * p.generators.len(), max_cosets);
    let ok = match strategy {
        Strategy::Hlt => hlt(&mut t, &rels),
        Strategy::Felsch => felsch(&mut t, &rels),
    };
    t.track_deductions = false;
    t.deductions.clear();
    // closing pass: the table must be complete and satisfy every relator
    let ok = ok
        && loop {
            let before = t.events;
            if !t.full_pass(&rels, true) {
                break false;
            }
            if t.events == before {
                break true;
            }
        };
    if !ok {
        return Err(Overflow { limit: max_cosets, max_cosets_used: t.peak });
    }
    debug!("{strategy}: {} cosets, peak {}, defined {}", t.live, t.peak, t.defined);
    Ok(Enumerated { order: t.live as u64, max_cosets_used: t.peak, defined: t.defined })
}
