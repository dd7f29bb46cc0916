//! Oriented link diagrams in planar-diagram notation.
//!
//! `X[i,j,k,l]` lists the four strand labels around a crossing
//! counterclockwise, starting from the incoming under strand, so the
//! under strand runs i -> k. The crossing is positive when the over strand
//! runs l -> j. Crossingless circles are written `O`.

use crate::error::{HomologyError, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub x: [usize; 4],
    pub positive: bool,
}

impl Crossing {
    /// Slots (indices into `x`) of the two incoming strands.
    pub fn incoming(&self) -> [usize; 2] {
        if self.positive {
            [0, 3]
        } else {
            [0, 1]
        }
    }

    pub fn outgoing(&self) -> [usize; 2] {
        if self.positive {
            [1, 2]
        } else {
            [2, 3]
        }
    }

    /// Oriented smoothing as (incoming slot, outgoing slot) pairs.
    pub fn oriented_pairs(&self) -> [(usize, usize); 2] {
        if self.positive {
            [(0, 1), (3, 2)]
        } else {
            [(1, 2), (0, 3)]
        }
    }

    /// Slots of (merge left, merge right, split left, split right) in the
    /// resolution with a double edge.
    pub fn h_slots(&self) -> [usize; 4] {
        if self.positive {
            [3, 0, 2, 1]
        } else {
            [0, 1, 3, 2]
        }
    }

    fn slot_is_in(&self, slot: usize) -> bool {
        self.incoming().contains(&slot)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdLink {
    pub crossings: Vec<Crossing>,
    /// Crossingless circle components.
    pub loops: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Dir {
    In,
    Out,
}

fn bad(msg: impl Into<String>) -> HomologyError {
    HomologyError::InvalidPd(msg.into())
}

impl PdLink {
    pub fn unlink(n: usize) -> Self {
        PdLink { crossings: Vec::new(), loops: n }
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty() && self.loops == 0
    }

    pub fn n_plus(&self) -> usize {
        self.crossings.iter().filter(|c| c.positive).count()
    }

    pub fn n_minus(&self) -> usize {
        self.len() - self.n_plus()
    }

    pub fn writhe(&self) -> i64 {
        self.n_plus() as i64 - self.n_minus() as i64
    }

    pub fn labels(&self) -> BTreeSet<usize> {
        self.crossings.iter().flat_map(|c| c.x).collect()
    }

    pub fn max_label(&self) -> usize {
        self.labels().into_iter().max().unwrap_or(0)
    }

    /// Where each label leaves and where it arrives, as (crossing, slot).
    pub fn segment_ends(&self) -> BTreeMap<usize, ((usize, usize), (usize, usize))> {
        let mut tail = BTreeMap::new();
        let mut head = BTreeMap::new();
        for (c, x) in self.crossings.iter().enumerate() {
            for slot in 0..4 {
                if x.slot_is_in(slot) {
                    head.insert(x.x[slot], (c, slot));
                } else {
                    tail.insert(x.x[slot], (c, slot));
                }
            }
        }
        tail.into_iter().map(|(s, t)| (s, (t, head[&s]))).collect()
    }

    /// Each label occurs twice, once leaving a crossing and once arriving.
    pub fn validate(&self) -> Result<()> {
        let mut dirs: BTreeMap<usize, Vec<Dir>> = BTreeMap::new();
        for x in &self.crossings {
            for slot in 0..4 {
                let d = if x.slot_is_in(slot) { Dir::In } else { Dir::Out };
                dirs.entry(x.x[slot]).or_default().push(d);
            }
        }
        for (l, d) in dirs {
            if d.len() != 2 {
                return Err(bad(format!("label {l} occurs {} times", d.len())));
            }
            if d[0] == d[1] {
                return Err(bad(format!("label {l} is oriented inconsistently")));
            }
        }
        Ok(())
    }

    pub fn components(&self) -> usize {
        let labels: Vec<usize> = self.labels().into_iter().collect();
        let idx: BTreeMap<usize, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut parent: Vec<usize> = (0..labels.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for c in &self.crossings {
            for (a, b) in [(0, 2), (1, 3)] {
                let (ra, rb) = (find(&mut parent, idx[&c.x[a]]), find(&mut parent, idx[&c.x[b]]));
                parent[ra] = rb;
            }
        }
        let roots = (0..labels.len()).filter(|&i| find(&mut parent, i) == i).count();
        roots + self.loops
    }

    /// Parse `X[a,b,c,d]` and `O` items separated by commas or spaces,
    /// optionally wrapped in `PD[...]`. Crossing signs are inferred from
    /// the under strands; a component passing only over is oriented by
    /// its labels, which are assumed to increase along the orientation.
    pub fn parse(text: &str) -> Result<Self> {
        let mut t = text.trim();
        if let Some(inner) = t.strip_prefix("PD[").and_then(|s| s.strip_suffix(']')) {
            t = inner.trim();
        }
        let mut xs: Vec<[usize; 4]> = Vec::new();
        let mut loops = 0;
        let mut rest = t;
        loop {
            rest = rest.trim_start_matches(|c: char| c == ',' || c.is_whitespace());
            if rest.is_empty() {
                break;
            }
            if let Some(r) = rest.strip_prefix('O') {
                loops += 1;
                rest = r;
                continue;
            }
            let Some(r) = rest.strip_prefix("X[") else {
                return Err(bad(format!("expected X[...] or O at '{rest}'")));
            };
            let close = r.find(']').ok_or_else(|| bad("unclosed X["))?;
            let nums: Vec<usize> = r[..close]
                .split(',')
                .map(|s| s.trim().parse::<usize>().map_err(|_| bad(format!("bad label '{}'", s.trim()))))
                .collect::<Result<_>>()?;
            let x: [usize; 4] = nums.try_into().map_err(|_| bad("a crossing needs four labels"))?;
            xs.push(x);
            rest = &r[close + 1..];
        }
        if xs.is_empty() && loops == 0 {
            return Err(bad("empty diagram"));
        }
        let signs = infer_signs(&xs)?;
        let pd = PdLink { crossings: xs.into_iter().zip(signs).map(|(x, positive)| Crossing { x, positive }).collect(), loops };
        pd.validate()?;
        Ok(pd)
    }

    /// Closure of a braid word on `strands` strands; `k` stands for the
    /// generator in which strand k crosses over strand k + 1, `-k` for its
    /// inverse.
    pub fn braid_closure(strands: usize, word: &[i32]) -> Result<Self> {
        let mut cur: Vec<usize> = (0..strands).collect();
        let mut next = strands;
        let mut xs = Vec::new();
        for &g in word {
            let i = g.unsigned_abs() as usize;
            if g == 0 || i >= strands {
                return Err(bad(format!("generator {g} on {strands} strands")));
            }
            let (a, b) = (cur[i - 1], cur[i]);
            let (c, d) = (next, next + 1);
            next += 2;
            xs.push(if g > 0 { Crossing { x: [b, d, c, a], positive: true } } else { Crossing { x: [a, b, d, c], positive: false } });
            cur[i - 1] = c;
            cur[i] = d;
        }
        let mut rename: BTreeMap<usize, usize> = BTreeMap::new();
        let mut loops = 0;
        for (p, &l) in cur.iter().enumerate() {
            if l == p {
                loops += 1;
            } else {
                rename.insert(l, p);
            }
        }
        let used: BTreeSet<usize> = xs.iter().flat_map(|c| c.x).map(|l| *rename.get(&l).unwrap_or(&l)).collect();
        let compact: BTreeMap<usize, usize> = used.into_iter().enumerate().map(|(i, l)| (l, i + 1)).collect();
        for c in &mut xs {
            for l in &mut c.x {
                *l = compact[rename.get(l).unwrap_or(l)];
            }
        }
        let pd = PdLink { crossings: xs, loops };
        pd.validate()?;
        Ok(pd)
    }

    /// Mirror image: every crossing switches over and under.
    pub fn mirror(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                let [i, j, k, l] = c.x;
                if c.positive {
                    Crossing { x: [l, i, j, k], positive: false }
                } else {
                    Crossing { x: [j, k, l, i], positive: true }
                }
            })
            .collect();
        PdLink { crossings, loops: self.loops }
    }

    /// The same diagram with crossing `perm[c]` listed at position c.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        PdLink { crossings: perm.iter().map(|&c| self.crossings[c]).collect(), loops: self.loops }
    }
}

impl fmt::Display for PdLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items: Vec<String> = self.crossings.iter().map(|c| format!("X[{},{},{},{}]", c.x[0], c.x[1], c.x[2], c.x[3])).collect();
        items.extend(std::iter::repeat_n("O".to_string(), self.loops));
        write!(f, "{}", items.join(","))
    }
}

fn infer_signs(xs: &[[usize; 4]]) -> Result<Vec<bool>> {
    let mut occ: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (c, x) in xs.iter().enumerate() {
        for (slot, &l) in x.iter().enumerate() {
            occ.entry(l).or_default().push((c, slot));
        }
    }
    for (l, o) in &occ {
        if o.len() != 2 {
            return Err(bad(format!("label {l} occurs {} times", o.len())));
        }
    }
    let mut dir: BTreeMap<(usize, usize), Dir> = BTreeMap::new();
    let mut queue: Vec<((usize, usize), Dir)> = Vec::new();
    for c in 0..xs.len() {
        queue.push(((c, 0), Dir::In));
        queue.push(((c, 2), Dir::Out));
    }
    let mut seeded = 0;
    loop {
        while let Some((s, d)) = queue.pop() {
            if let Some(&old) = dir.get(&s) {
                if old != d {
                    return Err(bad(format!("orientation conflict at label {}", xs[s.0][s.1])));
                }
                continue;
            }
            dir.insert(s, d);
            let flip = if d == Dir::In { Dir::Out } else { Dir::In };
            let label = xs[s.0][s.1];
            for &o in &occ[&label] {
                if o != s {
                    queue.push((o, flip));
                }
            }
            // the over strand passes straight through
            if s.1 % 2 == 1 {
                queue.push(((s.0, 4 - s.1), flip));
            }
        }
        let Some(c) = (seeded..xs.len()).find(|&c| !dir.contains_key(&(c, 1))) else { break };
        seeded = c;
        let [_, j, _, l] = xs[c];
        let positive = j == l + 1 || l > j + 1;
        queue.push(((c, 3), if positive { Dir::In } else { Dir::Out }));
    }
    Ok((0..xs.len()).map(|c| dir[&(c, 3)] == Dir::In).collect())
}
