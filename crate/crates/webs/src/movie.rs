//! Foams with boundary, presented as movies of elementary moves between webs.

use crate::error::{Result, WebError};
use crate::web::{Edge, Vertex, VertexKind, Web};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet};

/// Elementary cobordisms. Ids in the `out` arrays name the edges the move
/// creates; see [`Move::apply`] for which piece receives which id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum Move {
    BirthThinCircle { edge: usize },
    DeathThinCircle { edge: usize },
    BirthDoubleCircle { edge: usize },
    DeathDoubleCircle { edge: usize },
    /// Saddle between thin edges `a` and `b` (possibly equal). The piece
    /// that starts like `a` gets `out[0]`.
    ThinSaddle { a: usize, b: usize, out: [usize; 2] },
    DoubleSaddle { a: usize, b: usize, out: [usize; 2] },
    /// Pinch two parallel thin edges together into a double edge from a new
    /// merge vertex to a new split vertex. `out` = [left below, left above,
    /// right below, right above]; a loop only uses the "below" id.
    Zip { left: usize, right: usize, merge: usize, split: usize, double: usize, out: [usize; 4] },
    /// Remove a double edge from `merge` to `split`, reconnecting left with
    /// left and right with right. `out` = [left, right].
    Unzip { merge: usize, split: usize, out: [usize; 2] },
    Dot { edge: usize },
    /// Rename an edge; the identity cobordism.
    Relabel { edge: usize, to: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Chain {
    pub id: usize,
    /// Distinct old edges the new edge is made of.
    pub olds: Vec<usize>,
    pub is_loop: bool,
    /// Junctions where two old pieces were glued.
    pub joins: usize,
}

/// What a move did to the edges, for the facet tracer.
#[derive(Clone, Debug, Default)]
pub(crate) struct StepInfo {
    pub chains: Vec<Chain>,
}

struct Seg {
    old: usize,
    start: Option<usize>,
    end: Option<usize>,
    next: Option<usize>,
}

/// Edge surgery: cut old edges into segments, rewire, then read off chains.
#[derive(Default)]
struct Splice {
    segs: Vec<Seg>,
}

impl Splice {
    /// Cut `e` at `k` points; returns (segment ending at, segment starting at)
    /// for each cut point in flow order. With k = 0 the whole edge is one
    /// segment, returned as the only pair.
    fn cut(&mut self, e: usize, edge: &Edge, k: usize) -> Vec<(usize, usize)> {
        let base = self.segs.len();
        if edge.is_loop() {
            let k = k.max(1);
            for _ in 0..k {
                self.segs.push(Seg { old: e, start: None, end: None, next: None });
            }
            // segment i runs from cut i to cut i+1
            (0..k).map(|i| (base + (i + k - 1) % k, base + i)).collect()
        } else {
            for i in 0..=k {
                let start = if i == 0 { edge.tail } else { None };
                let end = if i == k { edge.head } else { None };
                self.segs.push(Seg { old: e, start, end, next: None });
            }
            if k == 0 {
                vec![(base, base)]
            } else {
                (0..k).map(|i| (base + i, base + i + 1)).collect()
            }
        }
    }

    fn join(&mut self, from: usize, to: usize) {
        self.segs[from].end = None;
        self.segs[to].start = None;
        self.segs[from].next = Some(to);
    }

    /// Chains of segments in creation order of their first segment.
    fn chains(&self) -> Vec<(Vec<usize>, bool)> {
        let mut has_pred = vec![false; self.segs.len()];
        for s in &self.segs {
            if let Some(n) = s.next {
                has_pred[n] = true;
            }
        }
        let mut seen = vec![false; self.segs.len()];
        let mut out = Vec::new();
        for s in 0..self.segs.len() {
            if seen[s] || (has_pred[s] && !self.is_on_cycle(s)) {
                continue;
            }
            let mut chain = Vec::new();
            let mut cur = Some(s);
            while let Some(c) = cur {
                if seen[c] {
                    break;
                }
                seen[c] = true;
                chain.push(c);
                cur = self.segs[c].next;
            }
            let is_loop = self.segs[*chain.last().unwrap()].next == Some(chain[0]);
            out.push((chain, is_loop));
        }
        out
    }

    fn is_on_cycle(&self, s: usize) -> bool {
        let mut cur = self.segs[s].next;
        let mut steps = 0;
        while let Some(c) = cur {
            if c == s {
                return true;
            }
            steps += 1;
            if steps > self.segs.len() {
                return false;
            }
            cur = self.segs[c].next;
        }
        false
    }

    /// Replace the old edges by the chains, with ids chosen by `id_of`
    /// (given the chain's segments). Vertex references at surviving
    /// endpoints are rewritten.
    fn commit(
        &self,
        web: &mut Web,
        thickness: u8,
        id_of: impl Fn(&[usize]) -> usize,
    ) -> Result<(Vec<Chain>, BTreeMap<usize, usize>)> {
        let olds: BTreeSet<usize> = self.segs.iter().map(|s| s.old).collect();
        let mut seg_id = BTreeMap::new();
        let mut chains = Vec::new();
        let mut fresh = Vec::new();
        let mut updates: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (segs, is_loop) in self.chains() {
            let id = id_of(&segs);
            for &s in &segs {
                seg_id.insert(s, id);
            }
            let first = &self.segs[segs[0]];
            let last = &self.segs[*segs.last().unwrap()];
            let (tail, head) = if is_loop { (None, None) } else { (first.start, last.end) };
            if tail.is_some() != head.is_some() {
                return Err(WebError::invalid(format!("e{id}"), "dangling edge after surgery"));
            }
            if let Some(t) = first.start.filter(|_| !is_loop) {
                updates.insert((t, first.old), id);
            }
            if let Some(h) = last.end.filter(|_| !is_loop) {
                updates.insert((h, last.old), id);
            }
            let mut distinct: Vec<usize> = Vec::new();
            for &s in &segs {
                if !distinct.contains(&self.segs[s].old) {
                    distinct.push(self.segs[s].old);
                }
            }
            let joins = segs.iter().filter(|&&s| self.segs[s].next.is_some()).count();
            chains.push(Chain { id, olds: distinct, is_loop, joins });
            fresh.push((id, Edge { thickness, tail, head }));
        }
        for e in &olds {
            web.edges.remove(e);
        }
        for (id, edge) in fresh {
            if web.edges.insert(id, edge).is_some() {
                return Err(WebError::invalid(format!("e{id}"), "new edge id already in use"));
            }
        }
        for (&vid, v) in web.vertices.iter_mut() {
            let orig = *v;
            for (slot, old) in [(&mut v.left, orig.left), (&mut v.right, orig.right), (&mut v.double, orig.double)] {
                if let Some(&new) = updates.get(&(vid, old)) {
                    *slot = new;
                }
            }
        }
        Ok((chains, seg_id))
    }
}

fn need_thickness(web: &Web, e: usize, t: u8) -> Result<Edge> {
    let edge = *web.edge(e)?;
    if edge.thickness != t {
        return Err(WebError::invalid(format!("e{e}"), format!("expected thickness {t}")));
    }
    Ok(edge)
}

fn need_free_edge(web: &Web, e: usize) -> Result<()> {
    if web.edges.contains_key(&e) {
        return Err(WebError::invalid(format!("e{e}"), "edge id already in use"));
    }
    Ok(())
}

impl Move {
    pub fn apply(&self, web: &Web) -> Result<Web> {
        Ok(self.apply_traced(web)?.0)
    }

    /// Apply the move; the result is validated, including planarity.
    pub(crate) fn apply_traced(&self, web: &Web) -> Result<(Web, StepInfo)> {
        let mut w = web.clone();
        let mut info = StepInfo::default();
        match *self {
            Move::BirthThinCircle { edge } | Move::BirthDoubleCircle { edge } => {
                need_free_edge(&w, edge)?;
                let e = if matches!(self, Move::BirthThinCircle { .. }) { Edge::thin() } else { Edge::double() };
                w.edges.insert(edge, e);
            }
            Move::DeathThinCircle { edge } | Move::DeathDoubleCircle { edge } => {
                let t = if matches!(self, Move::DeathThinCircle { .. }) { 1 } else { 2 };
                if !need_thickness(&w, edge, t)?.is_loop() {
                    return Err(WebError::invalid(format!("e{edge}"), "only a closed loop can be capped"));
                }
                w.edges.remove(&edge);
            }
            Move::ThinSaddle { a, b, out } | Move::DoubleSaddle { a, b, out } => {
                let t = if matches!(self, Move::ThinSaddle { .. }) { 1 } else { 2 };
                let ea = need_thickness(&w, a, t)?;
                let eb = need_thickness(&w, b, t)?;
                let mut sp = Splice::default();
                let first;
                if a == b {
                    let cuts = sp.cut(a, &ea, 2);
                    sp.join(cuts[0].0, cuts[1].1);
                    sp.join(cuts[1].0, cuts[0].1);
                    first = if ea.is_loop() { cuts[0].1 } else { cuts[0].0 };
                } else {
                    let ca = sp.cut(a, &ea, 1)[0];
                    let cb = sp.cut(b, &eb, 1)[0];
                    sp.join(ca.0, cb.1);
                    sp.join(cb.0, ca.1);
                    first = ca.0;
                }
                if out[0] == out[1] {
                    return Err(WebError::invalid(format!("e{}", out[0]), "saddle needs two distinct new ids"));
                }
                let (chains, _) = sp.commit(&mut w, t, |segs| if segs.contains(&first) { out[0] } else { out[1] })?;
                info.chains = chains;
            }
            Move::Zip { left, right, merge, split, double, out } => {
                if left == right {
                    return Err(WebError::invalid(format!("e{left}"), "zip needs two different thin edges"));
                }
                let el = need_thickness(&w, left, 1)?;
                let er = need_thickness(&w, right, 1)?;
                if merge == split || w.vertices.contains_key(&merge) || w.vertices.contains_key(&split) {
                    return Err(WebError::invalid(format!("v{merge}"), "zip needs two fresh vertex ids"));
                }
                need_free_edge(&w, double)?;
                let mut sp = Splice::default();
                let cl = sp.cut(left, &el, 1)[0];
                let cr = sp.cut(right, &er, 1)[0];
                for (lo, hi) in [cl, cr] {
                    sp.segs[lo].end = Some(merge);
                    sp.segs[hi].start = Some(split);
                }
                let ids = |segs: &[usize]| -> usize {
                    let s = segs[0];
                    if s == cl.0 {
                        out[0]
                    } else if s == cl.1 {
                        out[1]
                    } else if s == cr.0 {
                        out[2]
                    } else {
                        out[3]
                    }
                };
                let used: BTreeSet<usize> = [cl.0, cl.1, cr.0, cr.1].iter().map(|&s| ids(&[s])).collect();
                if used.len() != [cl.0, cl.1, cr.0, cr.1].iter().collect::<BTreeSet<_>>().len() || used.contains(&double) {
                    return Err(WebError::invalid(format!("e{double}"), "zip ids must be distinct"));
                }
                let (chains, seg_id) = sp.commit(&mut w, 1, ids)?;
                w.vertices.insert(merge, Vertex { kind: VertexKind::Merge, left: seg_id[&cl.0], right: seg_id[&cr.0], double });
                w.vertices.insert(split, Vertex { kind: VertexKind::Split, left: seg_id[&cl.1], right: seg_id[&cr.1], double });
                w.edges.insert(double, Edge { thickness: 2, tail: Some(merge), head: Some(split) });
                info.chains = chains;
            }
            Move::Unzip { merge, split, out } => {
                let m = *w.vertex(merge)?;
                let s = *w.vertex(split)?;
                if m.kind != VertexKind::Merge || s.kind != VertexKind::Split || m.double != s.double {
                    return Err(WebError::invalid(format!("v{merge}"), "unzip needs a double edge from a merge to a split"));
                }
                let mut sp = Splice::default();
                let mut seg_of: BTreeMap<usize, usize> = BTreeMap::new();
                for e in [m.left, m.right, s.left, s.right] {
                    if let std::collections::btree_map::Entry::Vacant(v) = seg_of.entry(e) {
                        let edge = *w.edge(e)?;
                        v.insert(sp.cut(e, &edge, 0)[0].0);
                    }
                }
                sp.join(seg_of[&m.left], seg_of[&s.left]);
                sp.join(seg_of[&m.right], seg_of[&s.right]);
                w.vertices.remove(&merge);
                w.vertices.remove(&split);
                w.edges.remove(&m.double);
                let left_seg = seg_of[&m.left];
                if out[0] == out[1] {
                    return Err(WebError::invalid(format!("e{}", out[0]), "unzip needs two distinct new ids"));
                }
                let (chains, _) = sp.commit(&mut w, 1, |segs| if segs.contains(&left_seg) { out[0] } else { out[1] })?;
                info.chains = chains;
            }
            Move::Dot { edge } => {
                need_thickness(&w, edge, 1)?;
            }
            Move::Relabel { edge, to } => {
                if edge != to {
                    let e = *w.edge(edge)?;
                    need_free_edge(&w, to)?;
                    w.edges.remove(&edge);
                    w.edges.insert(to, e);
                    for v in w.vertices.values_mut() {
                        v.replace(edge, to);
                    }
                }
            }
        }
        w.validate()?;
        Ok((w, info))
    }

    /// Contribution to chi of the thin surface.
    pub fn thin_euler(&self) -> i64 {
        match self {
            Move::BirthThinCircle { .. } | Move::DeathThinCircle { .. } => 1,
            Move::ThinSaddle { .. } | Move::Zip { .. } | Move::Unzip { .. } => -1,
            _ => 0,
        }
    }

    pub fn dots(&self) -> i64 {
        matches!(self, Move::Dot { .. }) as i64
    }

    /// Swap the roles of left and right (for the mirrored movie).
    pub fn mirrored(&self) -> Move {
        match *self {
            Move::Zip { left, right, merge, split, double, out } => {
                Move::Zip { left: right, right: left, merge, split, double, out: [out[2], out[3], out[0], out[1]] }
            }
            Move::Unzip { merge, split, out } => Move::Unzip { merge, split, out: [out[1], out[0]] },
            ref m => m.clone(),
        }
    }
}

/// A foam from `start` to the web reached after the moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoamMovie {
    pub start: Web,
    pub moves: Vec<Move>,
}

impl FoamMovie {
    pub fn new(start: Web) -> Self {
        FoamMovie { start, moves: Vec::new() }
    }

    pub fn identity(web: &Web) -> Self {
        FoamMovie::new(web.clone())
    }

    pub fn from_moves(start: Web, moves: Vec<Move>) -> Result<Self> {
        let m = FoamMovie { start, moves };
        m.frames()?;
        Ok(m)
    }

    /// All intermediate webs, starting with `start`.
    pub fn frames(&self) -> Result<Vec<Web>> {
        self.start.validate()?;
        let mut out = vec![self.start.clone()];
        for (k, mv) in self.moves.iter().enumerate() {
            let next = mv.apply(out.last().unwrap()).map_err(|e| WebError::BadMove { step: k, msg: e.to_string() })?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn end(&self) -> Result<Web> {
        Ok(self.frames()?.pop().unwrap())
    }

    /// -chi of the traced thin surface plus twice the dots.
    pub fn degree(&self) -> i64 {
        self.moves.iter().map(|m| 2 * m.dots() - m.thin_euler()).sum()
    }

    /// `self` followed by `next`; the end web of `self` must equal the start of `next`.
    pub fn then(&self, next: &FoamMovie) -> Result<FoamMovie> {
        let end = self.end()?;
        if end != next.start {
            return Err(WebError::BoundaryMismatch(format!(
                "{} does not match {}",
                end.to_json(),
                next.start.to_json()
            )));
        }
        let mut moves = self.moves.clone();
        moves.extend(next.moves.iter().cloned());
        Ok(FoamMovie { start: self.start.clone(), moves })
    }

    pub fn compose(parts: &[FoamMovie]) -> Result<FoamMovie> {
        let mut it = parts.iter();
        let mut acc = it.next().cloned().ok_or_else(|| WebError::BoundaryMismatch("nothing to compose".into()))?;
        for p in it {
            acc = acc.then(p)?;
        }
        Ok(acc)
    }

    /// The movie played backwards: the same frames in reverse order.
    pub fn reverse(&self) -> Result<FoamMovie> {
        let frames = self.frames()?;
        let mut moves = Vec::with_capacity(self.moves.len());
        for (k, mv) in self.moves.iter().enumerate().rev() {
            let (before, after) = (&frames[k], &frames[k + 1]);
            let inv = inverse_move(mv, before, after).ok_or_else(|| WebError::BadMove {
                step: k,
                msg: "move cannot be played backwards in this model".into(),
            })?;
            moves.push(inv);
        }
        Ok(FoamMovie { start: frames.last().unwrap().clone(), moves })
    }

    /// Left and right exchanged throughout.
    pub fn mirrored(&self) -> FoamMovie {
        FoamMovie { start: self.start.mirrored(), moves: self.moves.iter().map(Move::mirrored).collect() }
    }

    pub fn to_json(&self) -> Value {
        json!({"type": "gl2_movie", "start": self.start.to_json(), "moves": self.moves})
    }

    pub fn from_json(v: &Value) -> Result<FoamMovie> {
        let start = match v.get("start") {
            Some(w) if !w.is_null() => Web::from_json(w)?,
            _ => Web::new(),
        };
        let moves: Vec<Move> = serde_json::from_value(v.get("moves").cloned().unwrap_or(Value::Array(vec![])))?;
        FoamMovie::from_moves(start, moves)
    }

    pub fn parse(text: &str) -> Result<FoamMovie> {
        FoamMovie::from_json(&serde_json::from_str(text)?)
    }
}

/// A move taking `after` back to `before`, checked by replaying it.
fn inverse_move(mv: &Move, before: &Web, after: &Web) -> Option<Move> {
    let candidates: Vec<Move> = match *mv {
        Move::BirthThinCircle { edge } => vec![Move::DeathThinCircle { edge }],
        Move::DeathThinCircle { edge } => vec![Move::BirthThinCircle { edge }],
        Move::BirthDoubleCircle { edge } => vec![Move::DeathDoubleCircle { edge }],
        Move::DeathDoubleCircle { edge } => vec![Move::BirthDoubleCircle { edge }],
        Move::Dot { edge } => vec![Move::Dot { edge }],
        Move::Relabel { edge, to } => vec![Move::Relabel { edge: to, to: edge }],
        Move::ThinSaddle { a, b, out } | Move::DoubleSaddle { a, b, out } => {
            let thin = matches!(mv, Move::ThinSaddle { .. });
            let made: Vec<usize> = out.iter().copied().filter(|e| after.edges.contains_key(e) && !before.edges.contains_key(e)).collect();
            let made = if made.is_empty() { out.iter().copied().filter(|e| after.edges.contains_key(e)).collect() } else { made };
            let (x, y) = (made[0], *made.get(1).unwrap_or(&made[0]));
            let mk = |a: usize, b: usize, o: [usize; 2]| {
                if thin {
                    Move::ThinSaddle { a, b, out: o }
                } else {
                    Move::DoubleSaddle { a, b, out: o }
                }
            };
            let other = if a == b { (0..).find(|k| !before.edges.contains_key(k) && !after.edges.contains_key(k)).unwrap() } else { b };
            vec![mk(x, y, [a, other]), mk(x, y, [other, a]), mk(y, x, [a, other]), mk(y, x, [other, a])]
        }
        Move::Zip { left, right, merge, split, .. } => {
            vec![Move::Unzip { merge, split, out: [left, right] }]
        }
        Move::Unzip { merge, split, out } => {
            let m = before.vertices.get(&merge)?;
            let s = before.vertices.get(&split)?;
            vec![Move::Zip {
                left: out[0],
                right: out[1],
                merge,
                split,
                double: m.double,
                out: [m.left, s.left, m.right, s.right],
            }]
        }
    };
    candidates.into_iter().find(|c| c.apply(after).ok().as_ref() == Some(before))
}

/// Builds a movie move by move, choosing fresh ids.
#[derive(Clone, Debug)]
pub struct MovieBuilder {
    movie: FoamMovie,
    current: Web,
    next_edge: usize,
    next_vertex: usize,
}

impl MovieBuilder {
    pub fn new(start: &Web) -> Self {
        MovieBuilder {
            movie: FoamMovie::new(start.clone()),
            current: start.clone(),
            next_edge: start.fresh_edge(),
            next_vertex: start.fresh_vertex(),
        }
    }

    pub fn empty() -> Self {
        Self::new(&Web::new())
    }

    /// Continue a movie.
    pub fn from_movie(m: &FoamMovie) -> Result<Self> {
        let frames = m.frames()?;
        let max_e = frames.iter().map(Web::fresh_edge).max().unwrap_or(0);
        let max_v = frames.iter().map(Web::fresh_vertex).max().unwrap_or(0);
        Ok(MovieBuilder { movie: m.clone(), current: frames.last().unwrap().clone(), next_edge: max_e, next_vertex: max_v })
    }

    pub fn web(&self) -> &Web {
        &self.current
    }

    pub fn finish(self) -> FoamMovie {
        self.movie
    }

    pub fn movie(&self) -> &FoamMovie {
        &self.movie
    }

    fn edge_id(&mut self) -> usize {
        let id = self.next_edge.max(self.current.fresh_edge());
        self.next_edge = id + 1;
        id
    }

    fn vertex_id(&mut self) -> usize {
        let id = self.next_vertex.max(self.current.fresh_vertex());
        self.next_vertex = id + 1;
        id
    }

    pub fn push(&mut self, mv: Move) -> Result<()> {
        let next = mv.apply(&self.current).map_err(|e| WebError::BadMove { step: self.movie.moves.len(), msg: e.to_string() })?;
        self.current = next;
        self.movie.moves.push(mv);
        Ok(())
    }

    pub fn birth(&mut self) -> Result<usize> {
        let edge = self.edge_id();
        self.push(Move::BirthThinCircle { edge })?;
        Ok(edge)
    }

    pub fn birth_double(&mut self) -> Result<usize> {
        let edge = self.edge_id();
        self.push(Move::BirthDoubleCircle { edge })?;
        Ok(edge)
    }

    pub fn death(&mut self, edge: usize) -> Result<()> {
        self.push(Move::DeathThinCircle { edge })
    }

    pub fn death_double(&mut self, edge: usize) -> Result<()> {
        self.push(Move::DeathDoubleCircle { edge })
    }

    pub fn dot(&mut self, edge: usize) -> Result<()> {
        self.push(Move::Dot { edge })
    }

    pub fn dots(&mut self, edge: usize, n: u32) -> Result<()> {
        for _ in 0..n {
            self.dot(edge)?;
        }
        Ok(())
    }

    /// Returns the ids of the resulting pieces; a single piece is repeated.
    pub fn saddle(&mut self, a: usize, b: usize) -> Result<[usize; 2]> {
        let out = [self.edge_id(), self.edge_id()];
        self.push(Move::ThinSaddle { a, b, out })?;
        Ok(self.existing(out))
    }

    pub fn double_saddle(&mut self, a: usize, b: usize) -> Result<[usize; 2]> {
        let out = [self.edge_id(), self.edge_id()];
        self.push(Move::DoubleSaddle { a, b, out })?;
        Ok(self.existing(out))
    }

    fn existing(&self, out: [usize; 2]) -> [usize; 2] {
        if self.current.edges.contains_key(&out[1]) {
            out
        } else {
            [out[0], out[0]]
        }
    }

    /// Returns (merge, split, double, [left below, left above, right below, right above]);
    /// for a loop the above id repeats the below one.
    pub fn zip(&mut self, left: usize, right: usize) -> Result<(usize, usize, usize, [usize; 4])> {
        let (merge, split) = (self.vertex_id(), self.vertex_id());
        let double = self.edge_id();
        let out = [self.edge_id(), self.edge_id(), self.edge_id(), self.edge_id()];
        self.push(Move::Zip { left, right, merge, split, double, out })?;
        let m = self.current.vertices[&merge];
        let s = self.current.vertices[&split];
        Ok((merge, split, double, [m.left, s.left, m.right, s.right]))
    }

    /// Returns [left, right] pieces; a single piece is repeated.
    pub fn unzip(&mut self, merge: usize, split: usize) -> Result<[usize; 2]> {
        let out = [self.edge_id(), self.edge_id()];
        self.push(Move::Unzip { merge, split, out })?;
        Ok(self.existing(out))
    }

    pub fn relabel(&mut self, edge: usize, to: usize) -> Result<()> {
        self.push(Move::Relabel { edge, to })
    }

    /// Append another movie, which must start at the current web.
    pub fn append(&mut self, m: &FoamMovie) -> Result<()> {
        if m.start != self.current {
            return Err(WebError::BoundaryMismatch("appended movie starts elsewhere".into()));
        }
        for mv in &m.moves {
            self.push(mv.clone())?;
        }
        Ok(())
    }
}
