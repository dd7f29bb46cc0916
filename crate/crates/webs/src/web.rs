//! Planar GL(2) webs: oriented trivalent graphs with thin and double edges.
//!
//! A vertex stores its two thin edges as `left` and `right`, read while
//! looking along the flow, and its double edge. The counterclockwise
//! rotation is derived from that: `[double, left, right]` at a merge and
//! `[double, right, left]` at a split.

use crate::error::{Result, WebError};
use serde_json::{json, Value};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexKind {
    /// Two thin edges in, double edge out.
    Merge,
    /// Double edge in, two thin edges out.
    Split,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub kind: VertexKind,
    pub left: usize,
    pub right: usize,
    pub double: usize,
}

impl Vertex {
    pub fn rotation(&self) -> [usize; 3] {
        match self.kind {
            VertexKind::Merge => [self.double, self.left, self.right],
            VertexKind::Split => [self.double, self.right, self.left],
        }
    }

    pub fn edges(&self) -> [usize; 3] {
        [self.left, self.right, self.double]
    }

    /// Replace every reference to edge `old` by `new`.
    pub fn replace(&mut self, old: usize, new: usize) {
        for slot in [&mut self.left, &mut self.right, &mut self.double] {
            if *slot == old {
                *slot = new;
            }
        }
    }
}

/// An edge without endpoints is a closed loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub thickness: u8,
    pub tail: Option<usize>,
    pub head: Option<usize>,
}

impl Edge {
    pub fn thin() -> Self {
        Edge { thickness: 1, tail: None, head: None }
    }

    pub fn double() -> Self {
        Edge { thickness: 2, tail: None, head: None }
    }

    pub fn is_loop(&self) -> bool {
        self.tail.is_none()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Web {
    pub edges: BTreeMap<usize, Edge>,
    pub vertices: BTreeMap<usize, Vertex>,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a] = b;
        }
    }
    fn count_roots(&mut self) -> usize {
        (0..self.0.len()).filter(|&x| self.find(x) == x).count()
    }
}

impl Web {
    pub fn new() -> Self {
        Self::default()
    }

    /// Disjoint thin circles with ids 0..n.
    pub fn circles(n: usize) -> Self {
        let mut w = Web::new();
        for k in 0..n {
            w.edges.insert(k, Edge::thin());
        }
        w
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty() && self.vertices.is_empty()
    }

    pub fn fresh_edge(&self) -> usize {
        self.edges.keys().next_back().map_or(0, |k| k + 1)
    }

    pub fn fresh_vertex(&self) -> usize {
        self.vertices.keys().next_back().map_or(0, |k| k + 1)
    }

    pub fn edge(&self, id: usize) -> Result<&Edge> {
        self.edges.get(&id).ok_or_else(|| WebError::invalid(format!("e{id}"), "no such edge"))
    }

    pub fn vertex(&self, id: usize) -> Result<&Vertex> {
        self.vertices.get(&id).ok_or_else(|| WebError::invalid(format!("v{id}"), "no such vertex"))
    }

    pub fn thin_loops(&self) -> Vec<usize> {
        self.edges.iter().filter(|(_, e)| e.thickness == 1 && e.is_loop()).map(|(&k, _)| k).collect()
    }

    pub fn double_loops(&self) -> Vec<usize> {
        self.edges.iter().filter(|(_, e)| e.thickness == 2 && e.is_loop()).map(|(&k, _)| k).collect()
    }

    /// Number of components of the thin one-manifold.
    pub fn thin_components(&self) -> usize {
        let thin: Vec<usize> = self.edges.iter().filter(|(_, e)| e.thickness == 1).map(|(&k, _)| k).collect();
        let index: BTreeMap<usize, usize> = thin.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        let mut dsu = Dsu::new(thin.len());
        for v in self.vertices.values() {
            if let (Some(&a), Some(&b)) = (index.get(&v.left), index.get(&v.right)) {
                dsu.union(a, b);
            }
        }
        dsu.count_roots()
    }

    /// Incidence and orientation checks followed by the planarity check.
    pub fn validate(&self) -> Result<()> {
        for (&id, e) in &self.edges {
            if e.thickness != 1 && e.thickness != 2 {
                return Err(WebError::invalid(format!("e{id}"), format!("thickness {}", e.thickness)));
            }
            if e.tail.is_some() != e.head.is_some() {
                return Err(WebError::invalid(format!("e{id}"), "exactly one endpoint"));
            }
            for (end, role) in [(e.tail, "tail"), (e.head, "head")] {
                if let Some(v) = end {
                    if !self.vertices.get(&v).is_some_and(|x| x.edges().contains(&id)) {
                        return Err(WebError::invalid(format!("e{id}"), format!("{role} v{v} does not list the edge")));
                    }
                }
            }
        }
        for (&id, v) in &self.vertices {
            let name = format!("v{id}");
            if v.left == v.right {
                return Err(WebError::invalid(name, "left and right thin edges coincide"));
            }
            let (thin_in, double_in) = match v.kind {
                VertexKind::Merge => (true, false),
                VertexKind::Split => (false, true),
            };
            for (e, thick, incoming) in [(v.left, 1, thin_in), (v.right, 1, thin_in), (v.double, 2, double_in)] {
                let edge = self.edges.get(&e).ok_or_else(|| WebError::invalid(&name, format!("missing edge e{e}")))?;
                if edge.thickness != thick {
                    return Err(WebError::invalid(&name, format!("edge e{e} has thickness {}", edge.thickness)));
                }
                let end = if incoming { edge.head } else { edge.tail };
                if end != Some(id) {
                    let dir = if incoming { "end" } else { "start" };
                    return Err(WebError::invalid(&name, format!("edge e{e} does not {dir} here")));
                }
            }
        }
        self.check_planar()
    }

    /// Euler's formula V - E + F = 2 on every component with vertices, the
    /// faces traced from the rotation system.
    pub fn check_planar(&self) -> Result<()> {
        let vids: Vec<usize> = self.vertices.keys().copied().collect();
        if vids.is_empty() {
            return Ok(());
        }
        let vindex: BTreeMap<usize, usize> = vids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut dsu = Dsu::new(vids.len());
        let mut darts: Vec<(usize, usize, usize)> = Vec::new(); // (edge, from, to)
        for (&id, e) in &self.edges {
            if let (Some(t), Some(h)) = (e.tail, e.head) {
                dsu.union(vindex[&t], vindex[&h]);
                darts.push((id, t, h));
                darts.push((id, h, t));
            }
        }
        let dindex: BTreeMap<(usize, usize), usize> = darts.iter().enumerate().map(|(i, &(e, f, _))| ((e, f), i)).collect();
        let mut seen = vec![false; darts.len()];
        let mut faces: BTreeMap<usize, i64> = BTreeMap::new();
        for start in 0..darts.len() {
            if seen[start] {
                continue;
            }
            let comp = dsu.find(vindex[&darts[start].1]);
            *faces.entry(comp).or_default() += 1;
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                let (e, _, to) = darts[d];
                let rot = self.vertices[&to].rotation();
                let k = rot.iter().position(|&x| x == e).expect("validated incidence");
                d = dindex[&(rot[(k + 1) % 3], to)];
            }
        }
        let mut verts: BTreeMap<usize, i64> = BTreeMap::new();
        for &v in &vids {
            *verts.entry(dsu.find(vindex[&v])).or_default() += 1;
        }
        for (comp, nv) in verts {
            let ne = nv * 3 / 2;
            let nf = faces.get(&comp).copied().unwrap_or(0);
            if nv - ne + nf != 2 {
                return Err(WebError::NotPlanar(format!(
                    "component of v{}: V - E + F = {}",
                    vids[comp],
                    nv - ne + nf
                )));
            }
        }
        Ok(())
    }

    /// Disjoint union; ids of `other` are shifted past those of `self`.
    pub fn union(&self, other: &Web) -> (Web, usize, usize) {
        let (de, dv) = (self.fresh_edge(), self.fresh_vertex());
        let mut out = self.clone();
        for (&k, e) in &other.edges {
            out.edges.insert(k + de, Edge { thickness: e.thickness, tail: e.tail.map(|v| v + dv), head: e.head.map(|v| v + dv) });
        }
        for (&k, v) in &other.vertices {
            out.vertices.insert(k + dv, Vertex { kind: v.kind, left: v.left + de, right: v.right + de, double: v.double + de });
        }
        (out, de, dv)
    }

    /// Mirror image: left and right exchanged at every vertex.
    pub fn mirrored(&self) -> Web {
        let mut out = self.clone();
        for v in out.vertices.values_mut() {
            std::mem::swap(&mut v.left, &mut v.right);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let edges: Vec<Value> =
            self.edges.iter().map(|(&k, e)| json!({"id": k, "thickness": e.thickness, "tail": e.tail, "head": e.head})).collect();
        let vertices: Vec<Value> = self
            .vertices
            .iter()
            .map(|(&k, v)| {
                let kind = if v.kind == VertexKind::Merge { "merge" } else { "split" };
                json!({"id": k, "kind": kind, "rotation": v.rotation()})
            })
            .collect();
        json!({"type": "gl2_web", "edges": edges, "vertices": vertices})
    }

    /// Parse a web from its rotation-system JSON. Edge endpoints are derived
    /// from the vertices; given `tail`/`head` fields must agree with them.
    pub fn from_json(v: &Value) -> Result<Web> {
        let mut w = Web::new();
        let uint = |x: &Value, what: &str| -> Result<usize> {
            x.as_u64().map(|n| n as usize).ok_or_else(|| WebError::Json(format!("{what} must be a non-negative integer")))
        };
        let empty = Vec::new();
        for e in v.get("edges").and_then(Value::as_array).unwrap_or(&empty) {
            let id = uint(e.get("id").unwrap_or(&Value::Null), "edge id")?;
            let thickness = e.get("thickness").and_then(Value::as_u64).unwrap_or(1) as u8;
            if w.edges.insert(id, Edge { thickness, tail: None, head: None }).is_some() {
                return Err(WebError::invalid(format!("e{id}"), "duplicate edge id"));
            }
        }
        for x in v.get("vertices").and_then(Value::as_array).unwrap_or(&empty) {
            let id = uint(x.get("id").unwrap_or(&Value::Null), "vertex id")?;
            let name = format!("v{id}");
            let kind = match x.get("kind").and_then(Value::as_str) {
                Some("merge") => VertexKind::Merge,
                Some("split") => VertexKind::Split,
                other => return Err(WebError::invalid(&name, format!("kind {other:?}"))),
            };
            let rot: Vec<usize> = x
                .get("rotation")
                .and_then(Value::as_array)
                .ok_or_else(|| WebError::invalid(&name, "missing rotation"))?
                .iter()
                .map(|r| uint(r, "rotation entry"))
                .collect::<Result<_>>()?;
            if rot.len() != 3 {
                return Err(WebError::invalid(&name, "rotation must list three edges"));
            }
            let thick = |e: usize| w.edges.get(&e).map(|x| x.thickness);
            let doubles: Vec<usize> = (0..3).filter(|&k| thick(rot[k]) == Some(2)).collect();
            if doubles.len() != 1 || rot.iter().any(|&e| thick(e).is_none()) {
                return Err(WebError::invalid(&name, "rotation needs one double and two thin edges"));
            }
            let k = doubles[0];
            let (a, b) = (rot[(k + 1) % 3], rot[(k + 2) % 3]);
            let vert = match kind {
                VertexKind::Merge => Vertex { kind, left: a, right: b, double: rot[k] },
                VertexKind::Split => Vertex { kind, left: b, right: a, double: rot[k] },
            };
            if w.vertices.insert(id, vert).is_some() {
                return Err(WebError::invalid(&name, "duplicate vertex id"));
            }
            let set = |w: &mut Web, e: usize, head: bool| -> Result<()> {
                let edge = w.edges.get_mut(&e).expect("checked above");
                let slot = if head { &mut edge.head } else { &mut edge.tail };
                if slot.is_some() {
                    return Err(WebError::invalid(format!("e{e}"), "endpoint given twice"));
                }
                *slot = Some(id);
                Ok(())
            };
            let thin_head = kind == VertexKind::Merge;
            set(&mut w, vert.left, thin_head)?;
            set(&mut w, vert.right, thin_head)?;
            set(&mut w, vert.double, !thin_head)?;
        }
        for e in v.get("edges").and_then(Value::as_array).unwrap_or(&empty) {
            let id = uint(&e["id"], "edge id")?;
            for key in ["tail", "head"] {
                if let Some(given) = e.get(key).filter(|x| !x.is_null()) {
                    let want = if key == "tail" { w.edges[&id].tail } else { w.edges[&id].head };
                    if Some(uint(given, key)?) != want {
                        return Err(WebError::invalid(format!("e{id}"), format!("{key} disagrees with the vertices")));
                    }
                }
            }
        }
        w.validate()?;
        Ok(w)
    }

    pub fn parse(text: &str) -> Result<Web> {
        Web::from_json(&serde_json::from_str(text)?)
    }
}
