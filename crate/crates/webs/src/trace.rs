//! Closing a movie into a prefoam by tracing facets through the frames.
//!
//! Each facet is a union-find node carrying its Euler characteristic,
//! accumulated slab by slab: a move contributes chi of the part of the
//! facet swept during the move minus chi of the new edges it leaves
//! behind (arcs count 1, loops 0). Seams start at zips and are joined by
//! unzips; the preferred thin facet of a seam is the one on the right of
//! its vertices.

use crate::error::{Result, WebError};
use crate::movie::{FoamMovie, Move};
use coeff_ring::GroundRingElem;
use prefoam::{eval_exact_gl2, FoamError, Gl2Prefoam};
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
struct Node {
    parent: usize,
    thickness: u8,
    chi: i64,
    dots: u32,
}

#[derive(Default)]
struct Facets {
    nodes: Vec<Node>,
}

impl Facets {
    fn add(&mut self, thickness: u8, chi: i64) -> usize {
        self.nodes.push(Node { parent: self.nodes.len(), thickness, chi, dots: 0 });
        self.nodes.len() - 1
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.nodes[r].parent != r {
            r = self.nodes[r].parent;
        }
        let mut y = x;
        while self.nodes[y].parent != r {
            let n = self.nodes[y].parent;
            self.nodes[y].parent = r;
            y = n;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> usize {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.nodes[a].parent = b;
            self.nodes[b].chi += self.nodes[a].chi;
            self.nodes[b].dots += self.nodes[a].dots;
        }
        b
    }

    fn bump(&mut self, x: usize, chi: i64) {
        let r = self.find(x);
        self.nodes[r].chi += chi;
    }
}

/// A seam fragment created by one zip: facet nodes (preferred, other, double).
#[derive(Clone, Copy, Debug)]
struct SeamRecord {
    parent: usize,
    preferred: usize,
    other: usize,
    double: usize,
}

/// Result of closing a movie. `self_seams` counts seams whose two thin
/// sides belong to the same facet; such a foam has no colorings.
#[derive(Clone, Debug)]
pub struct ClosedFoam {
    pub foam: Gl2Prefoam,
    pub self_seams: usize,
}

impl ClosedFoam {
    /// Evaluation in R; foams without proper colorings evaluate to 0.
    pub fn eval(&self) -> Result<GroundRingElem> {
        if self.self_seams > 0 {
            return Ok(GroundRingElem::zero());
        }
        match eval_exact_gl2(&self.foam) {
            Err(FoamError::NotBipartite(_)) => Ok(GroundRingElem::zero()),
            other => Ok(other?),
        }
    }
}

fn chi_of(is_loop: bool) -> i64 {
    if is_loop {
        0
    } else {
        1
    }
}

/// Glue consecutive movies and extract the closed prefoam. The first movie
/// must start and the last end at the empty web.
pub fn compose_and_close(movies: &[FoamMovie]) -> Result<ClosedFoam> {
    let movie = FoamMovie::compose(movies)?;
    close(&movie)
}

pub fn close(movie: &FoamMovie) -> Result<ClosedFoam> {
    if !movie.start.is_empty() {
        return Err(WebError::BoundaryMismatch("closed foam must start at the empty web".into()));
    }
    let mut f = Facets::default();
    let mut edge_node: BTreeMap<usize, usize> = BTreeMap::new();
    let mut seams: Vec<SeamRecord> = Vec::new();
    let mut vertex_seam: BTreeMap<usize, usize> = BTreeMap::new();
    let mut web = movie.start.clone();
    for (k, mv) in movie.moves.iter().enumerate() {
        let (next, info) = mv.apply_traced(&web).map_err(|e| WebError::BadMove { step: k, msg: e.to_string() })?;
        match *mv {
            Move::BirthThinCircle { edge } => {
                edge_node.insert(edge, f.add(1, 1));
            }
            Move::BirthDoubleCircle { edge } => {
                edge_node.insert(edge, f.add(2, 1));
            }
            Move::DeathThinCircle { edge } | Move::DeathDoubleCircle { edge } => {
                let n = edge_node.remove(&edge).expect("traced edge");
                f.bump(n, 1);
            }
            Move::Dot { edge } => {
                let r = f.find(edge_node[&edge]);
                f.nodes[r].dots += 1;
            }
            Move::Relabel { edge, to } => {
                let n = edge_node.remove(&edge).expect("traced edge");
                edge_node.insert(to, n);
            }
            Move::ThinSaddle { a, b, .. } | Move::DoubleSaddle { a, b, .. } => {
                let mut node = f.union(edge_node[&a], edge_node[&b]);
                let mut chi = chi_of(web.edges[&a].is_loop()) - 1;
                if a != b {
                    chi += chi_of(web.edges[&b].is_loop());
                }
                edge_node.remove(&a);
                edge_node.remove(&b);
                for c in &info.chains {
                    chi -= chi_of(c.is_loop);
                    edge_node.insert(c.id, node);
                }
                node = f.find(node);
                f.bump(node, chi);
            }
            Move::Zip { left, right, merge, split, double, .. } => {
                let sides = [edge_node[&left], edge_node[&right]];
                edge_node.remove(&left);
                edge_node.remove(&right);
                for (i, e) in [left, right].into_iter().enumerate() {
                    let mut chi = chi_of(web.edges[&e].is_loop());
                    for c in info.chains.iter().filter(|c| c.olds.contains(&e)) {
                        chi -= chi_of(c.is_loop);
                        edge_node.insert(c.id, sides[i]);
                    }
                    f.bump(sides[i], chi);
                }
                let g = f.add(2, 0);
                edge_node.insert(double, g);
                seams.push(SeamRecord { parent: seams.len(), preferred: sides[1], other: sides[0], double: g });
                vertex_seam.insert(merge, seams.len() - 1);
                vertex_seam.insert(split, seams.len() - 1);
            }
            Move::Unzip { merge, split, .. } => {
                let g = web.vertices[&merge].double;
                let gn = edge_node.remove(&g).expect("traced edge");
                f.bump(gn, 1);
                let mut made = Vec::new();
                for c in &info.chains {
                    let mut node = edge_node[&c.olds[0]];
                    let mut chi = -(c.joins as i64) - chi_of(c.is_loop);
                    for &o in &c.olds {
                        node = f.union(node, edge_node[&o]);
                        chi += chi_of(web.edges[&o].is_loop());
                    }
                    f.bump(node, chi);
                    made.push((c.id, node));
                }
                for c in &info.chains {
                    for o in &c.olds {
                        edge_node.remove(o);
                    }
                }
                edge_node.extend(made);
                let (sm, ss) = (vertex_seam.remove(&merge).expect("seam"), vertex_seam.remove(&split).expect("seam"));
                let (rm, rs) = (seam_root(&mut seams, sm), seam_root(&mut seams, ss));
                if rm != rs {
                    seams[rm].parent = rs;
                }
            }
        }
        web = next;
    }
    if !web.is_empty() {
        return Err(WebError::BoundaryMismatch("closed foam must end at the empty web".into()));
    }
    assemble(&mut f, &mut seams)
}

fn seam_root(seams: &mut [SeamRecord], x: usize) -> usize {
    let mut r = x;
    while seams[r].parent != r {
        r = seams[r].parent;
    }
    seams[x].parent = r;
    r
}

fn assemble(f: &mut Facets, seams: &mut [SeamRecord]) -> Result<ClosedFoam> {
    let mut groups: BTreeMap<usize, (usize, usize, usize)> = BTreeMap::new();
    for k in 0..seams.len() {
        let root = seam_root(seams, k);
        let s = seams[k];
        let triple = (f.find(s.preferred), f.find(s.other), f.find(s.double));
        if let Some(prev) = groups.get(&root) {
            if *prev != triple {
                return Err(WebError::Orientation(format!("seam {root} meets facets {prev:?} and {triple:?}")));
            }
        } else {
            groups.insert(root, triple);
        }
    }
    let roots: Vec<usize> = (0..f.nodes.len()).filter(|&x| f.find(x) == x).collect();
    let mut foam = Gl2Prefoam::new();
    let mut thin_idx = BTreeMap::new();
    let mut double_idx = BTreeMap::new();
    for &r in &roots {
        let n = &f.nodes[r];
        if n.thickness == 1 {
            thin_idx.insert(r, foam.add_thin(0, n.dots));
        } else {
            double_idx.insert(r, foam.add_double(0));
        }
    }
    let mut self_seams = 0;
    for &(p, o, d) in groups.values() {
        if p == o {
            self_seams += 1;
        }
        foam.add_seam(thin_idx[&p], thin_idx[&o], double_idx[&d]);
    }
    for &r in &roots {
        let chi = f.nodes[r].chi;
        let (b, genus) = if f.nodes[r].thickness == 1 {
            let t = &mut foam.thin[thin_idx[&r]];
            (t.boundary as i64, &mut t.genus)
        } else {
            let t = &mut foam.double[double_idx[&r]];
            (t.boundary as i64, &mut t.genus)
        };
        let twice = 2 - b - chi;
        if twice < 0 || twice % 2 != 0 {
            return Err(WebError::Orientation(format!("facet with chi {chi} and {b} boundary circles")));
        }
        *genus = (twice / 2) as u32;
    }
    Ok(ClosedFoam { foam, self_seams })
}

/// Evaluate the closed foam obtained by gluing the movies.
pub fn eval_closed(movies: &[FoamMovie]) -> Result<GroundRingElem> {
    compose_and_close(movies)?.eval()
}
