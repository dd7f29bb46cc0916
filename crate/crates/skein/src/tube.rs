//! Cutting a tube with two singular edges: the thin digon of a web, times
//! an interval, written through the web with the digon removed.

use crate::error::{Result, SkeinError};
use crate::relation::{Term, Variant};
use coeff_ring::GroundRingElem;
use webs::{FoamMovie, Move, MovieBuilder, VertexKind, Web};

/// Two thin digons joined in a cycle by two double edges.
pub fn digon_ring() -> Web {
    let mut b = MovieBuilder::empty();
    let (a, c) = (b.birth().unwrap(), b.birth().unwrap());
    let (_, _, g1, _) = b.zip(a, c).unwrap();
    let (d, e) = (b.birth().unwrap(), b.birth().unwrap());
    let (_, _, g2, _) = b.zip(d, e).unwrap();
    b.double_saddle(g1, g2).unwrap();
    b.web().clone()
}

/// A split v and a merge u joined by thin edges on both sides, with
/// different double edges: (v, u).
pub fn digon(w: &Web) -> Option<(usize, usize)> {
    for (&v, sv) in &w.vertices {
        if sv.kind != VertexKind::Split {
            continue;
        }
        let Some(u) = w.edges[&sv.left].head else { continue };
        let su = &w.vertices[&u];
        if su.kind == VertexKind::Merge && su.left == sv.left && su.right == sv.right && su.double != sv.double {
            return Some((v, u));
        }
    }
    None
}

/// Removes the digon: a saddle on the two double edges, an unzip and caps
/// on both thin circles. Returns the movie and the (left, right) circles.
fn projection(w: &Web) -> Result<(FoamMovie, [usize; 2])> {
    let (v, u) = digon(w).ok_or_else(|| SkeinError::Unsupported("web without a thin digon".into()))?;
    let mut b = MovieBuilder::new(w);
    b.double_saddle(w.vertices[&u].double, w.vertices[&v].double)?;
    let [l, r] = b.unzip(u, v)?;
    b.death(l)?;
    b.death(r)?;
    Ok((b.finish(), [l, r]))
}

/// Projection then inclusion, with a dot on the bottom circle of side
/// `below` or on the top circle of side `above` (0 left, 1 right).
fn through(w: &Web, below: Option<usize>, above: Option<usize>) -> Result<FoamMovie> {
    let (p, lr) = projection(w)?;
    let inc = p.reverse()?;
    let mut moves = p.moves.clone();
    if let Some(side) = below {
        let pos = moves.len() - 2;
        moves.insert(pos, Move::Dot { edge: lr[side] });
    }
    let mut top = inc.moves.clone();
    if let Some(side) = above {
        top.insert(2, Move::Dot { edge: lr[side] });
    }
    moves.extend(top);
    Ok(FoamMovie::from_moves(w.clone(), moves)?)
}

/// id = F1 - F2 where F1 has a dot on the left thin facet and F2 on the
/// right one, at opposite heights: F1 below when `left_below`.
fn tube_variant(name: &str, w: &Web, left_below: bool) -> Result<Variant> {
    let id = FoamMovie::identity(w);
    let (f1, f2) = if left_below {
        (through(w, Some(0), None)?, through(w, None, Some(1))?)
    } else {
        (through(w, None, Some(0))?, through(w, Some(1), None)?)
    };
    Ok(Variant {
        name: name.to_string(),
        boundary: w.clone(),
        lhs: vec![Term::movie(GroundRingElem::one(), id)],
        rhs: vec![Term::movie(GroundRingElem::one(), f1), Term::movie(GroundRingElem::integer(-1), f2)],
    })
}

/// The digon ring, its mirror image (the opposite orientation of the
/// singular edges) and the dots moved to the other diagonal.
pub fn tube_cut() -> Result<Vec<Variant>> {
    let w = digon_ring();
    Ok(vec![
        tube_variant("left_below", &w, true)?,
        tube_variant("left_above", &w, false)?,
        tube_variant("other_orientation", &w.mirrored(), true)?,
        tube_variant("other_orientation_left_above", &w.mirrored(), false)?,
    ])
}
