//! The fixed closure family. A closure of a boundary web W is a pair of
//! movies (bottom: empty -> W, top: W -> empty).
//!
//! For every W the family contains all pairs (basis foam, dual foam) of the
//! state space of W: dotted cups and caps, and theta-style caps for webs
//! with vertices. A single thin circle also gets genus-adding tubes and
//! cups carrying a seam with either thin side preferred; a single double
//! circle gets a double handle and a double cup whose facet meets a seam.

use crate::error::Result;
use webs::{state_space_basis, Edge, FoamMovie, MovieBuilder, Web};

#[derive(Clone, Debug)]
pub struct Closure {
    pub name: String,
    pub bottom: FoamMovie,
    pub top: FoamMovie,
}

pub fn thin_circle() -> Web {
    Web::circles(1)
}

pub fn double_circle() -> Web {
    let mut w = Web::new();
    w.edges.insert(0, Edge::double());
    w
}

pub(crate) fn keep_as(b: &mut MovieBuilder, edge: usize, to: usize) -> Result<()> {
    if edge != to {
        b.relabel(edge, to)?;
    }
    Ok(())
}

/// Cup with a handle, `dots` dots below the handle.
fn handle_cup(dots: u32) -> Result<FoamMovie> {
    let mut b = MovieBuilder::empty();
    let a = b.birth()?;
    b.dots(a, dots)?;
    let [x, y] = b.saddle(a, a)?;
    let [z, _] = b.saddle(x, y)?;
    keep_as(&mut b, z, 0)?;
    Ok(b.finish())
}

/// Cup with a seam circle on it, bounding a double disk. The kept piece
/// is the preferred side when `keep_preferred`.
fn seam_cup(keep_preferred: bool, dots: u32) -> Result<FoamMovie> {
    let mut b = MovieBuilder::empty();
    let a = b.birth()?;
    let c = b.birth()?;
    b.dots(a, dots)?;
    let (m, s, _, _) = b.zip(a, c)?;
    let [l, r] = b.unzip(m, s)?;
    let (keep, drop) = if keep_preferred { (r, l) } else { (l, r) };
    b.death(drop)?;
    keep_as(&mut b, keep, 0)?;
    Ok(b.finish())
}

fn double_handle_cup() -> Result<FoamMovie> {
    let mut b = MovieBuilder::empty();
    let g = b.birth_double()?;
    let [x, y] = b.double_saddle(g, g)?;
    let [z, _] = b.double_saddle(x, y)?;
    keep_as(&mut b, z, 0)?;
    Ok(b.finish())
}

/// Double cup whose facet also bounds a theta-shaped seam.
fn double_seam_cup(dots: u32) -> Result<FoamMovie> {
    let mut b = MovieBuilder::empty();
    let h = b.birth_double()?;
    let a = b.birth()?;
    let c = b.birth()?;
    b.dots(c, dots)?;
    let (m, s, g, _) = b.zip(a, c)?;
    let [g2, _] = b.double_saddle(g, h)?;
    let [_, loop_] = b.double_saddle(g2, g2)?;
    let [l, r] = b.unzip(m, s)?;
    b.death(l)?;
    if r != l {
        b.death(r)?;
    }
    keep_as(&mut b, loop_, 0)?;
    Ok(b.finish())
}

fn extra_bottoms(w: &Web) -> Result<Vec<(String, FoamMovie)>> {
    let mut out = Vec::new();
    if *w == thin_circle() {
        out.push(("handle".to_string(), handle_cup(0)?));
        out.push(("dotted_handle".to_string(), handle_cup(1)?));
        out.push(("seam_preferred".to_string(), seam_cup(true, 0)?));
        out.push(("seam_other".to_string(), seam_cup(false, 1)?));
    } else if *w == double_circle() {
        out.push(("double_handle".to_string(), double_handle_cup()?));
        out.push(("double_seam".to_string(), double_seam_cup(0)?));
        out.push(("double_seam_dotted".to_string(), double_seam_cup(2)?));
    }
    Ok(out)
}

fn dots_name(prefix: &str, d: &[u32]) -> String {
    let s: String = d.iter().map(|k| k.to_string()).collect();
    if s.is_empty() {
        prefix.to_string()
    } else {
        format!("{prefix}{s}")
    }
}

/// All bottoms against all tops.
pub fn closure_family(w: &Web) -> Result<Vec<Closure>> {
    let st = state_space_basis(w)?;
    let mut bottoms: Vec<(String, FoamMovie)> =
        st.basis.iter().zip(&st.dots).map(|(m, d)| (dots_name("cup", d), m.clone())).collect();
    let mut tops: Vec<(String, FoamMovie)> =
        st.duals.iter().zip(&st.dots).map(|(m, d)| (dots_name("cap", d), m.clone())).collect();
    for (name, m) in extra_bottoms(w)? {
        tops.push((format!("{name}_top"), m.reverse()?));
        bottoms.push((name, m));
    }
    let mut out = Vec::new();
    for (bn, b) in &bottoms {
        for (tn, t) in &tops {
            out.push(Closure { name: format!("{bn}/{tn}"), bottom: b.clone(), top: t.clone() });
        }
    }
    Ok(out)
}
