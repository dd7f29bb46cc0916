//! Random movies for property tests.

use crate::movie::{FoamMovie, Move, MovieBuilder};
use crate::web::{VertexKind, Web};
use rand::seq::SliceRandom;
use rand::Rng;

/// Bounds on the webs a random movie passes through.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub max_edges: usize,
    pub max_thin_components: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_edges: 10, max_thin_components: 2 }
    }
}

/// One random move of a randomly weighted kind; None if the kind has no site.
fn propose<R: Rng>(rng: &mut R, w: &Web) -> Option<Move> {
    let thin: Vec<usize> = w.edges.iter().filter(|(_, e)| e.thickness == 1).map(|(&k, _)| k).collect();
    let double: Vec<usize> = w.edges.iter().filter(|(_, e)| e.thickness == 2).map(|(&k, _)| k).collect();
    let (e, v) = (w.fresh_edge(), w.fresh_vertex());
    let unzips: Vec<(usize, usize)> = w
        .vertices
        .iter()
        .filter(|(_, x)| x.kind == VertexKind::Merge)
        .filter_map(|(&m, x)| w.edges[&x.double].head.map(|s| (m, s)))
        .collect();
    let weights = [2, 1, 1, 1, 3, 2, 5, 2, 2];
    let total: u32 = weights.iter().sum();
    let mut roll = rng.gen_range(0..total);
    let kind = weights.iter().position(|&x| {
        if roll < x {
            true
        } else {
            roll -= x;
            false
        }
    })?;
    Some(match kind {
        0 => Move::BirthThinCircle { edge: e },
        1 => Move::BirthDoubleCircle { edge: e },
        2 => Move::DeathThinCircle { edge: *w.thin_loops().choose(rng)? },
        3 => Move::DeathDoubleCircle { edge: *w.double_loops().choose(rng)? },
        4 => Move::ThinSaddle { a: *thin.choose(rng)?, b: *thin.choose(rng)?, out: [e, e + 1] },
        5 => Move::DoubleSaddle { a: *double.choose(rng)?, b: *double.choose(rng)?, out: [e, e + 1] },
        6 => {
            let (l, r) = (*thin.choose(rng)?, *thin.choose(rng)?);
            Move::Zip { left: l, right: r, merge: v, split: v + 1, double: e, out: [e + 1, e + 2, e + 3, e + 4] }
        }
        7 => {
            let &(merge, split) = unzips.choose(rng)?;
            Move::Unzip { merge, split, out: [e, e + 1] }
        }
        _ => Move::Dot { edge: *thin.choose(rng)? },
    })
}

/// Apply up to `len` random moves starting from `start`, staying inside
/// the limits. Moves that fail (for instance by breaking planarity) are
/// skipped.
pub fn random_movie<R: Rng>(rng: &mut R, start: &Web, len: usize, limits: Limits) -> FoamMovie {
    let mut b = MovieBuilder::new(start);
    for _ in 0..len {
        for _ in 0..64 {
            let Some(mv) = propose(rng, b.web()) else { continue };
            if let Ok(next) = mv.apply(b.web()) {
                if next.edges.len() <= limits.max_edges && next.thin_components() <= limits.max_thin_components {
                    b.push(mv).expect("checked above");
                    break;
                }
            }
        }
    }
    b.finish()
}

/// A random web reached from the empty web.
pub fn random_web<R: Rng>(rng: &mut R, len: usize, limits: Limits) -> Web {
    random_movie(rng, &Web::new(), len, limits).end().expect("valid movie")
}
