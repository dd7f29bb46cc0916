//! Reduction of a web to the empty web through isomorphisms and circle caps.

use crate::error::{Result, WebError};
use crate::movie::{FoamMovie, Move, MovieBuilder};
use crate::web::{VertexKind, Web};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepKind {
    /// Cap a vertex-free thin circle; the basis branches on 0 or 1 dot.
    ThinCircle,
    DoubleCircle,
    /// Saddle in a double facet, creating a digon.
    DoubleSaddle,
    /// Unzip an attached double edge and cap the thin circle it leaves.
    Digon,
}

impl StepKind {
    pub fn name(&self) -> &'static str {
        match self {
            StepKind::ThinCircle => "thin_circle",
            StepKind::DoubleCircle => "double_circle",
            StepKind::DoubleSaddle => "double_saddle",
            StepKind::Digon => "digon",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ReductionStep {
    pub kind: StepKind,
    /// Moves of the step; for a thin circle, the undotted cap.
    pub moves: Vec<Move>,
    pub web_after: Web,
    /// Power of rho scaling the reverse cobordism into an inverse, where
    /// one is known in closed form.
    pub rho_power: Option<i32>,
}

#[derive(Clone, Debug)]
pub struct Reduction {
    pub web: Web,
    pub steps: Vec<ReductionStep>,
}

impl Reduction {
    /// Number of thin circles capped, which is the number of thin
    /// components of the web.
    pub fn circles(&self) -> usize {
        self.steps.iter().filter(|s| s.kind == StepKind::ThinCircle).count()
    }

    /// The cap movie from the web to the empty web with the given dots on
    /// the capped circles, in order.
    pub fn cap_movie(&self, dots: &[u32]) -> Result<FoamMovie> {
        let mut moves = Vec::new();
        let mut k = 0;
        for s in &self.steps {
            if s.kind == StepKind::ThinCircle {
                let Move::DeathThinCircle { edge } = s.moves[0] else { unreachable!() };
                for _ in 0..dots[k] {
                    moves.push(Move::Dot { edge });
                }
                k += 1;
            }
            moves.extend(s.moves.iter().cloned());
        }
        FoamMovie::from_moves(self.web.clone(), moves)
    }

    pub fn to_json(&self) -> Value {
        let steps: Vec<Value> = self
            .steps
            .iter()
            .map(|s| json!({"kind": s.kind.name(), "moves": s.moves, "rho_power": s.rho_power, "web_after": s.web_after.to_json()}))
            .collect();
        json!({"web": self.web.to_json(), "steps": steps})
    }
}

/// Find a thin edge v -> u from a split to a merge on the same side at
/// both ends whose double edges differ.
fn saddle_site(w: &Web) -> Option<(usize, usize)> {
    for (&id, e) in &w.edges {
        let (Some(v), Some(u)) = (e.tail, e.head) else { continue };
        if e.thickness != 1 {
            continue;
        }
        let (sv, mu) = (&w.vertices[&v], &w.vertices[&u]);
        let same_side = (sv.left == id && mu.left == id) || (sv.right == id && mu.right == id);
        if same_side && sv.double != mu.double {
            return Some((mu.double, sv.double));
        }
    }
    None
}

/// A double edge m -> s with a thin edge s -> m on one side.
fn digon_site(w: &Web) -> Option<(usize, usize, bool)> {
    for (&m, mv) in &w.vertices {
        if mv.kind != VertexKind::Merge {
            continue;
        }
        let s = w.edges[&mv.double].head?;
        let sv = &w.vertices[&s];
        if sv.left == mv.left {
            return Some((m, s, true));
        }
        if sv.right == mv.right {
            return Some((m, s, false));
        }
    }
    None
}

pub fn reduce_web(w: &Web) -> Result<Reduction> {
    w.validate()?;
    let mut b = MovieBuilder::new(w);
    let mut steps = Vec::new();
    loop {
        let before = b.movie().moves.len();
        let cur = b.web().clone();
        let (kind, rho_power) = if let Some(&e) = cur.thin_loops().first() {
            b.death(e)?;
            (StepKind::ThinCircle, None)
        } else if let Some(&e) = cur.double_loops().first() {
            b.death_double(e)?;
            (StepKind::DoubleCircle, Some(-1))
        } else if let Some((m, s, left)) = digon_site(&cur) {
            let pieces = b.unzip(m, s)?;
            b.death(if left { pieces[0] } else { pieces[1] })?;
            (StepKind::Digon, None)
        } else if let Some((g2, g1)) = saddle_site(&cur) {
            b.double_saddle(g2, g1)?;
            (StepKind::DoubleSaddle, Some(-1))
        } else if cur.is_empty() {
            break;
        } else {
            return Err(WebError::NonReducible(cur.to_json().to_string()));
        };
        steps.push(ReductionStep { kind, moves: b.movie().moves[before..].to_vec(), web_after: b.web().clone(), rho_power });
    }
    Ok(Reduction { web: w.clone(), steps })
}
