//! Skein relations as lists of (coefficient, patch) on each side.

use crate::closure::{double_circle, keep_as, thin_circle};
use crate::error::{Result, SkeinError};
use crate::gamma::{gamma_instances, modify_pair};
use crate::tube;
use coeff_ring::GroundRingElem;
use prefoam::Gl2Prefoam;
use serde::{Deserialize, Serialize};
use webs::corpus::{figure_web, theta_movie, theta_web, two_rungs};
use webs::{close, state_space_basis, FoamMovie, MovieBuilder, Web};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RelationId {
    SingularNeckCut,
    SingularNeckCutReversed,
    CancelDoubleDisks,
    NeckCut,
    NeckCutTop,
    DiskFlip,
    OrientationReversal,
    DotReduction,
    DoubleNeckCut,
    DotMigrationE1,
    DotMigrationE2,
    TubeCut,
    GammaPair,
}

impl RelationId {
    pub const ALL: [RelationId; 13] = [
        RelationId::SingularNeckCut,
        RelationId::SingularNeckCutReversed,
        RelationId::CancelDoubleDisks,
        RelationId::NeckCut,
        RelationId::NeckCutTop,
        RelationId::DiskFlip,
        RelationId::OrientationReversal,
        RelationId::DotReduction,
        RelationId::DoubleNeckCut,
        RelationId::DotMigrationE1,
        RelationId::DotMigrationE2,
        RelationId::TubeCut,
        RelationId::GammaPair,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            RelationId::SingularNeckCut => "SingularNeckCut",
            RelationId::SingularNeckCutReversed => "SingularNeckCutReversed",
            RelationId::CancelDoubleDisks => "CancelDoubleDisks",
            RelationId::NeckCut => "NeckCut",
            RelationId::NeckCutTop => "NeckCutTop",
            RelationId::DiskFlip => "DiskFlip",
            RelationId::OrientationReversal => "OrientationReversal",
            RelationId::DotReduction => "DotReduction",
            RelationId::DoubleNeckCut => "DoubleNeckCut",
            RelationId::DotMigrationE1 => "DotMigrationE1",
            RelationId::DotMigrationE2 => "DotMigrationE2",
            RelationId::TubeCut => "TubeCut",
            RelationId::GammaPair => "GammaPair",
        }
    }

    /// Case-insensitive, ignoring underscores and dashes.
    pub fn parse(s: &str) -> Result<RelationId> {
        let key = |t: &str| t.chars().filter(|c| c.is_alphanumeric()).collect::<String>().to_lowercase();
        RelationId::ALL.into_iter().find(|r| key(r.name()) == key(s)).ok_or_else(|| SkeinError::UnknownRelation(s.to_string()))
    }
}

/// A foam with the boundary of its variant: a movie, or for closed
/// variants possibly a prefoam given directly.
#[derive(Clone, Debug)]
pub enum Patch {
    Movie(FoamMovie),
    Prefoam(Gl2Prefoam),
}

#[derive(Clone, Debug)]
pub struct Term {
    pub coeff: GroundRingElem,
    pub patch: Patch,
}

impl Term {
    pub fn movie(coeff: GroundRingElem, m: FoamMovie) -> Term {
        Term { coeff, patch: Patch::Movie(m) }
    }
}

/// One instance of a relation: both sides run from `boundary` to itself.
#[derive(Clone, Debug)]
pub struct Variant {
    pub name: String,
    pub boundary: Web,
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
}

#[derive(Clone, Debug)]
pub struct SkeinRelation {
    pub id: RelationId,
    pub variants: Vec<Variant>,
}

fn one() -> GroundRingElem {
    GroundRingElem::one()
}

fn minus_one() -> GroundRingElem {
    GroundRingElem::integer(-1)
}

/// Movie on the thin circle 0 built by `f`, ending on the circle 0 again.
fn on_circle(f: impl FnOnce(&mut MovieBuilder, usize) -> Result<usize>) -> Result<FoamMovie> {
    let mut b = MovieBuilder::new(&thin_circle());
    let e = f(&mut b, 0)?;
    keep_as(&mut b, e, 0)?;
    Ok(b.finish())
}

/// A seam across the tube with a double disk; the preferred thin side is
/// the upper one when `preferred_above`.
fn seam(b: &mut MovieBuilder, e: usize, preferred_above: bool) -> Result<usize> {
    let c = b.birth()?;
    let (m, s, _, _) = if preferred_above { b.zip(e, c)? } else { b.zip(c, e)? };
    let [l, r] = b.unzip(m, s)?;
    Ok(if preferred_above {
        b.death(l)?;
        r
    } else {
        b.death(r)?;
        l
    })
}

/// A thin disk and a double disk glued along a seam on the sheet; the
/// preferred side is the disk when `disk_preferred`.
fn bubble(b: &mut MovieBuilder, e: usize, disk_preferred: bool) -> Result<usize> {
    let c = b.birth()?;
    let (m, s, _, _) = if disk_preferred { b.zip(e, c)? } else { b.zip(c, e)? };
    let [l, r] = b.unzip(m, s)?;
    Ok(if disk_preferred {
        b.death(r)?;
        l
    } else {
        b.death(l)?;
        r
    })
}

/// Cap the tube and cup it again, with dots below and above the cut.
fn cut(b: &mut MovieBuilder, e: usize, below: u32, above: u32) -> Result<usize> {
    b.dots(e, below)?;
    b.death(e)?;
    let c = b.birth()?;
    b.dots(c, above)?;
    Ok(c)
}

fn dots(b: &mut MovieBuilder, e: usize, n: u32) -> Result<usize> {
    b.dots(e, n)?;
    Ok(e)
}

fn variant(name: &str, boundary: Web, lhs: Vec<Term>, rhs: Vec<Term>) -> Variant {
    Variant { name: name.to_string(), boundary, lhs, rhs }
}

fn singular_neck_cut(preferred_above: bool) -> Result<Vec<Variant>> {
    // the dot goes on the side that is not preferred, with a plus sign
    let (plus, minus) = if preferred_above { ((1, 0), (0, 1)) } else { ((0, 1), (1, 0)) };
    let mut out = Vec::new();
    for extra in [0, 1] {
        let lhs = on_circle(|b, e| {
            let e = dots(b, e, extra)?;
            seam(b, e, preferred_above)
        })?;
        let p = on_circle(|b, e| cut(b, e, plus.0 + extra, plus.1))?;
        let m = on_circle(|b, e| cut(b, e, minus.0 + extra, minus.1))?;
        let name = if extra == 0 { "plain" } else { "dotted_below" };
        out.push(variant(name, thin_circle(), vec![Term::movie(one(), lhs)], vec![Term::movie(one(), p), Term::movie(minus_one(), m)]));
    }
    Ok(out)
}

fn cancel_double_disks() -> Result<Vec<Variant>> {
    let mut out = Vec::new();
    for mid in [0, 1] {
        // the dot sits below both seams; the middle annulus has the other color
        let lhs = on_circle(|b, e| {
            let e = dots(b, e, mid)?;
            let e = seam(b, e, true)?;
            seam(b, e, false)
        })?;
        let rhs = on_circle(|b, e| dots(b, e, mid))?;
        let name = if mid == 0 { "middle_preferred" } else { "middle_preferred_dotted_below" };
        out.push(variant(name, thin_circle(), vec![Term::movie(one(), lhs)], vec![Term::movie(GroundRingElem::rho(), rhs)]));
    }
    Ok(out)
}

/// Tube = rho^{-1} (cut with a dot on one side minus the other), with the
/// double disks kept below (`disks_below`) or above the cut.
fn neck_cut(disks_below: bool) -> Result<Vec<Variant>> {
    let inv = GroundRingElem::rho_pow(-1);
    let tube = FoamMovie::identity(&thin_circle());
    let (p, m) = if disks_below {
        (
            on_circle(|b, e| {
                let e = seam(b, e, true)?;
                cut(b, e, 0, 1)
            })?,
            on_circle(|b, e| {
                let e = seam(b, e, true)?;
                cut(b, e, 1, 0)
            })?,
        )
    } else {
        (
            on_circle(|b, e| {
                let e = cut(b, e, 1, 0)?;
                seam(b, e, false)
            })?,
            on_circle(|b, e| {
                let e = cut(b, e, 0, 1)?;
                seam(b, e, false)
            })?,
        )
    };
    Ok(vec![variant(
        "tube",
        thin_circle(),
        vec![Term::movie(one(), tube)],
        vec![Term::movie(inv.clone(), p), Term::movie(inv.neg(), m)],
    )])
}

fn disk_flip() -> Result<Vec<Variant>> {
    let mut out = Vec::new();
    for (name, pref, d) in [("disk_preferred", true, 0), ("sheet_preferred_dotted", false, 1)] {
        let lhs = on_circle(|b, e| {
            let e = dots(b, e, d)?;
            bubble(b, e, pref)
        })?;
        let rhs = on_circle(|b, e| {
            let e = dots(b, e, d)?;
            bubble(b, e, !pref)
        })?;
        out.push(variant(name, thin_circle(), vec![Term::movie(one(), lhs)], vec![Term::movie(minus_one(), rhs)]));
    }
    Ok(out)
}

/// Closed movies with seams, for the orientation reversal check.
fn reversal_samples() -> Result<Vec<(String, FoamMovie)>> {
    let mut out = vec![("theta_2_0".to_string(), theta_movie(2, 0)?), ("theta_3_1".to_string(), theta_movie(3, 1)?)];
    for (name, w) in [("theta_web", theta_web()), ("two_rungs", two_rungs()), ("figure", figure_web()), ("tube_web", tube::digon_ring())] {
        let st = state_space_basis(&w)?;
        // the last basis foam against the first dual, a nonzero pairing
        let n = st.rank();
        let (i, j) = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| i != j && !st.gram[i][j].is_zero()).unwrap_or((0, 0));
        out.push((format!("{name}_{j}_{i}"), st.basis[j].then(&st.duals[i])?));
    }
    Ok(out)
}

fn orientation_reversal() -> Result<Vec<Variant>> {
    let mut out = Vec::new();
    for (name, m) in reversal_samples()? {
        let k = close(&m)?.foam.seams.len();
        let sign = if k % 2 == 0 { one() } else { minus_one() };
        out.push(variant(&name, Web::new(), vec![Term::movie(one(), m.mirrored())], vec![Term::movie(sign, m)]));
    }
    Ok(out)
}

fn dot_reduction() -> Result<Vec<Variant>> {
    let mut out = Vec::new();
    for n in [0, 2, 4] {
        let lhs = on_circle(|b, e| dots(b, e, n + 2))?;
        let r1 = on_circle(|b, e| dots(b, e, n + 1))?;
        let r0 = on_circle(|b, e| dots(b, e, n))?;
        out.push(variant(
            &format!("dots_{}", n + 2),
            thin_circle(),
            vec![Term::movie(one(), lhs)],
            vec![Term::movie(GroundRingElem::e1(), r1), Term::movie(GroundRingElem::e2().neg(), r0)],
        ));
    }
    let lhs = on_circle(|b, e| {
        let e = seam(b, e, true)?;
        dots(b, e, 2)
    })?;
    let r1 = on_circle(|b, e| {
        let e = seam(b, e, true)?;
        dots(b, e, 1)
    })?;
    let r0 = on_circle(|b, e| seam(b, e, true))?;
    out.push(variant(
        "dots_above_seam",
        thin_circle(),
        vec![Term::movie(one(), lhs)],
        vec![Term::movie(GroundRingElem::e1(), r1), Term::movie(GroundRingElem::e2().neg(), r0)],
    ));
    Ok(out)
}

fn double_neck_cut() -> Result<Vec<Variant>> {
    let mut b = MovieBuilder::new(&double_circle());
    b.death_double(0)?;
    let g = b.birth_double()?;
    keep_as(&mut b, g, 0)?;
    let cut = b.finish();
    Ok(vec![variant(
        "double_tube",
        double_circle(),
        vec![Term::movie(one(), cut)],
        vec![Term::movie(GroundRingElem::rho(), FoamMovie::identity(&double_circle()))],
    )])
}

fn dot_migration(e2: bool) -> Result<Vec<Variant>> {
    let mut out = Vec::new();
    for pref in [true, false] {
        let s = on_circle(|b, e| seam(b, e, pref))?;
        let below = on_circle(|b, e| {
            let e = dots(b, e, 1)?;
            seam(b, e, pref)
        })?;
        let above = on_circle(|b, e| {
            let e = seam(b, e, pref)?;
            dots(b, e, 1)
        })?;
        let both = on_circle(|b, e| {
            let e = dots(b, e, 1)?;
            let e = seam(b, e, pref)?;
            dots(b, e, 1)
        })?;
        let name = if pref { "preferred_above" } else { "preferred_below" };
        out.push(if e2 {
            variant(name, thin_circle(), vec![Term::movie(one(), both)], vec![Term::movie(GroundRingElem::e2(), s)])
        } else {
            variant(
                name,
                thin_circle(),
                vec![Term::movie(one(), below), Term::movie(one(), above)],
                vec![Term::movie(GroundRingElem::e1(), s)],
            )
        });
    }
    Ok(out)
}

fn gamma_pair() -> Result<Vec<Variant>> {
    let mut out = Vec::new();
    for g in gamma_instances() {
        let f2 = modify_pair(&g.foam, g.arcs[0], g.arcs[1])?;
        let c = GroundRingElem::rho().scale(g.sign);
        out.push(variant(
            &g.name,
            Web::new(),
            vec![Term { coeff: one(), patch: Patch::Prefoam(g.foam) }],
            vec![Term { coeff: c, patch: Patch::Prefoam(f2) }],
        ));
    }
    Ok(out)
}

pub fn relation(id: RelationId) -> Result<SkeinRelation> {
    let variants = match id {
        RelationId::SingularNeckCut => singular_neck_cut(true)?,
        RelationId::SingularNeckCutReversed => singular_neck_cut(false)?,
        RelationId::CancelDoubleDisks => cancel_double_disks()?,
        RelationId::NeckCut => neck_cut(true)?,
        RelationId::NeckCutTop => neck_cut(false)?,
        RelationId::DiskFlip => disk_flip()?,
        RelationId::OrientationReversal => orientation_reversal()?,
        RelationId::DotReduction => dot_reduction()?,
        RelationId::DoubleNeckCut => double_neck_cut()?,
        RelationId::DotMigrationE1 => dot_migration(false)?,
        RelationId::DotMigrationE2 => dot_migration(true)?,
        RelationId::TubeCut => tube::tube_cut()?,
        RelationId::GammaPair => gamma_pair()?,
    };
    Ok(SkeinRelation { id, variants })
}

pub fn all_relations() -> Result<Vec<SkeinRelation>> {
    RelationId::ALL.into_iter().map(relation).collect()
}
