//! Modifications of prefoams along proper arcs, and pairs of complementary
//! arcs.
//!
//! An arc in thin facet A joins two distinct seams s1, s2 on the boundary
//! of A. The modification reroutes the seams along the arc: A is cut along
//! it (two boundary circles of A become one), the thin facets across s1
//! and s2 are joined by a band, and so are the double facets. The two
//! seams merge into one. A must be preferred at both seams or at neither.

use crate::error::{Result, SkeinError};
use prefoam::{DoubleFacet, Gl2Prefoam, Seam, ThinFacet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arc {
    pub facet: usize,
    pub s1: usize,
    pub s2: usize,
}

/// Result of a modification with index maps from the old foam.
#[derive(Clone, Debug)]
pub struct Modified {
    pub foam: Gl2Prefoam,
    pub seam_map: Vec<usize>,
    pub thin_map: Vec<usize>,
}

fn other_side(s: &Seam, a: usize) -> Option<(usize, bool)> {
    if s.preferred == a {
        Some((s.other, true))
    } else if s.other == a {
        Some((s.preferred, false))
    } else {
        None
    }
}

/// Join facets `x` and `y` of a list given as (genus, boundary); returns the
/// map from old to new indices. Boundary counts are left to the caller.
fn band<T: Clone>(items: &[T], x: usize, y: usize, join: impl Fn(&T, &T) -> T, self_join: impl Fn(&T) -> T) -> (Vec<T>, Vec<usize>) {
    if x == y {
        let mut v = items.to_vec();
        v[x] = self_join(&items[x]);
        return (v, (0..items.len()).collect());
    }
    let (lo, hi) = (x.min(y), x.max(y));
    let mut out = Vec::new();
    let mut map = Vec::new();
    for (k, it) in items.iter().enumerate() {
        if k == hi {
            map.push(lo);
        } else {
            map.push(out.len());
            out.push(if k == lo { join(&items[lo], &items[hi]) } else { it.clone() });
        }
    }
    (out, map)
}

pub fn modify(f: &Gl2Prefoam, arc: Arc) -> Result<Modified> {
    let Arc { facet: a, s1, s2 } = arc;
    let bad = |m: &str| SkeinError::Modification(m.to_string());
    if s1 == s2 || s1 >= f.seams.len() || s2 >= f.seams.len() {
        return Err(bad("the arc must join two distinct seams"));
    }
    let (b1, pref1) = other_side(&f.seams[s1], a).ok_or_else(|| bad("first endpoint is not on the facet"))?;
    let (b2, pref2) = other_side(&f.seams[s2], a).ok_or_else(|| bad("second endpoint is not on the facet"))?;
    if pref1 != pref2 {
        return Err(bad("double facets at the endpoints point to different sides"));
    }
    if b1 == a || b2 == a {
        return Err(bad("seam with the same facet on both sides"));
    }
    let (d1, d2) = (f.seams[s1].double, f.seams[s2].double);

    // a is cut: two boundary circles become one
    let mut thin = f.thin.clone();
    thin[a].boundary -= 1;
    let (thin, thin_map) = band(
        &thin,
        b1,
        b2,
        |x, y| ThinFacet { id: x.id.clone(), genus: x.genus + y.genus, boundary: x.boundary + y.boundary - 1, dots: x.dots + y.dots },
        |x| ThinFacet { genus: x.genus + 1, boundary: x.boundary - 1, ..x.clone() },
    );
    let (double, double_map) = band(
        &f.double,
        d1,
        d2,
        |x, y| DoubleFacet { id: x.id.clone(), genus: x.genus + y.genus, boundary: x.boundary + y.boundary - 1 },
        |x| DoubleFacet { genus: x.genus + 1, boundary: x.boundary - 1, ..x.clone() },
    );
    let (na, nb) = (thin_map[a], thin_map[b1]);
    let merged = if pref1 {
        Seam { preferred: na, other: nb, double: double_map[d1] }
    } else {
        Seam { preferred: nb, other: na, double: double_map[d1] }
    };
    let mut seams = Vec::new();
    let mut seam_map = Vec::new();
    for (k, s) in f.seams.iter().enumerate() {
        if k == s1.max(s2) {
            seam_map.push(s1.min(s2));
            continue;
        }
        seam_map.push(seams.len());
        seams.push(if k == s1.min(s2) {
            merged
        } else {
            Seam { preferred: thin_map[s.preferred], other: thin_map[s.other], double: double_map[s.double] }
        });
    }
    let mut foam = Gl2Prefoam { thin, double, seams };
    for (k, t) in foam.thin.iter_mut().enumerate() {
        t.id = format!("t{k}");
    }
    for (k, t) in foam.double.iter_mut().enumerate() {
        t.id = format!("d{k}");
    }
    foam.validate()?;
    Ok(Modified { foam, seam_map, thin_map })
}

/// Modify along two arcs in turn; the second arc is given in the indices
/// of the original foam.
pub fn modify_pair(f: &Gl2Prefoam, g1: Arc, g2: Arc) -> Result<Gl2Prefoam> {
    let m1 = modify(f, g1)?;
    let g2 = Arc { facet: m1.thin_map[g2.facet], s1: m1.seam_map[g2.s1], s2: m1.seam_map[g2.s2] };
    Ok(modify(&m1.foam, g2)?.foam)
}

/// A hand-built pair of complementary arcs with its declared sign.
#[derive(Clone, Debug)]
pub struct GammaInstance {
    pub name: String,
    pub foam: Gl2Prefoam,
    pub arcs: [Arc; 2],
    pub sign: i64,
}

/// A thin sphere cut by five parallel seams into regions R0..R5, with a
/// double disk on every seam. The regions alternate in color and in the
/// side their orientation normal points to; the preferred facet at a seam
/// is the region whose normal points toward its double disk. `inside[k]`
/// puts the disk of seam k inside the sphere.
fn striped_sphere(inside: [bool; 5], dots: [u32; 6]) -> Gl2Prefoam {
    let mut f = Gl2Prefoam::new();
    let regions: Vec<usize> = dots.iter().map(|&n| f.add_thin(0, n)).collect();
    for k in 0..5 {
        let d = f.add_double(0);
        // odd regions have inward normals
        let (odd, even) = if k % 2 == 0 { (regions[k + 1], regions[k]) } else { (regions[k], regions[k + 1]) };
        if inside[k] {
            f.add_seam(odd, even, d);
        } else {
            f.add_seam(even, odd, d);
        }
    }
    f
}

/// Arc in R1 from seam 0 to seam 1 and arc in R4 from seam 3 to seam 4.
/// The sign is 1 when all four double disks lie on one side of the sphere.
pub fn gamma_instances() -> Vec<GammaInstance> {
    let arcs = [Arc { facet: 1, s1: 0, s2: 1 }, Arc { facet: 4, s1: 3, s2: 4 }];
    let cases: [(&str, [bool; 5], [u32; 6], i64); 5] = [
        ("all_inside", [true; 5], [0, 1, 0, 0, 0, 0], 1),
        ("all_inside_dotted", [true; 5], [1, 0, 0, 2, 0, 0], 1),
        ("all_outside", [false; 5], [1, 0, 0, 0, 0, 0], 1),
        ("split_sides", [true, true, false, false, false], [0, 1, 0, 0, 0, 0], -1),
        ("split_sides_dotted", [false, false, true, true, true], [2, 0, 0, 0, 0, 0], -1),
    ];
    cases
        .into_iter()
        .map(|(name, inside, dots, sign)| GammaInstance { name: name.to_string(), foam: striped_sphere(inside, dots), arcs, sign })
        .collect()
}
