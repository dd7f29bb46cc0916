//! Random well-formed prefoams for property tests.

use crate::gl2::Gl2Prefoam;
use crate::gln::GlNPrefoam;
use rand::Rng;

/// A GL(2) prefoam with at most `max_facets` facets, genus <= 2 and at most
/// 2 dots per thin facet. Seam graphs that are not bipartite are resampled.
pub fn random_gl2<R: Rng>(rng: &mut R, max_facets: usize) -> Gl2Prefoam {
    assert!(max_facets >= 1);
    loop {
        let total = rng.gen_range(1..=max_facets);
        let n_thin = rng.gen_range(0..=total);
        let n_double = total - n_thin;
        let mut f = Gl2Prefoam::new();
        for _ in 0..n_thin {
            f.add_thin(rng.gen_range(0..=2), rng.gen_range(0..=2));
        }
        for _ in 0..n_double {
            f.add_double(rng.gen_range(0..=2));
        }
        if n_thin >= 2 && n_double >= 1 {
            for _ in 0..rng.gen_range(0..=5) {
                let a = rng.gen_range(0..n_thin);
                let mut b = rng.gen_range(0..n_thin - 1);
                if b >= a {
                    b += 1;
                }
                f.add_seam(a, b, rng.gen_range(0..n_double));
            }
        }
        if f.colorings().is_ok() {
            return f;
        }
    }
}

/// A GL(N) prefoam with at most `max_facets` facets and at least one
/// coloring. Seams merge facets of thickness a and b into one of a + b.
pub fn random_gln<R: Rng>(rng: &mut R, n: usize, max_facets: usize) -> GlNPrefoam {
    assert!(n >= 2 && max_facets >= 1);
    loop {
        let total = rng.gen_range(1..=max_facets);
        let mut f = GlNPrefoam::new(n);
        for _ in 0..total {
            let t = rng.gen_range(1..=n as u32);
            let dec: Vec<u32> = (0..t).map(|k| if k == 0 { rng.gen_range(0..=2) } else { rng.gen_range(0..=1) }).collect();
            f.add_facet(t, rng.gen_range(0..=2), dec);
        }
        for _ in 0..rng.gen_range(0..=5) {
            let a = rng.gen_range(0..total);
            let b = rng.gen_range(0..total);
            let want = f.facets[a].thickness + f.facets[b].thickness;
            let targets: Vec<usize> = (0..total).filter(|&v| v != a && v != b && f.facets[v].thickness == want).collect();
            if a == b || targets.is_empty() {
                continue;
            }
            let ab = targets[rng.gen_range(0..targets.len())];
            f.add_seam(a, b, ab, rng.gen_bool(0.5));
        }
        match f.colorings() {
            Ok(c) if !c.is_empty() => return f,
            _ => {}
        }
    }
}
