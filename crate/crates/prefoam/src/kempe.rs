//! Kempe moves on GL(N) colorings and the ratio of p-factors they produce.

use crate::error::{FoamError, Result};
use crate::gln::{GlNColoring, GlNPrefoam};
use coeff_ring::{CoeffPoly, PSeries, TruncSeries};
use serde_json::{json, Value};
use std::collections::BTreeSet;

/// Facets of F_ij(c) connected to `seed` through seams.
pub fn kempe_component(f: &GlNPrefoam, c: &GlNColoring, seed: usize, i: usize, j: usize) -> Result<BTreeSet<usize>> {
    let (bi, bj) = (1u32 << i, 1u32 << j);
    let on = |v: usize| (c.subset[v] & bi != 0) != (c.subset[v] & bj != 0);
    if seed >= f.facets.len() || !on(seed) {
        return Err(FoamError::BadColoring(format!("facet {seed} is not on the ({}, {}) surface", i + 1, j + 1)));
    }
    let mut comp = BTreeSet::from([seed]);
    let mut stack = vec![seed];
    while let Some(v) = stack.pop() {
        for s in &f.seams {
            let three = [s.a, s.b, s.ab];
            if !three.contains(&v) {
                continue;
            }
            for w in three {
                if on(w) && comp.insert(w) {
                    stack.push(w);
                }
            }
        }
    }
    Ok(comp)
}

/// Swap colors i and j on the given facets.
pub fn kempe_move(c: &GlNColoring, facets: &BTreeSet<usize>, i: usize, j: usize) -> GlNColoring {
    let mut out = c.clone();
    for &v in facets {
        let s = out.subset[v];
        let (hi, hj) = (s >> i & 1, s >> j & 1);
        out.subset[v] = (s & !(1 << i) & !(1 << j)) | (hj << i) | (hi << j);
    }
    out
}

/// prod_{i<j} p_ij^{chi_i/2} p_ji^{chi_j/2} for a coloring.
pub fn p_factor(f: &GlNPrefoam, c: &GlNColoring, p: &PSeries, d: u32) -> Result<TruncSeries> {
    let data = f.coloring_data(c);
    let table = p.table(f.n, d);
    let mut t = TruncSeries::one(f.n, d);
    for i in 0..f.n {
        for j in i + 1..f.n {
            for (u, v, chi) in [(i, j, data.chi[i]), (j, i, data.chi[j])] {
                if chi % 2 != 0 {
                    return Err(FoamError::OddEuler { surface: format!("F_{}", u + 1), value: chi });
                }
                if chi != 0 {
                    t = t.mul(&table[&(u, v)].pow_int(chi / 2)?)?;
                }
            }
        }
    }
    Ok(t)
}

#[derive(Clone, Debug)]
pub struct KempeReport {
    pub colors: (usize, usize),
    pub components: Vec<BTreeSet<usize>>,
    /// p(c') / p(c) after moving all listed components.
    pub ratio: TruncSeries,
    pub checks: Vec<(String, bool)>,
}

impl KempeReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.1)
    }

    pub fn first_failure(&self) -> Option<&str> {
        self.checks.iter().find(|c| !c.1).map(|c| c.0.as_str())
    }

    pub fn to_json(&self) -> Value {
        let comps: Vec<Vec<usize>> = self.components.iter().map(|c| c.iter().copied().collect()).collect();
        let checks: Vec<Value> = self.checks.iter().map(|(n, ok)| json!({"check": n, "passed": ok})).collect();
        json!({
            "colors": [self.colors.0 + 1, self.colors.1 + 1],
            "components": comps,
            "ratio": self.ratio.to_string(),
            "passed": self.passed(),
            "checks": checks,
        })
    }
}

/// Move the components of F_ij(c) containing the seed facets and check
/// that the ratio r = p(c')/p(c) is 1 + O(x), satisfies r * s(r) = 1 for
/// the transposition s of x_i and x_j, is 1 mod (x_i - x_j), and, for
/// several components, is the product of the single-component ratios.
pub fn kempe_ratio_check(
    f: &GlNPrefoam,
    c: &GlNColoring,
    seeds: &[usize],
    colors: (usize, usize),
    p: &PSeries,
    d: u32,
) -> Result<KempeReport> {
    let (i, j) = colors;
    if i == j || i >= f.n || j >= f.n {
        return Err(FoamError::BadColoring(format!("color pair ({}, {})", i + 1, j + 1)));
    }
    if !f.is_coloring(c) {
        return Err(FoamError::BadColoring("flow condition fails".into()));
    }
    let mut components: Vec<BTreeSet<usize>> = Vec::new();
    for &s in seeds {
        let comp = kempe_component(f, c, s, i, j)?;
        if !components.contains(&comp) {
            components.push(comp);
        }
    }
    let all: BTreeSet<usize> = components.iter().flatten().copied().collect();
    let moved = kempe_move(c, &all, i, j);
    let base = p_factor(f, c, p, d)?;
    let base_inv = base.inverse()?;
    let ratio = p_factor(f, &moved, p, d)?.mul(&base_inv)?;

    let mut checks = Vec::new();
    checks.push(("moved coloring satisfies the flow condition".to_string(), f.is_coloring(&moved)));
    let one = TruncSeries::one(f.n, d);
    checks.push(("ratio starts with 1".to_string(), ratio.coeff(&vec![0; f.n]) == CoeffPoly::one()));
    let mut perm: Vec<usize> = (0..f.n).collect();
    perm.swap(i, j);
    let sigma = ratio.permute(&perm);
    checks.push(("ratio times its transpose is 1".to_string(), sigma.mul(&ratio)?.eq_valid(&one)));
    let (lo, hi) = (i.min(j), i.max(j));
    checks.push((format!("ratio is 1 mod (x{} - x{})", lo + 1, hi + 1), ratio.sub(&one)?.divide_exact(lo, hi, 1).is_ok()));
    if components.len() > 1 {
        let mut prod = one.clone();
        for comp in &components {
            let single = p_factor(f, &kempe_move(c, comp, i, j), p, d)?.mul(&base_inv)?;
            prod = prod.mul(&single)?;
        }
        checks.push(("ratio is multiplicative over components".to_string(), prod.eq_valid(&ratio)));
    }
    Ok(KempeReport { colors, components, ratio, checks })
}
