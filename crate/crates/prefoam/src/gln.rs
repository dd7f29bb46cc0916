//! GL(N) prefoams without singular vertices: facets of thickness 1..N glued
//! along seams where thicknesses a and b merge into a + b.

use crate::error::{FoamError, Result};
use crate::gl2::{euler, Gl2Prefoam};
use coeff_ring::{CoeffPoly, MPoly, PSeries, TruncSeries};
use num_bigint::BigInt;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlNFacet {
    pub id: String,
    pub thickness: u32,
    pub genus: u32,
    pub boundary: u32,
    /// Exponents of e_1, ..., e_thickness in the facet's own variables.
    pub decoration: Vec<u32>,
}

/// Facets a and b merge into ab. The flag fixes the cyclic order of the
/// three facets relative to the seam orientation: for colors i < j split
/// between a and b, the seam is positive iff (i in c(a)) xor (flag = false).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GlNSeam {
    pub a: usize,
    pub b: usize,
    pub ab: usize,
    pub flag: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlNPrefoam {
    pub n: usize,
    pub facets: Vec<GlNFacet>,
    pub seams: Vec<GlNSeam>,
}

/// Color subsets as bitmasks: bit k stands for color k + 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GlNColoring {
    pub subset: Vec<u32>,
}

impl GlNColoring {
    pub fn colors_of(&self, facet: usize) -> Vec<usize> {
        (0..32).filter(|k| self.subset[facet] & (1 << k) != 0).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignRule {
    /// theta+ + sum_j (j - 1) chi_j / 2, used by the deformed evaluation.
    Deformed,
    /// theta+ + sum_j j chi_j / 2, the undeformed convention.
    RobertWagner,
}

/// Per-coloring quantities, colors 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlNColoringData {
    pub chi: Vec<i64>,
    /// chi(F_ij) for i < j, keyed (i, j).
    pub chi_pair: BTreeMap<(usize, usize), i64>,
    pub theta_plus: u32,
}

impl GlNColoringData {
    pub fn sign(&self, rule: SignRule) -> Result<bool> {
        let mut s = self.theta_plus as i64;
        for (j, &c) in self.chi.iter().enumerate() {
            let w = match rule {
                SignRule::Deformed => j as i64,
                SignRule::RobertWagner => j as i64 + 1,
            };
            s += w * half(c, &format!("F_{}", j + 1))?;
        }
        Ok(s.rem_euclid(2) == 1)
    }
}

fn half(value: i64, surface: &str) -> Result<i64> {
    if value % 2 != 0 {
        return Err(FoamError::OddEuler { surface: surface.into(), value });
    }
    Ok(value / 2)
}

impl GlNPrefoam {
    pub fn new(n: usize) -> Self {
        GlNPrefoam { n, facets: Vec::new(), seams: Vec::new() }
    }

    pub fn add_facet(&mut self, thickness: u32, genus: u32, decoration: Vec<u32>) -> usize {
        let mut decoration = decoration;
        decoration.resize(thickness as usize, 0);
        let id = format!("f{}", self.facets.len());
        self.facets.push(GlNFacet { id, thickness, genus, boundary: 0, decoration });
        self.facets.len() - 1
    }

    pub fn add_seam(&mut self, a: usize, b: usize, ab: usize, flag: bool) -> usize {
        for v in [a, b, ab] {
            self.facets[v].boundary += 1;
        }
        self.seams.push(GlNSeam { a, b, ab, flag });
        self.seams.len() - 1
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n > 31 {
            return Err(FoamError::invalid("foam", format!("N = {} out of range", self.n)));
        }
        let mut ids = std::collections::BTreeSet::new();
        let mut inc = vec![0u32; self.facets.len()];
        for f in &self.facets {
            if !ids.insert(&f.id) {
                return Err(FoamError::invalid(&f.id, "duplicate id"));
            }
            if f.thickness == 0 || f.thickness as usize > self.n {
                return Err(FoamError::invalid(&f.id, format!("thickness {} outside 1..{}", f.thickness, self.n)));
            }
            if f.decoration.len() > f.thickness as usize {
                return Err(FoamError::invalid(&f.id, "decoration longer than thickness"));
            }
        }
        for (k, s) in self.seams.iter().enumerate() {
            if [s.a, s.b, s.ab].iter().any(|&v| v >= self.facets.len()) {
                return Err(FoamError::invalid(&format!("seam {k}"), "refers to a missing facet"));
            }
            if s.a == s.b || s.a == s.ab || s.b == s.ab {
                return Err(FoamError::invalid(&format!("seam {k}"), "repeats a facet"));
            }
            let (ta, tb, tab) = (self.facets[s.a].thickness, self.facets[s.b].thickness, self.facets[s.ab].thickness);
            if ta + tb != tab {
                return Err(FoamError::invalid(&self.facets[s.ab].id, format!("thickness {tab} != {ta} + {tb} at seam {k}")));
            }
            inc[s.a] += 1;
            inc[s.b] += 1;
            inc[s.ab] += 1;
        }
        for (f, &n) in self.facets.iter().zip(&inc) {
            if f.boundary != n {
                return Err(FoamError::invalid(&f.id, format!("boundary count {} but {} seam incidences", f.boundary, n)));
            }
        }
        Ok(())
    }

    pub fn is_coloring(&self, c: &GlNColoring) -> bool {
        c.subset.len() == self.facets.len()
            && self.facets.iter().zip(&c.subset).all(|(f, &s)| s.count_ones() == f.thickness && s >> self.n == 0)
            && self.seams.iter().all(|s| {
                let (a, b, ab) = (c.subset[s.a], c.subset[s.b], c.subset[s.ab]);
                a & b == 0 && a | b == ab
            })
    }

    /// All colorings satisfying the flow condition, by backtracking in
    /// seam-adjacency order.
    pub fn colorings(&self) -> Result<Vec<GlNColoring>> {
        self.validate()?;
        let nf = self.facets.len();
        let mut seams_of = vec![Vec::new(); nf];
        for (k, s) in self.seams.iter().enumerate() {
            for v in [s.a, s.b, s.ab] {
                seams_of[v].push(k);
            }
        }
        // visit facets so that seam neighbours come early
        let mut order = Vec::with_capacity(nf);
        let mut placed = vec![false; nf];
        for start in 0..nf {
            if placed[start] {
                continue;
            }
            placed[start] = true;
            let mut head = order.len();
            order.push(start);
            while head < order.len() {
                let v = order[head];
                head += 1;
                for &k in &seams_of[v] {
                    let s = self.seams[k];
                    for w in [s.a, s.b, s.ab] {
                        if !placed[w] {
                            placed[w] = true;
                            order.push(w);
                        }
                    }
                }
            }
        }
        let subsets: Vec<Vec<u32>> = (0..=self.n as u32)
            .map(|t| (0u32..(1 << self.n)).filter(|m| m.count_ones() == t).collect())
            .collect();
        let mut assign: Vec<Option<u32>> = vec![None; nf];
        let mut out = Vec::new();
        self.backtrack(0, &order, &seams_of, &subsets, &mut assign, &mut out);
        Ok(out)
    }

    fn backtrack(
        &self,
        pos: usize,
        order: &[usize],
        seams_of: &[Vec<usize>],
        subsets: &[Vec<u32>],
        assign: &mut Vec<Option<u32>>,
        out: &mut Vec<GlNColoring>,
    ) {
        if pos == order.len() {
            out.push(GlNColoring { subset: assign.iter().map(|s| s.unwrap()).collect() });
            return;
        }
        let v = order[pos];
        for &m in &subsets[self.facets[v].thickness as usize] {
            assign[v] = Some(m);
            let ok = seams_of[v].iter().all(|&k| {
                let s = self.seams[k];
                match (assign[s.a], assign[s.b], assign[s.ab]) {
                    (Some(a), Some(b), Some(ab)) => a & b == 0 && a | b == ab,
                    (Some(a), Some(b), None) => a & b == 0,
                    (Some(a), None, Some(ab)) | (None, Some(a), Some(ab)) => a & !ab == 0,
                    _ => true,
                }
            });
            if ok {
                self.backtrack(pos + 1, order, seams_of, subsets, assign, out);
            }
        }
        assign[v] = None;
    }

    pub fn coloring_data(&self, c: &GlNColoring) -> GlNColoringData {
        let n = self.n;
        let mut chi = vec![0i64; n];
        let mut chi_both: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for (f, &s) in self.facets.iter().zip(&c.subset) {
            let e = euler(f.genus, f.boundary);
            for i in 0..n {
                if s & (1 << i) != 0 {
                    chi[i] += e;
                    for j in i + 1..n {
                        if s & (1 << j) != 0 {
                            *chi_both.entry((i, j)).or_insert(0) += e;
                        }
                    }
                }
            }
        }
        let mut chi_pair = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..n {
                let both = chi_both.get(&(i, j)).copied().unwrap_or(0);
                chi_pair.insert((i, j), chi[i] + chi[j] - 2 * both);
            }
        }
        let mut theta_plus = 0;
        for s in &self.seams {
            let (a, b) = (c.subset[s.a], c.subset[s.b]);
            for i in 0..n {
                for j in i + 1..n {
                    let split = (a >> i & 1 == 1 && b >> j & 1 == 1) || (b >> i & 1 == 1 && a >> j & 1 == 1);
                    if split && ((a >> i & 1 == 1) != !s.flag) {
                        theta_plus += 1;
                    }
                }
            }
        }
        GlNColoringData { chi, chi_pair, theta_plus }
    }

    /// sum_i chi_i(c), the same for every coloring.
    pub fn chi_total(&self) -> i64 {
        self.facets.iter().map(|f| f.thickness as i64 * euler(f.genus, f.boundary)).sum()
    }

    /// Exponent of e_k in variables {x_i : i in subset}, as a polynomial in n variables.
    fn decoration_poly(&self, facet: usize, subset: u32) -> MPoly {
        let vars: Vec<usize> = (0..self.n).filter(|i| subset & (1 << i) != 0).collect();
        let mut out = MPoly::one(self.n);
        for (k, &a) in self.facets[facet].decoration.iter().enumerate() {
            if a > 0 {
                out = out.mul(&elementary(self.n, &vars, k + 1).pow(a));
            }
        }
        out
    }

    /// prod_f P_f(c).
    pub fn decoration_value(&self, c: &GlNColoring) -> MPoly {
        let mut out = MPoly::one(self.n);
        for (v, &s) in c.subset.iter().enumerate() {
            if self.facets[v].decoration.iter().any(|&a| a > 0) {
                out = out.mul(&self.decoration_poly(v, s));
            }
        }
        out
    }

    /// The same foam with every seam flag flipped.
    pub fn reversed(&self) -> GlNPrefoam {
        let mut out = self.clone();
        for s in &mut out.seams {
            s.flag = !s.flag;
        }
        out
    }
}

/// e_k in the listed variables.
pub fn elementary(n: usize, vars: &[usize], k: usize) -> MPoly {
    let mut out = MPoly::zero(n);
    for mask in 0u32..(1 << vars.len()) {
        if mask.count_ones() as usize == k {
            let mut e = vec![0u32; n];
            for (t, &v) in vars.iter().enumerate() {
                if mask & (1 << t) != 0 {
                    e[v] = 1;
                }
            }
            out.add_term(e, BigInt::from(1));
        }
    }
    out
}

impl Gl2Prefoam {
    /// The same foam as a GL(N) prefoam with N = 2: thin facets have
    /// thickness 1, the preferred facet is `a` and every flag is set.
    pub fn to_gln(&self) -> GlNPrefoam {
        let mut g = GlNPrefoam::new(2);
        for f in &self.thin {
            g.facets.push(GlNFacet { id: f.id.clone(), thickness: 1, genus: f.genus, boundary: f.boundary, decoration: vec![f.dots] });
        }
        for f in &self.double {
            g.facets.push(GlNFacet { id: f.id.clone(), thickness: 2, genus: f.genus, boundary: f.boundary, decoration: vec![0, 0] });
        }
        let nt = self.thin.len();
        for s in &self.seams {
            g.seams.push(GlNSeam { a: s.preferred, b: s.other, ab: nt + s.double, flag: true });
        }
        g
    }
}

/// Common denominator exponents M_ij = max(0, max_c chi_ij(c)/2).
fn common_denominator(data: &[GlNColoringData]) -> Result<BTreeMap<(usize, usize), u32>> {
    let mut m = BTreeMap::new();
    for d in data {
        for (&(i, j), &c) in &d.chi_pair {
            let h = half(c, &format!("F_{}{}", i + 1, j + 1))?;
            let e = m.entry((i, j)).or_insert(0u32);
            *e = (*e).max(h.max(0) as u32);
        }
    }
    Ok(m)
}

fn mpoly_to_series(p: &MPoly, n: usize, d: u32) -> TruncSeries {
    let mut out = TruncSeries::zero(n, d);
    for (e, c) in p.terms() {
        out.add_term(e.clone(), CoeffPoly::constant(c.clone()));
    }
    out
}

/// Deformed evaluation as a series in x_1..x_N, valid to degree d.
pub fn eval_deformed_gln(f: &GlNPrefoam, p: &PSeries, d: u32) -> Result<TruncSeries> {
    let colorings = f.colorings()?;
    let data: Vec<GlNColoringData> = colorings.iter().map(|c| f.coloring_data(c)).collect();
    let m = common_denominator(&data)?;
    let w = d + m.values().sum::<u32>();
    let n = f.n;
    let table = p.table(n, w);
    let mut pows: BTreeMap<(usize, usize, i64), TruncSeries> = BTreeMap::new();
    let mut pcache: BTreeMap<Vec<i64>, TruncSeries> = BTreeMap::new();
    let mut num = TruncSeries::zero(n, w);
    for (c, dat) in colorings.iter().zip(&data) {
        let neg = dat.sign(SignRule::Deformed)?;
        if !pcache.contains_key(&dat.chi) {
            let mut t = TruncSeries::one(n, w);
            for i in 0..n {
                for j in i + 1..n {
                    for (u, v, e) in [(i, j, dat.chi[i] / 2), (j, i, dat.chi[j] / 2)] {
                        if e != 0 {
                            if !pows.contains_key(&(u, v, e)) {
                                pows.insert((u, v, e), table[&(u, v)].pow_int(e)?);
                            }
                            t = t.mul(&pows[&(u, v, e)])?;
                        }
                    }
                }
            }
            pcache.insert(dat.chi.clone(), t);
        }
        let mut x = f.decoration_value(c);
        for (&(i, j), &mij) in &m {
            let e = mij as i64 - dat.chi_pair[&(i, j)] / 2;
            if e > 0 {
                x = x.mul(&MPoly::var(n, i).sub(&MPoly::var(n, j)).pow(e as u32));
            }
        }
        if neg {
            x = x.neg();
        }
        num = num.add(&mpoly_to_series(&x, n, w).mul(&pcache[&dat.chi])?)?;
    }
    for (&(i, j), &mij) in &m {
        num = num.divide_exact(i, j, mij)?;
    }
    Ok(num.retrunc(d))
}

/// Evaluation at p = 1 as an exact polynomial in x_1..x_N.
pub fn eval_undeformed_poly(f: &GlNPrefoam, rule: SignRule) -> Result<MPoly> {
    let colorings = f.colorings()?;
    let data: Vec<GlNColoringData> = colorings.iter().map(|c| f.coloring_data(c)).collect();
    let m = common_denominator(&data)?;
    let n = f.n;
    let mut num = MPoly::zero(n);
    for (c, dat) in colorings.iter().zip(&data) {
        let mut x = f.decoration_value(c);
        for (&(i, j), &mij) in &m {
            let e = mij as i64 - dat.chi_pair[&(i, j)] / 2;
            if e > 0 {
                x = x.mul(&MPoly::var(n, i).sub(&MPoly::var(n, j)).pow(e as u32));
            }
        }
        num = if dat.sign(rule)? { num.sub(&x) } else { num.add(&x) };
    }
    for (&(i, j), &mij) in &m {
        num = num.divide_exact(i, j, mij)?;
    }
    Ok(num)
}

fn poly_series(p: &MPoly, n: usize) -> TruncSeries {
    mpoly_to_series(p, n, p.total_degree().unwrap_or(0))
}

/// The undeformed evaluation with its original sign convention.
pub fn eval_rw(f: &GlNPrefoam) -> Result<TruncSeries> {
    Ok(poly_series(&eval_undeformed_poly(f, SignRule::RobertWagner)?, f.n))
}

/// The deformed evaluation at p = 1.
pub fn eval_trivial_p(f: &GlNPrefoam) -> Result<TruncSeries> {
    Ok(poly_series(&eval_undeformed_poly(f, SignRule::Deformed)?, f.n))
}

/// Standard GL(N) foams.
pub mod family {
    use super::GlNPrefoam;

    /// N thin disks with the given dots merged step by step into a disk of
    /// thickness N; the intermediate facets are annuli. All flags are set.
    pub fn theta(dots: &[u32]) -> GlNPrefoam {
        let n = dots.len();
        assert!(n >= 2);
        let mut f = GlNPrefoam::new(n);
        let disks: Vec<usize> = dots.iter().map(|&k| f.add_facet(1, 0, vec![k])).collect();
        let mut acc = disks[0];
        for (t, &disk) in disks.iter().enumerate().skip(1) {
            let next = f.add_facet(t as u32 + 1, 0, vec![]);
            f.add_seam(acc, disk, next, true);
            acc = next;
        }
        f
    }

    /// A closed surface of the given thickness and genus.
    pub fn surface(n: usize, thickness: u32, genus: u32, decoration: Vec<u32>) -> GlNPrefoam {
        let mut f = GlNPrefoam::new(n);
        f.add_facet(thickness, genus, decoration);
        f
    }
}
