//! Closed GL(2) prefoams: thin and double facets given by (genus, boundary
//! count), glued along seam circles that carry a preferred thin facet.

use crate::error::{FoamError, Result};
use std::collections::{BTreeMap, VecDeque};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThinFacet {
    pub id: String,
    pub genus: u32,
    pub boundary: u32,
    pub dots: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleFacet {
    pub id: String,
    pub genus: u32,
    pub boundary: u32,
}

/// Seam circle; fields are indices into the thin and double facet lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Seam {
    pub preferred: usize,
    pub other: usize,
    pub double: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Gl2Prefoam {
    pub thin: Vec<ThinFacet>,
    pub double: Vec<DoubleFacet>,
    pub seams: Vec<Seam>,
}

/// Colors 1 or 2 per thin facet.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Gl2Coloring {
    pub color: Vec<u8>,
}

/// Quantities of a coloring entering the evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoringData {
    pub chi1: i64,
    pub chi2: i64,
    pub d1: u32,
    pub d2: u32,
    pub theta_plus: u32,
}

pub fn euler(genus: u32, boundary: u32) -> i64 {
    2 - 2 * genus as i64 - boundary as i64
}

impl Gl2Prefoam {
    pub fn new() -> Self {
        Self::default()
    }

    /// Add a thin facet with no boundary yet; seams added later raise the count.
    pub fn add_thin(&mut self, genus: u32, dots: u32) -> usize {
        let id = format!("t{}", self.thin.len());
        self.thin.push(ThinFacet { id, genus, boundary: 0, dots });
        self.thin.len() - 1
    }

    pub fn add_double(&mut self, genus: u32) -> usize {
        let id = format!("d{}", self.double.len());
        self.double.push(DoubleFacet { id, genus, boundary: 0 });
        self.double.len() - 1
    }

    pub fn add_seam(&mut self, preferred: usize, other: usize, double: usize) -> usize {
        self.thin[preferred].boundary += 1;
        self.thin[other].boundary += 1;
        self.double[double].boundary += 1;
        self.seams.push(Seam { preferred, other, double });
        self.seams.len() - 1
    }

    pub fn total_dots(&self) -> u32 {
        self.thin.iter().map(|f| f.dots).sum()
    }

    pub fn facet_count(&self) -> usize {
        self.thin.len() + self.double.len()
    }

    /// chi(F_12), the Euler characteristic of the thin surface.
    pub fn chi_thin(&self) -> i64 {
        self.thin.iter().map(|f| euler(f.genus, f.boundary)).sum()
    }

    pub fn chi_double(&self) -> i64 {
        self.double.iter().map(|f| euler(f.genus, f.boundary)).sum()
    }

    /// Sum of chi_i over both colors, independent of the coloring.
    pub fn chi_total(&self) -> i64 {
        self.chi_thin() + 2 * self.chi_double()
    }

    /// Swap preferred and other thin facet at the given seams.
    pub fn reversed_at(&self, seams: &[usize]) -> Gl2Prefoam {
        let mut out = self.clone();
        for &s in seams {
            let seam = &mut out.seams[s];
            std::mem::swap(&mut seam.preferred, &mut seam.other);
        }
        out
    }

    pub fn reversed(&self) -> Gl2Prefoam {
        self.reversed_at(&(0..self.seams.len()).collect::<Vec<_>>())
    }

    /// Disjoint union.
    pub fn union(&self, other: &Gl2Prefoam) -> Gl2Prefoam {
        let mut out = self.clone();
        let (nt, nd) = (self.thin.len(), self.double.len());
        for f in &other.thin {
            out.thin.push(ThinFacet { id: format!("t{}", out.thin.len()), ..f.clone() });
        }
        for f in &other.double {
            out.double.push(DoubleFacet { id: format!("d{}", out.double.len()), ..f.clone() });
        }
        for s in &other.seams {
            out.seams.push(Seam { preferred: s.preferred + nt, other: s.other + nt, double: s.double + nd });
        }
        out
    }

    /// Structural checks: indices in range, distinct thin facets at each
    /// seam, unique ids and boundary counts equal to seam incidences.
    pub fn validate(&self) -> Result<()> {
        let mut seen = BTreeMap::new();
        for id in self.thin.iter().map(|f| &f.id).chain(self.double.iter().map(|f| &f.id)) {
            if seen.insert(id.clone(), ()).is_some() {
                return Err(FoamError::invalid(id, "duplicate id"));
            }
        }
        let mut thin_inc = vec![0u32; self.thin.len()];
        let mut double_inc = vec![0u32; self.double.len()];
        for (k, s) in self.seams.iter().enumerate() {
            if s.preferred >= self.thin.len() || s.other >= self.thin.len() || s.double >= self.double.len() {
                return Err(FoamError::invalid(&format!("seam {k}"), "refers to a missing facet"));
            }
            if s.preferred == s.other {
                return Err(FoamError::invalid(&self.thin[s.preferred].id, format!("both thin sides of seam {k}")));
            }
            thin_inc[s.preferred] += 1;
            thin_inc[s.other] += 1;
            double_inc[s.double] += 1;
        }
        for (f, &n) in self.thin.iter().zip(&thin_inc) {
            if f.boundary != n {
                return Err(FoamError::invalid(&f.id, format!("boundary count {} but {} seam incidences", f.boundary, n)));
            }
        }
        for (f, &n) in self.double.iter().zip(&double_inc) {
            if f.boundary != n {
                return Err(FoamError::invalid(&f.id, format!("boundary count {} but {} seam incidences", f.boundary, n)));
            }
        }
        Ok(())
    }

    /// Connected components of the thin-facet/seam graph, each with a
    /// proper 2-coloring relative to its first facet (0 = same color).
    fn components(&self) -> Result<Vec<Vec<(usize, u8)>>> {
        let mut adj = vec![Vec::new(); self.thin.len()];
        for s in &self.seams {
            adj[s.preferred].push(s.other);
            adj[s.other].push(s.preferred);
        }
        let mut side: Vec<Option<u8>> = vec![None; self.thin.len()];
        let mut out = Vec::new();
        for start in 0..self.thin.len() {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(0);
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].unwrap();
                comp.push((v, sv));
                for &w in &adj[v] {
                    match side[w] {
                        None => {
                            side[w] = Some(1 - sv);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == sv => return Err(FoamError::NotBipartite(self.thin[start].id.clone())),
                        _ => {}
                    }
                }
            }
            out.push(comp);
        }
        Ok(out)
    }

    /// Thin facets grouped into components of the thin surface.
    pub fn thin_components(&self) -> Result<Vec<Vec<usize>>> {
        Ok(self.components()?.into_iter().map(|c| c.into_iter().map(|(v, _)| v).collect()).collect())
    }

    /// All proper colorings: 2^(number of components).
    pub fn colorings(&self) -> Result<Vec<Gl2Coloring>> {
        let comps = self.components()?;
        if comps.len() > 24 {
            return Err(FoamError::invalid("foam", format!("{} thin components is too many to enumerate", comps.len())));
        }
        let mut out = Vec::with_capacity(1 << comps.len());
        for mask in 0u32..(1 << comps.len()) {
            let mut color = vec![0u8; self.thin.len()];
            for (k, comp) in comps.iter().enumerate() {
                let flip = ((mask >> k) & 1) as u8;
                for &(v, s) in comp {
                    color[v] = 1 + (s ^ flip);
                }
            }
            out.push(Gl2Coloring { color });
        }
        Ok(out)
    }

    pub fn is_proper(&self, c: &Gl2Coloring) -> bool {
        c.color.len() == self.thin.len()
            && c.color.iter().all(|&k| k == 1 || k == 2)
            && self.seams.iter().all(|s| c.color[s.preferred] != c.color[s.other])
    }

    pub fn coloring_data(&self, c: &Gl2Coloring) -> ColoringData {
        let chi_d = self.chi_double();
        let mut data = ColoringData { chi1: chi_d, chi2: chi_d, d1: 0, d2: 0, theta_plus: 0 };
        for (f, &k) in self.thin.iter().zip(&c.color) {
            let chi = euler(f.genus, f.boundary);
            if k == 1 {
                data.chi1 += chi;
                data.d1 += f.dots;
            } else {
                data.chi2 += chi;
                data.d2 += f.dots;
            }
        }
        data.theta_plus = self.seams.iter().filter(|s| c.color[s.preferred] == 1).count() as u32;
        data
    }
}

pub fn enumerate_colorings(f: &Gl2Prefoam) -> Result<Vec<Gl2Coloring>> {
    f.validate()?;
    f.colorings()
}

/// Standard closed foams.
pub mod family {
    use super::Gl2Prefoam;

    /// Thin surface of genus g with n dots.
    pub fn thin_surface(g: u32, n: u32) -> Gl2Prefoam {
        let mut f = Gl2Prefoam::new();
        f.add_thin(g, n);
        f
    }

    pub fn thin_sphere(n: u32) -> Gl2Prefoam {
        thin_surface(0, n)
    }

    pub fn double_surface(g: u32) -> Gl2Prefoam {
        let mut f = Gl2Prefoam::new();
        f.add_double(g);
        f
    }

    /// Two thin disks glued to a double disk along one seam; the preferred
    /// disk carries n1 dots, the other n2.
    pub fn theta(n1: u32, n2: u32) -> Gl2Prefoam {
        let mut f = Gl2Prefoam::new();
        let a = f.add_thin(0, n1);
        let b = f.add_thin(0, n2);
        let d = f.add_double(0);
        f.add_seam(a, b, d);
        f
    }
}
