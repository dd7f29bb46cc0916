//! The cube of resolutions with singular saddle maps over R.

use crate::error::{HomologyError, Result};
use crate::pd::PdLink;
use crate::resolve::{mask_to_mu, resolve, saddle, Resolution};
use rayon::prelude::*;
use webs::{foam_map_matrix, linalg, state_space_basis, FoamMovie, Matrix, StateSpace};

#[derive(Clone, Debug)]
pub struct CubeVertex {
    pub resolution: Resolution,
    pub space: StateSpace,
    /// Number of 1s minus the number of negative crossings.
    pub h: i64,
    /// Added to minus the foam degree of a basis element to get its
    /// quantum degree.
    pub q_shift: i64,
}

impl CubeVertex {
    /// Quantum degrees of the basis. The undotted cup on a circle has foam
    /// degree -1 and quantum degree +1.
    pub fn q_degrees(&self) -> Vec<i64> {
        self.space.degrees.iter().map(|d| self.q_shift - d).collect()
    }
}

#[derive(Clone, Debug)]
pub struct CubeEdge {
    pub from: usize,
    pub to: usize,
    pub crossing: usize,
    /// (-1)^(number of 1s before the flipped coordinate).
    pub sign: i64,
    pub movie: FoamMovie,
    /// Unsigned map in the bases of the two state spaces.
    pub matrix: Matrix,
}

#[derive(Clone, Debug)]
pub struct Cube {
    pub pd: PdLink,
    /// Indexed by bitmask, bit c for crossing c.
    pub vertices: Vec<CubeVertex>,
    pub edges: Vec<CubeEdge>,
}

impl Cube {
    pub fn build(pd: &PdLink) -> Result<Cube> {
        pd.validate()?;
        let n = pd.len();
        let (np, nm) = (pd.n_plus() as i64, pd.n_minus() as i64);
        let vertices: Vec<CubeVertex> = (0..1usize << n)
            .into_par_iter()
            .map(|m| -> Result<CubeVertex> {
                let resolution = resolve(pd, &mask_to_mu(m, n))?;
                let space = state_space_basis(&resolution.web)?;
                let ones = m.count_ones() as i64;
                Ok(CubeVertex { resolution, space, h: ones - nm, q_shift: ones + np - 2 * nm })
            })
            .collect::<Result<_>>()?;
        let sites: Vec<(usize, usize)> =
            (0..1usize << n).flat_map(|m| (0..n).filter(move |&c| m >> c & 1 == 0).map(move |c| (m, c))).collect();
        let edges: Vec<CubeEdge> = sites
            .par_iter()
            .map(|&(m, c)| -> Result<CubeEdge> {
                let to = m | 1 << c;
                let (a, b) = (&vertices[m], &vertices[to]);
                let movie = saddle(pd, &a.resolution, &b.resolution, c)?;
                let matrix = foam_map_matrix(&movie, &a.space, &b.space)?;
                let sign = if (m & ((1 << c) - 1)).count_ones() % 2 == 0 { 1 } else { -1 };
                Ok(CubeEdge { from: m, to, crossing: c, sign, movie, matrix })
            })
            .collect::<Result<_>>()?;
        Ok(Cube { pd: pd.clone(), vertices, edges })
    }

    pub fn edge(&self, from: usize, crossing: usize) -> Option<&CubeEdge> {
        self.edges.iter().find(|e| e.from == from && e.crossing == crossing)
    }

    /// Every square face commutes before signs are applied; returns the
    /// first face that does not.
    pub fn check_commuting(&self) -> Result<()> {
        let n = self.pd.len();
        for m in 0..1usize << n {
            for c1 in 0..n {
                for c2 in c1 + 1..n {
                    if m >> c1 & 1 == 1 || m >> c2 & 1 == 1 {
                        continue;
                    }
                    let get = |from: usize, c: usize| self.edge(from, c).map(|e| &e.matrix).expect("cube edge");
                    let via1 = linalg::mul(get(m | 1 << c1, c2), get(m, c1));
                    let via2 = linalg::mul(get(m | 1 << c2, c1), get(m, c2));
                    if via1 != via2 {
                        return Err(HomologyError::Cube(format!("face at {m:b} in directions {c1}, {c2} does not commute")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Foam degree of each saddle map: -1 times the thin Euler
    /// characteristic, which is 1 for every zip and unzip.
    pub fn saddle_degrees(&self) -> Vec<i64> {
        self.edges.iter().map(|e| e.movie.degree()).collect()
    }
}
