//! Integer chain complexes from a cube and a specialization of R.

use crate::cube::Cube;
use crate::error::{HomologyError, Result};
use crate::pd::PdLink;
use crate::snf::{self, IntMatrix};
use coeff_ring::Specialization;
use num_bigint::BigInt;
use num_traits::Zero;
use webs::Laurent;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grading {
    /// Every differential preserves the quantum degree.
    Homogeneous,
    /// Differentials never raise the quantum degree.
    Decreasing,
    /// Differentials never lower the quantum degree.
    Increasing,
    /// Both directions occur; no filtration by quantum degree.
    Mixed,
}

#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub h_min: i64,
    /// Quantum degrees of the generators in each homological degree.
    pub gens: Vec<Vec<i64>>,
    /// diffs[t] maps degree h_min + t to h_min + t + 1; rows index the
    /// target generators.
    pub diffs: Vec<IntMatrix>,
    pub grading: Grading,
}

impl ChainComplex {
    pub fn h_max(&self) -> i64 {
        self.h_min + self.gens.len() as i64 - 1
    }

    pub fn rank_at(&self, h: i64) -> usize {
        self.level(h).map_or(0, |t| self.gens[t].len())
    }

    pub fn level(&self, h: i64) -> Option<usize> {
        let t = h - self.h_min;
        (t >= 0 && (t as usize) < self.gens.len()).then_some(t as usize)
    }

    /// Differential out of degree h, or None if either side is zero.
    pub fn diff_from(&self, h: i64) -> Option<&IntMatrix> {
        self.level(h).and_then(|t| self.diffs.get(t))
    }

    pub fn d_squared_zero(&self) -> bool {
        self.diffs.windows(2).all(|w| snf::is_zero(&snf::mul(&w[1], &w[0])))
    }

    /// Sum over generators of (-1)^h q^{quantum degree}.
    pub fn graded_euler(&self) -> Laurent {
        let mut l = Laurent::zero();
        for (t, g) in self.gens.iter().enumerate() {
            let s = if (self.h_min + t as i64) % 2 == 0 { 1 } else { -1 };
            for &q in g {
                l.add_term(q, s);
            }
        }
        l
    }

    /// Assemble from generator lists and nonzero blocks, then classify how
    /// the differential interacts with the quantum degree.
    pub fn new(h_min: i64, gens: Vec<Vec<i64>>, diffs: Vec<IntMatrix>) -> Self {
        let mut up = false;
        let mut down = false;
        for (t, d) in diffs.iter().enumerate() {
            for (i, row) in d.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    let (qi, qj) = (gens[t + 1][i], gens[t][j]);
                    up |= qi > qj;
                    down |= qi < qj;
                }
            }
        }
        let grading = match (up, down) {
            (false, false) => Grading::Homogeneous,
            (false, true) => Grading::Decreasing,
            (true, false) => Grading::Increasing,
            (true, true) => Grading::Mixed,
        };
        ChainComplex { h_min, gens, diffs, grading }
    }
}

/// Specialize the cube of `pd` and collapse it into a complex.
pub fn build_complex(pd: &PdLink, s: &Specialization) -> Result<ChainComplex> {
    let cube = Cube::build(pd)?;
    from_cube(&cube, s)
}

pub fn from_cube(cube: &Cube, s: &Specialization) -> Result<ChainComplex> {
    s.require_unit_rho().map_err(|e| HomologyError::NonUnitRho(e.to_string()))?;
    let n = cube.pd.len();
    let h_min = -(cube.pd.n_minus() as i64);
    let levels = n + 1;
    let mut gens: Vec<Vec<i64>> = vec![Vec::new(); levels];
    // offset of each vertex inside its level
    let mut offset = vec![0usize; cube.vertices.len()];
    for (m, v) in cube.vertices.iter().enumerate() {
        let t = (v.h - h_min) as usize;
        offset[m] = gens[t].len();
        gens[t].extend(v.q_degrees());
    }
    let mut diffs: Vec<IntMatrix> = (0..n).map(|t| vec![vec![BigInt::zero(); gens[t].len()]; gens[t + 1].len()]).collect();
    for e in &cube.edges {
        let t = (cube.vertices[e.from].h - h_min) as usize;
        let (r0, c0) = (offset[e.to], offset[e.from]);
        for (i, row) in e.matrix.iter().enumerate() {
            for (j, g) in row.iter().enumerate() {
                if g.is_zero() {
                    continue;
                }
                let v = s.apply(g)? * e.sign;
                diffs[t][r0 + i][c0 + j] += v;
            }
        }
    }
    Ok(ChainComplex::new(h_min, gens, diffs))
}
