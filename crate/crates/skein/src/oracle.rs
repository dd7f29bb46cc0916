//! Closed-form values of surfaces and theta foams as series in x1, x2
//! (x1..xN for GL(N)), written from the formulas rather than by summing
//! over colorings.

use crate::error::{Result, SkeinError};
use coeff_ring::{CoeffPoly, MPoly, PSeries, TruncSeries};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Descriptor {
    ThinSurface { genus: u32, dots: u32 },
    DoubleSurface { genus: u32 },
    /// GL(2) theta foam, n1 dots on the preferred disk.
    Theta { n1: u32, n2: u32 },
    /// GL(N) theta foam with the given dots on its thin disks.
    GlnTheta { dots: Vec<u32> },
}

impl Descriptor {
    /// The GL(N) theta value is known only up to an overall sign.
    pub fn sign_determined(&self) -> bool {
        !matches!(self, Descriptor::GlnTheta { .. })
    }
}

fn mono(n: usize, d: u32, e: Vec<u32>, c: i64) -> TruncSeries {
    TruncSeries::monomial(n, d, e, CoeffPoly::constant(c))
}

fn x1_minus_x2(d: u32) -> Result<TruncSeries> {
    Ok(mono(2, d, vec![1, 0], 1).sub(&mono(2, d, vec![0, 1], 1))?)
}

/// h_k(x1, x2) = sum of x1^i x2^{k-i}.
fn complete(k: u32, d: u32) -> TruncSeries {
    let mut s = TruncSeries::zero(2, d);
    for i in 0..=k {
        s.add_term(vec![i, k - i], CoeffPoly::constant(1));
    }
    s
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

fn parity(p: &[usize]) -> i64 {
    let inversions = (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// sum over permutations of sign * prod x_{sigma(i)}^{n_i}, divided by the
/// Vandermonde product.
fn weyl_quotient(dots: &[u32]) -> Result<MPoly> {
    let n = dots.len();
    let mut alt = MPoly::zero(n);
    for p in permutations(n) {
        let mut e = vec![0u32; n];
        for i in 0..n {
            e[p[i]] = dots[i];
        }
        alt.add_term(e, BigInt::from(parity(&p)));
    }
    for i in 0..n {
        for j in i + 1..n {
            alt = alt.divide_exact(i, j, 1)?;
        }
    }
    Ok(alt)
}

/// Value at truncation `d`, with p placed as p12 = p(x1, x2), p21 = p(x2, x1).
pub fn closed_form_oracle(desc: &Descriptor, p: &PSeries, d: u32) -> Result<TruncSeries> {
    let p12 = p.placed(2, d + 1, 0, 1);
    let p21 = p.placed(2, d + 1, 1, 0);
    let out = match desc {
        Descriptor::ThinSurface { genus: 0, dots } => {
            let num = mono(2, d + 1, vec![*dots, 0], 1).mul(&p12)?.sub(&mono(2, d + 1, vec![0, *dots], 1).mul(&p21)?)?;
            num.divide_exact(0, 1, 1)?
        }
        Descriptor::ThinSurface { genus, dots } => {
            let k = 1 - *genus as i64;
            let a = mono(2, d, vec![*dots, 0], 1).mul(&p12.retrunc(d).pow_int(k)?)?;
            let b = mono(2, d, vec![0, *dots], 1).mul(&p21.retrunc(d).pow_int(k)?)?;
            let b = if genus % 2 == 1 { b } else { b.neg() };
            a.add(&b)?.mul(&x1_minus_x2(d)?.pow(genus - 1)?)?
        }
        Descriptor::DoubleSurface { genus } => {
            let rho = p12.retrunc(d).mul(&p21.retrunc(d))?.neg();
            rho.pow_int(1 - *genus as i64)?
        }
        Descriptor::Theta { n1, n2 } => {
            let pp = p12.retrunc(d).mul(&p21.retrunc(d))?;
            let (hi, lo, sign) = if n1 >= n2 { (*n1, *n2, 1) } else { (*n2, *n1, -1) };
            if hi == lo {
                TruncSeries::zero(2, d)
            } else {
                mono(2, d, vec![lo, lo], sign).mul(&complete(hi - lo - 1, d))?.mul(&pp)?
            }
        }
        Descriptor::GlnTheta { dots } => {
            let n = dots.len();
            if n < 2 {
                return Err(SkeinError::Unsupported("GL(N) theta needs N >= 2".into()));
            }
            let s = weyl_quotient(dots)?;
            let mut acc = TruncSeries::from_terms(n, d, s.terms().map(|(e, c)| (e.clone(), CoeffPoly::constant(c.clone()))));
            for pij in p.table(n, d).values() {
                acc = acc.mul(pij)?;
            }
            acc
        }
    };
    Ok(out.retrunc(d))
}
