//! Classical, generalized and q-twisted divided difference operators on
//! truncated series in n variables.
//!
//! Operators act on monomials x_i^a x_j^b through cached two-variable images
//! and extend linearly over the remaining variables, on which they act as
//! scalars.

use crate::error::{FglError, Result};
use crate::law::FormalGroupLaw;
use coeff_ring::TruncSeries;
use num_bigint::BigInt;
use std::collections::HashMap;
use std::sync::Mutex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// D(f) = (f - r f) / (x_i - x_j)
    Classical,
    /// A(f) = f / (x_i [-1] x_j) + r f / (x_j [-1] x_i)
    Generalized,
    /// q(x_i, x_j) A(f)
    Twisted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DividedDiffOp {
    pub i: usize,
    pub j: usize,
    pub mode: Mode,
}

impl DividedDiffOp {
    pub fn new(i: usize, j: usize, mode: Mode) -> Self {
        DividedDiffOp { i, j, mode }
    }

    /// Simple root alpha_k = (k, k + 1), 0-based.
    pub fn simple(k: usize, mode: Mode) -> Self {
        DividedDiffOp { i: k, j: k + 1, mode }
    }
}

/// Two-variable data of the law at working degree `trunc + 1`.
struct PairData {
    /// x [-1] y and y [-1] x
    dxy: TruncSeries,
    dyx: TruncSeries,
    /// q(x, y)
    q: TruncSeries,
    /// ((x [-1] y)(y [-1] x) / (x - y)^2)^{-1}
    den_inv: TruncSeries,
}

pub struct OperatorContext {
    pub law: FormalGroupLaw,
    pub n: usize,
    pub trunc: u32,
    pair: PairData,
    cache: Mutex<HashMap<(Mode, u32, u32), TruncSeries>>,
}

impl OperatorContext {
    /// Operators on series in n variables truncated at `trunc`.
    pub fn new(law: &FormalGroupLaw, n: usize, trunc: u32) -> Result<Self> {
        let d2 = trunc + 1;
        let law = if law.trunc < d2 { rebuild(law, d2)? } else { law.clone() };
        let dxy = law.formal_difference(d2)?;
        let dyx = dxy.swap(0, 1);
        let q = dxy.divide_exact(0, 1, 1)?;
        let den = dxy.mul(&dyx)?.divide_exact(0, 1, 2)?;
        let den_inv = den.inverse()?;
        Ok(OperatorContext { law, n, trunc, pair: PairData { dxy, dyx, q, den_inv }, cache: Mutex::new(HashMap::new()) })
    }

    /// q(x_i, x_j) in n variables.
    pub fn q_root(&self, i: usize, j: usize) -> TruncSeries {
        self.pair.q.retrunc(self.trunc).embed(self.n, &[i, j])
    }

    /// q(Delta+) = prod_{i<j} q(x_i, x_j).
    pub fn q_delta_plus(&self) -> Result<TruncSeries> {
        let mut out = TruncSeries::one(self.n, self.trunc);
        for i in 0..self.n {
            for j in i + 1..self.n {
                out = out.mul(&self.q_root(i, j))?;
            }
        }
        Ok(out)
    }

    /// Image of x^a y^b in the variables (x, y) = (x_i, x_j).
    fn image(&self, mode: Mode, a: u32, b: u32) -> Result<TruncSeries> {
        if let Some(s) = self.cache.lock().unwrap().get(&(mode, a, b)) {
            return Ok(s.clone());
        }
        let d2 = self.trunc + 1;
        let m = TruncSeries::monomial(2, d2, vec![a, b], coeff_ring::CoeffPoly::one());
        let rm = m.swap(0, 1);
        let img = match mode {
            Mode::Classical => m.sub(&rm)?.divide_exact(0, 1, 1)?.with_valid(d2),
            Mode::Generalized | Mode::Twisted => {
                let p = &self.pair;
                let num = m.mul(&p.dyx)?.add(&rm.mul(&p.dxy)?)?;
                let a_img = num.divide_exact(0, 1, 2)?.mul(&p.den_inv)?;
                if mode == Mode::Twisted {
                    a_img.mul(&p.q)?
                } else {
                    a_img
                }
            }
        };
        self.cache.lock().unwrap().insert((mode, a, b), img.clone());
        Ok(img)
    }

    pub fn apply(&self, op: DividedDiffOp, f: &TruncSeries) -> Result<TruncSeries> {
        let (i, j) = (op.i, op.j);
        if i >= j || j >= self.n || f.nvars() != self.n {
            return Err(FglError::BadRoot(i, j));
        }
        let valid = f.valid().min(self.trunc).saturating_sub(1);
        let mut out = TruncSeries::zero(self.n, self.trunc).with_valid(valid);
        for (e, c) in f.terms() {
            let img = self.image(op.mode, e[i], e[j])?;
            let mut rest = e.clone();
            rest[i] = 0;
            rest[j] = 0;
            for (g, d) in img.terms() {
                let mut h = rest.clone();
                h[i] = g[0];
                h[j] = g[1];
                out.add_term(h, c * d);
            }
        }
        Ok(out)
    }

    /// Multiplication by q(alpha)^{-1} followed by the classical operator.
    pub fn apply_d_after_q_inverse(&self, i: usize, j: usize, f: &TruncSeries) -> Result<TruncSeries> {
        let qinv = self.q_root(i, j).inverse()?;
        let g = f.retrunc(self.trunc).mul(&qinv)?;
        self.apply(DividedDiffOp::new(i, j, Mode::Classical), &g)
    }
}

/// Rebuild a built-in law at a higher truncation.
fn rebuild(law: &FormalGroupLaw, d: u32) -> Result<FormalGroupLaw> {
    let mut l = match law.name.as_str() {
        "additive" => FormalGroupLaw::additive(d),
        "multiplicative" => FormalGroupLaw::multiplicative_with(law.coeff(1, 1).scale(&BigInt::from(-1)), d),
        "lorentz" => FormalGroupLaw::lorentz_with(law.coeff(2, 1).scale(&BigInt::from(-1)), d),
        "universal" => FormalGroupLaw::universal_rational(d)?,
        _ => return Err(FglError::Precision { need: d, have: law.trunc }),
    };
    l.name = law.name.clone();
    Ok(l)
}

/// Apply one operator to f in n = f.nvars() variables.
pub fn apply_divided_difference(law: &FormalGroupLaw, op: DividedDiffOp, f: &TruncSeries) -> Result<TruncSeries> {
    OperatorContext::new(law, f.nvars(), f.trunc())?.apply(op, f)
}
