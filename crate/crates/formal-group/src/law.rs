use crate::error::{FglError, Result};
use coeff_ring::{CoeffPoly, TruncSeries};
use serde_json::{json, Value};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingTag {
    Integral,
    Rational,
}

/// F(x, y) = x + y + sum a_ij x^i y^j, stored up to total degree `trunc`.
///
/// Symbol conventions for the coefficient polynomials: the multiplicative
/// parameter beta is b1_0, the Lorentz parameter beta^2 is b2_0, and the
/// universal law uses b{k}_0 for l_k / (k + 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalGroupLaw {
    pub name: String,
    pub trunc: u32,
    pub ring_tag: RingTag,
    coeffs: BTreeMap<(u32, u32), CoeffPoly>,
}

pub fn beta() -> CoeffPoly {
    CoeffPoly::var(1, 0)
}

pub fn beta_sq() -> CoeffPoly {
    CoeffPoly::var(2, 0)
}

/// Symbol standing for l_k / (k + 1) in the universal law.
pub fn log_symbol(k: u32) -> CoeffPoly {
    CoeffPoly::var(k, 0)
}

/// f(g) for a one-variable f and a series g without constant term.
pub fn compose1(f: &TruncSeries, g: &TruncSeries) -> Result<TruncSeries> {
    let maxe = f.terms().map(|(e, _)| e[0]).max().unwrap_or(0);
    let mut out = TruncSeries::zero(g.nvars(), g.trunc()).with_valid(f.valid().min(g.valid()));
    for k in (0..=maxe).rev() {
        out = out.mul(g)?;
        let c = f.coeff(&[k]);
        if !c.is_zero() {
            out = out.add(&TruncSeries::constant(g.nvars(), g.trunc(), c))?;
        }
    }
    Ok(out)
}

impl FormalGroupLaw {
    /// Build from a two-variable series; the linear part must be x + y.
    pub fn from_series(name: &str, ring_tag: RingTag, s: &TruncSeries) -> Result<Self> {
        if s.nvars() != 2 {
            return Err(FglError::Malformed(format!("expected 2 variables, got {}", s.nvars())));
        }
        let mut coeffs = BTreeMap::new();
        for (e, c) in s.terms() {
            match (e[0], e[1]) {
                (1, 0) | (0, 1) if c.is_one() => {}
                (i, j) if i >= 1 && j >= 1 => {
                    coeffs.insert((i, j), c.clone());
                }
                (i, j) => return Err(FglError::Malformed(format!("unexpected term x^{i} y^{j} with coefficient {c}"))),
            }
        }
        if !s.coeff(&[1, 0]).is_one() || !s.coeff(&[0, 1]).is_one() {
            return Err(FglError::Malformed("linear part is not x + y".into()));
        }
        Ok(FormalGroupLaw { name: name.into(), trunc: s.valid(), ring_tag, coeffs })
    }

    pub fn additive(d: u32) -> Self {
        FormalGroupLaw { name: "additive".into(), trunc: d, ring_tag: RingTag::Integral, coeffs: BTreeMap::new() }
    }

    /// x + y - beta x y.
    pub fn multiplicative_with(b: CoeffPoly, d: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if d >= 2 && !b.is_zero() {
            coeffs.insert((1, 1), -&b);
        }
        FormalGroupLaw { name: "multiplicative".into(), trunc: d, ring_tag: RingTag::Integral, coeffs }
    }

    pub fn multiplicative(d: u32) -> Self {
        Self::multiplicative_with(beta(), d)
    }

    /// (x + y) / (1 + beta^2 x y), with `b2` playing the role of beta^2.
    pub fn lorentz_with(b2: CoeffPoly, d: u32) -> Self {
        // (x + y) sum_k (-b2 x y)^k
        let mut coeffs = BTreeMap::new();
        let mut c = CoeffPoly::one();
        for k in 1.. {
            if 2 * k + 1 > d {
                break;
            }
            c = &c * &(-&b2);
            if c.is_zero() {
                break;
            }
            coeffs.insert((k + 1, k), c.clone());
            coeffs.insert((k, k + 1), c.clone());
        }
        FormalGroupLaw { name: "lorentz".into(), trunc: d, ring_tag: RingTag::Integral, coeffs }
    }

    pub fn lorentz(d: u32) -> Self {
        Self::lorentz_with(beta_sq(), d)
    }

    /// exp(log x + log y) with log x = x + sum_{k>=1} m_k x^{k+1}, m_k = l_k/(k+1) symbolic.
    pub fn universal_rational(d: u32) -> Result<Self> {
        Self::from_log("universal", RingTag::Rational, &universal_log(d))
    }

    /// The law exp(log x + log y) for a one-variable log = x + O(x^2).
    pub fn from_log(name: &str, ring_tag: RingTag, log: &TruncSeries) -> Result<Self> {
        let d = log.trunc();
        let exp = compositional_inverse(log)?;
        let x = TruncSeries::var(2, d, 0);
        let y = TruncSeries::var(2, d, 1);
        let lx = compose1(log, &x)?;
        let ly = compose1(log, &y)?;
        let f = compose1(&exp, &lx.add(&ly)?)?;
        let mut law = Self::from_series(name, ring_tag, &f)?;
        law.trunc = d;
        Ok(law)
    }

    pub fn by_name(name: &str, d: u32) -> Result<Self> {
        match name {
            "additive" => Ok(Self::additive(d)),
            "multiplicative" | "mult" => Ok(Self::multiplicative(d)),
            "lorentz" => Ok(Self::lorentz(d)),
            "universal" => Self::universal_rational(d),
            _ => Err(FglError::Malformed(format!("unknown formal group law '{name}'"))),
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> CoeffPoly {
        match (i, j) {
            (1, 0) | (0, 1) => CoeffPoly::one(),
            _ => self.coeffs.get(&(i, j)).cloned().unwrap_or_default(),
        }
    }

    pub fn coeffs(&self) -> &BTreeMap<(u32, u32), CoeffPoly> {
        &self.coeffs
    }

    fn need(&self, d: u32) -> Result<()> {
        if d > self.trunc {
            return Err(FglError::Precision { need: d, have: self.trunc });
        }
        Ok(())
    }

    /// F(x, y) as a two-variable series truncated at d.
    pub fn series(&self, d: u32) -> Result<TruncSeries> {
        self.need(d)?;
        let mut s = TruncSeries::var(2, d, 0).add(&TruncSeries::var(2, d, 1))?;
        for (&(i, j), c) in &self.coeffs {
            s.add_term(vec![i, j], c.clone());
        }
        Ok(s)
    }

    /// F(g, h) for series g, h without constant term.
    pub fn apply(&self, g: &TruncSeries, h: &TruncSeries) -> Result<TruncSeries> {
        let d = g.trunc();
        self.need(g.valid().min(h.valid()))?;
        let maxi = self.coeffs.keys().map(|k| k.0).max().unwrap_or(0);
        let maxj = self.coeffs.keys().map(|k| k.1).max().unwrap_or(0);
        let powers = |s: &TruncSeries, m: u32| -> Result<Vec<TruncSeries>> {
            let mut v = vec![TruncSeries::one(s.nvars(), d)];
            for k in 1..=m as usize {
                let next = v[k - 1].mul(s)?;
                v.push(next);
            }
            Ok(v)
        };
        let gp = powers(g, maxi)?;
        let hp = powers(h, maxj)?;
        let mut out = g.add(h)?;
        for (&(i, j), c) in &self.coeffs {
            if i + j > d {
                continue;
            }
            out = out.add(&gp[i as usize].mul(&hp[j as usize])?.scale(c))?;
        }
        Ok(out)
    }

    /// Commutativity, unitarity and associativity up to degree d.
    pub fn check_axioms(&self, d: u32) -> Result<()> {
        let f = self.series(d)?;
        if f.swap(0, 1) != f {
            return Err(FglError::Axiom("commutativity".into()));
        }
        if f.set_zero(1) != TruncSeries::var(2, d, 0) {
            return Err(FglError::Axiom("unitarity".into()));
        }
        let x = TruncSeries::var(3, d, 0);
        let y = TruncSeries::var(3, d, 1);
        let z = TruncSeries::var(3, d, 2);
        let lhs = self.apply(&x, &self.apply(&y, &z)?)?;
        let rhs = self.apply(&self.apply(&x, &y)?, &z)?;
        if !lhs.eq_valid(&rhs) {
            let deg = (0..=d).find(|&k| lhs.component(k) != rhs.component(k)).unwrap_or(d);
            return Err(FglError::Axiom(format!("associativity fails in degree {deg}")));
        }
        Ok(())
    }

    /// [-1]x: the series n(x) with F(x, n(x)) = 0.
    pub fn formal_negative(&self, d: u32) -> Result<TruncSeries> {
        self.need(d)?;
        let x = TruncSeries::var(1, d, 0);
        let mut n = x.neg();
        // Each pass fixes one more degree since dF/dy(x, 0) = 1 + O(x).
        for _ in 0..d {
            let r = self.apply(&x, &n)?;
            if r.is_zero() {
                break;
            }
            n = n.sub(&r)?;
        }
        Ok(n)
    }

    /// x [-1] y = F(x, [-1]y).
    pub fn formal_difference(&self, d: u32) -> Result<TruncSeries> {
        let n = self.formal_negative(d)?.embed(2, &[1]);
        self.apply(&TruncSeries::var(2, d, 0), &n)
    }

    /// q(x, y) with (x - y) q = x [-1] y; valid to d - 1.
    pub fn q_series(&self, d: u32) -> Result<TruncSeries> {
        let diff = self.formal_difference(d)?;
        diff.divide_exact(0, 1, 1).map_err(FglError::from)
    }

    pub fn to_json(&self) -> Value {
        let coeffs: Vec<Value> = self.coeffs.iter().map(|(&(i, j), c)| json!([i, j, c.to_json()])).collect();
        json!({
            "name": self.name,
            "trunc": self.trunc,
            "ring": match self.ring_tag { RingTag::Integral => "integral", RingTag::Rational => "rational" },
            "coeffs": coeffs,
        })
    }
}

/// x + sum_{k=1}^{d-1} m_k x^{k+1}.
pub fn universal_log(d: u32) -> TruncSeries {
    let mut s = TruncSeries::var(1, d, 0);
    for k in 1..d {
        s.add_term(vec![k + 1], log_symbol(k));
    }
    s
}

/// Compositional inverse of a one-variable series x + O(x^2).
pub fn compositional_inverse(f: &TruncSeries) -> Result<TruncSeries> {
    if f.nvars() != 1 || !f.coeff(&[1]).is_one() || !f.coeff(&[0]).is_zero() {
        return Err(FglError::Malformed("compositional inverse needs x + O(x^2)".into()));
    }
    let x = TruncSeries::var(1, f.trunc(), 0);
    let mut g = x.clone();
    for _ in 0..f.trunc() {
        let r = compose1(f, &g)?.sub(&x)?;
        if r.is_zero() {
            break;
        }
        g = g.sub(&r)?;
    }
    Ok(g)
}
