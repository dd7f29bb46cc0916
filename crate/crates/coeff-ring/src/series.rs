//! Truncated multivariate power series in x_1..x_n with `CoeffPoly` coefficients.
//!
//! Truncation is by total x-exponent. `valid` records up to which total degree
//! the coefficients can be trusted; every exact division lowers it by one.

use crate::beta::CoeffPoly;
use crate::error::{Result, RingError};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;

pub type Exps = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    nvars: usize,
    trunc: u32,
    valid: u32,
    terms: BTreeMap<Exps, CoeffPoly>,
}

fn total(e: &[u32]) -> u32 {
    e.iter().sum()
}

impl TruncSeries {
    pub fn zero(nvars: usize, trunc: u32) -> Self {
        assert!(nvars >= 1, "a series needs at least one variable");
        TruncSeries { nvars, trunc, valid: trunc, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, trunc: u32, c: CoeffPoly) -> Self {
        let mut s = TruncSeries::zero(nvars, trunc);
        s.add_term(vec![0; nvars], c);
        s
    }

    pub fn one(nvars: usize, trunc: u32) -> Self {
        TruncSeries::constant(nvars, trunc, CoeffPoly::one())
    }

    pub fn integer(nvars: usize, trunc: u32, c: i64) -> Self {
        TruncSeries::constant(nvars, trunc, CoeffPoly::constant(c))
    }

    /// The variable x_i (0-based index).
    pub fn var(nvars: usize, trunc: u32, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        TruncSeries::monomial(nvars, trunc, e, CoeffPoly::one())
    }

    pub fn monomial(nvars: usize, trunc: u32, e: Exps, c: CoeffPoly) -> Self {
        let mut s = TruncSeries::zero(nvars, trunc);
        s.add_term(e, c);
        s
    }

    pub fn from_terms(nvars: usize, trunc: u32, terms: impl IntoIterator<Item = (Exps, CoeffPoly)>) -> Self {
        let mut s = TruncSeries::zero(nvars, trunc);
        for (e, c) in terms {
            s.add_term(e, c);
        }
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn valid(&self) -> u32 {
        self.valid
    }

    pub fn with_valid(mut self, v: u32) -> Self {
        self.valid = v.min(self.valid);
        self.drop_above_valid();
        self
    }

    /// Same series with a different truncation degree.
    pub fn retrunc(&self, trunc: u32) -> TruncSeries {
        let mut out = TruncSeries::zero(self.nvars, trunc);
        out.valid = self.valid.min(trunc);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &CoeffPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> CoeffPoly {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Add a term; terms beyond the valid degree are discarded.
    pub fn add_term(&mut self, e: Exps, c: CoeffPoly) {
        assert_eq!(e.len(), self.nvars);
        if c.is_zero() || total(&e) > self.valid {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn drop_above_valid(&mut self) {
        let v = self.valid;
        self.terms.retain(|e, _| total(e) <= v);
    }

    fn check_compatible(&self, other: &TruncSeries) -> Result<()> {
        if self.nvars != other.nvars || self.trunc != other.trunc {
            return Err(RingError::DimensionMismatch(format!(
                "({} vars, D={}) vs ({} vars, D={})",
                self.nvars, self.trunc, other.nvars, other.trunc
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        out.valid = self.valid.min(other.valid);
        out.drop_above_valid();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TruncSeries {
        TruncSeries {
            nvars: self.nvars,
            trunc: self.trunc,
            valid: self.valid,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &CoeffPoly) -> TruncSeries {
        let mut out = TruncSeries::zero(self.nvars, self.trunc);
        out.valid = self.valid;
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn scale_int(&self, c: i64) -> TruncSeries {
        self.scale(&CoeffPoly::constant(c))
    }

    /// Multiply by the monomial x^e.
    pub fn shift(&self, e: &[u32]) -> TruncSeries {
        let mut out = TruncSeries::zero(self.nvars, self.trunc);
        out.valid = self.valid;
        for (f, c) in &self.terms {
            let g: Exps = f.iter().zip(e).map(|(a, b)| a + b).collect();
            out.add_term(g, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_compatible(other)?;
        let valid = self.valid.min(other.valid);
        let mut out = TruncSeries::zero(self.nvars, self.trunc);
        out.valid = valid;
        if self.terms.is_empty() || other.terms.is_empty() {
            return Ok(out);
        }
        let mut b_by_deg: Vec<Vec<(&Exps, &CoeffPoly)>> = vec![Vec::new(); valid as usize + 1];
        for (e, c) in &other.terms {
            let d = total(e);
            if d <= valid {
                b_by_deg[d as usize].push((e, c));
            }
        }
        let mut acc: BTreeMap<Exps, CoeffPoly> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            let da = total(ea);
            if da > valid {
                continue;
            }
            for bucket in b_by_deg.iter().take((valid - da) as usize + 1) {
                for (eb, cb) in bucket {
                    let e: Exps = ea.iter().zip(eb.iter()).map(|(a, b)| a + b).collect();
                    acc.entry(e).or_default().add_product(ca, cb);
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        out.terms = acc;
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<TruncSeries> {
        let mut result = TruncSeries::one(self.nvars, self.trunc);
        result.valid = self.valid;
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Multiplicative inverse; the constant term must be the integer 1 or -1.
    pub fn inverse(&self) -> Result<TruncSeries> {
        let c0 = self.coeff(&vec![0; self.nvars]);
        let u = match c0.as_constant() {
            Some(u) if u.abs().is_one() => u,
            _ => return Err(RingError::NotInvertible(c0.to_string())),
        };
        // s = u(1 - t)  =>  s^{-1} = u (1 + t + t^2 + ...), t has no constant term.
        let mut t = self.scale(&CoeffPoly::constant(-u.clone()));
        t.add_term(vec![0; self.nvars], CoeffPoly::one());
        let mut inv = TruncSeries::one(self.nvars, self.trunc);
        inv.valid = self.valid;
        // Horner: 1 + t(1 + t(1 + ...)), depth = valid.
        for _ in 0..self.valid {
            let mut next = t.mul(&inv)?;
            next.add_term(vec![0; self.nvars], CoeffPoly::one());
            inv = next;
        }
        Ok(inv.scale(&CoeffPoly::constant(u)))
    }

    pub fn pow_int(&self, k: i64) -> Result<TruncSeries> {
        if k >= 0 {
            self.pow(k as u32)
        } else {
            self.inverse()?.pow((-k) as u32)
        }
    }

    /// Exact division by (x_i - x_j)^k. The result is valid to degree valid - k.
    pub fn divide_exact(&self, i: usize, j: usize, k: u32) -> Result<TruncSeries> {
        assert!(i != j && i < self.nvars && j < self.nvars);
        if k == 0 {
            return Ok(self.clone());
        }
        if self.valid < k {
            return Err(RingError::Precision { need: k, have: self.valid });
        }
        let mut cur = self.clone();
        for _ in 0..k {
            cur = cur.divide_once(i, j)?;
        }
        Ok(cur)
    }

    fn divide_once(&self, i: usize, j: usize) -> Result<TruncSeries> {
        // Group by the exponents of the other variables and n = e_i + e_j.
        let mut groups: BTreeMap<(Exps, u32), BTreeMap<u32, &CoeffPoly>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let n = e[i] + e[j];
            let mut rest = e.clone();
            rest[i] = 0;
            rest[j] = 0;
            groups.entry((rest, n)).or_default().insert(e[i], c);
        }
        let mut out = TruncSeries::zero(self.nvars, self.trunc);
        out.valid = self.valid - 1;
        for ((rest, n), cs) in groups {
            let degree = total(&rest) + n;
            let fail = RingError::NotDivisible { i: i + 1, j: j + 1, degree };
            if n == 0 {
                return Err(fail);
            }
            // (x_i - x_j) * sum_e q_e x_i^e x_j^(n-1-e): coefficient of x_i^e x_j^(n-e) is q_{e-1} - q_e.
            let zero = CoeffPoly::zero();
            let c = |e: u32| -> &CoeffPoly { cs.get(&e).copied().unwrap_or(&zero) };
            let mut q = c(n).clone();
            let mut quot: Vec<(u32, CoeffPoly)> = Vec::with_capacity(n as usize);
            quot.push((n - 1, q.clone()));
            for e in (1..n).rev() {
                q = c(e) + &q;
                quot.push((e - 1, q.clone()));
            }
            if !(c(0) + &q).is_zero() {
                return Err(fail);
            }
            for (e, v) in quot {
                let mut ex = rest.clone();
                ex[i] = e;
                ex[j] = n - 1 - e;
                out.add_term(ex, v);
            }
        }
        Ok(out)
    }

    /// Permute variables: variable v of self becomes variable perm[v].
    pub fn permute(&self, perm: &[usize]) -> TruncSeries {
        let mut out = TruncSeries::zero(self.nvars, self.trunc);
        out.valid = self.valid;
        for (e, c) in &self.terms {
            let mut f = vec![0; self.nvars];
            for (v, &x) in e.iter().enumerate() {
                f[perm[v]] = x;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    pub fn swap(&self, i: usize, j: usize) -> TruncSeries {
        let mut perm: Vec<usize> = (0..self.nvars).collect();
        perm.swap(i, j);
        self.permute(&perm)
    }

    /// Equality of all coefficients up to total degree d.
    pub fn eq_up_to(&self, other: &TruncSeries, d: u32) -> bool {
        let a = self.terms.iter().filter(|(e, _)| total(e) <= d);
        let b = other.terms.iter().filter(|(e, _)| total(e) <= d);
        a.eq(b)
    }

    /// Equality up to the smaller of the two valid degrees.
    pub fn eq_valid(&self, other: &TruncSeries) -> bool {
        self.eq_up_to(other, self.valid.min(other.valid))
    }

    /// Is the series invariant under every permutation of its variables?
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| self.swap(i, i + 1).eq_valid(self))
    }

    /// First total degree at which swapping x_i and x_j changes the series.
    pub fn asymmetry_degree(&self, i: usize, j: usize) -> Option<u32> {
        let s = self.swap(i, j);
        (0..=self.valid).find(|&d| self.component(d) != s.component(d))
    }

    /// Homogeneous component of total x-degree d, as a term map.
    pub fn component(&self, d: u32) -> BTreeMap<Exps, CoeffPoly> {
        self.terms.iter().filter(|(e, _)| total(e) == d).map(|(e, c)| (e.clone(), c.clone())).collect()
    }

    /// Common graded degree (deg x = 2, deg b_{k,l} = -2(k+l)) of all terms, if any.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut d = None;
        for (e, c) in &self.terms {
            for (m, _) in c.terms() {
                let g = 2 * total(e) as i64 + m.degree();
                match d {
                    None => d = Some(g),
                    Some(h) if h != g => return None,
                    _ => {}
                }
            }
        }
        d
    }

    pub fn is_homogeneous_of(&self, degree: i64) -> bool {
        self.is_zero() || self.homogeneous_degree() == Some(degree)
    }

    /// Replace variable `var` by the series g (which must have no constant term
    /// or the truncation is still exact because degrees only grow).
    pub fn substitute(&self, var: usize, g: &TruncSeries) -> Result<TruncSeries> {
        self.check_compatible(g)?;
        let maxe = self.terms.keys().map(|e| e[var]).max().unwrap_or(0);
        let mut powers = vec![TruncSeries::one(self.nvars, self.trunc)];
        for k in 1..=maxe as usize {
            let next = powers[k - 1].mul(g)?;
            powers.push(next);
        }
        let mut out = TruncSeries::zero(self.nvars, self.trunc);
        out.valid = self.valid.min(g.valid);
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            rest[var] = 0;
            let piece = powers[e[var] as usize].shift(&rest).scale(c);
            out = out.add(&piece)?;
        }
        Ok(out)
    }

    /// Evaluate the b-coefficients at integers, giving a series with constant coefficients.
    pub fn eval_beta(&self, values: &BTreeMap<(u32, u32), BigInt>) -> TruncSeries {
        let mut out = TruncSeries::zero(self.nvars, self.trunc);
        out.valid = self.valid;
        for (e, c) in &self.terms {
            out.add_term(e.clone(), CoeffPoly::constant(c.eval(values)));
        }
        out
    }

    /// Formal derivative with respect to x_var.
    pub fn derivative(&self, var: usize) -> TruncSeries {
        let mut out = TruncSeries::zero(self.nvars, self.trunc);
        out.valid = self.valid.saturating_sub(1);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut f = e.clone();
            f[var] -= 1;
            out.add_term(f, c.scale(&BigInt::from(e[var])));
        }
        out
    }

    /// Keep only the terms with x_var-exponent zero (set x_var = 0).
    pub fn set_zero(&self, var: usize) -> TruncSeries {
        let mut out = TruncSeries::zero(self.nvars, self.trunc);
        out.valid = self.valid;
        for (e, c) in &self.terms {
            if e[var] == 0 {
                out.add_term(e.clone(), c.clone());
            }
        }
        out
    }

    /// Re-embed into a series in `nvars` variables; variable v goes to `map[v]`.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> TruncSeries {
        let mut out = TruncSeries::zero(nvars, self.trunc);
        out.valid = self.valid;
        for (e, c) in &self.terms {
            let mut f = vec![0; nvars];
            for (v, &x) in e.iter().enumerate() {
                f[map[v]] += x;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self.terms.iter().map(|(e, c)| json!([e, c.to_json()])).collect();
        json!({"nvars": self.nvars, "trunc": self.trunc, "valid": self.valid, "terms": terms})
    }

    fn ordered(&self) -> Vec<(&Exps, &CoeffPoly)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| total(a.0).cmp(&total(b.0)).then_with(|| b.0.cmp(a.0)));
        v
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 + O({})", self.valid + 1);
        }
        let mut s = String::new();
        for (idx, (e, c)) in self.ordered().into_iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(v, &x)| if x == 1 { format!("x{}", v + 1) } else { format!("x{}^{}", v + 1, x) })
                .collect();
            let cstr = c.to_string();
            let simple = c.len() == 1;
            let (neg, body) = match (simple, cstr.strip_prefix('-')) {
                (true, Some(rest)) => (true, rest.to_string()),
                _ => (false, cstr.clone()),
            };
            if idx > 0 {
                s.push_str(if neg { " - " } else { " + " });
            } else if neg {
                s.push('-');
            }
            if mono.is_empty() {
                if simple {
                    s.push_str(&body);
                } else {
                    s.push_str(&format!("({body})"));
                }
            } else {
                if body != "1" {
                    if simple {
                        s.push_str(&body);
                    } else {
                        s.push_str(&format!("({body})"));
                    }
                    s.push('*');
                }
                s.push_str(&mono.join("*"));
            }
        }
        write!(f, "{s} + O({})", self.valid + 1)
    }
}

/// Constant term of s.
pub fn constant_term(s: &TruncSeries) -> CoeffPoly {
    s.coeff(&vec![0; s.nvars()])
}

/// True when every coefficient is an integer constant.
pub fn is_integral(s: &TruncSeries) -> bool {
    s.terms().all(|(_, c)| c.as_constant().is_some())
}

/// Convenience: coefficient at a monomial as integer (panics if not constant).
pub fn int_coeff(s: &TruncSeries, e: &[u32]) -> BigInt {
    s.coeff(e).as_constant().expect("non-constant coefficient")
}
