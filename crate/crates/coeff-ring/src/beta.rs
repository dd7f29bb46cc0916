//! Polynomials in the graded variables b_{k,l}, deg b_{k,l} = -2(k+l).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Monomial in the b_{k,l}: sorted list of (k, l, exponent).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BetaMono(Vec<(u32, u32, u32)>);

impl BetaMono {
    pub fn one() -> Self {
        BetaMono(Vec::new())
    }

    pub fn var(k: u32, l: u32) -> Self {
        assert!(k + l > 0, "b_(0,0) is not a variable");
        BetaMono(vec![(k, l, 1)])
    }

    pub fn from_factors(mut f: Vec<(u32, u32, u32)>) -> Self {
        f.retain(|t| t.2 > 0);
        f.sort();
        let mut out: Vec<(u32, u32, u32)> = Vec::with_capacity(f.len());
        for (k, l, e) in f {
            assert!(k + l > 0, "b_(0,0) is not a variable");
            match out.last_mut() {
                Some(last) if last.0 == k && last.1 == l => last.2 += e,
                _ => out.push((k, l, e)),
            }
        }
        BetaMono(out)
    }

    pub fn factors(&self) -> &[(u32, u32, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of (k+l)*e; the grading degree is -2 times this.
    pub fn weight(&self) -> u32 {
        self.0.iter().map(|&(k, l, e)| (k + l) * e).sum()
    }

    pub fn degree(&self) -> i64 {
        -2 * self.weight() as i64
    }

    pub fn mul(&self, other: &BetaMono) -> BetaMono {
        if self.0.is_empty() {
            return other.clone();
        }
        if other.0.is_empty() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let a = self.0[i];
            let b = other.0[j];
            match (a.0, a.1).cmp(&(b.0, b.1)) {
                std::cmp::Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a.0, a.1, a.2 + b.2));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        BetaMono(out)
    }

    fn fmt_into(&self, s: &mut String) {
        let mut first = true;
        for &(k, l, e) in &self.0 {
            if !first {
                s.push('*');
            }
            first = false;
            s.push_str(&format!("b{k}_{l}"));
            if e > 1 {
                s.push_str(&format!("^{e}"));
            }
        }
    }
}

/// Sparse polynomial over Z in the b_{k,l}. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct CoeffPoly {
    terms: BTreeMap<BetaMono, BigInt>,
}

impl CoeffPoly {
    pub fn zero() -> Self {
        CoeffPoly::default()
    }

    pub fn one() -> Self {
        CoeffPoly::constant(BigInt::one())
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        let c = c.into();
        let mut p = CoeffPoly::zero();
        if !c.is_zero() {
            p.terms.insert(BetaMono::one(), c);
        }
        p
    }

    pub fn var(k: u32, l: u32) -> Self {
        CoeffPoly::monomial(BetaMono::var(k, l), BigInt::one())
    }

    pub fn monomial(m: BetaMono, c: BigInt) -> Self {
        let mut p = CoeffPoly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BetaMono, &BigInt)> {
        self.terms.iter()
    }

    /// The value if the polynomial has only a constant term (or is zero).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                if m.is_one() {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: BetaMono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &CoeffPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub_assign_ref(&mut self, other: &CoeffPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }

    /// self += a * b
    pub fn add_product(&mut self, a: &CoeffPoly, b: &CoeffPoly) {
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.add_term(ma.mul(mb), ca * cb);
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> CoeffPoly {
        if c.is_zero() {
            return CoeffPoly::zero();
        }
        CoeffPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Grading degree of every term, if homogeneous.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(|m| m.degree());
        let d = it.next()?;
        if it.all(|e| e == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn component(&self, degree: i64) -> CoeffPoly {
        CoeffPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Evaluate with the given integer values; unassigned variables are 0.
    pub fn eval(&self, values: &BTreeMap<(u32, u32), BigInt>) -> BigInt {
        let mut total = BigInt::zero();
        'terms: for (m, c) in &self.terms {
            let mut v = c.clone();
            for &(k, l, e) in m.factors() {
                match values.get(&(k, l)) {
                    Some(b) if !b.is_zero() => v *= num_traits::pow(b.clone(), e as usize),
                    _ => continue 'terms,
                }
            }
            total += v;
        }
        total
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    let f: Vec<Value> = m.factors().iter().map(|&(k, l, e)| json!([k, l, e])).collect();
                    json!([f, c.to_string()])
                })
                .collect(),
        )
    }

    /// Terms in degree-lex order: lower weight first, then lexicographic.
    fn ordered(&self) -> Vec<(&BetaMono, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.weight().cmp(&b.0.weight()).then_with(|| a.0.cmp(b.0)));
        v
    }
}

impl fmt::Display for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.ordered().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    s.push_str(&a.to_string());
                    s.push('*');
                }
                m.fmt_into(&mut s);
            }
        }
        write!(f, "{s}")
    }
}

impl Add for &CoeffPoly {
    type Output = CoeffPoly;
    fn add(self, rhs: &CoeffPoly) -> CoeffPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &CoeffPoly {
    type Output = CoeffPoly;
    fn sub(self, rhs: &CoeffPoly) -> CoeffPoly {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl Neg for &CoeffPoly {
    type Output = CoeffPoly;
    fn neg(self) -> CoeffPoly {
        CoeffPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &CoeffPoly {
    type Output = CoeffPoly;
    fn mul(self, rhs: &CoeffPoly) -> CoeffPoly {
        let mut out = CoeffPoly::zero();
        out.add_product(self, rhs);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grading_of_monomials() {
        let m = BetaMono::var(1, 2).mul(&BetaMono::var(1, 0));
        assert_eq!(m.degree(), -8);
        let p = &CoeffPoly::var(1, 0) * &CoeffPoly::var(0, 1);
        assert_eq!(p.homogeneous_degree(), Some(-4));
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let a = CoeffPoly::var(2, 1);
        let z = &a - &a;
        assert!(z.is_zero());
        assert_eq!(z.len(), 0);
    }

    #[test]
    fn display_is_degree_lex() {
        let p = &(&CoeffPoly::var(1, 1) + &CoeffPoly::constant(3)) - &CoeffPoly::var(1, 0);
        assert_eq!(p.to_string(), "3 - b1_0 + b1_1");
    }

    #[test]
    fn evaluation_defaults_to_zero() {
        let p = &CoeffPoly::var(1, 0) * &CoeffPoly::var(1, 0);
        let p = &p + &CoeffPoly::var(0, 1);
        let mut v = BTreeMap::new();
        v.insert((1, 0), BigInt::from(3));
        assert_eq!(p.eval(&v), BigInt::from(9));
    }
}
