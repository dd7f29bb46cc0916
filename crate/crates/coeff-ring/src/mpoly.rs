//! Dense-keyed sparse multivariate polynomials over Z.

use crate::error::{Result, RingError};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant<T: Into<BigInt>>(nvars: usize, c: T) -> Self {
        let mut p = MPoly::zero(nvars);
        p.add_term(vec![0; nvars], c.into());
        p
    }

    pub fn one(nvars: usize) -> Self {
        MPoly::constant(nvars, 1)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        MPoly::monomial(e, BigInt::one())
    }

    pub fn monomial(e: Vec<u32>, c: BigInt) -> Self {
        let mut p = MPoly::zero(e.len());
        p.add_term(e, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
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

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut acc: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_default() += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MPoly { nvars: self.nvars, terms: acc }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut result = MPoly::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn shift(&self, e: &[u32]) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(f, c)| (f.iter().zip(e).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn swap(&self, i: usize, j: usize) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = e.clone();
                    f.swap(i, j);
                    (f, c.clone())
                })
                .collect(),
        }
    }

    /// Exact division by (x_i - x_j)^k.
    pub fn divide_exact(&self, i: usize, j: usize, k: u32) -> Result<MPoly> {
        let mut cur = self.clone();
        for _ in 0..k {
            cur = cur.divide_once(i, j)?;
        }
        Ok(cur)
    }

    fn divide_once(&self, i: usize, j: usize) -> Result<MPoly> {
        let mut groups: BTreeMap<(Vec<u32>, u32), BTreeMap<u32, &BigInt>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let n = e[i] + e[j];
            rest[i] = 0;
            rest[j] = 0;
            groups.entry((rest, n)).or_default().insert(e[i], c);
        }
        let mut out = MPoly::zero(self.nvars);
        for ((rest, n), cs) in groups {
            let degree = rest.iter().sum::<u32>() + n;
            let fail = RingError::NotDivisible { i: i + 1, j: j + 1, degree };
            if n == 0 {
                return Err(fail);
            }
            let zero = BigInt::zero();
            let c = |e: u32| -> &BigInt { cs.get(&e).copied().unwrap_or(&zero) };
            let mut q = c(n).clone();
            let mut ex = rest.clone();
            ex[i] = n - 1;
            ex[j] = 0;
            out.add_term(ex, q.clone());
            for e in (1..n).rev() {
                q = c(e) + &q;
                let mut ex = rest.clone();
                ex[i] = e - 1;
                ex[j] = n - e;
                out.add_term(ex, q.clone());
            }
            if !(c(0) + &q).is_zero() {
                return Err(fail);
            }
        }
        Ok(out)
    }

    /// Substitute integer values for all variables.
    pub fn eval(&self, values: &[BigInt]) -> BigInt {
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (x, &k) in values.iter().zip(e) {
                if k > 0 {
                    v *= num_traits::pow(x.clone(), k as usize);
                }
            }
            total += v;
        }
        total
    }

    /// Substitute polynomials for all variables.
    pub fn compose(&self, subs: &[MPoly]) -> MPoly {
        assert_eq!(subs.len(), self.nvars);
        let n = subs[0].nvars;
        let mut cache: BTreeMap<(usize, u32), MPoly> = BTreeMap::new();
        let mut out = MPoly::zero(n);
        for (e, c) in &self.terms {
            let mut t = MPoly::constant(n, c.clone());
            for (v, &k) in e.iter().enumerate() {
                if k > 0 {
                    let p = cache.entry((v, k)).or_insert_with(|| subs[v].pow(k)).clone();
                    t = t.mul(&p);
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Rewrite a polynomial symmetric in (x_i, x_j) as a polynomial in
    /// e1 = x_i + x_j, e2 = x_i x_j. Output variables: the e1 slot replaces i,
    /// the e2 slot replaces j; all other variables are carried along.
    pub fn to_elementary(&self, i: usize, j: usize) -> Result<MPoly> {
        let mut rem = self.clone();
        let mut out = MPoly::zero(self.nvars);
        let e1 = MPoly::var(self.nvars, i).add(&MPoly::var(self.nvars, j));
        let e2 = MPoly::var(self.nvars, i).mul(&MPoly::var(self.nvars, j));
        while let Some((e, c)) = rem.leading_in(i, j) {
            let (a, b) = (e[i], e[j]);
            if a < b {
                return Err(RingError::NotSymmetric(a + b));
            }
            let mut rest = e.clone();
            rest[i] = 0;
            rest[j] = 0;
            let mut oe = rest.clone();
            oe[i] = a - b;
            oe[j] = b;
            out.add_term(oe, c.clone());
            let sub = e1.pow(a - b).mul(&e2.pow(b)).shift(&rest).scale(&c);
            rem = rem.sub(&sub);
        }
        Ok(out)
    }

    /// Term with the largest x_i exponent (ties broken by full exponent order).
    fn leading_in(&self, i: usize, j: usize) -> Option<(Vec<u32>, BigInt)> {
        self.terms
            .iter()
            .max_by(|a, b| (a.0[i], a.0[j], a.0).cmp(&(b.0[i], b.0[j], b.0)))
            .map(|(e, c)| (e.clone(), c.clone()))
    }

    pub fn is_symmetric_in(&self, i: usize, j: usize) -> bool {
        self.swap(i, j) == *self
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn fmt_with(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.iter().sum::<u32>().cmp(&b.0.iter().sum::<u32>()).then_with(|| b.0.cmp(a.0)));
        let mut s = String::new();
        for (idx, (e, c)) in v.into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if idx > 0 {
                s.push_str(if neg { " - " } else { " + " });
            } else if neg {
                s.push('-');
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| if k == 1 { names[v].to_string() } else { format!("{}^{}", names[v], k) })
                .collect();
            if mono.is_empty() {
                s.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    s.push_str(&format!("{a}*"));
                }
                s.push_str(&mono.join("*"));
            }
        }
        s
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        write!(f, "{}", self.fmt_with(&refs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn newton_identity() {
        let x = MPoly::var(2, 0);
        let y = MPoly::var(2, 1);
        let p2 = x.pow(2).add(&y.pow(2));
        let e = p2.to_elementary(0, 1).unwrap();
        // e1^2 - 2 e2
        let mut expect = MPoly::zero(2);
        expect.add_term(vec![2, 0], BigInt::from(1));
        expect.add_term(vec![0, 1], BigInt::from(-2));
        assert_eq!(e, expect);
    }

    #[test]
    fn asymmetric_rejected() {
        let x = MPoly::var(2, 0);
        assert!(matches!(x.to_elementary(0, 1), Err(RingError::NotSymmetric(_))));
    }

    #[test]
    fn division_round_trip() {
        let x = MPoly::var(3, 0);
        let y = MPoly::var(3, 1);
        let z = MPoly::var(3, 2);
        let f = x.pow(3).add(&z.mul(&y)).add(&MPoly::constant(3, 5));
        let d = x.sub(&y);
        let g = f.mul(&d.pow(2));
        assert_eq!(g.divide_exact(0, 1, 2).unwrap(), f);
        assert!(f.divide_exact(0, 1, 1).is_err());
    }
}
