//! The ground ring R = Z[E1, E2, r0, r1, rho^{+-1}] / (r1^2 - E1 r0 r1 + E2 r0^2 + rho).
//!
//! Normal form: Z-combinations of r1^n1 r0^n2 rho^n3 E1^a E2^b with n1 in {0, 1}.

use crate::error::{Result, RingError};
use crate::mpoly::MPoly;
use crate::series::TruncSeries;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::fmt;

/// (n1, n2, n3, a, b) for r1^n1 r0^n2 rho^n3 E1^a E2^b.
pub type GKey = (u8, u32, i32, u32, u32);

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct GroundRingElem {
    terms: BTreeMap<GKey, BigInt>,
}

/// Integer images of the generators; rho is derived from the defining relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundTarget {
    pub e1: BigInt,
    pub e2: BigInt,
    pub rho0: BigInt,
    pub rho1: BigInt,
}

impl GroundTarget {
    pub fn new(e1: i64, e2: i64, rho0: i64, rho1: i64) -> Self {
        GroundTarget { e1: e1.into(), e2: e2.into(), rho0: rho0.into(), rho1: rho1.into() }
    }

    pub fn rho(&self) -> BigInt {
        -(&self.rho1 * &self.rho1 - &self.e1 * &self.rho1 * &self.rho0 + &self.e2 * &self.rho0 * &self.rho0)
    }
}

impl GroundRingElem {
    pub fn zero() -> Self {
        GroundRingElem::default()
    }

    pub fn one() -> Self {
        GroundRingElem::integer(1)
    }

    pub fn integer<T: Into<BigInt>>(c: T) -> Self {
        let mut g = GroundRingElem::zero();
        g.add_term((0, 0, 0, 0, 0), c.into());
        g
    }

    pub fn e1() -> Self {
        GroundRingElem::monomial((0, 0, 0, 1, 0))
    }
    pub fn e2() -> Self {
        GroundRingElem::monomial((0, 0, 0, 0, 1))
    }
    pub fn rho0() -> Self {
        GroundRingElem::monomial((0, 1, 0, 0, 0))
    }
    pub fn rho1() -> Self {
        GroundRingElem::monomial((1, 0, 0, 0, 0))
    }
    pub fn rho() -> Self {
        GroundRingElem::monomial((0, 0, 1, 0, 0))
    }
    pub fn rho_pow(k: i32) -> Self {
        GroundRingElem::monomial((0, 0, k, 0, 0))
    }

    /// rho_n, the value of the thin sphere with n dots: r_{n+2} = E1 r_{n+1} - E2 r_n.
    pub fn rho_n(n: u32) -> Self {
        let (mut a, mut b) = (GroundRingElem::rho0(), GroundRingElem::rho1());
        for _ in 0..n {
            let c = GroundRingElem::e1().mul(&b).sub(&GroundRingElem::e2().mul(&a));
            a = b;
            b = c;
        }
        a
    }

    pub fn monomial(k: GKey) -> Self {
        assert!(k.0 <= 1, "monomial keys must be reduced");
        let mut g = GroundRingElem::zero();
        g.add_term(k, BigInt::one());
        g
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GKey, &BigInt)> {
        self.terms.iter()
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

    fn add_term(&mut self, k: GKey, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
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

    /// Add c * r1^n1 r0^n2 rho^n3 E1^a E2^b with n1 in {0,1,2}, reducing n1 = 2.
    fn add_reduced(&mut self, k: (u8, u32, i32, u32, u32), c: BigInt) {
        let (n1, n2, n3, a, b) = k;
        match n1 {
            0 | 1 => self.add_term(k, c),
            2 => {
                // r1^2 = E1 r0 r1 - E2 r0^2 - rho
                self.add_term((1, n2 + 1, n3, a + 1, b), c.clone());
                self.add_term((0, n2 + 2, n3, a, b + 1), -c.clone());
                self.add_term((0, n2, n3 + 1, a, b), -c);
            }
            _ => unreachable!("products of reduced terms have n1 <= 2"),
        }
    }

    pub fn add(&self, other: &GroundRingElem) -> GroundRingElem {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &GroundRingElem) -> GroundRingElem {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, -c);
        }
        out
    }

    pub fn neg(&self) -> GroundRingElem {
        GroundRingElem { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }

    pub fn scale<T: Into<BigInt>>(&self, c: T) -> GroundRingElem {
        let c = c.into();
        let mut out = GroundRingElem::zero();
        for (k, v) in &self.terms {
            out.add_term(*k, v * &c);
        }
        out
    }

    pub fn mul(&self, other: &GroundRingElem) -> GroundRingElem {
        let mut out = GroundRingElem::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let k = (ka.0 + kb.0, ka.1 + kb.1, ka.2 + kb.2, ka.3 + kb.3, ka.4 + kb.4);
                out.add_reduced(k, ca * cb);
            }
        }
        out
    }

    /// Power; negative exponents are allowed only for units +-rho^k.
    pub fn pow(&self, k: i64) -> Result<GroundRingElem> {
        if k < 0 {
            let inv = self.unit_inverse().ok_or_else(|| RingError::NotInvertible(self.to_string()))?;
            return inv.pow(-k);
        }
        let mut result = GroundRingElem::one();
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        Ok(result)
    }

    /// If self = +-rho^k, returns (sign, k).
    pub fn as_unit(&self) -> Option<(i32, i32)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (k, c) = self.terms.iter().next().unwrap();
        if k.0 == 0 && k.1 == 0 && k.3 == 0 && k.4 == 0 && c.abs().is_one() {
            Some((if c.is_positive() { 1 } else { -1 }, k.2))
        } else {
            None
        }
    }

    pub fn unit_inverse(&self) -> Option<GroundRingElem> {
        self.as_unit().map(|(s, k)| GroundRingElem::rho_pow(-k).scale(s))
    }

    /// Multiply by rho^k.
    pub fn mul_rho_pow(&self, k: i32) -> GroundRingElem {
        GroundRingElem { terms: self.terms.iter().map(|(key, c)| ((key.0, key.1, key.2 + k, key.3, key.4), c.clone())).collect() }
    }

    pub fn term_degree(k: &GKey) -> i64 {
        2 * k.3 as i64 + 4 * k.4 as i64 - 2 * k.1 as i64
    }

    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(GroundRingElem::term_degree);
        let d = it.next()?;
        if it.all(|e| e == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_homogeneous_of(&self, d: i64) -> bool {
        self.is_zero() || self.homogeneous_degree() == Some(d)
    }

    /// Normal form of a raw polynomial in r1, r0, rho^{+-1}, E1, E2 with
    /// arbitrary r1 exponent; keys are (n1, n2, n3, a, b) with n1 unrestricted.
    pub fn from_raw(raw: &BTreeMap<(u32, u32, i32, u32, u32), BigInt>) -> GroundRingElem {
        let mut out = GroundRingElem::zero();
        let r1 = GroundRingElem::rho1();
        for (&(n1, n2, n3, a, b), c) in raw {
            let mut t = GroundRingElem::zero();
            t.add_term((0, n2, n3, a, b), c.clone());
            for _ in 0..n1 {
                t = t.mul(&r1);
            }
            out = out.add(&t);
        }
        out
    }

    /// Convert to poly * rho^(-k) with poly in Z[E1, E2, r0, r1] (variables in that order),
    /// substituting rho = -(r1^2 - E1 r0 r1 + E2 r0^2). The map is injective.
    pub fn to_localized(&self) -> (MPoly, u32) {
        let k = self.terms.keys().map(|key| key.2).min().unwrap_or(0).min(0);
        let shift = (-k) as u32;
        let rho = rho_poly();
        let mut out = MPoly::zero(4);
        let mut cache: BTreeMap<u32, MPoly> = BTreeMap::new();
        for (key, c) in &self.terms {
            let e = (key.2 + shift as i32) as u32;
            let rp = cache.entry(e).or_insert_with(|| rho.pow(e)).clone();
            let mono = MPoly::monomial(vec![key.3, key.4, key.1, key.0 as u32], c.clone());
            out = out.add(&mono.mul(&rp));
        }
        (out, shift)
    }

    /// Inverse of `to_localized`.
    pub fn from_localized(p: &MPoly, k: u32) -> GroundRingElem {
        let mut raw: BTreeMap<(u32, u32, i32, u32, u32), BigInt> = BTreeMap::new();
        for (e, c) in p.terms() {
            *raw.entry((e[3], e[2], -(k as i32), e[0], e[1])).or_default() += c;
        }
        GroundRingElem::from_raw(&raw)
    }

    /// Exact quotient self / other in R, if it exists.
    pub fn div_exact(&self, other: &GroundRingElem) -> Option<GroundRingElem> {
        if other.is_zero() {
            return None;
        }
        if let Some(inv) = other.unit_inverse() {
            return Some(self.mul(&inv));
        }
        let (a, ka) = self.to_localized();
        let (b, kb) = other.to_localized();
        // self/other = (a / b) * rho^(kb - ka); clear rho-powers of b by trying a * rho^j.
        let rho = rho_poly();
        let mut num = a;
        for j in 0..=8u32 {
            if let Some(q) = poly_div_exact(&num, &b) {
                return Some(GroundRingElem::from_localized(&q, ka + j).mul_rho_pow(kb as i32));
            }
            num = num.mul(&rho);
        }
        None
    }

    /// Image under a ground target. Fails with NonUnitRho when a negative rho power
    /// meets a non-unit image.
    pub fn specialize(&self, t: &GroundTarget) -> Result<BigInt> {
        let rho = t.rho();
        let needs_inverse = self.terms.keys().any(|k| k.2 < 0);
        if needs_inverse && !rho.abs().is_one() {
            return Err(RingError::NonUnitRho(rho.to_string()));
        }
        let mut total = BigInt::zero();
        for (k, c) in &self.terms {
            let mut v = c.clone();
            if k.0 == 1 {
                v *= &t.rho1;
            }
            v *= num_traits::pow(t.rho0.clone(), k.1 as usize);
            // rho = +-1 when the exponent is negative, so rho^n3 = rho^|n3|
            v *= num_traits::pow(rho.clone(), k.2.unsigned_abs() as usize);
            v *= num_traits::pow(t.e1.clone(), k.3 as usize);
            v *= num_traits::pow(t.e2.clone(), k.4 as usize);
            total += v;
        }
        Ok(total)
    }

    /// Expansion as a power series in x1, x2 from the pair (p12, p21).
    pub fn expand_in_series(&self, p12: &TruncSeries, p21: &TruncSeries) -> Result<TruncSeries> {
        let gens = SeriesGenerators::new(p12, p21)?;
        gens.expand(self)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(k, c)| json!({"rho1": k.0, "rho0": k.1, "rho": k.2, "E1": k.3, "E2": k.4, "c": c.to_string()}))
                .collect(),
        )
    }

    /// Parse a formal word such as `rho1^2 - 3*E1*rho0*rho^-1`.
    pub fn parse(s: &str) -> Result<GroundRingElem> {
        let mut p = Parser { chars: s.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 };
        let e = p.expr()?;
        if p.pos != p.chars.len() {
            return Err(RingError::Parse(format!("unexpected input at position {}", p.pos)));
        }
        Ok(e)
    }

    fn ordered(&self) -> Vec<(&GKey, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            let da = GroundRingElem::term_degree(a.0);
            let db = GroundRingElem::term_degree(b.0);
            db.cmp(&da).then_with(|| b.0 .3.cmp(&a.0 .3)).then_with(|| b.0 .4.cmp(&a.0 .4)).then_with(|| a.0.cmp(b.0))
        });
        v
    }
}

/// rho = -(r1^2 - E1 r0 r1 + E2 r0^2) in Z[E1, E2, r0, r1].
pub fn rho_poly() -> MPoly {
    let mut p = MPoly::zero(4);
    p.add_term(vec![0, 0, 0, 2], BigInt::from(-1));
    p.add_term(vec![1, 0, 1, 1], BigInt::from(1));
    p.add_term(vec![0, 1, 2, 0], BigInt::from(-1));
    p
}

/// Exact division a / b in Z[vars]; None if b does not divide a.
pub fn poly_div_exact(a: &MPoly, b: &MPoly) -> Option<MPoly> {
    if b.is_zero() {
        return None;
    }
    let lead = |p: &MPoly| -> Option<(Vec<u32>, BigInt)> {
        p.terms()
            .max_by(|x, y| (x.0.iter().sum::<u32>(), x.0).cmp(&(y.0.iter().sum::<u32>(), y.0)))
            .map(|(e, c)| (e.clone(), c.clone()))
    };
    let (lb, cb) = lead(b)?;
    let mut rem = a.clone();
    let mut q = MPoly::zero(a.nvars());
    while let Some((la, ca)) = lead(&rem) {
        if la.iter().zip(&lb).any(|(x, y)| x < y) {
            return None;
        }
        if !(&ca % &cb).is_zero() {
            return None;
        }
        let e: Vec<u32> = la.iter().zip(&lb).map(|(x, y)| x - y).collect();
        let t = MPoly::monomial(e, &ca / &cb);
        rem = rem.sub(&t.mul(b));
        q = q.add(&t);
    }
    Some(q)
}

/// Series images of E1, E2, r0, r1, rho, rho^{-1}.
pub struct SeriesGenerators {
    pub e1: TruncSeries,
    pub e2: TruncSeries,
    pub r0: TruncSeries,
    pub r1: TruncSeries,
    pub rho: TruncSeries,
    /// Computed on first use; the inverse is the expensive part.
    rho_inv: OnceLock<TruncSeries>,
}

impl SeriesGenerators {
    pub fn new(p12: &TruncSeries, p21: &TruncSeries) -> Result<Self> {
        let n = p12.nvars();
        let d = p12.trunc();
        let x1 = TruncSeries::var(n, d, 0);
        let x2 = TruncSeries::var(n, d, 1);
        let r0 = p12.sub(p21)?.divide_exact(0, 1, 1)?;
        let r1 = x1.mul(p12)?.sub(&x2.mul(p21)?)?.divide_exact(0, 1, 1)?;
        let rho = p12.mul(p21)?.neg();
        Ok(SeriesGenerators { e1: x1.add(&x2)?, e2: x1.mul(&x2)?, r0, r1, rho, rho_inv: OnceLock::new() })
    }

    pub fn rho_inv(&self) -> Result<&TruncSeries> {
        if let Some(s) = self.rho_inv.get() {
            return Ok(s);
        }
        let inv = self.rho.inverse()?;
        Ok(self.rho_inv.get_or_init(|| inv))
    }

    pub fn expand(&self, g: &GroundRingElem) -> Result<TruncSeries> {
        let n = self.e1.nvars();
        let d = self.e1.trunc();
        let mut cache: BTreeMap<(u8, i64), TruncSeries> = BTreeMap::new();
        let mut power = |which: u8, k: i64| -> Result<TruncSeries> {
            if let Some(s) = cache.get(&(which, k)) {
                return Ok(s.clone());
            }
            let base = match (which, k < 0) {
                (0, _) => &self.r1,
                (1, _) => &self.r0,
                (2, false) => &self.rho,
                (2, true) => self.rho_inv()?,
                (3, _) => &self.e1,
                _ => &self.e2,
            };
            let s = base.pow(k.unsigned_abs() as u32)?;
            cache.insert((which, k), s.clone());
            Ok(s)
        };
        let mut out = TruncSeries::zero(n, d).with_valid(self.r0.valid());
        for (k, c) in g.terms() {
            let mut t = TruncSeries::constant(n, d, crate::beta::CoeffPoly::constant(c.clone()));
            for (which, e) in [(0u8, k.0 as i64), (1, k.1 as i64), (2, k.2 as i64), (3, k.3 as i64), (4, k.4 as i64)] {
                if e != 0 {
                    t = t.mul(&power(which, e)?)?;
                }
            }
            out = out.add(&t)?;
        }
        Ok(out.with_valid(self.r0.valid()))
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<GroundRingElem> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                '-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<GroundRingElem> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<GroundRingElem> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let neg = if self.peek() == Some('-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let n = self.integer()?;
            let k = n.to_i64().ok_or_else(|| RingError::Parse("exponent too large".into()))?;
            return base.pow(if neg { -k } else { k });
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(RingError::Parse(format!("expected integer at position {start}")));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().unwrap())
    }

    fn atom(&mut self) -> Result<GroundRingElem> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(RingError::Parse("missing ')'".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(GroundRingElem::integer(self.integer()?)),
            Some(_) => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                match name.as_str() {
                    "E1" => Ok(GroundRingElem::e1()),
                    "E2" => Ok(GroundRingElem::e2()),
                    "rho0" | "ρ0" => Ok(GroundRingElem::rho0()),
                    "rho1" | "ρ1" => Ok(GroundRingElem::rho1()),
                    "rho" | "ρ" => Ok(GroundRingElem::rho()),
                    _ => {
                        if let Some(n) = name.strip_prefix("rho").and_then(|r| r.parse::<u32>().ok()) {
                            Ok(GroundRingElem::rho_n(n))
                        } else {
                            Err(RingError::Parse(format!("unknown generator '{name}'")))
                        }
                    }
                }
            }
            None => Err(RingError::Parse("unexpected end of input".into())),
        }
    }
}

impl fmt::Display for GroundRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (idx, (k, c)) in self.ordered().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if idx > 0 {
                s.push_str(if neg { " - " } else { " + " });
            } else if neg {
                s.push('-');
            }
            let mut parts: Vec<String> = Vec::new();
            let mut push = |name: &str, e: i64| {
                if e == 1 {
                    parts.push(name.to_string());
                } else if e != 0 {
                    parts.push(format!("{name}^{e}"));
                }
            };
            push("E1", k.3 as i64);
            push("E2", k.4 as i64);
            push("rho0", k.1 as i64);
            push("rho1", k.0 as i64);
            push("rho", k.2 as i64);
            if parts.is_empty() {
                s.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    s.push_str(&format!("{a}*"));
                }
                s.push_str(&parts.join("*"));
            }
        }
        write!(f, "{s}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rho1_squared_reduces() {
        let g = GroundRingElem::rho1().mul(&GroundRingElem::rho1());
        let expect = GroundRingElem::parse("E1*rho0*rho1 - E2*rho0^2 - rho").unwrap();
        assert_eq!(g, expect);
    }

    #[test]
    fn rho_times_inverse() {
        let g = GroundRingElem::rho().mul(&GroundRingElem::rho_pow(-1));
        assert_eq!(g, GroundRingElem::one());
    }

    #[test]
    fn rho2_is_already_normal() {
        let g = GroundRingElem::parse("E1*rho1 - E2*rho0").unwrap();
        assert_eq!(g, GroundRingElem::rho_n(2));
        assert_eq!(g.len(), 2);
    }

    #[test]
    fn specialization_examples() {
        let kh = GroundTarget::new(0, 0, 0, 1);
        assert_eq!(GroundRingElem::rho().specialize(&kh).unwrap(), BigInt::from(-1));
        assert_eq!(GroundRingElem::rho1().specialize(&kh).unwrap(), BigInt::from(1));
        let t = GroundTarget::new(0, 0, 2, 1);
        let g = GroundRingElem::parse("rho0^2*rho^-1").unwrap();
        assert_eq!(g.specialize(&t).unwrap(), BigInt::from(-4));
        let bad = GroundTarget::new(0, 0, 1, 2);
        assert!(matches!(g.specialize(&bad), Err(RingError::NonUnitRho(_))));
    }

    #[test]
    fn localized_round_trip() {
        let g = GroundRingElem::parse("rho1*rho0^2*rho^-2 + E1*E2 - 3*rho1").unwrap();
        let (p, k) = g.to_localized();
        assert_eq!(GroundRingElem::from_localized(&p, k), g);
    }

    #[test]
    fn determinant_of_circle_gram_is_rho() {
        let r0 = GroundRingElem::rho_n(0);
        let r1 = GroundRingElem::rho_n(1);
        let r2 = GroundRingElem::rho_n(2);
        assert_eq!(r0.mul(&r2).sub(&r1.mul(&r1)), GroundRingElem::rho());
    }

    #[test]
    fn exact_division() {
        let a = GroundRingElem::parse("(E1 + rho0)*(rho1 - E2*rho0)").unwrap();
        let b = GroundRingElem::parse("rho1 - E2*rho0").unwrap();
        assert_eq!(a.div_exact(&b).unwrap(), GroundRingElem::parse("E1 + rho0").unwrap());
        assert!(GroundRingElem::e1().div_exact(&GroundRingElem::e2()).is_none());
    }
}
