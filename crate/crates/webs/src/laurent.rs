//! Laurent polynomials in q with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Laurent(BTreeMap<i64, i64>);

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::monomial(0, 1)
    }

    pub fn monomial(exp: i64, c: i64) -> Self {
        let mut l = Laurent::zero();
        l.add_term(exp, c);
        l
    }

    /// q + q^{-1}
    pub fn quantum_two() -> Self {
        Laurent::monomial(1, 1).add(&Laurent::monomial(-1, 1))
    }

    pub fn add_term(&mut self, exp: i64, c: i64) {
        let v = self.0.entry(exp).or_insert(0);
        *v += c;
        if *v == 0 {
            self.0.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.0.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.0.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, o: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in o.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn neg(&self) -> Laurent {
        Laurent(self.0.iter().map(|(&e, &c)| (e, -c)).collect())
    }

    pub fn sub(&self, o: &Laurent) -> Laurent {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (a, x) in self.terms() {
            for (b, y) in o.terms() {
                out.add_term(a + b, x * y);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Laurent {
        (0..n).fold(Laurent::one(), |acc, _| acc.mul(self))
    }

    /// Multiply by q^k.
    pub fn shift(&self, k: i64) -> Laurent {
        Laurent(self.0.iter().map(|(&e, &c)| (e + k, c)).collect())
    }

    /// Substitute q -> q^{-1}.
    pub fn bar(&self) -> Laurent {
        Laurent(self.0.iter().map(|(&e, &c)| (-e, c)).collect())
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let (sign, abs) = if c < 0 { ("-", -c) } else { ("+", c) };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let coef = if abs == 1 && e != 0 { String::new() } else { abs.to_string() };
            match e {
                0 => write!(f, "{abs}")?,
                1 => write!(f, "{coef}q")?,
                _ => write!(f, "{coef}q^{e}")?,
            }
        }
        Ok(())
    }
}
