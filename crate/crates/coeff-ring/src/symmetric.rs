//! Rewriting symmetric two-variable series in E1 = x1 + x2, E2 = x1 x2.

use crate::beta::CoeffPoly;
use crate::error::{Result, RingError};
use crate::series::TruncSeries;
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;

/// sum c_{a,b} E1^a E2^b with `CoeffPoly` coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EPoly {
    pub terms: BTreeMap<(u32, u32), CoeffPoly>,
}

impl EPoly {
    /// Expand back into a series in x1, x2.
    pub fn expand(&self, d: u32) -> Result<TruncSeries> {
        let x1 = TruncSeries::var(2, d, 0);
        let x2 = TruncSeries::var(2, d, 1);
        let e1 = x1.add(&x2)?;
        let e2 = x1.mul(&x2)?;
        let mut out = TruncSeries::zero(2, d);
        for (&(a, b), c) in &self.terms {
            out = out.add(&e1.pow(a)?.mul(&e2.pow(b)?)?.scale(c))?;
        }
        Ok(out)
    }

    pub fn coeff(&self, a: u32, b: u32) -> CoeffPoly {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }
}

impl fmt::Display for EPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(a, b), c)| {
                let mut m = Vec::new();
                if a > 0 {
                    m.push(if a == 1 { "E1".to_string() } else { format!("E1^{a}") });
                }
                if b > 0 {
                    m.push(if b == 1 { "E2".to_string() } else { format!("E2^{b}") });
                }
                if m.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{}", m.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Exact rewriting of a series symmetric in x1, x2 up to its valid degree.
pub fn to_elementary_symmetric(s: &TruncSeries) -> Result<EPoly> {
    if s.nvars() != 2 {
        return Err(RingError::DimensionMismatch(format!("expected 2 variables, got {}", s.nvars())));
    }
    let v = s.valid();
    let mut out = EPoly::default();
    // Work one total degree at a time; E1^a E2^b has x-degree a + 2b.
    for d in 0..=v {
        let mut comp: BTreeMap<u32, CoeffPoly> = s.component(d).into_iter().map(|(e, c)| (e[0], c)).collect();
        while let Some((&a_exp, _)) = comp.iter().next_back() {
            let c = comp.remove(&a_exp).unwrap();
            let b_exp = d - a_exp;
            if a_exp < b_exp {
                return Err(RingError::NotSymmetric(d));
            }
            let (a, b) = (a_exp - b_exp, b_exp);
            // E1^a E2^b = sum_k C(a,k) x1^(k+b) x2^(a-k+b)
            let mut binom = BigInt::from(1);
            for k in 0..=a {
                if k > 0 {
                    binom = binom * BigInt::from(a - k + 1) / BigInt::from(k);
                }
                let key = k + b;
                if key == a_exp {
                    continue;
                }
                let entry = comp.entry(key).or_default();
                entry.sub_assign_ref(&c.scale(&binom));
                if entry.is_zero() {
                    comp.remove(&key);
                }
            }
            out.terms.insert((a, b), c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let x1 = TruncSeries::var(2, 6, 0);
        let x2 = TruncSeries::var(2, 6, 1);
        let e = to_elementary_symmetric(&x1.add(&x2).unwrap()).unwrap();
        assert_eq!(e.terms.len(), 1);
        assert!(e.coeff(1, 0).is_one());
        let p2 = x1.pow(2).unwrap().add(&x2.pow(2).unwrap()).unwrap();
        let e = to_elementary_symmetric(&p2).unwrap();
        assert!(e.coeff(2, 0).is_one());
        assert_eq!(e.coeff(0, 1), CoeffPoly::constant(-2));
        assert!(to_elementary_symmetric(&x1).is_err());
    }

    #[test]
    fn round_trip() {
        let x1 = TruncSeries::var(2, 8, 0);
        let x2 = TruncSeries::var(2, 8, 1);
        let s = x1.pow(3).unwrap().mul(&x2).unwrap().add(&x2.pow(3).unwrap().mul(&x1).unwrap()).unwrap();
        let s = s.add(&x1.mul(&x2).unwrap().scale(&CoeffPoly::var(1, 1))).unwrap();
        let e = to_elementary_symmetric(&s).unwrap();
        assert!(e.expand(8).unwrap().eq_valid(&s));
    }
}
