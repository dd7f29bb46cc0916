use crate::error::Result;
use crate::law::{compose1, FormalGroupLaw};
use coeff_ring::{CoeffPoly, TruncSeries};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use std::fmt;

/// log_F(x) = sum_{n>=1} (c_{n-1} / n) x^n, kept as its integral derivative
/// sum c_k x^k so that no rational coefficient type is needed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogSeries {
    deriv: TruncSeries,
}

impl LogSeries {
    pub fn from_derivative(deriv: TruncSeries) -> Self {
        LogSeries { deriv }
    }

    /// Degree up to which log is known.
    pub fn valid(&self) -> u32 {
        self.deriv.valid() + 1
    }

    pub fn derivative(&self) -> &TruncSeries {
        &self.deriv
    }

    /// Coefficient of x^n as a reduced fraction (numerator, denominator).
    pub fn coeff(&self, n: u32) -> (CoeffPoly, BigInt) {
        if n == 0 {
            return (CoeffPoly::zero(), BigInt::one());
        }
        let num = self.deriv.coeff(&[n - 1]);
        let den = BigInt::from(n);
        let g = num.terms().fold(den.clone(), |g, (_, c)| g.gcd(c));
        if g.is_one() || g.is_zero() {
            return (num, den);
        }
        let mut reduced = CoeffPoly::zero();
        for (m, c) in num.terms() {
            reduced.add_term(m.clone(), c / &g);
        }
        (reduced, den / g)
    }

    /// l * log(x), integral when every n <= valid divides l.
    pub fn scaled(&self, l: &BigInt) -> TruncSeries {
        let d = self.deriv.trunc() + 1;
        let mut out = TruncSeries::zero(1, d).with_valid(self.valid());
        for (e, c) in self.deriv.terms() {
            let n = BigInt::from(e[0] + 1);
            debug_assert!((l % &n).is_zero());
            out.add_term(vec![e[0] + 1], c.scale(&(l / n)));
        }
        out
    }

    /// log(F(x, y)) = log x + log y up to the valid degree, checked after
    /// clearing denominators.
    pub fn is_homomorphism_for(&self, law: &FormalGroupLaw) -> Result<bool> {
        let d = self.valid().min(law.trunc);
        let l = (1..=d.max(1)).fold(BigInt::one(), |acc, n| acc.lcm(&BigInt::from(n)));
        let ll = self.scaled(&l).retrunc(d);
        let f = law.series(d)?;
        let lhs = compose1(&ll, &f)?;
        let rhs = ll.embed(2, &[0]).add(&ll.embed(2, &[1]))?;
        Ok(lhs.eq_valid(&rhs))
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = (1..=self.valid())
            .map(|n| (n, self.coeff(n)))
            .filter(|(_, (c, _))| !c.is_zero())
            .map(|(n, (c, den))| json!({"degree": n, "numerator": c.to_json(), "denominator": den.to_string()}))
            .collect();
        json!({"valid": self.valid(), "terms": terms})
    }
}

impl fmt::Display for LogSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for n in 1..=self.valid() {
            let (c, den) = self.coeff(n);
            if c.is_zero() {
                continue;
            }
            let xn = if n == 1 { "x".to_string() } else { format!("x^{n}") };
            let num = if c.len() == 1 { c.to_string() } else { format!("({c})") };
            parts.push(if den.is_one() { format!("{num}*{xn}") } else { format!("{num}/{den}*{xn}") });
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{} + O({})", parts.join(" + "), self.valid() + 1)
    }
}

/// log_F, from log'(x) = 1 / (dF/dy)(x, 0).
pub fn fgl_log(law: &FormalGroupLaw, d: u32) -> Result<LogSeries> {
    let f = law.series(d)?;
    let dfdy = f.derivative(1).set_zero(1);
    // one-variable copy of dF/dy(x, 0), valid to d - 1
    let mut g = TruncSeries::zero(1, d.saturating_sub(1));
    for (e, c) in dfdy.terms() {
        g.add_term(vec![e[0]], c.clone());
    }
    Ok(LogSeries::from_derivative(g.inverse()?))
}
