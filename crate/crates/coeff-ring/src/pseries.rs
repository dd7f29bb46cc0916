//! The series p(x, y) = 1 + sum b_{k,l} x^k y^l and its placements p(x_i, x_j).

use crate::beta::CoeffPoly;
use crate::series::TruncSeries;
use num_bigint::BigInt;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PSeries {
    /// All b_{k,l} symbolic.
    Generic,
    /// b_{k,l} given by integers; unlisted ones are zero.
    Integer(BTreeMap<(u32, u32), BigInt>),
    /// An explicit two-variable series p(x, y) with constant term 1.
    Explicit(TruncSeries),
}

impl PSeries {
    /// p = 1 (the undeformed case).
    pub fn trivial() -> Self {
        PSeries::Integer(BTreeMap::new())
    }

    pub fn integer(values: &[((u32, u32), i64)]) -> Self {
        PSeries::Integer(values.iter().map(|&(k, v)| (k, BigInt::from(v))).collect())
    }

    /// Whether p(x,y) = p(y,x) by construction.
    pub fn is_symmetric(&self) -> Option<bool> {
        match self {
            PSeries::Generic => Some(false),
            PSeries::Integer(m) => Some(m.iter().all(|(&(k, l), v)| m.get(&(l, k)).cloned().unwrap_or_default() == *v)),
            PSeries::Explicit(s) => Some(s.swap(0, 1).eq_valid(s)),
        }
    }

    /// p as a series in two variables truncated at d.
    pub fn two_var(&self, d: u32) -> TruncSeries {
        match self {
            PSeries::Generic => {
                let mut s = TruncSeries::one(2, d);
                for tot in 1..=d {
                    for k in 0..=tot {
                        s.add_term(vec![k, tot - k], CoeffPoly::var(k, tot - k));
                    }
                }
                s
            }
            PSeries::Integer(m) => {
                let mut s = TruncSeries::one(2, d);
                for (&(k, l), v) in m {
                    if k + l <= d && k + l > 0 {
                        s.add_term(vec![k, l], CoeffPoly::constant(v.clone()));
                    }
                }
                s
            }
            PSeries::Explicit(s) => {
                assert!(s.trunc() >= d, "explicit p truncated below requested degree");
                let mut out = TruncSeries::zero(2, d);
                for (e, c) in s.terms() {
                    if e[0] + e[1] <= d {
                        out.add_term(e.clone(), c.clone());
                    }
                }
                out.with_valid(s.valid().min(d))
            }
        }
    }

    /// p(x_i, x_j) inside a series ring with n variables.
    pub fn placed(&self, n: usize, d: u32, i: usize, j: usize) -> TruncSeries {
        let mut map = vec![0usize; 2];
        map[0] = i;
        map[1] = j;
        self.two_var(d).embed(n, &map)
    }

    /// The table p_{ij} for all ordered pairs i != j in n variables.
    pub fn table(&self, n: usize, d: u32) -> BTreeMap<(usize, usize), TruncSeries> {
        let base = self.two_var(d);
        let mut out = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    out.insert((i, j), base.embed(n, &[i, j]));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generic_has_every_index() {
        let p = PSeries::Generic.two_var(3);
        assert_eq!(p.len(), 1 + 2 + 3 + 4);
        assert_eq!(p.homogeneous_degree(), Some(0));
    }

    #[test]
    fn placement_swaps_roles() {
        let p = PSeries::integer(&[((1, 0), 2)]);
        let p21 = p.placed(2, 4, 1, 0);
        assert_eq!(p21.coeff(&[0, 1]).as_constant().unwrap(), BigInt::from(2));
    }
}
