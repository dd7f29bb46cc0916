//! Integer specializations of the b_{k,l} and of the ground ring.

use crate::error::{Result, RingError};
use crate::ground::{GroundRingElem, GroundTarget};
use crate::pseries::PSeries;
use crate::symmetric::to_elementary_symmetric;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Specialization {
    pub name: String,
    pub beta_values: BTreeMap<(u32, u32), BigInt>,
    pub ground_target: Option<GroundTarget>,
}

/// On-disk preset format.
#[derive(Debug, Serialize, Deserialize)]
pub struct PresetFile {
    #[serde(default)]
    pub name: Option<String>,
    /// Entries [k, l, value].
    #[serde(default)]
    pub beta: Vec<(u32, u32, i64)>,
    pub e1: i64,
    pub e2: i64,
    pub rho0: i64,
    pub rho1: i64,
}

impl Specialization {
    /// p = 1, E1 = E2 = 0: r0 = 0, r1 = 1, rho = -1.
    pub fn khovanov() -> Self {
        Specialization { name: "khovanov".into(), beta_values: BTreeMap::new(), ground_target: Some(GroundTarget::new(0, 0, 0, 1)) }
    }

    /// p = 1 + x (b_{1,0} = 1), E1 = E2 = 0: r0 = 1, r1 = 1, rho = -1.
    pub fn multiplicative() -> Self {
        let mut b = BTreeMap::new();
        b.insert((1, 0), BigInt::from(1));
        Specialization { name: "mult".into(), beta_values: b, ground_target: Some(GroundTarget::new(0, 0, 1, 1)) }
    }

    pub fn from_preset(p: &PresetFile) -> Self {
        Specialization {
            name: p.name.clone().unwrap_or_else(|| "custom".into()),
            beta_values: p.beta.iter().map(|&(k, l, v)| ((k, l), BigInt::from(v))).collect(),
            ground_target: Some(GroundTarget::new(p.e1, p.e2, p.rho0, p.rho1)),
        }
    }

    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "khovanov" => Some(Specialization::khovanov()),
            "mult" | "multiplicative" => Some(Specialization::multiplicative()),
            _ => None,
        }
    }

    pub fn p(&self) -> PSeries {
        PSeries::Integer(self.beta_values.clone())
    }

    pub fn target(&self) -> Result<&GroundTarget> {
        self.ground_target.as_ref().ok_or_else(|| RingError::Inconsistent("no ground target given".into()))
    }

    /// Require rho to map to +-1 (needed for homology over Z).
    pub fn require_unit_rho(&self) -> Result<()> {
        let rho = self.target()?.rho();
        if rho.abs() == BigInt::from(1) {
            Ok(())
        } else {
            Err(RingError::NonUnitRho(rho.to_string()))
        }
    }

    pub fn apply(&self, g: &GroundRingElem) -> Result<BigInt> {
        g.specialize(self.target()?)
    }

    /// Check that r0, r1 computed from the specialized p agree with the ground
    /// target, reading the expansions as polynomials in E1, E2 up to degree d.
    pub fn check_consistency(&self, d: u32) -> Result<()> {
        let t = match &self.ground_target {
            Some(t) => t,
            None => return Ok(()),
        };
        let p = self.p();
        let p12 = p.placed(2, d, 0, 1);
        let p21 = p.placed(2, d, 1, 0);
        let gens = crate::ground::SeriesGenerators::new(&p12, &p21)?;
        for (name, series, want) in [("rho0", &gens.r0, &t.rho0), ("rho1", &gens.r1, &t.rho1)] {
            let e = to_elementary_symmetric(series)?;
            let mut val = BigInt::zero();
            for (&(a, b), c) in &e.terms {
                let c = c.as_constant().ok_or_else(|| RingError::Inconsistent(format!("{name} has symbolic coefficients")))?;
                if (a > 0 && t.e1.is_zero()) || (b > 0 && t.e2.is_zero()) {
                    continue;
                }
                if a + 2 * b + 2 > series.valid() && !(t.e1.is_zero() && t.e2.is_zero()) {
                    return Err(RingError::Inconsistent(format!("{name} expansion is not polynomial within precision")));
                }
                val += c * num_traits::pow(t.e1.clone(), a as usize) * num_traits::pow(t.e2.clone(), b as usize);
            }
            if &val != want {
                return Err(RingError::Inconsistent(format!("{name}: series gives {val}, target says {want}")));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_are_consistent() {
        Specialization::khovanov().check_consistency(8).unwrap();
        Specialization::multiplicative().check_consistency(8).unwrap();
        assert_eq!(Specialization::multiplicative().target().unwrap().rho(), BigInt::from(-1));
    }

    #[test]
    fn inconsistent_target_is_reported() {
        let mut s = Specialization::khovanov();
        s.ground_target = Some(GroundTarget::new(0, 0, 1, 1));
        assert!(s.check_consistency(6).is_err());
    }
}
