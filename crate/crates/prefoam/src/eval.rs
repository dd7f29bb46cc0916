//! GL(2) evaluation, as a power series for a given p and exactly in R.

use crate::error::{FoamError, Result};
use crate::gl2::{ColoringData, Gl2Prefoam};
use coeff_ring::{CoeffPoly, GroundRingElem, GroundTarget, MPoly, PSeries, TruncSeries};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;

/// One group of colorings with equal data: (sign, d1, d2, chi1/2, chi2/2) -> count.
type Signature = (bool, u32, u32, i64, i64);

fn half(value: i64, surface: &str) -> Result<i64> {
    if value % 2 != 0 {
        return Err(FoamError::OddEuler { surface: surface.into(), value });
    }
    Ok(value / 2)
}

fn signature(d: &ColoringData) -> Result<Signature> {
    let a = half(d.chi1, "F_1(c)")?;
    let b = half(d.chi2, "F_2(c)")?;
    let negative = (d.theta_plus as i64 + b).rem_euclid(2) == 1;
    Ok((negative, d.d1, d.d2, a, b))
}

/// Coloring contributions grouped by signature, with multiplicities.
fn signatures(f: &Gl2Prefoam) -> Result<BTreeMap<Signature, i64>> {
    f.validate()?;
    let mut out = BTreeMap::new();
    for c in f.colorings()? {
        *out.entry(signature(&f.coloring_data(&c))?).or_insert(0) += 1;
    }
    Ok(out)
}

/// Exponent k of (x1 - x2)^k in the denominator.
fn thin_half(f: &Gl2Prefoam) -> Result<i64> {
    half(f.chi_thin(), "F_12")
}

/// Deformed evaluation as a series in x1, x2, valid to degree d.
pub fn eval_deformed_gl2(f: &Gl2Prefoam, p: &PSeries, d: u32) -> Result<TruncSeries> {
    let p12 = p.placed(2, d + thin_half(f)?.max(0) as u32, 0, 1);
    let p21 = p.placed(2, p12.trunc(), 1, 0);
    eval_deformed_gl2_with(f, &p12, &p21, d)
}

/// Same, with explicit p12 and p21; they must be truncated at d + max(0, chi(F_12)/2).
pub fn eval_deformed_gl2_with(f: &Gl2Prefoam, p12: &TruncSeries, p21: &TruncSeries, d: u32) -> Result<TruncSeries> {
    let sigs = signatures(f)?;
    let k = thin_half(f)?;
    let w = d + k.max(0) as u32;
    if p12.trunc() < w || p12.valid() < w || p21.valid() < w {
        return Err(coeff_ring::RingError::Precision { need: w, have: p12.valid().min(p21.valid()) }.into());
    }
    let p12 = p12.retrunc(w);
    let p21 = p21.retrunc(w);
    let mut pow12: BTreeMap<i64, TruncSeries> = BTreeMap::new();
    let mut pow21: BTreeMap<i64, TruncSeries> = BTreeMap::new();
    let mut num = TruncSeries::zero(2, w);
    for (&(neg, d1, d2, a, b), &count) in &sigs {
        if !pow12.contains_key(&a) {
            pow12.insert(a, p12.pow_int(a)?);
        }
        if !pow21.contains_key(&b) {
            pow21.insert(b, p21.pow_int(b)?);
        }
        let c = if neg { -count } else { count };
        let t = pow12[&a].mul(&pow21[&b])?.shift(&[d1, d2]).scale(&CoeffPoly::constant(c));
        num = num.add(&t)?;
    }
    let out = if k >= 0 {
        num.divide_exact(0, 1, k as u32)?
    } else {
        let x12 = TruncSeries::var(2, w, 0).sub(&TruncSeries::var(2, w, 1))?;
        num.mul(&x12.pow((-k) as u32)?)?
    };
    Ok(out.retrunc(d))
}

/// Variables of the working polynomial ring: x1, x2, r0, r1.
const NV: usize = 4;

fn p12_poly() -> MPoly {
    MPoly::var(NV, 3).sub(&MPoly::var(NV, 2).mul(&MPoly::var(NV, 1)))
}

fn p21_poly() -> MPoly {
    MPoly::var(NV, 3).sub(&MPoly::var(NV, 2).mul(&MPoly::var(NV, 0)))
}

/// Numerator over the common denominator rho^K (x1 - x2)^k: returns
/// (numerator in x1, x2, r0, r1 already divided by the x-part, K).
fn exact_numerator(f: &Gl2Prefoam) -> Result<(MPoly, u32)> {
    let sigs = signatures(f)?;
    let k = thin_half(f)?;
    // p12^a p21^b = (-1)^K rho^{-K} p12^{a+K} p21^{b+K}
    let big_k = sigs.keys().map(|s| (-s.3).max(-s.4)).max().unwrap_or(0).max(0);
    let (p12, p21) = (p12_poly(), p21_poly());
    let mut pow12: BTreeMap<u32, MPoly> = BTreeMap::new();
    let mut pow21: BTreeMap<u32, MPoly> = BTreeMap::new();
    let mut num = MPoly::zero(NV);
    for (&(neg, d1, d2, a, b), &count) in &sigs {
        let ea = (a + big_k) as u32;
        let eb = (b + big_k) as u32;
        let pa = pow12.entry(ea).or_insert_with(|| p12.pow(ea)).clone();
        let pb = pow21.entry(eb).or_insert_with(|| p21.pow(eb)).clone();
        let c = if neg { -count } else { count };
        num = num.add(&pa.mul(&pb).shift(&[d1, d2, 0, 0]).scale(&BigInt::from(c)));
    }
    if big_k % 2 == 1 {
        num = num.neg();
    }
    let num = if k >= 0 {
        num.divide_exact(0, 1, k as u32)?
    } else {
        let x12 = MPoly::var(NV, 0).sub(&MPoly::var(NV, 1));
        num.mul(&x12.pow((-k) as u32))
    };
    Ok((num, big_k as u32))
}

/// Exact evaluation in R = Z[E1, E2, r0, r1, rho^{-1}] / (rho + r1^2 - E1 r0 r1 + E2 r0^2).
pub fn eval_exact_gl2(f: &Gl2Prefoam) -> Result<GroundRingElem> {
    let (num, big_k) = exact_numerator(f)?;
    let e = num.to_elementary(0, 1)?;
    let mut raw: BTreeMap<(u32, u32, i32, u32, u32), BigInt> = BTreeMap::new();
    for (ex, c) in e.terms() {
        *raw.entry((ex[3], ex[2], -(big_k as i32), ex[0], ex[1])).or_default() += c;
    }
    Ok(GroundRingElem::from_raw(&raw))
}

/// Evaluation under an integer ground target: r0, r1 become integers before
/// the division, which keeps intermediate polynomials small.
pub fn eval_specialized_gl2(f: &Gl2Prefoam, t: &GroundTarget) -> Result<BigInt> {
    let sigs = signatures(f)?;
    let k = thin_half(f)?;
    let big_k = sigs.keys().map(|s| (-s.3).max(-s.4)).max().unwrap_or(0).max(0);
    let rho = t.rho();
    if big_k > 0 && rho.abs() != BigInt::from(1) {
        return Err(coeff_ring::RingError::NonUnitRho(rho.to_string()).into());
    }
    let two = |p: MPoly| -> MPoly {
        // drop r0, r1 after substituting their integer values
        let mut out = MPoly::zero(2);
        for (e, c) in p.terms() {
            let v = c * num_traits::pow(t.rho0.clone(), e[2] as usize) * num_traits::pow(t.rho1.clone(), e[3] as usize);
            out.add_term(vec![e[0], e[1]], v);
        }
        out
    };
    let (p12, p21) = (two(p12_poly()), two(p21_poly()));
    let mut num = MPoly::zero(2);
    for (&(neg, d1, d2, a, b), &count) in &sigs {
        let c = if neg { -count } else { count };
        let t = p12.pow((a + big_k) as u32).mul(&p21.pow((b + big_k) as u32)).shift(&[d1, d2]);
        num = num.add(&t.scale(&BigInt::from(c)));
    }
    // rho^{-K} = rho^K since rho = +-1
    let mut scale = num_traits::pow(rho, big_k as usize);
    if big_k % 2 == 1 {
        scale = -scale;
    }
    let num = if k >= 0 {
        num.divide_exact(0, 1, k as u32)?
    } else {
        let x12 = MPoly::var(2, 0).sub(&MPoly::var(2, 1));
        num.mul(&x12.pow((-k) as u32))
    };
    let e = num.to_elementary(0, 1)?;
    let mut total = BigInt::zero();
    for (ex, c) in e.terms() {
        total += c * num_traits::pow(t.e1.clone(), ex[0] as usize) * num_traits::pow(t.e2.clone(), ex[1] as usize);
    }
    Ok(total * scale)
}
