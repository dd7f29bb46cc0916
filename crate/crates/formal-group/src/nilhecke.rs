use crate::divdiff::{DividedDiffOp, Mode, OperatorContext};
use crate::error::Result;
use crate::law::FormalGroupLaw;
use coeff_ring::{CoeffPoly, TruncSeries};
use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    /// First failing input, if any.
    pub failure: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct NilHeckeReport {
    pub law: String,
    pub n: usize,
    pub trunc: u32,
    pub checks: Vec<CheckResult>,
}

impl NilHeckeReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"check": c.name, "cases": c.cases, "passed": c.passed(), "failure": c.failure}))
            .collect();
        json!({"law": self.law, "n": self.n, "trunc": self.trunc, "passed": self.all_passed(), "checks": checks})
    }
}

/// Exponent vectors of all monomials of total degree <= d in n variables.
pub fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur.push(k);
            rec(n, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out.sort_by_key(|e| (e.iter().sum::<u32>(), e.clone()));
    out
}

fn mono(n: usize, d: u32, e: &[u32]) -> TruncSeries {
    TruncSeries::monomial(n, d, e.to_vec(), CoeffPoly::one())
}

fn fmt_mono(e: &[u32]) -> String {
    let parts: Vec<String> =
        e.iter().enumerate().filter(|(_, &k)| k > 0).map(|(v, &k)| if k == 1 { format!("x{}", v + 1) } else { format!("x{}^{k}", v + 1) }).collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn run(name: &str, inputs: &[Vec<u32>], mut f: impl FnMut(&[u32]) -> Result<bool>) -> Result<CheckResult> {
    let mut failure = None;
    for e in inputs {
        if !f(e)? {
            failure = Some(fmt_mono(e));
            break;
        }
    }
    Ok(CheckResult { name: name.into(), cases: inputs.len(), failure })
}

/// Symmetric test elements: 1 and the elementary symmetric polynomials with
/// their pairwise products, all of degree <= d.
pub fn symmetric_family(n: usize, d: u32) -> Result<Vec<(String, TruncSeries)>> {
    let x: Vec<TruncSeries> = (0..n).map(|i| TruncSeries::var(n, d, i)).collect();
    let mut e = vec![TruncSeries::one(n, d)];
    for k in 1..=n {
        let mut acc = TruncSeries::zero(n, d);
        for subset in subsets(n, k) {
            let mut t = TruncSeries::one(n, d);
            for &v in &subset {
                t = t.mul(&x[v])?;
            }
            acc = acc.add(&t)?;
        }
        e.push(acc);
    }
    let mut out = vec![("1".to_string(), e[0].clone())];
    for k in 1..=n {
        out.push((format!("e{k}"), e[k].clone()));
    }
    for a in 1..=n {
        for b in a..=n {
            if (a + b) as u32 <= d {
                out.push((format!("e{a}*e{b}"), e[a].mul(&e[b])?));
            }
        }
    }
    Ok(out)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == k {
            out.push((0..n).filter(|&i| mask & (1 << i) != 0).collect());
        }
    }
    out
}

/// Check the nilHecke relations for the twisted operators, the identity
/// A = D o Q^{-1}, the module property over invariants and annihilation of
/// q(Delta+) g for symmetric g, on all monomials of degree <= d.
pub fn check_nilhecke(law: &FormalGroupLaw, n: usize, d: u32) -> Result<NilHeckeReport> {
    assert!((2..=4).contains(&n), "strand count must be 2, 3 or 4");
    let ctx = OperatorContext::new(law, n, d)?;
    let monos = monomials(n, d);
    let mut checks = Vec::new();
    let simple: Vec<usize> = (0..n - 1).collect();

    for &k in &simple {
        for (mode, label) in [(Mode::Classical, "D"), (Mode::Twisted, "QA")] {
            let op = DividedDiffOp::simple(k, mode);
            checks.push(run(&format!("({label}_{})^2 = 0", k + 1), &monos, |e| {
                let once = ctx.apply(op, &mono(n, d, e))?;
                Ok(ctx.apply(op, &once)?.is_zero())
            })?);
        }
    }

    for &k in simple.iter().take(n.saturating_sub(2)) {
        for (mode, label) in [(Mode::Classical, "D"), (Mode::Twisted, "QA")] {
            let s = DividedDiffOp::simple(k, mode);
            let t = DividedDiffOp::simple(k + 1, mode);
            checks.push(run(&format!("{label} braid at roots {},{}", k + 1, k + 2), &monos, |e| {
                let m = mono(n, d, e);
                let lhs = ctx.apply(s, &ctx.apply(t, &ctx.apply(s, &m)?)?)?;
                let rhs = ctx.apply(t, &ctx.apply(s, &ctx.apply(t, &m)?)?)?;
                Ok(lhs.eq_valid(&rhs))
            })?);
        }
    }

    // distant roots commute
    for &k in &simple {
        for &l in &simple {
            if l >= k + 2 {
                let s = DividedDiffOp::simple(k, Mode::Twisted);
                let t = DividedDiffOp::simple(l, Mode::Twisted);
                checks.push(run(&format!("QA_{} QA_{} commute", k + 1, l + 1), &monos, |e| {
                    let m = mono(n, d, e);
                    Ok(ctx.apply(s, &ctx.apply(t, &m)?)?.eq_valid(&ctx.apply(t, &ctx.apply(s, &m)?)?))
                })?);
            }
        }
    }

    for i in 0..n {
        for j in i + 1..n {
            let op = DividedDiffOp::new(i, j, Mode::Generalized);
            checks.push(run(&format!("A_({},{}) = D o Q^-1", i + 1, j + 1), &monos, |e| {
                let m = mono(n, d, e);
                Ok(ctx.apply(op, &m)?.eq_valid(&ctx.apply_d_after_q_inverse(i, j, &m)?))
            })?);
        }
    }

    // A(f g) = A(f) g for g symmetric in x_i, x_j
    for &k in &simple {
        let op = DividedDiffOp::simple(k, Mode::Generalized);
        let xi = TruncSeries::var(n, d, k);
        let xj = TruncSeries::var(n, d, k + 1);
        let invariants = [xi.add(&xj)?, xi.mul(&xj)?];
        let low: Vec<Vec<u32>> = monos.iter().filter(|e| e.iter().sum::<u32>() + 2 <= d).cloned().collect();
        checks.push(run(&format!("A_{} is linear over invariants", k + 1), &low, |e| {
            let m = mono(n, d, e);
            let am = ctx.apply(op, &m)?;
            for g in &invariants {
                if !ctx.apply(op, &m.mul(g)?)?.eq_valid(&am.mul(g)?) {
                    return Ok(false);
                }
            }
            Ok(true)
        })?);
    }

    let qd = ctx.q_delta_plus()?;
    let family = symmetric_family(n, d)?;
    for &k in &simple {
        let op = DividedDiffOp::simple(k, Mode::Generalized);
        let mut failure = None;
        for (name, g) in &family {
            if !ctx.apply(op, &qd.mul(g)?)?.is_zero() {
                failure = Some(name.clone());
                break;
            }
        }
        checks.push(CheckResult { name: format!("A_{} kills q(Delta+) g", k + 1), cases: family.len(), failure });
    }

    Ok(NilHeckeReport { law: law.name.clone(), n, trunc: d, checks })
}
