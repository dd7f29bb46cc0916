//! The acceptance suite: ten exact checks, each with a time budget.
//!
//! Every criterion returns a short detail string on success or the first
//! failure it finds. A criterion that overruns its budget fails. Oracles
//! here are written out independently of the code under test.

use coeff_ring::{CoeffPoly, GroundRingElem, MPoly, PSeries, SeriesGenerators, Specialization, TruncSeries};
use formal_group::{check_nilhecke, fgl_log, FormalGroupLaw, OperatorContext};
use homology::{bracket, build_complex, corpus, homology, homology_of, khovanov_complex, reidemeister_check, PdLink};
use num_bigint::BigInt;
use prefoam::gl2::family::{double_surface, theta, thin_sphere, thin_surface};
use prefoam::gln::family::theta as gln_theta;
use prefoam::{eval_deformed_gl2, eval_deformed_gln, eval_exact_gl2, eval_rw, eval_trivial_p, random_gl2, random_gln, GlNPrefoam};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use skein::{closed_form_oracle, verify_all, Descriptor, RelationId};
use std::time::{Duration, Instant};
use webs::corpus::named_webs;
use webs::random::{random_movie, random_web, Limits};
use webs::{foam_map_matrix, linalg, moy_rank, state_space_basis, Laurent, Web};

type Check = std::result::Result<String, String>;

pub struct Criterion {
    pub id: u32,
    pub name: &'static str,
    pub budget: Duration,
    pub run: fn() -> Check,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl Outcome {
    pub fn within_budget(&self) -> bool {
        self.elapsed <= self.budget
    }

    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let over = if self.within_budget() { String::new() } else { format!(" (over the {}s budget)", self.budget.as_secs()) };
        format!(
            "criterion {:>2} {status} {:<26} {:>7.2}s{over}  {}",
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "elapsed_s": self.elapsed.as_secs_f64(),
            "budget_s": self.budget.as_secs(),
        })
    }
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Unwrap a library result inside a criterion.
fn ok<T, E: std::fmt::Display>(r: std::result::Result<T, E>, what: &str) -> std::result::Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

pub fn criteria() -> Vec<Criterion> {
    let s = Duration::from_secs;
    vec![
        Criterion { id: 1, name: "sphere values", budget: s(10), run: sphere_values },
        Criterion { id: 2, name: "closed surfaces", budget: s(10), run: closed_surfaces },
        Criterion { id: 3, name: "theta foams", budget: s(60), run: theta_foams },
        Criterion { id: 4, name: "denominators and symmetry", budget: s(120), run: denominators },
        Criterion { id: 5, name: "undeformed consistency", budget: s(5), run: undeformed },
        Criterion { id: 6, name: "skein suite", budget: s(60), run: skein_suite },
        Criterion { id: 7, name: "formal groups", budget: s(60), run: formal_groups },
        Criterion { id: 8, name: "webs", budget: s(60), run: web_checks },
        Criterion { id: 9, name: "homology", budget: s(120), run: homology_checks },
        Criterion { id: 10, name: "reidemeister invariance", budget: s(180), run: reidemeister },
    ]
}

pub fn run_one(c: &Criterion) -> Outcome {
    let start = Instant::now();
    let res = std::panic::catch_unwind(c.run).unwrap_or_else(|p| {
        let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
        Err(format!("panicked: {}", msg.unwrap_or_default()))
    });
    let elapsed = start.elapsed();
    let (passed, detail) = match res {
        Ok(d) => (elapsed <= c.budget, d),
        Err(d) => (false, d),
    };
    Outcome { id: c.id, name: c.name, passed, detail, elapsed, budget: c.budget }
}

/// Run the criteria with the given ids (all if empty), in order.
pub fn run(ids: &[u32]) -> Vec<Outcome> {
    criteria().iter().filter(|c| ids.is_empty() || ids.contains(&c.id)).map(run_one).collect()
}

fn pair(p: &PSeries, d: u32) -> (TruncSeries, TruncSeries) {
    (p.placed(2, d, 0, 1), p.placed(2, d, 1, 0))
}

fn sample_p() -> PSeries {
    PSeries::integer(&[((1, 0), 1), ((0, 1), -2), ((1, 1), 3), ((2, 0), 1), ((0, 3), -1)])
}

fn sphere_values() -> Check {
    let e1 = GroundRingElem::e1();
    let e2 = GroundRingElem::e2();
    let r: Vec<GroundRingElem> = (0..=10).map(|n| ok(eval_exact_gl2(&thin_sphere(n)), "exact sphere")).collect::<Result<_, _>>()?;
    for n in 0..=8 {
        let rel = r[n + 2].sub(&e1.mul(&r[n + 1])).add(&e2.mul(&r[n]));
        ensure!(rel.is_zero(), "recurrence fails at n = {n}: {rel}");
    }
    let d = 12;
    let (p12, p21) = pair(&PSeries::Generic, d);
    let gens = ok(SeriesGenerators::new(&p12, &p21), "generators")?;
    for n in 0..=4 {
        let exact = ok(gens.expand(&r[n as usize]), "expand")?;
        let series = ok(eval_deformed_gl2(&thin_sphere(n), &PSeries::Generic, d), "series sphere")?;
        let v = exact.valid().min(series.valid());
        ensure!(v >= d - 2, "expansion of rho_{n} only valid to {v}");
        ensure!(exact.eq_up_to(&series, v), "rho_{n} expansion disagrees with the series");
    }
    Ok("recurrence for n <= 8, expansions for n <= 4 at D = 12".into())
}

fn closed_surfaces() -> Check {
    let d = 8;
    let g = PSeries::Generic;
    let (p12, p21) = pair(&g, d);
    let minus_pp = ok(p12.mul(&p21), "p12 p21")?.neg();
    let sphere2 = ok(eval_deformed_gl2(&double_surface(0), &g, d), "double sphere")?;
    ensure!(sphere2.eq_valid(&minus_pp), "double sphere is not -p12 p21");
    ensure!(ok(eval_exact_gl2(&double_surface(0)), "exact")? == GroundRingElem::rho(), "double sphere is not rho");
    let torus = ok(eval_deformed_gl2(&double_surface(1), &g, d), "double torus")?;
    ensure!(torus.eq_valid(&TruncSeries::one(2, d)), "double torus is not 1");
    for genus in 0..=3u32 {
        let want = GroundRingElem::rho_pow(1 - genus as i32);
        ensure!(ok(eval_exact_gl2(&double_surface(genus)), "exact")? == want, "double genus {genus} is not {want}");
        let series = ok(eval_deformed_gl2(&double_surface(genus), &g, d), "double surface")?;
        ensure!(series.eq_valid(&ok(minus_pp.pow_int(1 - genus as i64), "rho power")?), "double genus {genus} series");
    }
    let mut cases = 0;
    for p in [PSeries::Generic, sample_p()] {
        for genus in 0..=3 {
            for n in 0..=4 {
                let want = ok(closed_form_oracle(&Descriptor::ThinSurface { genus, dots: n }, &p, d), "oracle")?;
                let got = ok(eval_deformed_gl2(&thin_surface(genus, n), &p, d), "thin surface")?;
                ensure!(got.eq_up_to(&want, d), "thin surface g = {genus}, n = {n} disagrees with the closed form");
                cases += 1;
            }
        }
    }
    Ok(format!("double surfaces g <= 3, {cases} thin surfaces"))
}

/// (x1^n1 x2^n2 - x1^n2 x2^n1) / (x1 - x2) p12 p21 with the quotient written
/// as an explicit complete symmetric polynomial.
fn theta_oracle(p: &PSeries, n1: u32, n2: u32, d: u32) -> Result<TruncSeries, String> {
    let (p12, p21) = pair(p, d);
    let (hi, lo, sign) = if n1 >= n2 { (n1, n2, 1) } else { (n2, n1, -1) };
    let mut h = TruncSeries::zero(2, d);
    if hi > lo {
        let k = hi - lo - 1;
        for a in 0..=k {
            h.add_term(vec![a + lo, k - a + lo], CoeffPoly::constant(sign));
        }
    }
    ok(h.mul(&p12).and_then(|s| s.mul(&p21)), "theta oracle")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

fn perm_sign(p: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

/// Weyl character formula: a_{lambda + delta} / a_delta.
fn schur(lambda: &[u32]) -> Result<MPoly, String> {
    let n = lambda.len();
    let mut alt = MPoly::zero(n);
    for p in permutations(n) {
        let mut e = vec![0u32; n];
        for i in 0..n {
            e[p[i]] = lambda[i] + (n - 1 - i) as u32;
        }
        alt.add_term(e, BigInt::from(perm_sign(&p)));
    }
    for i in 0..n {
        for j in i + 1..n {
            alt = ok(alt.divide_exact(i, j, 1), "alternant")?;
        }
    }
    Ok(alt)
}

fn partitions3(max: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in 0..=max {
        for b in 0..=a {
            for c in 0..=b {
                if a + b + c <= max {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

fn theta_foams() -> Check {
    let d = 8;
    for n1 in 0..=5 {
        for n2 in 0..=5 {
            let got = ok(eval_deformed_gl2(&theta(n1, n2), &PSeries::Generic, d), "theta")?;
            ensure!(got.eq_valid(&theta_oracle(&PSeries::Generic, n1, n2, d)?), "GL(2) theta ({n1}, {n2})");
            if n1 == n2 {
                ensure!(got.is_zero() && ok(eval_exact_gl2(&theta(n1, n2)), "exact")?.is_zero(), "theta ({n1}, {n1}) is not zero");
            }
        }
    }
    let d = 10;
    let p = sample_p();
    let mut pp = TruncSeries::one(3, d);
    for s in p.table(3, d).values() {
        pp = ok(pp.mul(s), "prod p")?;
    }
    let mut sign: Option<i64> = None;
    let lambdas = partitions3(4);
    for lambda in &lambdas {
        let dots: Vec<u32> = (0..3).map(|i| lambda[i] + 2 - i as u32).collect();
        let got = ok(eval_deformed_gln(&gln_theta(&dots), &p, d), "GL(3) theta")?;
        let s = schur(lambda)?;
        let s = TruncSeries::from_terms(3, d, s.terms().map(|(e, c)| (e.clone(), CoeffPoly::constant(c.clone()))));
        let want = ok(s.mul(&pp), "schur times p")?;
        let here = if got.eq_valid(&want) {
            1
        } else if got.eq_valid(&want.neg()) {
            -1
        } else {
            return Err(format!("GL(3) theta {lambda:?} is not +-s_lambda prod p"));
        };
        ensure!(*sign.get_or_insert(here) == here, "sign changes at {lambda:?}");
    }
    Ok(format!("GL(2) n1, n2 <= 5; {} GL(3) partitions, global sign {}", lambdas.len(), sign.unwrap_or(1)))
}

fn random_p(rng: &mut ChaCha8Rng) -> PSeries {
    let keys = [(1, 0), (0, 1), (1, 1), (2, 0), (0, 2), (2, 1), (0, 3)];
    PSeries::integer(&keys.iter().map(|&k| (k, rng.gen_range(-2i64..=2))).collect::<Vec<_>>())
}

fn denominators() -> Check {
    let d = 10;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for k in 0..200 {
        let f = random_gl2(&mut rng, 8);
        let p = random_p(&mut rng);
        let v = ok(eval_deformed_gl2(&f, &p, d), &format!("GL(2) foam {k}"))?;
        ensure!(v.valid() >= d, "GL(2) foam {k} only valid to {}", v.valid());
        ensure!(v.is_symmetric(), "GL(2) foam {k} is not symmetric: {}", f.to_json());
    }
    for k in 0..50 {
        let f = random_gln(&mut rng, 3, 8);
        let p = random_p(&mut rng);
        let v = ok(eval_deformed_gln(&f, &p, d), &format!("GL(3) foam {k}"))?;
        ensure!(v.valid() >= d, "GL(3) foam {k} only valid to {}", v.valid());
        ensure!(v.eq_valid(&v.swap(0, 1)) && v.eq_valid(&v.swap(1, 2)), "GL(3) foam {k} is not symmetric: {}", f.to_json());
    }
    Ok("200 GL(2) and 50 GL(3) foams at D = 10".into())
}

fn undeformed() -> Check {
    let mut family: Vec<(String, GlNPrefoam)> = Vec::new();
    for n in 0..=3 {
        family.push((format!("thin sphere {n}"), thin_sphere(n).to_gln()));
        family.push((format!("thin genus 2, {n} dots"), thin_surface(2, n).to_gln()));
        family.push((format!("thin torus, {n} dots"), thin_surface(1, n).to_gln()));
        family.push((format!("theta ({}, 0)", n + 1), theta(n + 1, 0).to_gln()));
    }
    for g in 0..=2 {
        family.push((format!("double genus {g}"), double_surface(g).to_gln()));
    }
    family.push(("GL(3) theta".into(), gln_theta(&[2, 1, 0])));
    family.push(("GL(3) theta, dotted".into(), gln_theta(&[3, 1, 0])));
    family.push(("GL(4) theta".into(), gln_theta(&[4, 2, 1, 0])));
    for (name, f) in &family {
        let rw = ok(eval_rw(f), name)?;
        let plain = ok(eval_trivial_p(f), name)?;
        let want = if (f.chi_total() / 2) % 2 == 0 { plain.clone() } else { plain.neg() };
        ensure!(rw == want, "{name}: {rw} vs {plain}");
    }
    let dotted = thin_sphere(1).to_gln();
    ensure!(ok(eval_trivial_p(&dotted), "dotted sphere")?.coeff(&[0, 0]) == CoeffPoly::constant(1), "dotted sphere at p = 1 is not 1");
    ensure!(ok(eval_rw(&dotted), "dotted sphere")?.coeff(&[0, 0]) == CoeffPoly::constant(-1), "dotted sphere RW value is not -1");
    Ok(format!("{} foams, dotted sphere 1 at p = 1", family.len()))
}

fn skein_suite() -> Check {
    let reports = ok(verify_all(&RelationId::ALL), "skein")?;
    let mut cases = 0;
    for r in &reports {
        ensure!(r.cases.len() >= 3, "{} has only {} cases", r.id.name(), r.cases.len());
        if let Some(c) = r.cases.iter().find(|c| !c.pass()) {
            return Err(format!("{} {} on {}: {} vs {}", r.id.name(), c.variant, c.closure, c.lhs, c.rhs));
        }
        cases += r.cases.len();
    }
    Ok(format!("{} relations, {cases} cases", reports.len()))
}

fn formal_groups() -> Check {
    let d = 12;
    let laws = [FormalGroupLaw::additive(d), FormalGroupLaw::multiplicative(d), FormalGroupLaw::lorentz(d)];
    for law in &laws {
        let q = ok(law.q_series(d), "q")?;
        ensure!(q.set_zero(1) == TruncSeries::one(2, d).with_valid(q.valid()), "q(x, 0) != 1 for {}", law.name);
        let law1 = ok(FormalGroupLaw::by_name(&law.name, d + 1), "law")?;
        let q1 = ok(law1.q_series(d + 1), "q")?;
        let xy = ok(TruncSeries::var(2, d + 1, 0).sub(&TruncSeries::var(2, d + 1, 1)), "x - y")?;
        let prod = ok(xy.mul(&q1), "(x - y) q")?;
        let diff = ok(law1.formal_difference(d + 1), "difference")?;
        ensure!(prod.valid() >= d && prod.eq_up_to(&diff, d), "(x - y) q != x[-1]y for {}", law.name);
    }
    let mut all: Vec<FormalGroupLaw> = laws.to_vec();
    all.push(ok(FormalGroupLaw::universal_rational(d), "universal")?);
    for law in &all {
        let q = ok(law.q_series(d), "q")?;
        let mut diag = TruncSeries::zero(1, d).with_valid(q.valid());
        for (e, c) in q.terms() {
            diag.add_term(vec![e[0] + e[1]], c.clone());
        }
        let log = ok(fgl_log(law, d), "log")?;
        ensure!(diag.eq_valid(log.derivative()), "q(x, x) is not the log derivative for {}", law.name);
    }
    let mut checks = 0;
    for law in [FormalGroupLaw::additive(8), FormalGroupLaw::multiplicative(8), FormalGroupLaw::lorentz(8)] {
        let r = ok(check_nilhecke(&law, 3, 8), "nilhecke")?;
        ensure!(r.checks.iter().any(|c| c.name.contains("^2 = 0")) && r.checks.iter().any(|c| c.name.contains("braid")), "missing checks");
        ensure!(r.all_passed(), "nilHecke relations fail for {}: {}", law.name, r.to_json());
        checks += r.checks.len();
    }
    for n in [2, 3] {
        let law = FormalGroupLaw::multiplicative(8);
        let r = ok(check_nilhecke(&law, n, 8), "nilhecke")?;
        let kills: Vec<_> = r.checks.iter().filter(|c| c.name.contains("q(Delta+)")).collect();
        ensure!(kills.len() == n - 1 && kills.iter().all(|c| c.passed()), "q(Delta+) is not annihilated at n = {n}");
        let qd = ok(ok(OperatorContext::new(&law, n, 8), "context")?.q_delta_plus(), "q(Delta+)")?;
        ensure!(!qd.is_zero(), "q(Delta+) vanishes");
    }
    Ok(format!("3 laws at D = 12, {checks} nilHecke checks"))
}

fn web_checks() -> Check {
    let s = ok(state_space_basis(&Web::circles(1)), "circle")?;
    let r = |t: &str| GroundRingElem::parse(t).map_err(|e| e.to_string());
    let gram = vec![vec![r("rho0")?, r("rho1")?], vec![r("rho1")?, r("E1*rho1 - E2*rho0")?]];
    ensure!(s.gram == gram, "one-circle Gram is {:?}", linalg::to_json(&s.gram));
    ensure!(ok(s.gram_det(), "det")? == GroundRingElem::rho(), "one-circle determinant is not rho");
    let mut names = Vec::new();
    for (name, w) in named_webs() {
        let m = w.thin_components();
        ensure!(m <= 3, "{name} has {m} thin components");
        let sp = ok(state_space_basis(&w), name)?;
        let want = Laurent::quantum_two().pow(m as u32);
        ensure!(sp.graded_rank() == want, "{name}: graded rank {} vs {want}", sp.graded_rank());
        ensure!(ok(moy_rank(&w), name)? == want, "{name}: MOY rank disagrees");
        names.push(name);
    }
    ensure!(names.contains(&"figure"), "figure web missing");
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let lim = Limits::default();
    let mut done = 0;
    while done < 10 {
        let w0 = random_web(&mut rng, 8, lim);
        let f = random_movie(&mut rng, &w0, 3, lim);
        let w1 = ok(f.end(), "movie")?;
        let g = random_movie(&mut rng, &w1, 3, lim);
        let w2 = ok(g.end(), "movie")?;
        if [&w0, &w1, &w2].iter().all(|w| w.vertices.is_empty()) {
            continue;
        }
        let (s0, s1, s2) = (ok(state_space_basis(&w0), "w0")?, ok(state_space_basis(&w1), "w1")?, ok(state_space_basis(&w2), "w2")?);
        let mf = ok(foam_map_matrix(&f, &s0, &s1), "f")?;
        let mg = ok(foam_map_matrix(&g, &s1, &s2), "g")?;
        let gf = ok(f.then(&g), "compose")?;
        let mgf = ok(foam_map_matrix(&gf, &s0, &s2), "gf")?;
        ensure!(mgf == linalg::mul(&mg, &mf), "functoriality fails for f = {}, g = {}", f.to_json(), g.to_json());
        done += 1;
    }
    Ok(format!("Gram det rho, {} webs, 10 composable pairs", names.len()))
}

fn homology_checks() -> Check {
    let kh = Specialization::khovanov();
    let small: Vec<(&str, PdLink)> = corpus::diagrams().into_iter().filter(|(_, d)| d.len() <= 4).collect();
    for (name, d) in &small {
        for s in [Specialization::khovanov(), Specialization::multiplicative()] {
            let c = ok(build_complex(d, &s), name)?;
            ensure!(c.d_squared_zero(), "d^2 != 0 for {name} under {}", s.name);
        }
    }
    let unknot = ok(homology_of(&PdLink::unlink(1), &kh), "unknot")?;
    ensure!(unknot.rank(0, 1) == 1 && unknot.rank(0, -1) == 1 && unknot.total_rank() == 2, "unknot table:\n{}", unknot.to_tsv());
    for name in ["trefoil", "trefoil_left", "hopf", "hopf_braid"] {
        let d = corpus::diagram(name).ok_or(format!("no diagram {name}"))?;
        let foam = ok(homology_of(&d, &kh), name)?;
        let oracle = ok(homology(&khovanov_complex(&d)), name)?;
        ensure!(foam == oracle, "{name}: {}", foam.first_difference(&oracle).unwrap_or_default());
    }
    let all = corpus::diagrams();
    for (name, d) in &all {
        let t = ok(homology_of(d, &kh), name)?;
        ensure!(t.euler() == bracket(d), "{name}: Euler characteristic {} vs bracket {}", t.euler(), bracket(d));
    }
    Ok(format!("d^2 on {} diagrams, Euler on {}", small.len(), all.len()))
}

fn reidemeister() -> Check {
    let pairs = corpus::reidemeister_pairs();
    let mut moves = std::collections::BTreeSet::new();
    for p in &pairs {
        for s in [Specialization::khovanov(), Specialization::multiplicative()] {
            let r = ok(reidemeister_check(&p.before, &p.after, &s), p.name)?;
            ensure!(r.equal(), "{} under {}: {}", p.name, s.name, r.first_difference.unwrap_or_default());
        }
        moves.insert(p.mv.name());
    }
    ensure!(moves.len() == 5, "only moves {moves:?} are covered");
    Ok(format!("{} pairs covering {}", pairs.len(), moves.into_iter().collect::<Vec<_>>().join(", ")))
}
