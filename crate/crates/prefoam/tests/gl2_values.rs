use coeff_ring::{CoeffPoly, GroundRingElem, PSeries, TruncSeries};
use prefoam::gl2::family::{double_surface, theta, thin_sphere, thin_surface};
use prefoam::*;

fn pair(p: &PSeries, d: u32) -> (TruncSeries, TruncSeries) {
    (p.placed(2, d, 0, 1), p.placed(2, d, 1, 0))
}

fn x(d: u32, i: usize) -> TruncSeries {
    TruncSeries::var(2, d, i)
}

fn xpow(d: u32, a: u32, b: u32) -> TruncSeries {
    TruncSeries::monomial(2, d, vec![a, b], CoeffPoly::one())
}

/// (x1^n p12^{1-g} + (-1)^{g-1} x2^n p21^{1-g}) (x1 - x2)^{g-1}, valid to d.
fn surface_oracle(p: &PSeries, g: u32, n: u32, d: u32) -> TruncSeries {
    let w = d + 1;
    let (p12, p21) = pair(p, w);
    let e = 1 - g as i64;
    let a = xpow(w, n, 0).mul(&p12.pow_int(e).unwrap()).unwrap();
    let b = xpow(w, 0, n).mul(&p21.pow_int(e).unwrap()).unwrap();
    let sum = if g % 2 == 1 { a.add(&b) } else { a.sub(&b) }.unwrap();
    let out = if g == 0 {
        sum.divide_exact(0, 1, 1).unwrap()
    } else {
        sum.mul(&x(w, 0).sub(&x(w, 1)).unwrap().pow(g - 1).unwrap()).unwrap()
    };
    out.retrunc(d)
}

/// (x1^n1 x2^n2 - x1^n2 x2^n1) / (x1 - x2) * p12 p21 via an explicit
/// complete symmetric polynomial.
fn theta_oracle(p: &PSeries, n1: u32, n2: u32, d: u32) -> TruncSeries {
    let (p12, p21) = pair(p, d);
    let (hi, lo, sign) = if n1 >= n2 { (n1, n2, 1) } else { (n2, n1, -1) };
    let mut h = TruncSeries::zero(2, d);
    if hi > lo {
        let k = hi - lo - 1;
        for a in 0..=k {
            h.add_term(vec![a + lo, k - a + lo], CoeffPoly::constant(sign));
        }
    }
    h.mul(&p12).unwrap().mul(&p21).unwrap()
}

#[test]
fn colorings_of_standard_foams() {
    assert_eq!(enumerate_colorings(&theta(0, 0)).unwrap().len(), 2);
    assert_eq!(enumerate_colorings(&double_surface(0)).unwrap().len(), 1);
    assert_eq!(enumerate_colorings(&thin_sphere(0).union(&thin_sphere(1))).unwrap().len(), 4);
    for c in enumerate_colorings(&theta(2, 1)).unwrap() {
        assert!(theta(2, 1).is_proper(&c));
    }
}

#[test]
fn odd_cycle_is_not_bipartite() {
    let mut f = Gl2Prefoam::new();
    let t: Vec<usize> = (0..3).map(|_| f.add_thin(0, 0)).collect();
    let d = f.add_double(0);
    f.add_seam(t[0], t[1], d);
    f.add_seam(t[1], t[2], d);
    f.add_seam(t[2], t[0], d);
    assert!(matches!(enumerate_colorings(&f), Err(FoamError::NotBipartite(_))));
}

#[test]
fn validation_reports_offending_id() {
    let mut f = theta(0, 0);
    f.thin[1].boundary = 3;
    match f.validate() {
        Err(FoamError::Invalid { id, .. }) => assert_eq!(id, "t1"),
        other => panic!("unexpected {other:?}"),
    }
    let mut g = theta(0, 0);
    g.seams[0].other = 0;
    assert!(g.validate().is_err());
}

#[test]
fn thin_sphere_series_matches_rho_n() {
    let d = 12;
    for n in 0..=6 {
        let got = eval_deformed_gl2(&thin_sphere(n), &PSeries::Generic, d).unwrap();
        assert!(got.eq_valid(&surface_oracle(&PSeries::Generic, 0, n, d)), "n = {n}");
        assert!(got.is_symmetric());
        assert!(got.is_homogeneous_of(-2 + 2 * n as i64));
    }
}

#[test]
fn thin_torus_is_power_sum() {
    let d = 10;
    for n in 0..=4 {
        let got = eval_deformed_gl2(&thin_surface(1, n), &PSeries::Generic, d).unwrap();
        let want = xpow(d, n, 0).add(&xpow(d, 0, n)).unwrap();
        assert!(got.eq_valid(&want), "n = {n}");
    }
}

#[test]
fn thin_surfaces_match_closed_form() {
    let p = PSeries::integer(&[((1, 0), 2), ((0, 1), -1), ((1, 1), 3), ((2, 0), 1), ((0, 3), 2)]);
    let d = 9;
    for g in 0..=3 {
        for n in 0..=4 {
            let got = eval_deformed_gl2(&thin_surface(g, n), &p, d).unwrap();
            assert!(got.eq_valid(&surface_oracle(&p, g, n, d)), "g = {g}, n = {n}");
        }
    }
    // generic coefficients at lower degree
    for g in 2..=3 {
        let got = eval_deformed_gl2(&thin_surface(g, 1), &PSeries::Generic, 5).unwrap();
        assert!(got.eq_valid(&surface_oracle(&PSeries::Generic, g, 1, 5)));
    }
}

#[test]
fn double_surfaces_are_powers_of_rho() {
    let p = PSeries::Generic;
    let d = 6;
    let (p12, p21) = pair(&p, d);
    let rho = p12.mul(&p21).unwrap().neg();
    for g in 0..=3u32 {
        let got = eval_deformed_gl2(&double_surface(g), &p, d).unwrap();
        assert!(got.eq_valid(&rho.pow_int(1 - g as i64).unwrap()), "g = {g}");
        assert_eq!(eval_exact_gl2(&double_surface(g)).unwrap(), GroundRingElem::rho_pow(1 - g as i32));
    }
    assert_eq!(eval_exact_gl2(&double_surface(1)).unwrap(), GroundRingElem::one());
}

#[test]
fn theta_values() {
    let p = PSeries::integer(&[((1, 0), 1), ((0, 2), -2), ((2, 1), 1)]);
    let d = 10;
    for n1 in 0..=5 {
        for n2 in 0..=5 {
            let got = eval_deformed_gl2(&theta(n1, n2), &p, d).unwrap();
            assert!(got.eq_valid(&theta_oracle(&p, n1, n2, d)), "({n1}, {n2})");
            if n1 == n2 {
                assert!(got.is_zero());
                assert!(eval_exact_gl2(&theta(n1, n2)).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn exact_examples() {
    assert_eq!(eval_exact_gl2(&thin_sphere(0)).unwrap(), GroundRingElem::rho0());
    assert_eq!(eval_exact_gl2(&thin_sphere(1)).unwrap(), GroundRingElem::rho1());
    assert_eq!(eval_exact_gl2(&theta(1, 0)).unwrap(), GroundRingElem::rho().neg());
    assert_eq!(eval_exact_gl2(&double_surface(0)).unwrap(), GroundRingElem::rho());
    let genus2 = GroundRingElem::parse("rho0*(E1^2 - 4*E2)*rho^-1").unwrap();
    assert_eq!(eval_exact_gl2(&thin_surface(2, 0)).unwrap(), genus2);
    assert_eq!(eval_exact_gl2(&thin_surface(1, 3)).unwrap(), GroundRingElem::parse("E1^3 - 3*E1*E2").unwrap());
    // -E2^{n2} h_{n1-n2-1} rho
    let t = eval_exact_gl2(&theta(4, 1)).unwrap();
    assert_eq!(t, GroundRingElem::parse("-E2*(E1^2 - E2)*rho").unwrap());
}

#[test]
fn sphere_recurrence_exact() {
    let e1 = GroundRingElem::e1();
    let e2 = GroundRingElem::e2();
    let r: Vec<GroundRingElem> = (0..=10).map(|n| eval_exact_gl2(&thin_sphere(n)).unwrap()).collect();
    for n in 0..=8 {
        let rel = r[n + 2].sub(&e1.mul(&r[n + 1])).add(&e2.mul(&r[n]));
        assert!(rel.is_zero(), "n = {n}");
    }
}

#[test]
fn exact_expands_to_series() {
    let p = PSeries::Generic;
    let d = 8;
    let (p12, p21) = pair(&p, d);
    let foams = vec![thin_sphere(3), thin_surface(2, 1), theta(3, 1), double_surface(2), theta(2, 0).union(&thin_sphere(1))];
    for f in foams {
        let exact = eval_exact_gl2(&f).unwrap().expand_in_series(&p12, &p21).unwrap();
        let series = eval_deformed_gl2(&f, &p, d).unwrap();
        assert!(exact.eq_up_to(&series, exact.valid().min(series.valid())));
    }
}

#[test]
fn reversing_seams_flips_sign() {
    let mut f = Gl2Prefoam::new();
    let a = f.add_thin(0, 2);
    let b = f.add_thin(1, 0);
    let c = f.add_thin(0, 1);
    let d0 = f.add_double(0);
    let d1 = f.add_double(0);
    f.add_seam(a, b, d0);
    f.add_seam(b, c, d1);
    let base = eval_exact_gl2(&f).unwrap();
    assert!(!base.is_zero());
    assert_eq!(eval_exact_gl2(&f.reversed_at(&[0])).unwrap(), base.neg());
    assert_eq!(eval_exact_gl2(&f.reversed()).unwrap(), base);
}

#[test]
fn specialized_path_agrees() {
    let targets = [
        coeff_ring::GroundTarget::new(0, 0, 0, 1),
        coeff_ring::GroundTarget::new(0, 0, 1, 1),
        coeff_ring::GroundTarget::new(2, 1, 1, 1),
    ];
    let foams = vec![thin_sphere(3), thin_surface(2, 1), theta(3, 1), double_surface(2), theta(2, 0).union(&thin_sphere(1))];
    for t in &targets {
        for f in &foams {
            match eval_exact_gl2(f).unwrap().specialize(t) {
                Ok(v) => assert_eq!(eval_specialized_gl2(f, t).unwrap(), v),
                Err(_) => assert!(eval_specialized_gl2(f, t).is_err()),
            }
        }
    }
}

#[test]
fn json_round_trip() {
    let f = theta(2, 1).union(&thin_surface(1, 0));
    let text = f.to_json().to_string();
    match parse_foam(&text).unwrap() {
        FoamFile::Gl2(g) => assert_eq!(g, f),
        other => panic!("{other:?}"),
    }
    let src = r#"{"type":"gl2_prefoam","thin_facets":[{"id":1,"dots":1},{"id":2}],
        "double_facets":[{"id":"D"}],"seams":[{"preferred":1,"other":2,"double":"D"}]}"#;
    let FoamFile::Gl2(g) = parse_foam(src).unwrap() else { panic!() };
    assert_eq!(eval_exact_gl2(&g).unwrap(), GroundRingElem::rho().neg());
    let bad = r#"{"type":"gl2_prefoam","thin_facets":[{"id":"a"}],"double_facets":[],"seams":[{"preferred":"a","other":"b","double":"D"}]}"#;
    match parse_foam(bad) {
        Err(FoamError::Invalid { id, .. }) => assert_eq!(id, "b"),
        other => panic!("{other:?}"),
    }
}
