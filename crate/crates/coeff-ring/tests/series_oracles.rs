use coeff_ring::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use std::collections::BTreeMap;

fn beta() -> CoeffPoly {
    CoeffPoly::var(0, 1)
}

/// p(x, y) = 1 - b y written with b = b0_1.
fn mult_p(d: u32) -> TruncSeries {
    TruncSeries::one(2, d).sub(&TruncSeries::var(2, d, 1).scale(&beta())).unwrap()
}

/// Degree-by-degree inverse of a two-variable series with constant term 1.
fn inverse_oracle(p: &TruncSeries, d: u32) -> BTreeMap<(u32, u32), CoeffPoly> {
    let pc = |a: u32, b: u32| p.coeff(&[a, b]);
    let mut q: BTreeMap<(u32, u32), CoeffPoly> = BTreeMap::new();
    for tot in 0..=d {
        for a in 0..=tot {
            let b = tot - a;
            let mut v = if tot == 0 { CoeffPoly::one() } else { CoeffPoly::zero() };
            for (&(qa, qb), qc) in q.iter() {
                if qa <= a && qb <= b && (qa, qb) != (a, b) {
                    v.sub_assign_ref(&(&pc(a - qa, b - qb) * qc));
                }
            }
            q.insert((a, b), v);
        }
    }
    q
}

#[test]
fn product_with_inverse_is_one() {
    let d = 10;
    let p = mult_p(d);
    let q = p.inverse().unwrap();
    let oracle = inverse_oracle(&p, d);
    for (&(a, b), c) in &oracle {
        assert_eq!(&q.coeff(&[a, b]), c, "coefficient x^{a} y^{b}");
    }
    assert!(p.mul(&q).unwrap().eq_valid(&TruncSeries::one(2, d)));
}

#[test]
fn identity_is_neutral() {
    let s = PSeries::Generic.two_var(5);
    assert_eq!(TruncSeries::one(2, 5).mul(&s).unwrap(), s);
}

#[test]
fn rho0_of_multiplicative_is_beta() {
    let d = 8;
    let p12 = mult_p(d);
    let p21 = p12.swap(0, 1);
    let r0 = p12.sub(&p21).unwrap().divide_exact(0, 1, 1).unwrap();
    assert!(r0.eq_valid(&TruncSeries::constant(2, d, beta())));
    assert_eq!(r0.valid(), d - 1);
}

#[test]
fn expansions_of_generators_for_multiplicative_p() {
    let d = 8;
    let p12 = mult_p(d);
    let p21 = p12.swap(0, 1);
    let r0 = GroundRingElem::rho0().expand_in_series(&p12, &p21).unwrap();
    assert!(r0.eq_valid(&TruncSeries::constant(2, d, beta())));
    let r1 = GroundRingElem::rho1().expand_in_series(&p12, &p21).unwrap();
    assert!(r1.eq_valid(&TruncSeries::one(2, d)));
    let rho = GroundRingElem::rho().expand_in_series(&p12, &p21).unwrap();
    // -(1 - b E1 + b^2 E2)
    let x1 = TruncSeries::var(2, d, 0);
    let x2 = TruncSeries::var(2, d, 1);
    let e1 = x1.add(&x2).unwrap();
    let e2 = x1.mul(&x2).unwrap();
    let expect = TruncSeries::one(2, d)
        .sub(&e1.scale(&beta()))
        .unwrap()
        .add(&e2.scale(&(&beta() * &beta())))
        .unwrap()
        .neg();
    assert!(rho.eq_valid(&expect));
}

#[test]
fn p_identities_hold_for_generic_p() {
    let d = 7;
    let p12 = PSeries::Generic.placed(2, d, 0, 1);
    let p21 = PSeries::Generic.placed(2, d, 1, 0);
    let x1 = TruncSeries::var(2, d, 0);
    let x2 = TruncSeries::var(2, d, 1);
    let g = SeriesGenerators::new(&p12, &p21).unwrap();
    let lhs12 = g.r1.sub(&g.r0.mul(&x2).unwrap()).unwrap();
    let lhs21 = g.r1.sub(&g.r0.mul(&x1).unwrap()).unwrap();
    assert!(lhs12.eq_valid(&p12));
    assert!(lhs21.eq_valid(&p21));
    // and rho matches the defining relation
    let rel = GroundRingElem::parse("-(rho1^2 - E1*rho0*rho1 + E2*rho0^2)").unwrap();
    assert_eq!(rel, GroundRingElem::rho());
}

fn ground_elem() -> impl Strategy<Value = GroundRingElem> {
    prop::collection::vec(((0u8..2, 0u32..3, -2i32..3, 0u32..3, 0u32..2), -4i64..5), 0..5).prop_map(|ts| {
        let mut raw = BTreeMap::new();
        for ((n1, n2, n3, a, b), c) in ts {
            *raw.entry((n1 as u32, n2, n3, a, b)).or_insert(BigInt::from(0)) += c;
        }
        GroundRingElem::from_raw(&raw)
    })
}

fn homogeneous_elem() -> impl Strategy<Value = GroundRingElem> {
    // degree 0 pieces: E1*rho0, E2*rho0^2, rho1, rho^k
    prop::collection::vec((0usize..5, -3i64..4), 1..4).prop_map(|ts| {
        let pieces = ["E1*rho0", "E2*rho0^2", "rho1", "rho^-1", "rho1*rho"];
        let mut g = GroundRingElem::zero();
        for (i, c) in ts {
            g = g.add(&GroundRingElem::parse(pieces[i]).unwrap().scale(c));
        }
        g
    })
}

fn small_series() -> impl Strategy<Value = TruncSeries> {
    prop::collection::vec(((0u32..4, 0u32..4), -5i64..6), 0..6)
        .prop_map(|ts| TruncSeries::from_terms(2, 8, ts.into_iter().map(|((a, b), c)| (vec![a, b], CoeffPoly::constant(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_is_multiplicative(a in ground_elem(), b in ground_elem(), c in ground_elem()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        // idempotence: re-normalizing a normal form changes nothing
        let raw: BTreeMap<(u32, u32, i32, u32, u32), BigInt> =
            a.terms().map(|(k, v)| ((k.0 as u32, k.1, k.2, k.3, k.4), v.clone())).collect();
        prop_assert_eq!(GroundRingElem::from_raw(&raw), a);
    }

    #[test]
    fn expansion_is_a_ring_hom(a in ground_elem(), b in ground_elem()) {
        let d = 6;
        let p = PSeries::integer(&[((1, 0), 2), ((0, 1), -1), ((1, 1), 3), ((2, 0), 1)]);
        let p12 = p.placed(2, d, 0, 1);
        let p21 = p.placed(2, d, 1, 0);
        let g = SeriesGenerators::new(&p12, &p21).unwrap();
        let lhs = g.expand(&a.mul(&b)).unwrap();
        let rhs = g.expand(&a).unwrap().mul(&g.expand(&b).unwrap()).unwrap();
        prop_assert!(lhs.eq_valid(&rhs));
        let sum = g.expand(&a.add(&b)).unwrap();
        prop_assert!(sum.eq_valid(&g.expand(&a).unwrap().add(&g.expand(&b).unwrap()).unwrap()));
    }

    #[test]
    fn expansion_preserves_degree(a in homogeneous_elem()) {
        let d = 5;
        let p12 = PSeries::Generic.placed(2, d, 0, 1);
        let p21 = PSeries::Generic.placed(2, d, 1, 0);
        let s = a.expand_in_series(&p12, &p21).unwrap();
        prop_assert!(s.is_homogeneous_of(0));
    }

    #[test]
    fn division_inverts_multiplication(s in small_series(), k in 1u32..3) {
        let x1 = TruncSeries::var(2, 8, 0);
        let x2 = TruncSeries::var(2, 8, 1);
        let f = x1.sub(&x2).unwrap().pow(k).unwrap();
        let prod = s.mul(&f).unwrap();
        let back = prod.divide_exact(0, 1, k).unwrap();
        prop_assert_eq!(back.valid(), 8 - k);
        prop_assert!(back.eq_valid(&s));
        prop_assert!(back.mul(&f).unwrap().eq_up_to(&prod, 8 - k));
    }

    #[test]
    fn symmetric_rewrite_round_trips(s in small_series()) {
        let sym = s.add(&s.swap(0, 1)).unwrap();
        let e = to_elementary_symmetric(&sym).unwrap();
        prop_assert!(e.expand(8).unwrap().eq_valid(&sym));
    }
}
