use coeff_ring::{CoeffPoly, TruncSeries};
use formal_group::*;
use num_bigint::BigInt;
use proptest::prelude::*;

const D: u32 = 12;

fn b() -> CoeffPoly {
    beta()
}

fn bpow(k: u32) -> CoeffPoly {
    (0..k).fold(CoeffPoly::one(), |acc, _| &acc * &b())
}

fn b2pow(k: u32) -> CoeffPoly {
    (0..k).fold(CoeffPoly::one(), |acc, _| &acc * &beta_sq())
}

fn laws(d: u32) -> Vec<FormalGroupLaw> {
    vec![FormalGroupLaw::additive(d), FormalGroupLaw::multiplicative(d), FormalGroupLaw::lorentz(d)]
}

#[test]
fn multiplicative_negative_is_geometric() {
    let n = FormalGroupLaw::multiplicative(D).formal_negative(D).unwrap();
    let mut want = TruncSeries::zero(1, D);
    for i in 0..D {
        want.add_term(vec![i + 1], -&bpow(i));
    }
    assert_eq!(n, want);
}

#[test]
fn additive_and_lorentz_negatives_are_minus_x() {
    for law in [FormalGroupLaw::additive(D), FormalGroupLaw::lorentz(D)] {
        assert_eq!(law.formal_negative(D).unwrap(), TruncSeries::var(1, D, 0).neg());
    }
}

#[test]
fn formal_differences_match_closed_forms() {
    // (x - y) / (1 - b y) = sum_n b^n (x y^n - y^(n+1))
    let mut mult = TruncSeries::zero(2, D);
    for n in 0..D {
        mult.add_term(vec![1, n], bpow(n));
        mult.add_term(vec![0, n + 1], -&bpow(n));
    }
    assert_eq!(FormalGroupLaw::multiplicative(D).formal_difference(D).unwrap(), mult);

    // (x - y) / (1 - b2 x y) = sum_k b2^k (x^(k+1) y^k - x^k y^(k+1))
    let mut lor = TruncSeries::zero(2, D);
    for k in 0..D / 2 + 1 {
        lor.add_term(vec![k + 1, k], b2pow(k));
        lor.add_term(vec![k, k + 1], -&b2pow(k));
    }
    assert_eq!(FormalGroupLaw::lorentz(D).formal_difference(D).unwrap(), lor);

    let add = TruncSeries::var(2, D, 0).sub(&TruncSeries::var(2, D, 1)).unwrap();
    assert_eq!(FormalGroupLaw::additive(D).formal_difference(D).unwrap(), add);
}

#[test]
fn q_series_properties() {
    for law in laws(D) {
        let q = law.q_series(D).unwrap();
        assert_eq!(q.valid(), D - 1);
        assert_eq!(q.set_zero(1), TruncSeries::one(2, D).with_valid(D - 1), "q(x,0) = 1 for {}", law.name);
        // one extra degree so that the product is known through degree D
        let law1 = FormalGroupLaw::by_name(&law.name, D + 1).unwrap();
        let q1 = law1.q_series(D + 1).unwrap();
        let xy = TruncSeries::var(2, D + 1, 0).sub(&TruncSeries::var(2, D + 1, 1)).unwrap();
        let prod = xy.mul(&q1).unwrap();
        assert_eq!(prod.valid(), D);
        let diff = law1.formal_difference(D + 1).unwrap();
        assert!(prod.eq_up_to(&diff, D), "(x-y) q = x[-1]y for {}", law.name);
        assert!(q.inverse().is_ok());
    }
    let mut geo = TruncSeries::zero(2, D);
    for n in 0..D {
        geo.add_term(vec![0, n], bpow(n));
    }
    assert!(FormalGroupLaw::multiplicative(D).q_series(D).unwrap().eq_valid(&geo));
    assert_eq!(FormalGroupLaw::additive(D).q_series(D).unwrap(), TruncSeries::one(2, D).with_valid(D - 1));
}

#[test]
fn multiplicative_log_oracle() {
    let log = fgl_log(&FormalGroupLaw::multiplicative(D), D).unwrap();
    assert_eq!(log.valid(), D);
    for k in 0..D {
        let (num, den) = log.coeff(k + 1);
        assert_eq!(num, bpow(k));
        assert_eq!(den, BigInt::from(k + 1));
    }
    let add = fgl_log(&FormalGroupLaw::additive(D), D).unwrap();
    assert_eq!(add.coeff(1), (CoeffPoly::one(), BigInt::from(1)));
    assert!((2..=D).all(|n| add.coeff(n).0.is_zero()));
}

#[test]
fn log_is_a_homomorphism() {
    for law in laws(D) {
        let log = fgl_log(&law, D).unwrap();
        assert!(log.is_homomorphism_for(&law).unwrap(), "{}", law.name);
    }
    let u = FormalGroupLaw::universal_rational(8).unwrap();
    assert!(fgl_log(&u, 8).unwrap().is_homomorphism_for(&u).unwrap());
}

#[test]
fn q_on_diagonal_is_log_derivative() {
    let mut all = laws(D);
    all.push(FormalGroupLaw::universal_rational(D).unwrap());
    for law in all {
        let q = law.q_series(D).unwrap();
        let mut diag = TruncSeries::zero(1, D).with_valid(q.valid());
        for (e, c) in q.terms() {
            diag.add_term(vec![e[0] + e[1]], c.clone());
        }
        let log = fgl_log(&law, D).unwrap();
        assert!(diag.eq_valid(log.derivative()), "{}", law.name);
        assert_eq!(diag.valid(), D - 1);
    }
}

#[test]
fn universal_law_log_coefficients_are_the_symbols() {
    let u = FormalGroupLaw::universal_rational(8).unwrap();
    u.check_axioms(8).unwrap();
    let log = fgl_log(&u, 8).unwrap();
    for k in 1..8 {
        assert_eq!(log.coeff(k + 1), (log_symbol(k), BigInt::from(1)));
    }
    // a_11 = -2 m_1 from exp(log x + log y)
    assert_eq!(u.coeff(1, 1), log_symbol(1).scale(&BigInt::from(-2)));
}

#[test]
fn symmetry_of_q_and_parity_of_log() {
    let lq = FormalGroupLaw::lorentz(D).q_series(D).unwrap();
    assert!(lq.swap(0, 1).eq_valid(&lq));
    let llog = fgl_log(&FormalGroupLaw::lorentz(D), D).unwrap();
    assert!((1..=D).filter(|n| n % 2 == 0).all(|n| llog.coeff(n).0.is_zero()));
    let mq = FormalGroupLaw::multiplicative(D).q_series(D).unwrap();
    assert_eq!(mq.asymmetry_degree(0, 1), Some(1));
}

#[test]
fn builtins_satisfy_axioms() {
    for law in laws(10) {
        law.check_axioms(10).unwrap();
        let n = law.formal_negative(10).unwrap();
        let zero = law.apply(&TruncSeries::var(1, 10, 0), &n).unwrap();
        assert!(zero.is_zero());
    }
    // x + y + x y is a law, x + y + x^2 y is not
    let bad = TruncSeries::from_terms(
        2,
        6,
        [(vec![1, 0], CoeffPoly::one()), (vec![0, 1], CoeffPoly::one()), (vec![2, 1], CoeffPoly::one()), (vec![1, 2], CoeffPoly::one())],
    );
    let law = FormalGroupLaw::from_series("bad", RingTag::Integral, &bad).unwrap();
    assert!(law.check_axioms(6).is_err());
}

#[test]
fn operator_examples() {
    let d = 6;
    let one = TruncSeries::one(2, d);
    let op = |m| DividedDiffOp::new(0, 1, m);
    let add = FormalGroupLaw::additive(d);
    assert!(apply_divided_difference(&add, op(Mode::Classical), &one).unwrap().is_zero());
    let x1 = TruncSeries::var(2, d, 0);
    let a = apply_divided_difference(&add, op(Mode::Generalized), &x1).unwrap();
    assert!(a.eq_valid(&TruncSeries::one(2, d)));
    // ((1 - b x2) - (1 - b x1)) / (x1 - x2) = b
    let mult = FormalGroupLaw::multiplicative(d);
    let a = apply_divided_difference(&mult, op(Mode::Generalized), &one).unwrap();
    assert!(a.eq_valid(&TruncSeries::constant(2, d, b())));
}

#[test]
fn multiplicative_q_delta_plus_closed_form() {
    let d = 8;
    let ctx = OperatorContext::new(&FormalGroupLaw::multiplicative(d), 3, d).unwrap();
    let qd = ctx.q_delta_plus().unwrap();
    // 1 / ((1 - b x2)(1 - b x3)^2)
    let mut inv2 = TruncSeries::zero(3, d);
    let mut inv3 = TruncSeries::zero(3, d);
    for k in 0..=d {
        inv2.add_term(vec![0, k, 0], bpow(k));
        inv3.add_term(vec![0, 0, k], bpow(k));
    }
    let want = inv2.mul(&inv3).unwrap().mul(&inv3).unwrap();
    assert!(qd.eq_valid(&want));
    assert!(!qd.is_symmetric());
}

#[test]
fn nilhecke_additive_n3() {
    let r = check_nilhecke(&FormalGroupLaw::additive(8), 3, 8).unwrap();
    assert!(r.all_passed(), "{:?}", r.to_json());
}

#[test]
fn nilhecke_multiplicative_n2_n3() {
    for n in [2, 3] {
        let r = check_nilhecke(&FormalGroupLaw::multiplicative(8), n, 8).unwrap();
        assert!(r.all_passed(), "{}", r.to_json());
    }
}

#[test]
fn nilhecke_lorentz_n3() {
    let r = check_nilhecke(&FormalGroupLaw::lorentz(8), 3, 8).unwrap();
    assert!(r.all_passed(), "{}", r.to_json());
}

#[test]
fn nilhecke_n4_commuting_roots() {
    let r = check_nilhecke(&FormalGroupLaw::multiplicative(4), 4, 4).unwrap();
    assert!(r.checks.iter().any(|c| c.name.contains("commute")));
    assert!(r.all_passed(), "{}", r.to_json());
}

fn small_poly(n: usize, d: u32) -> impl Strategy<Value = TruncSeries> {
    prop::collection::vec((prop::collection::vec(0u32..3, n), -4i64..5), 1..5).prop_map(move |ts| {
        TruncSeries::from_terms(n, d, ts.into_iter().map(|(e, c)| (e, CoeffPoly::constant(c))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn integer_laws_are_laws(bv in -3i64..4, b2v in -3i64..4) {
        for law in [
            FormalGroupLaw::multiplicative_with(CoeffPoly::constant(bv), 8),
            FormalGroupLaw::lorentz_with(CoeffPoly::constant(b2v), 8),
        ] {
            prop_assert!(law.check_axioms(8).is_ok());
            let n = law.formal_negative(8).unwrap();
            prop_assert!(law.apply(&TruncSeries::var(1, 8, 0), &n).unwrap().is_zero());
            let f = law.series(8).unwrap();
            prop_assert_eq!(f.set_zero(0), TruncSeries::var(2, 8, 1));
        }
    }

    #[test]
    fn module_map_over_invariants(f in small_poly(3, 8), g in small_poly(2, 8)) {
        // g(x1 + x2, x1 x2) is symmetric in x1, x2
        let x1 = TruncSeries::var(3, 8, 0);
        let x2 = TruncSeries::var(3, 8, 1);
        let e1 = x1.add(&x2).unwrap();
        let e2 = x1.mul(&x2).unwrap();
        let mut sym = TruncSeries::zero(3, 8);
        for (e, c) in g.terms() {
            sym = sym.add(&e1.pow(e[0]).unwrap().mul(&e2.pow(e[1]).unwrap()).unwrap().scale(c)).unwrap();
        }
        let ctx = OperatorContext::new(&FormalGroupLaw::multiplicative(8), 3, 8).unwrap();
        for mode in [Mode::Classical, Mode::Generalized, Mode::Twisted] {
            let op = DividedDiffOp::new(0, 1, mode);
            let lhs = ctx.apply(op, &f.mul(&sym).unwrap()).unwrap();
            let rhs = ctx.apply(op, &f).unwrap().mul(&sym).unwrap();
            prop_assert!(lhs.eq_valid(&rhs));
        }
    }

    #[test]
    fn classical_square_vanishes(f in small_poly(3, 8)) {
        let ctx = OperatorContext::new(&FormalGroupLaw::lorentz(8), 3, 8).unwrap();
        for k in 0..2 {
            for mode in [Mode::Classical, Mode::Twisted] {
                let op = DividedDiffOp::simple(k, mode);
                prop_assert!(ctx.apply(op, &ctx.apply(op, &f).unwrap()).unwrap().is_zero());
            }
        }
    }
}

/// log x = x + x^3 gives an integral law outside the two-parameter family
/// (x + y - b x y) / (1 + c x y).
fn cubic_log_law(d: u32) -> FormalGroupLaw {
    let log = TruncSeries::from_terms(1, d, [(vec![1], CoeffPoly::one()), (vec![3], CoeffPoly::one())]);
    FormalGroupLaw::from_log("cubic-log", RingTag::Integral, &log).unwrap()
}

#[test]
fn twisted_braid_holds_where_untwisted_fails() {
    let d = 7;
    // operators at degree d need the law through d + 1
    let law = cubic_log_law(d + 1);
    law.check_axioms(d).unwrap();
    assert!(law.coeffs().values().all(|c| c.as_constant().is_some()));
    let r = check_nilhecke(&law, 3, d).unwrap();
    assert!(r.all_passed(), "{}", r.to_json());
    let ctx = OperatorContext::new(&law, 3, d).unwrap();
    let s = DividedDiffOp::simple(0, Mode::Generalized);
    let t = DividedDiffOp::simple(1, Mode::Generalized);
    let fails = monomials(3, d).into_iter().any(|e| {
        let m = TruncSeries::monomial(3, d, e, CoeffPoly::one());
        let lhs = ctx.apply(s, &ctx.apply(t, &ctx.apply(s, &m).unwrap()).unwrap()).unwrap();
        let rhs = ctx.apply(t, &ctx.apply(s, &ctx.apply(t, &m).unwrap()).unwrap()).unwrap();
        !lhs.eq_valid(&rhs)
    });
    assert!(fails, "plain A operators should not braid for this law");
}
