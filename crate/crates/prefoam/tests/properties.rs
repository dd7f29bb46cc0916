use coeff_ring::{PSeries, TruncSeries};
use prefoam::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn gl2_foam(seed: u64) -> Gl2Prefoam {
    random_gl2(&mut ChaCha8Rng::seed_from_u64(seed), 6)
}

fn small_p(vals: &[i64]) -> PSeries {
    let keys = [(1, 0), (0, 1), (1, 1), (2, 0), (0, 2), (2, 1)];
    PSeries::integer(&keys.iter().zip(vals).map(|(&k, &v)| (k, v)).collect::<Vec<_>>())
}

fn symmetric_p(vals: &[i64]) -> PSeries {
    let (a, b, c) = (vals[0], vals[1], vals[2]);
    PSeries::integer(&[((1, 0), a), ((0, 1), a), ((1, 1), b), ((2, 0), c), ((0, 2), c)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn exact_agrees_with_series(seed in any::<u64>(), vals in prop::collection::vec(-2i64..=2, 6)) {
        let f = gl2_foam(seed);
        let p = small_p(&vals);
        let d = 6;
        let exact = eval_exact_gl2(&f).unwrap();
        let (p12, p21) = (p.placed(2, d, 0, 1), p.placed(2, d, 1, 0));
        let e = exact.expand_in_series(&p12, &p21).unwrap();
        let s = eval_deformed_gl2(&f, &p, d).unwrap();
        prop_assert!(s.is_symmetric());
        prop_assert!(e.eq_up_to(&s, e.valid().min(s.valid())));
    }

    #[test]
    fn exact_is_homogeneous(seed in any::<u64>()) {
        let f = gl2_foam(seed);
        let v = eval_exact_gl2(&f).unwrap();
        prop_assert!(v.is_homogeneous_of(-f.chi_thin() + 2 * f.total_dots() as i64));
    }

    #[test]
    fn reversal_sign(seed in any::<u64>(), mask in any::<u32>()) {
        let f = gl2_foam(seed);
        let flip: Vec<usize> = (0..f.seams.len()).filter(|k| mask >> k & 1 == 1).collect();
        let base = eval_exact_gl2(&f).unwrap();
        let rev = eval_exact_gl2(&f.reversed_at(&flip)).unwrap();
        prop_assert_eq!(rev, if flip.len() % 2 == 0 { base } else { base.neg() });
    }

    #[test]
    fn gln_with_two_colors_agrees(seed in any::<u64>(), vals in prop::collection::vec(-2i64..=2, 6)) {
        let f = gl2_foam(seed);
        let p = small_p(&vals);
        let a = eval_deformed_gl2(&f, &p, 5).unwrap();
        let b = eval_deformed_gln(&f.to_gln(), &p, 5).unwrap();
        prop_assert!(a.eq_valid(&b));
    }

    #[test]
    fn symmetric_p_degenerates_to_rw(seed in any::<u64>(), vals in prop::collection::vec(-2i64..=2, 3)) {
        let f = gl2_foam(seed);
        let p = symmetric_p(&vals);
        let d = 6;
        let got = eval_deformed_gl2(&f, &p, d).unwrap();
        let g = f.to_gln();
        let rw = eval_rw(&g).unwrap();
        let rw = TruncSeries::from_terms(2, d, rw.terms().map(|(e, c)| (e.clone(), c.clone())));
        let scale = p.placed(2, d, 0, 1).neg().pow_int(g.chi_total() / 2).unwrap();
        prop_assert!(got.eq_valid(&rw.mul(&scale).unwrap()));
    }

    #[test]
    fn gl3_random_is_symmetric(seed in any::<u64>(), vals in prop::collection::vec(-1i64..=1, 6)) {
        let f = random_gln(&mut ChaCha8Rng::seed_from_u64(seed), 3, 6);
        let p = small_p(&vals);
        let v = eval_deformed_gln(&f, &p, 5).unwrap();
        prop_assert!(v.eq_valid(&v.swap(0, 1)));
        prop_assert!(v.eq_valid(&v.swap(1, 2)));
    }

    #[test]
    fn gl3_reversal_sign(seed in any::<u64>()) {
        let f = random_gln(&mut ChaCha8Rng::seed_from_u64(seed), 3, 6);
        let a = eval_trivial_p(&f).unwrap();
        let b = eval_trivial_p(&f.reversed()).unwrap();
        // a seam merging thicknesses s and t lies on s * t of the surfaces F_ij
        let flips: u32 = f.seams.iter().map(|s| f.facets[s.a].thickness * f.facets[s.b].thickness).sum();
        let want = if flips % 2 == 0 { a } else { a.neg() };
        prop_assert_eq!(b, want);
    }
}

#[test]
fn generator_respects_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let f = random_gl2(&mut rng, 8);
        assert!(f.facet_count() <= 8);
        assert!(f.thin.iter().all(|t| t.genus <= 2));
        f.validate().unwrap();
        let g = random_gln(&mut rng, 3, 8);
        assert!(g.facets.len() <= 8 && !g.colorings().unwrap().is_empty());
    }
}

#[test]
fn generic_series_is_homogeneous() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..6 {
        let f = random_gl2(&mut rng, 4);
        let v = eval_deformed_gl2(&f, &PSeries::Generic, 4).unwrap();
        assert!(v.is_homogeneous_of(-f.chi_thin() + 2 * f.total_dots() as i64));
    }
}
