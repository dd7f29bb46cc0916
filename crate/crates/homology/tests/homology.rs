use coeff_ring::specialization::PresetFile;
use coeff_ring::Specialization;
use homology::euler::smoothing_circles;
use homology::snf::{invariant_factors, rank};
use homology::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use webs::Laurent;

fn small_corpus() -> Vec<(&'static str, PdLink)> {
    corpus::diagrams().into_iter().filter(|(_, d)| d.len() <= 4).collect()
}

fn preset(e1: i64, e2: i64, rho0: i64, rho1: i64) -> Specialization {
    Specialization::from_preset(&PresetFile { name: None, beta: vec![], e1, e2, rho0, rho1 })
}

#[test]
fn pd_signs_and_components() {
    let left = corpus::diagram("trefoil_left").unwrap();
    assert_eq!((left.n_plus(), left.n_minus()), (0, 3));
    let right = corpus::diagram("trefoil").unwrap();
    assert_eq!((right.n_plus(), right.n_minus()), (3, 0));
    assert_eq!(corpus::diagram("hopf").unwrap().components(), 2);
    assert_eq!(corpus::diagram("figure_eight").unwrap().writhe(), 0);
    assert_eq!(PdLink::parse("O,O,O").unwrap().components(), 3);
    let m = right.mirror();
    assert_eq!(m.n_minus(), 3);
    m.validate().unwrap();
    let again = PdLink::parse(&right.to_string()).unwrap();
    assert_eq!(again, right);
    assert_eq!(PdLink::parse("PD[X[1,1,2,2]]").unwrap().n_plus(), 1);
}

#[test]
fn pd_rejects_malformed_codes() {
    for bad in ["", "X[1,2,3]", "X[1,2,3,4]", "X[1,1,1,2]", "Y[1,2,3,4]", "X[1,2,2,a]"] {
        assert!(PdLink::parse(bad).is_err(), "{bad}");
    }
}

#[test]
fn resolution_counts_and_circles() {
    assert_eq!(resolutions(&PdLink::unlink(1)).unwrap().len(), 1);
    assert_eq!(resolutions(&corpus::diagram("hopf").unwrap()).unwrap().len(), 4);
    let tref = corpus::diagram("trefoil").unwrap();
    let rs = resolutions(&tref).unwrap();
    assert_eq!(rs.len(), 8);
    assert_eq!(rs[0].web.thin_loops().len(), 2);
    assert!(rs[0].web.vertices.is_empty());
    // thin components of every resolved web against a direct smoothing count
    for (name, d) in small_corpus() {
        for (m, r) in resolutions(&d).unwrap().iter().enumerate() {
            assert_eq!(r.web.thin_components(), smoothing_circles(&d, m), "{name} {m:b}");
        }
    }
}

#[test]
fn cube_faces_commute_and_saddles_have_degree_one() {
    for (name, d) in small_corpus() {
        let cube = Cube::build(&d).unwrap();
        cube.check_commuting().unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(cube.saddle_degrees().iter().all(|&k| k == 1), "{name}");
        let (lo, hi) = (cube.vertices.iter().map(|v| v.h).min().unwrap(), cube.vertices.iter().map(|v| v.h).max().unwrap());
        assert_eq!((lo, hi), (-(d.n_minus() as i64), d.n_plus() as i64), "{name}");
    }
}

#[test]
fn d_squared_vanishes() {
    for (name, d) in small_corpus() {
        let cube = Cube::build(&d).unwrap();
        for s in [Specialization::khovanov(), Specialization::multiplicative(), preset(1, 0, 0, 1)] {
            let c = from_cube(&cube, &s).unwrap();
            assert!(c.d_squared_zero(), "{name} {}", s.name);
        }
    }
}

#[test]
fn crossingless_unknot_complex() {
    let c = build_complex(&PdLink::unlink(1), &Specialization::khovanov()).unwrap();
    assert_eq!(c.gens.len(), 1);
    assert_eq!(c.graded_euler(), Laurent::quantum_two());
    let t = homology(&c).unwrap();
    assert_eq!((t.rank(0, 1), t.rank(0, -1), t.total_rank()), (1, 1, 2));
}

#[test]
fn unlinks_have_rank_two_to_the_n() {
    for n in 1..=3 {
        let t = homology_of(&PdLink::unlink(n), &Specialization::khovanov()).unwrap();
        assert_eq!(t.total_rank(), 1 << n);
        assert_eq!(t.euler(), Laurent::quantum_two().pow(n as u32));
    }
    let t = homology_of(&corpus::diagram("unlink2_r2_same").unwrap(), &Specialization::khovanov()).unwrap();
    assert_eq!(t.euler(), Laurent::quantum_two().pow(2));
}

#[test]
fn foam_homology_equals_frobenius_oracle() {
    for (name, d) in small_corpus() {
        let foam = homology_of(&d, &Specialization::khovanov()).unwrap();
        let oracle = homology(&khovanov_complex(&d)).unwrap();
        assert_eq!(foam, oracle, "{name}: {:?}", foam.first_difference(&oracle));
    }
}

#[test]
fn right_trefoil_table() {
    let t = homology_of(&corpus::diagram("trefoil").unwrap(), &Specialization::khovanov()).unwrap();
    let free: Vec<(i64, i64)> = t.entries.iter().filter(|(_, e)| e.rank > 0).map(|(&(h, q), _)| (h, q.unwrap())).collect();
    assert_eq!(free, vec![(0, 1), (0, 3), (2, 5), (3, 9)]);
    assert_eq!(t.torsion(3, Some(7)), &[BigInt::from(2)]);
}

#[test]
fn graded_euler_matches_bracket() {
    for (name, d) in corpus::diagrams().into_iter().filter(|(_, d)| d.len() <= 4) {
        let c = build_complex(&d, &Specialization::khovanov()).unwrap();
        assert_eq!(c.graded_euler(), bracket(&d), "{name}");
        assert_eq!(homology(&c).unwrap().euler(), bracket(&d), "{name}");
    }
    let hopf = bracket(&corpus::diagram("hopf_braid").unwrap());
    let mut expect = Laurent::zero();
    for k in [0, 2, 4, 6] {
        expect.add_term(k, 1);
    }
    assert_eq!(hopf, expect);
}

#[test]
fn mirror_inverts_the_euler_characteristic() {
    for (name, d) in small_corpus() {
        assert_eq!(bracket(&d.mirror()), bracket(&d).bar(), "{name}");
        let c = build_complex(&d.mirror(), &Specialization::khovanov()).unwrap();
        assert_eq!(c.graded_euler(), bracket(&d).bar(), "{name}");
    }
}

#[test]
fn reidemeister_pairs_agree() {
    for p in corpus::reidemeister_pairs() {
        for s in [Specialization::khovanov(), Specialization::multiplicative()] {
            let r = reidemeister_check(&p.before, &p.after, &s).unwrap();
            assert!(r.equal(), "{} {}: {:?}", p.name, s.name, r.first_difference);
        }
    }
}

#[test]
fn different_knots_are_told_apart() {
    let s = Specialization::khovanov();
    let r = reidemeister_check(&corpus::diagram("trefoil").unwrap(), &corpus::diagram("trefoil_left").unwrap(), &s).unwrap();
    assert!(!r.equal());
    assert!(r.to_json()["first_difference"].is_string());
}

#[test]
fn filtered_preset_gives_rank_two_for_knots() {
    // x^2 = x: the deformed theory of a knot has rank 2
    let s = preset(1, 0, 0, 1);
    for name in ["trefoil", "trefoil_left", "figure_eight", "kink_neg"] {
        let c = build_complex(&corpus::diagram(name).unwrap(), &s).unwrap();
        assert_eq!(c.grading, Grading::Increasing, "{name}");
        let t = homology(&c).unwrap();
        assert!(t.filtered);
        assert_eq!(t.total_rank(), 2, "{name}");
    }
    let r = reidemeister_check(&PdLink::unlink(1), &corpus::diagram("kink_pos").unwrap(), &s).unwrap();
    assert!(r.equal());
}

#[test]
fn non_unit_rho_is_rejected() {
    // rho = -(rho1^2 - E1 rho1 rho0 + E2 rho0^2) = -4
    let s = preset(0, 0, 0, 2);
    assert!(matches!(build_complex(&corpus::diagram("hopf").unwrap(), &s), Err(HomologyError::NonUnitRho(_))));
}

#[test]
fn tsv_layout() {
    let t = homology_of(&corpus::diagram("trefoil").unwrap(), &Specialization::khovanov()).unwrap();
    let tsv = t.to_tsv();
    let lines: Vec<&str> = tsv.lines().collect();
    assert_eq!(lines[0], "h\tq\trank\ttorsion");
    assert!(lines.contains(&"3\t7\t0\t2"));
    assert!(lines.contains(&"0\t1\t1\t-"));
}

#[test]
fn smith_form_examples() {
    let m = |rows: &[&[i64]]| -> Vec<Vec<BigInt>> { rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect() };
    assert_eq!(invariant_factors(&m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]])), vec![2, 6, 12].into_iter().map(BigInt::from).collect::<Vec<_>>());
    assert_eq!(invariant_factors(&m(&[&[2, 0], &[0, 3]])), vec![BigInt::from(1), BigInt::from(6)]);
    assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
    assert!(invariant_factors(&m(&[&[0, 0]])).is_empty());
}

fn det(a: &[Vec<i64>]) -> i64 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = a[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &v)| v).collect()).collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * a[0][j] * det(&minor)
        })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn invariant_factors_divide_and_multiply_to_det(n in 1usize..5, seed in proptest::collection::vec(-6i64..7, 16)) {
        let a: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| seed[i * 4 + j]).collect()).collect();
        let big: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        let f = invariant_factors(&big);
        for w in f.windows(2) {
            prop_assert!((&w[1] % &w[0]) == BigInt::from(0));
        }
        let d = det(&a).abs();
        if d == 0 {
            prop_assert!(f.len() < n);
        } else {
            prop_assert_eq!(f.len(), n);
            prop_assert_eq!(f.iter().product::<BigInt>(), BigInt::from(d));
        }
    }

}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn crossing_order_does_not_change_homology(which in 0usize..3, perm_seed in proptest::collection::vec(0usize..100, 4)) {
        let d = corpus::diagram(["trefoil", "figure_eight", "hopf"][which]).unwrap();
        let mut perm: Vec<usize> = (0..d.len()).collect();
        for (i, s) in perm_seed.iter().enumerate().take(d.len()) {
            let j = s % d.len();
            perm.swap(i % d.len(), j);
        }
        let s = Specialization::khovanov();
        let a = homology_of(&d, &s).unwrap();
        let b = homology_of(&d.permuted(&perm), &s).unwrap();
        prop_assert_eq!(a, b);
    }
}
