use coeff_ring::GroundRingElem;
use prefoam::gl2::family;
use prefoam::{eval_exact_gl2, Gl2Prefoam};
use proptest::prelude::*;
use skein::*;
use webs::{eval_closed, FoamMovie, MovieBuilder};

#[test]
fn every_relation_holds_on_every_closure() {
    for rel in all_relations().unwrap() {
        let report = verify_relation(&rel).unwrap();
        assert!(report.cases.len() >= 3, "{}", rel.id.name());
        for c in &report.cases {
            assert!(c.pass(), "{} {} {}: {} vs {}", rel.id.name(), c.variant, c.closure, c.lhs, c.rhs);
        }
    }
}

#[test]
fn relations_are_not_vacuous() {
    // negating the right-hand side must break every relation somewhere
    for mut rel in all_relations().unwrap() {
        for v in &mut rel.variants {
            for t in &mut v.rhs {
                t.coeff = t.coeff.neg();
            }
        }
        let report = verify_relation(&rel).unwrap();
        assert!(report.failures() > 0, "{}", rel.id.name());
    }
}

#[test]
fn sides_share_the_boundary() {
    for rel in all_relations().unwrap() {
        for v in &rel.variants {
            for t in v.lhs.iter().chain(&v.rhs) {
                if let Patch::Movie(m) = &t.patch {
                    assert_eq!(m.start, v.boundary, "{} {}", rel.id.name(), v.name);
                    assert_eq!(m.end().unwrap(), v.boundary, "{} {}", rel.id.name(), v.name);
                }
            }
        }
    }
}

fn case<'a>(r: &'a RelationReport, variant: &str, closure: &str) -> &'a CaseReport {
    r.cases.iter().find(|c| c.variant == variant && c.closure == closure).unwrap()
}

#[test]
fn singular_neck_cut_recovers_theta() {
    let r = verify_relation(&relation(RelationId::SingularNeckCut).unwrap()).unwrap();
    // a dot above the seam on the preferred disk
    let c = case(&r, "plain", "cup0/cap1");
    assert_eq!(c.lhs, GroundRingElem::rho().neg());
    assert_eq!(c.lhs, eval_exact_gl2(&family::theta(1, 0)).unwrap());
    assert_eq!(case(&r, "plain", "cup0/cap0").lhs, GroundRingElem::zero());
}

#[test]
fn cancel_double_disks_on_a_sphere() {
    let r = verify_relation(&relation(RelationId::CancelDoubleDisks).unwrap()).unwrap();
    let c = case(&r, "middle_preferred", "cup0/cap0");
    assert_eq!(c.lhs, GroundRingElem::rho().mul(&GroundRingElem::rho0()));
    // the same sphere with two double disks built as a prefoam
    let mut f = Gl2Prefoam::new();
    let (top, mid, bot) = (f.add_thin(0, 0), f.add_thin(0, 0), f.add_thin(0, 0));
    let (d1, d2) = (f.add_double(0), f.add_double(0));
    f.add_seam(mid, bot, d1);
    f.add_seam(mid, top, d2);
    assert_eq!(eval_exact_gl2(&f).unwrap(), c.lhs);
}

fn sphere_movie(n: u32) -> FoamMovie {
    let mut b = MovieBuilder::empty();
    let a = b.birth().unwrap();
    b.dots(a, n).unwrap();
    b.death(a).unwrap();
    b.finish()
}

#[test]
fn dot_reduction_sphere_recurrence() {
    for n in 0..=6 {
        let v: Vec<GroundRingElem> = (n..n + 3).map(|k| eval_closed(&[sphere_movie(k)]).unwrap()).collect();
        let lhs = v[2].clone();
        let rhs = GroundRingElem::e1().mul(&v[1]).sub(&GroundRingElem::e2().mul(&v[0]));
        assert_eq!(lhs, rhs, "n = {n}");
        assert_eq!(v[2], GroundRingElem::rho_n(n + 2));
    }
}

#[test]
fn neck_cut_factors_are_units() {
    for (id, k) in [(RelationId::NeckCut, -1), (RelationId::NeckCutTop, -1), (RelationId::DoubleNeckCut, 1)] {
        for v in relation(id).unwrap().variants {
            for t in &v.rhs {
                let (_, power) = t.coeff.as_unit().expect("unit coefficient");
                assert_eq!(power, k, "{}", id.name());
            }
        }
    }
}

#[test]
fn gamma_pair_shapes() {
    for g in gamma_instances() {
        let f2 = modify_pair(&g.foam, g.arcs[0], g.arcs[1]).unwrap();
        assert_eq!(f2.seams.len(), g.foam.seams.len() - 2);
        assert_eq!(f2.double.len(), g.foam.double.len() - 2);
        assert_eq!(f2.chi_thin(), g.foam.chi_thin());
        assert_eq!(f2.chi_double(), g.foam.chi_double() - 2);
        assert_eq!(f2.total_dots(), g.foam.total_dots());
        let lhs = eval_exact_gl2(&g.foam).unwrap();
        let rhs = eval_exact_gl2(&f2).unwrap().mul(&GroundRingElem::rho()).scale(g.sign);
        assert_eq!(lhs, rhs, "{}", g.name);
        assert!(!lhs.is_zero(), "{}", g.name);
    }
    // the arcs commute
    let g = &gamma_instances()[1];
    let a = modify_pair(&g.foam, g.arcs[0], g.arcs[1]).unwrap();
    let b = modify_pair(&g.foam, g.arcs[1], g.arcs[0]).unwrap();
    assert_eq!(eval_exact_gl2(&a).unwrap(), eval_exact_gl2(&b).unwrap());
}

#[test]
fn modification_rejects_mismatched_sides() {
    let mut f = Gl2Prefoam::new();
    let r: Vec<usize> = (0..3).map(|_| f.add_thin(0, 0)).collect();
    let (d1, d2) = (f.add_double(0), f.add_double(0));
    f.add_seam(r[1], r[0], d1);
    f.add_seam(r[2], r[1], d2);
    assert!(modify(&f, Arc { facet: r[1], s1: 0, s2: 1 }).is_err());
    assert!(modify(&f, Arc { facet: r[0], s1: 0, s2: 1 }).is_err());
}

#[test]
fn relation_names_parse() {
    for id in RelationId::ALL {
        assert_eq!(RelationId::parse(id.name()).unwrap(), id);
    }
    assert_eq!(RelationId::parse("neck_cut").unwrap(), RelationId::NeckCut);
    assert_eq!(RelationId::parse("dot-migration-e2").unwrap(), RelationId::DotMigrationE2);
    assert!(RelationId::parse("saddle").is_err());
}

#[test]
fn report_json_lists_cases() {
    let r = verify_all(&[RelationId::DiskFlip]).unwrap();
    let j = r[0].to_json();
    assert_eq!(j["relation"], "DiskFlip");
    assert_eq!(j["passed"], true);
    assert_eq!(j["results"].as_array().unwrap().len(), r[0].cases.len());
    assert!(j["results"][0]["lhs"].is_string());
}

#[test]
fn explicit_closures_are_checked() {
    let rel = relation(RelationId::DotReduction).unwrap();
    let fam = closure_family(&closure::thin_circle()).unwrap();
    let r = verify_relation_with(&rel, &fam[..3]).unwrap();
    assert!(r.passed());
    let wrong = closure_family(&closure::double_circle()).unwrap();
    assert!(verify_relation_with(&rel, &wrong).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Striped spheres with arbitrary dots and double disk sides (constant
    /// along each arc): the sign is 1 exactly when both arcs see their
    /// disks on the same side.
    #[test]
    fn gamma_pairs_on_striped_spheres(dots in proptest::collection::vec(0u32..3, 6), first in any::<bool>(), middle in any::<bool>(), second in any::<bool>()) {
        let inside = [first, first, middle, second, second];
        let mut f = Gl2Prefoam::new();
        let regions: Vec<usize> = dots.iter().map(|&n| f.add_thin(0, n)).collect();
        for k in 0..5 {
            let d = f.add_double(0);
            let (odd, even) = if k % 2 == 0 { (regions[k + 1], regions[k]) } else { (regions[k], regions[k + 1]) };
            if inside[k] { f.add_seam(odd, even, d); } else { f.add_seam(even, odd, d); }
        }
        let arcs = [Arc { facet: 1, s1: 0, s2: 1 }, Arc { facet: 4, s1: 3, s2: 4 }];
        let f2 = modify_pair(&f, arcs[0], arcs[1]).unwrap();
        let s = if first == second { 1 } else { -1 };
        let lhs = eval_exact_gl2(&f).unwrap();
        let rhs = eval_exact_gl2(&f2).unwrap().mul(&GroundRingElem::rho()).scale(s);
        prop_assert_eq!(lhs, rhs);
    }
}
