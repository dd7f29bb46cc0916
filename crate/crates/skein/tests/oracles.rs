use coeff_ring::{PSeries, SeriesGenerators};
use prefoam::gl2::family;
use prefoam::gln::family::theta as gln_theta;
use prefoam::{eval_deformed_gl2, eval_deformed_gln, eval_exact_gl2};
use skein::{closed_form_oracle, Descriptor};

fn sample_p() -> PSeries {
    PSeries::integer(&[((1, 0), 1), ((0, 1), -2), ((1, 1), 3), ((2, 0), 1), ((0, 3), -1)])
}

#[test]
fn thin_surfaces_match() {
    let d = 8;
    for p in [PSeries::Generic, sample_p()] {
        for g in 0..=3 {
            for n in 0..=4 {
                let want = closed_form_oracle(&Descriptor::ThinSurface { genus: g, dots: n }, &p, d).unwrap();
                let got = eval_deformed_gl2(&family::thin_surface(g, n), &p, d).unwrap();
                assert!(got.eq_up_to(&want, d), "g = {g}, n = {n}");
            }
        }
    }
}

#[test]
fn double_surfaces_match() {
    let d = 8;
    for g in 0..=3 {
        let want = closed_form_oracle(&Descriptor::DoubleSurface { genus: g }, &PSeries::Generic, d).unwrap();
        let got = eval_deformed_gl2(&family::double_surface(g), &PSeries::Generic, d).unwrap();
        assert!(got.eq_up_to(&want, d), "g = {g}");
    }
    let torus = closed_form_oracle(&Descriptor::DoubleSurface { genus: 1 }, &PSeries::Generic, 6).unwrap();
    assert_eq!(torus.coeff(&[0, 0]).as_constant().unwrap(), 1.into());
    assert_eq!(torus.len(), 1);
}

#[test]
fn thetas_match() {
    let d = 8;
    let p = PSeries::Generic;
    for n1 in 0..=5 {
        for n2 in 0..=5 {
            let want = closed_form_oracle(&Descriptor::Theta { n1, n2 }, &p, d).unwrap();
            let got = eval_deformed_gl2(&family::theta(n1, n2), &p, d).unwrap();
            assert!(got.eq_up_to(&want, d), "({n1}, {n2})");
            assert_eq!(want.is_zero(), n1 == n2);
        }
    }
}

#[test]
fn exact_values_expand_to_the_oracle() {
    let d = 7;
    let p = sample_p();
    let p12 = p.placed(2, d + 2, 0, 1);
    let p21 = p.placed(2, d + 2, 1, 0);
    let gens = SeriesGenerators::new(&p12, &p21).unwrap();
    let cases = [
        (family::thin_surface(0, 3), Descriptor::ThinSurface { genus: 0, dots: 3 }),
        (family::thin_surface(2, 1), Descriptor::ThinSurface { genus: 2, dots: 1 }),
        (family::double_surface(2), Descriptor::DoubleSurface { genus: 2 }),
        (family::theta(4, 1), Descriptor::Theta { n1: 4, n2: 1 }),
    ];
    for (f, desc) in cases {
        let exact = eval_exact_gl2(&f).unwrap();
        let series = gens.expand(&exact).unwrap();
        let want = closed_form_oracle(&desc, &p, d).unwrap();
        assert!(series.eq_up_to(&want, d), "{desc:?}");
    }
}

#[test]
fn gl3_thetas_match_up_to_one_sign() {
    let d = 6;
    let p = sample_p();
    let mut sign = None;
    for lambda in [[0, 0, 0], [1, 0, 0], [1, 1, 0], [2, 1, 0], [2, 2, 0], [3, 1, 0]] {
        let dots: Vec<u32> = (0..3).map(|i| lambda[i] + 2 - i as u32).collect();
        let desc = Descriptor::GlnTheta { dots: dots.clone() };
        assert!(!desc.sign_determined());
        let want = closed_form_oracle(&desc, &p, d).unwrap();
        let got = eval_deformed_gln(&gln_theta(&dots), &p, d).unwrap();
        let s = if got.eq_up_to(&want, d) {
            1
        } else {
            assert!(got.eq_up_to(&want.neg(), d), "{lambda:?}");
            -1
        };
        assert_eq!(*sign.get_or_insert(s), s);
    }
    // equal dot counts: no partition, value zero
    assert!(closed_form_oracle(&Descriptor::GlnTheta { dots: vec![2, 2, 0] }, &p, d).unwrap().is_zero());
}

#[test]
fn descriptors_round_trip_json() {
    let d = Descriptor::GlnTheta { dots: vec![3, 1, 0] };
    let s = serde_json::to_string(&d).unwrap();
    assert!(s.contains("gln_theta"));
    assert_eq!(serde_json::from_str::<Descriptor>(&s).unwrap(), d);
    assert!(closed_form_oracle(&Descriptor::GlnTheta { dots: vec![1] }, &PSeries::Generic, 4).is_err());
}
