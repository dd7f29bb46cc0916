use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use webs::corpus::*;
use webs::random::{random_web, Limits};
use webs::*;

fn kinds(w: &Web) -> Vec<StepKind> {
    reduce_web(w).unwrap().steps.iter().map(|s| s.kind).collect()
}

#[test]
fn reduction_traces() {
    use StepKind::*;
    assert_eq!(kinds(&theta_web()), vec![Digon, ThinCircle]);
    assert_eq!(kinds(&circle_and_double_circle()), vec![ThinCircle, DoubleCircle]);
    assert_eq!(kinds(&Web::new()), vec![]);
    let fig = kinds(&figure_web());
    assert_eq!(fig.iter().filter(|k| **k == ThinCircle).count(), 3);
    assert!(fig.contains(&DoubleSaddle));
    let red = reduce_web(&figure_web()).unwrap();
    assert_eq!(red.steps.last().unwrap().web_after, Web::new());
}

#[test]
fn figure_web_shape() {
    let w = figure_web();
    let thick = w.edges.values().filter(|e| e.thickness == 2 && !e.is_loop()).count();
    let thin = w.edges.values().filter(|e| e.thickness == 1 && !e.is_loop()).count();
    assert_eq!((thick, thin, w.thin_loops().len(), w.double_loops().len()), (2, 4, 1, 1));
    let merges = w.vertices.values().filter(|v| v.kind == VertexKind::Merge).count();
    assert_eq!((merges, w.vertices.len()), (2, 4));
    assert_eq!(w.thin_components(), 3);
    assert_eq!(moy_rank(&w).unwrap(), Laurent::quantum_two().pow(3));
}

#[test]
fn json_round_trip() {
    for (name, w) in named_webs() {
        let back = Web::parse(&w.to_json().to_string()).unwrap();
        assert_eq!(back, w, "{name}");
    }
    let m = theta_movie(2, 0).unwrap();
    assert_eq!(FoamMovie::parse(&m.to_json().to_string()).unwrap(), m);
}

#[test]
fn rejects_bad_webs() {
    // two thin edges into a merge, a double edge out to a split whose thin
    // outputs feed the merge crosswise: the rotation is not planar
    let src = r#"{"edges":[{"id":0,"thickness":1},{"id":1,"thickness":1},{"id":2,"thickness":2}],
        "vertices":[{"id":0,"kind":"merge","rotation":[2,0,1]},{"id":1,"kind":"split","rotation":[2,0,1]}]}"#;
    assert!(matches!(Web::parse(src), Err(WebError::NotPlanar(_))));
    let ok = r#"{"edges":[{"id":0,"thickness":1},{"id":1,"thickness":1},{"id":2,"thickness":2}],
        "vertices":[{"id":0,"kind":"merge","rotation":[2,0,1]},{"id":1,"kind":"split","rotation":[2,1,0]}]}"#;
    assert_eq!(Web::parse(ok).unwrap().thin_components(), 1);
    let dangling = r#"{"edges":[{"id":0,"thickness":1}],"vertices":[{"id":0,"kind":"merge","rotation":[0,0,0]}]}"#;
    assert!(Web::parse(dangling).is_err());
}

#[test]
fn moves_check_preconditions() {
    let c = Web::circles(1);
    assert!(Move::DeathDoubleCircle { edge: 0 }.apply(&c).is_err());
    assert!(Move::BirthThinCircle { edge: 0 }.apply(&c).is_err());
    assert!(Move::Zip { left: 0, right: 0, merge: 0, split: 1, double: 5, out: [1, 2, 3, 4] }.apply(&c).is_err());
    let t = theta_web();
    assert!(Move::Dot { edge: t.vertices[&0].double }.apply(&t).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn random_webs_have_free_state_spaces(seed in any::<u64>()) {
        let w = random_web(&mut ChaCha8Rng::seed_from_u64(seed), 6, Limits::default());
        let s = state_space_basis(&w).unwrap();
        prop_assert_eq!(s.graded_rank(), moy_rank(&w).unwrap());
        prop_assert!(webs::linalg::is_symmetric(&s.gram));
        prop_assert!(s.gram_det().unwrap().as_unit().is_some());
    }
}
