use coeff_ring::GroundRingElem;
use prefoam::eval_exact_gl2;
use prefoam::gl2::family;
use webs::corpus::theta_movie;
use webs::*;

#[test]
fn cup_cap_is_sphere() {
    let mut b = MovieBuilder::empty();
    let a = b.birth().unwrap();
    b.death(a).unwrap();
    let f = close(&b.finish()).unwrap();
    assert_eq!(f.foam, family::thin_sphere(0));
    assert_eq!(f.eval().unwrap(), GroundRingElem::rho0());
    let mut b = MovieBuilder::empty();
    let a = b.birth().unwrap();
    b.dot(a).unwrap();
    b.death(a).unwrap();
    assert_eq!(close(&b.finish()).unwrap().eval().unwrap(), GroundRingElem::rho1());
}

#[test]
fn theta_movie_matches_theta_foam() {
    for n1 in 0..=3 {
        for n2 in 0..=3 {
            let m = theta_movie(n1, n2).unwrap();
            let closed = close(&m).unwrap();
            assert_eq!(closed.foam.thin.len(), 2);
            assert_eq!(closed.foam.double.len(), 1);
            let want = eval_exact_gl2(&family::theta(n1, n2)).unwrap();
            assert_eq!(closed.eval().unwrap(), want, "({n1}, {n2})");
            assert_eq!(m.degree(), -2 + 2 * (n1 + n2) as i64);
        }
    }
    assert!(close(&theta_movie(0, 0).unwrap()).unwrap().eval().unwrap().is_zero());
}

#[test]
fn torus_and_double_sphere() {
    // cup, two saddles, cap: a torus
    let mut b = MovieBuilder::empty();
    let a = b.birth().unwrap();
    let [x, y] = b.saddle(a, a).unwrap();
    let [z, _] = b.saddle(x, y).unwrap();
    b.death(z).unwrap();
    let f = close(&b.finish()).unwrap();
    assert_eq!(f.foam, family::thin_surface(1, 0));
    let mut b = MovieBuilder::empty();
    let g = b.birth_double().unwrap();
    b.death_double(g).unwrap();
    assert_eq!(close(&b.finish()).unwrap().eval().unwrap(), GroundRingElem::rho());
}

#[test]
fn reverse_keeps_frames() {
    let m = theta_movie(2, 1).unwrap();
    let r = m.reverse().unwrap();
    let mut fr = r.frames().unwrap();
    fr.reverse();
    assert_eq!(fr, m.frames().unwrap());
}
