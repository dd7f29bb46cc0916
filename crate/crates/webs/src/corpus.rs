//! Small named webs and movies.

use crate::error::Result;
use crate::movie::{FoamMovie, MovieBuilder};
use crate::web::Web;

/// Two thin edges between a split and a merge, closed up by one double edge.
pub fn theta_web() -> Web {
    let mut b = MovieBuilder::empty();
    let a = b.birth().unwrap();
    let c = b.birth().unwrap();
    b.zip(a, c).unwrap();
    b.web().clone()
}

/// A thin circle with a double circle beside it.
pub fn circle_and_double_circle() -> Web {
    let mut b = MovieBuilder::empty();
    b.birth().unwrap();
    b.birth_double().unwrap();
    b.web().clone()
}

/// Two thin digons joined in a cycle by two double edges, plus a thin and
/// a double circle: two vertices of each kind and three thin components.
pub fn figure_web() -> Web {
    let mut b = MovieBuilder::empty();
    let (a, c) = (b.birth().unwrap(), b.birth().unwrap());
    let (_, _, g1, _) = b.zip(a, c).unwrap();
    let (d, e) = (b.birth().unwrap(), b.birth().unwrap());
    let (_, _, g2, _) = b.zip(d, e).unwrap();
    b.double_saddle(g1, g2).unwrap();
    b.birth().unwrap();
    b.birth_double().unwrap();
    b.web().clone()
}

/// Two thin circles joined by two parallel double edges.
pub fn two_rungs() -> Web {
    let mut b = MovieBuilder::empty();
    let (a, c) = (b.birth().unwrap(), b.birth().unwrap());
    let (_, _, _, p) = b.zip(a, c).unwrap();
    b.zip(p[1], p[3]).unwrap();
    b.web().clone()
}

/// Closed movie: two thin disks with `n1` dots on the right (preferred)
/// one and `n2` on the left, glued to a double disk.
pub fn theta_movie(n1: u32, n2: u32) -> Result<FoamMovie> {
    let mut b = MovieBuilder::empty();
    let a = b.birth()?;
    let c = b.birth()?;
    b.dots(a, n2)?;
    b.dots(c, n1)?;
    let (m, s, _, _) = b.zip(a, c)?;
    let [x, y] = b.unzip(m, s)?;
    b.death(x)?;
    b.death(y)?;
    Ok(b.finish())
}

/// Webs used by tests and the command line, with names.
pub fn named_webs() -> Vec<(&'static str, Web)> {
    vec![
        ("empty", Web::new()),
        ("circle", Web::circles(1)),
        ("two_circles", Web::circles(2)),
        ("three_circles", Web::circles(3)),
        ("theta", theta_web()),
        ("circle_and_double_circle", circle_and_double_circle()),
        ("two_rungs", two_rungs()),
        ("figure", figure_web()),
    ]
}
