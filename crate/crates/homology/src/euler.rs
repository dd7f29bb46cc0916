//! The bracket side of the graded Euler characteristic.

use crate::pd::PdLink;
use std::collections::BTreeMap;
use webs::Laurent;

/// Number of circles when crossing c is smoothed by joining slots
/// (0,1),(2,3) for bit 0 and (0,3),(1,2) for bit 1, plus the crossingless
/// circles.
pub fn smoothing_circles(pd: &PdLink, mask: usize) -> usize {
    let labels: Vec<usize> = pd.labels().into_iter().collect();
    let idx: BTreeMap<usize, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let mut parent: Vec<usize> = (0..labels.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for (c, x) in pd.crossings.iter().enumerate() {
        let pairs = if mask >> c & 1 == 0 { [(0, 1), (2, 3)] } else { [(0, 3), (1, 2)] };
        for (a, b) in pairs {
            let (ra, rb) = (find(&mut parent, idx[&x.x[a]]), find(&mut parent, idx[&x.x[b]]));
            parent[ra] = rb;
        }
    }
    (0..labels.len()).filter(|&i| find(&mut parent, i) == i).count() + pd.loops
}

/// (-1)^{n-} q^{n+ - 2n-} times the sum over smoothings of
/// (-q)^{#1s} (q + 1/q)^{#circles}.
pub fn bracket(pd: &PdLink) -> Laurent {
    let n = pd.len();
    let mut sum = Laurent::zero();
    for mask in 0..1usize << n {
        let r = mask.count_ones() as i64;
        let term = Laurent::quantum_two().pow(smoothing_circles(pd, mask) as u32).shift(r);
        sum = if r % 2 == 0 { sum.add(&term) } else { sum.sub(&term) };
    }
    let (np, nm) = (pd.n_plus() as i64, pd.n_minus() as i64);
    let out = sum.shift(np - 2 * nm);
    if nm % 2 == 0 {
        out
    } else {
        out.neg()
    }
}
