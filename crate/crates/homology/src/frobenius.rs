//! Khovanov's complex built directly from circles and the algebra
//! Z[x]/(x^2), with no webs or foams involved. Used as an oracle for the
//! foam complex under the khovanov specialization.

use crate::complex::ChainComplex;
use crate::euler::smoothing_circles;
use crate::pd::PdLink;
use crate::snf::IntMatrix;
use num_bigint::BigInt;
use std::collections::BTreeMap;

/// Circles of a smoothing as their label sets' minimum, per label.
fn circle_of(pd: &PdLink, mask: usize) -> BTreeMap<usize, usize> {
    let labels: Vec<usize> = pd.labels().into_iter().collect();
    let mut rep: BTreeMap<usize, usize> = labels.iter().map(|&l| (l, l)).collect();
    fn find(rep: &mut BTreeMap<usize, usize>, x: usize) -> usize {
        let mut r = x;
        while rep[&r] != r {
            r = rep[&r];
        }
        r
    }
    for (c, x) in pd.crossings.iter().enumerate() {
        let pairs = if mask >> c & 1 == 0 { [(0, 1), (2, 3)] } else { [(0, 3), (1, 2)] };
        for (a, b) in pairs {
            let (ra, rb) = (find(&mut rep, x.x[a]), find(&mut rep, x.x[b]));
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            rep.insert(hi, lo);
        }
    }
    labels.iter().map(|&l| (l, find(&mut rep, l))).collect()
}

/// A generator: for each circle (by representative, crossingless circles
/// last) whether it carries x.
type State = BTreeMap<usize, bool>;

fn states(pd: &PdLink, mask: usize) -> Vec<State> {
    let reps: Vec<usize> = {
        let mut r: Vec<usize> = circle_of(pd, mask).into_values().collect();
        r.sort_unstable();
        r.dedup();
        let base = pd.max_label() + 1;
        r.extend((0..pd.loops).map(|k| base + k));
        r
    };
    let k = reps.len();
    (0..1usize << k).map(|bits| reps.iter().enumerate().map(|(i, &r)| (r, bits >> i & 1 == 1)).collect()).collect()
}

fn q_of(s: &State) -> i64 {
    s.values().map(|&x| if x { -1 } else { 1 }).sum()
}

/// Image of one generator under the saddle flipping crossing c.
fn saddle_image(pd: &PdLink, from: usize, to: usize, c: usize, s: &State) -> Vec<(State, i64)> {
    let (ca, cb) = (circle_of(pd, from), circle_of(pd, to));
    let x = &pd.crossings[c];
    // carry the untouched circles over by a shared label
    let touched_a: Vec<usize> = vec![ca[&x.x[0]], ca[&x.x[2]]];
    let touched_b: Vec<usize> = vec![cb[&x.x[0]], cb[&x.x[1]]];
    let mut rest = State::new();
    for (&r, &v) in s {
        if touched_a.contains(&r) {
            continue;
        }
        let r2 = if r > pd.max_label() { r } else { cb[&r] };
        rest.insert(r2, v);
    }
    let with = |pairs: &[(usize, bool)]| {
        let mut t = rest.clone();
        for &(r, v) in pairs {
            t.insert(r, v);
        }
        t
    };
    if touched_a[0] != touched_a[1] {
        // merge: 1.1 = 1, 1.x = x.1 = x, x.x = 0
        let (u, v) = (s[&touched_a[0]], s[&touched_a[1]]);
        let r = touched_b[0];
        match (u, v) {
            (false, false) => vec![(with(&[(r, false)]), 1)],
            (true, true) => vec![],
            _ => vec![(with(&[(r, true)]), 1)],
        }
    } else {
        // split: 1 -> 1 x + x 1, x -> x x
        let (r1, r2) = (touched_b[0], touched_b[1]);
        if s[&touched_a[0]] {
            vec![(with(&[(r1, true), (r2, true)]), 1)]
        } else {
            vec![(with(&[(r1, false), (r2, true)]), 1), (with(&[(r1, true), (r2, false)]), 1)]
        }
    }
}

pub fn khovanov_complex(pd: &PdLink) -> ChainComplex {
    let n = pd.len();
    let (np, nm) = (pd.n_plus() as i64, pd.n_minus() as i64);
    let h_min = -nm;
    let mut gens: Vec<Vec<i64>> = vec![Vec::new(); n + 1];
    let mut index: BTreeMap<(usize, State), usize> = BTreeMap::new();
    let all: Vec<Vec<State>> = (0..1usize << n).map(|m| states(pd, m)).collect();
    for (m, ss) in all.iter().enumerate() {
        let r = m.count_ones() as usize;
        for s in ss {
            index.insert((m, s.clone()), gens[r].len());
            gens[r].push(q_of(s) + r as i64 + np - 2 * nm);
        }
    }
    let mut diffs: Vec<IntMatrix> = (0..n).map(|t| vec![vec![BigInt::from(0); gens[t].len()]; gens[t + 1].len()]).collect();
    for (m, ss) in all.iter().enumerate() {
        let r = m.count_ones() as usize;
        for c in (0..n).filter(|&c| m >> c & 1 == 0) {
            let to = m | 1 << c;
            let sign = if (m & ((1 << c) - 1)).count_ones() % 2 == 0 { 1 } else { -1 };
            for s in ss {
                let j = index[&(m, s.clone())];
                for (t, v) in saddle_image(pd, m, to, c, s) {
                    let i = index[&(to, t)];
                    diffs[r][i][j] += v * sign;
                }
            }
        }
    }
    debug_assert_eq!(gens.iter().map(Vec::len).sum::<usize>(), (0..1usize << n).map(|m| 1usize << smoothing_circles(pd, m)).sum::<usize>());
    ChainComplex::new(h_min, gens, diffs)
}
