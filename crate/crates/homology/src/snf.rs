//! Smith normal form and rational linear algebra on integer matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

fn cols(m: &IntMatrix) -> usize {
    m.first().map_or(0, Vec::len)
}

/// Positive invariant factors d1 | d2 | ... of an integer matrix; their
/// number is its rank.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let mut a = m.clone();
    let (r, c) = (a.len(), cols(&a));
    let mut out = Vec::new();
    let mut t = 0;
    while t < r.min(c) {
        // pivot: smallest nonzero entry of the remaining block
        let Some((pi, pj)) = smallest(&a, t) else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..r {
            if a[i][t].is_zero() {
                continue;
            }
            let q = a[i][t].div_floor(&a[t][t]);
            for j in t..c {
                let v = &a[i][j] - &q * &a[t][j];
                a[i][j] = v;
            }
            clean &= a[i][t].is_zero();
        }
        for j in t + 1..c {
            if a[t][j].is_zero() {
                continue;
            }
            let q = a[t][j].div_floor(&a[t][t]);
            for row in a.iter_mut().skip(t) {
                let v = &row[j] - &q * &row[t];
                row[j] = v;
            }
            clean &= a[t][j].is_zero();
        }
        if !clean {
            continue;
        }
        // the pivot must divide the rest of the block
        let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
        if let Some(i) = bad {
            for j in t..c {
                let v = &a[t][j] + &a[i][j];
                a[t][j] = v;
            }
            continue;
        }
        out.push(a[t][t].abs());
        t += 1;
    }
    out
}

fn smallest(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

pub fn rank(m: &IntMatrix) -> usize {
    rational_rref(m).1.len()
}

/// Reduced row echelon form over Q and the pivot columns.
fn rational_rref(m: &IntMatrix) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut a: Vec<Vec<BigRational>> = m.iter().map(|r| r.iter().map(|v| BigRational::from_integer(v.clone())).collect()).collect();
    let (r, c) = (a.len(), cols(m));
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..c {
        if row == r {
            break;
        }
        let Some(p) = (row..r).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(row, p);
        let inv = a[row][col].recip();
        for v in a[row].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..r {
            if i != row && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in 0..c {
                    let v = &a[i][j] - &f * &a[row][j];
                    a[i][j] = v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

/// A basis of the rational kernel, scaled to primitive integer vectors.
pub fn kernel_basis(m: &IntMatrix, width: usize) -> Vec<Vec<BigInt>> {
    let (a, pivots) = rational_rref(m);
    let free: Vec<usize> = (0..width).filter(|j| !pivots.contains(j)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); width];
            v[f] = BigRational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -a[row][f].clone();
            }
            primitive(&v)
        })
        .collect()
}

fn primitive(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

pub fn mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let inner = b.len();
    let c = cols(b);
    a.iter()
        .map(|row| {
            (0..c)
                .map(|j| (0..inner).filter(|&k| !row[k].is_zero()).map(|k| &row[k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn is_zero(a: &IntMatrix) -> bool {
    a.iter().all(|r| r.iter().all(Zero::is_zero))
}

/// Columns of `a` as rows.
pub fn transpose(a: &IntMatrix, rows: usize) -> IntMatrix {
    (0..cols(a)).map(|j| (0..rows).map(|i| a[i][j].clone()).collect()).collect()
}
