//! Dense matrices over the ground ring R.

use crate::error::{Result, WebError};
use coeff_ring::GroundRingElem;
use serde_json::Value;

pub type Matrix = Vec<Vec<GroundRingElem>>;

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![GroundRingElem::zero(); cols]; rows]
}

pub fn identity(n: usize) -> Matrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = GroundRingElem::one();
    }
    m
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = GroundRingElem::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            acc = acc.add(&row[k].mul(&b[k][j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn kronecker(a: &Matrix, b: &Matrix) -> Matrix {
    let (ra, ca) = (a.len(), a.first().map_or(0, Vec::len));
    let (rb, cb) = (b.len(), b.first().map_or(0, Vec::len));
    let mut out = zeros(ra * rb, ca * cb);
    for i in 0..ra {
        for j in 0..ca {
            for k in 0..rb {
                for l in 0..cb {
                    out[i * rb + k][j * cb + l] = a[i][j].mul(&b[k][l]);
                }
            }
        }
    }
    out
}

pub fn scale(a: &Matrix, c: &GroundRingElem) -> Matrix {
    a.iter().map(|row| row.iter().map(|x| x.mul(c)).collect()).collect()
}

pub fn is_symmetric(a: &Matrix) -> bool {
    (0..a.len()).all(|i| (0..i).all(|j| a[i][j] == a[j][i]))
}

fn div(a: &GroundRingElem, b: &GroundRingElem) -> Result<GroundRingElem> {
    a.div_exact(b).ok_or_else(|| WebError::InexactDivision(format!("({a}) / ({b})")))
}

/// Fraction-free Gauss-Jordan elimination of [a | b]. Returns the
/// determinant of `a` and det(a) * a^{-1} b.
fn bareiss_jordan(a: &Matrix, b: &Matrix) -> Result<(GroundRingElem, Matrix)> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut t: Matrix = a.iter().zip(b).map(|(r, s)| r.iter().chain(s).cloned().collect()).collect();
    let mut prev = GroundRingElem::one();
    let mut sign = 1;
    for k in 0..n {
        // prefer unit pivots; they keep entries small
        let pivot = (k..n)
            .find(|&r| t[r][k].as_unit().is_some())
            .or_else(|| (k..n).find(|&r| !t[r][k].is_zero()));
        let Some(p) = pivot else {
            return Ok((GroundRingElem::zero(), zeros(n, m)));
        };
        if p != k {
            t.swap(p, k);
            sign = -sign;
        }
        let piv = t[k][k].clone();
        for i in 0..n {
            if i == k {
                continue;
            }
            let f = t[i][k].clone();
            for j in 0..n + m {
                if j == k {
                    continue;
                }
                let v = piv.mul(&t[i][j]).sub(&f.mul(&t[k][j]));
                t[i][j] = div(&v, &prev)?;
            }
            t[i][k] = GroundRingElem::zero();
        }
        prev = piv;
    }
    let det = if sign < 0 { prev.neg() } else { prev.clone() };
    // rows now read [prev * I | prev * a^{-1} b]
    let x: Matrix = t.into_iter().map(|row| row[n..].to_vec()).collect();
    let x = if sign < 0 { x.iter().map(|r| r.iter().map(|v| v.neg()).collect()).collect() } else { x };
    Ok((det, x))
}

pub fn det(a: &Matrix) -> Result<GroundRingElem> {
    if a.is_empty() {
        return Ok(GroundRingElem::one());
    }
    Ok(bareiss_jordan(a, &zeros(a.len(), 0))?.0)
}

/// Solve a x = b exactly over R.
pub fn solve(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.is_empty() {
        return Ok(b.clone());
    }
    let (d, x) = bareiss_jordan(a, b)?;
    if d.is_zero() {
        return Err(WebError::NonInvertibleGram("0".into()));
    }
    if let Some(inv) = d.unit_inverse() {
        return Ok(x.iter().map(|r| r.iter().map(|v| v.mul(&inv)).collect()).collect());
    }
    x.iter().map(|r| r.iter().map(|v| v.div_exact(&d).ok_or(WebError::NoSolution)).collect()).collect()
}

pub fn inverse(a: &Matrix) -> Result<Matrix> {
    solve(a, &identity(a.len()))
}

pub fn to_json(a: &Matrix) -> Value {
    Value::Array(a.iter().map(|r| Value::Array(r.iter().map(|v| Value::String(v.to_string())).collect())).collect())
}

pub fn render(a: &Matrix) -> String {
    a.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("\t")).collect::<Vec<_>>().join("\n")
}
