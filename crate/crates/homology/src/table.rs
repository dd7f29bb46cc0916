//! Bigraded homology tables.
//!
//! For a quantum-degree preserving complex each (h, q) block is treated
//! separately: free rank from ranks over Q, torsion from the invariant
//! factors of the incoming differential. A complex whose differential only
//! moves the quantum degree one way is filtered instead; its table lists
//! the ranks of the associated graded of rational homology, and torsion of
//! integral homology under q = `*`.

use crate::complex::{ChainComplex, Grading};
use crate::error::{HomologyError, Result};
use crate::snf::{self, IntMatrix};
use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;
use webs::Laurent;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Entry {
    pub rank: usize,
    /// Invariant factors greater than 1.
    pub torsion: Vec<BigInt>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomologyTable {
    /// (homological degree, quantum degree); None collects torsion of a
    /// filtered complex.
    pub entries: BTreeMap<(i64, Option<i64>), Entry>,
    pub filtered: bool,
}

impl HomologyTable {
    pub fn total_rank(&self) -> usize {
        self.entries.values().map(|e| e.rank).sum()
    }

    pub fn rank(&self, h: i64, q: i64) -> usize {
        self.entries.get(&(h, Some(q))).map_or(0, |e| e.rank)
    }

    pub fn torsion(&self, h: i64, q: Option<i64>) -> &[BigInt] {
        self.entries.get(&(h, q)).map_or(&[], |e| &e.torsion)
    }

    /// Sum of (-1)^h rank q^q over the free part.
    pub fn euler(&self) -> Laurent {
        let mut l = Laurent::zero();
        for (&(h, q), e) in &self.entries {
            if let Some(q) = q {
                l.add_term(q, if h % 2 == 0 { e.rank as i64 } else { -(e.rank as i64) });
            }
        }
        l
    }

    /// First bidegree where the tables differ, described.
    pub fn first_difference(&self, other: &HomologyTable) -> Option<String> {
        let keys: BTreeSet<_> = self.entries.keys().chain(other.entries.keys()).collect();
        for k in keys {
            let (a, b) = (self.entries.get(k), other.entries.get(k));
            if a != b {
                let show = |e: Option<&Entry>| e.map_or("0".to_string(), entry_text);
                let q = k.1.map_or("*".to_string(), |q| q.to_string());
                return Some(format!("(h, q) = ({}, {q}): {} vs {}", k.0, show(a), show(b)));
            }
        }
        None
    }

    pub fn to_tsv(&self) -> String {
        let mut s = String::from("h\tq\trank\ttorsion\n");
        for (&(h, q), e) in &self.entries {
            let q = q.map_or("*".to_string(), |q| q.to_string());
            let t = if e.torsion.is_empty() { "-".to_string() } else { e.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(",") };
            writeln!(s, "{h}\t{q}\t{}\t{t}", e.rank).expect("write to string");
        }
        s
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .entries
            .iter()
            .map(|(&(h, q), e)| json!({"h": h, "q": q, "rank": e.rank, "torsion": e.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>()}))
            .collect();
        json!({"filtered": self.filtered, "entries": rows})
    }
}

fn entry_text(e: &Entry) -> String {
    if e.torsion.is_empty() {
        format!("rank {}", e.rank)
    } else {
        format!("rank {} torsion {:?}", e.rank, e.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>())
    }
}

fn block(m: &IntMatrix, rows: &[usize], cols: &[usize]) -> IntMatrix {
    rows.iter().map(|&i| cols.iter().map(|&j| m[i][j].clone()).collect()).collect()
}

fn torsion_of(m: &IntMatrix) -> Vec<BigInt> {
    snf::invariant_factors(m).into_iter().filter(|d| !d.is_one()).collect()
}

pub fn homology(c: &ChainComplex) -> Result<HomologyTable> {
    match c.grading {
        Grading::Homogeneous => Ok(graded(c)),
        Grading::Decreasing | Grading::Increasing => Ok(filtered(c)),
        Grading::Mixed => Err(HomologyError::Cube("differential neither preserves nor filters the quantum degree".into())),
    }
}

fn graded(c: &ChainComplex) -> HomologyTable {
    let mut entries = BTreeMap::new();
    for (t, g) in c.gens.iter().enumerate() {
        let h = c.h_min + t as i64;
        let qs: BTreeSet<i64> = g.iter().copied().collect();
        for q in qs {
            let here: Vec<usize> = (0..g.len()).filter(|&i| g[i] == q).collect();
            let out_rank = match c.diffs.get(t) {
                Some(d) => {
                    let rows: Vec<usize> = (0..c.gens[t + 1].len()).filter(|&i| c.gens[t + 1][i] == q).collect();
                    snf::rank(&block(d, &rows, &here))
                }
                None => 0,
            };
            let (in_rank, torsion) = match t.checked_sub(1).map(|s| (s, &c.diffs[s])) {
                Some((s, d)) => {
                    let cols: Vec<usize> = (0..c.gens[s].len()).filter(|&j| c.gens[s][j] == q).collect();
                    let b = block(d, &here, &cols);
                    (snf::rank(&b), torsion_of(&b))
                }
                None => (0, Vec::new()),
            };
            let rank = here.len() - out_rank - in_rank;
            if rank > 0 || !torsion.is_empty() {
                entries.insert((h, Some(q)), Entry { rank, torsion });
            }
        }
    }
    HomologyTable { entries, filtered: false }
}

fn filtered(c: &ChainComplex) -> HomologyTable {
    let mut entries = BTreeMap::new();
    for (t, g) in c.gens.iter().enumerate() {
        let h = c.h_min + t as i64;
        let n = g.len();
        let all: Vec<usize> = (0..n).collect();
        let incoming: Option<IntMatrix> = t.checked_sub(1).map(|s| c.diffs[s].clone());
        if let Some(d) = &incoming {
            let torsion = torsion_of(d);
            if !torsion.is_empty() {
                entries.insert((h, None), Entry { rank: 0, torsion });
            }
        }
        // boundaries as row vectors
        let boundaries: IntMatrix = incoming.as_ref().map_or(Vec::new(), |d| snf::transpose(d, n));
        let b_rank = snf::rank(&boundaries);
        // F_p is spanned by generators on the subcomplex side of p
        let mut qs: Vec<i64> = g.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        if c.grading == Grading::Increasing {
            qs.reverse();
        }
        let mut prev = 0usize;
        let mut members: Vec<usize> = Vec::new();
        for &q in &qs {
            members.extend(all.iter().copied().filter(|&i| g[i] == q));
            members.sort_unstable();
            let cycles: IntMatrix = match c.diffs.get(t) {
                Some(d) => {
                    let rows: Vec<usize> = (0..c.gens[t + 1].len()).collect();
                    let sub = block(d, &rows, &members);
                    snf::kernel_basis(&sub, members.len())
                        .into_iter()
                        .map(|v| {
                            let mut full = vec![BigInt::from(0); n];
                            for (k, &i) in members.iter().enumerate() {
                                full[i] = v[k].clone();
                            }
                            full
                        })
                        .collect()
                }
                None => members.iter().map(|&i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect()).collect(),
            };
            let mut span = cycles;
            span.extend(boundaries.iter().cloned());
            let dim = snf::rank(&span) - b_rank;
            if dim > prev {
                entries.insert((h, Some(q)), Entry { rank: dim - prev, torsion: Vec::new() });
            }
            prev = dim;
        }
    }
    HomologyTable { entries, filtered: true }
}
