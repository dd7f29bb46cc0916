//! Small diagrams and Reidemeister pairs.

use crate::pd::PdLink;

fn pd(s: &str) -> PdLink {
    PdLink::parse(s).expect("corpus PD code")
}

fn braid(strands: usize, word: &[i32]) -> PdLink {
    PdLink::braid_closure(strands, word).expect("corpus braid")
}

/// Named diagrams of at most five crossings.
pub fn diagrams() -> Vec<(&'static str, PdLink)> {
    vec![
        ("unknot", pd("O")),
        ("unlink2", pd("O,O")),
        ("kink_pos", pd("X[1,1,2,2]")),
        ("kink_pos_other", pd("X[2,2,1,1]")),
        ("kink_neg", pd("X[2,1,1,2]")),
        ("kink_neg_other", pd("X[1,2,2,1]")),
        ("hopf", pd("X[4,1,3,2],X[2,3,1,4]")),
        ("hopf_braid", braid(2, &[1, 1])),
        ("trefoil", braid(2, &[1, 1, 1])),
        ("trefoil_left", pd("X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]")),
        ("figure_eight", pd("X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]")),
        ("unlink2_r2_opposite", pd("X[4,2,3,1],X[3,2,4,1]")),
        ("unlink2_r2_same", pd("X[3,1,4,2],X[4,1,3,2]")),
        ("unknot_braid3", braid(3, &[1, -2])),
    ]
}

pub fn diagram(name: &str) -> Option<PdLink> {
    diagrams().into_iter().find(|(n, _)| *n == name).map(|(_, d)| d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    R1Positive,
    R1Negative,
    R2Same,
    R2Opposite,
    R3,
}

impl Move {
    pub fn name(&self) -> &'static str {
        match self {
            Move::R1Positive => "R1+",
            Move::R1Negative => "R1-",
            Move::R2Same => "R2 same orientation",
            Move::R2Opposite => "R2 opposite orientation",
            Move::R3 => "R3",
        }
    }
}

pub struct ReidemeisterPair {
    pub name: &'static str,
    pub mv: Move,
    pub before: PdLink,
    pub after: PdLink,
}

pub fn reidemeister_pairs() -> Vec<ReidemeisterPair> {
    let p = |name, mv, before, after| ReidemeisterPair { name, mv, before, after };
    vec![
        p("unknot/kink_pos", Move::R1Positive, pd("O"), pd("X[1,1,2,2]")),
        p("unknot/kink_pos_other", Move::R1Positive, pd("O"), pd("X[2,2,1,1]")),
        p("unknot/kink_neg", Move::R1Negative, pd("O"), pd("X[2,1,1,2]")),
        p("unknot/kink_neg_other", Move::R1Negative, pd("O"), pd("X[1,2,2,1]")),
        p("hopf/stabilized_pos", Move::R1Positive, braid(2, &[1, 1]), braid(3, &[1, 1, 2])),
        p("hopf/stabilized_neg", Move::R1Negative, braid(2, &[1, 1]), braid(3, &[1, 1, -2])),
        p("unlink2/r2_same", Move::R2Same, pd("O,O"), pd("X[3,1,4,2],X[4,1,3,2]")),
        p("unlink2/r2_opposite", Move::R2Opposite, pd("O,O"), pd("X[4,2,3,1],X[3,2,4,1]")),
        p("trefoil/r2_inserted", Move::R2Same, braid(2, &[1, 1, 1]), braid(2, &[1, 1, -1, 1, 1])),
        p("braid3/r3_positive", Move::R3, braid(3, &[1, 2, 1]), braid(3, &[2, 1, 2])),
        p("braid3/r3_mixed", Move::R3, braid(3, &[1, 2, -1]), braid(3, &[-2, 1, 2])),
    ]
}
