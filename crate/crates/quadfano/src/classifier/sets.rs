//! The named (g,d) sets and the anticanonical intersection numbers of X = Bl_C Y.

use std::collections::BTreeSet;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

pub type Pair = (i64, i64);

pub const P_NONE: &[Pair] = &[
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (0, 5),
    (1, 4),
    (1, 5),
    (1, 6),
    (2, 5),
    (2, 6),
    (2, 7),
    (3, 7),
    (4, 6),
    (4, 8),
    (5, 8),
    (6, 9),
    (8, 10),
    (9, 11),
    (13, 12),
    (14, 13),
];

pub const P_LINE: &[Pair] = &[
    (0, 6),
    (0, 7),
    (1, 7),
    (2, 8),
    (3, 8),
    (4, 9),
    (5, 9),
    (6, 10),
    (7, 10),
    (8, 11),
    (11, 12),
];

pub const P_CONIC: &[Pair] = &[(0, 8), (1, 8), (2, 9), (3, 9), (5, 10)];

pub const P_PLANE: &[Pair] = &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 4), (2, 5), (4, 6)];

pub const P_QUADRIC: &[Pair] = &[
    (0, 4),
    (0, 5),
    (0, 6),
    (1, 5),
    (1, 6),
    (2, 6),
    (2, 7),
    (3, 7),
    (3, 8),
    (4, 8),
    (5, 8),
    (6, 9),
    (8, 10),
    (13, 12),
];

pub const P_CUBIC: &[Pair] = &[
    (0, 7),
    (0, 8),
    (1, 7),
    (1, 8),
    (2, 8),
    (2, 9),
    (3, 8),
    (3, 9),
    (4, 9),
    (5, 9),
    (5, 10),
    (6, 10),
    (7, 10),
    (8, 11),
    (9, 11),
    (11, 12),
    (14, 13),
];

/// Pairs on a smooth quadric section that need the 4-secant line hypothesis.
pub const QUADRIC_EXCEPTIONS: &[Pair] = &[(0, 6), (3, 8)];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PSets {
    pub none: BTreeSet<Pair>,
    pub line: BTreeSet<Pair>,
    pub conic: BTreeSet<Pair>,
    pub plane: BTreeSet<Pair>,
    pub quadric: BTreeSet<Pair>,
    pub cubic: BTreeSet<Pair>,
    pub all: BTreeSet<Pair>,
}

pub fn p_sets() -> PSets {
    let set = |s: &[Pair]| s.iter().copied().collect::<BTreeSet<_>>();
    let (none, line, conic) = (set(P_NONE), set(P_LINE), set(P_CONIC));
    let all = none.union(&line).chain(conic.iter()).copied().collect();
    PSets {
        none,
        line,
        conic,
        plane: set(P_PLANE),
        quadric: set(P_QUADRIC),
        cubic: set(P_CUBIC),
        all,
    }
}

pub fn in_p(g: i64, d: i64) -> bool {
    P_NONE.contains(&(g, d)) || P_LINE.contains(&(g, d)) || P_CONIC.contains(&(g, d))
}

/// Closed-form description of the union of the three secant buckets.
pub fn p_membership_numeric(g: i64, d: i64) -> bool {
    if (g, d) == (4, 6) || (g, d) == (13, 12) {
        return true;
    }
    d < 18 && 3 * d - 26 < g && 12 * g <= d * d - 1 && (g, d) != (4, 7) && (g, d) != (10, 11)
}

/// (−K_X)³.
pub fn anticanonical_cube(g: i64, d: i64) -> i64 {
    52 - 6 * d + 2 * g
}

/// (−K_X)²·E.
pub fn anticanonical_sq_e(g: i64, d: i64) -> i64 {
    3 * d - 2 * g + 2
}

/// dim |−K_X|.
pub fn anticanonical_dim(g: i64, d: i64) -> Rational64 {
    Rational64::new(anticanonical_cube(g, d), 2) + 3
}

/// −K_X·Γ̃ for the strict transform of a degree-n curve meeting C in eE points.
pub fn secant_pairing(n: i64, e_e: i64) -> i64 {
    3 * n - e_e
}
