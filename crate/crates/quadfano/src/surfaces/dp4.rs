//! Curves on the quartic del Pezzo surface S = Bl₅P², written kL − Σ mᵢEᵢ.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Result};
use crate::lattice::{make_dp4, DivisorClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DP4Curve {
    pub k: i64,
    /// Multiplicities at p₁..p₅, ascending.
    pub m: [i64; 5],
}

impl DP4Curve {
    /// Validates the normal form: sorted m ≥ 0, k ≥ m₃+m₄+m₅, positive degree, nonnegative genus.
    pub fn new(k: i64, m: [i64; 5]) -> Result<Self> {
        let c = Self { k, m };
        if !c.is_normal_form() {
            return Err(precondition(format!("{c} is not a normalised curve class")));
        }
        Ok(c)
    }

    fn is_normal_form(&self) -> bool {
        self.k >= 1
            && self.m[0] >= 0
            && self.m.windows(2).all(|w| w[0] <= w[1])
            && self.k >= self.m[2] + self.m[3] + self.m[4]
            && self.degree() >= 1
            && self.genus() >= 0
    }

    pub fn degree(&self) -> i64 {
        3 * self.k - self.m.iter().sum::<i64>()
    }

    pub fn genus(&self) -> i64 {
        (self.k - 1) * (self.k - 2) / 2 - self.m.iter().map(|x| x * (x - 1) / 2).sum::<i64>()
    }

    pub fn class(&self) -> DivisorClass {
        lambda(self.k, self.m)
    }

    /// |3H − C| = Λ(9−k; 3−m₁, …, 3−m₅).
    pub fn residual(&self) -> (i64, [i64; 5]) {
        (9 - self.k, self.m.map(|x| 3 - x))
    }
}

impl fmt::Display for DP4Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", lambda_label(self.k, self.m))
    }
}

/// The class aL − Σ bᵢEᵢ.
pub fn lambda(a: i64, b: [i64; 5]) -> DivisorClass {
    let mut coords = vec![a];
    coords.extend(b.iter().map(|x| -x));
    make_dp4().class(&coords).expect("rank 6")
}

pub fn lambda_label(a: i64, b: [i64; 5]) -> String {
    format!("Λ({a};{},{},{},{},{})", b[0], b[1], b[2], b[3], b[4])
}

/// Reads back (a, b₁..b₅) from a class aL − Σ bᵢEᵢ.
pub fn lambda_coords(class: &DivisorClass) -> (i64, [i64; 5]) {
    let c = class.coords();
    (c[0], [-c[1], -c[2], -c[3], -c[4], -c[5]])
}

/// The sixteen lines: E₁..E₅, then L−Eᵢ−Eⱼ for i<j, then 2L−ΣEᵢ.
pub fn dp4_lines() -> Vec<DivisorClass> {
    let mut out = Vec::with_capacity(16);
    for i in 0..5 {
        let mut b = [0; 5];
        b[i] = -1;
        out.push(lambda(0, b));
    }
    for i in 0..5 {
        for j in i + 1..5 {
            let mut b = [0; 5];
            b[i] = 1;
            b[j] = 1;
            out.push(lambda(1, b));
        }
    }
    out.push(lambda(2, [1; 5]));
    out
}

pub fn dp4_secant_line_profile(curve: &DP4Curve) -> Vec<i64> {
    let c = curve.class();
    dp4_lines()
        .iter()
        .map(|l| l.intersect(&c).expect("same lattice"))
        .collect()
}

/// All normal-form classes of the given genus and degree.
pub fn enumerate_dp4_curves(pairs: &[(i64, i64)]) -> Vec<(DP4Curve, i64, i64)> {
    let mut out = Vec::new();
    for &(g, d) in pairs {
        if d < 1 || g < 0 {
            continue;
        }
        // m₁,m₂ ≤ m₃ ≤ k/3 and m₃+m₄+m₅ ≤ k give Σm ≤ 5k/3, hence k ≤ 3d/4
        let kmax = (3 * d + 3) / 4;
        for k in 1..=kmax {
            for_each_sorted_m(k, |m| {
                let c = DP4Curve { k, m };
                if c.is_normal_form() && c.degree() == d && c.genus() == g {
                    out.push((c, g, d));
                }
            });
        }
    }
    out
}

fn for_each_sorted_m(max: i64, mut f: impl FnMut([i64; 5])) {
    for m1 in 0..=max {
        for m2 in m1..=max {
            for m3 in m2..=max {
                for m4 in m3..=max {
                    for m5 in m4..=max {
                        f([m1, m2, m3, m4, m5]);
                    }
                }
            }
        }
    }
}

/// Every (g,d) realised by a curve on S with no line meeting it more than three times.
pub fn dp4_enumerate_weak_fano_pairs() -> BTreeSet<(i64, i64)> {
    let mut out = BTreeSet::new();
    // Eᵢ·C = mᵢ ≤ 3, and (2L−ΣE)·C = 2k − Σm ≤ 3 forces k ≤ 9
    for k in 1..=9 {
        for_each_sorted_m(3, |m| {
            let c = DP4Curve { k, m };
            if c.is_normal_form() && dp4_secant_line_profile(&c).iter().all(|&x| x <= 3) {
                out.insert((c.genus(), c.degree()));
            }
        });
    }
    for line in dp4_lines() {
        let (g, d) = (line.genus().expect("even"), line.degree().expect("ok"));
        out.insert((g, d));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sixteen_lines() {
        let lines = dp4_lines();
        assert_eq!(lines.len(), 16);
        for l in &lines {
            assert_eq!(l.degree().unwrap(), 1);
            assert_eq!(l.square().unwrap(), -1);
            assert_eq!(l.genus().unwrap(), 0);
        }
    }

    #[test]
    fn table_rows() {
        let rows = enumerate_dp4_curves(&[(13, 12)]);
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].0, DP4Curve { k: 9, m: [3; 5] });
        let rows = enumerate_dp4_curves(&[(0, 6)]);
        let got: Vec<_> = rows.iter().map(|r| (r.0.k, r.0.m)).collect();
        assert_eq!(got, vec![(2, [0; 5]), (3, [0, 0, 0, 1, 2])]);
        let rows = enumerate_dp4_curves(&[(4, 8)]);
        assert_eq!(
            rows[0].0,
            DP4Curve {
                k: 5,
                m: [1, 1, 1, 2, 2]
            }
        );
    }

    #[test]
    fn secant_witnesses() {
        let two_l = DP4Curve::new(2, [0; 5]).unwrap();
        assert_eq!(*dp4_secant_line_profile(&two_l).last().unwrap(), 4);
        let c = DP4Curve::new(4, [0, 1, 1, 1, 1]).unwrap();
        assert_eq!(*dp4_secant_line_profile(&c).last().unwrap(), 4);
        let conic = lambda(2, [1, 1, 1, 1, 0]);
        let c = lambda(5, [1, 1, 1, 1, 3]);
        assert_eq!(conic.intersect(&c).unwrap(), 6);
    }

    #[test]
    fn weak_fano_pairs_exclude_three_six() {
        let pairs = dp4_enumerate_weak_fano_pairs();
        assert!(pairs.contains(&(13, 12)));
        assert!(pairs.contains(&(0, 6)));
        assert!(!pairs.contains(&(3, 6)));
    }

    #[test]
    fn residual_and_labels() {
        let c = DP4Curve::new(3, [0, 0, 0, 1, 2]).unwrap();
        assert_eq!(c.residual(), (6, [3, 3, 3, 2, 1]));
        assert_eq!(c.to_string(), "Λ(3;0,0,0,1,2)");
        assert_eq!(
            lambda_coords(&lambda(7, [3, 3, 3, 2, 2])),
            (7, [3, 3, 3, 2, 2])
        );
        assert!(DP4Curve::new(2, [0, 0, 1, 1, 1]).is_err());
    }
}
