//! Curves on a smooth sextic K3 surface S = Q ∩ Z in P⁴.

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Result};
use crate::lattice::{make_k3_rank2, DivisorClass};

/// Sharp genus bound for reduced degree-d curves on S that are not complete intersections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusBound {
    pub d: i64,
    /// Representative of d mod 6 in {−2,…,3}.
    pub r: i64,
    pub value: i64,
}

/// Representative of d mod 6 in {−2,−1,0,1,2,3}.
pub fn residue6(d: i64) -> i64 {
    let r = d.rem_euclid(6);
    if r > 3 {
        r - 6
    } else {
        r
    }
}

pub fn genus_bound_b(d: i64) -> Result<GenusBound> {
    if d < 1 {
        return Err(precondition(format!("B(d) needs d ≥ 1, got {d}")));
    }
    let r = residue6(d);
    let value = if r == 0 {
        d * d / 12 - 1
    } else {
        (d * d - r * r) / 12
    };
    Ok(GenusBound { d, r, value })
}

/// Arithmetic genus of a complete-intersection curve of the given degrees in Pⁿ.
pub fn ci_genus(degrees: &[i64], n: i64) -> Result<i64> {
    if degrees.is_empty() {
        return Err(precondition(
            "complete intersection needs at least one degree",
        ));
    }
    if degrees.len() as i64 != n - 1 {
        return Err(precondition(format!(
            "a curve in P^{n} is cut out by {} hypersurfaces, got {}",
            n - 1,
            degrees.len()
        )));
    }
    if degrees.iter().any(|&x| x < 1) {
        return Err(precondition("hypersurface degrees must be positive"));
    }
    let prod: i64 = degrees.iter().product();
    let sum: i64 = degrees.iter().sum();
    let twice = prod * (sum - n - 1);
    if twice % 2 != 0 {
        return Err(precondition("odd adjunction value"));
    }
    Ok(twice / 2 + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Effectivity {
    EffectiveCurve { degree: i64, genus: i64 },
    Zero,
    Inconclusive,
}

/// Numerical effectivity test for a class D on a K3 lattice.
pub fn effectivity_test(d: &DivisorClass) -> Result<Effectivity> {
    if !d.lattice().k().is_zero() {
        return Err(precondition("effectivity test needs a K3 lattice (K = 0)"));
    }
    let hd = d.degree()?;
    let d2 = d.square()?;
    Ok(if d2 <= -4 || hd < 0 {
        Effectivity::Inconclusive
    } else if hd == 0 {
        Effectivity::Zero
    } else {
        Effectivity::EffectiveCurve {
            degree: hd,
            genus: d2 / 2 + 1,
        }
    })
}

/// Curves of degree 1..3 on S have genus at most this value.
pub fn low_degree_genus_cap(deg: i64) -> Result<i64> {
    if (1..=3).contains(&deg) {
        Ok(0)
    } else {
        Err(precondition(format!(
            "low-degree cap applies to degrees 1..3, got {deg}"
        )))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Existence {
    CompleteIntersection,
    ExistsRank2,
    Impossible,
}

/// Existence of a smooth curve of genus g and degree d on a sextic K3 in a smooth quadric.
pub fn knutsen_smooth_quadric_existence(g: i64, d: i64) -> Existence {
    if g < 0 || d < 1 {
        return Existence::Impossible;
    }
    if 12 * g == d * d + 12 {
        Existence::CompleteIntersection
    } else if 12 * g <= d * d - 1 && (g, d) != (4, 7) {
        Existence::ExistsRank2
    } else {
        Existence::Impossible
    }
}

/// A reduced curve of degree 7 and genus 4 on S must split as a line plus a hyperplane section
/// meeting in one point.
pub fn forces_line_plus_hyperplane_section(g: i64, d: i64) -> bool {
    (g, d) == (4, 7)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LowDegreeKind {
    Line,
    Conic,
    RationalCubic,
    None,
}

#[derive(Debug, Clone)]
pub struct LowDegreeCurveReport {
    pub kind: LowDegreeKind,
    /// Conic and cubic classes are numerical candidates only.
    pub candidate: bool,
    pub classes: Vec<DivisorClass>,
}

/// Finds the (-2)-classes of degree 1, 2 or 3 in Pic(S) = ZH ⊕ ZC.
pub fn detect_low_degree_curves(g: i64, d: i64) -> Result<LowDegreeCurveReport> {
    if knutsen_smooth_quadric_existence(g, d) != Existence::ExistsRank2 {
        return Err(precondition(format!(
            "({g},{d}) has no rank-2 K3 realisation"
        )));
    }
    let r = d.rem_euclid(6);
    let d2 = d * d;
    // (x, b) pairs: x is the degree of aH+bC, a = (x - d·b)/6
    let (kind, wanted): (LowDegreeKind, Vec<(i64, i64)>) = if (r == 1 || r == 5) && 12 * g == d2 - 1
    {
        (LowDegreeKind::Line, vec![(1, if r == 1 { 1 } else { -1 })])
    } else if (r == 2 || r == 4) && 12 * g == d2 - 4 {
        (LowDegreeKind::Conic, vec![(2, if r == 2 { 1 } else { -1 })])
    } else if r == 3 && 12 * g == d2 - 9 {
        (LowDegreeKind::RationalCubic, vec![(3, 1), (3, -1)])
    } else {
        (LowDegreeKind::None, vec![])
    };
    let lattice = make_k3_rank2(g, d);
    let mut classes = Vec::new();
    for (x, b) in wanted {
        let num = x - d * b;
        if num % 6 != 0 {
            return Err(precondition(format!(
                "non-integral coefficient for degree {x}"
            )));
        }
        let class = lattice.class(&[num / 6, b])?;
        if class.degree()? != x || class.square()? != -2 {
            return Err(precondition(format!(
                "class {class} fails the degree/square check"
            )));
        }
        classes.push(class);
    }
    let candidate = matches!(kind, LowDegreeKind::Conic | LowDegreeKind::RationalCubic);
    Ok(LowDegreeCurveReport {
        kind,
        candidate,
        classes,
    })
}

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

/// Lower bound for dim of degree-e hypersurfaces in Pⁿ containing a curve of genus g, degree d.
pub fn linear_system_dim_lower_bound(g: i64, d: i64, e: i64, n: i64) -> Result<i64> {
    if g < 0 || d < 1 || e < 1 || n < 1 {
        return Err(precondition("need g ≥ 0, d ≥ 1, e ≥ 1, n ≥ 1"));
    }
    let base = binomial(n + e, e);
    let ed = e * d;
    Ok(if 2 * g - 2 < ed {
        base + g - ed - 2
    } else {
        base - 2 + (g - ed).min((-ed).div_euclid(2))
    })
}
