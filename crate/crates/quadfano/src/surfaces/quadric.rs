//! Curves on quadric surfaces: the smooth quadric P¹×P¹ and the cone, resolved by F₂.

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Result};
use crate::lattice::{make_f2, make_quadric_smooth, DivisorClass};

/// Curve of bidegree (a,b) on P¹×P¹, class a·f₁ + b·f₂.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SmoothQuadricCurve {
    pub a: i64,
    pub b: i64,
}

impl SmoothQuadricCurve {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if a < 0 || b < 0 || (a, b) == (0, 0) {
            return Err(precondition(format!(
                "bidegree ({a},{b}) is not a curve type"
            )));
        }
        Ok(Self { a, b })
    }

    pub fn degree(&self) -> i64 {
        self.a + self.b
    }

    pub fn genus(&self) -> i64 {
        (self.a - 1) * (self.b - 1)
    }

    pub fn class(&self) -> DivisorClass {
        make_quadric_smooth()
            .class(&[self.a, self.b])
            .expect("rank 2")
    }

    /// |3H − C| = |(3−a)f₁ + (3−b)f₂|.
    pub fn residual(&self) -> Result<DivisorClass> {
        let c = self.class();
        Ok(c.lattice().h().scale(3)?.sub(&c)?)
    }
}

/// Curve on the quadric cone with strict transform a·e + (2a+b)·f on F₂, b ∈ {0,1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConeCurve {
    pub a: i64,
    pub b: i64,
}

impl ConeCurve {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if a < 0 || !(b == 0 || b == 1) || (a, b) == (0, 0) {
            return Err(precondition(format!("({a},{b}) is not a cone curve type")));
        }
        Ok(Self { a, b })
    }

    pub fn through_vertex(&self) -> bool {
        self.b == 1
    }

    /// Multiplicity at the vertex, equal to Ĉ·e.
    pub fn vertex_multiplicity(&self) -> i64 {
        self.b
    }

    pub fn degree(&self) -> i64 {
        2 * self.a + self.b
    }

    pub fn genus(&self) -> i64 {
        (self.a - 1) * (self.a - 1 + self.b)
    }

    pub fn class(&self) -> DivisorClass {
        make_f2()
            .class(&[self.a, 2 * self.a + self.b])
            .expect("rank 2")
    }
}

pub fn enumerate_smooth_quadric_curves(
    max_degree: i64,
) -> Result<Vec<(SmoothQuadricCurve, i64, i64)>> {
    if max_degree < 1 {
        return Err(precondition("max_degree must be at least 1"));
    }
    let mut out = Vec::new();
    for a in 1..=max_degree {
        for b in 0..=a.min(max_degree - a) {
            let c = SmoothQuadricCurve { a, b };
            if c.genus() >= 0 {
                out.push((c, c.genus(), c.degree()));
            }
        }
    }
    Ok(out)
}

pub fn enumerate_cone_curves(max_degree: i64) -> Result<Vec<(ConeCurve, i64, i64)>> {
    if max_degree < 1 {
        return Err(precondition("max_degree must be at least 1"));
    }
    let mut out = Vec::new();
    for deg in 1..=max_degree {
        let (a, b) = (deg / 2, deg % 2);
        let c = ConeCurve { a, b };
        out.push((c, c.genus(), c.degree()));
    }
    Ok(out)
}

/// Number of points in which `other` meets `curve` on the cone, counting the vertex.
pub fn cone_secant_count(curve: &ConeCurve, other: &ConeCurve) -> Result<i64> {
    let pairing = other.class().intersect(&curve.class())?;
    Ok(pairing + curve.vertex_multiplicity() * other.vertex_multiplicity())
}

/// Residual system on F₂: 3e+6f−Ĉ off the vertex, 2e+6f−Ĉ through it.
pub fn residual_system_f2(curve: &ConeCurve) -> Result<DivisorClass> {
    let c = curve.class();
    let base = if curve.through_vertex() {
        [2, 6]
    } else {
        [3, 6]
    };
    Ok(c.lattice().class(&base)?.sub(&c)?)
}
