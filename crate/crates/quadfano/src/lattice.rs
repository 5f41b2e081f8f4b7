//! Integer Picard lattices with a polarization and a canonical class.

use std::fmt;
use std::sync::Arc;

use crate::error::LatticeError;

pub type Result<T> = std::result::Result<T, LatticeError>;

/// A free abelian group of finite rank with a symmetric integer intersection form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionLattice {
    name: String,
    gram: Vec<Vec<i64>>,
    labels: Vec<String>,
    h: Vec<i64>,
    k: Vec<i64>,
}

/// A divisor class, stored as coordinates in the basis of its lattice.
#[derive(Debug, Clone)]
pub struct DivisorClass {
    coords: Vec<i64>,
    lattice: Arc<IntersectionLattice>,
}

impl IntersectionLattice {
    /// Builds a lattice, validating shape, symmetry and positivity of the polarization.
    pub fn new(
        name: &str,
        gram: Vec<Vec<i64>>,
        labels: Vec<&str>,
        h: Vec<i64>,
        k: Vec<i64>,
    ) -> Result<Arc<Self>> {
        let rank = gram.len();
        if rank == 0 {
            return Err(LatticeError::Malformed("rank must be positive".into()));
        }
        if gram.iter().any(|row| row.len() != rank) {
            return Err(LatticeError::Malformed("gram matrix is not square".into()));
        }
        for i in 0..rank {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(LatticeError::Malformed(format!(
                        "gram matrix not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        if labels.len() != rank || h.len() != rank || k.len() != rank {
            return Err(LatticeError::Malformed(
                "labels, H and K must have length equal to the rank".into(),
            ));
        }
        let lattice = IntersectionLattice {
            name: name.to_string(),
            gram,
            labels: labels.into_iter().map(String::from).collect(),
            h,
            k,
        };
        let h2 = lattice.form(&lattice.h, &lattice.h)?;
        if h2 <= 0 {
            return Err(LatticeError::Malformed(format!(
                "polarization must have positive square, got {h2}"
            )));
        }
        Ok(Arc::new(lattice))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Evaluates v^T G w with overflow checks.
    fn form(&self, v: &[i64], w: &[i64]) -> Result<i64> {
        let mut acc: i64 = 0;
        for (i, row) in self.gram.iter().enumerate() {
            if v[i] == 0 {
                continue;
            }
            let mut inner: i64 = 0;
            for (j, g) in row.iter().enumerate() {
                inner = g
                    .checked_mul(w[j])
                    .and_then(|t| inner.checked_add(t))
                    .ok_or(LatticeError::Overflow)?;
            }
            acc = v[i]
                .checked_mul(inner)
                .and_then(|t| acc.checked_add(t))
                .ok_or(LatticeError::Overflow)?;
        }
        Ok(acc)
    }

    /// The polarization class H.
    pub fn h(self: &Arc<Self>) -> DivisorClass {
        DivisorClass {
            coords: self.h.clone(),
            lattice: Arc::clone(self),
        }
    }

    /// The canonical class K.
    pub fn k(self: &Arc<Self>) -> DivisorClass {
        DivisorClass {
            coords: self.k.clone(),
            lattice: Arc::clone(self),
        }
    }

    pub fn zero(self: &Arc<Self>) -> DivisorClass {
        DivisorClass {
            coords: vec![0; self.rank()],
            lattice: Arc::clone(self),
        }
    }

    /// The i-th basis vector.
    pub fn basis(self: &Arc<Self>, i: usize) -> DivisorClass {
        let mut coords = vec![0; self.rank()];
        coords[i] = 1;
        DivisorClass {
            coords,
            lattice: Arc::clone(self),
        }
    }

    pub fn class(self: &Arc<Self>, coords: &[i64]) -> Result<DivisorClass> {
        if coords.len() != self.rank() {
            return Err(LatticeError::RankMismatch {
                expected: self.rank(),
                got: coords.len(),
            });
        }
        Ok(DivisorClass {
            coords: coords.to_vec(),
            lattice: Arc::clone(self),
        })
    }
}

impl DivisorClass {
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn lattice(&self) -> &Arc<IntersectionLattice> {
        &self.lattice
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    fn check_same(&self, other: &DivisorClass) -> Result<()> {
        if Arc::ptr_eq(&self.lattice, &other.lattice) || self.lattice == other.lattice {
            Ok(())
        } else {
            Err(LatticeError::LatticeMismatch {
                left: self.lattice.name.clone(),
                right: other.lattice.name.clone(),
            })
        }
    }

    pub fn intersect(&self, other: &DivisorClass) -> Result<i64> {
        self.check_same(other)?;
        self.lattice.form(&self.coords, &other.coords)
    }

    pub fn square(&self) -> Result<i64> {
        self.lattice.form(&self.coords, &self.coords)
    }

    /// H·D.
    pub fn degree(&self) -> Result<i64> {
        self.lattice.form(&self.lattice.h, &self.coords)
    }

    /// Arithmetic genus ½·D·(D+K)+1; odd D·(D+K) is reported as a malformed lattice.
    pub fn genus(&self) -> Result<i64> {
        let dk = self.add(&self.lattice.k())?;
        let twice = self.intersect(&dk)?;
        if twice % 2 != 0 {
            return Err(LatticeError::Parity { value: twice });
        }
        Ok(twice / 2 + 1)
    }

    /// Arithmetic genus of D + D2 computed from the pieces.
    pub fn union_genus(&self, other: &DivisorClass) -> Result<i64> {
        let dd = self.intersect(other)?;
        let sum = self
            .genus()?
            .checked_add(other.genus()?)
            .and_then(|s| s.checked_add(dd))
            .ok_or(LatticeError::Overflow)?;
        Ok(sum - 1)
    }

    fn zip_with(
        &self,
        other: &DivisorClass,
        f: fn(i64, i64) -> Option<i64>,
    ) -> Result<DivisorClass> {
        self.check_same(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| f(a, b).ok_or(LatticeError::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(DivisorClass {
            coords,
            lattice: Arc::clone(&self.lattice),
        })
    }

    pub fn add(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.zip_with(other, i64::checked_add)
    }

    pub fn sub(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.zip_with(other, i64::checked_sub)
    }

    pub fn scale(&self, factor: i64) -> Result<DivisorClass> {
        let coords = self
            .coords
            .iter()
            .map(|&a| a.checked_mul(factor).ok_or(LatticeError::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(DivisorClass {
            coords,
            lattice: Arc::clone(&self.lattice),
        })
    }

    /// Integer linear combination of classes from one lattice.
    pub fn combination(terms: &[(i64, &DivisorClass)]) -> Result<DivisorClass> {
        let (_, first) = terms
            .first()
            .ok_or_else(|| LatticeError::Malformed("empty linear combination".into()))?;
        let mut acc = first.lattice.zero();
        for (c, d) in terms {
            acc = acc.add(&d.scale(*c)?)?;
        }
        Ok(acc)
    }
}

impl PartialEq for DivisorClass {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
            && (Arc::ptr_eq(&self.lattice, &other.lattice) || self.lattice == other.lattice)
    }
}

impl Eq for DivisorClass {}

impl fmt::Display for DivisorClass {
    /// Renders the class as a signed combination of basis labels, e.g. `2H-C-Γ`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (c, label) in self.coords.iter().zip(&self.lattice.labels) {
            if *c == 0 {
                continue;
            }
            let sign = if *c < 0 {
                "-"
            } else if out.is_empty() {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            if mag == 1 {
                out.push_str(&format!("{sign}{label}"));
            } else {
                out.push_str(&format!("{sign}{mag}{label}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// Sextic K3 surface with Pic = ZH.
pub fn make_k3_rank1() -> Arc<IntersectionLattice> {
    IntersectionLattice::new("k3_rank1", vec![vec![6]], vec!["H"], vec![1], vec![0])
        .expect("static lattice")
}

/// Sextic K3 surface with Pic = ZH ⊕ ZC, C of degree d and genus g.
pub fn make_k3_rank2(g: i64, d: i64) -> Arc<IntersectionLattice> {
    IntersectionLattice::new(
        &format!("k3_rank2({g},{d})"),
        vec![vec![6, d], vec![d, 2 * g - 2]],
        vec!["H", "C"],
        vec![1, 0],
        vec![0, 0],
    )
    .expect("K3 rank-2 lattice with H²=6")
}

/// Rank-2 K3 lattice extended by a smooth rational curve Γ of degree n with C·Γ = cg.
pub fn make_k3_rank3(g: i64, d: i64, n: i64, cg: i64) -> Arc<IntersectionLattice> {
    IntersectionLattice::new(
        &format!("k3_rank3({g},{d},{n},{cg})"),
        vec![vec![6, d, n], vec![d, 2 * g - 2, cg], vec![n, cg, -2]],
        vec!["H", "C", "Γ"],
        vec![1, 0, 0],
        vec![0, 0, 0],
    )
    .expect("K3 rank-3 lattice with H²=6")
}

/// P¹×P¹ with rulings f₁, f₂.
pub fn make_quadric_smooth() -> Arc<IntersectionLattice> {
    IntersectionLattice::new(
        "p1xp1",
        vec![vec![0, 1], vec![1, 0]],
        vec!["f1", "f2"],
        vec![1, 1],
        vec![-2, -2],
    )
    .expect("static lattice")
}

/// Hirzebruch surface F₂ with negative section e and fiber f.
pub fn make_f2() -> Arc<IntersectionLattice> {
    IntersectionLattice::new(
        "f2",
        vec![vec![-2, 1], vec![1, 0]],
        vec!["e", "f"],
        vec![1, 2],
        vec![-2, -4],
    )
    .expect("static lattice")
}

/// Blowup of P² in five points, basis L, E₁..E₅.
pub fn make_dp4() -> Arc<IntersectionLattice> {
    let mut gram = vec![vec![0; 6]; 6];
    gram[0][0] = 1;
    for (i, row) in gram.iter_mut().enumerate().skip(1) {
        row[i] = -1;
    }
    IntersectionLattice::new(
        "dp4",
        gram,
        vec!["L", "E1", "E2", "E3", "E4", "E5"],
        vec![3, -1, -1, -1, -1, -1],
        vec![-3, 1, 1, 1, 1, 1],
    )
    .expect("static lattice")
}
