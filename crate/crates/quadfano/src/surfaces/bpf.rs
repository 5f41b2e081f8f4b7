//! Decomposition of residual classes into sums of base-point-free generators.

use serde::{Deserialize, Serialize};

use crate::lattice::{make_dp4, make_f2, make_quadric_smooth, DivisorClass};
use crate::surfaces::dp4::{dp4_lines, lambda, lambda_label};

/// Largest number of distinct generators used by one decomposition.
pub const MAX_DISTINCT_SUMMANDS: usize = 4;

#[derive(Debug, Clone)]
pub struct Generator {
    pub label: String,
    pub class: DivisorClass,
}

/// A sum of generators (with repetition) equal to `target`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BpfDecomposition {
    pub summands: Vec<String>,
    pub target: Vec<i64>,
}

impl BpfDecomposition {
    pub fn render(&self) -> String {
        if self.summands.is_empty() {
            "0".into()
        } else {
            self.summands.join(" + ")
        }
    }

    /// Summand labels as a sorted multiset, for order-free comparison.
    pub fn multiset(&self) -> Vec<String> {
        let mut s = self.summands.clone();
        s.sort();
        s
    }
}

/// The generator alphabet for the lattice of `target`, or None for unsupported surfaces.
pub fn alphabet_for(target: &DivisorClass) -> Option<Vec<Generator>> {
    let lattice = target.lattice();
    let gen = |label: String, class: DivisorClass| Generator { label, class };
    if **lattice == *make_quadric_smooth() {
        Some(vec![
            gen("|f1|".into(), lattice.basis(0)),
            gen("|f2|".into(), lattice.basis(1)),
        ])
    } else if **lattice == *make_f2() {
        Some(vec![
            gen("|f|".into(), lattice.basis(1)),
            gen("|e+2f|".into(), lattice.h()),
        ])
    } else if **lattice == *make_dp4() {
        let mut out = vec![
            gen(lambda_label(1, [0; 5]), lambda(1, [0; 5])),
            gen(lambda_label(2, [0; 5]), lambda(2, [0; 5])),
        ];
        for skip in (0..5).rev() {
            let mut b = [1; 5];
            b[skip] = 0;
            out.push(gen(lambda_label(2, b), lambda(2, b)));
        }
        out.push(gen(lambda_label(3, [1; 5]), lambda(3, [1; 5])));
        for double in 0..5 {
            let mut b = [1; 5];
            b[double] = 2;
            out.push(gen(lambda_label(3, b), lambda(3, b)));
        }
        Some(out)
    } else {
        None
    }
}

/// Every decomposition of `target` into at most four distinct generators, fewest summands first.
pub fn bpf_decompositions_all(target: &DivisorClass) -> Vec<BpfDecomposition> {
    let Some(alphabet) = alphabet_for(target) else {
        return Vec::new();
    };
    let Ok(deg) = target.degree() else {
        return Vec::new();
    };
    if deg < 0 {
        return Vec::new();
    }
    let degrees: Vec<i64> = alphabet
        .iter()
        .map(|g| g.class.degree().expect("ok"))
        .collect();
    let mut found = Vec::new();
    let mut mult = vec![0i64; alphabet.len()];
    search(
        &alphabet,
        &degrees,
        0,
        target.coords().to_vec(),
        deg,
        0,
        &mut mult,
        &mut found,
    );
    let mut out: Vec<BpfDecomposition> = found
        .into_iter()
        .map(|m| {
            let summands = m
                .iter()
                .enumerate()
                .flat_map(|(i, &k)| std::iter::repeat_n(alphabet[i].label.clone(), k as usize))
                .collect();
            BpfDecomposition {
                summands,
                target: target.coords().to_vec(),
            }
        })
        .collect();
    out.sort_by_key(|d| d.summands.len());
    out
}

#[allow(clippy::too_many_arguments)]
fn search(
    alphabet: &[Generator],
    degrees: &[i64],
    i: usize,
    remaining: Vec<i64>,
    remaining_deg: i64,
    distinct: usize,
    mult: &mut Vec<i64>,
    found: &mut Vec<Vec<i64>>,
) {
    if remaining.iter().all(|&x| x == 0) {
        found.push(mult.clone());
        return;
    }
    if i == alphabet.len() || distinct == MAX_DISTINCT_SUMMANDS || remaining_deg <= 0 {
        return;
    }
    let g = &alphabet[i];
    let step = g.class.coords();
    let max = remaining_deg / degrees[i];
    for k in 0..=max {
        let rest: Vec<i64> = remaining.iter().zip(step).map(|(r, s)| r - k * s).collect();
        mult[i] = k;
        search(
            alphabet,
            degrees,
            i + 1,
            rest,
            remaining_deg - k * degrees[i],
            distinct + usize::from(k > 0),
            mult,
            found,
        );
    }
    mult[i] = 0;
}

/// The first decomposition in search order, or None when the alphabet cannot reach `target`.
pub fn bpf_decompose(target: &DivisorClass) -> Option<BpfDecomposition> {
    bpf_decompositions_all(target).into_iter().next()
}

/// Re-sums a decomposition in the lattice of `target`.
pub fn resum(decomp: &BpfDecomposition, target: &DivisorClass) -> Option<DivisorClass> {
    let alphabet = alphabet_for(target)?;
    let mut acc = target.lattice().zero();
    for label in &decomp.summands {
        let g = alphabet.iter().find(|g| &g.label == label)?;
        acc = acc.add(&g.class).ok()?;
    }
    Some(acc)
}

/// A line on the del Pezzo surface that meets `residual` negatively, hence lies in its base locus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedComponentWitness {
    pub line: String,
    pub line_dot_residual: i64,
    pub line_dot_curve: i64,
}

pub fn fixed_component_witness(
    curve: &DivisorClass,
    residual: &DivisorClass,
) -> Option<FixedComponentWitness> {
    dp4_lines().into_iter().find_map(|l| {
        let r = l.intersect(residual).ok()?;
        (r < 0).then(|| FixedComponentWitness {
            line: l.to_string(),
            line_dot_residual: r,
            line_dot_curve: l.intersect(curve).unwrap_or_default(),
        })
    })
}
