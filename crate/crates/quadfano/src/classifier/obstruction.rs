//! Secant-degree bounds: the polynomial P_{g,d}, its raw n_max, and divisor certificates that
//! lower it further.

use serde::{Deserialize, Serialize};

use crate::classifier::sets::in_p;
use crate::error::{precondition, Result};
use crate::k3::{
    effectivity_test, forces_line_plus_hyperplane_section, genus_bound_b, Effectivity,
};
use crate::lattice::make_k3_rank3;

/// Coefficient box searched first, then the widened box.
pub const SEARCH_BOX: i64 = 3;
pub const WIDE_SEARCH_BOX: i64 = 5;

/// n² − (36−2d)n + (d²−12g−1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PgdPolynomial {
    pub g: i64,
    pub d: i64,
    /// Coefficients of n², n, 1.
    pub coeffs: [i64; 3],
}

impl PgdPolynomial {
    pub fn new(g: i64, d: i64) -> Self {
        Self {
            g,
            d,
            coeffs: [1, -(36 - 2 * d), d * d - 12 * g - 1],
        }
    }

    pub fn eval(&self, n: i64) -> i64 {
        self.coeffs[0] * n * n + self.coeffs[1] * n + self.coeffs[2]
    }

    /// Rendered like `n²-22n+48`.
    pub fn render(&self) -> String {
        let mut s = String::from("n²");
        for (c, var) in [(self.coeffs[1], "n"), (self.coeffs[2], "")] {
            if c != 0 {
                s.push_str(&format!(
                    "{}{}{}",
                    if c < 0 { "-" } else { "+" },
                    c.abs(),
                    var
                ));
            }
        }
        s
    }
}

/// Largest 0 < n < 18−d with P_{g,d}(n) ≥ 0, or 0.
pub fn pgd_nmax_raw(g: i64, d: i64) -> Result<i64> {
    if !in_p(g, d) {
        return Err(precondition(format!(
            "({g},{d}) is outside the admissible set"
        )));
    }
    let p = PgdPolynomial::new(g, d);
    Ok((1..18 - d).filter(|&n| p.eval(n) >= 0).max().unwrap_or(0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ObstructionReason {
    PolynomialNegative,
    ContradictoryDivisor,
    #[serde(rename = "special_rule_1_6")]
    SpecialRule16,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pattern {
    /// An effective (−2)-curve of low degree would have C or Γ as a component.
    ContainsComponent,
    /// D is numerically zero yet pairs nontrivially with H, C or Γ.
    ForcedZero,
}

/// D = aH + bC + cΓ together with its recorded intersection numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedDivisor {
    pub coeffs: [i64; 3],
    pub label: String,
    pub pattern: Pattern,
    pub h_d: i64,
    pub d_sq: i64,
    pub c_d: i64,
    pub gamma_d: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionCertificate {
    pub g: i64,
    pub d: i64,
    pub n: i64,
    pub reason: ObstructionReason,
    /// The value of C·Γ this certificate rules out; None for polynomial negativity.
    pub cg: Option<i64>,
    /// Inclusive interval of admissible C·Γ values; empty when lo > hi.
    pub cg_range: [i64; 2],
    pub divisor: Option<CertifiedDivisor>,
}

impl ObstructionCertificate {
    /// Recomputes the recorded pairings from a freshly built rank-3 lattice.
    pub fn revalidate(&self) -> bool {
        match (&self.reason, &self.divisor, self.cg) {
            (ObstructionReason::PolynomialNegative, None, None) => {
                PgdPolynomial::new(self.g, self.d).eval(self.n) < 0
            }
            (ObstructionReason::SpecialRule16, None, Some(cg)) => {
                special_rule_applies(self.g, self.d, self.n, cg)
            }
            (ObstructionReason::ContradictoryDivisor, Some(div), Some(cg)) => {
                matches!(
                    check_divisor(self.g, self.d, self.n, cg, div.coeffs),
                    Some(ref fresh) if fresh == div
                )
            }
            _ => false,
        }
    }
}

/// C·Γ interval [3n+1, B(d+n)+1−g] for a (3n+1)-secant rational curve Γ of degree n.
pub fn cg_range(g: i64, d: i64, n: i64) -> Result<[i64; 2]> {
    Ok([3 * n + 1, genus_bound_b(d + n)?.value + 1 - g])
}

/// Returns the certificate data if D = aH+bC+cΓ matches one of the two contradiction patterns.
pub fn check_divisor(
    g: i64,
    d: i64,
    n: i64,
    cg: i64,
    coeffs: [i64; 3],
) -> Option<CertifiedDivisor> {
    let lattice = make_k3_rank3(g, d, n, cg);
    let div = lattice.class(&coeffs).ok()?;
    let h_d = div.degree().ok()?;
    let d_sq = div.square().ok()?;
    let c_d = lattice.basis(1).intersect(&div).ok()?;
    let gamma_d = lattice.basis(2).intersect(&div).ok()?;
    let pattern = match effectivity_test(&div).ok()? {
        Effectivity::EffectiveCurve { degree, .. } if d_sq == -2 => {
            let c_component = degree < d && c_d < 0;
            let gamma_component = degree < n && gamma_d < 0;
            (c_component || gamma_component).then_some(Pattern::ContainsComponent)?
        }
        Effectivity::Zero if (d_sq == -2 || d_sq == 0) && (c_d != 0 || gamma_d != 0) => {
            Pattern::ForcedZero
        }
        _ => return None,
    };
    Some(CertifiedDivisor {
        coeffs,
        label: div.to_string(),
        pattern,
        h_d,
        d_sq,
        c_d,
        gamma_d,
    })
}

/// Search order: smallest |a|+|b|+|c| first, then lexicographic. A numerically zero D and −D
/// certify the same thing, so only the sign with positive leading coefficient is kept.
fn ordered_box(bound: i64) -> Vec<[i64; 3]> {
    let r = -bound..=bound;
    let mut v: Vec<[i64; 3]> = r
        .clone()
        .flat_map(|a| {
            r.clone()
                .flat_map(move |b| (-bound..=bound).map(move |c| [a, b, c]))
        })
        .filter(|x| x != &[0, 0, 0])
        .collect();
    v.sort_by_key(|x| (x.iter().map(|c| c.abs()).sum::<i64>(), *x));
    v
}

fn leading_positive(x: &[i64; 3]) -> bool {
    x.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
}

fn first_certificate(g: i64, d: i64, n: i64, cg: i64) -> Option<CertifiedDivisor> {
    for bound in [SEARCH_BOX, WIDE_SEARCH_BOX] {
        let hit = ordered_box(bound).into_iter().find_map(|x| {
            let cert = check_divisor(g, d, n, cg, x)?;
            (cert.pattern == Pattern::ContainsComponent || leading_positive(&x)).then_some(cert)
        });
        if hit.is_some() {
            return hit;
        }
    }
    None
}

/// All certificates in the search box for one value of C·Γ, in search order.
pub fn all_certificates(g: i64, d: i64, n: i64, cg: i64, bound: i64) -> Vec<CertifiedDivisor> {
    ordered_box(bound)
        .into_iter()
        .filter_map(|x| check_divisor(g, d, n, cg, x))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub g: i64,
    pub d: i64,
    pub n: i64,
    pub cg_range: [i64; 2],
    pub certificates: Vec<ObstructionCertificate>,
    /// C·Γ values for which no certificate was found.
    pub uncovered: Vec<i64>,
}

impl SearchOutcome {
    pub fn is_complete(&self) -> bool {
        self.uncovered.is_empty()
    }
}

pub fn search_contradictory_divisor(g: i64, d: i64, n: i64) -> Result<SearchOutcome> {
    if !in_p(g, d) {
        return Err(precondition(format!(
            "({g},{d}) is outside the admissible set"
        )));
    }
    if n < 1 || n >= 18 - d {
        return Err(precondition(format!(
            "secant degree n={n} outside 1..{}",
            18 - d
        )));
    }
    let range = cg_range(g, d, n)?;
    let mut certificates = Vec::new();
    let mut uncovered = Vec::new();
    for cg in range[0]..=range[1] {
        match first_certificate(g, d, n, cg) {
            Some(div) => certificates.push(ObstructionCertificate {
                g,
                d,
                n,
                reason: ObstructionReason::ContradictoryDivisor,
                cg: Some(cg),
                cg_range: range,
                divisor: Some(div),
            }),
            None => uncovered.push(cg),
        }
    }
    Ok(SearchOutcome {
        g,
        d,
        n,
        cg_range: range,
        certificates,
        uncovered,
    })
}

/// A (3n+1)-secant line to a sextic C of genus g ≠ 4 whose union with C has degree 7 and genus 4:
/// the union would split as a line plus a genus-4 hyperplane section, which C is not.
pub fn special_rule_applies(g: i64, d: i64, n: i64, cg: i64) -> bool {
    n == 1 && d == 6 && g != 4 && forces_line_plus_hyperplane_section(g + cg - 1, d + n)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NmaxRefinement {
    pub g: i64,
    pub d: i64,
    pub raw: i64,
    pub refined: i64,
    /// Certificates for every excluded n, ordered by (n, C·Γ).
    pub certificates: Vec<ObstructionCertificate>,
}

pub fn nmax_refined(g: i64, d: i64) -> Result<NmaxRefinement> {
    let raw = pgd_nmax_raw(g, d)?;
    let poly = PgdPolynomial::new(g, d);
    let mut certificates = Vec::new();
    for n in raw + 1..18 - d {
        certificates.push(ObstructionCertificate {
            g,
            d,
            n,
            reason: ObstructionReason::PolynomialNegative,
            cg: None,
            cg_range: cg_range(g, d, n)?,
            divisor: None,
        });
        debug_assert!(poly.eval(n) < 0);
    }
    let mut n = raw;
    while n > 0 {
        let range = cg_range(g, d, n)?;
        let cgs: Vec<i64> = (range[0]..=range[1]).collect();
        if !cgs.is_empty() && cgs.iter().all(|&cg| special_rule_applies(g, d, n, cg)) {
            for cg in cgs {
                certificates.push(ObstructionCertificate {
                    g,
                    d,
                    n,
                    reason: ObstructionReason::SpecialRule16,
                    cg: Some(cg),
                    cg_range: range,
                    divisor: None,
                });
            }
            n -= 1;
            continue;
        }
        // an empty C·Γ interval never occurs here: it coincides with P_{g,d}(n) < 0
        let outcome = search_contradictory_divisor(g, d, n)?;
        if !outcome.is_complete() {
            break;
        }
        certificates.extend(outcome.certificates);
        n -= 1;
    }
    certificates.sort_by_key(|c| (c.n, c.cg));
    Ok(NmaxRefinement {
        g,
        d,
        raw,
        refined: n,
        certificates,
    })
}
