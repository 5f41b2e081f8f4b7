//! Weak Fano decision procedure for X = Bl_C Y, Y ⊂ P⁴ a smooth quadric threefold.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::classifier::obstruction::{nmax_refined, NmaxRefinement, ObstructionCertificate};
use crate::classifier::sets::{
    in_p, p_membership_numeric, P_CONIC, P_LINE, P_NONE, P_PLANE, P_QUADRIC, QUADRIC_EXCEPTIONS,
};
use crate::error::Result;
use crate::k3::{
    detect_low_degree_curves, knutsen_smooth_quadric_existence, Existence, LowDegreeKind,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Containment {
    Hyperplane,
    SmoothQuadricSection,
    SmoothCubicSection,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TriState {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveInstance {
    pub g: i64,
    pub d: i64,
    pub containment: Containment,
    pub has_4secant_line: TriState,
    pub has_7secant_conic: TriState,
}

impl CurveInstance {
    pub fn new(g: i64, d: i64) -> Self {
        Self {
            g,
            d,
            containment: Containment::Unknown,
            has_4secant_line: TriState::Unknown,
            has_7secant_conic: TriState::Unknown,
        }
    }

    pub fn with_containment(mut self, c: Containment) -> Self {
        self.containment = c;
        self
    }

    pub fn with_secants(mut self, line: TriState, conic: TriState) -> Self {
        self.has_4secant_line = line;
        self.has_7secant_conic = conic;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    WeakFano,
    NotWeakFano,
    InsufficientData,
}

impl Verdict {
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::WeakFano => 0,
            Verdict::NotWeakFano => 1,
            Verdict::InsufficientData => 2,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::WeakFano => "weak_fano",
            Verdict::NotWeakFano => "not_weak_fano",
            Verdict::InsufficientData => "insufficient_data",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub instance: CurveInstance,
    pub verdict: Verdict,
    pub reasons: Vec<String>,
    /// Facts that would decide an insufficient_data verdict.
    pub missing: Vec<String>,
    pub n_max: Option<i64>,
    pub certificates: Vec<ObstructionCertificate>,
}

fn fact_name(degree: i64) -> &'static str {
    if degree == 1 {
        "has_4secant_line"
    } else {
        "has_7secant_conic"
    }
}

/// Refinements for all admissible pairs, computed once.
fn refinement(g: i64, d: i64) -> Result<NmaxRefinement> {
    static CACHE: OnceLock<BTreeMap<(i64, i64), NmaxRefinement>> = OnceLock::new();
    if let Some(r) = CACHE.get().and_then(|m| m.get(&(g, d))) {
        return Ok(r.clone());
    }
    let mut all = BTreeMap::new();
    for &(pg, pd) in P_NONE.iter().chain(P_LINE).chain(P_CONIC) {
        all.insert((pg, pd), nmax_refined(pg, pd)?);
    }
    let map = CACHE.get_or_init(|| all);
    map.get(&(g, d))
        .cloned()
        .map_or_else(|| nmax_refined(g, d), Ok)
}

pub fn classify(c: &CurveInstance) -> Result<Classification> {
    let (g, d) = (c.g, c.d);
    let mut out = Classification {
        instance: *c,
        verdict: Verdict::InsufficientData,
        reasons: Vec::new(),
        missing: Vec::new(),
        n_max: None,
        certificates: Vec::new(),
    };
    if g < 0 || d < 1 || !in_p(g, d) {
        out.verdict = Verdict::NotWeakFano;
        out.reasons.push(format!(
            "({g},{d}) violates d < 18, 3d-26 < g <= (d²-1)/12 or hits an excluded pair"
        ));
        return Ok(out);
    }
    debug_assert!(p_membership_numeric(g, d));
    let refinement = refinement(g, d)?;
    out.n_max = Some(refinement.refined);
    out.certificates = refinement.certificates;
    let pair = (g, d);

    if P_PLANE.contains(&pair) && (pair != (0, 4) || c.containment == Containment::Hyperplane) {
        out.verdict = Verdict::WeakFano;
        out.reasons.push(format!(
            "({g},{d}) lies in a hyperplane section and |-K_X| restricted to it is base-point-free"
        ));
        return Ok(out);
    }

    match c.containment {
        Containment::Hyperplane => {
            out.verdict = Verdict::NotWeakFano;
            out.reasons.push(format!(
                "a hyperplane curve with ({g},{d}) outside the plane list has a 4-secant line on the quadric surface"
            ));
        }
        Containment::SmoothQuadricSection => {
            if !P_QUADRIC.contains(&pair) {
                out.verdict = Verdict::NotWeakFano;
                out.reasons.push(format!(
                    "every curve of type ({g},{d}) on a quartic del Pezzo surface has a 4-secant line"
                ));
            } else if QUADRIC_EXCEPTIONS.contains(&pair) {
                match c.has_4secant_line {
                    TriState::No => {
                        out.verdict = Verdict::WeakFano;
                        out.reasons
                            .push("quartic del Pezzo residual system is base-point-free".into());
                    }
                    TriState::Yes => {
                        out.verdict = Verdict::NotWeakFano;
                        out.reasons.push("a 4-secant line is -K_X-negative".into());
                    }
                    TriState::Unknown => {
                        out.missing.push("has_4secant_line".into());
                        out.reasons.push(format!(
                            "({g},{d}) on a quartic del Pezzo surface admits a class with a 4-secant line"
                        ));
                    }
                }
            } else {
                out.verdict = Verdict::WeakFano;
                out.reasons
                    .push("quartic del Pezzo residual system is base-point-free".into());
            }
        }
        Containment::SmoothCubicSection => {
            let required: Vec<(i64, TriState)> =
                [(1, c.has_4secant_line), (2, c.has_7secant_conic)]
                    .into_iter()
                    .filter(|(deg, _)| *deg <= refinement.refined)
                    .collect();
            debug_assert_eq!(
                refinement.refined,
                if P_NONE.contains(&pair) {
                    0
                } else if P_LINE.contains(&pair) {
                    1
                } else {
                    2
                }
            );
            if let Some((deg, _)) = required.iter().find(|(_, t)| *t == TriState::Yes) {
                out.verdict = Verdict::NotWeakFano;
                out.reasons.push(format!(
                    "a (3n+1)-secant curve of degree {deg} is -K_X-negative"
                ));
            } else if required.iter().any(|(_, t)| *t == TriState::Unknown) {
                for (deg, t) in &required {
                    if *t == TriState::Unknown {
                        out.missing.push(fact_name(*deg).into());
                    }
                }
                out.reasons.push(format!(
                    "secant curves of degree <= {} must be excluded",
                    refinement.refined
                ));
            } else {
                out.verdict = Verdict::WeakFano;
                let bucket = if P_NONE.contains(&pair) {
                    "no secant hypothesis needed"
                } else if P_CONIC.contains(&pair) {
                    "no 4-secant line and no 7-secant conic"
                } else {
                    "no 4-secant line"
                };
                out.reasons.push(format!(
                    "smooth cubic section, n_max = {}: {bucket}",
                    refinement.refined
                ));
            }
        }
        Containment::Unknown => {
            out.missing.push("containment".into());
            for deg in 1..=refinement.refined {
                out.missing.push(fact_name(deg).into());
            }
            out.reasons
                .push("the verdict depends on which surface section contains C".into());
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExistenceAuditRow {
    pub g: i64,
    pub d: i64,
    pub existence: Existence,
    pub low_degree: Option<LowDegreeKind>,
    pub n_max: i64,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExistenceAudit {
    pub rows: Vec<ExistenceAuditRow>,
    pub passed: bool,
}

const LINE_PAIRS: &[(i64, i64)] = &[(0, 1), (2, 5), (14, 13)];
const CONIC_PAIRS: &[(i64, i64)] = &[(0, 2), (1, 4), (5, 8), (8, 10)];

/// Checks that every admissible pair has a K3 realisation whose low-degree curves do not
/// obstruct the weak Fano property.
pub fn existence_audit() -> Result<ExistenceAudit> {
    let mut all: Vec<_> = P_NONE
        .iter()
        .chain(P_LINE)
        .chain(P_CONIC)
        .copied()
        .collect();
    all.sort();
    let mut rows = Vec::new();
    for (g, d) in all {
        let existence = knutsen_smooth_quadric_existence(g, d);
        let n_max = nmax_refined(g, d)?.refined;
        let low_degree = match existence {
            Existence::ExistsRank2 => Some(detect_low_degree_curves(g, d)?.kind),
            _ => None,
        };
        let ok = existence != Existence::Impossible
            && match low_degree {
                Some(LowDegreeKind::Line) => LINE_PAIRS.contains(&(g, d)) && n_max == 0,
                Some(LowDegreeKind::Conic) => CONIC_PAIRS.contains(&(g, d)) && n_max == 0,
                _ => true,
            };
        rows.push(ExistenceAuditRow {
            g,
            d,
            existence,
            low_degree,
            n_max,
            ok,
        });
    }
    let passed = rows.iter().all(|r| r.ok);
    Ok(ExistenceAudit { rows, passed })
}
