//! Outcomes of the two-ray game for each weak Fano blowup: anticanonical model, flops and the
//! resulting Sarkisov link.

use std::collections::BTreeMap;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::classifier::sets::{anticanonical_cube, in_p, P_CONIC, P_LINE, P_NONE};
use crate::lattice::make_quadric_smooth;
use crate::surfaces::dp4::{dp4_lines, lambda};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Generic,
    OnHyperplane,
    OnQuadricSection,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    FanoDivisorial,
    FanoFibring,
    NoLinkDivisorial,
    FlopThenDivisorial,
    FlopThenFibring,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LinkType {
    I,
    II,
    #[serde(rename = "none")]
    None,
}

impl LinkType {
    pub fn as_str(&self) -> &'static str {
        match self {
            LinkType::I => "I",
            LinkType::II => "II",
            LinkType::None => "none",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum SecondaryData {
    /// Curve C′ blown up by the anticanonical model.
    AnticanonicalCurve {
        g_prime: i64,
        d_prime: i64,
    },
    /// After the flop, Y⁺ is blown up along a smooth curve.
    FlopCurve {
        y_plus_minus_k_cubed: Rational64,
        g_plus: i64,
        d_plus: i64,
    },
    /// After the flop, the exceptional divisor contracts to a singular point of Y⁺.
    FlopPoint {
        y_plus_minus_k_cubed: Rational64,
        exceptional: String,
        image: String,
    },
    Fibration {
        fibration: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SarkisovRecord {
    pub g: i64,
    pub d: i64,
    pub variant: Variant,
    pub outcome: Outcome,
    pub link_type: LinkType,
    pub minus_k_cubed: i64,
    pub target: String,
    pub secondary_data: Option<SecondaryData>,
    pub reference_tag: String,
    /// Set when the same (g,d, variant) key carries more than one outcome.
    pub ambiguous: bool,
}

fn link_for(outcome: Outcome) -> LinkType {
    match outcome {
        Outcome::FanoFibring | Outcome::FlopThenFibring => LinkType::I,
        Outcome::FanoDivisorial | Outcome::FlopThenDivisorial => LinkType::II,
        Outcome::NoLinkDivisorial => LinkType::None,
    }
}

fn rec(
    (g, d): (i64, i64),
    variant: Variant,
    outcome: Outcome,
    minus_k_cubed: i64,
    target: &str,
    secondary_data: Option<SecondaryData>,
    reference_tag: &str,
) -> SarkisovRecord {
    SarkisovRecord {
        g,
        d,
        variant,
        outcome,
        link_type: link_for(outcome),
        minus_k_cubed,
        target: target.to_string(),
        secondary_data,
        reference_tag: reference_tag.to_string(),
        ambiguous: false,
    }
}

fn fib(kind: &str) -> Option<SecondaryData> {
    Some(SecondaryData::Fibration {
        fibration: kind.to_string(),
    })
}

fn acurve(g_prime: i64, d_prime: i64) -> Option<SecondaryData> {
    Some(SecondaryData::AnticanonicalCurve { g_prime, d_prime })
}

fn fcurve(y: i64, g_plus: i64, d_plus: i64) -> Option<SecondaryData> {
    Some(SecondaryData::FlopCurve {
        y_plus_minus_k_cubed: Rational64::from(y),
        g_plus,
        d_plus,
    })
}

/// The 38 catalog records, in block order.
pub fn catalog() -> Vec<SarkisovRecord> {
    use Outcome::*;
    use Variant::*;
    let mm = |nr: u32| format!("Mori-Mukai rank 2 Nr.{nr}");
    let jpr1 = |nr: u32| format!("Jahnke-Peternell-Radloff I A.4 Nr.{nr}");
    let acm = |no: u32| format!("Arap-Cutrone-Marshburn No.{no}");
    let cmu = |no: u32| format!("Cutrone-Marshburn update No.{no}");
    let blowup_y_plus =
        "blowup of a smooth Fano threefold Y+ of Picard rank 1 along a smooth curve";
    let mut out = vec![
        rec(
            (0, 3),
            Generic,
            FanoDivisorial,
            34,
            "blowup of a Fano threefold of Picard rank 1 degree 5 and index 1 along a line",
            None,
            &mm(26),
        ),
        rec(
            (0, 4),
            Generic,
            FanoDivisorial,
            28,
            "blowup of a smooth hyperquadric along a smooth rational quartic",
            None,
            &mm(21),
        ),
        rec(
            (1, 4),
            Generic,
            FanoDivisorial,
            30,
            "blowup of a singular intersection of two hyperquadrics in P4 at its singular point",
            None,
            &mm(23),
        ),
        rec(
            (1, 5),
            Generic,
            FanoDivisorial,
            24,
            "blowup of P3 along a smooth elliptic quintic",
            None,
            &mm(17),
        ),
        rec(
            (0, 1),
            Generic,
            FanoFibring,
            46,
            "P1-bundle over P2",
            fib("P1-bundle over P2"),
            &mm(31),
        ),
        rec(
            (0, 2),
            Generic,
            FanoFibring,
            40,
            "del Pezzo fibration of degree 8",
            fib("dPf degree 8"),
            &mm(29),
        ),
        rec(
            (2, 6),
            Generic,
            FanoFibring,
            20,
            "conic bundle over P2",
            fib("conic bundle over P2"),
            &mm(13),
        ),
        rec(
            (5, 8),
            Generic,
            FanoFibring,
            14,
            "del Pezzo fibration of degree 4",
            fib("dPf degree 4"),
            &mm(7),
        ),
        rec(
            (0, 4),
            OnHyperplane,
            NoLinkDivisorial,
            28,
            "anticanonical model of X in P(O_Y^3 + O_Y(2))",
            acurve(0, 2),
            &jpr1(18),
        ),
        rec(
            (2, 5),
            Generic,
            NoLinkDivisorial,
            26,
            "anticanonical model of X in P(O_Y^2 + O_Y(2))",
            acurve(0, 1),
            &jpr1(17),
        ),
        rec(
            (3, 8),
            OnQuadricSection,
            NoLinkDivisorial,
            10,
            "canonical Gorenstein threefold from the Jahnke-Peternell-Radloff A.1 list",
            acurve(0, 2),
            &jpr1(16),
        ),
        rec(
            (6, 10),
            Generic,
            NoLinkDivisorial,
            4,
            "quartic hypersurface in P4 or double cover of Y ramified in a quartic section",
            acurve(1, 5),
            &jpr1(14),
        ),
        rec(
            (8, 10),
            Generic,
            NoLinkDivisorial,
            8,
            "complete intersection of three quadrics in P6",
            acurve(0, 1),
            &jpr1(15),
        ),
        rec(
            (11, 12),
            Generic,
            NoLinkDivisorial,
            2,
            "double cover of P3 ramified in a sextic",
            acurve(3, 6),
            &jpr1(13),
        ),
    ];
    let flops: [((i64, i64), i64, i64, i64, i64, String); 16] = [
        ((0, 6), 16, 22, 0, 2, "Takeuchi (2.8)".into()),
        ((0, 8), 4, 54, 0, 8, acm(71)),
        ((1, 7), 12, 40, 1, 7, acm(105)),
        ((1, 8), 6, 22, 1, 8, acm(86)),
        (
            (2, 7),
            14,
            18,
            0,
            1,
            "Iskovskikh-Prokhorov 4.3.3(vii) and 4.3.7(ii)".into(),
        ),
        ((2, 8), 8, 18, 0, 4, acm(97)),
        ((2, 9), 2, 54, 2, 9, acm(44)),
        ((3, 8), 10, 54, 3, 8, cmu(102)),
        ((3, 9), 4, 16, 0, 5, acm(70)),
        ((4, 9), 6, 54, 4, 9, acm(88)),
        ((5, 10), 2, 54, 5, 10, acm(45)),
        ((6, 10), 4, 54, 6, 10, cmu(72)),
        ((7, 10), 6, 12, 0, 2, "Takeuchi (2.8)".into()),
        ((8, 11), 2, 54, 8, 11, acm(46)),
        ((11, 12), 2, 54, 11, 12, cmu(47)),
        ((14, 13), 2, 54, 14, 13, acm(48)),
    ];
    for (pair, kc, y, gp, dp, tag) in flops {
        out.push(rec(
            pair,
            Generic,
            FlopThenDivisorial,
            kc,
            blowup_y_plus,
            fcurve(y, gp, dp),
            &tag,
        ));
    }
    out.push(rec(
        (4, 8),
        Generic,
        FlopThenDivisorial,
        12,
        "E isomorphic to P1xP1 contracted to an ordinary double point of Y+",
        Some(SecondaryData::FlopPoint {
            y_plus_minus_k_cubed: Rational64::from(14),
            exceptional: "P1xP1".into(),
            image: "ordinary double point".into(),
        }),
        "Cutrone-Marshburn 3.2.2 No.5",
    ));
    out.push(rec(
        (6, 9),
        Generic,
        FlopThenDivisorial,
        10,
        "E isomorphic to P2 contracted to a quadruple non-Gorenstein point of Y+",
        Some(SecondaryData::FlopPoint {
            y_plus_minus_k_cubed: Rational64::new(21, 2),
            exceptional: "P2".into(),
            image: "quadruple non-Gorenstein point".into(),
        }),
        "Cutrone-Marshburn 3.2.3 No.5",
    ));
    let jpr2 = |s: &str| format!("Jahnke-Peternell-Radloff II {s}");
    for (pair, kc, kind, tag) in [
        ((0, 5), 22, "conic bundle", jpr2("7.13 Nr.17")),
        ((1, 6), 18, "dPf degree 6", jpr2("7.4 Nr.3")),
        ((0, 7), 10, "conic bundle", jpr2("7.13 Nr.13")),
        ((3, 7), 16, "dPf degree 5", jpr2("7.4 Nr.5")),
        ((5, 9), 8, "conic bundle", jpr2("7.13 Nr.10")),
        ((9, 11), 4, "dPf degree 5", jpr2("7.4 Nr.17")),
    ] {
        out.push(rec(
            pair,
            Generic,
            FlopThenFibring,
            kc,
            kind,
            fib(kind),
            &tag,
        ));
    }
    let mut counts: BTreeMap<(i64, i64, Variant), usize> = BTreeMap::new();
    for r in &out {
        *counts.entry((r.g, r.d, r.variant)).or_default() += 1;
    }
    for r in &mut out {
        r.ambiguous = counts[&(r.g, r.d, r.variant)] > 1;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrosscheckReport {
    /// Records whose stored −K³ disagrees with 52−6d+2g: (g, d, stored, formula).
    pub cube_mismatches: Vec<(i64, i64, i64, i64)>,
    /// Records whose link type disagrees with their outcome.
    pub link_mismatches: Vec<(i64, i64)>,
    /// Catalog pairs outside the admissible set.
    pub outside_p: Vec<(i64, i64)>,
    /// Admissible pairs with no catalog record.
    pub missing_pairs: Vec<(i64, i64)>,
    /// Pairs carrying more than one outcome under the same variant.
    pub ambiguous_pairs: Vec<(i64, i64)>,
}

impl CrosscheckReport {
    pub fn arithmetic_ok(&self) -> bool {
        self.cube_mismatches.is_empty()
            && self.link_mismatches.is_empty()
            && self.outside_p.is_empty()
    }
}

pub fn crosscheck(records: &[SarkisovRecord]) -> CrosscheckReport {
    let mut report = CrosscheckReport {
        cube_mismatches: Vec::new(),
        link_mismatches: Vec::new(),
        outside_p: Vec::new(),
        missing_pairs: Vec::new(),
        ambiguous_pairs: Vec::new(),
    };
    for r in records {
        let formula = anticanonical_cube(r.g, r.d);
        if formula != r.minus_k_cubed {
            report
                .cube_mismatches
                .push((r.g, r.d, r.minus_k_cubed, formula));
        }
        if link_for(r.outcome) != r.link_type {
            report.link_mismatches.push((r.g, r.d));
        }
        if !in_p(r.g, r.d) {
            report.outside_p.push((r.g, r.d));
        }
        if r.ambiguous && !report.ambiguous_pairs.contains(&(r.g, r.d)) {
            report.ambiguous_pairs.push((r.g, r.d));
        }
    }
    let mut all: Vec<_> = P_NONE
        .iter()
        .chain(P_LINE)
        .chain(P_CONIC)
        .copied()
        .collect();
    all.sort();
    for p in all {
        if !records.iter().any(|r| (r.g, r.d) == p) {
            report.missing_pairs.push(p);
        }
    }
    report.ambiguous_pairs.sort();
    report
}

/// A K-trivial family of curves Γ meeting C in exactly 3·deg(Γ) points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SecantWitness {
    pub surface: String,
    pub family: String,
    pub curve: String,
    pub family_degree: i64,
    pub pairing: i64,
}

impl SecantWitness {
    pub fn is_k_trivial(&self) -> bool {
        self.pairing == 3 * self.family_degree
    }
}

pub fn infinite_secant_witness(variant: Variant) -> Option<SecantWitness> {
    match variant {
        Variant::OnHyperplane => {
            let s = make_quadric_smooth();
            let family = s.basis(1);
            let curve = s.class(&[3, 1]).expect("rank 2");
            Some(SecantWitness {
                surface: "p1xp1".into(),
                pairing: family.intersect(&curve).expect("same lattice"),
                family_degree: family.degree().expect("ok"),
                family: family.to_string(),
                curve: curve.to_string(),
            })
        }
        Variant::OnQuadricSection => {
            let family = lambda(2, [1, 1, 1, 1, 0]);
            let curve = lambda(5, [1, 1, 1, 1, 3]);
            Some(SecantWitness {
                surface: "dp4".into(),
                pairing: family.intersect(&curve).expect("same lattice"),
                family_degree: family.degree().expect("ok"),
                family: family.to_string(),
                curve: curve.to_string(),
            })
        }
        Variant::Generic => {
            // the generic rational quartic lies on a quartic del Pezzo as 2L-E4-E5
            let curve = lambda(2, [0, 0, 0, 1, 1]);
            dp4_lines().into_iter().find_map(|l| {
                let pairing = l.intersect(&curve).ok()?;
                (pairing == 3).then(|| SecantWitness {
                    surface: "dp4".into(),
                    family: l.to_string(),
                    curve: curve.to_string(),
                    family_degree: 1,
                    pairing,
                })
            })
        }
    }
}
