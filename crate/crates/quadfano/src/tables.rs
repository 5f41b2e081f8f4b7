//! Regenerates every numerical table by computation and renders it as text, CSV or JSON.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::catalog::{catalog, SecondaryData};
use crate::classifier::obstruction::{nmax_refined, ObstructionReason, PgdPolynomial};
use crate::classifier::sets::{p_sets, P_QUADRIC};
use crate::error::{Error, Result};
use crate::k3::genus_bound_b;
use crate::surfaces::bpf::{bpf_decompose, fixed_component_witness};
use crate::surfaces::dp4::{enumerate_dp4_curves, lambda, lambda_label};
use crate::surfaces::quadric::{
    enumerate_cone_curves, enumerate_smooth_quadric_curves, residual_system_f2,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableId {
    B,
    PgdNmax,
    Obstructions,
    PlaneSmooth,
    PlaneCone,
    ResidualF2,
    Dp4,
    Sarkisov,
}

impl TableId {
    pub const ALL: [TableId; 8] = [
        TableId::B,
        TableId::PgdNmax,
        TableId::Obstructions,
        TableId::PlaneSmooth,
        TableId::PlaneCone,
        TableId::ResidualF2,
        TableId::Dp4,
        TableId::Sarkisov,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TableId::B => "B",
            TableId::PgdNmax => "pgd-nmax",
            TableId::Obstructions => "obstructions",
            TableId::PlaneSmooth => "plane-smooth",
            TableId::PlaneCone => "plane-cone",
            TableId::ResidualF2 => "residual-f2",
            TableId::Dp4 => "dp4",
            TableId::Sarkisov => "sarkisov",
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TableId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::UnknownTable(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Precondition(format!("unknown format {other:?}"))),
        }
    }
}

/// A generated table: named columns and rows of JSON scalars.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table {
    pub table_id: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

/// Scalar rendered without JSON quoting.
pub fn cell_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

impl Table {
    fn new(id: TableId, columns: &[&str]) -> Self {
        Self {
            table_id: id.as_str().to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Text => Ok(self.to_text()),
            Format::Csv => self.to_csv(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self)
                    .map_err(|e| Error::Precondition(e.to_string()))?;
                s.push('\n');
                Ok(s)
            }
        }
    }

    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(cell_text).collect())
            .collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|i| {
                cells
                    .iter()
                    .map(|r| r[i].chars().count())
                    .chain([self.columns[i].chars().count()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |items: Vec<&str>| {
            let padded: Vec<String> = items
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
                .collect();
            format!("{}\n", padded.join("  ").trim_end())
        };
        let mut out = format!("# {}\n", self.table_id);
        out.push_str(&line(self.columns.iter().map(String::as_str).collect()));
        for r in &cells {
            out.push_str(&line(r.iter().map(String::as_str).collect()));
        }
        out
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Precondition(e.to_string());
        w.write_record(&self.columns).map_err(io)?;
        for r in &self.rows {
            w.write_record(r.iter().map(cell_text)).map_err(io)?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| Error::Precondition(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Precondition(e.to_string()))
    }
}

pub fn generate(id: TableId) -> Result<Table> {
    match id {
        TableId::B => table_b(),
        TableId::PgdNmax => table_pgd_nmax(),
        TableId::Obstructions => table_obstructions(),
        TableId::PlaneSmooth => table_plane_smooth(),
        TableId::PlaneCone => table_plane_cone(),
        TableId::ResidualF2 => table_residual_f2(),
        TableId::Dp4 => table_dp4(),
        TableId::Sarkisov => Ok(table_sarkisov()),
    }
}

fn table_b() -> Result<Table> {
    let mut t = Table::new(TableId::B, &["d", "r", "b"]);
    for d in 1..=18 {
        let b = genus_bound_b(d)?;
        t.push(vec![json!(d), json!(b.r), json!(b.value)]);
    }
    Ok(t)
}

fn table_pgd_nmax() -> Result<Table> {
    let mut t = Table::new(
        TableId::PgdNmax,
        &["g", "d", "p_gd", "n_max_raw", "n_max", "refined_by"],
    );
    for (g, d) in p_sets().all {
        let r = nmax_refined(g, d)?;
        let refined_by = if r.refined == r.raw {
            "none"
        } else if r
            .certificates
            .iter()
            .any(|c| c.reason == ObstructionReason::SpecialRule16 && c.n > r.refined)
        {
            "special_rule_1_6"
        } else {
            "contradictory_divisor"
        };
        t.push(vec![
            json!(g),
            json!(d),
            json!(PgdPolynomial::new(g, d).render()),
            json!(r.raw),
            json!(r.refined),
            json!(refined_by),
        ]);
    }
    Ok(t)
}

fn table_obstructions() -> Result<Table> {
    let mut t = Table::new(
        TableId::Obstructions,
        &[
            "g", "d", "n", "cg", "divisor", "h_d", "d_sq", "c_d", "gamma_d", "pattern",
        ],
    );
    for (g, d) in p_sets().all {
        for c in nmax_refined(g, d)?.certificates {
            let (Some(cg), Some(div)) = (c.cg, c.divisor) else {
                continue;
            };
            let pattern = serde_json::to_value(div.pattern).unwrap_or(Value::Null);
            t.push(vec![
                json!(g),
                json!(d),
                json!(c.n),
                json!(cg),
                json!(div.label),
                json!(div.h_d),
                json!(div.d_sq),
                json!(div.c_d),
                json!(div.gamma_d),
                pattern,
            ]);
        }
    }
    Ok(t)
}

fn table_plane_smooth() -> Result<Table> {
    let mut t = Table::new(TableId::PlaneSmooth, &["a", "b", "g", "d"]);
    for (c, g, d) in enumerate_smooth_quadric_curves(6)? {
        t.push(vec![json!(c.a), json!(c.b), json!(g), json!(d)]);
    }
    Ok(t)
}

fn table_plane_cone() -> Result<Table> {
    let mut t = Table::new(TableId::PlaneCone, &["a", "b", "g", "d"]);
    for (c, g, d) in enumerate_cone_curves(6)? {
        t.push(vec![json!(c.a), json!(c.b), json!(g), json!(d)]);
    }
    Ok(t)
}

fn table_residual_f2() -> Result<Table> {
    let mut t = Table::new(
        TableId::ResidualF2,
        &["g", "d", "c_hat", "residual", "decomposition"],
    );
    for (c, g, d) in enumerate_cone_curves(6)? {
        let r = residual_system_f2(&c)?;
        let decomposition = bpf_decompose(&r).map(|x| x.summands.join("+"));
        t.push(vec![
            json!(g),
            json!(d),
            json!(c.class().to_string()),
            json!(r.to_string()),
            json!(decomposition.map(|s| if s.is_empty() { "0".into() } else { s })),
        ]);
    }
    Ok(t)
}

fn table_dp4() -> Result<Table> {
    let mut t = Table::new(
        TableId::Dp4,
        &[
            "g",
            "d",
            "k",
            "m",
            "residual",
            "decomposition",
            "fixed_line",
            "line_dot_curve",
        ],
    );
    for (c, g, d) in enumerate_dp4_curves(P_QUADRIC) {
        let (a, b) = c.residual();
        let residual = lambda(a, b);
        let m =
            c.m.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",");
        let (decomposition, line, pairing) = match bpf_decompose(&residual) {
            Some(x) => (json!(x.summands.join("+")), Value::Null, Value::Null),
            None => match fixed_component_witness(&c.class(), &residual) {
                Some(w) => (Value::Null, json!(w.line), json!(w.line_dot_curve)),
                None => (Value::Null, Value::Null, Value::Null),
            },
        };
        t.push(vec![
            json!(g),
            json!(d),
            json!(c.k),
            json!(format!("({m})")),
            json!(lambda_label(a, b)),
            decomposition,
            line,
            pairing,
        ]);
    }
    Ok(t)
}

fn secondary_text(s: &Option<SecondaryData>) -> String {
    match s {
        None => "-".into(),
        Some(SecondaryData::AnticanonicalCurve { g_prime, d_prime }) => {
            format!("curve({g_prime};{d_prime})")
        }
        Some(SecondaryData::FlopCurve {
            y_plus_minus_k_cubed,
            g_plus,
            d_plus,
        }) => {
            format!("y_plus={y_plus_minus_k_cubed};curve({g_plus};{d_plus})")
        }
        Some(SecondaryData::FlopPoint {
            y_plus_minus_k_cubed,
            exceptional,
            ..
        }) => {
            format!("y_plus={y_plus_minus_k_cubed};point;e={exceptional}")
        }
        Some(SecondaryData::Fibration { fibration }) => fibration.replace(' ', "_"),
    }
}

fn table_sarkisov() -> Table {
    let mut t = Table::new(
        TableId::Sarkisov,
        &[
            "g",
            "d",
            "variant",
            "outcome",
            "link_type",
            "minus_k_cubed",
            "secondary",
            "ambiguous",
            "target",
            "reference",
        ],
    );
    for r in catalog() {
        let enum_str = |v: Value| cell_text(&v);
        t.push(vec![
            json!(r.g),
            json!(r.d),
            json!(enum_str(
                serde_json::to_value(r.variant).unwrap_or(Value::Null)
            )),
            json!(enum_str(
                serde_json::to_value(r.outcome).unwrap_or(Value::Null)
            )),
            json!(r.link_type.as_str()),
            json!(r.minus_k_cubed),
            json!(secondary_text(&r.secondary_data)),
            json!(r.ambiguous),
            json!(r.target),
            json!(r.reference_tag),
        ]);
    }
    t
}
