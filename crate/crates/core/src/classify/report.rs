use std::fmt;

use serde::{Deserialize, Serialize};

use super::{enumerate_classes, Warning};
use crate::error::Result;
use crate::forms::TripleDoc;
use crate::groups::AbelianGroup;

const LIFT_NOTE: &str = "x in Hom(H, Z/2) lifts to an order-4 class iff it is the mod-2 reduction of an order-4 element of Hom(H, Z/4)";
const ORDER_TWO_NOTE: &str = "x has order 2 iff x != 0 and x is not such a reduction";
const KERVAIRE_NOTE: &str = "the Kervaire invariant vanishes for every manifold in this range";

/// Text and JSON rendering of an enumeration run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassificationReport {
    pub group: String,
    pub n: i64,
    pub n_mod_4: u8,
    pub delta: u8,
    pub count: usize,
    pub constraints: Vec<String>,
    pub interpretation: Vec<String>,
    pub warnings: Vec<String>,
    pub note: String,
    pub representatives: Vec<TripleDoc>,
}

fn constraints(n_mod_4: u8) -> Vec<String> {
    let c: &[&str] = match n_mod_4 {
        2 => &["data [H, mu, phi]", "diag mu = 0", "phi factors through Z/4"],
        0 => &["data [H, mu, phi]", "phi factors through Z/2"],
        1 => &[
            "data [H, mu, phi, omega]",
            "phi factors through Z/2",
            "mu(x, x) = 0 for x lifting to an order-4 class",
            "mu(x, x) = delta * omega(x) for x of order 2",
        ],
        _ => &[
            "data [H, mu, omega]",
            "mu(x, x) = 0 for x lifting to an order-4 class",
            "mu(x, x) = delta * omega(x) for x of order 2",
        ],
    };
    c.iter().map(|s| s.to_string()).collect()
}

pub fn classification_report(group: &AbelianGroup, n: i64, delta: u8, cap: u64) -> Result<ClassificationReport> {
    let e = enumerate_classes(group, n, delta, cap)?;
    let n_mod_4 = n.rem_euclid(4) as u8;
    let mut warnings: Vec<String> = e.warnings.iter().map(Warning::to_string).collect();
    if group.odd_part_dropped() {
        warnings.push("odd torsion does not enter the data and was dropped".into());
    }
    let interpretation =
        if n_mod_4 % 2 == 1 { vec![LIFT_NOTE.to_string(), ORDER_TWO_NOTE.to_string()] } else { Vec::new() };
    Ok(ClassificationReport {
        group: group.two_local().to_string(),
        n,
        n_mod_4,
        delta,
        count: e.count(),
        constraints: constraints(n_mod_4),
        interpretation,
        warnings,
        note: KERVAIRE_NOTE.to_string(),
        representatives: e
            .representatives
            .iter()
            .map(|c| TripleDoc::from_parts(c.group(), c.mu(), c.phi().map(|p| p.values()), c.omega()))
            .collect(),
    })
}

impl ClassificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(crate::forms::json_error)
    }
}

fn row(v: &[u8]) -> String {
    v.iter().map(u8::to_string).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group: {}", self.group)?;
        writeln!(f, "n: {} (n = {} mod 4)", self.n, self.n_mod_4)?;
        writeln!(f, "delta: {}", self.delta)?;
        writeln!(f, "constraints:")?;
        for c in &self.constraints {
            writeln!(f, "  {c}")?;
        }
        for i in &self.interpretation {
            writeln!(f, "interpretation: {i}")?;
        }
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        writeln!(f, "note: {}", self.note)?;
        writeln!(f, "count: {}", self.count)?;
        for (k, r) in self.representatives.iter().enumerate() {
            write!(f, "[{k}] mu = [{}]", r.mu.iter().map(|v| row(v)).collect::<Vec<_>>().join("; "))?;
            if let Some(phi) = &r.phi {
                write!(f, " phi = ({})", phi.join(", "))?;
            }
            if let Some(w) = &r.omega {
                write!(f, " omega = ({})", w.iter().map(u8::to_string).collect::<Vec<_>>().join(", "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
