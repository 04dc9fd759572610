//! Operator listings and the printed-versus-corrected comparison.

use std::fmt::Write;

use serde::{Deserialize, Serialize};
use wirtinger_core::internal::build_sun_generators;
use wirtinger_core::lorentz::{build_single_particle_operator, corrections, verify_commutation_table, GeneratorSet, LorentzError, Variant};
use wirtinger_core::symcore::to_text;

use crate::report::Status;

/// `# name` headers followed by each operator in text form.
pub fn dump_generators(n: u16, variant: Variant) -> Result<String, LorentzError> {
    let gens = GeneratorSet::build(n, variant)?;
    let mut out = String::new();
    let _ = writeln!(out, "# variant {variant} n={n}");
    for (g, op) in gens.iter() {
        let _ = writeln!(out, "# {}\n{}", g.label(), to_text(op));
    }
    let _ = writeln!(out, "# O\n{}", to_text(&build_single_particle_operator(n)?));
    if let Ok(sun) = build_sun_generators(n, &[1]) {
        for (alpha, op) in sun.ops.iter().enumerate() {
            let _ = writeln!(out, "# {}\n{}", sun.basis.label(alpha), to_text(op));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairDiff {
    pub pair: String,
    pub anchor: String,
    pub corrected: Status,
    pub as_printed: Status,
    /// Printed-variant residual when it fails.
    pub residual: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VariantDiff {
    pub n: u16,
    pub corrections: Vec<String>,
    pub pairs: Vec<PairDiff>,
}

pub fn diff_variants(n: u16) -> Result<VariantDiff, LorentzError> {
    let corrected = verify_commutation_table(&GeneratorSet::build(n, Variant::Corrected)?);
    let printed = verify_commutation_table(&GeneratorSet::build(n, Variant::AsPrinted)?);
    let pairs = corrected
        .entries
        .iter()
        .map(|c| {
            let p = printed.get(&c.label).expect("both tables list the same pairs");
            PairDiff {
                pair: c.label.clone(),
                anchor: c.anchor.to_string(),
                corrected: Status::from_pass(c.pass),
                as_printed: Status::from_pass(p.pass),
                residual: p.residual.as_ref().map(to_text),
            }
        })
        .collect();
    let corrections = match corrections() {
        Ok(r) => r.iter().map(|c| c.describe()).collect(),
        Err(e) => vec![format!("{e:?}")],
    };
    Ok(VariantDiff { n, corrections, pairs })
}

impl VariantDiff {
    pub fn differing(&self) -> impl Iterator<Item = &PairDiff> {
        self.pairs.iter().filter(|p| p.corrected != p.as_printed)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n={}", self.n);
        for c in &self.corrections {
            let _ = writeln!(out, "correction: {c}");
        }
        for p in self.differing() {
            let _ = writeln!(out, "{} [{}] corrected={} as_printed={}", p.pair, p.anchor, p.corrected.as_str(), p.as_printed.as_str());
            if let Some(r) = &p.residual {
                for line in r.lines() {
                    let _ = writeln!(out, "    | {line}");
                }
            }
        }
        let _ = writeln!(out, "{} of {} pairs differ", self.differing().count(), self.pairs.len());
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("diff serializes");
        s.push('\n');
        s
    }
}
