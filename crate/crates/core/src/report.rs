//! Exact commutation-check records shared by the verification modules.

use alloc::string::String;
use alloc::vec::Vec;

use crate::symcore::WeylOperator;

/// One symbolic identity `computed == expected`.
#[derive(Clone, Debug, PartialEq)]
pub struct CommutationEntry {
    pub label: String,
    /// Anchor label carried into reports.
    pub anchor: &'static str,
    pub expected: WeylOperator,
    pub computed: WeylOperator,
    pub pass: bool,
    /// `computed − expected`, present only on failure.
    pub residual: Option<WeylOperator>,
}

impl CommutationEntry {
    pub fn new(label: String, anchor: &'static str, expected: WeylOperator, computed: WeylOperator) -> Self {
        let diff = computed.clone() - expected.clone();
        let pass = diff.is_zero();
        CommutationEntry { label, anchor, expected, computed, pass, residual: (!pass).then_some(diff) }
    }

    /// Entry for a claim that `computed` must NOT vanish (negative controls
    /// and momentum-transfer claims).
    pub fn nonzero(label: String, anchor: &'static str, computed: WeylOperator) -> Self {
        let pass = !computed.is_zero();
        CommutationEntry {
            label,
            anchor,
            expected: WeylOperator::zero(),
            computed,
            pass,
            residual: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct CommutationReport {
    pub entries: Vec<CommutationEntry>,
}

impl CommutationReport {
    pub fn from_entries(mut entries: Vec<CommutationEntry>) -> Self {
        entries.sort_by(|a, b| a.label.cmp(&b.label));
        CommutationReport { entries }
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CommutationEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn failing_labels(&self) -> Vec<String> {
        self.failures().map(|e| e.label.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, label: &str) -> Option<&CommutationEntry> {
        self.entries.iter().find(|e| e.label == label)
    }

    pub fn extend(&mut self, other: CommutationReport) {
        self.entries.extend(other.entries);
        self.entries.sort_by(|a, b| a.label.cmp(&b.label));
    }
}
