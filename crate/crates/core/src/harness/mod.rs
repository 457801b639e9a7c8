//! Verification procedures over explicit finite domains, and their reports.

mod sweep;
mod verifiers;

pub use sweep::{frontier, FrontierRow};
pub use verifiers::{
    verify_corollary, verify_lemma2, verify_small_levels, verify_theorem1, verify_theorem2,
    verify_theorem3, verify_theorem4, verify_theorem5,
};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::classifier::FVector;
use crate::formats::write_graph6;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    Refuted,
    PartiallyChecked,
}

/// A replayable witness against a claim.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub description: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fvector: Option<FVector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
}

impl Counterexample {
    pub fn note(description: impl Into<String>) -> Self {
        Counterexample {
            description: description.into(),
            fvector: None,
            graph6: None,
        }
    }

    pub fn fvector(description: impl Into<String>, f: FVector) -> Self {
        Counterexample {
            fvector: Some(f),
            ..Counterexample::note(description)
        }
    }

    pub fn graph(description: impl Into<String>, g: &Graph) -> Self {
        Counterexample {
            graph6: Some(write_graph6(g)),
            ..Counterexample::note(description)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub status: Status,
    pub domain: String,
    pub counterexamples: Vec<Counterexample>,
    pub seconds: f64,
    /// Named measurements gathered along the way (counts, flip points).
    #[serde(default)]
    pub facts: BTreeMap<String, Value>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.status != Status::Refuted
    }
}

/// Accumulates a report; the status follows from the counterexamples.
pub(crate) struct ReportBuilder {
    theorem: TheoremId,
    domain: String,
    counterexamples: Vec<Counterexample>,
    facts: BTreeMap<String, Value>,
    partial: bool,
    started: Instant,
}

impl ReportBuilder {
    pub(crate) fn new(theorem: TheoremId, domain: impl Into<String>) -> Self {
        ReportBuilder {
            theorem,
            domain: domain.into(),
            counterexamples: Vec::new(),
            facts: BTreeMap::new(),
            partial: false,
            started: Instant::now(),
        }
    }

    pub(crate) fn fail(&mut self, c: Counterexample) {
        self.counterexamples.push(c);
    }

    /// Records `c` unless `ok` holds.
    pub(crate) fn check(&mut self, ok: bool, c: impl FnOnce() -> Counterexample) {
        if !ok {
            self.counterexamples.push(c());
        }
    }

    pub(crate) fn fact(&mut self, key: &str, value: impl Into<Value>) {
        self.facts.insert(key.to_string(), value.into());
    }

    pub(crate) fn partial(&mut self, partial: bool) {
        self.partial |= partial;
    }

    pub(crate) fn finish(self) -> TheoremReport {
        let status = if !self.counterexamples.is_empty() {
            Status::Refuted
        } else if self.partial {
            Status::PartiallyChecked
        } else {
            Status::Verified
        };
        TheoremReport {
            theorem: self.theorem,
            status,
            domain: self.domain,
            counterexamples: self.counterexamples,
            seconds: self.started.elapsed().as_secs_f64(),
            facts: self.facts,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "theorem-1")]
    Theorem1,
    #[serde(rename = "theorem-2")]
    Theorem2,
    #[serde(rename = "theorem-3")]
    Theorem3,
    #[serde(rename = "theorem-4")]
    Theorem4,
    #[serde(rename = "theorem-5")]
    Theorem5,
    #[serde(rename = "corollary")]
    Corollary,
    #[serde(rename = "lemma-2")]
    Lemma2,
    #[serde(rename = "small-levels")]
    SmallLevels,
}

impl TheoremId {
    pub const ALL: [TheoremId; 8] = [
        TheoremId::Theorem1,
        TheoremId::Theorem2,
        TheoremId::Theorem3,
        TheoremId::Corollary,
        TheoremId::Lemma2,
        TheoremId::Theorem4,
        TheoremId::Theorem5,
        TheoremId::SmallLevels,
    ];
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TheoremId::Theorem1 => "theorem-1",
            TheoremId::Theorem2 => "theorem-2",
            TheoremId::Theorem3 => "theorem-3",
            TheoremId::Theorem4 => "theorem-4",
            TheoremId::Theorem5 => "theorem-5",
            TheoremId::Corollary => "corollary",
            TheoremId::Lemma2 => "lemma-2",
            TheoremId::SmallLevels => "small-levels",
        })
    }
}

/// Accepts the short CLI names `1`..`5`, `corollary`, `lemma2`, `small`.
impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "1" | "theorem-1" => TheoremId::Theorem1,
            "2" | "theorem-2" => TheoremId::Theorem2,
            "3" | "theorem-3" => TheoremId::Theorem3,
            "4" | "theorem-4" => TheoremId::Theorem4,
            "5" | "theorem-5" => TheoremId::Theorem5,
            "corollary" => TheoremId::Corollary,
            "lemma2" | "lemma-2" => TheoremId::Lemma2,
            "small" | "small-levels" => TheoremId::SmallLevels,
            other => return Err(format!("unknown theorem {other:?}")),
        })
    }
}

/// Domain limits for the verifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Upper end of the arithmetic scans.
    pub bound: u64,
    /// Largest lattice subgraph order swept by the lattice verifier.
    pub lattice_max: usize,
}

pub const DEFAULT_BOUND: u64 = 10_000;
pub const DEFAULT_LATTICE_MAX: usize = 9;

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            bound: DEFAULT_BOUND,
            lattice_max: DEFAULT_LATTICE_MAX,
        }
    }
}

pub fn verify(id: TheoremId, config: &VerifyConfig) -> TheoremReport {
    match id {
        TheoremId::Theorem1 => verify_theorem1(),
        TheoremId::Theorem2 => verify_theorem2(),
        TheoremId::Theorem3 => verify_theorem3(config),
        TheoremId::Theorem4 => verify_theorem4(config),
        TheoremId::Theorem5 => verify_theorem5(),
        TheoremId::Corollary => verify_corollary(),
        TheoremId::Lemma2 => verify_lemma2(),
        TheoremId::SmallLevels => verify_small_levels(),
    }
}

/// Runs the given verifiers concurrently; reports come back in input order.
pub fn verify_many(ids: &[TheoremId], config: &VerifyConfig) -> Vec<TheoremReport> {
    ids.par_iter().map(|&id| verify(id, config)).collect()
}
