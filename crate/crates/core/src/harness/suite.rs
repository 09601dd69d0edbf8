//! Runs every verifier over a corpus.
//!
//! Members are independent and run in parallel; the report keeps corpus
//! order. A member whose table violates the category axioms is reported with
//! its validation failures and no verifier runs on it.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::category::FinCategory;
use crate::harness::corpus::CorpusSpec;
use crate::harness::verifiers::{verify_all, Analysis};
use crate::report::{TheoremReport, ValidationReport, Verdict};
use crate::search::DEFAULT_NODE_BUDGET;

pub const BUDGET_ENV: &str = "FINCAT_SEARCH_BUDGET";

/// The node budget from `FINCAT_SEARCH_BUDGET`, or the default when unset.
pub fn search_budget_from_env() -> Result<u64, String> {
    match std::env::var(BUDGET_ENV) {
        Err(_) => Ok(DEFAULT_NODE_BUDGET),
        Ok(raw) => raw
            .trim()
            .parse()
            .map_err(|_| format!("{BUDGET_ENV}={raw:?} is not a non-negative integer")),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MemberReport {
    pub name: String,
    pub objects: usize,
    pub morphisms: usize,
    /// Absent when the member could not be built at all.
    pub validation: Option<ValidationReport>,
    /// Build or verifier error, if any.
    pub error: Option<String>,
    pub reports: Vec<TheoremReport>,
    pub elapsed_ms: u128,
}

impl MemberReport {
    fn failed(name: String, error: String, validation: Option<ValidationReport>, started: Instant) -> Self {
        MemberReport {
            name,
            objects: 0,
            morphisms: 0,
            validation,
            error: Some(error),
            reports: Vec::new(),
            elapsed_ms: started.elapsed().as_millis(),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.error.is_none() && self.validation.as_ref().is_some_and(|v| v.ok)
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SuiteReport {
    pub members: Vec<MemberReport>,
}

impl SuiteReport {
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn reports(&self) -> impl Iterator<Item = &TheoremReport> {
        self.members.iter().flat_map(|m| &m.reports)
    }

    pub fn verdict_counts(&self) -> BTreeMap<String, usize> {
        let mut counts = BTreeMap::new();
        for v in [Verdict::Consistent, Verdict::NotApplicable, Verdict::Inconsistent] {
            counts.insert(v.to_string(), 0);
        }
        for r in self.reports() {
            *counts.entry(r.verdict.to_string()).or_default() += 1;
        }
        counts
    }

    pub fn inconsistent(&self) -> usize {
        self.reports().filter(|r| r.verdict == Verdict::Inconsistent).count()
    }

    pub fn anomalies(&self) -> usize {
        self.reports().map(|r| r.anomalies.len()).sum()
    }

    pub fn invalid_members(&self) -> usize {
        self.members.iter().filter(|m| !m.is_valid()).count()
    }

    /// No inconsistent verdict, no anomaly and every member valid.
    pub fn is_clean(&self) -> bool {
        self.inconsistent() == 0 && self.anomalies() == 0 && self.invalid_members() == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.members {
            write!(f, "== {} ({} objects, {} morphisms, {} ms)", m.name, m.objects, m.morphisms, m.elapsed_ms)?;
            writeln!(f)?;
            if let Some(v) = m.validation.as_ref().filter(|v| !v.ok) {
                write!(f, "  validation failed: {v}")?;
            }
            if let Some(e) = &m.error {
                writeln!(f, "  error: {e}")?;
            }
            for r in &m.reports {
                let contra = match r.contrapositive {
                    Some(true) => ", contrapositive confirmed",
                    Some(false) => ", contrapositive not confirmed",
                    None => "",
                };
                writeln!(f, "  [{}] {}: {}{contra}", r.theorem, r.subject, r.verdict)?;
                for a in &r.anomalies {
                    writeln!(f, "    anomaly: {a}")?;
                }
            }
        }
        let counts = self.verdict_counts();
        writeln!(
            f,
            "summary: {} member(s), {} report(s): {} consistent, {} not-applicable, {} inconsistent; {} anomalies; {} invalid member(s)",
            self.members.len(),
            self.reports().count(),
            counts["consistent"],
            counts["not-applicable"],
            counts["inconsistent"],
            self.anomalies(),
            self.invalid_members()
        )
    }
}

/// Validates one category and, if it is valid, runs every verifier on it.
pub fn run_member(name: String, category: FinCategory, budget: u64) -> MemberReport {
    let started = Instant::now();
    let validation = category.validate();
    let (objects, morphisms) = (category.object_count(), category.morphism_count());
    if !validation.ok {
        let mut m = MemberReport::failed(name, "category axioms violated".into(), Some(validation), started);
        m.objects = objects;
        m.morphisms = morphisms;
        return m;
    }
    let analysis = Analysis::new(name.clone(), Arc::new(category), budget);
    let (reports, error) = match verify_all(&analysis) {
        Ok(r) => (r, None),
        Err(e) => (Vec::new(), Some(e.to_string())),
    };
    MemberReport {
        name,
        objects,
        morphisms,
        validation: Some(validation),
        error,
        reports,
        elapsed_ms: started.elapsed().as_millis(),
    }
}

/// Runs already-built members, in parallel, keeping their order.
pub fn run_members(members: Vec<(String, FinCategory)>, budget: u64) -> SuiteReport {
    let members = members
        .into_par_iter()
        .map(|(name, c)| run_member(name, c, budget))
        .collect();
    SuiteReport { members }
}

pub fn run_full_suite(corpus: &[CorpusSpec], budget: u64) -> SuiteReport {
    let members = corpus
        .par_iter()
        .map(|spec| {
            let started = Instant::now();
            match spec.build() {
                Ok(c) => run_member(spec.to_string(), c, budget),
                Err(e) => MemberReport::failed(spec.to_string(), e.to_string(), None, started),
            }
        })
        .collect();
    SuiteReport { members }
}
