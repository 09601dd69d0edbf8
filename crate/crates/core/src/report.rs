//! Structured pass/fail evidence shared by the validators and theorem checkers.

use std::fmt;

use serde::{Deserialize, Serialize};

/// One violated law together with the indices that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawFailure {
    pub law: String,
    pub indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub failures: Vec<LawFailure>,
}

/// Coherence checks report failing axioms with their object tuple.
pub type CoherenceReport = ValidationReport;

impl ValidationReport {
    pub fn from_failures(failures: Vec<LawFailure>) -> Self {
        ValidationReport {
            ok: failures.is_empty(),
            failures,
        }
    }

    pub fn is_ok(&self) -> bool {
        self.ok
    }

    pub fn has_law(&self, law: &str) -> bool {
        self.failures.iter().any(|f| f.law == law)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return write!(f, "ok");
        }
        writeln!(f, "{} failure(s)", self.failures.len())?;
        for fail in &self.failures {
            writeln!(f, "  {} at {:?}", fail.law, fail.indices)?;
        }
        Ok(())
    }
}

/// Collects failures while a validator walks its tables.
#[derive(Debug, Default)]
pub(crate) struct FailureLog(Vec<LawFailure>);

impl FailureLog {
    pub fn push(&mut self, law: &str, indices: impl Into<Vec<usize>>) {
        self.0.push(LawFailure {
            law: law.to_string(),
            indices: indices.into(),
        });
    }

    pub fn finish(self) -> ValidationReport {
        ValidationReport::from_failures(self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Every hypothesis held and so did every conclusion.
    Consistent,
    /// Some hypothesis failed, could not be decided, or coverage was partial.
    NotApplicable,
    /// All hypotheses held but a conclusion failed.
    Inconsistent,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Consistent => "consistent",
            Verdict::NotApplicable => "not-applicable",
            Verdict::Inconsistent => "inconsistent",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    Lemma1,
    Prop2,
    Prop3,
    Distributive,
    Additive,
    Monoidal,
    CaccamoWinskel,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::Lemma1,
        TheoremId::Prop2,
        TheoremId::Prop3,
        TheoremId::Distributive,
        TheoremId::Additive,
        TheoremId::Monoidal,
        TheoremId::CaccamoWinskel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Lemma1 => "lemma1",
            TheoremId::Prop2 => "prop2",
            TheoremId::Prop3 => "prop3",
            TheoremId::Distributive => "distributive",
            TheoremId::Additive => "additive",
            TheoremId::Monoidal => "monoidal",
            TheoremId::CaccamoWinskel => "caccamo-winskel",
        }
    }

    pub fn parse(s: &str) -> Option<TheoremId> {
        TheoremId::ALL.into_iter().find(|t| t.name() == s)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A named claim with its truth value and a short piece of evidence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub name: String,
    pub satisfied: bool,
    pub evidence: String,
}

impl Claim {
    pub fn new(name: impl Into<String>, satisfied: bool, evidence: impl Into<String>) -> Self {
        Claim {
            name: name.into(),
            satisfied,
            evidence: evidence.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub subject: String,
    pub hypotheses: Vec<Claim>,
    pub conclusions: Vec<Claim>,
    pub verdict: Verdict,
    /// Set when the hypotheses failed: whether the conclusion failed too.
    pub contrapositive: Option<bool>,
    pub coverage: Vec<String>,
    /// Cross-checks between independent code paths that disagreed.
    pub anomalies: Vec<String>,
}

impl TheoremReport {
    pub fn new(theorem: TheoremId, subject: impl Into<String>) -> Self {
        TheoremReport {
            theorem,
            subject: subject.into(),
            hypotheses: Vec::new(),
            conclusions: Vec::new(),
            verdict: Verdict::NotApplicable,
            contrapositive: None,
            coverage: Vec::new(),
            anomalies: Vec::new(),
        }
    }

    pub fn hypothesis(&mut self, name: impl Into<String>, ok: bool, evidence: impl Into<String>) {
        self.hypotheses.push(Claim::new(name, ok, evidence));
    }

    pub fn conclusion(&mut self, name: impl Into<String>, ok: bool, evidence: impl Into<String>) {
        self.conclusions.push(Claim::new(name, ok, evidence));
    }

    pub fn hypotheses_hold(&self) -> bool {
        self.coverage.is_empty() && self.hypotheses.iter().all(|h| h.satisfied)
    }

    pub fn conclusions_hold(&self) -> bool {
        self.conclusions.iter().all(|c| c.satisfied)
    }

    /// Derives the verdict from the recorded claims. Conclusions recorded while
    /// some hypothesis failed are informational only.
    pub fn finalize(mut self) -> Self {
        self.verdict = if !self.hypotheses_hold() {
            Verdict::NotApplicable
        } else if self.conclusions_hold() {
            Verdict::Consistent
        } else {
            Verdict::Inconsistent
        };
        self
    }

    pub fn is_sound(&self) -> bool {
        self.verdict != Verdict::Inconsistent && self.anomalies.is_empty()
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}] {}: {}", self.theorem, self.subject, self.verdict)?;
        for h in &self.hypotheses {
            let mark = if h.satisfied { "yes" } else { "no " };
            writeln!(f, "  hypothesis {mark} {} ({})", h.name, h.evidence)?;
        }
        for c in &self.conclusions {
            let mark = if c.satisfied { "yes" } else { "no " };
            writeln!(f, "  conclusion {mark} {} ({})", c.name, c.evidence)?;
        }
        match self.contrapositive {
            Some(true) => writeln!(f, "  contrapositive confirmed")?,
            Some(false) => writeln!(f, "  contrapositive not confirmed")?,
            None => {}
        }
        for c in &self.coverage {
            writeln!(f, "  coverage: {c}")?;
        }
        for a in &self.anomalies {
            writeln!(f, "  ANOMALY: {a}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_rules() {
        let mut r = TheoremReport::new(TheoremId::Lemma1, "x");
        r.hypothesis("h", true, "");
        r.conclusion("c", false, "");
        assert_eq!(r.clone().finalize().verdict, Verdict::Inconsistent);

        r.hypotheses[0].satisfied = false;
        assert_eq!(r.clone().finalize().verdict, Verdict::NotApplicable);

        r.hypotheses[0].satisfied = true;
        r.conclusions[0].satisfied = true;
        assert_eq!(r.clone().finalize().verdict, Verdict::Consistent);

        r.coverage.push("partial".into());
        assert_eq!(r.finalize().verdict, Verdict::NotApplicable);
    }

    #[test]
    fn report_ok_iff_no_failures() {
        assert!(ValidationReport::from_failures(vec![]).ok);
        let r = ValidationReport::from_failures(vec![LawFailure {
            law: "x".into(),
            indices: vec![1],
        }]);
        assert!(!r.ok);
        assert!(r.has_law("x"));
    }

    #[test]
    fn theorem_names_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(TheoremId::parse(t.name()), Some(t));
        }
    }
}
