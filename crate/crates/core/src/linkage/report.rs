use std::fmt;

use crate::module::{IsoVerdict, PresentedModule};

/// Three-valued answer used where a decision may not be reachable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ternary {
    Yes,
    No,
    Inconclusive,
}

impl Ternary {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Ternary::Yes
        } else {
            Ternary::No
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Ternary::Yes => "yes",
            Ternary::No => "no",
            Ternary::Inconclusive => "inconclusive",
        }
    }
}

impl From<&IsoVerdict> for Ternary {
    fn from(v: &IsoVerdict) -> Self {
        match v {
            IsoVerdict::Yes { .. } => Ternary::Yes,
            IsoVerdict::No(_) => Ternary::No,
            IsoVerdict::Inconclusive { .. } => Ternary::Inconclusive,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Linked,
    NotLinked,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Linked => "Linked",
            Verdict::NotLinked => "NotLinked",
            Verdict::Inconclusive => "Inconclusive",
        })
    }
}

/// One named sub-result with its matrices already rendered as text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evidence {
    pub name: String,
    pub outcome: Ternary,
    pub detail: String,
    pub matrices: Vec<(String, String)>,
    /// Informational entries do not take part in the verdict.
    pub informational: bool,
}

impl Evidence {
    pub fn new(name: impl Into<String>, outcome: Ternary, detail: impl Into<String>) -> Self {
        Evidence { name: name.into(), outcome, detail: detail.into(), matrices: Vec::new(), informational: false }
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }

    pub fn with_matrix(mut self, label: impl Into<String>, text: String) -> Self {
        self.matrices.push((label.into(), text));
        self
    }

    /// Evidence for an isomorphism test, carrying the witnesses or the reason.
    pub fn from_iso(name: impl Into<String>, v: &IsoVerdict) -> Self {
        match v {
            IsoVerdict::Yes { forward, backward } => Evidence::new(name, Ternary::Yes, "isomorphism witnesses found")
                .with_matrix("forward", forward.display())
                .with_matrix("backward", backward.display()),
            IsoVerdict::No(reason) => Evidence::new(name, Ternary::No, reason.clone()),
            IsoVerdict::Inconclusive { trials } => {
                Evidence::new(name, Ternary::Inconclusive, format!("no witness after {trials} random trials"))
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct LinkageReport {
    pub verdict: Verdict,
    pub evidence: Vec<Evidence>,
    pub partners: Vec<(String, PresentedModule)>,
}

impl LinkageReport {
    /// Linked when every deciding entry is affirmative, NotLinked when one
    /// is negative, Inconclusive otherwise.
    pub(crate) fn from_evidence(evidence: Vec<Evidence>, partners: Vec<(String, PresentedModule)>) -> Self {
        let deciding = evidence.iter().filter(|e| !e.informational);
        let mut verdict = Verdict::Linked;
        for e in deciding {
            match e.outcome {
                Ternary::No => {
                    verdict = Verdict::NotLinked;
                    break;
                }
                Ternary::Inconclusive => verdict = Verdict::Inconclusive,
                Ternary::Yes => {}
            }
        }
        LinkageReport { verdict, evidence, partners }
    }
}
