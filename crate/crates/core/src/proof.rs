//! Claim-Proof documents: an ordered list of typed steps that renders either
//! as prose or as a `kind: text` step list.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepKind {
    Claim,
    Definition,
    Model,
    Count,
    Reduction,
    Lemma,
    Observation,
    Computation,
    Contradiction,
    Conclusion,
    Qed,
}

impl StepKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            StepKind::Claim => "claim",
            StepKind::Definition => "definition",
            StepKind::Model => "model",
            StepKind::Count => "count",
            StepKind::Reduction => "reduction",
            StepKind::Lemma => "lemma",
            StepKind::Observation => "observation",
            StepKind::Computation => "computation",
            StepKind::Contradiction => "contradiction",
            StepKind::Conclusion => "conclusion",
            StepKind::Qed => "qed",
        }
    }
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofStep {
    pub kind: StepKind,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ProofDocument {
    pub title: String,
    steps: Vec<ProofStep>,
}

pub const QED_MARK: &str = "\u{25A1}";

impl ProofDocument {
    pub fn new(title: impl Into<String>) -> Self {
        ProofDocument { title: title.into(), steps: Vec::new() }
    }

    pub fn push(&mut self, kind: StepKind, text: impl Into<String>) -> &mut Self {
        self.steps.push(ProofStep { kind, text: text.into() });
        self
    }

    pub fn steps(&self) -> &[ProofStep] {
        &self.steps
    }

    pub fn kinds(&self) -> Vec<StepKind> {
        self.steps.iter().map(|s| s.kind).collect()
    }

    /// First step of the given kind.
    pub fn find(&self, kind: StepKind) -> Option<&ProofStep> {
        self.steps.iter().find(|s| s.kind == kind)
    }

    pub fn claim(&self) -> Option<&str> {
        self.find(StepKind::Claim).map(|s| s.text.as_str())
    }

    /// Prose rendering: the claim first, then `Proof.` and the body as
    /// paragraphs, ending with the QED mark.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        if !self.title.is_empty() {
            out.push_str(&self.title);
            out.push('\n');
            out.push_str(&"=".repeat(self.title.chars().count()));
            out.push_str("\n\n");
        }
        let mut in_proof = false;
        for step in &self.steps {
            match step.kind {
                StepKind::Claim => {
                    out.push_str("Claim. ");
                    out.push_str(&step.text);
                    out.push_str("\n\n");
                }
                StepKind::Qed => {
                    out.push_str(QED_MARK);
                    out.push('\n');
                }
                _ => {
                    if !in_proof {
                        out.push_str("Proof.\n");
                        in_proof = true;
                    }
                    out.push_str(&step.text);
                    out.push('\n');
                }
            }
        }
        out
    }

    /// One `kind: text` line per step.
    pub fn render_steps(&self) -> String {
        self.steps.iter().map(|s| format!("{}: {}\n", s.kind, s.text)).collect()
    }
}

impl fmt::Display for ProofDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}
