use serde::{Deserialize, Serialize};

use super::engine::Rewriter;
use super::rules::RuleId;
use crate::error::{Error, Result};
use crate::path::{format_path, parse_path, PathTerm, Position};

/// One rule firing inside a whole term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub rule: RuleId,
    pub position: Position,
    pub before: PathTerm,
    pub after: PathTerm,
}

/// The ordered steps of a normalization run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RewriteTrace {
    pub steps: Vec<TraceStep>,
}

impl RewriteTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn rules(&self) -> impl Iterator<Item = RuleId> + '_ {
        self.steps.iter().map(|s| s.rule)
    }

    /// Re-fires every recorded step from `start` with `rewriter`, checking
    /// each intermediate term, and returns the final one.
    pub fn replay(&self, rewriter: &Rewriter, start: &PathTerm) -> Result<PathTerm> {
        let mut cur = start.clone();
        for (index, step) in self.steps.iter().enumerate() {
            if step.before != cur {
                return Err(Error::ReplayMismatch { index, msg: "term differs from recorded `before`".into() });
            }
            let next = rewriter
                .apply_at(&cur, step.rule, &step.position)
                .ok_or_else(|| Error::ReplayMismatch { index, msg: format!("{} does not fire at {}", step.rule, step.position) })?;
            if next != step.after {
                return Err(Error::ReplayMismatch { index, msg: "contractum differs from recorded `after`".into() });
            }
            cur = next;
        }
        Ok(cur)
    }

    pub fn records(&self) -> Vec<TraceRecord> {
        self.steps
            .iter()
            .enumerate()
            .map(|(i, s)| TraceRecord {
                index: i + 1,
                rule: s.rule.label().to_string(),
                position: s.position.0.clone(),
                before: format_path(&s.before),
                after: format_path(&s.after),
            })
            .collect()
    }
}

/// Serialized form of a [`TraceStep`]; terms use the path text syntax.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub index: usize,
    pub rule: String,
    pub position: Vec<usize>,
    pub before: String,
    pub after: String,
}

impl TraceRecord {
    pub fn to_step(&self) -> Result<TraceStep> {
        Ok(TraceStep {
            rule: RuleId::from_label(&self.rule)?,
            position: Position(self.position.clone()),
            before: parse_path(&self.before)?,
            after: parse_path(&self.after)?,
        })
    }
}

/// A complete run: start term, normal form and the steps between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDocument {
    pub start: String,
    pub normal_form: String,
    pub steps: Vec<TraceRecord>,
}

impl TraceDocument {
    pub fn new(start: &PathTerm, normal_form: &PathTerm, trace: &RewriteTrace) -> Self {
        TraceDocument { start: format_path(start), normal_form: format_path(normal_form), steps: trace.records() }
    }

    pub fn trace(&self) -> Result<RewriteTrace> {
        let steps = self.steps.iter().map(TraceRecord::to_step).collect::<Result<_>>()?;
        Ok(RewriteTrace { steps })
    }

    /// Replays the document and checks it ends at the recorded normal form.
    pub fn verify(&self, rewriter: &Rewriter) -> Result<()> {
        let start = parse_path(&self.start)?;
        let end = self.trace()?.replay(rewriter, &start)?;
        if format_path(&end) != self.normal_form {
            return Err(Error::ReplayMismatch { index: self.steps.len(), msg: "final term differs from recorded normal form".into() });
        }
        Ok(())
    }
}
