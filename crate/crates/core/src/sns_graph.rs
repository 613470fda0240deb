//! A multeity of named entities and a sequence of operators applied to it.
//!
//! Steps run once each, strictly in order. A step reads the current
//! cardinals of its operands and images, writes remainders back to the
//! operands and new cardinals to the images, and leaves every other entity
//! alone. Remainders are not fed back for another pass.

use std::collections::HashSet;
use std::fmt;

use indexmap::IndexMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fuznum::{Family, FuzzyScalar};
use crate::fuzzy_cso::{apply, call_family};
use crate::operator::{EntityId, Form, OperatorSpec, Options, TransformResult};
use crate::warning::Warning;

/// Named entities with their cardinals, in declaration order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Multeity {
    entities: IndexMap<EntityId, FuzzyScalar>,
}

impl Multeity {
    /// Rejects empty and repeated ids.
    pub fn new<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (EntityId, FuzzyScalar)>,
    {
        let mut entities = IndexMap::new();
        for (id, value) in entries {
            if id.is_empty() {
                return Err(Error::Spec("entity id is empty".into()));
            }
            if entities.contains_key(&id) {
                return Err(Error::Spec(format!("entity `{id}` is declared twice")));
            }
            entities.insert(id, value);
        }
        Ok(Multeity { entities })
    }

    pub fn get(&self, id: &str) -> Option<&FuzzyScalar> {
        self.entities.get(id)
    }

    pub fn contains(&self, id: &str) -> bool {
        self.entities.contains_key(id)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&EntityId, &FuzzyScalar)> {
        self.entities.iter()
    }

    pub fn len(&self) -> usize {
        self.entities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entities.is_empty()
    }

    fn lookup(&self, id: &str) -> Result<&FuzzyScalar> {
        self.get(id).ok_or_else(|| Error::Spec(format!("unknown entity `{id}`")))
    }

    fn set(&mut self, id: &str, value: FuzzyScalar) {
        *self.entities.get_mut(id).expect("entity checked before the write") = value;
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Scenario {
    pub initial: Multeity,
    pub steps: Vec<OperatorSpec>,
    pub options: Options,
}

/// A reason a scenario cannot run. Step indices count from 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Diagnostic {
    NegativeCardinal { entity: EntityId },
    UnknownEntity { step: usize, entity: EntityId },
    OperandIsImage { step: usize, entity: EntityId },
    RepeatedEntity { step: usize, entity: EntityId },
    BadValence { step: usize, form: Form, operands: usize, images: usize },
    LengthMismatch { step: usize, message: String },
    InvalidRadix { step: usize, operand: EntityId },
    RepresentationMix { step: usize },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::NegativeCardinal { entity } => write!(f, "entity `{entity}` has a negative cardinal"),
            Diagnostic::UnknownEntity { step, entity } => write!(f, "step {step}: unknown entity `{entity}`"),
            Diagnostic::OperandIsImage { step, entity } => {
                write!(f, "step {step}: `{entity}` is both an operand and an image")
            }
            Diagnostic::RepeatedEntity { step, entity } => write!(f, "step {step}: `{entity}` is listed twice"),
            Diagnostic::BadValence { step, form, operands, images } => {
                write!(f, "step {step}: {form}-operator cannot have {operands} operand(s) and {images} image(s)")
            }
            Diagnostic::LengthMismatch { step, message } => write!(f, "step {step}: {message}"),
            Diagnostic::InvalidRadix { step, operand } => {
                write!(f, "step {step}: radix of `{operand}` can be below 1")
            }
            Diagnostic::RepresentationMix { step } => {
                write!(f, "step {step}: discrete and triangular values meet in one operator")
            }
        }
    }
}

/// Every statically detectable problem, in step order. Empty iff the
/// scenario is runnable up to arithmetic that depends on values (such as a
/// fuzzy dividend that went negative in an earlier step).
pub fn validate(s: &Scenario) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    for (id, value) in s.initial.iter() {
        if value.min_value() < 0 {
            out.push(Diagnostic::NegativeCardinal { entity: id.clone() });
        }
    }

    let mut families: IndexMap<&str, Family> = s.initial.iter().map(|(id, v)| (id.as_str(), v.family())).collect();
    for (step, spec) in s.steps.iter().enumerate() {
        if !spec.form.accepts(spec.operands.len(), spec.images.len()) {
            out.push(Diagnostic::BadValence {
                step,
                form: spec.form,
                operands: spec.operands.len(),
                images: spec.images.len(),
            });
        }
        if spec.radices.len() != spec.operands.len() || spec.rates.len() != spec.images.len() {
            let message = crate::operator::check_lengths(
                spec.operands.len(),
                spec.radices.len(),
                spec.images.len(),
                spec.rates.len(),
            )
            .err()
            .map(|e| match e {
                Error::Spec(m) => m,
                other => other.to_string(),
            })
            .unwrap_or_default();
            out.push(Diagnostic::LengthMismatch { step, message });
        }

        let mut seen = HashSet::new();
        let mut known = true;
        for id in spec.operands.iter().chain(&spec.images) {
            if !s.initial.contains(id) {
                known = false;
                out.push(Diagnostic::UnknownEntity { step, entity: id.clone() });
            } else if !seen.insert(id.as_str()) {
                let diagnostic = if spec.operands.contains(id) && spec.images.contains(id) {
                    Diagnostic::OperandIsImage { step, entity: id.clone() }
                } else {
                    Diagnostic::RepeatedEntity { step, entity: id.clone() }
                };
                out.push(diagnostic);
            }
        }

        for (id, radix) in spec.operands.iter().zip(&spec.radices) {
            if radix.min_value() < 1 {
                out.push(Diagnostic::InvalidRadix { step, operand: id.clone() });
            }
        }

        if !known {
            continue;
        }
        let args = spec
            .operands
            .iter()
            .chain(&spec.images)
            .map(|id| families[id.as_str()])
            .chain(spec.radices.iter().chain(&spec.rates).map(FuzzyScalar::family));
        match join_families(args) {
            Some(family) => {
                for id in spec.operands.iter().chain(&spec.images) {
                    families[id.as_str()] = family;
                }
            }
            None => out.push(Diagnostic::RepresentationMix { step }),
        }
    }
    out
}

fn join_families(fs: impl IntoIterator<Item = Family>) -> Option<Family> {
    let mut family = Family::Crisp;
    for f in fs {
        family = match (family, f) {
            (acc, Family::Crisp) => acc,
            (Family::Crisp, g) => g,
            (acc, g) if acc == g => acc,
            _ => return None,
        };
    }
    Some(family)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub step: usize,
    pub form: Form,
    pub result: TransformResult,
    /// The multeity right after this step.
    pub multeity: Multeity,
}

/// A warning raised by one step, with the entity it concerns when known.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepWarning {
    pub step: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entity: Option<EntityId>,
    pub warning: Warning,
}

impl fmt::Display for StepWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.entity, &self.warning) {
            (Some(id), Warning::NegativeRemainder { min, clamped, .. }) => {
                write!(f, "step {}: remainder of `{id}` has negative lower bound {min}", self.step)?;
                if *clamped {
                    f.write_str(" (clamped to 0)")?;
                }
                Ok(())
            }
            (_, w) => write!(f, "step {}: {w}", self.step),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Trace {
    pub entries: Vec<TraceEntry>,
    pub warnings: Vec<StepWarning>,
    #[serde(rename = "final")]
    pub final_state: Multeity,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("step {step}: {source}")]
pub struct RunError {
    pub step: usize,
    pub source: Error,
}

/// Apply every step in order.
pub fn run(s: &Scenario) -> std::result::Result<Trace, RunError> {
    let mut state = s.initial.clone();
    let mut entries = Vec::with_capacity(s.steps.len());
    let mut warnings = Vec::new();
    for (step, spec) in s.steps.iter().enumerate() {
        let result = run_step(&mut state, spec, &s.options).map_err(|source| RunError { step, source })?;
        warnings.extend(result.warnings.iter().map(|w| StepWarning {
            step,
            entity: match w {
                Warning::NegativeRemainder { operand, .. } => spec.operands.get(*operand).cloned(),
                Warning::NegativeSupport { .. } => None,
            },
            warning: w.clone(),
        }));
        entries.push(TraceEntry { step, form: spec.form, result, multeity: state.clone() });
    }
    Ok(Trace { entries, warnings, final_state: state })
}

fn run_step(state: &mut Multeity, spec: &OperatorSpec, opts: &Options) -> Result<TransformResult> {
    spec.check_shape()?;
    let mut seen = HashSet::new();
    if let Some(dup) = spec.operands.iter().chain(&spec.images).find(|id| !seen.insert(id.as_str())) {
        return Err(Error::Spec(format!("`{dup}` appears more than once in the step")));
    }
    let read = |ids: &[EntityId]| ids.iter().map(|id| state.lookup(id).cloned()).collect::<Result<Vec<_>>>();
    let (operands, images) = (read(&spec.operands)?, read(&spec.images)?);
    call_family(operands.iter().chain(&images).chain(&spec.radices).chain(&spec.rates))?;

    let t = apply(spec.form, &operands, &images, &spec.radices, &spec.rates, opts)?;
    for (id, rem) in spec.operands.iter().zip(&t.remainders) {
        state.set(id, rem.clone());
    }
    for (id, img) in spec.images.iter().zip(&t.images) {
        state.set(id, img.clone());
    }
    Ok(TransformResult::from_transform(spec, t))
}
