//! Operator signatures and the shapes of their results.

use std::fmt;
use std::str::FromStr;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fuznum::FuzzyScalar;
use crate::warning::Warning;

/// Identifier of an abstract entity in a multeity.
pub type EntityId = String;

/// Operator form. The kind is always carry; no other kind is modelled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Form {
    /// Line: one operand, one image.
    L,
    /// Distribution: one operand, several images.
    D,
    /// Fusion: several operands, one image.
    F,
    /// Multi: several operands, several images.
    M,
}

impl Form {
    pub const ALL: [Form; 4] = [Form::L, Form::D, Form::F, Form::M];

    /// Whether `(operands, images)` is a legal valence for this form.
    pub fn accepts(self, operands: usize, images: usize) -> bool {
        match self {
            Form::L => operands == 1 && images == 1,
            Form::D => operands == 1 && images >= 2,
            Form::F => operands >= 2 && images == 1,
            Form::M => operands >= 2 && images >= 2,
        }
    }

    pub fn check_valence(self, operands: usize, images: usize) -> Result<()> {
        if self.accepts(operands, images) {
            Ok(())
        } else {
            Err(Error::Spec(format!("{self}-operator cannot have valence ({operands}, {images})")))
        }
    }

    /// Forms with several operands form a common carry.
    pub fn has_common_carry(self) -> bool {
        matches!(self, Form::F | Form::M)
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::L => "L",
            Form::D => "D",
            Form::F => "F",
            Form::M => "M",
        })
    }
}

impl FromStr for Form {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "L" => Ok(Form::L),
            "D" => Ok(Form::D),
            "F" => Ok(Form::F),
            "M" => Ok(Form::M),
            other => {
                Err(Error::Parse { input: other.to_string(), reason: "operator form must be one of L, D, F, M".into() })
            }
        }
    }
}

/// How an L/D remainder over discrete cardinals is computed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RemainderMode {
    /// `t ↦ t − ⌊t/s⌋·s` per support pair, so each remainder stays tied to
    /// the carry it came from.
    #[default]
    Correlated,
    /// `N ⊖ (p ⊗ n)` over the full cross product.
    Extension,
}

impl fmt::Display for RemainderMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RemainderMode::Correlated => "correlated",
            RemainderMode::Extension => "extension",
        })
    }
}

impl FromStr for RemainderMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "correlated" => Ok(RemainderMode::Correlated),
            "extension" => Ok(RemainderMode::Extension),
            other => Err(Error::Parse {
                input: other.to_string(),
                reason: "remainder mode must be `correlated` or `extension`".into(),
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Options {
    pub remainder_mode: RemainderMode,
    /// Clamp negative remainder values to zero instead of keeping them.
    pub clamp_negative: bool,
}

/// Which operator arguments carry fuzziness, in the five combinations the
/// triangular formulas are written for. The image cardinal is not part of
/// the classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FuzzinessPattern {
    Cardinal,
    Radix,
    Rate,
    RadixRate,
    Whole,
}

impl FuzzinessPattern {
    pub const ALL: [FuzzinessPattern; 5] = [
        FuzzinessPattern::Cardinal,
        FuzzinessPattern::Radix,
        FuzzinessPattern::Rate,
        FuzzinessPattern::RadixRate,
        FuzzinessPattern::Whole,
    ];

    pub fn classify(operands: &[FuzzyScalar], radices: &[FuzzyScalar], rates: &[FuzzyScalar]) -> Option<Self> {
        let fuzzy = |xs: &[FuzzyScalar]| xs.iter().any(|x| !matches!(x, FuzzyScalar::Crisp(_)));
        match (fuzzy(operands), fuzzy(radices), fuzzy(rates)) {
            (true, false, false) => Some(FuzzinessPattern::Cardinal),
            (false, true, false) => Some(FuzzinessPattern::Radix),
            (false, false, true) => Some(FuzzinessPattern::Rate),
            (false, true, true) => Some(FuzzinessPattern::RadixRate),
            (true, true, true) => Some(FuzzinessPattern::Whole),
            _ => None,
        }
    }

    pub fn fuzzy_cardinals(self) -> bool {
        matches!(self, FuzzinessPattern::Cardinal | FuzzinessPattern::Whole)
    }

    pub fn fuzzy_radices(self) -> bool {
        matches!(self, FuzzinessPattern::Radix | FuzzinessPattern::RadixRate | FuzzinessPattern::Whole)
    }

    pub fn fuzzy_rates(self) -> bool {
        matches!(self, FuzzinessPattern::Rate | FuzzinessPattern::RadixRate | FuzzinessPattern::Whole)
    }
}

/// Signature of one operator placed in a multeity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorSpec {
    pub form: Form,
    pub operands: Vec<EntityId>,
    pub images: Vec<EntityId>,
    /// One radix per operand.
    pub radices: Vec<FuzzyScalar>,
    /// One conversion rate per image.
    pub rates: Vec<FuzzyScalar>,
}

impl OperatorSpec {
    /// Valence and vector-length checks.
    pub fn check_shape(&self) -> Result<()> {
        self.form.check_valence(self.operands.len(), self.images.len())?;
        check_lengths(self.operands.len(), self.radices.len(), self.images.len(), self.rates.len())
    }
}

pub(crate) fn check_lengths(operands: usize, radices: usize, images: usize, rates: usize) -> Result<()> {
    if radices != operands {
        return Err(Error::Spec(format!("{operands} operands but {radices} radices")));
    }
    if rates != images {
        return Err(Error::Spec(format!("{images} images but {rates} conversion rates")));
    }
    Ok(())
}

/// Positional result of one operator application. Carries and remainders
/// follow operand order; transformants and images follow image order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transform<T> {
    pub partial_carries: Vec<T>,
    /// Present for F and M.
    pub common_carry: Option<T>,
    pub remainders: Vec<T>,
    pub transformants: Vec<T>,
    /// Updated image cardinals.
    pub images: Vec<T>,
    pub warnings: Vec<Warning>,
}

impl<T> Transform<T> {
    pub fn map<U>(self, mut f: impl FnMut(T) -> U) -> Transform<U> {
        Transform {
            partial_carries: self.partial_carries.into_iter().map(&mut f).collect(),
            common_carry: self.common_carry.map(&mut f),
            remainders: self.remainders.into_iter().map(&mut f).collect(),
            transformants: self.transformants.into_iter().map(&mut f).collect(),
            images: self.images.into_iter().map(&mut f).collect(),
            warnings: self.warnings,
        }
    }

    /// The carry that feeds the transformants: the common carry when there is
    /// one, otherwise the single partial carry.
    pub fn effective_carry(&self) -> &T {
        self.common_carry.as_ref().unwrap_or(&self.partial_carries[0])
    }

    pub fn values(&self) -> impl Iterator<Item = &T> {
        self.partial_carries
            .iter()
            .chain(self.common_carry.iter())
            .chain(&self.remainders)
            .chain(&self.transformants)
            .chain(&self.images)
    }
}

/// A [`Transform`] keyed by the entity ids of its operator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransformResult {
    pub partial_carries: IndexMap<EntityId, FuzzyScalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub common_carry: Option<FuzzyScalar>,
    pub remainders: IndexMap<EntityId, FuzzyScalar>,
    pub transformants: IndexMap<EntityId, FuzzyScalar>,
    pub new_image_cardinals: IndexMap<EntityId, FuzzyScalar>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<Warning>,
}

impl TransformResult {
    pub fn from_transform(spec: &OperatorSpec, t: Transform<FuzzyScalar>) -> Self {
        let zip = |ids: &[EntityId], vals: Vec<FuzzyScalar>| ids.iter().cloned().zip(vals).collect();
        TransformResult {
            partial_carries: zip(&spec.operands, t.partial_carries),
            common_carry: t.common_carry,
            remainders: zip(&spec.operands, t.remainders),
            transformants: zip(&spec.images, t.transformants),
            new_image_cardinals: zip(&spec.images, t.images),
            warnings: t.warnings,
        }
    }
}
