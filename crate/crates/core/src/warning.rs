use std::fmt;

use serde::Serialize;

/// Non-fatal findings attached to results: values that left the naturals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Warning {
    /// A discrete result whose support dips below zero.
    NegativeSupport { min: i64 },
    /// An operand remainder with a negative lower bound. `operand` is the
    /// position in the operator's operand list.
    NegativeRemainder { operand: usize, min: i64, clamped: bool },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::NegativeSupport { min } => {
                write!(f, "result support reaches {min}, below the naturals")
            }
            Warning::NegativeRemainder { operand, min, clamped } => {
                write!(f, "remainder of operand {operand} has negative lower bound {min}")?;
                if *clamped {
                    f.write_str(" (clamped to 0)")?;
                }
                Ok(())
            }
        }
    }
}
