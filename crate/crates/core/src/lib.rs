//! Carry operators over crisp and fuzzy cardinals.
//!
//! Cardinals, radices and conversion rates may be crisp naturals, discrete
//! fuzzy numbers (finite integer supports with exact rational grades) or
//! triangular fuzzy numbers. The four operator forms L, D, F and M move whole
//! carry units from operand entities to image entities; [`sns_graph`] chains
//! them over a set of named entities and [`cli`] drives it from scenario
//! files.
//!
//! ```
//! use fuzzy_sns::fuzzy_cso::apply_l;
//! use fuzzy_sns::{FuzzyScalar, Options};
//!
//! let stock: FuzzyScalar = "(4; 7; 9)".parse()?;
//! let (image, radix, rate) = (FuzzyScalar::Crisp(10), FuzzyScalar::Crisp(3), FuzzyScalar::Crisp(2));
//! let t = apply_l(&stock, &image, &radix, &rate, &Options::default())?;
//! assert_eq!(t.partial_carries[0].to_string(), "(1; 2; 3)");
//! assert_eq!(t.remainders[0].to_string(), "(-5; 1; 6)");
//! assert_eq!(t.images[0].to_string(), "(12; 14; 16)");
//! # Ok::<(), fuzzy_sns::Error>(())
//! ```

pub mod carry;
pub mod cli;
pub mod crisp_cso;
pub mod error;
pub mod fuznum;
pub mod fuzzy_cso;
pub mod operator;
pub mod oracle;
pub mod sns_graph;
pub mod warning;

pub use error::{Error, Result};
pub use fuznum::{DiscreteFuzzyNumber, Family, FuzzyScalar, Grade, TriangularFuzzyNumber};
pub use operator::{Form, OperatorSpec, Options, RemainderMode, Transform, TransformResult};
pub use sns_graph::{Multeity, Scenario, Trace};
pub use warning::Warning;
