//! Common-carry formation for operators with several operands.
//!
//! With fuzzy partial carries the common carry is built from all of them
//! rather than picked as the smallest. Triangular partials use the
//! componentwise minimum of lower bound, mode and upper bound. Discrete
//! partials follow a pairwise rule:
//!
//! * disjoint supports: the partial with the smaller mode wins outright;
//! * intersecting supports: on the union of supports, the mode is the
//!   smaller of the two modes, grades below it are the larger of the two
//!   partial grades, grades above it the smaller (an absent value has
//!   grade 0, so it drops out above the mode).
//!
//! More than two discrete partials are folded left to right in operand
//! order. The pairwise rule is not known to be associative, so the order is
//! part of the contract.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::fuznum::{DiscreteFuzzyNumber, Grade, TriangularFuzzyNumber};

pub fn common_carry_tri(partials: &[TriangularFuzzyNumber]) -> Result<TriangularFuzzyNumber> {
    if partials.is_empty() {
        return Err(Error::Spec("common carry of zero partial carries".into()));
    }
    if let Some(neg) = partials.iter().find(|p| !p.is_nonnegative()) {
        return Err(Error::Domain(format!("partial carry {neg} is negative")));
    }
    let min_by = |f: fn(&TriangularFuzzyNumber) -> i64| partials.iter().map(f).min().expect("nonempty");
    TriangularFuzzyNumber::new(
        min_by(TriangularFuzzyNumber::lower),
        min_by(TriangularFuzzyNumber::mode),
        min_by(TriangularFuzzyNumber::upper),
    )
}

pub fn common_carry_dfn(partials: &[DiscreteFuzzyNumber]) -> Result<DiscreteFuzzyNumber> {
    let (first, rest) =
        partials.split_first().ok_or_else(|| Error::Spec("common carry of zero partial carries".into()))?;
    rest.iter().try_fold(first.clone(), |acc, p| form_pair(&acc, p))
}

/// Pairwise discrete formation.
pub fn form_pair(a: &DiscreteFuzzyNumber, b: &DiscreteFuzzyNumber) -> Result<DiscreteFuzzyNumber> {
    let (mode_a, mode_b) = (a.mode(), b.mode());
    if !a.intersects(b) {
        return Ok(if mode_a <= mode_b { a.clone() } else { b.clone() });
    }

    let mode = mode_a.min(mode_b);
    let union: BTreeSet<i64> = a.points().keys().chain(b.points().keys()).copied().collect();
    let mut out: BTreeMap<i64, Grade> = BTreeMap::new();
    for v in union {
        let (ga, gb) = (a.grade(v), b.grade(v));
        let grade = match v.cmp(&mode) {
            std::cmp::Ordering::Equal => Some(Grade::ONE),
            std::cmp::Ordering::Less => ga.max(gb),
            std::cmp::Ordering::Greater => match (ga, gb) {
                (Some(x), Some(y)) => Some(x.min(y)),
                _ => None,
            },
        };
        if let Some(g) = grade {
            out.insert(v, g);
        }
    }
    DiscreteFuzzyNumber::from_map(out)
}
