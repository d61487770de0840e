//! Closed-form values and bounds for planar Turán numbers, and a sufficient
//! condition classifier for `ex_P(n, H) = 3n − 6`.

mod classify;
mod reference;
mod tables;
mod value;

use thiserror::Error;

use crate::patterns::PatternError;

pub use classify::{classify_pattern, verify_verdict, Condition, Verdict, WitnessFamily};
pub use reference::{reference_bounds, ReferenceGraph};
pub use tables::formula_value;
pub use value::{floor_bound, strict_floor_bound, TuranValue};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("no closed form applies to {pattern} at n = {n}")]
    NoTheorem { pattern: String, n: usize },
    #[error("{pattern} needs n >= {min}, got {n}")]
    BelowRange { pattern: String, n: usize, min: usize },
    #[error("pattern is not planar")]
    NotPlanar,
    #[error("the classifier does not cover this graph")]
    NotCovered,
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error("could not build the witness family: {0}")]
    Construction(String),
}

/// `3n − 6`, or `n(n−1)/2` below three vertices.
pub(crate) fn planar_max(n: usize) -> usize {
    if n >= 3 {
        3 * n - 6
    } else {
        n * n.saturating_sub(1) / 2
    }
}
