//! Words, elements and the rewriting engine of the algebra.

mod element;
mod engine;
mod relations;
mod word;

use thiserror::Error;

use crate::coeffs::CoeffError;

pub use element::Element;
pub use relations::{all_relations, type_a_relations, type_b_relations, Relation};
pub use engine::{spanning_set, Engine};
pub use word::{
    bar_word, check_range, expand_macro, format_word, parse_word, star_word, word_level, yprime, yprime_inv, ysub,
    ysub_inv, Letter, Macro, Word, WordError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Word(WordError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error("relation {name} does not hold: {residual}")]
    Mismatch { name: String, residual: String },
    #[error("strand counts differ: {0} and {1}")]
    StrandMismatch(usize, usize),
    #[error("malformed line: {0}")]
    Parse(String),
    #[error("reduction exceeded {0} steps")]
    StepCap(usize),
}
