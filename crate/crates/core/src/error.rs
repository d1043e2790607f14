use thiserror::Error;

use crate::model::{DataWord, Symbol};

/// Errors raised while constructing or validating an automaton.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("duplicate location `{0}`")]
    DuplicateLocation(String),
    #[error("duplicate alphabet symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("duplicate register `{0}`")]
    DuplicateRegister(String),
    #[error("location index {0} is out of range")]
    UnknownLocation(usize),
    #[error("edge {edge}: label `{label}` is not in the alphabet")]
    LabelNotInAlphabet { edge: usize, label: String },
    #[error("edge {edge}: register index {register} is out of range")]
    RegisterOutOfRange { edge: usize, register: usize },
    #[error("automaton has no initial location")]
    MissingInitial,
}

/// Errors produced by the decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("label `{0}` is not in the alphabet")]
    UnknownLabel(Symbol),
    #[error("the automata are over different alphabets")]
    AlphabetMismatch,
    #[error("datum {0} lies outside the domain of the partial isomorphism")]
    OutsideDomain(u32),
    #[error("valuation does not occur in the configuration")]
    ValuationAbsent,
    #[error("valuations are distinguishable and may not be collapsed")]
    Distinguishable,
    #[error("automaton is ambiguous: `{witness}` has two accepting runs")]
    Ambiguous { witness: DataWord },
    #[error("search gave up after exploring {nodes} nodes")]
    BudgetExhausted { nodes: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
