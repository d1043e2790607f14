//! The automaton model: data, guards, states, configurations, runs and the
//! isomorphism machinery they are invariant under.

mod automaton;
pub(crate) mod canon;
mod config;
mod data;
mod guard;
mod iso;

pub use automaton::{AutomatonBuilder, Edge, LocId, RegisterAutomaton};
pub use config::{Configuration, State, Valuation};
pub use data::{normalize_word, DataValue, DataWord, Letter, Symbol};
pub use guard::{Guard, GuardDisplay};
pub use iso::{configs_equivalent, PartialIso};
