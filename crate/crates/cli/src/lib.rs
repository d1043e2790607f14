//! File format, parsers and command-line front end for `regauto`.

mod app;
pub mod document;
pub mod guard;
pub mod word;

pub use app::{run, run_cli, Outcome, EXIT_ERROR, EXIT_FAILS, EXIT_HOLDS};
pub use document::{
    load_automaton, parse_automaton, serialize_automaton, AutomatonDocument, DocumentError, EdgeDocument,
};
pub use guard::{parse_guard, GuardError};
pub use word::{format_word, parse_word, WordError};
