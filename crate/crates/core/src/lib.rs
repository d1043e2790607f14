//! Register automata over an infinite domain with equality.
//!
//! The crate decides membership, emptiness and unambiguity, and the
//! containment `L(A) ⊆ L(B)` of an arbitrary register automaton `A` in an
//! unambiguous one `B`. Containment is reduced to reachability of a bad
//! synchronized configuration; configurations of `B` are kept small by
//! collapsing indistinguishable valuation slices, and the search runs over
//! canonical abstract configurations, which makes it finite.
//!
//! A bounded brute-force [`oracle`] enumerates normalized words and serves
//! as ground truth in tests and for extracting concrete counterexamples.
//!
//! ```
//! use regauto::{check_containment, samples, ContainmentOptions, Verdict};
//!
//! let a = samples::four_letter();
//! let b = samples::three_way_split();
//! let report = check_containment(&a, &b, &ContainmentOptions::default()).unwrap();
//! assert_eq!(report.verdict, Verdict::Contained);
//! ```

pub mod analysis;
pub mod containment;
mod error;
pub mod model;
pub mod oracle;
pub mod samples;

pub use analysis::{
    check_unambiguous, emptiness, indistinguishable, tp, type_profile, CompleteType, TypeProfile, Unambiguity,
};
pub use containment::{
    abstract_of, check_containment, check_equivalent, check_universal, collapse_max, collapse_once, initial_sync,
    is_bad, sync_step, sync_successors, AbstractConfig, CollapseRule, ContainmentOptions, ContainmentReport,
    SyncConfig, Verdict,
};
pub use error::{Error, ModelError, Result};
pub use model::{
    configs_equivalent, normalize_word, Configuration, DataValue, DataWord, Guard, Letter, LocId, PartialIso,
    RegisterAutomaton, State, Symbol, Valuation,
};
