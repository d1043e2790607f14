//! Containment of an arbitrary register automaton in an unambiguous one.
//!
//! The synchronized state space pairs a single state of `A` with the whole
//! configuration of `B`. A bad node (`A` accepting, no `B`-state accepting)
//! is reachable iff containment fails. `B`-configurations are collapsed by
//! removing indistinguishable valuation slices, and nodes are stored as
//! canonical [`AbstractConfig`]s, which leaves finitely many to explore.

mod abstraction;
mod collapse;
mod engine;
mod sync;

pub use abstraction::{abstract_of, AbstractConfig};
pub use collapse::{collapse_max, collapse_once, CollapseRule};
pub use engine::{
    abstract_successors, check_containment, check_equivalent, check_universal, AbstractStep, ContainmentOptions,
    ContainmentReport, Verdict,
};
pub use sync::{initial_sync, is_bad, sync_step, sync_successors, SyncConfig};
