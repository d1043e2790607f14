//! Types and indistinguishability, plus emptiness and unambiguity checks.

mod emptiness;
mod search;
mod types;
mod unambiguity;

pub use emptiness::emptiness;
pub use types::{indistinguishable, tp, type_profile, CompleteType, TypeProfile};
pub use unambiguity::{check_unambiguous, Unambiguity};

pub(crate) use types::{profile_of, tp_of_parts};
