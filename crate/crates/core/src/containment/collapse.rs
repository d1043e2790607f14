use super::SyncConfig;
use crate::analysis::{indistinguishable, profile_of, tp_of_parts};
use crate::error::{Error, Result};
use crate::model::Valuation;

/// Which valuation pairs the search may merge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CollapseRule {
    /// Merge indistinguishable valuations. Sound when `B` is unambiguous.
    #[default]
    Indistinguishable,
    /// Merge valuations having the same type relative to the `A`-valuation.
    /// Unsound; kept for differential testing of the real rule.
    SameType,
    /// Never merge. The search then only terminates on its node budget
    /// unless the synchronized space happens to be finite.
    Off,
}

/// Drops the slice `C_b` (every `B`-state with valuation exactly `b`).
/// Requires `a ≠ b` and `a ≍ b`.
pub fn collapse_once(sync: &SyncConfig, a: &Valuation, b: &Valuation) -> Result<SyncConfig> {
    if a == b {
        return Err(Error::Distinguishable);
    }
    if !indistinguishable(sync, a, b)? {
        return Err(Error::Distinguishable);
    }
    let mut out = sync.clone();
    out.b_config.remove_slice(b);
    Ok(out)
}

/// Collapses until no two distinct valuations are indistinguishable.
///
/// Pairs are scanned in valuation order and the larger valuation's slice is
/// the one removed, so the result is deterministic.
pub fn collapse_max(sync: &SyncConfig) -> SyncConfig {
    collapse_with(sync, CollapseRule::Indistinguishable)
}

pub(crate) fn collapse_with(sync: &SyncConfig, rule: CollapseRule) -> SyncConfig {
    let mut current = sync.clone();
    if rule == CollapseRule::Off {
        return current;
    }
    let d = current.a_state.valuation.clone();
    loop {
        let victim = {
            let slices = current.b_config.slices();
            let vals: Vec<&Valuation> = slices.keys().copied().collect();
            let victim = match rule {
                CollapseRule::Indistinguishable => {
                    let profiles: Vec<_> = vals.iter().map(|a| profile_of(&slices, a, &d)).collect();
                    first_equal_pair(&profiles)
                }
                CollapseRule::SameType => {
                    let types: Vec<_> = vals.iter().map(|a| tp_of_parts(&[a, &d])).collect();
                    first_equal_pair(&types)
                }
                CollapseRule::Off => unreachable!(),
            };
            victim.map(|j| vals[j].clone())
        };
        match victim {
            Some(b) => current.b_config.remove_slice(&b),
            None => return current,
        }
    }
}

/// Index `j` of the first pair `i < j` (in lexicographic order) with equal keys.
fn first_equal_pair<K: PartialEq>(keys: &[K]) -> Option<usize> {
    for i in 0..keys.len() {
        for j in i + 1..keys.len() {
            if keys[i] == keys[j] {
                return Some(j);
            }
        }
    }
    None
}
