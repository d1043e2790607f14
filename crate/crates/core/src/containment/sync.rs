use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::model::{Configuration, DataValue, Letter, RegisterAutomaton, State};

/// One state of `A` paired with the configuration `B` is in after reading
/// the same word. The register banks of the two automata are separate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SyncConfig {
    pub a_state: State,
    pub b_config: Configuration,
}

impl SyncConfig {
    pub fn new(a_state: State, b_config: Configuration) -> Self {
        SyncConfig { a_state, b_config }
    }

    /// All register contents, `Bot` included when present.
    pub fn data(&self) -> BTreeSet<DataValue> {
        self.a_state
            .valuation
            .iter()
            .chain(self.b_config.iter().flat_map(|s| s.valuation.iter()))
            .copied()
            .collect()
    }

    pub(crate) fn max_datum(&self) -> u32 {
        self.data().into_iter().filter_map(DataValue::datum).max().unwrap_or(0)
    }

    /// Number of distinct `B`-valuations.
    pub fn valuation_count(&self) -> usize {
        self.b_config.valuations().len()
    }
}

impl fmt::Display for SyncConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({}, {}), {{", self.a_state.location, self.a_state.valuation)?;
        for (i, s) in self.b_config.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({}, {})", s.location, s.valuation)?;
        }
        f.write_str("})")
    }
}

/// `((ℓ_in^A, ⊥^m), {(ℓ_in^B, ⊥^n)})`.
pub fn initial_sync(a: &RegisterAutomaton, b: &RegisterAutomaton) -> SyncConfig {
    SyncConfig::new(a.initial_state(), b.initial_config())
}

/// `A` accepts while no state of `B` does.
pub fn is_bad(a: &RegisterAutomaton, b: &RegisterAutomaton, sync: &SyncConfig) -> bool {
    a.is_accepting(sync.a_state.location) && !b.accepts_config(&sync.b_config)
}

/// Successors of `sync` on one given letter: one per `A`-transition, each
/// paired with the full `B` successor configuration.
pub fn sync_step(
    a: &RegisterAutomaton,
    b: &RegisterAutomaton,
    sync: &SyncConfig,
    letter: &Letter,
) -> Result<BTreeSet<SyncConfig>> {
    if !a.has_symbol(&letter.symbol) || !b.has_symbol(&letter.symbol) {
        return Err(Error::UnknownLabel(letter.symbol.clone()));
    }
    let mut out = BTreeSet::new();
    step_into(a, b, sync, letter, &mut |_, s| {
        out.insert(s);
    });
    Ok(out)
}

fn step_into(
    a: &RegisterAutomaton,
    b: &RegisterAutomaton,
    sync: &SyncConfig,
    letter: &Letter,
    sink: &mut impl FnMut(&Letter, SyncConfig),
) {
    let a_next = a.step_unchecked(&sync.a_state, &letter.symbol, letter.datum);
    if a_next.is_empty() {
        return;
    }
    let b_next = b.succ_unchecked(&sync.b_config, &letter.symbol, letter.datum);
    for s in a_next {
        sink(letter, SyncConfig::new(s, b_next.clone()));
    }
}

/// Successors over every symbol and every datum of `sync` plus the given
/// fresh one, tagged with the letter read.
pub(crate) fn successors_with(
    a: &RegisterAutomaton,
    b: &RegisterAutomaton,
    sync: &SyncConfig,
    fresh: u32,
) -> Vec<(Letter, SyncConfig)> {
    let mut data: Vec<u32> = sync.data().into_iter().filter_map(DataValue::datum).collect();
    debug_assert!(!data.contains(&fresh));
    data.push(fresh);
    let mut out = Vec::new();
    for symbol in a.alphabet() {
        for &d in &data {
            let letter = Letter::new(symbol.clone(), d);
            step_into(a, b, sync, &letter, &mut |l, s| out.push((l.clone(), s)));
        }
    }
    out
}

/// All successors of `sync`, up to the choice of fresh datum: the datums
/// tried are those of `sync` plus one fresh representative.
pub fn sync_successors(a: &RegisterAutomaton, b: &RegisterAutomaton, sync: &SyncConfig) -> BTreeSet<SyncConfig> {
    successors_with(a, b, sync, sync.max_datum() + 1)
        .into_iter()
        .map(|(_, s)| s)
        .collect()
}
