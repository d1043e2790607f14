use super::search::shortest_witness;
use crate::model::{DataWord, LocId, RegisterAutomaton, State, Valuation};

/// A shortest word accepted by `aut`, or `None` if its language is empty.
///
/// Explores states up to datum renaming; from a state holding `t` distinct
/// datums the candidate input datums are those `t` plus one fresh one.
pub fn emptiness(aut: &RegisterAutomaton) -> Option<DataWord> {
    let start = aut.initial_state();
    shortest_witness(
        aut.alphabet(),
        (start.location, start.valuation.into_values()),
        |&loc: &LocId, val, symbol, d| {
            let state = State::new(loc, Valuation::new(val.to_vec()));
            aut.step_unchecked(&state, symbol, d)
                .into_iter()
                .map(|s| (s.location, s.valuation.into_values()))
                .collect()
        },
        |&loc| aut.is_accepting(loc),
    )
}
