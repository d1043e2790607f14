use super::search::shortest_witness;
use crate::model::{DataValue, DataWord, LocId, RegisterAutomaton, State, Valuation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Unambiguity {
    Unambiguous,
    /// `witness` has at least two distinct initialized accepting runs.
    Ambiguous {
        witness: DataWord,
    },
}

impl Unambiguity {
    pub fn is_unambiguous(&self) -> bool {
        matches!(self, Unambiguity::Unambiguous)
    }
}

/// Whether some word has two initialized accepting runs, runs being
/// identified with their state sequences.
///
/// Searches ordered pairs of states that read the same word, both register
/// banks renamed jointly, with a flag recording whether the two runs have
/// differed at some point.
pub fn check_unambiguous(aut: &RegisterAutomaton) -> Unambiguity {
    let n = aut.register_count();
    let init = aut.initial_state();
    let tuple: Vec<DataValue> = init.valuation.iter().chain(init.valuation.iter()).copied().collect();
    let found = shortest_witness(
        aut.alphabet(),
        ((init.location, init.location, false), tuple),
        |&(l1, l2, diverged): &(LocId, LocId, bool), joint, symbol, d| {
            let s1 = State::new(l1, Valuation::new(joint[..n].to_vec()));
            let s2 = State::new(l2, Valuation::new(joint[n..].to_vec()));
            let next1 = aut.step_unchecked(&s1, symbol, d);
            let next2 = aut.step_unchecked(&s2, symbol, d);
            let mut out = Vec::with_capacity(next1.len() * next2.len());
            for t1 in &next1 {
                for t2 in &next2 {
                    let tuple = t1.valuation.iter().chain(t2.valuation.iter()).copied().collect();
                    out.push(((t1.location, t2.location, diverged || t1 != t2), tuple));
                }
            }
            out
        },
        |&(l1, l2, diverged)| diverged && aut.is_accepting(l1) && aut.is_accepting(l2),
    );
    match found {
        Some(witness) => Unambiguity::Ambiguous { witness },
        None => Unambiguity::Unambiguous,
    }
}
