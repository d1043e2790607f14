//! Bounded brute-force ground truth.
//!
//! Membership is invariant under datum renaming, so it suffices to look at
//! normalized words, where datum `i+1` may only appear after `1..=i` have.
//! For a fixed label sequence of length `k` there are `Bell(k)` of them.
//! Every search here goes shortest first, so reported words are minimal.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::model::{Configuration, DataWord, Letter, RegisterAutomaton, State, Symbol};

/// Maximum word length explored. Finding nothing within the bound is
/// evidence, not proof.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct OracleBound {
    pub max_len: usize,
}

impl OracleBound {
    pub fn new(max_len: usize) -> Self {
        OracleBound { max_len }
    }
}

impl From<usize> for OracleBound {
    fn from(max_len: usize) -> Self {
        OracleBound { max_len }
    }
}

/// Number of set partitions of `k` elements.
pub fn bell(k: usize) -> u64 {
    // Bell triangle.
    let mut row = vec![1u64];
    for _ in 0..k {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        row = next;
    }
    row[0]
}

/// All normalized words of length at most `max_len`, each exactly once,
/// shorter words first and lexicographic (by symbol position, then datum)
/// within a length.
pub fn enumerate_normalized_words(alphabet: &[Symbol], max_len: usize) -> NormalizedWords {
    NormalizedWords {
        alphabet: alphabet.to_vec(),
        max_len,
        current: Some(Vec::new()),
    }
}

#[derive(Debug, Clone)]
pub struct NormalizedWords {
    alphabet: Vec<Symbol>,
    max_len: usize,
    /// Pending word as (symbol index, datum) pairs.
    current: Option<Vec<(usize, u32)>>,
}

impl NormalizedWords {
    fn advance(&mut self, word: &[(usize, u32)]) -> Option<Vec<(usize, u32)>> {
        let mut next = word.to_vec();
        for i in (0..next.len()).rev() {
            let bound = next[..i].iter().map(|&(_, d)| d).max().unwrap_or(0) + 1;
            let (sym, datum) = next[i];
            let bumped = if datum < bound {
                Some((sym, datum + 1))
            } else if sym + 1 < self.alphabet.len() {
                Some((sym + 1, 1))
            } else {
                None
            };
            if let Some(letter) = bumped {
                next[i] = letter;
                for later in &mut next[i + 1..] {
                    *later = (0, 1);
                }
                return Some(next);
            }
        }
        (next.len() < self.max_len && !self.alphabet.is_empty()).then(|| vec![(0, 1); next.len() + 1])
    }
}

impl Iterator for NormalizedWords {
    type Item = DataWord;

    fn next(&mut self) -> Option<DataWord> {
        let word = self.current.take()?;
        self.current = self.advance(&word);
        Some(
            word.iter()
                .map(|&(s, d)| Letter::new(self.alphabet[s].clone(), d))
                .collect(),
        )
    }
}

/// Depth-first walk over normalized words of exactly `len` letters, in the
/// same order as [`enumerate_normalized_words`], carrying a configuration of
/// each automaton. A subtree is skipped once `prune` holds on the current
/// configurations.
fn search_exact<P, F>(
    auts: &[&RegisterAutomaton],
    alphabet: &[Symbol],
    len: usize,
    prune: &P,
    found: &F,
) -> Option<DataWord>
where
    P: Fn(&[Configuration]) -> bool,
    F: Fn(&[Configuration]) -> bool,
{
    fn go<P, F>(
        auts: &[&RegisterAutomaton],
        alphabet: &[Symbol],
        remaining: usize,
        configs: &[Configuration],
        word: &mut Vec<Letter>,
        max_datum: u32,
        prune: &P,
        found: &F,
    ) -> bool
    where
        P: Fn(&[Configuration]) -> bool,
        F: Fn(&[Configuration]) -> bool,
    {
        if remaining == 0 {
            return found(configs);
        }
        if prune(configs) {
            return false;
        }
        for symbol in alphabet {
            for d in 1..=max_datum + 1 {
                let next: Vec<Configuration> = auts
                    .iter()
                    .zip(configs)
                    .map(|(aut, c)| aut.succ_unchecked(c, symbol, d))
                    .collect();
                word.push(Letter::new(symbol.clone(), d));
                if go(
                    auts,
                    alphabet,
                    remaining - 1,
                    &next,
                    word,
                    max_datum.max(d),
                    prune,
                    found,
                ) {
                    return true;
                }
                word.pop();
            }
        }
        false
    }
    let configs: Vec<Configuration> = auts.iter().map(|a| a.initial_config()).collect();
    let mut word = Vec::with_capacity(len);
    go(auts, alphabet, len, &configs, &mut word, 0, prune, found).then(|| DataWord::new(word))
}

fn shortest<P, F>(
    auts: &[&RegisterAutomaton],
    alphabet: &[Symbol],
    bound: OracleBound,
    prune: P,
    found: F,
) -> Option<DataWord>
where
    P: Fn(&[Configuration]) -> bool,
    F: Fn(&[Configuration]) -> bool,
{
    (0..=bound.max_len).find_map(|len| search_exact(auts, alphabet, len, &prune, &found))
}

/// The first normalized word in `L(A) \ L(B)` within the bound.
pub fn oracle_containment(
    a: &RegisterAutomaton,
    b: &RegisterAutomaton,
    bound: impl Into<OracleBound>,
) -> Result<Option<DataWord>> {
    if !a.same_alphabet(b) {
        return Err(Error::AlphabetMismatch);
    }
    Ok(shortest(
        &[a, b],
        a.alphabet(),
        bound.into(),
        |c| c[0].is_empty(),
        |c| a.accepts_config(&c[0]) && !b.accepts_config(&c[1]),
    ))
}

/// The first normalized word rejected by `b` within the bound.
pub fn oracle_universal(b: &RegisterAutomaton, bound: impl Into<OracleBound>) -> Option<DataWord> {
    shortest(
        &[b],
        b.alphabet(),
        bound.into(),
        |_| false,
        |c| !b.accepts_config(&c[0]),
    )
}

/// The first normalized word accepted by exactly one of `a` and `b`.
pub fn oracle_equivalent(
    a: &RegisterAutomaton,
    b: &RegisterAutomaton,
    bound: impl Into<OracleBound>,
) -> Result<Option<DataWord>> {
    if !a.same_alphabet(b) {
        return Err(Error::AlphabetMismatch);
    }
    Ok(shortest(
        &[a, b],
        a.alphabet(),
        bound.into(),
        |c| c[0].is_empty() && c[1].is_empty(),
        |c| a.accepts_config(&c[0]) != b.accepts_config(&c[1]),
    ))
}

/// The first normalized word accepted by `aut` within the bound.
pub fn oracle_emptiness(aut: &RegisterAutomaton, bound: impl Into<OracleBound>) -> Option<DataWord> {
    shortest(
        &[aut],
        aut.alphabet(),
        bound.into(),
        |c| c[0].is_empty(),
        |c| aut.accepts_config(&c[0]),
    )
}

/// A counterexample to `L(A) ⊆ L(B)` of length at most `cap`, re-checked by
/// membership in both automata before it is returned.
pub fn find_witness(a: &RegisterAutomaton, b: &RegisterAutomaton, cap: usize) -> Option<DataWord> {
    let word = oracle_containment(a, b, cap).ok()??;
    let verified = a.membership(&word).ok()? && !b.membership(&word).ok()?;
    verified.then_some(word)
}

/// Number of distinct initialized accepting runs (state sequences) of
/// `aut` on `word`. Saturates at `u64::MAX`.
pub fn count_accepting_runs(aut: &RegisterAutomaton, word: &DataWord) -> Result<u64> {
    let mut counts: BTreeMap<State, u64> = BTreeMap::from([(aut.initial_state(), 1)]);
    for letter in word {
        let mut next: BTreeMap<State, u64> = BTreeMap::new();
        for (state, count) in &counts {
            for t in aut.step_state(state, letter)? {
                let slot = next.entry(t).or_insert(0);
                *slot = slot.saturating_add(*count);
            }
        }
        counts = next;
    }
    Ok(counts
        .iter()
        .filter(|(s, _)| aut.is_accepting(s.location))
        .fold(0u64, |acc, (_, c)| acc.saturating_add(*c)))
}

/// The first normalized word with at least two accepting runs.
pub fn oracle_ambiguity(aut: &RegisterAutomaton, bound: impl Into<OracleBound>) -> Option<DataWord> {
    enumerate_normalized_words(aut.alphabet(), bound.into().max_len)
        .find(|w| count_accepting_runs(aut, w).is_ok_and(|c| c >= 2))
}
