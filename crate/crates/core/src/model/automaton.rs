use std::collections::BTreeSet;
use std::fmt;

use super::{Configuration, DataWord, Guard, Letter, State, Symbol, Valuation};
use crate::error::{Error, ModelError, Result};

/// Index of a location within its automaton.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LocId(pub usize);

impl fmt::Display for LocId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    pub from: LocId,
    pub label: Symbol,
    pub guard: Guard,
    /// Registers overwritten with the input datum, sorted and deduplicated.
    pub update: Vec<usize>,
    pub to: LocId,
}

/// A register automaton `(R, L, ℓ_in, L_acc, E)` over a finite alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegisterAutomaton {
    alphabet: Vec<Symbol>,
    registers: Vec<String>,
    locations: Vec<String>,
    initial: LocId,
    accepting: Vec<bool>,
    edges: Vec<Edge>,
    outgoing: Vec<Vec<usize>>,
}

impl RegisterAutomaton {
    pub fn builder<S, R>(alphabet: S, registers: R) -> AutomatonBuilder
    where
        S: IntoIterator,
        S::Item: Into<Symbol>,
        R: IntoIterator,
        R::Item: Into<String>,
    {
        AutomatonBuilder {
            alphabet: alphabet.into_iter().map(Into::into).collect(),
            registers: registers.into_iter().map(Into::into).collect(),
            locations: Vec::new(),
            initial: None,
            accepting: BTreeSet::new(),
            edges: Vec::new(),
        }
    }

    /// Validates and assembles an automaton.
    pub fn new(
        alphabet: Vec<Symbol>,
        registers: Vec<String>,
        locations: Vec<String>,
        initial: LocId,
        accepting: impl IntoIterator<Item = LocId>,
        edges: Vec<Edge>,
    ) -> Result<Self, ModelError> {
        for (i, s) in alphabet.iter().enumerate() {
            if alphabet[..i].contains(s) {
                return Err(ModelError::DuplicateSymbol(s.to_string()));
            }
        }
        for (i, r) in registers.iter().enumerate() {
            if registers[..i].contains(r) {
                return Err(ModelError::DuplicateRegister(r.clone()));
            }
        }
        for (i, l) in locations.iter().enumerate() {
            if locations[..i].contains(l) {
                return Err(ModelError::DuplicateLocation(l.clone()));
            }
        }
        let in_range = |l: LocId| {
            if l.0 < locations.len() {
                Ok(())
            } else {
                Err(ModelError::UnknownLocation(l.0))
            }
        };
        in_range(initial)?;
        let mut acc = vec![false; locations.len()];
        for l in accepting {
            in_range(l)?;
            acc[l.0] = true;
        }
        let mut outgoing = vec![Vec::new(); locations.len()];
        let mut edges = edges;
        for (i, e) in edges.iter_mut().enumerate() {
            in_range(e.from)?;
            in_range(e.to)?;
            if !alphabet.contains(&e.label) {
                return Err(ModelError::LabelNotInAlphabet {
                    edge: i,
                    label: e.label.to_string(),
                });
            }
            e.update.sort_unstable();
            e.update.dedup();
            let worst = e.guard.max_register().into_iter().chain(e.update.last().copied()).max();
            if let Some(r) = worst.filter(|&r| r >= registers.len()) {
                return Err(ModelError::RegisterOutOfRange { edge: i, register: r });
            }
            outgoing[e.from.0].push(i);
        }
        Ok(RegisterAutomaton {
            alphabet,
            registers,
            locations,
            initial,
            accepting: acc,
            edges,
            outgoing,
        })
    }

    /// One location with a `true` self-loop per symbol, zero registers, and
    /// an accepting initial location: accepts every data word.
    pub fn universal(alphabet: &[Symbol]) -> Self {
        let edges = alphabet
            .iter()
            .map(|s| Edge {
                from: LocId(0),
                label: s.clone(),
                guard: Guard::True,
                update: Vec::new(),
                to: LocId(0),
            })
            .collect();
        RegisterAutomaton::new(
            alphabet.to_vec(),
            Vec::new(),
            vec!["all".to_string()],
            LocId(0),
            [LocId(0)],
            edges,
        )
        .expect("universal automaton is well formed")
    }

    pub fn alphabet(&self) -> &[Symbol] {
        &self.alphabet
    }

    pub fn register_count(&self) -> usize {
        self.registers.len()
    }

    pub fn register_names(&self) -> &[String] {
        &self.registers
    }

    pub fn location_count(&self) -> usize {
        self.locations.len()
    }

    pub fn location_names(&self) -> &[String] {
        &self.locations
    }

    pub fn location_name(&self, l: LocId) -> &str {
        &self.locations[l.0]
    }

    pub fn location(&self, name: &str) -> Option<LocId> {
        self.locations.iter().position(|l| l == name).map(LocId)
    }

    pub fn locations(&self) -> impl Iterator<Item = LocId> {
        (0..self.locations.len()).map(LocId)
    }

    pub fn initial(&self) -> LocId {
        self.initial
    }

    pub fn is_accepting(&self, l: LocId) -> bool {
        self.accepting[l.0]
    }

    pub fn accepting(&self) -> impl Iterator<Item = LocId> + '_ {
        self.locations().filter(|&l| self.is_accepting(l))
    }

    /// Locations from which some accepting location is reachable in the
    /// underlying graph, guards ignored. A state outside this set never
    /// contributes to acceptance.
    pub fn coreachable(&self) -> Vec<bool> {
        let mut live = self.accepting.clone();
        let mut changed = true;
        while changed {
            changed = false;
            for e in &self.edges {
                if live[e.to.0] && !live[e.from.0] {
                    live[e.from.0] = true;
                    changed = true;
                }
            }
        }
        live
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edges_from(&self, l: LocId) -> impl Iterator<Item = &Edge> {
        self.outgoing[l.0].iter().map(|&i| &self.edges[i])
    }

    pub fn has_symbol(&self, symbol: &Symbol) -> bool {
        self.alphabet.contains(symbol)
    }

    /// Whether both automata are over the same set of symbols.
    pub fn same_alphabet(&self, other: &RegisterAutomaton) -> bool {
        let mine: BTreeSet<_> = self.alphabet.iter().collect();
        let theirs: BTreeSet<_> = other.alphabet.iter().collect();
        mine == theirs
    }

    /// `(ℓ_in, ⊥^R)`.
    pub fn initial_state(&self) -> State {
        State::new(self.initial, Valuation::empty(self.register_count()))
    }

    pub fn initial_config(&self) -> Configuration {
        Configuration::singleton(self.initial_state())
    }

    fn check_label(&self, symbol: &Symbol) -> Result<()> {
        if self.has_symbol(symbol) {
            Ok(())
        } else {
            Err(Error::UnknownLabel(symbol.clone()))
        }
    }

    /// Successors of one state on one letter; assumes the label is valid.
    pub(crate) fn step_unchecked(&self, state: &State, symbol: &Symbol, datum: u32) -> BTreeSet<State> {
        self.edges_from(state.location)
            .filter(|e| &e.label == symbol && e.guard.eval(&state.valuation, datum))
            .map(|e| State::new(e.to, state.valuation.updated(&e.update, datum)))
            .collect()
    }

    pub(crate) fn succ_unchecked(&self, config: &Configuration, symbol: &Symbol, datum: u32) -> Configuration {
        let mut out = Configuration::new();
        for s in config {
            for e in self.edges_from(s.location) {
                if &e.label == symbol && e.guard.eval(&s.valuation, datum) {
                    out.insert(State::new(e.to, s.valuation.updated(&e.update, datum)));
                }
            }
        }
        out
    }

    /// All states reachable from `state` by reading `letter`.
    pub fn step_state(&self, state: &State, letter: &Letter) -> Result<BTreeSet<State>> {
        self.check_label(&letter.symbol)?;
        Ok(self.step_unchecked(state, &letter.symbol, letter.datum))
    }

    /// `succ(C, (σ, d))`.
    pub fn succ_config(&self, config: &Configuration, letter: &Letter) -> Result<Configuration> {
        self.check_label(&letter.symbol)?;
        Ok(self.succ_unchecked(config, &letter.symbol, letter.datum))
    }

    /// `succ(C, w)`, folding [`succ_config`](Self::succ_config) over `w`.
    pub fn succ_word(&self, config: &Configuration, word: &DataWord) -> Result<Configuration> {
        let mut current = config.clone();
        for letter in word {
            current = self.succ_config(&current, letter)?;
        }
        Ok(current)
    }

    pub fn accepts_config(&self, config: &Configuration) -> bool {
        config.iter().any(|s| self.is_accepting(s.location))
    }

    /// Whether some initialized accepting run exists on `word`.
    pub fn membership(&self, word: &DataWord) -> Result<bool> {
        let end = self.succ_word(&self.initial_config(), word)?;
        Ok(self.accepts_config(&end))
    }
}

/// Incremental construction of a [`RegisterAutomaton`].
#[derive(Debug, Clone)]
pub struct AutomatonBuilder {
    alphabet: Vec<Symbol>,
    registers: Vec<String>,
    locations: Vec<String>,
    initial: Option<LocId>,
    accepting: BTreeSet<LocId>,
    edges: Vec<Edge>,
}

impl AutomatonBuilder {
    /// Adds a location. The first one added becomes initial unless
    /// [`initial`](Self::initial) is called.
    pub fn location(&mut self, name: impl Into<String>) -> LocId {
        self.locations.push(name.into());
        LocId(self.locations.len() - 1)
    }

    pub fn initial(&mut self, l: LocId) -> &mut Self {
        self.initial = Some(l);
        self
    }

    pub fn accepting(&mut self, l: LocId) -> &mut Self {
        self.accepting.insert(l);
        self
    }

    pub fn edge(
        &mut self,
        from: LocId,
        label: impl Into<Symbol>,
        guard: Guard,
        update: impl IntoIterator<Item = usize>,
        to: LocId,
    ) -> &mut Self {
        self.edges.push(Edge {
            from,
            label: label.into(),
            guard,
            update: update.into_iter().collect(),
            to,
        });
        self
    }

    pub fn build(&self) -> Result<RegisterAutomaton, ModelError> {
        let initial = match self.initial {
            Some(l) => l,
            None if !self.locations.is_empty() => LocId(0),
            None => return Err(ModelError::MissingInitial),
        };
        RegisterAutomaton::new(
            self.alphabet.clone(),
            self.registers.clone(),
            self.locations.clone(),
            initial,
            self.accepting.iter().copied(),
            self.edges.clone(),
        )
    }
}
