use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Deref;

use super::{DataValue, LocId};

/// A register valuation: one [`DataValue`] per register.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Valuation(Vec<DataValue>);

impl Valuation {
    pub fn new(values: Vec<DataValue>) -> Self {
        Valuation(values)
    }

    /// The all-`Bot` valuation over `registers` registers.
    pub fn empty(registers: usize) -> Self {
        Valuation(vec![DataValue::Bot; registers])
    }

    /// Shorthand for tests and samples: `0` stands for `Bot`.
    pub fn of(values: &[u32]) -> Self {
        Valuation(
            values
                .iter()
                .map(|&d| if d == 0 { DataValue::Bot } else { DataValue::Datum(d) })
                .collect(),
        )
    }

    /// `a[λ ← d]`.
    pub fn updated(&self, registers: &[usize], datum: u32) -> Self {
        let mut values = self.0.clone();
        for &r in registers {
            values[r] = DataValue::Datum(datum);
        }
        Valuation(values)
    }

    pub fn data(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().filter_map(|v| v.datum())
    }

    pub fn values(&self) -> &[DataValue] {
        &self.0
    }

    pub fn into_values(self) -> Vec<DataValue> {
        self.0
    }
}

impl Deref for Valuation {
    type Target = [DataValue];

    fn deref(&self) -> &[DataValue] {
        &self.0
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// A location paired with a valuation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct State {
    pub location: LocId,
    pub valuation: Valuation,
}

impl State {
    pub fn new(location: LocId, valuation: Valuation) -> Self {
        State { location, valuation }
    }
}

/// A finite set of states of one automaton.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Configuration(BTreeSet<State>);

impl Configuration {
    pub fn new() -> Self {
        Configuration(BTreeSet::new())
    }

    pub fn singleton(state: State) -> Self {
        Configuration(BTreeSet::from([state]))
    }

    pub fn insert(&mut self, state: State) -> bool {
        self.0.insert(state)
    }

    pub fn contains(&self, state: &State) -> bool {
        self.0.contains(state)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::collections::btree_set::Iter<'_, State> {
        self.0.iter()
    }

    pub fn is_subset(&self, other: &Configuration) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Union of the non-`Bot` register contents.
    pub fn data(&self) -> BTreeSet<u32> {
        self.0.iter().flat_map(|s| s.valuation.data()).collect()
    }

    /// Groups the states by valuation: each distinct valuation with the
    /// (sorted, nonempty) set of locations it occurs with.
    pub fn slices(&self) -> BTreeMap<&Valuation, Vec<LocId>> {
        let mut out: BTreeMap<&Valuation, Vec<LocId>> = BTreeMap::new();
        for s in &self.0 {
            out.entry(&s.valuation).or_default().push(s.location);
        }
        for locs in out.values_mut() {
            locs.sort_unstable();
        }
        out
    }

    /// Distinct valuations occurring in the configuration.
    pub fn valuations(&self) -> BTreeSet<&Valuation> {
        self.0.iter().map(|s| &s.valuation).collect()
    }

    /// Removes every state whose valuation is exactly `valuation`.
    pub fn remove_slice(&mut self, valuation: &Valuation) {
        self.0.retain(|s| &s.valuation != valuation);
    }

    pub fn locations(&self) -> BTreeSet<LocId> {
        self.0.iter().map(|s| s.location).collect()
    }
}

impl FromIterator<State> for Configuration {
    fn from_iter<I: IntoIterator<Item = State>>(iter: I) -> Self {
        Configuration(iter.into_iter().collect())
    }
}

impl Extend<State> for Configuration {
    fn extend<I: IntoIterator<Item = State>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl<'a> IntoIterator for &'a Configuration {
    type Item = &'a State;
    type IntoIter = std::collections::btree_set::Iter<'a, State>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl IntoIterator for Configuration {
    type Item = State;
    type IntoIter = std::collections::btree_set::IntoIter<State>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}
