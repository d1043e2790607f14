use std::fmt;

use super::SyncConfig;
use crate::analysis::{tp, CompleteType};
use crate::model::canon::{canonicalize, Block};
use crate::model::{Configuration, DataValue, LocId, State, Valuation};

/// A synchronized configuration up to datum renaming: the `A`-location, the
/// location set of each distinct `B`-valuation, and the complete type of
/// all `B`-valuations followed by the `A`-valuation.
///
/// Only canonical representatives are ever built, so two abstractions of
/// equivalent configurations compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbstractConfig {
    pub a_location: LocId,
    pub blocks: Vec<Vec<LocId>>,
    pub typ: CompleteType,
}

impl AbstractConfig {
    /// Number of distinct `B`-valuations.
    pub fn s(&self) -> usize {
        self.blocks.len()
    }

    /// A concrete configuration with this abstraction whose data lie in
    /// `1..=s·n+m`, for `n` registers of `B`.
    pub fn materialize(&self, b_registers: usize) -> SyncConfig {
        let values = self.typ.realize();
        let split = self.s() * b_registers;
        debug_assert!(values.len() >= split);
        let a_val = Valuation::new(values[split..].to_vec());
        let mut config = Configuration::new();
        for (j, locs) in self.blocks.iter().enumerate() {
            let val = Valuation::new(values[j * b_registers..(j + 1) * b_registers].to_vec());
            for &l in locs {
                config.insert(State::new(l, val.clone()));
            }
        }
        SyncConfig::new(State::new(self.a_location, a_val), config)
    }
}

impl fmt::Display for AbstractConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, [", self.a_location)?;
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            let names: Vec<String> = block.iter().map(ToString::to_string).collect();
            write!(f, "{{{}}}", names.join(","))?;
        }
        write!(f, "], {})", self.typ)
    }
}

/// The canonical abstraction of `sync`.
pub fn abstract_of(sync: &SyncConfig) -> AbstractConfig {
    let slices = sync.b_config.slices();
    let entries: Vec<(&Valuation, &Vec<LocId>)> = slices.iter().map(|(v, l)| (*v, l)).collect();
    let blocks: Vec<Block> = entries
        .iter()
        .map(|(v, l)| Block {
            locs: l,
            val: v.values(),
        })
        .collect();
    let canon = canonicalize(sync.a_state.valuation.values(), &blocks);
    let mut tuple: Vec<DataValue> = Vec::new();
    let mut locs = Vec::with_capacity(canon.order.len());
    for &i in &canon.order {
        tuple.extend_from_slice(entries[i].0.values());
        locs.push(entries[i].1.clone());
    }
    tuple.extend_from_slice(sync.a_state.valuation.values());
    AbstractConfig {
        a_location: sync.a_state.location,
        blocks: locs,
        typ: tp(&tuple),
    }
}
