use std::collections::BTreeMap;

use super::canon::{canonicalize, Block, Canonical};
use super::{Configuration, DataValue, DataWord, Letter, State, Valuation};
use crate::error::{Error, Result};

/// A finite injective renaming of data values that fixes `Bot`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PartialIso(BTreeMap<DataValue, DataValue>);

impl PartialIso {
    /// Returns `None` unless the pairs describe an injective map sending
    /// `Bot` (if present) to `Bot`.
    pub fn new(pairs: impl IntoIterator<Item = (DataValue, DataValue)>) -> Option<Self> {
        let mut map = BTreeMap::new();
        for (from, to) in pairs {
            if from.is_bot() != to.is_bot() {
                return None;
            }
            if let Some(prev) = map.insert(from, to) {
                if prev != to {
                    return None;
                }
            }
        }
        let mut images: Vec<_> = map.values().collect();
        images.sort();
        let before = images.len();
        images.dedup();
        (images.len() == before).then_some(PartialIso(map))
    }

    /// Shorthand over datums; `Bot ↦ Bot` is always included.
    pub fn from_data(pairs: &[(u32, u32)]) -> Option<Self> {
        PartialIso::new(
            std::iter::once((DataValue::Bot, DataValue::Bot))
                .chain(pairs.iter().map(|&(a, b)| (DataValue::Datum(a), DataValue::Datum(b)))),
        )
    }

    pub fn identity_on(data: impl IntoIterator<Item = u32>) -> Self {
        PartialIso(
            std::iter::once((DataValue::Bot, DataValue::Bot))
                .chain(data.into_iter().map(|d| (DataValue::Datum(d), DataValue::Datum(d))))
                .collect(),
        )
    }

    pub fn get(&self, v: DataValue) -> Option<DataValue> {
        self.0.get(&v).copied()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (DataValue, DataValue)> + '_ {
        self.0.iter().map(|(&a, &b)| (a, b))
    }

    fn map_value(&self, v: DataValue) -> Result<DataValue> {
        match v {
            DataValue::Bot => Ok(DataValue::Bot),
            DataValue::Datum(d) => self.get(v).ok_or(Error::OutsideDomain(d)),
        }
    }

    fn map_datum(&self, d: u32) -> Result<u32> {
        match self.map_value(DataValue::Datum(d))? {
            DataValue::Datum(e) => Ok(e),
            DataValue::Bot => unreachable!("datums never map to Bot"),
        }
    }

    pub fn apply_valuation(&self, val: &Valuation) -> Result<Valuation> {
        val.iter()
            .map(|&v| self.map_value(v))
            .collect::<Result<Vec<_>>>()
            .map(Valuation::new)
    }

    /// `f(C)`.
    pub fn apply_config(&self, config: &Configuration) -> Result<Configuration> {
        config
            .iter()
            .map(|s| Ok(State::new(s.location, self.apply_valuation(&s.valuation)?)))
            .collect()
    }

    /// `f(w)`.
    pub fn apply_word(&self, word: &DataWord) -> Result<DataWord> {
        word.iter()
            .map(|l| Ok(Letter::new(l.symbol.clone(), self.map_datum(l.datum)?)))
            .collect()
    }
}

pub(crate) fn canonical_config(config: &Configuration) -> Canonical {
    let slices = config.slices();
    let blocks: Vec<Block> = slices
        .iter()
        .map(|(val, locs)| Block {
            locs,
            val: val.values(),
        })
        .collect();
    canonicalize(&[], &blocks)
}

/// Decides `C ∼ C'`, returning a witnessing partial isomorphism `f` with
/// `f(C) = C'` when one exists.
pub fn configs_equivalent(c1: &Configuration, c2: &Configuration) -> Option<PartialIso> {
    if c1.len() != c2.len() {
        return None;
    }
    let k1 = canonical_config(c1);
    let k2 = canonical_config(c2);
    if !k1.same_shape(&k2) {
        return None;
    }
    let pairs = (1..=k1.renaming.len() as u32).map(|code| {
        (
            DataValue::Datum(k1.renaming.datum_of(code)),
            DataValue::Datum(k2.renaming.datum_of(code)),
        )
    });
    let iso = PartialIso::new(std::iter::once((DataValue::Bot, DataValue::Bot)).chain(pairs))
        .expect("canonical renamings are bijective");
    debug_assert_eq!(iso.apply_config(c1).as_ref(), Ok(c2));
    Some(iso)
}
