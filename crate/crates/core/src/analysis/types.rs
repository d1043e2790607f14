//! Complete types over `D ∪ {⊥}`, type profiles of valuations and the
//! indistinguishability relation used for collapsing.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::containment::SyncConfig;
use crate::error::{Error, Result};
use crate::model::{DataValue, LocId, Valuation};

/// A complete `k`-type: a partition of the positions `1..=k` of a tuple by
/// equality, with at most one class marked as the `Bot` class.
///
/// Stored by its canonical encoding: position `i` carries the smallest
/// (1-based) index of its class, or `0` if it is in the `Bot` class. Two
/// types are equal iff their encodings are.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompleteType {
    labels: Vec<u32>,
}

impl CompleteType {
    /// Accepts an encoding only if it is canonical.
    pub fn from_labels(labels: Vec<u32>) -> Option<Self> {
        for (i, &l) in labels.iter().enumerate() {
            let pos = i as u32 + 1;
            if l == 0 {
                continue;
            }
            if l > pos || labels[l as usize - 1] != l {
                return None;
            }
        }
        Some(CompleteType { labels })
    }

    pub fn arity(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn is_bot(&self, i: usize) -> bool {
        self.labels[i] == 0
    }

    /// Whether `y_i = y_j` (0-based positions).
    pub fn equal(&self, i: usize, j: usize) -> bool {
        self.labels[i] == self.labels[j]
    }

    /// The non-`Bot` classes as sorted 0-based position lists, ordered by
    /// their least element.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (i, &l) in self.labels.iter().enumerate() {
            if l != 0 {
                out.entry(l).or_default().push(i);
            }
        }
        out.into_values().collect()
    }

    /// 0-based positions of the `Bot` class, if nonempty.
    pub fn bot_class(&self) -> Option<Vec<usize>> {
        let v: Vec<usize> = (0..self.arity()).filter(|&i| self.is_bot(i)).collect();
        (!v.is_empty()).then_some(v)
    }

    /// Whether `tuple` satisfies the type.
    pub fn holds(&self, tuple: &[DataValue]) -> bool {
        tuple.len() == self.arity() && tp(tuple) == *self
    }

    /// A tuple realizing the type whose data lie in `1..=arity`: each
    /// position holds its class label.
    pub fn realize(&self) -> Vec<DataValue> {
        self.labels
            .iter()
            .map(|&l| if l == 0 { DataValue::Bot } else { DataValue::Datum(l) })
            .collect()
    }
}

/// Lists the classes, e.g. `{1,2} {4} ⊥{3}`.
impl fmt::Display for CompleteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |f: &mut fmt::Formatter<'_>, class: &[usize]| {
            let parts: Vec<String> = class.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "{{{}}}", parts.join(","))
        };
        let mut first = true;
        for class in self.classes() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            show(f, &class)?;
        }
        if let Some(bot) = self.bot_class() {
            if !first {
                f.write_str(" ")?;
            }
            f.write_str("⊥")?;
            show(f, &bot)?;
        }
        Ok(())
    }
}

/// The unique complete type satisfied by `tuple`.
pub fn tp(tuple: &[DataValue]) -> CompleteType {
    let labels = tuple
        .iter()
        .enumerate()
        .map(|(i, v)| match v {
            DataValue::Bot => 0,
            DataValue::Datum(_) => tuple[..i].iter().position(|w| w == v).unwrap_or(i) as u32 + 1,
        })
        .collect();
    CompleteType { labels }
}

pub(crate) fn tp_of_parts(parts: &[&[DataValue]]) -> CompleteType {
    let flat: Vec<DataValue> = parts.iter().flat_map(|p| p.iter().copied()).collect();
    tp(&flat)
}

/// For a fixed valuation `a`, the realized types `tp(a, c, d)` mapped to the
/// locations `c` occurs with. Types absent from the map have no locations.
pub type TypeProfile = BTreeMap<CompleteType, BTreeSet<LocId>>;

pub(crate) fn profile_of(slices: &BTreeMap<&Valuation, Vec<LocId>>, a: &Valuation, d: &Valuation) -> TypeProfile {
    let mut profile = TypeProfile::new();
    for (c, locs) in slices {
        profile
            .entry(tp_of_parts(&[a, c, d]))
            .or_default()
            .extend(locs.iter().copied());
    }
    profile
}

/// The profile `φ ↦ L_φ(a)` of `a` in `sync`, restricted to realized `φ`.
pub fn type_profile(sync: &SyncConfig, a: &Valuation) -> Result<TypeProfile> {
    let slices = sync.b_config.slices();
    if !slices.contains_key(a) {
        return Err(Error::ValuationAbsent);
    }
    Ok(profile_of(&slices, a, &sync.a_state.valuation))
}

/// Whether `a` and `b` are indistinguishable in `sync`: their profiles
/// agree on every complete `(2n+m)`-type.
pub fn indistinguishable(sync: &SyncConfig, a: &Valuation, b: &Valuation) -> Result<bool> {
    Ok(type_profile(sync, a)? == type_profile(sync, b)?)
}
