//! Canonical renaming of "a fixed head tuple plus an unordered family of
//! blocks". A block is a valuation tagged with a sorted location set.
//!
//! The canonical form names data in order of first occurrence: head first,
//! then blocks in an order chosen to minimise the encoded block sequence
//! lexicographically. Ties are explored exhaustively, except that a tied
//! candidate is skipped when swapping it with an already explored one is an
//! automorphism of the whole structure fixing everything named so far.

use super::{DataValue, LocId};

#[derive(Debug, Clone, Copy)]
pub(crate) struct Block<'a> {
    pub locs: &'a [LocId],
    pub val: &'a [DataValue],
}

/// Datum → code map; codes are `1..=len` in insertion order. Code `0` is
/// reserved for `Bot`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub(crate) struct Renaming {
    data: Vec<u32>,
}

impl Renaming {
    pub fn get(&self, datum: u32) -> Option<u32> {
        self.data.iter().position(|&d| d == datum).map(|i| i as u32 + 1)
    }

    pub fn assign(&mut self, datum: u32) -> u32 {
        match self.get(datum) {
            Some(c) => c,
            None => {
                self.data.push(datum);
                self.data.len() as u32
            }
        }
    }

    pub fn assign_all(&mut self, values: &[DataValue]) {
        for v in values {
            if let DataValue::Datum(d) = v {
                self.assign(*d);
            }
        }
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    /// Datum carrying code `code`.
    pub fn datum_of(&self, code: u32) -> u32 {
        self.data[code as usize - 1]
    }

    pub fn code(&self, v: DataValue) -> u32 {
        match v {
            DataValue::Bot => 0,
            DataValue::Datum(d) => self.get(d).expect("datum was named"),
        }
    }

    pub fn rename(&self, v: DataValue) -> DataValue {
        match v {
            DataValue::Bot => DataValue::Bot,
            DataValue::Datum(d) => DataValue::Datum(self.get(d).expect("datum was named")),
        }
    }

    /// Encodes `values` as if their unnamed data were named next, without
    /// committing the names.
    pub fn encode(&self, values: &[DataValue]) -> Vec<u32> {
        let mut fresh: Vec<u32> = Vec::new();
        values
            .iter()
            .map(|v| match *v {
                DataValue::Bot => 0,
                DataValue::Datum(d) => match self.get(d) {
                    Some(c) => c,
                    None => {
                        let pos = match fresh.iter().position(|&f| f == d) {
                            Some(p) => p,
                            None => {
                                fresh.push(d);
                                fresh.len() - 1
                            }
                        };
                        (self.data.len() + pos + 1) as u32
                    }
                },
            })
            .collect()
    }
}

pub(crate) type BlockKey = (Vec<LocId>, Vec<u32>);

#[derive(Debug, Clone)]
pub(crate) struct Canonical {
    /// Block indices in canonical order.
    pub order: Vec<usize>,
    pub renaming: Renaming,
    pub head: Vec<u32>,
    pub keys: Vec<BlockKey>,
}

impl Canonical {
    pub fn same_shape(&self, other: &Canonical) -> bool {
        self.head == other.head && self.keys == other.keys
    }
}

pub(crate) fn canonicalize(head: &[DataValue], blocks: &[Block<'_>]) -> Canonical {
    let mut renaming = Renaming::default();
    renaming.assign_all(head);
    let head_codes = head.iter().map(|&v| renaming.code(v)).collect();
    let mut search = Search {
        head,
        blocks,
        best: None,
    };
    let mut used = vec![false; blocks.len()];
    search.dfs(&mut Vec::new(), &mut Vec::new(), &renaming, &mut used);
    let (keys, order, renaming) = search.best.expect("search visits at least one leaf");
    Canonical {
        order,
        renaming,
        head: head_codes,
        keys,
    }
}

struct Search<'a, 'b> {
    head: &'a [DataValue],
    blocks: &'a [Block<'b>],
    best: Option<(Vec<BlockKey>, Vec<usize>, Renaming)>,
}

impl Search<'_, '_> {
    fn dfs(&mut self, order: &mut Vec<usize>, keys: &mut Vec<BlockKey>, ren: &Renaming, used: &mut [bool]) {
        let depth = order.len();
        if depth == self.blocks.len() {
            if self.best.as_ref().is_none_or(|(best, _, _)| keys[..] < best[..]) {
                self.best = Some((keys.clone(), order.clone(), ren.clone()));
            }
            return;
        }
        let mut min: Option<BlockKey> = None;
        let mut tied: Vec<usize> = Vec::new();
        for (i, b) in self.blocks.iter().enumerate() {
            if used[i] {
                continue;
            }
            let key = (b.locs.to_vec(), ren.encode(b.val));
            match min.as_ref().map(|m| key.cmp(m)) {
                None | Some(std::cmp::Ordering::Less) => {
                    min = Some(key);
                    tied.clear();
                    tied.push(i);
                }
                Some(std::cmp::Ordering::Equal) => tied.push(i),
                Some(std::cmp::Ordering::Greater) => {}
            }
        }
        let min = min.expect("an unused block remains");
        if let Some((best, _, _)) = &self.best {
            if keys[..].cmp(&best[..depth]).then_with(|| min.cmp(&best[depth])).is_gt() {
                return;
            }
        }
        let mut explored: Vec<usize> = Vec::new();
        for &c in &tied {
            if explored.iter().any(|&e| self.swap_is_automorphism(e, c, order)) {
                continue;
            }
            explored.push(c);
            let mut next = ren.clone();
            next.assign_all(self.blocks[c].val);
            used[c] = true;
            order.push(c);
            keys.push(min.clone());
            self.dfs(order, keys, &next, used);
            keys.pop();
            order.pop();
            used[c] = false;
        }
    }

    /// Whether the datum involution exchanging blocks `x` and `y` maps the
    /// structure onto itself while fixing the head and the chosen prefix.
    fn swap_is_automorphism(&self, x: usize, y: usize, prefix: &[usize]) -> bool {
        let (bx, by) = (self.blocks[x], self.blocks[y]);
        let mut map: Vec<(u32, u32)> = Vec::new();
        let mut bind = |from: u32, to: u32| -> bool {
            match map.iter().find(|(f, _)| *f == from) {
                Some(&(_, t)) => t == to,
                None => {
                    map.push((from, to));
                    true
                }
            }
        };
        for (&u, &v) in bx.val.iter().zip(by.val) {
            match (u, v) {
                (DataValue::Bot, DataValue::Bot) => {}
                (DataValue::Datum(a), DataValue::Datum(b)) => {
                    if !(bind(a, b) && bind(b, a)) {
                        return false;
                    }
                }
                _ => return false,
            }
        }
        let apply = |v: DataValue| match v {
            DataValue::Bot => DataValue::Bot,
            DataValue::Datum(d) => DataValue::Datum(map.iter().find(|(f, _)| *f == d).map_or(d, |&(_, t)| t)),
        };
        let moved = |vals: &[DataValue]| vals.iter().map(|&v| apply(v)).collect::<Vec<_>>();
        if moved(self.head) != self.head {
            return false;
        }
        if prefix.iter().any(|&p| moved(self.blocks[p].val) != self.blocks[p].val) {
            return false;
        }
        let mut original: Vec<(&[LocId], Vec<DataValue>)> =
            self.blocks.iter().map(|b| (b.locs, b.val.to_vec())).collect();
        let mut image: Vec<(&[LocId], Vec<DataValue>)> = self.blocks.iter().map(|b| (b.locs, moved(b.val))).collect();
        original.sort();
        image.sort();
        original == image
    }
}
