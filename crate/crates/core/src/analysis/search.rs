//! Breadth-first search over states of the form `(tag, tuple)` taken up to
//! datum renaming. Tuples are stored with data renamed by first occurrence;
//! each node remembers how its codes map back to the data of the word that
//! first reached it, so a witness can be read off the parent chain.

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use crate::model::canon::Renaming;
use crate::model::{DataValue, DataWord, Letter, Symbol};

struct Node<T> {
    tag: T,
    tuple: Vec<DataValue>,
    parent: Option<(usize, Letter)>,
    to_word: Vec<u32>,
    word_max: u32,
}

pub(crate) fn canonical_tuple(tuple: &[DataValue]) -> (Vec<DataValue>, Renaming) {
    let mut ren = Renaming::default();
    ren.assign_all(tuple);
    (tuple.iter().map(|&v| ren.rename(v)).collect(), ren)
}

/// Finds a shortest word leading from `start` to a node whose tag satisfies
/// `goal`. `step` receives a canonical node and a letter whose datum is
/// either an existing code or the fresh code `max + 1`.
pub(crate) fn shortest_witness<T, S, G>(
    alphabet: &[Symbol],
    start: (T, Vec<DataValue>),
    mut step: S,
    goal: G,
) -> Option<DataWord>
where
    T: Clone + Eq + Hash,
    S: FnMut(&T, &[DataValue], &Symbol, u32) -> Vec<(T, Vec<DataValue>)>,
    G: Fn(&T) -> bool,
{
    let (tuple, ren) = canonical_tuple(&start.1);
    let to_word: Vec<u32> = (1..=ren.len() as u32).map(|c| ren.datum_of(c)).collect();
    let word_max = to_word.iter().copied().max().unwrap_or(0);
    let mut nodes = vec![Node {
        tag: start.0,
        tuple,
        parent: None,
        to_word,
        word_max,
    }];
    let mut seen: HashMap<(T, Vec<DataValue>), usize> = HashMap::new();
    seen.insert((nodes[0].tag.clone(), nodes[0].tuple.clone()), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        if goal(&nodes[i].tag) {
            return Some(reconstruct(&nodes, i));
        }
        let width = nodes[i].tuple.iter().filter_map(|v| v.datum()).max().unwrap_or(0);
        for symbol in alphabet {
            for d in 1..=width + 1 {
                let (tag, tuple) = (nodes[i].tag.clone(), nodes[i].tuple.clone());
                let word_datum = if d <= width {
                    nodes[i].to_word[d as usize - 1]
                } else {
                    nodes[i].word_max + 1
                };
                for (next_tag, next_tuple) in step(&tag, &tuple, symbol, d) {
                    let (canon, ren) = canonical_tuple(&next_tuple);
                    let key = (next_tag, canon);
                    if seen.contains_key(&key) {
                        continue;
                    }
                    let parent = &nodes[i];
                    let to_word = (1..=ren.len() as u32)
                        .map(|c| {
                            let code = ren.datum_of(c);
                            if code <= width {
                                parent.to_word[code as usize - 1]
                            } else {
                                word_datum
                            }
                        })
                        .collect();
                    let node = Node {
                        tag: key.0.clone(),
                        tuple: key.1.clone(),
                        parent: Some((i, Letter::new(symbol.clone(), word_datum))),
                        to_word,
                        word_max: parent.word_max.max(word_datum),
                    };
                    seen.insert(key, nodes.len());
                    queue.push_back(nodes.len());
                    nodes.push(node);
                }
            }
        }
    }
    None
}

fn reconstruct<T>(nodes: &[Node<T>], mut i: usize) -> DataWord {
    let mut letters = Vec::new();
    while let Some((p, letter)) = &nodes[i].parent {
        letters.push(letter.clone());
        i = *p;
    }
    letters.reverse();
    crate::model::normalize_word(&DataWord::new(letters))
}
