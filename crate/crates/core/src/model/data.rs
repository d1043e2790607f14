//! Data values, alphabet symbols and data words.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// A register content: either the empty marker `Bot` or a datum.
///
/// `Bot` sorts before every datum. It compares equal to itself, but guards
/// never consider it equal to an input datum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DataValue {
    Bot,
    Datum(u32),
}

impl DataValue {
    pub fn datum(self) -> Option<u32> {
        match self {
            DataValue::Bot => None,
            DataValue::Datum(d) => Some(d),
        }
    }

    pub fn is_bot(self) -> bool {
        matches!(self, DataValue::Bot)
    }
}

impl From<u32> for DataValue {
    fn from(d: u32) -> Self {
        DataValue::Datum(d)
    }
}

impl fmt::Display for DataValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DataValue::Bot => f.write_str("⊥"),
            DataValue::Datum(d) => write!(f, "{d}"),
        }
    }
}

/// An alphabet symbol. Cheap to clone.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(name: &str) -> Self {
        Symbol(Arc::from(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&str> for Symbol {
    fn from(s: &str) -> Self {
        Symbol::new(s)
    }
}

impl From<&String> for Symbol {
    fn from(s: &String) -> Self {
        Symbol::new(s)
    }
}

impl From<String> for Symbol {
    fn from(s: String) -> Self {
        Symbol(Arc::from(s))
    }
}

impl From<&Symbol> for Symbol {
    fn from(s: &Symbol) -> Self {
        s.clone()
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// One input position: a symbol together with a datum.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub symbol: Symbol,
    pub datum: u32,
}

impl Letter {
    pub fn new(symbol: impl Into<Symbol>, datum: u32) -> Self {
        Letter {
            symbol: symbol.into(),
            datum,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.symbol, self.datum)
    }
}

/// A finite data word. Datums are positive integers; `Bot` never occurs in
/// a word.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DataWord(Vec<Letter>);

impl DataWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        DataWord(letters)
    }

    pub fn empty() -> Self {
        DataWord(Vec::new())
    }

    /// Builds a word over one symbol from a datum sequence.
    pub fn over(symbol: impl Into<Symbol>, data: &[u32]) -> Self {
        let symbol = symbol.into();
        DataWord(data.iter().map(|&d| Letter::new(symbol.clone(), d)).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    /// The set of datums occurring in the word.
    pub fn data(&self) -> BTreeSet<u32> {
        self.0.iter().map(|l| l.datum).collect()
    }

    /// The label sequence.
    pub fn proj(&self) -> Vec<Symbol> {
        self.0.iter().map(|l| l.symbol.clone()).collect()
    }

    /// The infix of positions `from+1 ..= to`.
    pub fn infix(&self, from: usize, to: usize) -> DataWord {
        DataWord(self.0[from..to].to_vec())
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Letter> {
        self.0.iter()
    }
}

impl<'a> IntoIterator for &'a DataWord {
    type Item = &'a Letter;
    type IntoIter = std::slice::Iter<'a, Letter>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl FromIterator<Letter> for DataWord {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        DataWord(iter.into_iter().collect())
    }
}

/// Space-separated `label:datum` tokens; the empty word prints as nothing.
impl fmt::Display for DataWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, letter) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

/// Renames datums so that the i-th distinct datum to appear becomes `i`.
pub fn normalize_word(word: &DataWord) -> DataWord {
    let mut seen: Vec<u32> = Vec::new();
    word.iter()
        .map(|letter| {
            let code = match seen.iter().position(|&d| d == letter.datum) {
                Some(i) => i as u32 + 1,
                None => {
                    seen.push(letter.datum);
                    seen.len() as u32
                }
            };
            Letter::new(letter.symbol.clone(), code)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(tokens: &[(&str, u32)]) -> DataWord {
        tokens.iter().map(|&(s, d)| Letter::new(s, d)).collect()
    }

    #[test]
    fn normalize_renames_by_first_occurrence() {
        assert_eq!(
            normalize_word(&DataWord::over("s", &[7, 7, 3])),
            DataWord::over("s", &[1, 1, 2])
        );
        assert_eq!(normalize_word(&DataWord::empty()), DataWord::empty());
        assert_eq!(
            normalize_word(&word(&[("s", 2), ("t", 5), ("s", 2)])),
            word(&[("s", 1), ("t", 2), ("s", 1)])
        );
    }

    #[test]
    fn accessors() {
        let w = word(&[("a", 4), ("b", 2), ("a", 4)]);
        assert_eq!(w.len(), 3);
        assert_eq!(w.data(), BTreeSet::from([2, 4]));
        assert_eq!(w.proj(), vec![Symbol::new("a"), Symbol::new("b"), Symbol::new("a")]);
        assert_eq!(w.infix(1, 1), DataWord::empty());
        assert_eq!(w.infix(1, 3), word(&[("b", 2), ("a", 4)]));
        assert_eq!(w.to_string(), "a:4 b:2 a:4");
    }

    #[test]
    fn bot_is_distinct_from_data() {
        assert_eq!(DataValue::Bot, DataValue::Bot);
        assert_ne!(DataValue::Bot, DataValue::Datum(0));
        assert!(DataValue::Bot < DataValue::Datum(0));
    }
}
