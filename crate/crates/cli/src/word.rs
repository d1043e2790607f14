use regauto::{DataWord, Letter};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("token {index} `{token}`: expected `label:datum`")]
    Malformed { index: usize, token: String },
    #[error("token {index} `{token}`: datum must be a positive integer")]
    BadDatum { index: usize, token: String },
}

/// Parses whitespace-separated `label:datum` tokens. Blank input is ε.
pub fn parse_word(text: &str) -> Result<DataWord, WordError> {
    text.split_whitespace()
        .enumerate()
        .map(|(index, token)| {
            let malformed = || WordError::Malformed {
                index,
                token: token.to_string(),
            };
            let (label, datum) = token.rsplit_once(':').ok_or_else(malformed)?;
            if label.is_empty() || datum.is_empty() {
                return Err(malformed());
            }
            match datum.parse::<u32>() {
                Ok(d) if d > 0 => Ok(Letter::new(label, d)),
                _ => Err(WordError::BadDatum {
                    index,
                    token: token.to_string(),
                }),
            }
        })
        .collect()
}

/// Inverse of [`parse_word`]; ε prints as the empty string.
pub fn format_word(word: &DataWord) -> String {
    word.to_string()
}
