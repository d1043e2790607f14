//! Surface syntax for guards.
//!
//! ```text
//! guard := or
//! or    := and ("|" and)*
//! and   := unary ("&" unary)*
//! unary := "!" unary | atom
//! atom  := "true" | "=" name | "!=" name | "(" guard ")"
//! ```
//!
//! `!=r` and `|` are sugar and never survive parsing.

use regauto::Guard;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GuardError {
    #[error("at byte {pos}: expected {expected}, found {found}")]
    Syntax {
        pos: usize,
        expected: &'static str,
        found: String,
    },
    #[error("at byte {pos}: unknown register `{name}`")]
    UnknownRegister { pos: usize, name: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    True,
    Eq,
    Neq,
    Bang,
    And,
    Or,
    LParen,
    RParen,
    Name(String),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::True => "`true`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Neq => "`!=`".into(),
            Tok::Bang => "`!`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Name(n) => format!("name `{n}`"),
            Tok::End => "end of input".into(),
        }
    }
}

fn is_name_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, GuardError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let tok = match c {
            '=' => {
                chars.next();
                Tok::Eq
            }
            '!' => {
                chars.next();
                if chars.peek().is_some_and(|&(_, c)| c == '=') {
                    chars.next();
                    Tok::Neq
                } else {
                    Tok::Bang
                }
            }
            '&' => {
                chars.next();
                Tok::And
            }
            '|' => {
                chars.next();
                Tok::Or
            }
            '(' => {
                chars.next();
                Tok::LParen
            }
            ')' => {
                chars.next();
                Tok::RParen
            }
            c if is_name_start(c) => {
                let mut end = pos;
                while let Some(&(i, c)) = chars.peek() {
                    if !is_name_char(c) {
                        break;
                    }
                    end = i + c.len_utf8();
                    chars.next();
                }
                match &text[pos..end] {
                    "true" => Tok::True,
                    name => Tok::Name(name.to_string()),
                }
            }
            other => {
                return Err(GuardError::Syntax {
                    pos,
                    expected: "a guard",
                    found: format!("`{other}`"),
                })
            }
        };
        out.push((pos, tok));
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    registers: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &'static str) -> Result<T, GuardError> {
        Err(GuardError::Syntax {
            pos: self.pos(),
            expected,
            found: self.peek().describe(),
        })
    }

    fn or(&mut self) -> Result<Guard, GuardError> {
        let mut lhs = self.and()?;
        while *self.peek() == Tok::Or {
            self.bump();
            let rhs = self.and()?;
            lhs = Guard::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Guard, GuardError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            let rhs = self.unary()?;
            lhs = Guard::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Guard, GuardError> {
        if *self.peek() == Tok::Bang {
            self.bump();
            return Ok(Guard::not(self.unary()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Guard, GuardError> {
        match self.peek() {
            Tok::True => {
                self.bump();
                Ok(Guard::True)
            }
            Tok::Eq => {
                self.bump();
                Ok(Guard::eq(self.register()?))
            }
            Tok::Neq => {
                self.bump();
                Ok(Guard::neq(self.register()?))
            }
            Tok::LParen => {
                self.bump();
                let g = self.or()?;
                if *self.peek() != Tok::RParen {
                    return self.fail("`)`");
                }
                self.bump();
                Ok(g)
            }
            _ => self.fail("a guard"),
        }
    }

    fn register(&mut self) -> Result<usize, GuardError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Name(name) => {
                self.bump();
                self.registers
                    .iter()
                    .position(|r| *r == name)
                    .ok_or(GuardError::UnknownRegister { pos, name })
            }
            _ => self.fail("a register name"),
        }
    }
}

/// Parses `text`, resolving register names against `registers` by position.
pub fn parse_guard(text: &str, registers: &[String]) -> Result<Guard, GuardError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
        registers,
    };
    let g = p.or()?;
    if *p.peek() != Tok::End {
        return p.fail("`&`, `|` or end of input");
    }
    Ok(g)
}
