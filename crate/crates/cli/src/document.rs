//! The JSON automaton document.
//!
//! ```json
//! {
//!   "alphabet": ["s"],
//!   "registers": ["r"],
//!   "locations": ["l0", "l1"],
//!   "initial": "l0",
//!   "accepting": ["l1"],
//!   "edges": [{ "from": "l0", "label": "s", "guard": "!=r", "update": ["r"], "to": "l1" }]
//! }
//! ```

use std::path::Path;

use regauto::model::Edge;
use regauto::{LocId, RegisterAutomaton, Symbol};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::guard::{parse_guard, GuardError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomatonDocument {
    pub alphabet: Vec<String>,
    pub registers: Vec<String>,
    pub locations: Vec<String>,
    pub initial: String,
    pub accepting: Vec<String>,
    pub edges: Vec<EdgeDocument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDocument {
    pub from: String,
    pub label: String,
    #[serde(default = "default_guard")]
    pub guard: String,
    #[serde(default)]
    pub update: Vec<String>,
    pub to: String,
}

fn default_guard() -> String {
    "true".to_string()
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("{path}: {message}")]
    Invalid { path: String, message: String },
    #[error("{path}: {source}")]
    Guard { path: String, source: GuardError },
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

fn invalid(path: impl Into<String>, message: impl Into<String>) -> DocumentError {
    DocumentError::Invalid {
        path: path.into(),
        message: message.into(),
    }
}

fn unique(field: &str, names: &[String]) -> Result<(), DocumentError> {
    for (i, n) in names.iter().enumerate() {
        if names[..i].contains(n) {
            return Err(invalid(format!("{field}[{i}]"), format!("duplicate name `{n}`")));
        }
    }
    Ok(())
}

fn resolve(path: String, names: &[String], name: &str, what: &str) -> Result<usize, DocumentError> {
    names
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| invalid(path, format!("unknown {what} `{name}`")))
}

impl AutomatonDocument {
    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    /// Resolves names and parses guards. Register names map to indices in
    /// declaration order.
    pub fn to_automaton(&self) -> Result<RegisterAutomaton, DocumentError> {
        unique("alphabet", &self.alphabet)?;
        unique("registers", &self.registers)?;
        unique("locations", &self.locations)?;
        let initial = resolve("initial".into(), &self.locations, &self.initial, "location")?;
        let accepting = self
            .accepting
            .iter()
            .enumerate()
            .map(|(i, name)| resolve(format!("accepting[{i}]"), &self.locations, name, "location").map(LocId))
            .collect::<Result<Vec<_>, _>>()?;
        let mut edges = Vec::with_capacity(self.edges.len());
        for (i, e) in self.edges.iter().enumerate() {
            let from = resolve(format!("edges[{i}].from"), &self.locations, &e.from, "location")?;
            let to = resolve(format!("edges[{i}].to"), &self.locations, &e.to, "location")?;
            resolve(format!("edges[{i}].label"), &self.alphabet, &e.label, "symbol")?;
            let guard = parse_guard(&e.guard, &self.registers).map_err(|source| DocumentError::Guard {
                path: format!("edges[{i}].guard"),
                source,
            })?;
            let update = e
                .update
                .iter()
                .enumerate()
                .map(|(j, r)| resolve(format!("edges[{i}].update[{j}]"), &self.registers, r, "register"))
                .collect::<Result<Vec<_>, _>>()?;
            edges.push(Edge {
                from: LocId(from),
                label: Symbol::new(&e.label),
                guard,
                update,
                to: LocId(to),
            });
        }
        RegisterAutomaton::new(
            self.alphabet.iter().map(|s| Symbol::new(s)).collect(),
            self.registers.clone(),
            self.locations.clone(),
            LocId(initial),
            accepting,
            edges,
        )
        .map_err(|e| invalid("document", e.to_string()))
    }

    pub fn from_automaton(aut: &RegisterAutomaton) -> Self {
        let regs = aut.register_names();
        let name = |l: LocId| aut.location_name(l).to_string();
        AutomatonDocument {
            alphabet: aut.alphabet().iter().map(|s| s.as_str().to_string()).collect(),
            registers: regs.to_vec(),
            locations: aut.location_names().to_vec(),
            initial: name(aut.initial()),
            accepting: aut.accepting().map(name).collect(),
            edges: aut
                .edges()
                .iter()
                .map(|e| EdgeDocument {
                    from: name(e.from),
                    label: e.label.as_str().to_string(),
                    guard: e.guard.display(regs).to_string(),
                    update: e.update.iter().map(|&r| regs[r].clone()).collect(),
                    to: name(e.to),
                })
                .collect(),
        }
    }
}

pub fn parse_automaton(text: &str) -> Result<RegisterAutomaton, DocumentError> {
    AutomatonDocument::from_json(text)?.to_automaton()
}

pub fn serialize_automaton(aut: &RegisterAutomaton) -> String {
    AutomatonDocument::from_automaton(aut).to_json()
}

pub fn load_automaton(path: &Path) -> Result<RegisterAutomaton, DocumentError> {
    let text = std::fs::read_to_string(path).map_err(|source| DocumentError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_automaton(&text)
}
