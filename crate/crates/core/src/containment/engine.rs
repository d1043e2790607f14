use std::collections::{HashMap, VecDeque};

use super::abstraction::{abstract_of, AbstractConfig};
use super::collapse::{collapse_with, CollapseRule};
use super::sync::{initial_sync, is_bad, successors_with, SyncConfig};
use crate::analysis::{check_unambiguous, Unambiguity};
use crate::error::{Error, Result};
use crate::model::{DataWord, Letter, RegisterAutomaton};
use crate::oracle;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContainmentOptions {
    /// Longest word the oracle tries when extracting a counterexample.
    pub witness_cap: usize,
    pub collapse: CollapseRule,
    /// Maximum number of abstract configurations expanded.
    pub node_budget: usize,
    /// Skip the unambiguity check on `B`. The verdict is then unsound
    /// whenever `B` is in fact ambiguous.
    pub skip_unambiguity_check: bool,
}

impl Default for ContainmentOptions {
    fn default() -> Self {
        ContainmentOptions {
            witness_cap: 8,
            collapse: CollapseRule::Indistinguishable,
            node_budget: 1_000_000,
            skip_unambiguity_check: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Contained,
    NotContained {
        /// Letters along the abstract path to a bad configuration, each in
        /// the datum frame of the configuration it was read from. Not a
        /// counterexample word in general.
        trace: Vec<Letter>,
        /// A concrete counterexample found by bounded enumeration.
        witness: Option<DataWord>,
        /// `witness` is accepted by `A` and rejected by `B`.
        witness_verified: bool,
    },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Contained)
    }

    pub fn witness(&self) -> Option<&DataWord> {
        match self {
            Verdict::Contained => None,
            Verdict::NotContained { witness, .. } => witness.as_ref(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContainmentReport {
    pub verdict: Verdict,
    /// Abstract configurations expanded.
    pub nodes_explored: usize,
    /// Abstract configurations discovered, including unexpanded ones.
    pub nodes_discovered: usize,
    /// Largest number of distinct `B`-valuations in any discovered (collapsed)
    /// configuration.
    pub peak_valuations: usize,
}

/// One successor of an abstract configuration.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AbstractStep {
    pub letter: Letter,
    pub target: AbstractConfig,
    pub bad: bool,
    pub valuations: usize,
}

/// The `⤳`-successors of `node`: materialize it, fire every letter whose
/// datum is one of the node's data or `fresh`, collapse according to
/// `rule`, and abstract. `fresh` must not occur in the materialization,
/// i.e. exceed `s·n+m`.
///
/// Successors whose `A`-location cannot reach acceptance are dropped, and so
/// are `B`-states whose location cannot: neither can affect badness later.
pub fn abstract_successors(
    a: &RegisterAutomaton,
    b: &RegisterAutomaton,
    node: &AbstractConfig,
    fresh: u32,
    rule: CollapseRule,
) -> Vec<AbstractStep> {
    Expander::new(a, b, rule).successors(node, fresh)
}

struct Expander<'a> {
    a: &'a RegisterAutomaton,
    b: &'a RegisterAutomaton,
    rule: CollapseRule,
    a_live: Vec<bool>,
    b_live: Vec<bool>,
}

impl<'a> Expander<'a> {
    fn new(a: &'a RegisterAutomaton, b: &'a RegisterAutomaton, rule: CollapseRule) -> Self {
        Expander {
            a,
            b,
            rule,
            a_live: a.coreachable(),
            b_live: b.coreachable(),
        }
    }

    /// `None` when the `A`-state can never accept again.
    fn reduce(&self, sync: SyncConfig) -> Option<SyncConfig> {
        if !self.a_live[sync.a_state.location.0] {
            return None;
        }
        let b_config = sync
            .b_config
            .iter()
            .filter(|s| self.b_live[s.location.0])
            .cloned()
            .collect();
        Some(collapse_with(&SyncConfig::new(sync.a_state, b_config), self.rule))
    }

    fn successors(&self, node: &AbstractConfig, fresh: u32) -> Vec<AbstractStep> {
        let concrete = node.materialize(self.b.register_count());
        successors_with(self.a, self.b, &concrete, fresh)
            .into_iter()
            .filter_map(|(letter, next)| {
                let collapsed = self.reduce(next)?;
                Some(AbstractStep {
                    bad: is_bad(self.a, self.b, &collapsed),
                    valuations: collapsed.valuation_count(),
                    target: abstract_of(&collapsed),
                    letter,
                })
            })
            .collect()
    }
}

/// Decides `L(A) ⊆ L(B)` for unambiguous `B` by searching for a reachable
/// bad abstract configuration.
pub fn check_containment(
    a: &RegisterAutomaton,
    b: &RegisterAutomaton,
    options: &ContainmentOptions,
) -> Result<ContainmentReport> {
    if !a.same_alphabet(b) {
        return Err(Error::AlphabetMismatch);
    }
    if !options.skip_unambiguity_check {
        if let Unambiguity::Ambiguous { witness } = check_unambiguous(b) {
            return Err(Error::Ambiguous { witness });
        }
    }
    let expander = Expander::new(a, b, options.collapse);
    let mut report = ContainmentReport {
        verdict: Verdict::Contained,
        nodes_explored: 0,
        nodes_discovered: 0,
        peak_valuations: 0,
    };
    let Some(start) = expander.reduce(initial_sync(a, b)) else {
        return Ok(report);
    };
    report.nodes_discovered = 1;
    report.peak_valuations = start.valuation_count();
    if is_bad(a, b, &start) {
        report.verdict = not_contained(a, b, Vec::new(), options);
        return Ok(report);
    }

    let n = b.register_count();
    let m = a.register_count();
    let mut nodes: Vec<(AbstractConfig, Option<(usize, Letter)>)> = vec![(abstract_of(&start), None)];
    let mut index: HashMap<AbstractConfig, usize> = HashMap::from([(nodes[0].0.clone(), 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        if report.nodes_explored >= options.node_budget {
            return Err(Error::BudgetExhausted {
                nodes: report.nodes_explored,
            });
        }
        report.nodes_explored += 1;
        let node = nodes[i].0.clone();
        let fresh = (node.s() * n + m) as u32 + 1;
        for step in expander.successors(&node, fresh) {
            report.peak_valuations = report.peak_valuations.max(step.valuations);
            if index.contains_key(&step.target) {
                continue;
            }
            if step.bad {
                let mut trace = vec![step.letter];
                let mut at = i;
                while let Some((parent, letter)) = &nodes[at].1 {
                    trace.push(letter.clone());
                    at = *parent;
                }
                trace.reverse();
                report.nodes_discovered = nodes.len() + 1;
                report.verdict = not_contained(a, b, trace, options);
                return Ok(report);
            }
            index.insert(step.target.clone(), nodes.len());
            queue.push_back(nodes.len());
            nodes.push((step.target, Some((i, step.letter))));
        }
    }
    report.nodes_discovered = nodes.len();
    Ok(report)
}

fn not_contained(
    a: &RegisterAutomaton,
    b: &RegisterAutomaton,
    trace: Vec<Letter>,
    options: &ContainmentOptions,
) -> Verdict {
    let witness = oracle::find_witness(a, b, options.witness_cap);
    Verdict::NotContained {
        trace,
        witness_verified: witness.is_some(),
        witness,
    }
}

/// `L(B) = (Σ × D)*`, as containment of the universal automaton in `B`.
pub fn check_universal(b: &RegisterAutomaton, options: &ContainmentOptions) -> Result<ContainmentReport> {
    check_containment(&RegisterAutomaton::universal(b.alphabet()), b, options)
}

/// Both containments; the automata are equivalent iff both hold. Each side
/// must be unambiguous.
pub fn check_equivalent(
    a: &RegisterAutomaton,
    b: &RegisterAutomaton,
    options: &ContainmentOptions,
) -> Result<(ContainmentReport, ContainmentReport)> {
    if !a.same_alphabet(b) {
        return Err(Error::AlphabetMismatch);
    }
    if !options.skip_unambiguity_check {
        for aut in [a, b] {
            if let Unambiguity::Ambiguous { witness } = check_unambiguous(aut) {
                return Err(Error::Ambiguous { witness });
            }
        }
    }
    let mut opts = options.clone();
    opts.skip_unambiguity_check = true;
    Ok((check_containment(a, b, &opts)?, check_containment(b, a, &opts)?))
}
