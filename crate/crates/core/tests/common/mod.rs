//! Random automata and shared property checks for the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use regauto::containment::abstract_successors;
use regauto::oracle::{count_accepting_runs, oracle_ambiguity, oracle_emptiness};
use regauto::{
    abstract_of, check_unambiguous, collapse_max, configs_equivalent, emptiness, indistinguishable, initial_sync,
    is_bad, normalize_word, sync_step, tp, Configuration, DataValue, DataWord, Guard, Letter, LocId, PartialIso,
    RegisterAutomaton, State, Symbol, SyncConfig, Unambiguity, Valuation,
};

#[derive(Debug, Clone, Copy)]
pub struct Shape {
    pub max_locations: usize,
    pub max_registers: usize,
    pub max_edges: usize,
}

pub const SMALL: Shape = Shape {
    max_locations: 3,
    max_registers: 2,
    max_edges: 3,
};

/// Left-hand side of the differential pairs: same size bounds, denser.
pub const DENSE: Shape = Shape {
    max_locations: 3,
    max_registers: 2,
    max_edges: 5,
};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn alphabet(symbols: usize) -> Vec<Symbol> {
    ["s", "t"][..symbols].iter().map(|s| Symbol::new(s)).collect()
}

pub fn random_guard(rng: &mut StdRng, registers: usize, depth: usize) -> Guard {
    let atom = |rng: &mut StdRng| {
        if registers == 0 || rng.gen_bool(0.3) {
            Guard::True
        } else if rng.gen_bool(0.5) {
            Guard::eq(rng.gen_range(0..registers))
        } else {
            Guard::neq(rng.gen_range(0..registers))
        }
    };
    if depth == 0 || rng.gen_bool(0.6) {
        return atom(rng);
    }
    let l = random_guard(rng, registers, depth - 1);
    let r = random_guard(rng, registers, depth - 1);
    if rng.gen_bool(0.5) {
        Guard::and(l, r)
    } else {
        Guard::or(l, r)
    }
}

pub fn random_automaton(rng: &mut StdRng, shape: Shape, alphabet: &[Symbol]) -> RegisterAutomaton {
    let locations = rng.gen_range(1..=shape.max_locations);
    // Register-free automata are rarely interesting; draw them less often.
    let registers = if rng.gen_bool(0.1) {
        0
    } else {
        rng.gen_range(1..=shape.max_registers.max(1)).min(shape.max_registers)
    };
    let names: Vec<String> = (0..registers).map(|i| format!("r{i}")).collect();
    let mut b = RegisterAutomaton::builder(alphabet.to_vec(), names);
    let locs: Vec<LocId> = (0..locations).map(|i| b.location(format!("p{i}"))).collect();
    for &l in &locs {
        if rng.gen_bool(0.4) {
            b.accepting(l);
        }
    }
    for &from in &locs {
        for _ in 0..rng.gen_range(0..=shape.max_edges) {
            let label = alphabet.choose(rng).unwrap().clone();
            let guard = random_guard(rng, registers, 1);
            let update: Vec<usize> = (0..registers).filter(|_| rng.gen_bool(0.35)).collect();
            let to = *locs.choose(rng).unwrap();
            b.edge(from, label, guard, update, to);
        }
    }
    b.build().expect("generated automata are well formed")
}

/// An automaton accepted by `check_unambiguous`, or `None` after `tries`
/// rejected draws.
pub fn random_ura(rng: &mut StdRng, shape: Shape, alphabet: &[Symbol], tries: usize) -> Option<RegisterAutomaton> {
    (0..tries)
        .map(|_| random_automaton(rng, shape, alphabet))
        .find(|b| check_unambiguous(b).is_unambiguous())
}

/// A pair `(A, B)` over a shared alphabet of one or two symbols, `B`
/// unambiguous.
pub fn random_pair(seed: u64) -> (RegisterAutomaton, RegisterAutomaton) {
    let mut rng = rng(seed);
    loop {
        let sigma = alphabet(rng.gen_range(1..=2));
        let a = random_automaton(&mut rng, DENSE, &sigma);
        if let Some(b) = random_ura(&mut rng, SMALL, &sigma, 50) {
            return (a, b);
        }
    }
}

pub fn random_word(rng: &mut StdRng, alphabet: &[Symbol], len: usize, max_datum: u32) -> DataWord {
    (0..len)
        .map(|_| Letter::new(alphabet.choose(rng).unwrap().clone(), rng.gen_range(1..=max_datum)))
        .collect()
}

/// A random injection of `1..=n` into `1..=range`.
pub fn random_injection(rng: &mut StdRng, n: u32, range: u32) -> PartialIso {
    let mut targets: Vec<u32> = (1..=range).collect();
    targets.shuffle(rng);
    let pairs: Vec<(u32, u32)> = (1..=n).zip(targets).collect();
    PartialIso::from_data(&pairs).unwrap()
}

pub fn random_valuation(rng: &mut StdRng, registers: usize, max_datum: u32) -> Valuation {
    Valuation::new(
        (0..registers)
            .map(|_| match rng.gen_range(0..=max_datum) {
                0 => DataValue::Bot,
                d => DataValue::Datum(d),
            })
            .collect(),
    )
}

pub fn random_sync(rng: &mut StdRng, m: usize, n: usize, locations: usize, max_datum: u32) -> SyncConfig {
    let a = State::new(LocId(0), random_valuation(rng, m, max_datum));
    let states: Configuration = (0..rng.gen_range(0..=5))
        .map(|_| State::new(LocId(rng.gen_range(0..locations)), random_valuation(rng, n, max_datum)))
        .collect();
    SyncConfig::new(a, states)
}

pub fn rename_sync(f: &PartialIso, s: &SyncConfig) -> SyncConfig {
    SyncConfig::new(
        State::new(s.a_state.location, f.apply_valuation(&s.a_state.valuation).unwrap()),
        f.apply_config(&s.b_config).unwrap(),
    )
}

/// Synchronized configurations visited while reading a random word that
/// `A` can follow, stopping when `A` gets stuck.
pub fn random_walk(
    rng: &mut StdRng,
    a: &RegisterAutomaton,
    b: &RegisterAutomaton,
    steps: usize,
    max_datum: u32,
) -> Vec<SyncConfig> {
    let mut current = initial_sync(a, b);
    let mut out = vec![current.clone()];
    for _ in 0..steps {
        let letter = random_word(rng, a.alphabet(), 1, max_datum).letters()[0].clone();
        let next: Vec<SyncConfig> = sync_step(a, b, &current, &letter).unwrap().into_iter().collect();
        match next.choose(rng) {
            Some(s) => current = s.clone(),
            None => break,
        }
        out.push(current.clone());
    }
    out
}

/// Injective maps `D_⊥ → D_⊥` fixing `Bot`, restricted to the tuple's data,
/// that send `a` to `b`; brute force over the positions.
pub fn iso_maps_tuple(a: &[DataValue], b: &[DataValue]) -> bool {
    let mut fwd: BTreeMap<DataValue, DataValue> = BTreeMap::from([(DataValue::Bot, DataValue::Bot)]);
    let mut bwd = fwd.clone();
    a.iter().zip(b).all(|(&x, &y)| {
        let ok_f = *fwd.entry(x).or_insert(y) == y;
        let ok_b = *bwd.entry(y).or_insert(x) == x;
        ok_f && ok_b
    })
}

/// Every bijection between the data of two configurations, tried in turn.
pub fn brute_force_equivalent(c1: &Configuration, c2: &Configuration) -> bool {
    let d1: Vec<u32> = c1.data().into_iter().collect();
    let d2: Vec<u32> = c2.data().into_iter().collect();
    if d1.len() != d2.len() || c1.len() != c2.len() {
        return false;
    }
    let mut perm = d2.clone();
    permutations(&mut perm, 0, &mut |p| {
        let pairs: Vec<(u32, u32)> = d1.iter().copied().zip(p.iter().copied()).collect();
        PartialIso::from_data(&pairs).unwrap().apply_config(c1).unwrap() == *c2
    })
}

fn permutations(v: &mut Vec<u32>, k: usize, found: &mut dyn FnMut(&[u32]) -> bool) -> bool {
    if k == v.len() {
        return found(v);
    }
    for i in k..v.len() {
        v.swap(k, i);
        if permutations(v, k + 1, found) {
            v.swap(k, i);
            return true;
        }
        v.swap(k, i);
    }
    false
}

pub type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `succ_word` and membership commute with injective datum renaming, and
/// register contents only ever hold data from the word.
pub fn check_iso_invariance(seed: u64) -> Check {
    let mut rng = rng(seed);
    let sigma = alphabet(rng.gen_range(1..=2));
    let aut = random_automaton(&mut rng, SMALL, &sigma);
    let len = rng.gen_range(0..=5);
    let w = random_word(&mut rng, &sigma, len, 4);
    let f = random_injection(&mut rng, 4, 30);
    let fw = f.apply_word(&w).unwrap();
    let init = aut.initial_config();
    let c = aut.succ_word(&init, &w).unwrap();
    let fc = aut.succ_word(&init, &fw).unwrap();
    ensure(f.apply_config(&c).unwrap() == fc, || {
        format!("succ_word not equivariant on {w} / {fw}")
    })?;
    ensure(aut.membership(&w).unwrap() == aut.membership(&fw).unwrap(), || {
        format!("membership differs on {w}")
    })?;
    ensure(
        aut.membership(&normalize_word(&w)).unwrap() == aut.membership(&w).unwrap(),
        || format!("normalization changes membership of {w}"),
    )?;
    let data = w.data();
    ensure(c.data().is_subset(&data), || format!("registers hold data outside {w}"))
}

/// `C ⊆ C'` implies `succ(C) ⊆ succ(C')`.
pub fn check_monotone(seed: u64) -> Check {
    let mut rng = rng(seed);
    let sigma = alphabet(1);
    let aut = random_automaton(&mut rng, SMALL, &sigma);
    let n = aut.register_count();
    let big: Configuration = (0..5)
        .map(|_| {
            State::new(
                LocId(rng.gen_range(0..aut.location_count())),
                random_valuation(&mut rng, n, 3),
            )
        })
        .collect();
    let small: Configuration = big.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
    let letter = Letter::new("s", rng.gen_range(1..=4));
    let (s1, s2) = (
        aut.succ_config(&small, &letter).unwrap(),
        aut.succ_config(&big, &letter).unwrap(),
    );
    ensure(s1.is_subset(&s2), || "succ is not monotone".into())
}

/// Same type iff some partial isomorphism maps one tuple onto the other.
pub fn check_type_iso(seed: u64) -> Check {
    let mut rng = rng(seed);
    let k = rng.gen_range(0..=5);
    let a = random_valuation(&mut rng, k, 4);
    let b = if rng.gen_bool(0.5) {
        random_valuation(&mut rng, k, 4)
    } else {
        random_injection(&mut rng, 4, 9).apply_valuation(&a).unwrap()
    };
    let same = tp(&a) == tp(&b);
    ensure(same == iso_maps_tuple(&a, &b), || {
        format!("tp disagrees with brute force on {a} / {b}")
    })?;
    ensure(tp(&a).holds(&a), || format!("tp({a}) does not hold of {a}"))
}

/// `configs_equivalent` agrees with trying every bijection, and returns a
/// witness isomorphism when it succeeds.
pub fn check_equivalence_brute_force(seed: u64) -> Check {
    let mut rng = rng(seed);
    let make = |rng: &mut StdRng| -> Configuration {
        (0..rng.gen_range(0..=3))
            .map(|_| State::new(LocId(rng.gen_range(0..2)), random_valuation(rng, 2, 3)))
            .collect()
    };
    let c1 = make(&mut rng);
    let c2 = if rng.gen_bool(0.5) {
        make(&mut rng)
    } else {
        random_injection(&mut rng, 3, 6).apply_config(&c1).unwrap()
    };
    let found = configs_equivalent(&c1, &c2);
    ensure(found.is_some() == brute_force_equivalent(&c1, &c2), || {
        "configs_equivalent disagrees".into()
    })?;
    if let Some(f) = found {
        ensure(f.apply_config(&c1).unwrap() == c2, || {
            "returned map is not an isomorphism".into()
        })?;
    }
    Ok(())
}

/// `≍` is reflexive, symmetric and transitive on the valuations of a
/// configuration.
pub fn check_indistinguishability_equivalence(seed: u64) -> Check {
    let mut rng = rng(seed);
    let m = rng.gen_range(0..=2);
    let s = random_sync(&mut rng, m, 2, 3, 3);
    let vals: Vec<Valuation> = s.b_config.valuations().into_iter().cloned().collect();
    let ind = |a: &Valuation, b: &Valuation| indistinguishable(&s, a, b).unwrap();
    for a in &vals {
        ensure(ind(a, a), || format!("{a} not indistinguishable from itself"))?;
        for b in &vals {
            ensure(ind(a, b) == ind(b, a), || "not symmetric".into())?;
            for c in &vals {
                ensure(!(ind(a, b) && ind(b, c)) || ind(a, c), || "not transitive".into())?;
            }
        }
    }
    Ok(())
}

/// Collapsing keeps the set of `B`-locations, hence badness, and leaves no
/// indistinguishable pair behind. Checked along reachable configurations.
pub fn check_collapse(seed: u64) -> Check {
    let (a, b) = random_pair(seed);
    let mut rng = rng(seed ^ 0x5eed);
    for s in random_walk(&mut rng, &a, &b, 6, 4) {
        let c = collapse_max(&s);
        ensure(c.b_config.locations() == s.b_config.locations(), || {
            format!("locations changed collapsing {s}")
        })?;
        ensure(is_bad(&a, &b, &c) == is_bad(&a, &b, &s), || {
            format!("badness changed collapsing {s}")
        })?;
        ensure(c.b_config.is_subset(&s.b_config), || "collapse added states".into())?;
        let vals: Vec<&Valuation> = c.b_config.valuations().into_iter().collect();
        for (i, x) in vals.iter().enumerate() {
            for y in &vals[i + 1..] {
                ensure(!indistinguishable(&c, x, y).unwrap(), || {
                    format!("{x} ≍ {y} survived collapsing")
                })?;
            }
        }
    }
    Ok(())
}

/// The abstraction ignores datum names, and materializing then abstracting
/// again is the identity.
pub fn check_abstraction_canonical(seed: u64) -> Check {
    let mut rng = rng(seed);
    let (m, n) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
    let s = random_sync(&mut rng, m, n, 3, 5);
    let f = random_injection(&mut rng, 5, 40);
    let fs = rename_sync(&f, &s);
    let abs = abstract_of(&s);
    ensure(abstract_of(&fs) == abs, || {
        format!("abstraction differs for {s} and {fs}")
    })?;
    let mat = abs.materialize(n);
    ensure(abstract_of(&mat) == abs, || {
        format!("materialize does not round-trip on {s}")
    })?;
    ensure(configs_equivalent(&mat.b_config, &s.b_config).is_some(), || {
        format!("materialized B-configuration is not equivalent for {s}")
    })?;
    let other = random_sync(&mut rng, m, n, 3, 5);
    if abstract_of(&other) == abs {
        ensure(configs_equivalent(&other.b_config, &s.b_config).is_some(), || {
            "equal abstractions of inequivalent configurations".into()
        })?;
    }
    Ok(())
}

/// Which datum plays "fresh" does not matter as long as it is unused.
pub fn check_fresh_datum(seed: u64) -> Check {
    let (a, b) = random_pair(seed);
    let mut rng = rng(seed ^ 0xf7e5);
    let (n, m) = (b.register_count(), a.register_count());
    for s in random_walk(&mut rng, &a, &b, 4, 3) {
        let node = abstract_of(&collapse_max(&s));
        let canonical_fresh = (node.s() * n + m) as u32 + 1;
        let targets = |fresh| -> BTreeSet<_> { regauto_targets(&a, &b, &node, fresh) };
        ensure(targets(canonical_fresh) == targets(canonical_fresh + 17), || {
            format!("successors of {node} depend on the fresh datum")
        })?;
    }
    Ok(())
}

fn regauto_targets(
    a: &RegisterAutomaton,
    b: &RegisterAutomaton,
    node: &regauto::AbstractConfig,
    fresh: u32,
) -> BTreeSet<(regauto::AbstractConfig, bool)> {
    abstract_successors(a, b, node, fresh, regauto::CollapseRule::Indistinguishable)
        .into_iter()
        .map(|s| (s.target, s.bad))
        .collect()
}

/// The unambiguity check agrees with counting runs on short words.
pub fn check_unambiguity_oracle(seed: u64) -> Check {
    let mut rng = rng(seed);
    let sigma = alphabet(rng.gen_range(1..=2));
    let aut = random_automaton(&mut rng, SMALL, &sigma);
    match check_unambiguous(&aut) {
        Unambiguity::Unambiguous => ensure(oracle_ambiguity(&aut, 4).is_none(), || "oracle found two runs".into()),
        Unambiguity::Ambiguous { witness } => {
            ensure(count_accepting_runs(&aut, &witness).unwrap() >= 2, || {
                format!("{witness} has one run")
            })?;
            if witness.len() <= 4 {
                let shortest = oracle_ambiguity(&aut, 4).map(|w| w.len());
                ensure(shortest == Some(witness.len()), || {
                    "witness is not a shortest one".into()
                })?;
            }
            Ok(())
        }
    }
}

/// The emptiness check agrees with enumeration and finds shortest words.
pub fn check_emptiness_oracle(seed: u64) -> Check {
    let mut rng = rng(seed);
    let sigma = alphabet(rng.gen_range(1..=2));
    let aut = random_automaton(&mut rng, SMALL, &sigma);
    let oracle = oracle_emptiness(&aut, 4);
    match emptiness(&aut) {
        None => ensure(oracle.is_none(), || "oracle found a word in an empty language".into()),
        Some(w) => {
            ensure(aut.membership(&w).unwrap(), || format!("{w} is not accepted"))?;
            ensure(normalize_word(&w) == w, || format!("{w} is not normalized"))?;
            if w.len() <= 4 {
                ensure(oracle.map(|o| o.len()) == Some(w.len()), || {
                    format!("{w} is not shortest")
                })?;
            }
            Ok(())
        }
    }
}
