//! Small hand-built automata used throughout the tests and the CLI fixtures.

use crate::model::{Guard, RegisterAutomaton};

/// One register over `{s}`: guess a position, store its datum, skip
/// different datums, accept on the first repetition. Accepts exactly the
/// words in which some datum occurs twice, and is unambiguous.
pub fn repeated_datum() -> RegisterAutomaton {
    let mut b = RegisterAutomaton::builder(["s"], ["r"]);
    let l0 = b.location("l0");
    let l1 = b.location("l1");
    let l2 = b.location("l2");
    b.accepting(l2)
        .edge(l0, "s", Guard::True, [], l0)
        .edge(l0, "s", Guard::True, [0], l1)
        .edge(l1, "s", Guard::neq(0), [], l1)
        .edge(l1, "s", Guard::eq(0), [], l2);
    b.build().expect("well formed")
}

/// One register over `{s}`: accepts the four-letter words whose second
/// datum differs from the first. Location `q3` is reached after three
/// letters with the third datum stored.
pub fn four_letter() -> RegisterAutomaton {
    let mut b = RegisterAutomaton::builder(["s"], ["r"]);
    let q: Vec<_> = (0..5).map(|i| b.location(format!("q{i}"))).collect();
    b.accepting(q[4])
        .edge(q[0], "s", Guard::True, [0], q[1])
        .edge(q[1], "s", Guard::neq(0), [], q[2])
        .edge(q[2], "s", Guard::True, [0], q[3])
        .edge(q[3], "s", Guard::True, [], q[4]);
    b.build().expect("well formed")
}

/// Two registers over `{s}`, unambiguous. On the fourth letter exactly one
/// of three branches reaches the accepting sink `acc`, which loops on
/// every letter. [`four_letter`] is contained in it, yet the two `l`-slices
/// reached after `s:1 s:2 s:3` have the same type relative to the
/// `four_letter` register while being distinguishable.
pub fn three_way_split() -> RegisterAutomaton {
    three_way_split_with(true, true)
}

/// [`three_way_split`] without the `=r1` edge from `l` into `acc`, so that
/// words like `s:1 s:2 s:3 s:1` are rejected.
pub fn three_way_split_missing_edge() -> RegisterAutomaton {
    three_way_split_with(false, true)
}

/// [`three_way_split`] without the self-loop on `acc`. Only longer words
/// are affected, so [`four_letter`] is still contained.
pub fn three_way_split_no_loop() -> RegisterAutomaton {
    three_way_split_with(true, false)
}

fn three_way_split_with(l_to_acc: bool, acc_loop: bool) -> RegisterAutomaton {
    let mut b = RegisterAutomaton::builder(["s"], ["r1", "r2"]);
    let b0 = b.location("b0");
    let u1 = b.location("u1");
    let v1 = b.location("v1");
    let u2 = b.location("u2");
    let v2 = b.location("v2");
    let lp = b.location("lp");
    let l = b.location("l");
    let sink = b.location("sink");
    let acc = b.location("acc");
    b.accepting(acc)
        .edge(b0, "s", Guard::True, [0], u1)
        .edge(b0, "s", Guard::True, [0], v1)
        .edge(u1, "s", Guard::neq(0), [1], u2)
        .edge(v1, "s", Guard::neq(0), [0], v2)
        .edge(v1, "s", Guard::neq(0), [], v2)
        .edge(u2, "s", Guard::True, [], lp)
        .edge(v2, "s", Guard::True, [1], l)
        .edge(lp, "s", Guard::or(Guard::eq(0), Guard::eq(1)), [], sink)
        .edge(lp, "s", Guard::and(Guard::neq(0), Guard::neq(1)), [], acc)
        .edge(l, "s", Guard::neq(0), [], sink);
    if l_to_acc {
        b.edge(l, "s", Guard::eq(0), [], acc);
    }
    if acc_loop {
        b.edge(acc, "s", Guard::True, [], acc);
    }
    b.build().expect("well formed")
}
