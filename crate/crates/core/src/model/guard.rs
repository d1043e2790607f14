use std::fmt;

use super::DataValue;

/// A register constraint in the core grammar `true | =r | ¬φ | φ ∧ φ`.
///
/// `neq` and `or` are sugar and build core trees directly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Guard {
    True,
    /// The input datum equals the content of register `i` (0-based).
    Eq(usize),
    Not(Box<Guard>),
    And(Box<Guard>, Box<Guard>),
}

impl Guard {
    pub fn eq(register: usize) -> Guard {
        Guard::Eq(register)
    }

    pub fn neq(register: usize) -> Guard {
        Guard::not(Guard::Eq(register))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(inner: Guard) -> Guard {
        Guard::Not(Box::new(inner))
    }

    pub fn and(lhs: Guard, rhs: Guard) -> Guard {
        Guard::And(Box::new(lhs), Box::new(rhs))
    }

    /// `φ ∨ ψ` as `¬(¬φ ∧ ¬ψ)`.
    pub fn or(lhs: Guard, rhs: Guard) -> Guard {
        Guard::not(Guard::and(Guard::not(lhs), Guard::not(rhs)))
    }

    /// Whether `valuation, datum ⊨ self`.
    pub fn eval(&self, valuation: &[DataValue], datum: u32) -> bool {
        match self {
            Guard::True => true,
            Guard::Eq(i) => valuation[*i] == DataValue::Datum(datum),
            Guard::Not(g) => !g.eval(valuation, datum),
            Guard::And(l, r) => l.eval(valuation, datum) && r.eval(valuation, datum),
        }
    }

    /// Largest register index mentioned, if any.
    pub fn max_register(&self) -> Option<usize> {
        match self {
            Guard::True => None,
            Guard::Eq(i) => Some(*i),
            Guard::Not(g) => g.max_register(),
            Guard::And(l, r) => l.max_register().max(r.max_register()),
        }
    }

    /// Renders the guard in the surface syntax using the given register
    /// names. Only core connectives are printed, so parsing the output
    /// yields the same tree.
    pub fn display<'a>(&'a self, registers: &'a [String]) -> GuardDisplay<'a> {
        GuardDisplay { guard: self, registers }
    }
}

pub struct GuardDisplay<'a> {
    guard: &'a Guard,
    registers: &'a [String],
}

impl fmt::Display for GuardDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(g: &Guard, regs: &[String], f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match g {
                Guard::True => f.write_str("true"),
                Guard::Eq(i) => write!(f, "={}", regs[*i]),
                Guard::Not(inner) => {
                    f.write_str("!(")?;
                    go(inner, regs, f)?;
                    f.write_str(")")
                }
                Guard::And(l, r) => {
                    f.write_str("(")?;
                    go(l, regs, f)?;
                    f.write_str(" & ")?;
                    go(r, regs, f)?;
                    f.write_str(")")
                }
            }
        }
        go(self.guard, self.registers, f)
    }
}
