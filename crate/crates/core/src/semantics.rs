//! Evaluation relations.
//!
//! - [`sat`]/[`fals`]: satisfaction and falsification of nested expressions
//!   by a single consistent literal set;
//! - [`x5_sat`]/[`x5_fals`]: satisfaction and falsification by a
//!   here-and-there pair `<H,T>`;
//! - [`value5`]: the five-valued valuation, with the explicit-negation
//!   implication table ([`EvalMode::X5`]) or the strong-negation one
//!   ([`EvalMode::N5`]);
//! - [`classical_sat`]: here-and-there with `~` read as plain non-satisfaction,
//!   kept only to exhibit how that reading breaks persistence.

use std::fmt;

use crate::error::{Error, Result};
use crate::syntax::{FiveValue, Formula, Interpretation, Theory, X5Interpretation};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum EvalMode {
    /// Explicit negation.
    #[default]
    X5,
    /// Nelson's strong negation: `1 -> -2` evaluates to `-1`.
    N5,
    /// `~` as classical negation inside here-and-there; satisfaction only.
    ClassicalNeg,
}

impl fmt::Display for EvalMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EvalMode::X5 => "x5",
            EvalMode::N5 => "n5",
            EvalMode::ClassicalNeg => "classical",
        })
    }
}

/// `T ⊨ F` for a nested expression.
pub fn sat(t: &Interpretation, f: &Formula) -> Result<bool> {
    ensure_nested(f)?;
    Ok(sat_nested(t, f))
}

/// `T =| F` for a nested expression.
pub fn fals(t: &Interpretation, f: &Formula) -> Result<bool> {
    ensure_nested(f)?;
    Ok(fals_nested(t, f))
}

fn ensure_nested(f: &Formula) -> Result<()> {
    if f.is_nested() {
        Ok(())
    } else {
        Err(Error::NotNested(f.clone()))
    }
}

/// `T ⊨ F`; the caller guarantees `F` is nested.
pub(crate) fn sat_nested(t: &Interpretation, f: &Formula) -> bool {
    match f {
        Formula::Top => true,
        Formula::Bot => false,
        Formula::Atom(p) => t.holds(p),
        Formula::And(a, b) => sat_nested(t, a) && sat_nested(t, b),
        Formula::Or(a, b) => sat_nested(t, a) || sat_nested(t, b),
        Formula::XNeg(a) => fals_nested(t, a),
        Formula::DNeg(a) => !sat_nested(t, a),
        Formula::Impl(..) => unreachable!("nested expressions contain no implication"),
    }
}

pub(crate) fn fals_nested(t: &Interpretation, f: &Formula) -> bool {
    match f {
        Formula::Top => false,
        Formula::Bot => true,
        Formula::Atom(p) => t.holds_negated(p),
        Formula::And(a, b) => fals_nested(t, a) || fals_nested(t, b),
        Formula::Or(a, b) => fals_nested(t, a) && fals_nested(t, b),
        Formula::XNeg(a) => sat_nested(t, a),
        Formula::DNeg(a) => sat_nested(t, a),
        Formula::Impl(..) => unreachable!("nested expressions contain no implication"),
    }
}

/// `<H,T> ⊨ phi`.
pub fn x5_sat(m: &X5Interpretation, phi: &Formula) -> bool {
    sat_at(m.here(), m.there(), phi)
}

/// `<H,T> =| phi`.
pub fn x5_fals(m: &X5Interpretation, phi: &Formula) -> bool {
    fals_at(m.here(), m.there(), phi)
}

fn sat_at(h: &Interpretation, t: &Interpretation, phi: &Formula) -> bool {
    match phi {
        Formula::Top => true,
        Formula::Bot => false,
        Formula::Atom(p) => h.holds(p),
        Formula::And(a, b) => sat_at(h, t, a) && sat_at(h, t, b),
        Formula::Or(a, b) => sat_at(h, t, a) || sat_at(h, t, b),
        Formula::XNeg(a) => fals_at(h, t, a),
        Formula::DNeg(a) => !sat_at(t, t, a),
        Formula::Impl(a, b) => {
            (!sat_at(h, t, a) || sat_at(h, t, b)) && (!sat_at(t, t, a) || sat_at(t, t, b))
        }
    }
}

fn fals_at(h: &Interpretation, t: &Interpretation, phi: &Formula) -> bool {
    match phi {
        Formula::Top => false,
        Formula::Bot => true,
        Formula::Atom(p) => h.holds_negated(p),
        Formula::And(a, b) => fals_at(h, t, a) || fals_at(h, t, b),
        Formula::Or(a, b) => fals_at(h, t, a) && fals_at(h, t, b),
        Formula::XNeg(a) => sat_at(h, t, a),
        Formula::DNeg(a) => sat_at(t, t, a),
        Formula::Impl(a, b) => sat_at(t, t, a) && fals_at(h, t, b),
    }
}

/// Five-valued valuation `M(phi)`; `mode` must be [`EvalMode::X5`] or
/// [`EvalMode::N5`].
pub fn value5(m: &X5Interpretation, phi: &Formula, mode: EvalMode) -> Result<FiveValue> {
    let strong = match mode {
        EvalMode::X5 => false,
        EvalMode::N5 => true,
        EvalMode::ClassicalNeg => return Err(Error::UnsupportedMode(mode)),
    };
    Ok(FiveValue::new(i64::from(valuate(m, phi, strong))).expect("valuation stays in range"))
}

/// Value of `phi` in the explicit-negation logic.
pub fn value(m: &X5Interpretation, phi: &Formula) -> FiveValue {
    FiveValue::new(i64::from(valuate(m, phi, false))).expect("valuation stays in range")
}

/// The implication table. With `strong` set, the cell `1 -> -2` is `-1`.
pub fn implication_value(antecedent: FiveValue, consequent: FiveValue, strong: bool) -> FiveValue {
    let v = implication(antecedent.get(), consequent.get(), strong);
    FiveValue::new(i64::from(v)).expect("valuation stays in range")
}

fn implication(a: i8, b: i8, strong: bool) -> i8 {
    if a <= b.max(0) {
        2
    } else if strong && a == 1 && b == -2 {
        -1
    } else {
        b
    }
}

fn valuate(m: &X5Interpretation, phi: &Formula, strong: bool) -> i8 {
    match phi {
        Formula::Bot => -2,
        Formula::Top => 2,
        Formula::Atom(p) => m.value(p).get(),
        Formula::And(a, b) => valuate(m, a, strong).min(valuate(m, b, strong)),
        Formula::Or(a, b) => valuate(m, a, strong).max(valuate(m, b, strong)),
        Formula::XNeg(a) => -valuate(m, a, strong),
        Formula::DNeg(a) => implication(valuate(m, a, strong), -2, strong),
        Formula::Impl(a, b) => implication(valuate(m, a, strong), valuate(m, b, strong), strong),
    }
}

/// Here-and-there satisfaction with `<H,T> ⊨ ~phi` iff `<H,T> ⊭ phi`.
///
/// Atoms are read from the positive literals of each world.
pub fn classical_sat(m: &X5Interpretation, phi: &Formula) -> bool {
    classical_at(m.here(), m.there(), phi)
}

fn classical_at(h: &Interpretation, t: &Interpretation, phi: &Formula) -> bool {
    match phi {
        Formula::Top => true,
        Formula::Bot => false,
        Formula::Atom(p) => h.holds(p),
        Formula::And(a, b) => classical_at(h, t, a) && classical_at(h, t, b),
        Formula::Or(a, b) => classical_at(h, t, a) || classical_at(h, t, b),
        Formula::XNeg(a) => !classical_at(h, t, a),
        Formula::DNeg(a) => !classical_at(h, t, a) && !classical_at(t, t, a),
        Formula::Impl(a, b) => {
            (!classical_at(h, t, a) || classical_at(h, t, b))
                && (!classical_at(t, t, a) || classical_at(t, t, b))
        }
    }
}

/// `<H,T>` satisfies every member of the theory.
pub fn is_model(m: &X5Interpretation, theory: &Theory) -> bool {
    theory.formulas().iter().all(|phi| x5_sat(m, phi))
}

/// `T` satisfies every rule of an explicit (or arbitrary nested) program,
/// reading each rule as "head whenever body".
pub fn is_classical_model(t: &Interpretation, program: &crate::syntax::Program) -> bool {
    program
        .rules()
        .iter()
        .all(|rule| !sat_nested(t, rule.body()) || sat_nested(t, rule.head()))
}
