//! Reducts relative to a candidate answer set `T`.
//!
//! [`reduct_nested`] replaces every default-negated subformula of a nested
//! expression by `top` or `bot`. [`ferraris_plus`] and [`ferraris_minus`]
//! handle arbitrary formulas: the `+` transform turns subformulas that `T`
//! does not satisfy into `bot`, the `-` transform turns subformulas that `T`
//! does not falsify into `top`, and explicit negation swaps between them.
//! Reducts produced by the `+`/`-` pair are read at the total pair `<H,H>`.

use crate::error::{Error, Result};
use crate::semantics::{sat_nested, x5_fals, x5_sat};
use crate::syntax::{Formula, Interpretation, Program, Rule, X5Interpretation};

/// `F^T` for a nested expression `F`. The result contains no `not`.
pub fn reduct_nested(f: &Formula, t: &Interpretation) -> Result<Formula> {
    if !f.is_nested() {
        return Err(Error::NotNested(f.clone()));
    }
    Ok(reduct_unchecked(f, t))
}

fn reduct_unchecked(f: &Formula, t: &Interpretation) -> Formula {
    match f {
        Formula::Bot | Formula::Top | Formula::Atom(_) => f.clone(),
        Formula::And(a, b) => reduct_unchecked(a, t).and(reduct_unchecked(b, t)),
        Formula::Or(a, b) => reduct_unchecked(a, t).or(reduct_unchecked(b, t)),
        Formula::XNeg(a) => reduct_unchecked(a, t).xneg(),
        Formula::DNeg(a) => {
            if sat_nested(t, a) {
                Formula::Bot
            } else {
                Formula::Top
            }
        }
        Formula::Impl(..) => unreachable!("checked by reduct_nested"),
    }
}

/// `P^T`: the rule-wise reduct, an explicit program.
pub fn reduct_program(program: &Program, t: &Interpretation) -> Program {
    program
        .rules()
        .iter()
        .map(|rule| {
            Rule::new(reduct_unchecked(rule.body(), t), reduct_unchecked(rule.head(), t))
                .expect("reducts of nested expressions are nested")
        })
        .collect()
}

/// How the `+`/`-` reducts treat implications.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum ImplicationHandling {
    /// `(a -> b)+ = not (a+) | b+` and `(a -> b)- = b-`.
    #[default]
    Direct,
    /// Rewrite every `a -> b` to `not a | b` before reducing. This agrees with
    /// [`ImplicationHandling::Direct`] at `H = T` but not at smaller
    /// here-worlds: for `p -> p` and `T = {p}`, `H = {}` satisfies the direct
    /// reduct `not p | p` but not the rewritten one, `bot | p`.
    PreRewrite,
}

/// `phi^T_+`.
pub fn ferraris_plus(phi: &Formula, t: &Interpretation) -> Formula {
    ferraris_plus_with(phi, t, ImplicationHandling::Direct)
}

/// `phi^T_-`.
pub fn ferraris_minus(phi: &Formula, t: &Interpretation) -> Formula {
    ferraris_minus_with(phi, t, ImplicationHandling::Direct)
}

pub fn ferraris_plus_with(phi: &Formula, t: &Interpretation, handling: ImplicationHandling) -> Formula {
    let total = X5Interpretation::total(t.clone());
    match handling {
        ImplicationHandling::Direct => plus(phi, &total),
        ImplicationHandling::PreRewrite => plus(&rewrite_implications(phi), &total),
    }
}

pub fn ferraris_minus_with(phi: &Formula, t: &Interpretation, handling: ImplicationHandling) -> Formula {
    let total = X5Interpretation::total(t.clone());
    match handling {
        ImplicationHandling::Direct => minus(phi, &total),
        ImplicationHandling::PreRewrite => minus(&rewrite_implications(phi), &total),
    }
}

/// Replaces every `a -> b` by `not a | b`, innermost first.
pub fn rewrite_implications(phi: &Formula) -> Formula {
    match phi {
        Formula::Bot | Formula::Top | Formula::Atom(_) => phi.clone(),
        Formula::XNeg(a) => rewrite_implications(a).xneg(),
        Formula::DNeg(a) => rewrite_implications(a).dneg(),
        Formula::And(a, b) => rewrite_implications(a).and(rewrite_implications(b)),
        Formula::Or(a, b) => rewrite_implications(a).or(rewrite_implications(b)),
        Formula::Impl(a, b) => rewrite_implications(a).dneg().or(rewrite_implications(b)),
    }
}

fn plus(phi: &Formula, total: &X5Interpretation) -> Formula {
    if !x5_sat(total, phi) {
        return Formula::Bot;
    }
    match phi {
        Formula::Top | Formula::Atom(_) => phi.clone(),
        Formula::Bot => unreachable!("bot is never satisfied"),
        Formula::And(a, b) => plus(a, total).and(plus(b, total)),
        Formula::Or(a, b) => plus(a, total).or(plus(b, total)),
        Formula::Impl(a, b) => plus(a, total).dneg().or(plus(b, total)),
        Formula::DNeg(a) => plus(a, total).dneg(),
        Formula::XNeg(a) => minus(a, total).xneg(),
    }
}

fn minus(phi: &Formula, total: &X5Interpretation) -> Formula {
    if !x5_fals(total, phi) {
        return Formula::Top;
    }
    match phi {
        Formula::Bot | Formula::Atom(_) => phi.clone(),
        Formula::Top => unreachable!("top is never falsified"),
        Formula::And(a, b) => minus(a, total).and(minus(b, total)),
        Formula::Or(a, b) => minus(a, total).or(minus(b, total)),
        Formula::Impl(_, b) => minus(b, total),
        Formula::DNeg(_) => Formula::Bot,
        Formula::XNeg(a) => plus(a, total).xneg(),
    }
}

/// Exhaustive bottom-up folding of `top`/`bot` and of `~~phi` into `phi`.
///
/// Every rewrite is a substitution equivalence, so the five-valued value is
/// unchanged at every interpretation.
pub fn simplify_constants(phi: &Formula) -> Formula {
    use Formula::{And, Bot, DNeg, Impl, Or, Top, XNeg};
    match phi {
        Bot | Top | Formula::Atom(_) => phi.clone(),
        And(a, b) => match (simplify_constants(a), simplify_constants(b)) {
            (Bot, _) | (_, Bot) => Bot,
            (Top, x) | (x, Top) => x,
            (x, y) => x.and(y),
        },
        Or(a, b) => match (simplify_constants(a), simplify_constants(b)) {
            (Top, _) | (_, Top) => Top,
            (Bot, x) | (x, Bot) => x,
            (x, y) => x.or(y),
        },
        XNeg(a) => match simplify_constants(a) {
            Top => Bot,
            Bot => Top,
            XNeg(inner) => *inner,
            x => x.xneg(),
        },
        DNeg(a) => match simplify_constants(a) {
            Top => Bot,
            Bot => Top,
            x => x.dneg(),
        },
        Impl(a, b) => match (simplify_constants(a), simplify_constants(b)) {
            (Bot, _) | (_, Top) => Top,
            (Top, x) => x,
            (x, y) => x.implies(y),
        },
    }
}

/// Simplifies both sides of every rule, dropping rules that become `top`.
pub fn simplify_program(program: &Program) -> Program {
    program
        .rules()
        .iter()
        .filter_map(|rule| {
            let body = simplify_constants(rule.body());
            let head = simplify_constants(rule.head());
            if body == Formula::Bot || head == Formula::Top {
                None
            } else {
                Some(Rule::new(body, head).expect("simplification keeps nested expressions nested"))
            }
        })
        .collect()
}

/// `Gamma^T_+` evaluated at `<H,H>`: does `h` satisfy the reduct of `phi`?
pub fn satisfies_plus(h: &Interpretation, reduct: &Formula) -> bool {
    x5_sat(&X5Interpretation::total(h.clone()), reduct)
}

/// Does `h` falsify the `-` reduct at `<H,H>`?
pub fn falsifies_minus(h: &Interpretation, reduct: &Formula) -> bool {
    x5_fals(&X5Interpretation::total(h.clone()), reduct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{parse_formula, parse_interpretation, parse_program};

    fn f(text: &str) -> Formula {
        parse_formula(text).unwrap()
    }

    fn t(text: &str) -> Interpretation {
        parse_interpretation(text).unwrap()
    }

    const BIRD: &str = "not (bird & ~flies) -> ~(bird & ~flies)";

    #[test]
    fn nested_reduct_examples() {
        assert_eq!(reduct_nested(&f("~ not p"), &t("{p}")).unwrap(), f("~bot"));
        assert_eq!(reduct_nested(&f("~ not p"), &t("{}")).unwrap(), f("~top"));
        assert_eq!(reduct_nested(&f("~ not p"), &t("{~p}")).unwrap(), f("~top"));
        for text in ["{}", "{p}", "{~q}", "{p, q}"] {
            assert_eq!(reduct_nested(&f("p & ~q"), &t(text)).unwrap(), f("p & ~q"));
        }
        assert!(matches!(reduct_nested(&f("p -> q"), &t("{}")), Err(Error::NotNested(_))));
    }

    #[test]
    fn program_reduct_examples() {
        let program = parse_program("~ not p -> p.").unwrap();
        assert_eq!(reduct_program(&program, &t("{p}")), parse_program("~bot -> p.").unwrap());
        assert_eq!(reduct_program(&program, &t("{}")), parse_program("~top -> p.").unwrap());

        let bird = parse_program(&format!("{BIRD}.")).unwrap();
        let reduct = reduct_program(&bird, &t("{bird, ~flies}"));
        assert_eq!(reduct.rules()[0].body(), &Formula::Bot);
        let reduct = reduct_program(&bird, &t("{flies}"));
        assert_eq!(reduct.rules()[0].body(), &Formula::Top);
        assert!(reduct.is_explicit());

        assert!(reduct_program(&Program::default(), &t("{p}")).is_empty());
    }

    #[test]
    fn ferraris_bird_examples() {
        let phi = f(BIRD);
        let raw = ferraris_plus(&phi, &t("{~bird}"));
        assert_eq!(raw, f("not not bot | ~(bird & top)"));
        assert_eq!(simplify_constants(&raw), f("~bird"));

        let raw = ferraris_plus(&phi, &t("{flies}"));
        assert_eq!(raw, f("not not bot | ~(top & ~flies)"));
        assert_eq!(simplify_constants(&raw), f("flies"));

        assert_eq!(ferraris_plus(&phi, &t("{bird}")), Formula::Bot);
    }

    #[test]
    fn ferraris_minus_cases() {
        // not falsified at <T,T>
        assert_eq!(ferraris_minus(&f("p"), &t("{p}")), Formula::Top);
        assert_eq!(ferraris_minus(&f("p"), &t("{~p}")), f("p"));
        assert_eq!(ferraris_minus(&f("not p"), &t("{p}")), Formula::Bot);
        assert_eq!(ferraris_minus(&f("q -> p"), &t("{q, ~p}")), f("p"));
        assert_eq!(ferraris_minus(&f("~p"), &t("{p}")), f("~p"));
        assert_eq!(ferraris_plus(&f("~p"), &t("{~p}")), f("~p"));
    }

    #[test]
    fn pre_rewrite_disagrees_below_total() {
        let phi = f("p -> p");
        let there = t("{p}");
        let direct = ferraris_plus(&phi, &there);
        let rewritten = ferraris_plus_with(&phi, &there, ImplicationHandling::PreRewrite);
        assert_eq!(direct, f("not p | p"));
        assert_eq!(rewritten, f("bot | p"));
        assert!(satisfies_plus(&t("{}"), &direct));
        assert!(!satisfies_plus(&t("{}"), &rewritten));
        assert!(satisfies_plus(&there, &direct) && satisfies_plus(&there, &rewritten));
    }

    #[test]
    fn simplification() {
        assert_eq!(simplify_constants(&f("~(bird & top) | not not bot")), f("~bird"));
        assert_eq!(simplify_constants(&f("p")), f("p"));
        assert_eq!(simplify_constants(&f("top -> p")), f("p"));
        assert_eq!(simplify_constants(&f("bot -> p")), Formula::Top);
        assert_eq!(simplify_constants(&f("p -> top")), Formula::Top);
        assert_eq!(simplify_constants(&f("~top | not top")), Formula::Bot);
        assert_eq!(simplify_constants(&f("p & bot | q")), f("q"));
        assert_eq!(simplify_constants(&f("~~~p")), f("~p"));
    }

    #[test]
    fn simplified_program_reduct() {
        let program = parse_program("~ not p -> p.").unwrap();
        let reduct = simplify_program(&reduct_program(&program, &t("{p}")));
        assert_eq!(reduct, parse_program("p.").unwrap());
        let reduct = simplify_program(&reduct_program(&program, &t("{}")));
        assert!(reduct.is_empty());
    }
}
