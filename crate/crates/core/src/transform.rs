//! Rewrite systems: explicit-negation normal form, regularization, ASP
//! export and the operator encodings between the two five-valued logics.

use std::fmt;

use crate::error::{Error, Result};
use crate::parser::parse_formula;
use crate::semantics::EvalMode;
use crate::syntax::{Atom, Atoms, ExplicitLiteral, Formula, Program, Rule};

/// Strength of a rewrite law.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strength {
    /// `lhs ⟺ rhs`: replaceable in any context.
    Substitution,
    /// `lhs ↔ rhs`: replaceable outside the scope of `~`.
    Weak,
    /// `lhs` is valid on its own; `rhs` is `top`.
    Validity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Law {
    pub name: &'static str,
    pub lhs: Formula,
    pub rhs: Formula,
    pub strength: Strength,
    pub mode: EvalMode,
}

impl Law {
    /// The formula whose validity the law asserts.
    pub fn statement(&self) -> Formula {
        match self.strength {
            Strength::Substitution => self.lhs.clone().strong_iff(self.rhs.clone()),
            Strength::Weak => self.lhs.clone().iff(self.rhs.clone()),
            Strength::Validity => self.lhs.clone(),
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.strength {
            Strength::Substitution => "<=>",
            Strength::Weak => "<->",
            Strength::Validity => return write!(f, "{}: {}", self.name, self.lhs),
        };
        write!(f, "{}: {} {op} {}", self.name, self.lhs, self.rhs)
    }
}

pub const XNEG_TOP: &str = "xneg-top";
pub const XNEG_BOT: &str = "xneg-bot";
pub const XNEG_AND: &str = "xneg-and";
pub const XNEG_OR: &str = "xneg-or";
pub const XNEG_XNEG: &str = "xneg-xneg";
pub const XNEG_DNEG: &str = "xneg-dneg";
pub const XNEG_IMPL: &str = "xneg-impl";
pub const STRONG_XNEG_DNEG: &str = "strong-xneg-dneg";
pub const STRONG_XNEG_IMPL: &str = "strong-xneg-impl";

/// Schematic laws over the atoms `phi`, `psi`, `gamma`. Validity of an
/// instance at distinct atoms gives validity of every instance, as all
/// connectives are truth-functional.
pub fn laws() -> Vec<Law> {
    use Strength::*;
    let table: [(&str, &str, &str, Strength, EvalMode); 31] = [
        ("coherence", "~phi -> not phi", "top", Validity, EvalMode::X5),
        (XNEG_TOP, "~top", "bot", Substitution, EvalMode::X5),
        (XNEG_BOT, "~bot", "top", Substitution, EvalMode::X5),
        (XNEG_AND, "~(phi & psi)", "~phi | ~psi", Substitution, EvalMode::X5),
        (XNEG_OR, "~(phi | psi)", "~phi & ~psi", Substitution, EvalMode::X5),
        (XNEG_XNEG, "~~phi", "phi", Substitution, EvalMode::X5),
        (XNEG_DNEG, "~not phi", "not not phi", Substitution, EvalMode::X5),
        ("and-over-or", "phi & (psi | gamma)", "phi & psi | phi & gamma", Substitution, EvalMode::X5),
        ("or-over-and", "phi | psi & gamma", "(phi | psi) & (phi | gamma)", Substitution, EvalMode::X5),
        ("and-bot", "phi & bot", "bot", Substitution, EvalMode::X5),
        ("or-top", "phi | top", "top", Substitution, EvalMode::X5),
        ("and-top", "phi & top", "phi", Substitution, EvalMode::X5),
        ("or-bot", "phi | bot", "phi", Substitution, EvalMode::X5),
        ("dneg-and", "not (phi & psi)", "not phi | not psi", Substitution, EvalMode::X5),
        ("dneg-or", "not (phi | psi)", "not phi & not psi", Substitution, EvalMode::X5),
        ("dneg-top", "not top", "bot", Substitution, EvalMode::X5),
        ("dneg-bot", "not bot", "top", Substitution, EvalMode::X5),
        ("triple-dneg", "not not not phi", "not phi", Substitution, EvalMode::X5),
        ("and-head", "phi -> psi & gamma", "(phi -> psi) & (phi -> gamma)", Substitution, EvalMode::X5),
        ("or-body", "phi | psi -> gamma", "(phi -> gamma) & (psi -> gamma)", Substitution, EvalMode::X5),
        ("dneg-body", "phi & not not psi -> gamma", "phi -> gamma | not psi", Substitution, EvalMode::X5),
        ("dneg-head", "phi -> gamma | not not psi", "phi & not psi -> gamma", Substitution, EvalMode::X5),
        (
            "negated-head-constraint",
            "phi -> not psi | not gamma",
            "phi & psi & gamma -> bot",
            Substitution,
            EvalMode::X5,
        ),
        (XNEG_IMPL, "~(phi -> psi)", "not not phi & ~psi", Weak, EvalMode::X5),
        (STRONG_XNEG_DNEG, "~not phi", "phi", Weak, EvalMode::N5),
        (STRONG_XNEG_IMPL, "~(phi -> psi)", "phi & ~psi", Weak, EvalMode::N5),
        ("strong-xneg-top", "~top", "bot", Substitution, EvalMode::N5),
        ("strong-xneg-and", "~(phi & psi)", "~phi | ~psi", Substitution, EvalMode::N5),
        ("strong-xneg-or", "~(phi | psi)", "~phi & ~psi", Substitution, EvalMode::N5),
        ("strong-xneg-xneg", "~~phi", "phi", Substitution, EvalMode::N5),
        ("strong-xneg-bot", "~bot", "top", Substitution, EvalMode::N5),
    ];
    table
        .into_iter()
        .map(|(name, lhs, rhs, strength, mode)| Law {
            name,
            lhs: parse_formula(lhs).expect("law syntax"),
            rhs: parse_formula(rhs).expect("law syntax"),
            strength,
            mode,
        })
        .collect()
}

/// One rule application; `path` lists child indices from the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub rule: &'static str,
    pub path: Vec<usize>,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            return write!(f, "{} @ root", self.rule);
        }
        let path: Vec<_> = self.path.iter().map(ToString::to_string).collect();
        write!(f, "{} @ {}", self.rule, path.join("."))
    }
}

/// Pushes `~` down to atoms, rewriting outermost redexes first.
pub fn to_nnf(phi: &Formula, mode: EvalMode) -> Result<Formula> {
    Ok(to_nnf_traced(phi, mode)?.0)
}

/// [`to_nnf`] together with the sequence of rule applications.
pub fn to_nnf_traced(phi: &Formula, mode: EvalMode) -> Result<(Formula, Vec<Step>)> {
    if mode == EvalMode::ClassicalNeg {
        return Err(Error::UnsupportedMode(mode));
    }
    let mut trace = Vec::new();
    let mut path = Vec::new();
    let out = nnf(phi.clone(), mode == EvalMode::N5, &mut path, &mut trace);
    Ok((out, trace))
}

fn nnf(phi: Formula, strong: bool, path: &mut Vec<usize>, trace: &mut Vec<Step>) -> Formula {
    let mut child = |f: Formula, index: usize, trace: &mut Vec<Step>| {
        path.push(index);
        let out = nnf(f, strong, path, trace);
        path.pop();
        out
    };
    match phi {
        Formula::XNeg(inner) => {
            let (rule, rewritten) = match *inner {
                Formula::Atom(_) => return Formula::XNeg(inner),
                Formula::Top => (XNEG_TOP, Formula::Bot),
                Formula::Bot => (XNEG_BOT, Formula::Top),
                Formula::And(a, b) => (XNEG_AND, a.xneg().or(b.xneg())),
                Formula::Or(a, b) => (XNEG_OR, a.xneg().and(b.xneg())),
                Formula::XNeg(a) => (XNEG_XNEG, *a),
                Formula::DNeg(a) if strong => (STRONG_XNEG_DNEG, *a),
                Formula::DNeg(a) => (XNEG_DNEG, a.dneg().dneg()),
                Formula::Impl(a, b) if strong => (STRONG_XNEG_IMPL, a.and(b.xneg())),
                Formula::Impl(a, b) => (XNEG_IMPL, a.dneg().dneg().and(b.xneg())),
            };
            trace.push(Step { rule, path: path.clone() });
            nnf(rewritten, strong, path, trace)
        }
        Formula::DNeg(a) => child(*a, 0, trace).dneg(),
        Formula::And(a, b) => {
            let a = child(*a, 0, trace);
            a.and(child(*b, 1, trace))
        }
        Formula::Or(a, b) => {
            let a = child(*a, 0, trace);
            a.or(child(*b, 1, trace))
        }
        Formula::Impl(a, b) => {
            let a = child(*a, 0, trace);
            a.implies(child(*b, 1, trace))
        }
        leaf => leaf,
    }
}

/// [`to_nnf`] on both sides of every rule.
pub fn to_nnf_program(program: &Program, mode: EvalMode) -> Result<Program> {
    program
        .rules()
        .iter()
        .map(|rule| Rule::new(to_nnf(rule.body(), mode)?, to_nnf(rule.head(), mode)?))
        .collect()
}

pub const DEFAULT_NODE_LIMIT: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegularOptions {
    /// Aborts when normal forms grow beyond this many literal occurrences.
    pub node_limit: usize,
    /// Turns a head made only of `not` literals into a constraint.
    pub eliminate_head_negation: bool,
}

impl Default for RegularOptions {
    fn default() -> Self {
        RegularOptions { node_limit: DEFAULT_NODE_LIMIT, eliminate_head_negation: true }
    }
}

/// A default literal: an explicit literal under zero, one or two `not`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct DefaultLiteral {
    nots: u8,
    literal: ExplicitLiteral,
}

impl DefaultLiteral {
    fn to_formula(&self) -> Formula {
        (0..self.nots).fold(self.literal.to_formula(), |f, _| f.dneg())
    }

    fn negate(&self) -> DefaultLiteral {
        // not not not L collapses to not L
        let nots = if self.nots == 2 { 1 } else { self.nots + 1 };
        DefaultLiteral { nots, literal: self.literal.clone() }
    }
}

/// Negation-free skeleton over default literals.
#[derive(Debug, Clone)]
enum Shape {
    Top,
    Bot,
    Lit(DefaultLiteral),
    And(Box<Shape>, Box<Shape>),
    Or(Box<Shape>, Box<Shape>),
}

fn shape(phi: &Formula, rule: &Rule) -> Result<Shape> {
    Ok(match phi {
        Formula::Top => Shape::Top,
        Formula::Bot => Shape::Bot,
        Formula::And(a, b) => Shape::And(Box::new(shape(a, rule)?), Box::new(shape(b, rule)?)),
        Formula::Or(a, b) => Shape::Or(Box::new(shape(a, rule)?), Box::new(shape(b, rule)?)),
        Formula::DNeg(a) => negate(shape(a, rule)?),
        other => match ExplicitLiteral::from_formula(other) {
            Some(literal) => Shape::Lit(DefaultLiteral { nots: 0, literal }),
            None => return Err(Error::NotNnf(rule.to_formula())),
        },
    })
}

/// De Morgan for `not`, constants, and the triple-negation collapse.
fn negate(s: Shape) -> Shape {
    match s {
        Shape::Top => Shape::Bot,
        Shape::Bot => Shape::Top,
        Shape::Lit(l) => Shape::Lit(l.negate()),
        Shape::And(a, b) => Shape::Or(Box::new(negate(*a)), Box::new(negate(*b))),
        Shape::Or(a, b) => Shape::And(Box::new(negate(*a)), Box::new(negate(*b))),
    }
}

/// Sets of literal sets; `None` stands for an absorbing constant.
type Clauses = Vec<Vec<DefaultLiteral>>;

/// Disjunctive (`dnf`) or conjunctive normal form as a list of literal
/// lists. For the DNF an empty outer list is `bot` and an empty inner list
/// is `top`; dually for the CNF.
fn normal_form(s: &Shape, dnf: bool, limit: usize) -> Result<Clauses> {
    let merge = |a: Clauses, b: Clauses| -> Result<Clauses> {
        let mut out = Vec::new();
        let mut size = 0usize;
        for x in &a {
            for y in &b {
                let mut clause = x.clone();
                for l in y {
                    if !clause.contains(l) {
                        clause.push(l.clone());
                    }
                }
                size += clause.len().max(1);
                if size > limit {
                    return Err(Error::SizeLimit { limit });
                }
                if !out.contains(&clause) {
                    out.push(clause);
                }
            }
        }
        Ok(out)
    };
    let concat = |mut a: Clauses, b: Clauses| {
        for clause in b {
            if !a.contains(&clause) {
                a.push(clause);
            }
        }
        a
    };
    Ok(match (s, dnf) {
        (Shape::Lit(l), _) => vec![vec![l.clone()]],
        (Shape::Top, true) | (Shape::Bot, false) => vec![vec![]],
        (Shape::Bot, true) | (Shape::Top, false) => vec![],
        (Shape::Or(a, b), true) | (Shape::And(a, b), false) => {
            concat(normal_form(a, dnf, limit)?, normal_form(b, dnf, limit)?)
        }
        (Shape::And(a, b), true) | (Shape::Or(a, b), false) => {
            merge(normal_form(a, dnf, limit)?, normal_form(b, dnf, limit)?)?
        }
    })
}

/// Rewrites a program whose rule sides are in NNF into regular rules.
pub fn to_regular(program: &Program) -> Result<Program> {
    to_regular_with(program, RegularOptions::default())
}

pub fn to_regular_with(program: &Program, options: RegularOptions) -> Result<Program> {
    let mut rules = Vec::new();
    for rule in program.rules() {
        if !rule.body().is_nnf() || !rule.head().is_nnf() {
            return Err(Error::NotNnf(rule.to_formula()));
        }
        let bodies = normal_form(&shape(rule.body(), rule)?, true, options.node_limit)?;
        let heads = normal_form(&shape(rule.head(), rule)?, false, options.node_limit)?;
        for body in &bodies {
            for head in &heads {
                rules.push(regular_rule(body, head, options));
            }
        }
    }
    let program = Program::new(rules);
    // a bare `top -> bot` becomes a pair of constraints with no models
    if program.rules().iter().any(|r| *r.body() == Formula::Top && *r.head() == Formula::Bot) {
        let p = program
            .atoms()
            .into_iter()
            .next()
            .unwrap_or_else(|| Atom::new("contradiction").expect("valid atom"));
        let p = Formula::atom(p);
        let kept = program
            .rules()
            .iter()
            .filter(|r| !(*r.body() == Formula::Top && *r.head() == Formula::Bot))
            .cloned();
        let constraints = [
            Rule::new(p.clone().dneg(), Formula::Bot).expect("nested"),
            Rule::new(p, Formula::Bot).expect("nested"),
        ];
        return Ok(Program::new(kept.chain(constraints)));
    }
    Ok(program)
}

fn regular_rule(body: &[DefaultLiteral], head: &[DefaultLiteral], options: RegularOptions) -> Rule {
    let mut body_out: Vec<DefaultLiteral> = Vec::new();
    let mut head_out: Vec<DefaultLiteral> = Vec::new();
    let push = |list: &mut Vec<DefaultLiteral>, l: DefaultLiteral| {
        if !list.contains(&l) {
            list.push(l);
        }
    };
    for l in body {
        if l.nots == 2 {
            push(&mut head_out, DefaultLiteral { nots: 1, literal: l.literal.clone() });
        } else {
            push(&mut body_out, l.clone());
        }
    }
    let mut head_kept = Vec::new();
    for l in head {
        if l.nots == 2 {
            push(&mut body_out, DefaultLiteral { nots: 1, literal: l.literal.clone() });
        } else {
            head_kept.push(l.clone());
        }
    }
    for l in head_kept {
        push(&mut head_out, l);
    }
    if options.eliminate_head_negation && !head_out.is_empty() && head_out.iter().all(|l| l.nots == 1) {
        for l in head_out.drain(..) {
            push(&mut body_out, DefaultLiteral { nots: 0, literal: l.literal });
        }
    }
    Rule::new(
        Formula::conjunction(body_out.iter().map(DefaultLiteral::to_formula)),
        Formula::disjunction(head_out.iter().map(DefaultLiteral::to_formula)),
    )
    .expect("default literals are nested")
}

/// Renders a regular program in the usual solver syntax, one rule per line.
pub fn export_asp(program: &Program) -> Result<String> {
    let mut out = String::new();
    for rule in program.rules() {
        if !rule.is_regular() {
            return Err(Error::NotRegular(rule.clone()));
        }
        let head = flatten(rule.head(), false).join(" ; ");
        let body = flatten(rule.body(), true).join(", ");
        match (head.is_empty(), body.is_empty()) {
            (_, true) => out.push_str(&format!("{head}.\n")),
            (true, false) => out.push_str(&format!(":- {body}.\n")),
            (false, false) => out.push_str(&format!("{head} :- {body}.\n")),
        }
    }
    Ok(out)
}

fn flatten(side: &Formula, conjunctive: bool) -> Vec<String> {
    match side {
        Formula::Top | Formula::Bot => Vec::new(),
        Formula::And(a, b) if conjunctive => [flatten(a, true), flatten(b, true)].concat(),
        Formula::Or(a, b) if !conjunctive => [flatten(a, false), flatten(b, false)].concat(),
        Formula::DNeg(inner) => vec![format!("not {}", asp_literal(inner))],
        literal => vec![asp_literal(literal)],
    }
}

fn asp_literal(phi: &Formula) -> String {
    match ExplicitLiteral::from_formula(phi) {
        Some(l) if l.negated => format!("-{}", l.atom),
        Some(l) => l.atom.to_string(),
        None => unreachable!("regular rules contain only literals"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CrossEncoding {
    /// Strong-negation operators expressed with explicit-negation ones.
    N5InX5,
    /// Explicit-negation operators expressed with strong-negation ones.
    X5InN5,
}

impl CrossEncoding {
    /// Mode in which the encoded formula is meant to be evaluated.
    pub fn target(self) -> EvalMode {
        match self {
            CrossEncoding::N5InX5 => EvalMode::X5,
            CrossEncoding::X5InN5 => EvalMode::N5,
        }
    }
}

/// Rewrites every implication and default negation bottom-up.
pub fn cross_encode(phi: &Formula, direction: CrossEncoding) -> Formula {
    let go = |f: &Formula| cross_encode(f, direction);
    match phi {
        Formula::Impl(a, b) => {
            let (a, b) = (go(a), go(b));
            match direction {
                CrossEncoding::N5InX5 => a.clone().implies(a.xneg().or(b)),
                CrossEncoding::X5InN5 => a
                    .clone()
                    .implies(b.clone())
                    .and(b.xneg().implies(a.dneg().dneg().dneg())),
            }
        }
        Formula::DNeg(a) => {
            let a = go(a);
            match direction {
                CrossEncoding::N5InX5 => a.clone().implies(a.xneg()),
                CrossEncoding::X5InN5 => a.dneg().dneg().dneg(),
            }
        }
        Formula::XNeg(a) => go(a).xneg(),
        Formula::And(a, b) => go(a).and(go(b)),
        Formula::Or(a, b) => go(a).or(go(b)),
        leaf => leaf.clone(),
    }
}
