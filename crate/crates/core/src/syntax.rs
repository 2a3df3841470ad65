//! Formulas, rules, programs, theories and interpretations.
//!
//! Every type here is immutable after construction. Constructors that can
//! violate an invariant (atom names, consistency, `H ⊆ T`, nested rule sides)
//! return a [`Result`].

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A propositional atom: a lowercase-initial identifier.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(Arc<str>);

/// Words that lex as keywords and can never name an atom.
pub const RESERVED_WORDS: [&str; 3] = ["top", "bot", "not"];

impl Atom {
    pub fn new(name: &str) -> Result<Self> {
        if Self::is_valid_name(name) {
            Ok(Atom(Arc::from(name)))
        } else {
            Err(Error::InvalidAtom(name.to_owned()))
        }
    }

    pub fn is_valid_name(name: &str) -> bool {
        let mut chars = name.chars();
        let Some(first) = chars.next() else {
            return false;
        };
        first.is_ascii_lowercase()
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
            && !RESERVED_WORDS.contains(&name)
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// An atom `p` or its explicit negation `~p`.
///
/// The derived order compares the atom first and puts `p` before `~p`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExplicitLiteral {
    pub atom: Atom,
    pub negated: bool,
}

impl ExplicitLiteral {
    pub fn positive(atom: Atom) -> Self {
        ExplicitLiteral { atom, negated: false }
    }

    pub fn negative(atom: Atom) -> Self {
        ExplicitLiteral { atom, negated: true }
    }

    pub fn complement(&self) -> Self {
        ExplicitLiteral { atom: self.atom.clone(), negated: !self.negated }
    }

    pub fn to_formula(&self) -> Formula {
        let atom = Formula::Atom(self.atom.clone());
        if self.negated {
            atom.xneg()
        } else {
            atom
        }
    }

    /// Reads `p` or `~p` back from a formula.
    pub fn from_formula(formula: &Formula) -> Option<Self> {
        match formula {
            Formula::Atom(p) => Some(Self::positive(p.clone())),
            Formula::XNeg(inner) => match inner.as_ref() {
                Formula::Atom(p) => Some(Self::negative(p.clone())),
                _ => None,
            },
            _ => None,
        }
    }
}

impl fmt::Display for ExplicitLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "~{}", self.atom)
        } else {
            write!(f, "{}", self.atom)
        }
    }
}

/// A formula over atoms with both negations.
///
/// `Top` and `DNeg` are primitive nodes here; the five-valued semantics
/// agrees with reading them as `not bot` and `phi -> bot`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Bot,
    Top,
    Atom(Atom),
    /// Explicit negation `~`.
    XNeg(Box<Formula>),
    /// Default negation `not`.
    DNeg(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Impl(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(atom: Atom) -> Self {
        Formula::Atom(atom)
    }

    pub fn xneg(self) -> Self {
        Formula::XNeg(Box::new(self))
    }

    pub fn dneg(self) -> Self {
        Formula::DNeg(Box::new(self))
    }

    pub fn and(self, other: Formula) -> Self {
        Formula::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Formula) -> Self {
        Formula::Or(Box::new(self), Box::new(other))
    }

    pub fn implies(self, other: Formula) -> Self {
        Formula::Impl(Box::new(self), Box::new(other))
    }

    /// Weak equivalence `a <-> b`, expanded to `(a -> b) & (b -> a)`.
    pub fn iff(self, other: Formula) -> Self {
        self.clone().implies(other.clone()).and(other.implies(self))
    }

    /// Substitution equivalence `a <=> b`, expanded to
    /// `(a <-> b) & (~a <-> ~b)`.
    pub fn strong_iff(self, other: Formula) -> Self {
        let negated = self.clone().xneg().iff(other.clone().xneg());
        self.iff(other).and(negated)
    }

    /// Conjunction of all items, `top` when empty.
    pub fn conjunction<I: IntoIterator<Item = Formula>>(items: I) -> Self {
        items.into_iter().reduce(Formula::and).unwrap_or(Formula::Top)
    }

    /// Disjunction of all items, `bot` when empty.
    pub fn disjunction<I: IntoIterator<Item = Formula>>(items: I) -> Self {
        items.into_iter().reduce(Formula::or).unwrap_or(Formula::Bot)
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            Formula::Bot | Formula::Top | Formula::Atom(_) => 1,
            Formula::XNeg(a) | Formula::DNeg(a) => 1 + a.size(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Impl(a, b) => {
                1 + a.size() + b.size()
            }
        }
    }

    /// True iff no implication occurs.
    pub fn is_nested(&self) -> bool {
        match self {
            Formula::Bot | Formula::Top | Formula::Atom(_) => true,
            Formula::XNeg(a) | Formula::DNeg(a) => a.is_nested(),
            Formula::And(a, b) | Formula::Or(a, b) => a.is_nested() && b.is_nested(),
            Formula::Impl(..) => false,
        }
    }

    /// True iff no default negation occurs.
    pub fn is_explicit(&self) -> bool {
        match self {
            Formula::Bot | Formula::Top | Formula::Atom(_) => true,
            Formula::DNeg(_) => false,
            Formula::XNeg(a) => a.is_explicit(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Impl(a, b) => {
                a.is_explicit() && b.is_explicit()
            }
        }
    }

    /// True iff explicit negation is applied to atoms only.
    pub fn is_nnf(&self) -> bool {
        match self {
            Formula::Bot | Formula::Top | Formula::Atom(_) => true,
            Formula::XNeg(a) => matches!(a.as_ref(), Formula::Atom(_)),
            Formula::DNeg(a) => a.is_nnf(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Impl(a, b) => {
                a.is_nnf() && b.is_nnf()
            }
        }
    }

    /// Uniform substitution `self[replacement/atom]`.
    pub fn substitute(&self, atom: &Atom, replacement: &Formula) -> Formula {
        match self {
            Formula::Atom(p) if p == atom => replacement.clone(),
            Formula::Bot | Formula::Top | Formula::Atom(_) => self.clone(),
            Formula::XNeg(a) => a.substitute(atom, replacement).xneg(),
            Formula::DNeg(a) => a.substitute(atom, replacement).dneg(),
            Formula::And(a, b) => a.substitute(atom, replacement).and(b.substitute(atom, replacement)),
            Formula::Or(a, b) => a.substitute(atom, replacement).or(b.substitute(atom, replacement)),
            Formula::Impl(a, b) => a
                .substitute(atom, replacement)
                .implies(b.substitute(atom, replacement)),
        }
    }

    /// True iff `atom` occurs somewhere under an explicit negation.
    pub fn occurs_under_xneg(&self, atom: &Atom) -> bool {
        fn walk(formula: &Formula, atom: &Atom, under: bool) -> bool {
            match formula {
                Formula::Atom(p) => under && p == atom,
                Formula::Bot | Formula::Top => false,
                Formula::XNeg(a) => walk(a, atom, true),
                Formula::DNeg(a) => walk(a, atom, under),
                Formula::And(a, b) | Formula::Or(a, b) | Formula::Impl(a, b) => {
                    walk(a, atom, under) || walk(b, atom, under)
                }
            }
        }
        walk(self, atom, false)
    }

    fn collect_atoms(&self, out: &mut Signature) {
        match self {
            Formula::Bot | Formula::Top => {}
            Formula::Atom(p) => {
                out.insert(p.clone());
            }
            Formula::XNeg(a) | Formula::DNeg(a) => a.collect_atoms(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Impl(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Impl(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            Formula::XNeg(_) | Formula::DNeg(_) => 4,
            Formula::Bot | Formula::Top | Formula::Atom(_) => 5,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let parens = self.precedence() < min;
        if parens {
            f.write_str("(")?;
        }
        match self {
            Formula::Bot => f.write_str("bot")?,
            Formula::Top => f.write_str("top")?,
            Formula::Atom(p) => write!(f, "{p}")?,
            Formula::XNeg(a) => {
                f.write_str("~")?;
                if matches!(a.as_ref(), Formula::DNeg(_)) {
                    f.write_str(" ")?;
                }
                a.write_at(f, 4)?;
            }
            Formula::DNeg(a) => {
                f.write_str("not ")?;
                a.write_at(f, 4)?;
            }
            // & and | associate to the left, -> to the right.
            Formula::And(a, b) => {
                a.write_at(f, 3)?;
                f.write_str(" & ")?;
                b.write_at(f, 4)?;
            }
            Formula::Or(a, b) => {
                a.write_at(f, 2)?;
                f.write_str(" | ")?;
                b.write_at(f, 3)?;
            }
            Formula::Impl(a, b) => {
                a.write_at(f, 2)?;
                f.write_str(" -> ")?;
                b.write_at(f, 1)?;
            }
        }
        if parens {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl From<Atom> for Formula {
    fn from(atom: Atom) -> Self {
        Formula::Atom(atom)
    }
}

impl From<ExplicitLiteral> for Formula {
    fn from(literal: ExplicitLiteral) -> Self {
        literal.to_formula()
    }
}

/// Canonical ASCII rendering with minimal parentheses; parses back to the
/// same tree.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

/// A set of atoms that semantic operations range over.
pub type Signature = BTreeSet<Atom>;

/// Collects the atoms occurring anywhere in a syntactic object.
pub trait Atoms {
    fn atoms(&self) -> Signature;
}

impl Atoms for Formula {
    fn atoms(&self) -> Signature {
        let mut out = Signature::new();
        self.collect_atoms(&mut out);
        out
    }
}

impl Atoms for Rule {
    fn atoms(&self) -> Signature {
        let mut out = Signature::new();
        self.body.collect_atoms(&mut out);
        self.head.collect_atoms(&mut out);
        out
    }
}

impl Atoms for Program {
    fn atoms(&self) -> Signature {
        self.rules.iter().flat_map(Atoms::atoms).collect()
    }
}

impl Atoms for Theory {
    fn atoms(&self) -> Signature {
        let mut out = Signature::new();
        for formula in &self.formulas {
            formula.collect_atoms(&mut out);
        }
        out
    }
}

impl<T: Atoms> Atoms for [T] {
    fn atoms(&self) -> Signature {
        self.iter().flat_map(Atoms::atoms).collect()
    }
}

/// A rule `body -> head` between nested expressions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rule {
    body: Formula,
    head: Formula,
}

impl Rule {
    pub fn new(body: Formula, head: Formula) -> Result<Self> {
        if !body.is_nested() {
            return Err(Error::NotNested(body));
        }
        if !head.is_nested() {
            return Err(Error::NotNested(head));
        }
        Ok(Rule { body, head })
    }

    /// The rule `top -> head`.
    pub fn fact(head: Formula) -> Result<Self> {
        Rule::new(Formula::Top, head)
    }

    /// Reads an implication `body -> head` (or any nested expression `head`
    /// as `top -> head`) back as a rule.
    pub fn from_formula(formula: &Formula) -> Result<Self> {
        match formula {
            Formula::Impl(body, head) => Rule::new((**body).clone(), (**head).clone()),
            other => Rule::fact(other.clone()),
        }
    }

    pub fn body(&self) -> &Formula {
        &self.body
    }

    pub fn head(&self) -> &Formula {
        &self.head
    }

    pub fn to_formula(&self) -> Formula {
        self.body.clone().implies(self.head.clone())
    }

    pub fn is_explicit(&self) -> bool {
        self.body.is_explicit() && self.head.is_explicit()
    }

    /// Body is `top` or a conjunction of default literals, head is `bot` or a
    /// disjunction of default literals, and not both `top` and `bot`.
    pub fn is_regular(&self) -> bool {
        fn default_literal(formula: &Formula) -> bool {
            match formula {
                Formula::DNeg(inner) => ExplicitLiteral::from_formula(inner).is_some(),
                other => ExplicitLiteral::from_formula(other).is_some(),
            }
        }
        fn conjunction(formula: &Formula) -> bool {
            match formula {
                Formula::And(a, b) => conjunction(a) && conjunction(b),
                other => default_literal(other),
            }
        }
        fn disjunction(formula: &Formula) -> bool {
            match formula {
                Formula::Or(a, b) => disjunction(a) && disjunction(b),
                other => default_literal(other),
            }
        }
        let body_ok = self.body == Formula::Top || conjunction(&self.body);
        let head_ok = self.head == Formula::Bot || disjunction(&self.head);
        body_ok && head_ok && !(self.body == Formula::Top && self.head == Formula::Bot)
    }
}

impl fmt::Display for Rule {
    /// `head.` for facts, `body -> head.` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.body == Formula::Top {
            write!(f, "{}.", self.head)
        } else {
            write!(f, "{} -> {}.", self.body, self.head)
        }
    }
}

/// An ordered, duplicate-free set of rules. Equality ignores order.
#[derive(Debug, Clone, Default)]
pub struct Program {
    rules: Vec<Rule>,
}

impl Program {
    pub fn new<I: IntoIterator<Item = Rule>>(rules: I) -> Self {
        let mut program = Program::default();
        program.extend(rules);
        program
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn is_explicit(&self) -> bool {
        self.rules.iter().all(Rule::is_explicit)
    }

    pub fn is_regular(&self) -> bool {
        self.rules.iter().all(Rule::is_regular)
    }

    /// Returns a copy with `rules` appended (duplicates dropped).
    pub fn with<I: IntoIterator<Item = Rule>>(&self, rules: I) -> Self {
        let mut program = self.clone();
        program.extend(rules);
        program
    }

    pub fn to_theory(&self) -> Theory {
        Theory::new(self.rules.iter().map(Rule::to_formula))
    }

    fn extend<I: IntoIterator<Item = Rule>>(&mut self, rules: I) {
        for rule in rules {
            if !self.rules.contains(&rule) {
                self.rules.push(rule);
            }
        }
    }
}

impl PartialEq for Program {
    fn eq(&self, other: &Self) -> bool {
        self.rules.len() == other.rules.len()
            && self.rules.iter().collect::<HashSet<_>>() == other.rules.iter().collect::<HashSet<_>>()
    }
}

impl Eq for Program {}

impl FromIterator<Rule> for Program {
    fn from_iter<I: IntoIterator<Item = Rule>>(iter: I) -> Self {
        Program::new(iter)
    }
}

impl fmt::Display for Program {
    /// One rule per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for rule in &self.rules {
            writeln!(f, "{rule}")?;
        }
        Ok(())
    }
}

/// An ordered, duplicate-free set of formulas. Equality ignores order.
#[derive(Debug, Clone, Default)]
pub struct Theory {
    formulas: Vec<Formula>,
}

impl Theory {
    pub fn new<I: IntoIterator<Item = Formula>>(formulas: I) -> Self {
        let mut theory = Theory::default();
        theory.extend(formulas);
        theory
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn len(&self) -> usize {
        self.formulas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }

    /// Returns a copy with `formulas` appended (duplicates dropped).
    pub fn with<I: IntoIterator<Item = Formula>>(&self, formulas: I) -> Self {
        let mut theory = self.clone();
        theory.extend(formulas);
        theory
    }

    /// Reads the theory back as a program when every member is a rule or a
    /// nested expression.
    pub fn to_program(&self) -> Result<Program> {
        self.formulas.iter().map(Rule::from_formula).collect()
    }

    fn extend<I: IntoIterator<Item = Formula>>(&mut self, formulas: I) {
        for formula in formulas {
            if !self.formulas.contains(&formula) {
                self.formulas.push(formula);
            }
        }
    }
}

impl PartialEq for Theory {
    fn eq(&self, other: &Self) -> bool {
        self.formulas.len() == other.formulas.len()
            && self.formulas.iter().collect::<HashSet<_>>()
                == other.formulas.iter().collect::<HashSet<_>>()
    }
}

impl Eq for Theory {}

impl FromIterator<Formula> for Theory {
    fn from_iter<I: IntoIterator<Item = Formula>>(iter: I) -> Self {
        Theory::new(iter)
    }
}

impl From<&Program> for Theory {
    fn from(program: &Program) -> Self {
        program.to_theory()
    }
}

impl fmt::Display for Theory {
    /// One formula per line, each terminated by `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for formula in &self.formulas {
            writeln!(f, "{formula}.")?;
        }
        Ok(())
    }
}

/// A consistent set of explicit literals.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interpretation {
    literals: BTreeSet<ExplicitLiteral>,
}

impl Interpretation {
    pub fn new<I: IntoIterator<Item = ExplicitLiteral>>(literals: I) -> Result<Self> {
        let literals: BTreeSet<_> = literals.into_iter().collect();
        // p sorts immediately before ~p
        for (a, b) in literals.iter().zip(literals.iter().skip(1)) {
            if a.atom == b.atom {
                return Err(Error::Inconsistent(a.atom.clone()));
            }
        }
        Ok(Interpretation { literals })
    }

    pub fn empty() -> Self {
        Interpretation::default()
    }

    pub fn contains(&self, literal: &ExplicitLiteral) -> bool {
        self.literals.contains(literal)
    }

    /// `p ∈ self`.
    pub fn holds(&self, atom: &Atom) -> bool {
        self.literals.contains(&ExplicitLiteral::positive(atom.clone()))
    }

    /// `~p ∈ self`.
    pub fn holds_negated(&self, atom: &Atom) -> bool {
        self.literals.contains(&ExplicitLiteral::negative(atom.clone()))
    }

    pub fn is_subset(&self, other: &Interpretation) -> bool {
        self.literals.is_subset(&other.literals)
    }

    pub fn iter(&self) -> impl Iterator<Item = &ExplicitLiteral> + '_ {
        self.literals.iter()
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn atoms(&self) -> Signature {
        self.literals.iter().map(|l| l.atom.clone()).collect()
    }

    /// All subsets, in the order of the bitmask over the sorted literals.
    pub fn subsets(&self) -> impl Iterator<Item = Interpretation> + '_ {
        let literals: Vec<_> = self.literals.iter().cloned().collect();
        let count = literals.len();
        (0u64..(1u64 << count)).map(move |mask| Interpretation {
            literals: literals
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, l)| l.clone())
                .collect(),
        })
    }

    /// Strict subsets only.
    pub fn proper_subsets(&self) -> impl Iterator<Item = Interpretation> + '_ {
        let len = self.len();
        self.subsets().filter(move |h| h.len() < len)
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, literal) in self.literals.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{literal}")?;
        }
        f.write_str("}")
    }
}

/// A truth value in `-2..=2`; `2` is the designated value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiveValue(i8);

impl FiveValue {
    pub const FALSE: FiveValue = FiveValue(-2);
    pub const DEFAULT_FALSE: FiveValue = FiveValue(-1);
    pub const UNDEFINED: FiveValue = FiveValue(0);
    pub const DEFAULT_TRUE: FiveValue = FiveValue(1);
    pub const TRUE: FiveValue = FiveValue(2);

    /// All five values in ascending order.
    pub const ALL: [FiveValue; 5] = [
        FiveValue::FALSE,
        FiveValue::DEFAULT_FALSE,
        FiveValue::UNDEFINED,
        FiveValue::DEFAULT_TRUE,
        FiveValue::TRUE,
    ];

    pub fn new(value: i64) -> Result<Self> {
        if (-2..=2).contains(&value) {
            Ok(FiveValue(value as i8))
        } else {
            Err(Error::ValueOutOfRange(value))
        }
    }

    pub fn get(self) -> i8 {
        self.0
    }

    pub fn is_designated(self) -> bool {
        self.0 == 2
    }

    pub fn negate(self) -> Self {
        FiveValue(-self.0)
    }
}

impl fmt::Display for FiveValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A here-and-there pair `<H,T>` with `H ⊆ T`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct X5Interpretation {
    here: Interpretation,
    there: Interpretation,
}

impl X5Interpretation {
    pub fn new(here: Interpretation, there: Interpretation) -> Result<Self> {
        if here.is_subset(&there) {
            Ok(X5Interpretation { here, there })
        } else {
            Err(Error::HereNotSubset)
        }
    }

    /// The total interpretation `<T,T>`.
    pub fn total(there: Interpretation) -> Self {
        X5Interpretation { here: there.clone(), there }
    }

    /// Builds the pair whose five-valued mapping is `values`.
    pub fn from_values<I: IntoIterator<Item = (Atom, FiveValue)>>(values: I) -> Self {
        let mut here = BTreeSet::new();
        let mut there = BTreeSet::new();
        for (atom, value) in values {
            let literal = ExplicitLiteral { atom, negated: value.get() < 0 };
            match value.get().abs() {
                2 => {
                    here.insert(literal.clone());
                    there.insert(literal);
                }
                1 => {
                    there.insert(literal);
                }
                _ => {}
            }
        }
        X5Interpretation {
            here: Interpretation { literals: here },
            there: Interpretation { literals: there },
        }
    }

    pub fn here(&self) -> &Interpretation {
        &self.here
    }

    pub fn there(&self) -> &Interpretation {
        &self.there
    }

    pub fn is_total(&self) -> bool {
        self.here == self.there
    }

    /// `<T,T>` for this pair's there-world.
    pub fn there_total(&self) -> X5Interpretation {
        X5Interpretation::total(self.there.clone())
    }

    /// The five-valued mapping of one atom.
    pub fn value(&self, atom: &Atom) -> FiveValue {
        if self.here.holds(atom) {
            FiveValue::TRUE
        } else if self.here.holds_negated(atom) {
            FiveValue::FALSE
        } else if self.there.holds(atom) {
            FiveValue::DEFAULT_TRUE
        } else if self.there.holds_negated(atom) {
            FiveValue::DEFAULT_FALSE
        } else {
            FiveValue::UNDEFINED
        }
    }

    pub fn values(&self, signature: &Signature) -> BTreeMap<Atom, FiveValue> {
        signature.iter().map(|p| (p.clone(), self.value(p))).collect()
    }

    /// `p=1, q=0` style rendering over a signature.
    pub fn describe(&self, signature: &Signature) -> String {
        signature
            .iter()
            .map(|p| format!("{p}={}", self.value(p)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for X5Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.here, self.there)
    }
}
