#![allow(dead_code)]

use std::num::NonZeroUsize;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use x5_core::equivalence::{discriminating_context, subst_equiv, weak_equiv, weak_equiv_in};
use x5_core::reduct::{
    falsifies_minus, ferraris_minus, ferraris_minus_with, ferraris_plus, ferraris_plus_with, reduct_nested,
    reduct_program, satisfies_plus, simplify_constants, ImplicationHandling,
};
use x5_core::semantics::{fals, is_classical_model, is_model, sat, value5, x5_fals, x5_sat, EvalMode};
use x5_core::solver::{answer_sets, equilibrium_models, equilibrium_models_ferraris, SolveOptions};
use x5_core::transform::{export_asp, laws, to_nnf, to_nnf_program, to_regular, Strength};
use x5_core::{
    parse_formula, parse_program, Atom, Atoms, Error, ExplicitLiteral, FiveValue, Formula, Interpretation,
    Program, Rule, Signature, Theory, X5Interpretation,
};

pub const CASES: u32 = 1000;
pub const ATOMS: [&str; 3] = ["p", "q", "r"];
const HOLE: &str = "x";

pub fn atom(name: &str) -> Atom {
    Atom::new(name).unwrap()
}

fn atom_formula(names: &'static [&'static str]) -> impl Strategy<Value = Formula> {
    proptest::sample::select(names).prop_map(|n| Formula::atom(atom(n)))
}

fn formula_over(names: &'static [&'static str], depth: u32, with_impl: bool) -> BoxedStrategy<Formula> {
    let leaf = prop_oneof![
        1 => Just(Formula::Top),
        1 => Just(Formula::Bot),
        6 => atom_formula(names),
    ];
    leaf.prop_recursive(depth, 16, 2, move |inner| {
        let binary = (inner.clone(), inner.clone());
        if with_impl {
            prop_oneof![
                inner.clone().prop_map(Formula::xneg),
                inner.clone().prop_map(Formula::dneg),
                binary.clone().prop_map(|(a, b)| a.and(b)),
                binary.clone().prop_map(|(a, b)| a.or(b)),
                binary.prop_map(|(a, b)| a.implies(b)),
            ]
            .boxed()
        } else {
            prop_oneof![
                inner.clone().prop_map(Formula::xneg),
                inner.clone().prop_map(Formula::dneg),
                binary.clone().prop_map(|(a, b)| a.and(b)),
                binary.prop_map(|(a, b)| a.or(b)),
            ]
            .boxed()
        }
    })
    .boxed()
}

/// Arbitrary formulas over `p`, `q`, `r`.
pub fn formula() -> BoxedStrategy<Formula> {
    formula_over(&ATOMS, 4, true)
}

/// Implication-free formulas over `p`, `q`, `r`.
pub fn nested() -> BoxedStrategy<Formula> {
    formula_over(&ATOMS, 4, false)
}

pub fn small_formula() -> BoxedStrategy<Formula> {
    formula_over(&["p", "q"], 2, true)
}

pub fn rule() -> impl Strategy<Value = Rule> {
    (formula_over(&ATOMS, 3, false), formula_over(&ATOMS, 3, false))
        .prop_map(|(body, head)| Rule::new(body, head).unwrap())
}

pub fn program() -> impl Strategy<Value = Program> {
    proptest::collection::vec(rule(), 1..=3).prop_map(Program::new)
}

/// Here-and-there pairs over `p`, `q`, `r` via five-valued assignments.
pub fn x5_interpretation() -> impl Strategy<Value = X5Interpretation> {
    proptest::collection::vec(-2i64..=2, ATOMS.len()).prop_map(|values| {
        X5Interpretation::from_values(
            ATOMS.iter().zip(values).map(|(n, v)| (atom(n), FiveValue::new(v).unwrap())),
        )
    })
}

pub fn interpretation() -> impl Strategy<Value = Interpretation> {
    x5_interpretation().prop_map(|m| m.there().clone())
}

/// Context formulas with a hole `x`. With `outside_xneg`, the hole never
/// occurs under `~`.
pub fn context(outside_xneg: bool) -> BoxedStrategy<Formula> {
    let hole = Formula::atom(atom(HOLE));
    let leaf = prop_oneof![3 => Just(hole), 1 => small_formula()];
    leaf.prop_recursive(3, 12, 2, move |inner| {
        let binary = (inner.clone(), inner.clone());
        let xneg = if outside_xneg {
            small_formula().prop_map(Formula::xneg).boxed()
        } else {
            inner.clone().prop_map(Formula::xneg).boxed()
        };
        prop_oneof![
            xneg,
            inner.clone().prop_map(Formula::dneg),
            binary.clone().prop_map(|(a, b)| a.and(b)),
            binary.clone().prop_map(|(a, b)| a.or(b)),
            binary.prop_map(|(a, b)| a.implies(b)),
        ]
    })
    .boxed()
}

/// Instances of the rewrite laws of a given strength, with the schematic
/// atoms replaced by random formulas over `p`, `q`.
pub fn law_instance(strengths: &'static [Strength]) -> impl Strategy<Value = (Formula, Formula)> {
    let table: Vec<_> = laws()
        .into_iter()
        .filter(|law| law.mode == EvalMode::X5 && strengths.contains(&law.strength))
        .collect();
    (proptest::sample::select(table), small_formula(), small_formula(), small_formula()).prop_map(
        |(law, a, b, c)| {
            let instantiate = |f: &Formula| {
                f.substitute(&atom("phi"), &a).substitute(&atom("psi"), &b).substitute(&atom("gamma"), &c)
            };
            (instantiate(&law.lhs), instantiate(&law.rhs))
        },
    )
}

fn opts() -> SolveOptions {
    SolveOptions::default()
}

/// Runs `test` on `cases` generated inputs.
pub fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let config = Config { cases, failure_persistence: None, max_global_rejects: 100_000, ..Config::default() };
    TestRunner::new(config).run(&strategy, test).map_err(|e| e.to_string())
}

fn here_worlds(m: &X5Interpretation) -> (X5Interpretation, X5Interpretation) {
    (X5Interpretation::total(m.here().clone()), m.there_total())
}

pub fn persistence(cases: u32) -> Result<(), String> {
    run(cases, (formula(), x5_interpretation()), |(phi, m)| {
        let total = m.there_total();
        prop_assert!(!x5_sat(&m, &phi) || x5_sat(&total, &phi));
        prop_assert!(!x5_fals(&m, &phi) || x5_fals(&total, &phi));
        Ok(())
    })
}

pub fn correspondence(cases: u32) -> Result<(), String> {
    run(cases, (formula(), x5_interpretation()), |(phi, m)| {
        let v = value5(&m, &phi, EvalMode::X5).unwrap().get();
        let total = m.there_total();
        prop_assert_eq!(x5_sat(&m, &phi), v == 2);
        prop_assert_eq!(x5_sat(&total, &phi), v > 0);
        prop_assert_eq!(x5_fals(&m, &phi), v == -2);
        prop_assert_eq!(x5_fals(&total, &phi), v < 0);
        Ok(())
    })
}

pub fn default_negation(cases: u32) -> Result<(), String> {
    run(cases, (formula(), x5_interpretation()), |(phi, m)| {
        let total = m.there_total();
        let neg = phi.clone().dneg();
        prop_assert_eq!(x5_sat(&m, &neg), !x5_sat(&total, &phi));
        prop_assert_eq!(x5_fals(&m, &neg), x5_sat(&total, &phi));
        Ok(())
    })
}

pub fn derived_operators(cases: u32) -> Result<(), String> {
    run(cases, (formula(), x5_interpretation()), |(phi, m)| {
        for mode in [EvalMode::X5, EvalMode::N5] {
            let v = |f: &Formula| value5(&m, f, mode).unwrap();
            prop_assert_eq!(v(&phi.clone().dneg()), v(&phi.clone().implies(Formula::Bot)));
            prop_assert_eq!(v(&Formula::Top), v(&Formula::Bot.dneg()));
        }
        let v = |f: &Formula| value5(&m, f, EvalMode::X5).unwrap();
        let inner = phi.clone().implies(phi.clone().xneg());
        let bot_free = inner.clone().implies(inner.xneg()).xneg();
        prop_assert_eq!(v(&phi.clone().dneg()), v(&bot_free));
        prop_assert_eq!(v(&phi.clone().xneg().implies(phi.clone().dneg())).get(), 2);
        Ok(())
    })
}

pub fn strong_iff_characterisation(cases: u32) -> Result<(), String> {
    run(cases, (formula(), formula(), x5_interpretation()), |(a, b, m)| {
        for mode in [EvalMode::X5, EvalMode::N5] {
            let v = |f: &Formula| value5(&m, f, mode).unwrap();
            prop_assert_eq!(v(&a.clone().strong_iff(b.clone())).get() == 2, v(&a) == v(&b));
        }
        Ok(())
    })
}

/// Three-valued here-and-there, coded from scratch for `~`-free formulas.
fn ht_value(h: &Interpretation, t: &Interpretation, phi: &Formula) -> u8 {
    match phi {
        Formula::Bot => 0,
        Formula::Top => 2,
        Formula::Atom(p) if h.holds(p) => 2,
        Formula::Atom(p) if t.holds(p) => 1,
        Formula::Atom(_) => 0,
        Formula::And(a, b) => ht_value(h, t, a).min(ht_value(h, t, b)),
        Formula::Or(a, b) => ht_value(h, t, a).max(ht_value(h, t, b)),
        Formula::DNeg(a) => {
            if ht_value(h, t, a) == 0 {
                2
            } else {
                0
            }
        }
        Formula::Impl(a, b) => {
            let (a, b) = (ht_value(h, t, a), ht_value(h, t, b));
            if a <= b {
                2
            } else {
                b
            }
        }
        Formula::XNeg(_) => unreachable!("generated formulas are ~-free"),
    }
}

fn without_xneg(phi: &Formula) -> Formula {
    match phi {
        Formula::XNeg(a) => without_xneg(a),
        Formula::DNeg(a) => without_xneg(a).dneg(),
        Formula::And(a, b) => without_xneg(a).and(without_xneg(b)),
        Formula::Or(a, b) => without_xneg(a).or(without_xneg(b)),
        Formula::Impl(a, b) => without_xneg(a).implies(without_xneg(b)),
        leaf => leaf.clone(),
    }
}

pub fn ht_conservativity(cases: u32) -> Result<(), String> {
    let positive = proptest::collection::vec(0i64..=2, ATOMS.len()).prop_map(|values| {
        X5Interpretation::from_values(
            ATOMS.iter().zip(values).map(|(n, v)| (atom(n), FiveValue::new(v).unwrap())),
        )
    });
    run(cases, (formula(), positive), |(phi, m)| {
        let phi = without_xneg(&phi);
        prop_assert_eq!(x5_sat(&m, &phi), ht_value(m.here(), m.there(), &phi) == 2);
        Ok(())
    })
}

pub fn round_trip(cases: u32) -> Result<(), String> {
    run(cases, (formula(), program()), |(phi, program)| {
        prop_assert_eq!(parse_formula(&phi.to_string()).unwrap(), phi);
        prop_assert_eq!(parse_program(&program.to_string()).unwrap(), program);
        Ok(())
    })
}

pub fn substitution_laws(cases: u32) -> Result<(), String> {
    run(cases, (formula(), small_formula(), proptest::sample::select(&ATOMS[..])), |(phi, alpha, p)| {
        let p = atom(p);
        prop_assert_eq!(phi.substitute(&p, &Formula::atom(p.clone())), phi.clone());
        let result = phi.substitute(&p, &alpha).atoms();
        let mut bound: Signature = phi.atoms();
        bound.remove(&p);
        bound.extend(alpha.atoms());
        prop_assert!(result.is_subset(&bound));
        if phi.atoms().contains(&p) {
            prop_assert_eq!(result, bound);
        }
        Ok(())
    })
}

pub fn parsed_rules_are_nested(cases: u32) -> Result<(), String> {
    const TOKENS: [&str; 14] = ["p", "q", "~", "not", "&", "|", "->", "(", ")", ".", "top", "bot", "<->", "<=>"];
    let text = proptest::collection::vec(proptest::sample::select(&TOKENS[..]), 1..14).prop_map(|t| t.join(" "));
    run(cases, text, |text| {
        if let Ok(program) = parse_program(&text) {
            for rule in program.rules() {
                prop_assert!(rule.body().is_nested() && rule.head().is_nested(), "{}", text);
            }
        }
        Ok(())
    })
}

pub fn constructor_invariants(cases: u32) -> Result<(), String> {
    let literal = (proptest::sample::select(&ATOMS[..]), any::<bool>())
        .prop_map(|(n, neg)| ExplicitLiteral { atom: atom(n), negated: neg });
    let literals = proptest::collection::vec(literal, 0..5);
    run(cases, (literals.clone(), literals), |(here, there)| {
        let consistent = |ls: &[ExplicitLiteral]| ls.iter().all(|l| !ls.contains(&l.complement()));
        let h = Interpretation::new(here.clone());
        let t = Interpretation::new(there.clone());
        prop_assert_eq!(h.is_ok(), consistent(&here));
        prop_assert_eq!(t.is_ok(), consistent(&there));
        if let (Ok(h), Ok(t)) = (h, t) {
            let pair = X5Interpretation::new(h.clone(), t.clone());
            prop_assert_eq!(pair.is_ok(), h.is_subset(&t));
        }
        Ok(())
    })
}

pub fn total_model_reduct(cases: u32) -> Result<(), String> {
    run(cases, (nested(), interpretation()), |(f, t)| {
        let reduct = reduct_nested(&f, &t).unwrap();
        prop_assert_eq!(sat(&t, &f).unwrap(), sat(&t, &reduct).unwrap());
        prop_assert_eq!(fals(&t, &f).unwrap(), fals(&t, &reduct).unwrap());
        Ok(())
    })
}

pub fn aux_reduct(cases: u32) -> Result<(), String> {
    run(cases, (nested(), x5_interpretation()), |(f, m)| {
        let reduct = reduct_nested(&f, m.there()).unwrap();
        prop_assert_eq!(x5_sat(&m, &f), sat(m.here(), &reduct).unwrap());
        prop_assert_eq!(x5_fals(&m, &f), fals(m.here(), &reduct).unwrap());
        Ok(())
    })
}

pub fn ht_reduct(cases: u32) -> Result<(), String> {
    run(cases, (program(), x5_interpretation()), |(program, m)| {
        let reduct = reduct_program(&program, m.there());
        let expected = is_classical_model(m.here(), &reduct) && is_classical_model(m.there(), &program);
        prop_assert_eq!(is_model(&m, &program.to_theory()), expected);
        Ok(())
    })
}

pub fn ferraris_reduct(cases: u32) -> Result<(), String> {
    run(cases, (formula(), x5_interpretation()), |(phi, m)| {
        let (plus, minus) = (ferraris_plus(&phi, m.there()), ferraris_minus(&phi, m.there()));
        prop_assert_eq!(satisfies_plus(m.here(), &plus), x5_sat(&m, &phi));
        prop_assert_eq!(falsifies_minus(m.here(), &minus), x5_fals(&m, &phi));
        let (plus, minus) = (simplify_constants(&plus), simplify_constants(&minus));
        prop_assert_eq!(satisfies_plus(m.here(), &plus), x5_sat(&m, &phi));
        prop_assert_eq!(falsifies_minus(m.here(), &minus), x5_fals(&m, &phi));
        Ok(())
    })
}

pub fn ferraris_pre_rewrite_at_total(cases: u32) -> Result<(), String> {
    run(cases, (formula(), interpretation()), |(phi, t)| {
        let total = X5Interpretation::total(t.clone());
        let plus = ferraris_plus_with(&phi, &t, ImplicationHandling::PreRewrite);
        let minus = ferraris_minus_with(&phi, &t, ImplicationHandling::PreRewrite);
        prop_assert_eq!(satisfies_plus(&t, &plus), x5_sat(&total, &phi));
        prop_assert_eq!(falsifies_minus(&t, &minus), x5_fals(&total, &phi));
        Ok(())
    })
}

pub fn reduct_bridge(cases: u32) -> Result<(), String> {
    run(cases, (nested(), x5_interpretation()), |(f, m)| {
        let (h, t) = (m.here(), m.there());
        let reduct = reduct_nested(&f, t).unwrap();
        prop_assert_eq!(
            sat(h, &reduct).unwrap(),
            sat(t, &f).unwrap() && satisfies_plus(h, &ferraris_plus(&f, t))
        );
        prop_assert_eq!(
            fals(h, &reduct).unwrap(),
            fals(t, &f).unwrap() && falsifies_minus(h, &ferraris_minus(&f, t))
        );
        Ok(())
    })
}

pub fn engine_agreement(cases: u32) -> Result<(), String> {
    run(cases, program(), |program| {
        let theory = program.to_theory();
        let reduct = answer_sets(&program, &opts()).unwrap();
        prop_assert_eq!(&equilibrium_models(&theory, &opts()).unwrap(), &reduct);
        prop_assert_eq!(&equilibrium_models_ferraris(&theory, &opts()).unwrap(), &reduct);
        for t in &reduct {
            prop_assert!(is_classical_model(t, &program));
        }
        Ok(())
    })
}

pub fn thread_determinism(cases: u32) -> Result<(), String> {
    run(cases, (program(), 2usize..6), |(program, threads)| {
        let parallel = SolveOptions { parallel: true, threads: NonZeroUsize::new(threads), ..opts() };
        prop_assert_eq!(answer_sets(&program, &parallel).unwrap(), answer_sets(&program, &opts()).unwrap());
        Ok(())
    })
}

const SUBSTITUTION: &[Strength] = &[Strength::Substitution];
const WEAK: &[Strength] = &[Strength::Substitution, Strength::Weak];

pub fn substitution_congruence(cases: u32) -> Result<(), String> {
    run(cases, (law_instance(SUBSTITUTION), context(false)), |((alpha, beta), ctx)| {
        prop_assert!(subst_equiv(&alpha, &beta, &opts()).unwrap().equivalent);
        let hole = atom(HOLE);
        let (a, b) = (ctx.substitute(&hole, &alpha), ctx.substitute(&hole, &beta));
        prop_assert!(subst_equiv(&a, &b, &opts()).unwrap().equivalent, "{} vs {}", a, b);
        Ok(())
    })
}

pub fn scoped_weak_congruence(cases: u32) -> Result<(), String> {
    let pairs = prop_oneof![
        4 => law_instance(WEAK),
        1 => small_formula().prop_map(|a| (a.clone().and(a.dneg()), Formula::Bot)),
    ];
    run(cases, (pairs, context(true)), |((alpha, beta), ctx)| {
        prop_assert!(weak_equiv(&alpha, &beta, &opts()).unwrap().equivalent);
        let hole = atom(HOLE);
        prop_assert!(!ctx.occurs_under_xneg(&hole));
        let (a, b) = (ctx.substitute(&hole, &alpha), ctx.substitute(&hole, &beta));
        prop_assert!(weak_equiv(&a, &b, &opts()).unwrap().equivalent, "{} vs {}", a, b);
        Ok(())
    })
}

pub fn substitution_implies_weak(cases: u32) -> Result<(), String> {
    let pairs = prop_oneof![law_instance(WEAK), (small_formula(), small_formula())];
    run(cases, pairs, |(alpha, beta)| {
        if subst_equiv(&alpha, &beta, &opts()).unwrap().equivalent {
            prop_assert!(weak_equiv(&alpha, &beta, &opts()).unwrap().equivalent);
        }
        Ok(())
    })
}

pub fn context_verification(cases: u32) -> Result<(), String> {
    run(cases, (small_formula(), small_formula()), |(alpha, beta)| {
        let weak = weak_equiv(&alpha, &beta, &opts()).unwrap().equivalent;
        match discriminating_context(&alpha, &beta, &opts()) {
            Ok(verdict) => {
                prop_assert!(!weak);
                let ctx = verdict.context.unwrap();
                prop_assert!(ctx.verified(), "{} vs {}: {}", alpha, beta, ctx.delta);
                let delta = Theory::from(&ctx.delta);
                let sig: Signature = alpha.atoms().into_iter().chain(beta.atoms()).collect();
                let wide = SolveOptions { signature: sig, ..opts() };
                prop_assert_eq!(
                    &equilibrium_models(&delta.with([alpha.clone()]), &wide).unwrap(),
                    &ctx.alpha_models
                );
            }
            Err(Error::EquivalentFormulas) => prop_assert!(weak),
            Err(other) => return Err(TestCaseError::fail(other.to_string())),
        }
        Ok(())
    })
}

pub fn nnf_soundness(cases: u32) -> Result<(), String> {
    run(cases, formula(), |phi| {
        for mode in [EvalMode::X5, EvalMode::N5] {
            let nnf = to_nnf(&phi, mode).unwrap();
            prop_assert!(nnf.is_nnf());
            prop_assert!(weak_equiv_in(&phi, &nnf, mode, &opts()).unwrap().equivalent, "{} / {}", phi, nnf);
        }
        Ok(())
    })
}

pub fn nnf_nested_substitution(cases: u32) -> Result<(), String> {
    run(cases, nested(), |f| {
        let nnf = to_nnf(&f, EvalMode::X5).unwrap();
        prop_assert!(subst_equiv(&f, &nnf, &opts()).unwrap().equivalent);
        Ok(())
    })
}

pub fn regularization(cases: u32) -> Result<(), String> {
    run(cases, program(), |program| {
        let regular = to_regular(&to_nnf_program(&program, EvalMode::X5).unwrap()).unwrap();
        prop_assert!(regular.is_regular());
        prop_assert!(export_asp(&regular).is_ok());
        let wide = SolveOptions { signature: program.atoms(), ..opts() };
        prop_assert_eq!(
            answer_sets(&regular, &wide).unwrap(),
            answer_sets(&program, &wide).unwrap(),
            "{} became {}",
            program,
            regular
        );
        Ok(())
    })
}

pub type Check = fn(u32) -> Result<(), String>;

/// Every check, by name.
pub fn all() -> Vec<(&'static str, Check)> {
    vec![
        ("persistence", persistence),
        ("correspondence", correspondence),
        ("default negation", default_negation),
        ("derived operators", derived_operators),
        ("strong biconditional", strong_iff_characterisation),
        ("here-and-there conservativity", ht_conservativity),
        ("parse/print round trip", round_trip),
        ("substitution laws", substitution_laws),
        ("parsed rules are nested", parsed_rules_are_nested),
        ("constructor invariants", constructor_invariants),
        ("total-model reduct", total_model_reduct),
        ("reduct lemma", aux_reduct),
        ("program reduct characterisation", ht_reduct),
        ("Ferraris reduct", ferraris_reduct),
        ("Ferraris pre-rewrite at total models", ferraris_pre_rewrite_at_total),
        ("reduct bridge", reduct_bridge),
        ("engine agreement", engine_agreement),
        ("thread determinism", thread_determinism),
        ("substitution congruence", substitution_congruence),
        ("scoped weak congruence", scoped_weak_congruence),
        ("substitution implies weak", substitution_implies_weak),
        ("discriminating context", context_verification),
        ("NNF soundness", nnf_soundness),
        ("NNF of nested expressions", nnf_nested_substitution),
        ("regularization", regularization),
    ]
}
