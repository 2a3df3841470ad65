//! Validity, weak equivalence `↔`, substitution equivalence `⟺` and
//! discriminating contexts.
//!
//! All checks enumerate five-valued assignments over the atoms involved and
//! report the first counter-model in canonical order.

use std::fmt;

use crate::error::{Error, Result};
use crate::semantics::{classical_sat, is_model, value5, x5_sat, EvalMode};
use crate::solver::{enumerate_x5, equilibrium_models, SolveOptions};
use crate::syntax::{
    Atoms, FiveValue, Formula, Interpretation, Program, Rule, Signature, Theory, X5Interpretation,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivVerdict {
    pub equivalent: bool,
    /// First counter-model in canonical order; present iff not equivalent.
    pub witness: Option<X5Interpretation>,
    pub context: Option<DiscriminatingContext>,
}

impl EquivVerdict {
    fn holds() -> Self {
        EquivVerdict { equivalent: true, witness: None, context: None }
    }

    fn fails(witness: X5Interpretation) -> Self {
        EquivVerdict { equivalent: false, witness: Some(witness), context: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Alpha,
    Beta,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Alpha => "alpha",
            Side::Beta => "beta",
        })
    }
}

/// A theory `Δ` whose extensions by `alpha` and by `beta` have different
/// equilibrium models.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminatingContext {
    /// Facts and `l1 -> l2` rules, directly runnable by the solver.
    pub delta: Program,
    /// The formula satisfied by the witness.
    pub satisfied: Side,
    pub witness: X5Interpretation,
    pub alpha_models: Vec<Interpretation>,
    pub beta_models: Vec<Interpretation>,
}

impl DiscriminatingContext {
    pub fn verified(&self) -> bool {
        self.alpha_models != self.beta_models
    }
}

fn signature(formulas: &[&Formula], opts: &SolveOptions) -> Result<Signature> {
    let atoms = formulas.iter().flat_map(|f| f.atoms()).collect();
    opts.signature_for(atoms)
}

/// `⊨ phi` in the explicit-negation logic.
pub fn is_valid(phi: &Formula, opts: &SolveOptions) -> Result<EquivVerdict> {
    is_valid_in(phi, EvalMode::X5, opts)
}

/// `⊨ phi` under `mode`. The classical mode checks here-and-there
/// satisfaction with `~` read as non-satisfaction.
pub fn is_valid_in(phi: &Formula, mode: EvalMode, opts: &SolveOptions) -> Result<EquivVerdict> {
    let signature = signature(&[phi], opts)?;
    for m in enumerate_x5(&signature, opts)? {
        let designated = match mode {
            EvalMode::ClassicalNeg => classical_sat(&m, phi),
            _ => value5(&m, phi, mode)?.is_designated(),
        };
        if !designated {
            return Ok(EquivVerdict::fails(m));
        }
    }
    Ok(EquivVerdict::holds())
}

/// `⊨ alpha ↔ beta`, which coincides with strong equivalence of theories.
pub fn weak_equiv(alpha: &Formula, beta: &Formula, opts: &SolveOptions) -> Result<EquivVerdict> {
    weak_equiv_in(alpha, beta, EvalMode::X5, opts)
}

pub fn weak_equiv_in(alpha: &Formula, beta: &Formula, mode: EvalMode, opts: &SolveOptions) -> Result<EquivVerdict> {
    is_valid_in(&alpha.clone().iff(beta.clone()), mode, opts)
}

/// `⊨ alpha ⟺ beta`: equal values under every assignment.
pub fn subst_equiv(alpha: &Formula, beta: &Formula, opts: &SolveOptions) -> Result<EquivVerdict> {
    subst_equiv_in(alpha, beta, EvalMode::X5, opts)
}

pub fn subst_equiv_in(alpha: &Formula, beta: &Formula, mode: EvalMode, opts: &SolveOptions) -> Result<EquivVerdict> {
    if mode == EvalMode::ClassicalNeg {
        return Err(Error::UnsupportedMode(mode));
    }
    is_valid_in(&alpha.clone().strong_iff(beta.clone()), mode, opts)
}

/// Values of both formulas at `m`, for reporting witnesses.
pub fn witness_values(
    m: &X5Interpretation,
    alpha: &Formula,
    beta: &Formula,
    mode: EvalMode,
) -> Result<(FiveValue, FiveValue)> {
    Ok((value5(m, alpha, mode)?, value5(m, beta, mode)?))
}

/// Builds a theory `Δ` separating two formulas that are not weakly
/// equivalent, and checks the separation with the solver.
///
/// A model of `alpha` that is not a model of `beta` is preferred; otherwise
/// the roles are swapped.
pub fn discriminating_context(alpha: &Formula, beta: &Formula, opts: &SolveOptions) -> Result<EquivVerdict> {
    let signature = signature(&[alpha, beta], opts)?;
    let separating = |sat: &Formula, unsat: &Formula| -> Result<Option<X5Interpretation>> {
        Ok(enumerate_x5(&signature, opts)?.find(|m| x5_sat(m, sat) && !x5_sat(m, unsat)))
    };
    let (satisfied, witness) = match separating(alpha, beta)? {
        Some(m) => (Side::Alpha, m),
        None => match separating(beta, alpha)? {
            Some(m) => (Side::Beta, m),
            None => return Err(Error::EquivalentFormulas),
        },
    };
    let unsatisfied = match satisfied {
        Side::Alpha => beta,
        Side::Beta => alpha,
    };
    let delta = delta_for(&witness, unsatisfied);
    let extended = |phi: &Formula| {
        let mut ctx = opts.clone();
        ctx.signature.extend(signature.iter().cloned());
        equilibrium_models(&Theory::from(&delta).with([phi.clone()]), &ctx)
    };
    let context = DiscriminatingContext {
        alpha_models: extended(alpha)?,
        beta_models: extended(beta)?,
        delta,
        satisfied,
        witness: witness.clone(),
    };
    Ok(EquivVerdict { equivalent: false, witness: Some(witness), context: Some(context) })
}

/// `Δ = T` when `<T,T>` already fails the other formula, otherwise
/// `H ∪ {l1 -> l2 : l1, l2 ∈ T \ H}`.
fn delta_for(witness: &X5Interpretation, unsatisfied: &Formula) -> Program {
    let fact = |l: &crate::syntax::ExplicitLiteral| Rule::fact(l.to_formula()).expect("literals are nested");
    if !x5_sat(&witness.there_total(), unsatisfied) {
        return witness.there().iter().map(fact).collect();
    }
    let gap: Vec<_> = witness.there().iter().filter(|l| !witness.here().contains(l)).collect();
    let mut rules: Vec<Rule> = witness.here().iter().map(fact).collect();
    for l1 in &gap {
        for l2 in &gap {
            rules.push(Rule::new(l1.to_formula(), l2.to_formula()).expect("literals are nested"));
        }
    }
    Program::new(rules)
}

/// A context `phi(x)` in which replacing `alpha` by `beta` changes the
/// equilibrium models, together with the separating theory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubstitutionContext {
    pub alpha_in_context: Formula,
    pub beta_in_context: Formula,
    pub context: DiscriminatingContext,
}

/// Tries the contexts `x` and `~x`. One of them separates any pair that is
/// not substitution-equivalent, since the values of a formula are fixed by
/// its satisfaction and falsification at `<H,T>` and `<T,T>`.
pub fn substitution_context(
    alpha: &Formula,
    beta: &Formula,
    opts: &SolveOptions,
) -> Result<Option<SubstitutionContext>> {
    let contexts: [fn(Formula) -> Formula; 2] = [|x| x, Formula::xneg];
    for wrap in contexts {
        let (a, b) = (wrap(alpha.clone()), wrap(beta.clone()));
        match discriminating_context(&a, &b, opts) {
            Ok(verdict) => {
                let context = verdict.context.expect("discriminating verdicts carry a context");
                return Ok(Some(SubstitutionContext { alpha_in_context: a, beta_in_context: b, context }));
            }
            Err(Error::EquivalentFormulas) => continue,
            Err(other) => return Err(other),
        }
    }
    Ok(None)
}

/// Checks that `gamma ∪ {alpha}` and `gamma ∪ {beta}` have the same models;
/// requires `alpha ↔ beta` to be valid.
pub fn theory_replace_check(gamma: &Theory, alpha: &Formula, beta: &Formula, opts: &SolveOptions) -> Result<bool> {
    if !weak_equiv(alpha, beta, opts)?.equivalent {
        return Err(Error::NotWeaklyEquivalent);
    }
    let mut formulas: Vec<&Formula> = gamma.formulas().iter().collect();
    formulas.extend([alpha, beta]);
    let signature = signature(&formulas, opts)?;
    let with_alpha = gamma.with([alpha.clone()]);
    let with_beta = gamma.with([beta.clone()]);
    Ok(enumerate_x5(&signature, opts)?.all(|m| is_model(&m, &with_alpha) == is_model(&m, &with_beta)))
}
