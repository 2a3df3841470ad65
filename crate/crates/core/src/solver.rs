//! Brute-force enumeration of interpretations, minimal models, answer sets
//! and equilibrium models.
//!
//! Every engine walks the candidate there-worlds `T` in canonical order and
//! checks minimality only against here-worlds `H ⊂ T` of the same `T`.
//! Candidates can be split across threads; results are always returned in
//! canonical order.

use std::fmt;
use std::num::NonZeroUsize;
use std::thread;

use crate::error::{Error, Result};
use crate::reduct::{ferraris_plus, reduct_program, satisfies_plus};
use crate::semantics::{is_classical_model, is_model};
use crate::syntax::{
    Atom, Atoms, ExplicitLiteral, FiveValue, Interpretation, Program, Signature, Theory,
    X5Interpretation,
};

pub const DEFAULT_MAX_ATOMS: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOptions {
    /// Atoms added to those of the input.
    pub signature: Signature,
    /// Enumeration refuses larger signatures.
    pub max_atoms: usize,
    pub parallel: bool,
    /// Worker count when `parallel` is set; defaults to the available cores.
    pub threads: Option<NonZeroUsize>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            signature: Signature::new(),
            max_atoms: DEFAULT_MAX_ATOMS,
            parallel: false,
            threads: None,
        }
    }
}

impl SolveOptions {
    /// `atoms ∪ self.signature`, checked against `max_atoms`.
    pub fn signature_for(&self, atoms: Signature) -> Result<Signature> {
        let mut signature = atoms;
        signature.extend(self.signature.iter().cloned());
        self.check(&signature)?;
        Ok(signature)
    }

    pub fn check(&self, signature: &Signature) -> Result<()> {
        if signature.len() > self.max_atoms {
            Err(Error::SignatureTooLarge { size: signature.len(), limit: self.max_atoms })
        } else {
            Ok(())
        }
    }

    fn workers(&self) -> usize {
        if !self.parallel {
            return 1;
        }
        self.threads
            .or_else(|| thread::available_parallelism().ok())
            .map_or(1, NonZeroUsize::get)
    }
}

/// Decodes `index` as mixed-radix digits, first atom most significant.
fn digits(mut index: usize, base: usize, count: usize) -> Vec<usize> {
    let mut out = vec![0; count];
    for slot in out.iter_mut().rev() {
        *slot = index % base;
        index /= base;
    }
    out
}

/// All `3^n` consistent literal sets over `signature`, ordered
/// lexicographically with per-atom states absent < `p` < `~p`.
pub fn enumerate_interpretations(
    signature: &Signature,
    opts: &SolveOptions,
) -> Result<impl Iterator<Item = Interpretation>> {
    opts.check(signature)?;
    let atoms: Vec<Atom> = signature.iter().cloned().collect();
    let total = 3usize.pow(atoms.len() as u32);
    Ok((0..total).map(move |index| {
        let literals = digits(index, 3, atoms.len())
            .into_iter()
            .zip(&atoms)
            .filter_map(|(state, atom)| match state {
                1 => Some(ExplicitLiteral::positive(atom.clone())),
                2 => Some(ExplicitLiteral::negative(atom.clone())),
                _ => None,
            });
        Interpretation::new(literals).expect("one literal per atom is consistent")
    }))
}

/// Per-atom value order of [`enumerate_x5`].
pub const X5_VALUE_ORDER: [FiveValue; 5] = [
    FiveValue::UNDEFINED,
    FiveValue::DEFAULT_TRUE,
    FiveValue::TRUE,
    FiveValue::DEFAULT_FALSE,
    FiveValue::FALSE,
];

/// All `5^n` pairs `<H,T>` over `signature`, ordered lexicographically with
/// per-atom values `0 < 1 < 2 < -1 < -2`.
pub fn enumerate_x5(
    signature: &Signature,
    opts: &SolveOptions,
) -> Result<impl Iterator<Item = X5Interpretation>> {
    opts.check(signature)?;
    let atoms: Vec<Atom> = signature.iter().cloned().collect();
    let total = 5usize.pow(atoms.len() as u32);
    Ok((0..total).map(move |index| {
        X5Interpretation::from_values(
            digits(index, 5, atoms.len())
                .into_iter()
                .zip(&atoms)
                .map(|(digit, atom)| (atom.clone(), X5_VALUE_ORDER[digit])),
        )
    }))
}

/// Keeps the candidates accepted by `keep`, in their original order.
fn select<F>(candidates: Vec<Interpretation>, opts: &SolveOptions, keep: F) -> Vec<Interpretation>
where
    F: Fn(&Interpretation) -> bool + Sync,
{
    let workers = opts.workers().min(candidates.len().max(1));
    if workers <= 1 {
        return candidates.into_iter().filter(|t| keep(t)).collect();
    }
    let chunk = candidates.len().div_ceil(workers);
    let keep = &keep;
    let mut accepted: Vec<(usize, Interpretation)> = thread::scope(|scope| {
        let handles: Vec<_> = candidates
            .chunks(chunk)
            .enumerate()
            .map(|(n, slice)| {
                scope.spawn(move || {
                    slice
                        .iter()
                        .enumerate()
                        .filter(|(_, t)| keep(t))
                        .map(|(i, t)| (n * chunk + i, t.clone()))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|handle| handle.join().expect("solver worker panicked"))
            .collect()
    });
    accepted.sort_by_key(|(index, _)| *index);
    accepted.into_iter().map(|(_, t)| t).collect()
}

fn candidates(signature: &Signature, opts: &SolveOptions) -> Result<Vec<Interpretation>> {
    Ok(enumerate_interpretations(signature, opts)?.collect())
}

/// All ⊆-minimal classical models of an explicit program.
pub fn minimal_models_explicit(program: &Program, opts: &SolveOptions) -> Result<Vec<Interpretation>> {
    if let Some(rule) = program.rules().iter().find(|r| !r.is_explicit()) {
        return Err(Error::NotExplicit(rule.clone()));
    }
    let signature = opts.signature_for(program.atoms())?;
    Ok(select(candidates(&signature, opts)?, opts, |t| {
        is_classical_model(t, program) && !t.proper_subsets().any(|h| is_classical_model(&h, program))
    }))
}

/// All `T` that are ⊆-minimal models of the reduct `P^T`.
pub fn answer_sets(program: &Program, opts: &SolveOptions) -> Result<Vec<Interpretation>> {
    let signature = opts.signature_for(program.atoms())?;
    Ok(select(candidates(&signature, opts)?, opts, |t| is_answer_set(program, t)))
}

pub fn is_answer_set(program: &Program, t: &Interpretation) -> bool {
    let reduct = reduct_program(program, t);
    is_classical_model(t, &reduct) && !t.proper_subsets().any(|h| is_classical_model(&h, &reduct))
}

/// All `T` such that `<T,T>` is an equilibrium model.
pub fn equilibrium_models(theory: &Theory, opts: &SolveOptions) -> Result<Vec<Interpretation>> {
    let signature = opts.signature_for(theory.atoms())?;
    Ok(select(candidates(&signature, opts)?, opts, |t| is_equilibrium(theory, t)))
}

pub fn is_equilibrium(theory: &Theory, t: &Interpretation) -> bool {
    is_model(&X5Interpretation::total(t.clone()), theory)
        && !t.proper_subsets().any(|h| {
            let m = X5Interpretation::new(h, t.clone()).expect("proper subsets lie below T");
            is_model(&m, theory)
        })
}

/// All `T` that are minimal models of `{phi^T_+ : phi ∈ theory}`.
pub fn equilibrium_models_ferraris(theory: &Theory, opts: &SolveOptions) -> Result<Vec<Interpretation>> {
    let signature = opts.signature_for(theory.atoms())?;
    Ok(select(candidates(&signature, opts)?, opts, |t| {
        let reducts: Vec<_> = theory.formulas().iter().map(|phi| ferraris_plus(phi, t)).collect();
        let satisfied = |h: &Interpretation| reducts.iter().all(|r| satisfies_plus(h, r));
        satisfied(t) && !t.proper_subsets().any(|h| satisfied(&h))
    }))
}

/// `m ≤ m'`: same there-world and `H ⊆ H'`.
pub fn leq(m: &X5Interpretation, other: &X5Interpretation) -> bool {
    m.there() == other.there() && m.here().is_subset(other.here())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    /// Answer sets through the nested-expression reduct (programs only).
    Reduct,
    /// Equilibrium models through here-and-there satisfaction.
    X5,
    /// Equilibrium models through the `+` reduct.
    Ferraris,
}

impl Engine {
    pub const ALL: [Engine; 3] = [Engine::Reduct, Engine::X5, Engine::Ferraris];
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Reduct => "reduct",
            Engine::X5 => "x5",
            Engine::Ferraris => "ferraris",
        })
    }
}

/// The solver input: a program keeps access to the reduct engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Program(Program),
    Theory(Theory),
}

impl Input {
    pub fn theory(&self) -> Theory {
        match self {
            Input::Program(program) => program.to_theory(),
            Input::Theory(theory) => theory.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    /// Results of the first engine that ran.
    pub models: Vec<Interpretation>,
    pub runs: Vec<(Engine, Vec<Interpretation>)>,
    /// Engines that were requested but do not apply to the input.
    pub skipped: Vec<Engine>,
}

impl SolveReport {
    /// All engines that ran produced the same list.
    pub fn agreement(&self) -> bool {
        self.runs.windows(2).all(|pair| pair[0].1 == pair[1].1)
    }
}

/// Runs the requested engines; the reduct engine is skipped for theories that
/// are not programs.
pub fn solve(input: &Input, engines: &[Engine], opts: &SolveOptions) -> Result<SolveReport> {
    let theory = input.theory();
    let mut runs = Vec::new();
    let mut skipped = Vec::new();
    for &engine in engines {
        let models = match (engine, input) {
            (Engine::Reduct, Input::Program(program)) => answer_sets(program, opts)?,
            (Engine::Reduct, Input::Theory(_)) => {
                skipped.push(engine);
                continue;
            }
            (Engine::X5, _) => equilibrium_models(&theory, opts)?,
            (Engine::Ferraris, _) => equilibrium_models_ferraris(&theory, opts)?,
        };
        runs.push((engine, models));
    }
    let models = runs.first().map(|(_, m)| m.clone()).unwrap_or_default();
    Ok(SolveReport { models, runs, skipped })
}
