mod args;
mod tables;

use std::fmt::Write as _;
use std::io::{self, Read};
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser as _;
use serde_json::{json, Value};

use x5_core::equivalence::{
    discriminating_context, is_valid_in, subst_equiv_in, weak_equiv_in, witness_values, EquivVerdict,
};
use x5_core::parser::{parse_theory, parse_theory_lines};
use x5_core::reduct::{ferraris_minus, ferraris_plus, reduct_program, simplify_constants, simplify_program};
use x5_core::semantics::{classical_sat, value5, x5_fals, x5_sat};
use x5_core::solver::{solve, Engine, Input, SolveOptions};
use x5_core::transform::{export_asp, to_nnf_program, to_nnf_traced, to_regular_with, RegularOptions};
use x5_core::{
    parse_formula, parse_interpretation, Atom, Atoms, Error, EvalMode, Formula, Interpretation, Program, Signature,
    Theory, X5Interpretation,
};

use crate::args::{Cli, Command, Equivalence, Global, Mode, Via};

const NEGATIVE: u8 = 1;
const USAGE: u8 = 2;
const RESOURCE: u8 = 3;
const DISAGREEMENT: u8 = 4;

enum Failure {
    Core(Error),
    Io(PathBuf, io::Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure::Core(error)
    }
}

impl From<x5_core::parser::ParseError> for Failure {
    fn from(error: x5_core::parser::ParseError) -> Self {
        Failure::Core(error.into())
    }
}

/// What a command produced: text for the terminal, the pieces of the JSON
/// object, and the exit code.
struct Outcome {
    text: String,
    result: Value,
    witness: Value,
    agreement: Value,
    code: u8,
}

impl Outcome {
    fn new(text: String, result: Value) -> Self {
        Outcome { text, result, witness: Value::Null, agreement: Value::Null, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    match run(&cli) {
        Ok(outcome) => {
            if cli.global.json {
                let object = json!({
                    "command": name,
                    "result": outcome.result,
                    "witness": outcome.witness,
                    "engine_agreement": outcome.agreement,
                });
                println!("{object}");
            } else {
                print!("{}", outcome.text);
            }
            ExitCode::from(outcome.code)
        }
        Err(failure) => {
            let code = match &failure {
                Failure::Core(error) if error.is_resource_limit() => RESOURCE,
                _ => USAGE,
            };
            match failure {
                Failure::Core(Error::Parse(error)) => eprintln!("x5: parse error at {}: {}", error.span, error.message),
                Failure::Core(error) => eprintln!("x5: {error}"),
                Failure::Io(path, error) => eprintln!("x5: cannot read `{}`: {error}", path.display()),
                Failure::Usage(message) => eprintln!("x5: {message}"),
            }
            ExitCode::from(code)
        }
    }
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Solve { .. } => "solve",
        Command::Eval { .. } => "eval",
        Command::Reduct { .. } => "reduct",
        Command::Valid { .. } => "valid",
        Command::Equiv { .. } => "equiv",
        Command::Context { .. } => "context",
        Command::Nnf { .. } => "nnf",
        Command::Regular { .. } => "regular",
        Command::Export { .. } => "export",
        Command::Tables { .. } => "tables",
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let opts = options(&cli.global)?;
    match &cli.command {
        Command::Solve { file, via } => solve_file(file, *via, &opts),
        Command::Eval { expr, model, here, mode } => eval(expr, model, here.as_deref(), *mode),
        Command::Reduct { file, wrt, ferraris, raw } => reduct(file, wrt, *ferraris, *raw),
        Command::Valid { expr, mode } => valid(expr, *mode, &opts),
        Command::Equiv { kind, alpha, beta, mode } => equiv(*kind, alpha, beta, *mode, &opts),
        Command::Context { alpha, beta } => context(alpha, beta, &opts),
        Command::Nnf { expr, mode, rule_trace } => nnf(expr, *mode, *rule_trace),
        Command::Regular { file, keep_negated_heads } => regular(file, *keep_negated_heads),
        Command::Export { file } => export(file),
        Command::Tables { mode } => tables::render(eval_mode(*mode)?),
    }
}

fn options(global: &Global) -> Result<SolveOptions, Failure> {
    let signature = global
        .signature
        .iter()
        .map(|name| Atom::new(name.trim()))
        .collect::<Result<Signature, _>>()?;
    let threads = global.parallel.and_then(NonZeroUsize::new);
    Ok(SolveOptions {
        signature,
        max_atoms: global.max_atoms,
        parallel: threads.is_some_and(|n| n.get() > 1),
        threads,
    })
}

fn eval_mode(mode: Mode) -> Result<EvalMode, Failure> {
    Ok(match mode {
        Mode::X5 => EvalMode::X5,
        Mode::N5 => EvalMode::N5,
        Mode::Classical => EvalMode::ClassicalNeg,
    })
}

fn read(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let result = if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|content| text = content)
    };
    result.map_err(|error| Failure::Io(path.to_path_buf(), error))?;
    Ok(text)
}

/// Dot-terminated statements, or one formula per line when no statement
/// ends in a dot.
fn load_theory(path: &Path) -> Result<Theory, Failure> {
    let text = read(path)?;
    let dotted = text.lines().any(|line| line.split('%').next().unwrap_or("").contains('.'));
    Ok(if dotted { parse_theory(&text)? } else { parse_theory_lines(&text)? })
}

fn load_program(path: &Path) -> Result<Program, Failure> {
    Ok(load_theory(path)?.to_program()?)
}

fn models_text(models: &[Interpretation]) -> String {
    if models.is_empty() {
        "none".into()
    } else {
        models.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
    }
}

fn models_json(models: &[Interpretation]) -> Value {
    models.iter().map(ToString::to_string).collect()
}

fn solve_file(file: &Path, via: Option<Via>, opts: &SolveOptions) -> Result<Outcome, Failure> {
    let theory = load_theory(file)?;
    let input = match theory.to_program() {
        Ok(program) => Input::Program(program),
        Err(_) => Input::Theory(theory),
    };
    let engines = match via {
        None => Engine::ALL.to_vec(),
        Some(Via::Reduct) => vec![Engine::Reduct],
        Some(Via::X5) => vec![Engine::X5],
        Some(Via::Ferraris) => vec![Engine::Ferraris],
    };
    let report = solve(&input, &engines, opts)?;
    if report.runs.is_empty() {
        return Err(Failure::Usage("the reduct engine needs a program, not a theory".into()));
    }
    let mut text: String = report.models.iter().map(|m| format!("{m}\n")).collect();
    let mut outcome = Outcome::new(String::new(), models_json(&report.models));
    if report.runs.len() > 1 {
        let agreement = report.agreement();
        outcome.agreement = Value::Bool(agreement);
        if !agreement {
            eprintln!("x5: engines disagree");
            for (engine, models) in &report.runs {
                eprintln!("  {engine}: {}", models_text(models));
            }
            outcome.code = DISAGREEMENT;
            text.clear();
        }
    }
    outcome.text = text;
    Ok(outcome)
}

fn eval(expr: &str, model: &str, here: Option<&str>, mode: Mode) -> Result<Outcome, Failure> {
    let phi = parse_formula(expr)?;
    let there = parse_interpretation(model)?;
    let here = match here {
        Some(text) => parse_interpretation(text)?,
        None => there.clone(),
    };
    let m = X5Interpretation::new(here, there)?;
    if mode == Mode::Classical {
        let sat = classical_sat(&m, &phi);
        return Ok(Outcome::new(format!("sat: {sat}\n"), json!({ "value": null, "sat": sat, "fals": null })));
    }
    let mode = eval_mode(mode)?;
    let value = value5(&m, &phi, mode)?;
    let (sat, fals) = match mode {
        EvalMode::X5 => (x5_sat(&m, &phi), x5_fals(&m, &phi)),
        _ => (value.get() == 2, value.get() == -2),
    };
    Ok(Outcome::new(
        format!("value: {value}\nsat: {sat}\nfals: {fals}\n"),
        json!({ "value": value.get(), "sat": sat, "fals": fals }),
    ))
}

fn reduct(file: &Path, wrt: &str, ferraris: bool, raw: bool) -> Result<Outcome, Failure> {
    let theory = load_theory(file)?;
    let t = parse_interpretation(wrt)?;
    let tidy = |f: Formula| if raw { f } else { simplify_constants(&f) };
    if ferraris {
        let mut text = String::new();
        let mut result = Vec::new();
        for phi in theory.formulas() {
            let (plus, minus) = (tidy(ferraris_plus(phi, &t)), tidy(ferraris_minus(phi, &t)));
            let _ = writeln!(text, "{phi}\n  +: {plus}\n  -: {minus}");
            result.push(json!({ "formula": phi.to_string(), "plus": plus.to_string(), "minus": minus.to_string() }));
        }
        return Ok(Outcome::new(text, Value::Array(result)));
    }
    let program = theory.to_program()?;
    let mut reduct = reduct_program(&program, &t);
    if !raw {
        reduct = simplify_program(&reduct);
    }
    let lines: Value = reduct.rules().iter().map(|r| r.to_string()).collect();
    Ok(Outcome::new(reduct.to_string(), lines))
}

fn witness_signature(formulas: &[&Formula], opts: &SolveOptions) -> Signature {
    let mut signature: Signature = formulas.iter().flat_map(|f| f.atoms()).collect();
    signature.extend(opts.signature.iter().cloned());
    signature
}

fn valid(expr: &str, mode: Mode, opts: &SolveOptions) -> Result<Outcome, Failure> {
    let phi = parse_formula(expr)?;
    let mode = eval_mode(mode)?;
    let verdict = is_valid_in(&phi, mode, opts)?;
    let Some(m) = verdict.witness else {
        return Ok(Outcome::new("valid\n".into(), Value::Bool(true)));
    };
    let described = m.describe(&witness_signature(&[&phi], opts));
    let (line, values) = match mode {
        EvalMode::ClassicalNeg => (format!("witness: {m}"), Value::Null),
        _ => {
            let value = value5(&m, &phi, mode)?;
            (format!("witness: {described} : {value}"), json!([value.get()]))
        }
    };
    let mut outcome = Outcome::new(format!("not valid\n{line}\n"), Value::Bool(false));
    outcome.witness = json!({ "model": described, "interpretation": m.to_string(), "values": values });
    outcome.code = NEGATIVE;
    Ok(outcome)
}

fn equiv(kind: Equivalence, alpha: &str, beta: &str, mode: Mode, opts: &SolveOptions) -> Result<Outcome, Failure> {
    let (alpha, beta) = (parse_formula(alpha)?, parse_formula(beta)?);
    let mode = eval_mode(mode)?;
    let (verdict, label): (EquivVerdict, _) = match kind {
        Equivalence::Weak => (weak_equiv_in(&alpha, &beta, mode, opts)?, "weakly equivalent"),
        Equivalence::Subst => (subst_equiv_in(&alpha, &beta, mode, opts)?, "substitution-equivalent"),
    };
    let Some(m) = verdict.witness else {
        return Ok(Outcome::new(format!("{label}\n"), Value::Bool(true)));
    };
    let described = m.describe(&witness_signature(&[&alpha, &beta], opts));
    let (line, values) = match mode {
        EvalMode::ClassicalNeg => (format!("witness: {m}"), Value::Null),
        _ => {
            let (a, b) = witness_values(&m, &alpha, &beta, mode)?;
            (format!("witness: {described} : {a} vs {b}"), json!([a.get(), b.get()]))
        }
    };
    let mut outcome = Outcome::new(format!("not {label}\n{line}\n"), Value::Bool(false));
    outcome.witness = json!({ "model": described, "interpretation": m.to_string(), "values": values });
    outcome.code = NEGATIVE;
    Ok(outcome)
}

fn context(alpha: &str, beta: &str, opts: &SolveOptions) -> Result<Outcome, Failure> {
    let (alpha, beta) = (parse_formula(alpha)?, parse_formula(beta)?);
    let verdict = match discriminating_context(&alpha, &beta, opts) {
        Ok(verdict) => verdict,
        Err(Error::EquivalentFormulas) => {
            let mut outcome =
                Outcome::new("weakly equivalent: no discriminating context\n".into(), Value::Null);
            outcome.code = NEGATIVE;
            return Ok(outcome);
        }
        Err(error) => return Err(error.into()),
    };
    let ctx = verdict.context.expect("discriminating verdicts carry a context");
    let mut text = format!("witness: {} satisfies {} only\ndelta:\n", ctx.witness, ctx.satisfied);
    for rule in ctx.delta.rules() {
        let _ = writeln!(text, "  {rule}");
    }
    let _ = writeln!(text, "alpha models: {}", models_text(&ctx.alpha_models));
    let _ = writeln!(text, "beta models: {}", models_text(&ctx.beta_models));
    text.push_str(if ctx.verified() { "verified\n" } else { "NOT verified\n" });
    let described = ctx.witness.describe(&witness_signature(&[&alpha, &beta], opts));
    let mut outcome = Outcome::new(
        text,
        json!({
            "delta": ctx.delta.rules().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            "satisfied": ctx.satisfied.to_string(),
            "alpha_models": models_json(&ctx.alpha_models),
            "beta_models": models_json(&ctx.beta_models),
            "verified": ctx.verified(),
        }),
    );
    outcome.witness = json!({ "model": described, "interpretation": ctx.witness.to_string(), "values": null });
    if !ctx.verified() {
        outcome.code = DISAGREEMENT;
    }
    Ok(outcome)
}

fn nnf(expr: &str, mode: Mode, rule_trace: bool) -> Result<Outcome, Failure> {
    let phi = parse_formula(expr)?;
    let (nnf, trace) = to_nnf_traced(&phi, eval_mode(mode)?)?;
    if rule_trace {
        for step in &trace {
            eprintln!("{step}");
        }
    }
    Ok(Outcome::new(format!("{nnf}\n"), Value::String(nnf.to_string())))
}

fn regularize(program: &Program, keep_negated_heads: bool) -> Result<Program, Failure> {
    let options = RegularOptions { eliminate_head_negation: !keep_negated_heads, ..RegularOptions::default() };
    Ok(to_regular_with(&to_nnf_program(program, EvalMode::X5)?, options)?)
}

fn regular(file: &Path, keep_negated_heads: bool) -> Result<Outcome, Failure> {
    let program = regularize(&load_program(file)?, keep_negated_heads)?;
    let lines: Value = program.rules().iter().map(|r| r.to_string()).collect();
    Ok(Outcome::new(program.to_string(), lines))
}

fn export(file: &Path) -> Result<Outcome, Failure> {
    let mut program = load_program(file)?;
    if !program.is_regular() {
        program = regularize(&program, false)?;
    }
    let text = export_asp(&program)?;
    Ok(Outcome::new(text.clone(), Value::String(text)))
}
