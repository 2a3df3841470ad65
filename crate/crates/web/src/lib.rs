//! Browser bindings for the x5 workbench.
//!
//! Each exported function takes and returns strings; results are JSON
//! objects and failures come back as an `{"error": ...}` object so the page
//! never has to catch exceptions.

use serde_json::{json, Map, Value};
use wasm_bindgen::prelude::wasm_bindgen;

use x5_core::semantics::value5;
use x5_core::solver::{solve, Engine, Input, SolveOptions};
use x5_core::{parse_formula, parse_theory, Atom, Atoms, EvalMode, FiveValue, X5Interpretation};

/// Browsers get a smaller default than the command line.
pub const MAX_ATOMS: usize = 8;

fn mode(name: &str) -> Result<EvalMode, String> {
    match name {
        "x5" | "" => Ok(EvalMode::X5),
        "n5" => Ok(EvalMode::N5),
        other => Err(format!("unknown mode `{other}`")),
    }
}

fn error(message: impl ToString) -> Value {
    json!({ "error": message.to_string() })
}

/// The truth table of a formula over its atoms, in canonical value order.
///
/// Formulas with more than two atoms are refused; the table would not fit
/// on a page.
pub fn truth_table(expr: &str, mode_name: &str) -> Value {
    let inner = || -> Result<Value, String> {
        let mode = mode(mode_name)?;
        let phi = parse_formula(expr).map_err(|e| e.to_string())?;
        let atoms: Vec<Atom> = phi.atoms().into_iter().collect();
        if atoms.len() > 2 {
            return Err(format!("{} atoms; tables take at most two", atoms.len()));
        }
        let columns: Vec<Option<FiveValue>> = match atoms.len() {
            2 => FiveValue::ALL.iter().copied().map(Some).collect(),
            _ => vec![None],
        };
        let rows: Vec<Option<FiveValue>> = match atoms.len() {
            0 => vec![None],
            _ => FiveValue::ALL.iter().copied().map(Some).collect(),
        };
        let mut cells = Vec::new();
        for &row in &rows {
            let mut line = Vec::new();
            for &column in &columns {
                let assignment = atoms.iter().cloned().zip([row, column].into_iter().flatten());
                let m = X5Interpretation::from_values(assignment);
                line.push(value5(&m, &phi, mode).map_err(|e| e.to_string())?.get());
            }
            cells.push(line);
        }
        let names: Vec<&str> = atoms.iter().map(Atom::name).collect();
        let values: Vec<i8> = FiveValue::ALL.iter().map(|v| v.get()).collect();
        Ok(json!({ "formula": phi.to_string(), "atoms": names, "values": values, "cells": cells }))
    };
    inner().unwrap_or_else(error)
}

/// Value of a formula under per-atom values given as a JSON object such as
/// `{"p": 1, "q": -2}`. Missing atoms take the value 0.
pub fn evaluate(expr: &str, assignment: &str, mode_name: &str) -> Value {
    let inner = || -> Result<Value, String> {
        let mode = mode(mode_name)?;
        let phi = parse_formula(expr).map_err(|e| e.to_string())?;
        let given: Map<String, Value> = match assignment.trim() {
            "" => Map::new(),
            text => serde_json::from_str(text).map_err(|e| format!("assignment: {e}"))?,
        };
        let mut values = Vec::new();
        for (name, value) in given {
            let atom = Atom::new(&name).map_err(|e| e.to_string())?;
            let number = value.as_i64().ok_or_else(|| format!("value of {name} is not an integer"))?;
            values.push((atom, FiveValue::new(number).map_err(|e| e.to_string())?));
        }
        let m = X5Interpretation::from_values(values);
        let v = value5(&m, &phi, mode).map_err(|e| e.to_string())?;
        Ok(json!({
            "formula": phi.to_string(),
            "here": m.here().to_string(),
            "there": m.there().to_string(),
            "value": v.get(),
            "designated": v == FiveValue::TRUE,
        }))
    };
    inner().unwrap_or_else(error)
}

/// Equilibrium models of a theory, with the answers of every engine.
pub fn solve_program(source: &str) -> Value {
    let inner = || -> Result<Value, String> {
        let theory = parse_theory(source).map_err(|e| e.to_string())?;
        let input = match theory.to_program() {
            Ok(program) => Input::Program(program),
            Err(_) => Input::Theory(theory),
        };
        let opts = SolveOptions { max_atoms: MAX_ATOMS, ..SolveOptions::default() };
        let report = solve(&input, &Engine::ALL, &opts).map_err(|e| e.to_string())?;
        let models: Vec<String> = report.models.iter().map(ToString::to_string).collect();
        let engines: Map<String, Value> = report
            .runs
            .iter()
            .map(|(engine, found)| (engine.to_string(), found.iter().map(ToString::to_string).collect()))
            .collect();
        Ok(json!({ "models": models, "engines": engines, "agreement": report.agreement() }))
    };
    inner().unwrap_or_else(error)
}

#[wasm_bindgen(js_name = truthTable)]
pub fn truth_table_js(expr: &str, mode: &str) -> String {
    truth_table(expr, mode).to_string()
}

#[wasm_bindgen(js_name = evaluate)]
pub fn evaluate_js(expr: &str, assignment: &str, mode: &str) -> String {
    evaluate(expr, assignment, mode).to_string()
}

#[wasm_bindgen(js_name = solve)]
pub fn solve_js(source: &str) -> String {
    solve_program(source).to_string()
}
