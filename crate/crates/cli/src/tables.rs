use std::fmt::Write as _;

use serde_json::{Map, Value};

use x5_core::semantics::value5;
use x5_core::{parse_formula, Atom, EvalMode, FiveValue, X5Interpretation};

use crate::{Failure, Outcome};

const X5_TABLES: [(&str, &str); 7] = [
    ("&", "p & q"),
    ("|", "p | q"),
    ("->", "p -> q"),
    ("~", "~p"),
    ("not", "not p"),
    ("<->", "p <-> q"),
    ("<=>", "p <=> q"),
];

/// The tables where strong negation differs.
const N5_TABLES: [(&str, &str); 4] = [("->", "p -> q"), ("not", "not p"), ("<->", "p <-> q"), ("<=>", "p <=> q")];

fn model(p: FiveValue, q: FiveValue) -> X5Interpretation {
    X5Interpretation::from_values([(Atom::new("p").unwrap(), p), (Atom::new("q").unwrap(), q)])
}

/// Every table folded through the valuation, rows for the left operand.
pub fn render(mode: EvalMode) -> Result<Outcome, Failure> {
    let tables: &[(&str, &str)] = match mode {
        EvalMode::X5 => &X5_TABLES,
        EvalMode::N5 => &N5_TABLES,
        EvalMode::ClassicalNeg => return Err(Failure::Usage("tables exist for x5 and n5 only".into())),
    };
    let mut text = String::new();
    let mut result = Map::new();
    for (n, &(name, source)) in tables.iter().enumerate() {
        let phi = parse_formula(source)?;
        let unary = !source.contains('q');
        let rows: Vec<Vec<i8>> = if unary {
            vec![FiveValue::ALL.iter().map(|&p| value5(&model(p, p), &phi, mode).map(FiveValue::get)).collect::<Result<_, _>>()?]
        } else {
            FiveValue::ALL
                .iter()
                .map(|&p| FiveValue::ALL.iter().map(|&q| value5(&model(p, q), &phi, mode).map(FiveValue::get)).collect())
                .collect::<Result<_, _>>()?
        };
        if n > 0 {
            text.push('\n');
        }
        let width = name.len().max(3);
        let header: String = FiveValue::ALL.iter().map(|v| format!("{:>3}", v.get())).collect();
        let _ = writeln!(text, "{name:>width$} |{header}");
        let _ = writeln!(text, "{}+{}", "-".repeat(width + 1), "-".repeat(header.len()));
        for (row, label) in rows.iter().zip(FiveValue::ALL) {
            let label = if unary { String::new() } else { label.get().to_string() };
            let cells: String = row.iter().map(|v| format!("{v:>3}")).collect();
            let _ = writeln!(text, "{label:>width$} |{cells}");
        }
        let json_rows = if unary { Value::from(rows[0].clone()) } else { Value::from(rows) };
        result.insert(name.to_string(), json_rows);
    }
    Ok(Outcome::new(text, Value::Object(result)))
}
