use serde_json::{json, Value};

use x5_web::{evaluate, solve_program, truth_table};

const ORDER: [i64; 5] = [-2, -1, 0, 1, 2];

fn arrow(a: i64, b: i64, strong: bool) -> i64 {
    if strong && a == 1 && b == -2 {
        -1
    } else if a <= b.max(0) {
        2
    } else {
        b
    }
}

fn cells(table: &Value) -> Vec<Vec<i64>> {
    serde_json::from_value(table["cells"].clone()).unwrap()
}

#[test]
fn implication_tables_follow_the_arrow() {
    for (mode, strong) in [("x5", false), ("n5", true)] {
        let table = truth_table("p -> q", mode);
        let expected: Vec<Vec<i64>> =
            ORDER.iter().map(|&a| ORDER.iter().map(|&b| arrow(a, b, strong)).collect()).collect();
        assert_eq!(cells(&table), expected, "{mode}");
        assert_eq!(table["atoms"], json!(["p", "q"]));
        assert_eq!(table["values"], json!(ORDER));
    }
}

#[test]
fn unary_and_constant_tables() {
    let negation = truth_table("~p", "x5");
    assert_eq!(cells(&negation), vec![vec![2], vec![1], vec![0], vec![-1], vec![-2]]);
    assert_eq!(cells(&truth_table("top", "x5")), vec![vec![2]]);
}

#[test]
fn tables_refuse_three_atoms() {
    assert!(truth_table("p & q & r", "x5")["error"].is_string());
    assert!(truth_table("p", "classical")["error"].is_string());
}

#[test]
fn evaluation_reads_per_atom_values() {
    let result = evaluate("p -> q", r#"{"p": 1, "q": -2}"#, "n5");
    assert_eq!(result["value"], -1);
    assert_eq!(result["designated"], false);
    let result = evaluate("p | not p", r#"{"p": 1}"#, "x5");
    assert_eq!(result["value"], 1);
    assert_eq!(result["here"], "{}");
    assert_eq!(result["there"], "{p}");
    assert_eq!(evaluate("not not p -> p", "", "x5")["designated"], true);
}

#[test]
fn evaluation_errors_are_objects() {
    assert!(evaluate("p ->", "{}", "x5")["error"].is_string());
    assert!(evaluate("p", r#"{"p": 3}"#, "x5")["error"].is_string());
    assert!(evaluate("p", r#"{"p": "high"}"#, "x5")["error"].is_string());
}

#[test]
fn solving_cross_checks_engines() {
    let result = solve_program("bird. penguin -> ~flies. bird & not ~flies -> flies.");
    assert_eq!(result["agreement"], true);
    assert_eq!(result["models"], json!(["{bird, flies}"]));
    assert_eq!(result["engines"].as_object().unwrap().len(), 3);

    let excluded_middle = solve_program("p | not p.");
    assert_eq!(excluded_middle["models"], json!(["{}", "{p}"]));
}

#[test]
fn solving_limits_the_signature() {
    let source: String = (0..9).map(|i| format!("a{i} | not a{i}.\n")).collect();
    assert!(solve_program(&source)["error"].is_string());
}
