//! Randomized checks of the semantic invariants, 1000 cases each over at
//! most three atoms.
mod common;
use common::CASES;

#[test]
fn persistence() {
    common::persistence(CASES).unwrap();
}

#[test]
fn correspondence() {
    common::correspondence(CASES).unwrap();
}

#[test]
fn default_negation() {
    common::default_negation(CASES).unwrap();
}

#[test]
fn derived_operators() {
    common::derived_operators(CASES).unwrap();
}

#[test]
fn strong_iff_characterisation() {
    common::strong_iff_characterisation(CASES).unwrap();
}

#[test]
fn ht_conservativity() {
    common::ht_conservativity(CASES).unwrap();
}

#[test]
fn round_trip() {
    common::round_trip(CASES).unwrap();
}

#[test]
fn substitution_laws() {
    common::substitution_laws(CASES).unwrap();
}

#[test]
fn parsed_rules_are_nested() {
    common::parsed_rules_are_nested(CASES).unwrap();
}

#[test]
fn constructor_invariants() {
    common::constructor_invariants(CASES).unwrap();
}

#[test]
fn total_model_reduct() {
    common::total_model_reduct(CASES).unwrap();
}

#[test]
fn aux_reduct() {
    common::aux_reduct(CASES).unwrap();
}

#[test]
fn ht_reduct() {
    common::ht_reduct(CASES).unwrap();
}

#[test]
fn ferraris_reduct() {
    common::ferraris_reduct(CASES).unwrap();
}

#[test]
fn ferraris_pre_rewrite_at_total() {
    common::ferraris_pre_rewrite_at_total(CASES).unwrap();
}

#[test]
fn reduct_bridge() {
    common::reduct_bridge(CASES).unwrap();
}

#[test]
fn engine_agreement() {
    common::engine_agreement(CASES).unwrap();
}

#[test]
fn thread_determinism() {
    common::thread_determinism(CASES).unwrap();
}

#[test]
fn substitution_congruence() {
    common::substitution_congruence(CASES).unwrap();
}

#[test]
fn scoped_weak_congruence() {
    common::scoped_weak_congruence(CASES).unwrap();
}

#[test]
fn substitution_implies_weak() {
    common::substitution_implies_weak(CASES).unwrap();
}

#[test]
fn context_verification() {
    common::context_verification(CASES).unwrap();
}

#[test]
fn nnf_soundness() {
    common::nnf_soundness(CASES).unwrap();
}

#[test]
fn nnf_nested_substitution() {
    common::nnf_nested_substitution(CASES).unwrap();
}

#[test]
fn regularization() {
    common::regularization(CASES).unwrap();
}
