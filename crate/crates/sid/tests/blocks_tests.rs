//! Block classification counts, positivity verdicts, and the pointwise
//! synergy formula on the case studies and fixtures.

mod common;

use sid::blocks::{classify_blocks, positivity, synergy_formula};
use sid::cases::{fixture, generate_case};
use sid::oracle::solve_atoms;
use sid::Error;

const TOL: f64 = 1e-9;

#[test]
fn case_block_counts_at_the_zero_anchor() {
    // (yellow, syn, unique per conforming variable, plain); 64 rows total.
    let expected: [(u32, usize, usize, usize, usize, usize); 4] = [
        (1, 4, 0, 12, 12, 36),
        (2, 4, 4, 8, 8, 40),
        (3, 4, 12, 0, 0, 48),
        (4, 4, 12, 0, 0, 48),
    ];
    for (n, yellow, syn, unique_a, unique_b, plain) in expected {
        let t = generate_case(n).unwrap();
        let names = t.variable_names();
        let report = classify_blocks(&t, "X1", "0000").unwrap();
        assert_eq!(report.yellow.len(), yellow, "case {n} yellow");
        assert_eq!(report.syn_blocks.len(), syn, "case {n} syn");
        assert_eq!(
            report.unique_blocks[names[1]].len(),
            unique_a,
            "case {n} unique[{}]",
            names[1]
        );
        assert_eq!(
            report.unique_blocks[names[2]].len(),
            unique_b,
            "case {n} unique[{}]",
            names[2]
        );
        assert_eq!(report.plain.len(), plain, "case {n} plain");
        let total = report.yellow.len()
            + report.syn_blocks.len()
            + report.unique_blocks.values().map(Vec::len).sum::<usize>()
            + report.plain.len();
        assert_eq!(total, 64, "case {n} covers the support");
    }
}

#[test]
fn every_anchor_value_classifies_the_same_way() {
    // The cases are bit-flip homogeneous, so counts cannot depend on which
    // anchor value is chosen.
    let t = generate_case(2).unwrap();
    let reference = classify_blocks(&t, "X1", "0000").unwrap();
    for value in ["0101", "1111", "1000"] {
        let report = classify_blocks(&t, "X1", value).unwrap();
        assert_eq!(report.yellow.len(), reference.yellow.len());
        assert_eq!(report.syn_blocks.len(), reference.syn_blocks.len());
        assert_eq!(report.plain.len(), reference.plain.len());
        for (variable, outcomes) in &reference.unique_blocks {
            assert_eq!(
                report.unique_blocks[variable].len(),
                outcomes.len(),
                "anchor {value}, unique[{variable}]"
            );
        }
    }
}

#[test]
fn copy_rows_split_into_yellow_and_plain() {
    let t = fixture("copy_triple").unwrap();
    let report = classify_blocks(&t, "X1", "0").unwrap();
    assert_eq!(report.yellow, vec![vec!["0", "0", "0"]]);
    assert_eq!(report.plain, vec![vec!["1", "1", "1"]]);
    assert!(report.syn_blocks.is_empty());
    assert!(report.unique_blocks.values().all(Vec::is_empty));
}

// Table label, expected synergy verdict, pairs with positive unique atoms.
type PositivityCheck = (&'static str, bool, &'static [(&'static str, &'static str)]);

#[test]
fn positivity_verdicts_match_known_atoms() {
    let checks: [PositivityCheck; 8] = [
        ("case1", false, &[("X1", "X2"), ("X1", "X3"), ("X2", "X3")]),
        ("case2", true, &[("X1", "X2"), ("X1", "X4"), ("X2", "X4")]),
        ("case3", true, &[]),
        ("case4", true, &[]),
        ("xor_triple", true, &[]),
        ("copy_triple", false, &[]),
        ("independent_bits", false, &[]),
        ("partial_copy", false, &[("X1", "X2")]),
    ];
    for (label, syn_expected, positive_pairs) in checks {
        let t = match label {
            "case1" => generate_case(1).unwrap(),
            "case2" => generate_case(2).unwrap(),
            "case3" => generate_case(3).unwrap(),
            "case4" => generate_case(4).unwrap(),
            other => fixture(other).unwrap(),
        };
        let names = t.variable_names();
        let mut syn_seen = false;
        for &anchor in &names {
            let verdict = positivity(&t, anchor).unwrap();
            syn_seen |= verdict.syn_positive;
            for (w, &positive) in &verdict.un_positive {
                let other = w.as_str();
                let expected = positive_pairs
                    .iter()
                    .any(|&(a, b)| (a == anchor && b == other) || (a == other && b == anchor));
                assert_eq!(
                    positive, expected,
                    "{label}: anchor {anchor}, pair with {other}"
                );
            }
        }
        assert_eq!(syn_seen, syn_expected, "{label}: synergy verdict");
    }
}

#[test]
fn verdicts_agree_with_computed_atoms() {
    for n in 1..=4 {
        let t = generate_case(n).unwrap();
        let atoms = solve_atoms(&t).unwrap();
        let names = t.variable_names();
        for &anchor in &names {
            let verdict = positivity(&t, anchor).unwrap();
            assert_eq!(verdict.syn_positive, atoms.syn > TOL, "case {n}, {anchor}");
            for (w, &positive) in &verdict.un_positive {
                let un = atoms.un.get(anchor, w).unwrap();
                assert_eq!(positive, un > TOL, "case {n}, un({anchor}, {w})");
            }
        }
    }
}

#[test]
fn formula_reproduces_case_synergies_from_any_anchor() {
    for (n, syn) in [(1, 0.0), (2, 1.0), (3, 2.0), (4, 2.0)] {
        let t = generate_case(n).unwrap();
        for &anchor in &t.variable_names() {
            let value = synergy_formula(&t, anchor).unwrap();
            assert!(
                (value - syn).abs() < TOL,
                "case {n}, anchor {anchor}: {value}"
            );
        }
    }
}

#[test]
fn formula_handles_the_fixtures() {
    let expected = [
        ("xor_triple", 1.0),
        ("copy_triple", 0.0),
        ("independent_bits", 0.0),
        ("partial_copy", 0.0),
    ];
    for (name, syn) in expected {
        let t = fixture(name).unwrap();
        for &anchor in &t.variable_names() {
            let value = synergy_formula(&t, anchor).unwrap();
            assert!(
                (value - syn).abs() < TOL,
                "{name}, anchor {anchor}: {value}"
            );
        }
    }
}

#[test]
fn formula_agrees_with_the_solver_on_random_tables() {
    let mut rng = common::rng(51);
    let mut checked = 0;
    for _ in 0..40 {
        let t = common::random_dyadic_table(&mut rng);
        let atoms = match solve_atoms(&t) {
            Ok(atoms) => atoms,
            Err(Error::SymmetryViolation { .. }) => continue,
            Err(other) => panic!("unexpected error: {other}"),
        };
        let value = synergy_formula(&t, "X1").unwrap();
        assert!(
            (value - atoms.syn).abs() < TOL,
            "formula {value} vs solver {}",
            atoms.syn
        );
        checked += 1;
    }
    assert!(checked > 30, "only {checked} tables were solvable");
}

#[test]
fn block_json_rows_cover_the_support() {
    let t = generate_case(1).unwrap();
    let json = classify_blocks(&t, "X1", "0000").unwrap().to_json();
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(parsed["anchor"]["variable"], "X1");
    assert_eq!(parsed["anchor"]["value"], "0000");
    assert_eq!(parsed["rows"].as_array().unwrap().len(), 64);
    let classes: std::collections::BTreeSet<&str> = parsed["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| row["class"].as_str().unwrap())
        .collect();
    assert!(classes.contains("yellow"));
    assert!(classes.contains("unique:X2"));
    assert!(classes.contains("unique:X3"));
    assert!(classes.contains("plain"));
}

#[test]
fn unknown_anchor_values_are_rejected() {
    let t = generate_case(1).unwrap();
    assert!(matches!(
        classify_blocks(&t, "X1", "2222").unwrap_err(),
        Error::ZeroProbabilityEvidence { .. }
    ));
    assert!(matches!(
        classify_blocks(&t, "X9", "0000").unwrap_err(),
        Error::UnknownVariable { .. }
    ));
}
