//! The example catalog end to end: every entry builds, serializes
//! canonically, round-trips through JSON byte for byte, passes its kind's
//! verification op, and is sensitive to single-entry corruption.

use hopfkit::examples::{build_example, catalog};
use hopfkit::format::{AlgebraFile, FORMAT_VERSION};
use hopfkit::mutate::{entry_count, mutate_entry, mutation_battery};
use hopfkit::{Field, HopfError};

#[test]
fn the_catalog_lists_at_least_eight_uniquely_named_entries() {
    let entries = catalog();
    assert!(entries.len() >= 8, "catalog has {} entries", entries.len());
    let mut names: Vec<&str> = entries.iter().map(|e| e.name).collect();
    names.sort_unstable();
    names.dedup();
    assert_eq!(names.len(), entries.len(), "duplicate catalog names");
    for kind in ["quasi-hopf", "weak-hopf", "braided-hopf", "module-algebra", "yd-module", "bicomodule-algebra"] {
        assert!(
            entries.iter().any(|e| e.kind == kind),
            "no catalog entry of kind {kind}"
        );
    }
}

#[test]
fn every_catalog_entry_builds_and_passes_its_verification() {
    for entry in catalog() {
        let file = build_example(entry.name, Field::Rational)
            .unwrap_or_else(|e| panic!("{} failed to build: {e}", entry.name));
        assert_eq!(file.kind, entry.kind, "{}: kind mismatch", entry.name);
        assert_eq!(file.dim, entry.dim, "{}: dimension mismatch", entry.name);
        assert_eq!(file.format_version, FORMAT_VERSION);
        let report = file
            .verify()
            .unwrap_or_else(|e| panic!("{} failed to parse back: {e}", entry.name));
        assert!(
            report.overall,
            "{}: failing identities {:?}",
            entry.name,
            report.failed_ids()
        );
    }
}

#[test]
fn emitted_files_round_trip_through_json_byte_for_byte() {
    for entry in catalog() {
        let file = build_example(entry.name, Field::Rational).unwrap();
        let json = file.to_json();
        let parsed = AlgebraFile::from_json(&json)
            .unwrap_or_else(|e| panic!("{} does not re-parse: {e}", entry.name));
        assert_eq!(parsed, file, "{}: value changed across round trip", entry.name);
        assert_eq!(parsed.to_json(), json, "{}: bytes changed across round trip", entry.name);
    }
}

#[test]
fn catalog_entries_build_over_odd_prime_fields() {
    let field = Field::prime(5).unwrap();
    for entry in catalog() {
        let file = build_example(entry.name, field)
            .unwrap_or_else(|e| panic!("{} failed over GF(5): {e}", entry.name));
        let report = file.verify().unwrap();
        assert!(
            report.overall,
            "{} over GF(5): failing identities {:?}",
            entry.name,
            report.failed_ids()
        );
    }
}

#[test]
fn characteristic_two_is_rejected_where_the_construction_divides_by_two() {
    let gf2 = Field::prime(2).unwrap();
    assert!(matches!(build_example("sweedler", gf2), Err(HopfError::Invalid(_))));
    assert!(matches!(build_example("super-line", gf2), Err(HopfError::Invalid(_))));
    // Group and groupoid algebras are insensitive to the characteristic.
    let file = build_example("groupoid-pair-2", gf2).unwrap();
    assert!(file.verify().unwrap().overall);
    assert!(build_example("group-z2", gf2).unwrap().verify().unwrap().overall);
}

#[test]
fn unknown_example_names_are_rejected() {
    assert!(matches!(
        build_example("no-such-example", Field::Rational),
        Err(HopfError::Invalid(_))
    ));
}

#[test]
fn single_entry_mutations_are_caught_by_verification() {
    for name in ["group-z2", "super-line", "self-group-z2", "yd-line-over-kz2"] {
        let file = build_example(name, Field::Rational).unwrap();
        let battery = mutation_battery(&file, 100).unwrap();
        let caught = battery
            .iter()
            .filter(|m| match m.verify() {
                Ok(report) => !report.overall,
                Err(_) => true,
            })
            .count();
        assert!(caught >= 95, "{name}: only {caught}/100 mutations caught");
    }
}

#[test]
fn mutation_is_deterministic_and_leaves_base_and_v_untouched() {
    let file = build_example("smash-line-kz2", Field::Rational).unwrap();
    let a = mutation_battery(&file, 100).unwrap();
    let b = mutation_battery(&file, 100).unwrap();
    let render = |batch: &[AlgebraFile]| batch.iter().map(|f| f.to_json()).collect::<Vec<_>>();
    assert_eq!(render(&a), render(&b));
    for mutant in &a {
        assert_eq!(mutant.base, file.base, "mutation leaked into the base");
        assert_eq!(mutant.tensors.v, file.tensors.v, "mutation leaked into v");
        assert_ne!(mutant.tensors, file.tensors, "mutation changed nothing");
    }
}

#[test]
fn mutation_positions_cover_every_tensor_entry_in_order() {
    let file = build_example("group-z2", Field::Rational).unwrap();
    let total = entry_count(&file);
    // mul 8 + unit 2 + comul 8 + counit 2 + phi 8 + phi_inv 8 + alpha 2 +
    // beta 2 + s 4 + s_inv 4 = 48.
    assert_eq!(total, 48);
    assert!(mutate_entry(&file, total).is_err());
    let first = mutate_entry(&file, 0).unwrap();
    assert_ne!(first.tensors.mul, file.tensors.mul);
    let last = mutate_entry(&file, total - 1).unwrap();
    assert_ne!(last.tensors.s_inv, file.tensors.s_inv);
}

#[test]
fn the_dimension_cap_rejects_oversized_files_before_parsing_tensors() {
    let labels: Vec<String> = (0..65).map(|i| format!("\"b{i}\"")).collect();
    let json = format!(
        r#"{{
  "format_version": 1,
  "field": {{ "kind": "rational" }},
  "kind": "quasi-hopf",
  "dim": 65,
  "labels": [{}],
  "tensors": {{}}
}}"#,
        labels.join(", ")
    );
    match AlgebraFile::from_json(&json) {
        Err(HopfError::DimensionCap { dim, cap }) => {
            assert_eq!(dim, 65);
            assert_eq!(cap, 64);
        }
        other => panic!("expected DimensionCap, got {other:?}"),
    }
}

#[test]
fn parse_errors_carry_location_information() {
    let err = AlgebraFile::from_json("{\n  \"format_version\": 1,").unwrap_err();
    let msg = err.to_string();
    assert!(msg.contains("line"), "no location in {msg:?}");
}
