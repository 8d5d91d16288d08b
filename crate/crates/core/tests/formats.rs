//! Round trips and golden renderings for the text and JSON formats.

mod common;

use common::two_triangles;
use fractiso::error::Error;
use fractiso::generators;
use fractiso::hypergraph::Hypergraph;
use fractiso::invariants::invariant_report;
use fractiso::io::{
    emit_common_partition, emit_hypergraph, emit_partition, emit_partition_json, emit_report_json,
    emit_witness, parse_hypergraph, parse_witness,
};
use fractiso::iso::{self, IsoWitness};
use fractiso::matrix::RationalMatrix;
use fractiso::partition::{coarsest_partition, parameters};
use fractiso::rational::parse_rational;
use proptest::prelude::*;
use serde_json::Value;

#[test]
fn hypergraph_text_round_trips_the_gem() {
    let gem = generators::gem();
    let text = emit_hypergraph(&gem);
    assert_eq!(
        text,
        "5 7\n0 1\n1 2\n2 3\n0 4\n1 4\n2 4\n3 4\n"
    );
    assert_eq!(parse_hypergraph(&text).unwrap(), gem);
}

#[test]
fn parsing_skips_comments_and_normalizes_vertex_order() {
    let text = "\
# a 4-vertex example
4 3

2 0 2
# the empty hyperedge
-
  3 1
";
    let h = parse_hypergraph(text).unwrap();
    assert_eq!(h.vertex_count(), 4);
    assert_eq!(h.edges(), &[vec![0, 2], vec![], vec![1, 3]]);
}

#[test]
fn parse_errors_point_at_the_offending_line() {
    assert!(matches!(
        parse_hypergraph("# nothing here\n"),
        Err(Error::Parse { line: 1, .. })
    ));
    assert!(matches!(
        parse_hypergraph("3 1 9\n0 1\n"),
        Err(Error::Parse { line: 1, .. })
    ));
    match parse_hypergraph("# intro\n3 1\n0 seven\n") {
        Err(Error::Parse { line, reason }) => {
            assert_eq!(line, 3);
            assert!(reason.contains("seven"));
        }
        other => panic!("expected a parse error, got {other:?}"),
    }
    match parse_hypergraph("3 2\n0 1\n\n# comment\n0 3\n") {
        Err(Error::Parse { line, reason }) => {
            assert_eq!(line, 5);
            assert!(reason.contains("out of range"));
        }
        other => panic!("expected a parse error, got {other:?}"),
    }
    assert!(matches!(
        parse_hypergraph("3 2\n0 1\n"),
        Err(Error::Parse { .. })
    ));
    match parse_hypergraph("2 1\n0 1\n1 0\n") {
        Err(Error::Parse { line, reason }) => {
            assert_eq!(line, 3);
            assert!(reason.contains("trailing"));
        }
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn witness_json_round_trips() {
    let g = two_triangles();
    let h = generators::cycle(6).unwrap();
    let witness = iso::iso_by_partition(&g, &h).witness.unwrap();
    let text = emit_witness(&witness);

    let doc: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["n"], 6);
    assert_eq!(doc["m"], 6);
    assert_eq!(doc["S1"][0][0], "1/6");
    assert_eq!(doc["S2"].as_array().unwrap().len(), 6);

    let back = parse_witness(&text).unwrap();
    assert_eq!(back, witness);
}

#[test]
fn witness_parsing_validates_shapes_and_entries() {
    let bad_shape = r#"{"n": 2, "m": 1, "S1": [["1"]], "S2": [["1"]]}"#;
    match parse_witness(bad_shape) {
        Err(Error::Parse { reason, .. }) => assert!(reason.contains("S1")),
        other => panic!("expected a parse error, got {other:?}"),
    }
    let bad_entry = r#"{"n": 1, "m": 0, "S1": [["one"]], "S2": []}"#;
    assert!(parse_witness(bad_entry).is_err());
    assert!(matches!(
        parse_witness("not json at all"),
        Err(Error::Parse { .. })
    ));
}

#[test]
fn witness_entries_survive_wide_rationals() {
    let wide = parse_rational("123456789012345678901234567890/98765432109876543210987654321").unwrap();
    let mut vertex_coupling = RationalMatrix::identity(1);
    vertex_coupling[(0, 0)] = wide.clone();
    let witness = IsoWitness {
        vertex_coupling,
        edge_coupling: RationalMatrix::identity(0),
    };
    let back = parse_witness(&emit_witness(&witness)).unwrap();
    assert_eq!(back.vertex_coupling[(0, 0)], wide);
}

#[test]
fn partition_text_renders_classes_then_parameters() {
    let gem = generators::gem();
    let partition = coarsest_partition(&gem);
    let params = parameters(&gem, &partition).unwrap();
    let text = emit_partition(&partition, Some(&params));
    assert_eq!(
        text,
        "V0: 0 3\n\
         V1: 1 2\n\
         V2: 4\n\
         X0: 0 2\n\
         X1: 3 6\n\
         X2: 1\n\
         X3: 4 5\n\
         v: 2 2 1\n\
         a: 2 2 1 2\n\
         D0: 1 1 0 0\n\
         D1: 1 0 1 1\n\
         D2: 0 2 0 2\n\
         U0: 1 1 0 0\n\
         U1: 1 0 2 1\n\
         U2: 0 1 0 1\n"
    );
    let bare = emit_partition(&partition, None);
    assert!(bare.ends_with("X3: 4 5\n"));
}

#[test]
fn common_partition_text_pairs_the_sides() {
    let g = two_triangles();
    let h = generators::cycle(6).unwrap();
    let verdict = iso::iso_by_partition(&g, &h);
    let text = emit_common_partition(&verdict.common.unwrap());
    assert_eq!(
        text,
        "V0: 0 1 2 3 4 5 | 0 1 2 3 4 5\n\
         X0: 0 1 2 3 4 5 | 0 1 2 3 4 5\n\
         v: 6\n\
         a: 6\n\
         D0: 2\n\
         U0: 2\n"
    );
}

#[test]
fn partition_json_nests_the_parameters() {
    let gem = generators::gem();
    let partition = coarsest_partition(&gem);
    let params = parameters(&gem, &partition).unwrap();
    let doc: Value = serde_json::from_str(&emit_partition_json(&partition, Some(&params))).unwrap();
    assert_eq!(doc["vertex_classes"][0], serde_json::json!([0, 3]));
    assert_eq!(doc["parameters"]["vertex_class_sizes"], serde_json::json!([2, 2, 1]));
    assert_eq!(
        doc["parameters"]["incidence_counts"][2],
        serde_json::json!([0, 2, 0, 2])
    );

    let bare: Value = serde_json::from_str(&emit_partition_json(&partition, None)).unwrap();
    assert!(bare.get("parameters").is_none());
}

#[test]
fn report_json_rows_show_values_infinities_and_gaps() {
    let rows: Value =
        serde_json::from_str(&emit_report_json(&invariant_report(
            &Hypergraph::new(5, vec![]).unwrap(),
            20,
        )))
        .unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 11);
    let by_symbol = |s: &str| rows.iter().find(|r| r["symbol"] == s).unwrap();
    assert_eq!(by_symbol("k_f")["value"], "infinity");
    assert_eq!(by_symbol("chi_f")["value"], "1");
    assert_eq!(by_symbol("mu_f")["value"], Value::Null);
    assert!(by_symbol("mu_f")["detail"].as_str().unwrap().len() > 0);

    let rows: Value = serde_json::from_str(&emit_report_json(&invariant_report(
        &generators::cycle(5).unwrap(),
        20,
    )))
    .unwrap();
    assert_eq!(rows[5]["symbol"], "chi_f");
    assert_eq!(rows[5]["value"], "5/2");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// Emitting and reparsing reproduces any hypergraph exactly.
    #[test]
    fn hypergraph_text_round_trips(h in common::arb_hypergraph(8, 8)) {
        prop_assert_eq!(parse_hypergraph(&emit_hypergraph(&h)).unwrap(), h);
    }
}
