//! Text and JSON formats for hypergraphs, witnesses, partitions, and
//! reports.
//!
//! The hypergraph format is line based. The first significant line holds
//! the vertex count and hyperedge count; each following significant line
//! lists one hyperedge's vertices, with a bare `-` standing for an empty
//! hyperedge. Blank lines and lines starting with `#` are skipped anywhere.
//! Vertex order inside a line does not matter; parsing sorts and
//! deduplicates.
//!
//! Witnesses travel as JSON objects with keys `n`, `m`, `S1`, and `S2`,
//! the couplings written row major with every entry an exact rational in
//! `p/q` string form.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::invariants::ReportEntry;
use crate::iso::IsoWitness;
use crate::matrix::RationalMatrix;
use crate::partition::{CommonPartition, EquitablePartition, PartitionParameters};
use crate::rational::parse_rational;

/// Parses the line-based hypergraph format.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut lines = text.lines().enumerate().filter(|(_, raw)| {
        let t = raw.trim();
        !t.is_empty() && !t.starts_with('#')
    });
    let (header_idx, header) = lines.next().ok_or_else(|| Error::Parse {
        line: 1,
        reason: "expected a header line with vertex and hyperedge counts".into(),
    })?;
    let header_line = header_idx + 1;
    let counts: Vec<&str> = header.split_whitespace().collect();
    if counts.len() != 2 {
        return Err(Error::Parse {
            line: header_line,
            reason: format!("header needs exactly two counts, found {}", counts.len()),
        });
    }
    let n: usize = parse_count(counts[0], header_line)?;
    let m: usize = parse_count(counts[1], header_line)?;

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (idx, raw) = lines.next().ok_or_else(|| Error::Parse {
            line: header_line,
            reason: format!("expected {m} hyperedge lines, found {}", edges.len()),
        })?;
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed == "-" {
            edges.push(Vec::new());
            continue;
        }
        let mut edge = Vec::new();
        for token in trimmed.split_whitespace() {
            let v: usize = parse_count(token, line)?;
            if v >= n {
                return Err(Error::Parse {
                    line,
                    reason: format!("vertex {v} out of range for {n} vertices"),
                });
            }
            edge.push(v);
        }
        edges.push(edge);
    }
    if let Some((idx, _)) = lines.next() {
        return Err(Error::Parse {
            line: idx + 1,
            reason: format!("trailing content after {m} hyperedge lines"),
        });
    }
    Hypergraph::new(n, edges)
}

/// Writes the line-based hypergraph format, one hyperedge per line.
pub fn emit_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", h.vertex_count(), h.edge_count());
    for edge in h.edges() {
        if edge.is_empty() {
            out.push_str("-\n");
        } else {
            let words: Vec<String> = edge.iter().map(usize::to_string).collect();
            out.push_str(&words.join(" "));
            out.push('\n');
        }
    }
    out
}

fn parse_count(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        reason: format!("expected a nonnegative integer, found {token:?}"),
    })
}

#[derive(Serialize, Deserialize)]
struct WitnessDoc {
    n: usize,
    m: usize,
    #[serde(rename = "S1")]
    s1: Vec<Vec<String>>,
    #[serde(rename = "S2")]
    s2: Vec<Vec<String>>,
}

/// Serializes a witness to the JSON document format.
pub fn emit_witness(witness: &IsoWitness) -> String {
    let doc = WitnessDoc {
        n: witness.vertex_coupling.rows(),
        m: witness.edge_coupling.rows(),
        s1: matrix_strings(&witness.vertex_coupling),
        s2: matrix_strings(&witness.edge_coupling),
    };
    serde_json::to_string_pretty(&doc).expect("witness document serializes")
}

/// Parses a witness from the JSON document format, checking that the stated
/// sizes and the matrix shapes line up.
pub fn parse_witness(text: &str) -> Result<IsoWitness> {
    let doc: WitnessDoc = serde_json::from_str(text).map_err(|err| Error::Parse {
        line: err.line(),
        reason: err.to_string(),
    })?;
    let vertex_coupling = matrix_from_strings(&doc.s1, doc.n, "S1")?;
    let edge_coupling = matrix_from_strings(&doc.s2, doc.m, "S2")?;
    Ok(IsoWitness {
        vertex_coupling,
        edge_coupling,
    })
}

fn matrix_strings(matrix: &RationalMatrix) -> Vec<Vec<String>> {
    (0..matrix.rows())
        .map(|i| (0..matrix.cols()).map(|j| matrix[(i, j)].to_string()).collect())
        .collect()
}

fn matrix_from_strings(rows: &[Vec<String>], size: usize, key: &str) -> Result<RationalMatrix> {
    if rows.len() != size || rows.iter().any(|r| r.len() != size) {
        return Err(Error::Parse {
            line: 0,
            reason: format!("{key} must be a {size}x{size} array"),
        });
    }
    let mut matrix = RationalMatrix::zeros(size, size);
    for (i, row) in rows.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            matrix[(i, j)] = parse_rational(entry)?;
        }
    }
    Ok(matrix)
}

/// Plain-text rendering of a partition: one `V<i>:` line per vertex class,
/// one `X<j>:` line per hyperedge class, then the parameter vectors and the
/// count matrices row by row when given.
pub fn emit_partition(
    partition: &EquitablePartition,
    params: Option<&PartitionParameters>,
) -> String {
    let mut out = String::new();
    for (i, class) in partition.vertex_classes.iter().enumerate() {
        out.push_str(&format!("V{i}: {}\n", join(class)));
    }
    for (j, class) in partition.edge_classes.iter().enumerate() {
        out.push_str(&format!("X{j}: {}\n", join(class)));
    }
    if let Some(p) = params {
        out.push_str(&emit_parameters(p));
    }
    out
}

/// Plain-text rendering of shared parameters: class sizes, then the
/// incidence and membership count matrices with one `D<i>:`/`U<i>:` line
/// per vertex class.
pub fn emit_parameters(params: &PartitionParameters) -> String {
    let mut out = String::new();
    out.push_str(&format!("v: {}\n", join(&params.vertex_class_sizes)));
    out.push_str(&format!("a: {}\n", join(&params.edge_class_sizes)));
    for (i, row) in params.incidence_counts.iter().enumerate() {
        out.push_str(&format!("D{i}: {}\n", join(row)));
    }
    for (i, row) in params.member_counts.iter().enumerate() {
        out.push_str(&format!("U{i}: {}\n", join(row)));
    }
    out
}

/// Plain-text rendering of a common partition: matched class pairs side by
/// side, then the shared parameters.
pub fn emit_common_partition(common: &CommonPartition) -> String {
    let mut out = String::new();
    for (i, (l, r)) in common
        .left_vertex_classes
        .iter()
        .zip(&common.right_vertex_classes)
        .enumerate()
    {
        out.push_str(&format!("V{i}: {} | {}\n", join(l), join(r)));
    }
    for (j, (l, r)) in common
        .left_edge_classes
        .iter()
        .zip(&common.right_edge_classes)
        .enumerate()
    {
        out.push_str(&format!("X{j}: {} | {}\n", join(l), join(r)));
    }
    out.push_str(&emit_parameters(&common.params));
    out
}

#[derive(Serialize)]
struct PartitionDoc<'a> {
    vertex_classes: &'a [Vec<usize>],
    edge_classes: &'a [Vec<usize>],
    #[serde(skip_serializing_if = "Option::is_none")]
    parameters: Option<ParametersDoc<'a>>,
}

#[derive(Serialize)]
struct ParametersDoc<'a> {
    vertex_class_sizes: &'a [usize],
    edge_class_sizes: &'a [usize],
    incidence_counts: &'a [Vec<usize>],
    member_counts: &'a [Vec<usize>],
}

/// JSON rendering of a partition, with the parameters when given.
pub fn emit_partition_json(
    partition: &EquitablePartition,
    params: Option<&PartitionParameters>,
) -> String {
    let doc = PartitionDoc {
        vertex_classes: &partition.vertex_classes,
        edge_classes: &partition.edge_classes,
        parameters: params.map(|p| ParametersDoc {
            vertex_class_sizes: &p.vertex_class_sizes,
            edge_class_sizes: &p.edge_class_sizes,
            incidence_counts: &p.incidence_counts,
            member_counts: &p.member_counts,
        }),
    };
    serde_json::to_string_pretty(&doc).expect("partition document serializes")
}

#[derive(Serialize)]
struct ReportRow<'a> {
    symbol: &'a str,
    name: &'a str,
    value: Option<String>,
    detail: &'a str,
}

/// JSON rendering of an invariant report: one row per parameter, the value
/// a rational or `"infinity"` string, or null where the parameter did not
/// apply.
pub fn emit_report_json(entries: &[ReportEntry]) -> String {
    let rows: Vec<ReportRow> = entries
        .iter()
        .map(|e| ReportRow {
            symbol: e.symbol,
            name: e.name,
            value: e.value.as_ref().map(|v| v.to_string()),
            detail: &e.detail,
        })
        .collect();
    serde_json::to_string_pretty(&rows).expect("report document serializes")
}

fn join(items: &[usize]) -> String {
    let words: Vec<String> = items.iter().map(usize::to_string).collect();
    words.join(" ")
}
