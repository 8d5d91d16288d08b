//! Equitable partitions of hypergraphs and their refinement.
//!
//! A joint partition of vertices into classes `V_1..V_s` and hyperedges into
//! classes `X_1..X_r` is equitable when every vertex of `V_i` lies in the
//! same number `D[i][j]` of hyperedges of class `X_j`, and every hyperedge of
//! `X_j` contains the same number `U[i][j]` of vertices of class `V_i`.
//! Counting vertex-hyperedge incidences between `V_i` and `X_j` both ways
//! gives the identity `v_i * D[i][j] = a_j * U[i][j]`.
//!
//! [`coarsest_partition`] computes the refinement fixed point starting from
//! the trivial partition: per round, vertices are split by their multiset of
//! incident hyperedge classes and hyperedges by their multiset of member
//! vertex classes, both sides simultaneously, until nothing changes. Classes
//! never merge, so at most `n + m` rounds occur. Class numbering follows the
//! lexicographic order of the interned signatures, making the output
//! deterministic and independent of input labeling quirks.
//!
//! Two hypergraphs are fractionally isomorphic exactly when the refinement
//! fixed point of their disjoint union splits every class evenly across the
//! two sides; [`common_partition`] implements that test and returns the
//! shared parameters.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::generators::disjoint_union;
use crate::hypergraph::Hypergraph;

/// A joint partition of the vertex set and the hyperedge list. Classes hold
/// sorted indices; every vertex and every hyperedge index appears in exactly
/// one class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquitablePartition {
    pub vertex_classes: Vec<Vec<usize>>,
    pub edge_classes: Vec<Vec<usize>>,
}

/// The numeric parameters of an equitable partition with `s` vertex classes
/// and `r` hyperedge classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionParameters {
    /// `v[i]`: size of vertex class `i`.
    pub vertex_class_sizes: Vec<usize>,
    /// `a[j]`: size of hyperedge class `j`.
    pub edge_class_sizes: Vec<usize>,
    /// `D[i][j]`: hyperedges of class `j` through each vertex of class `i`.
    pub incidence_counts: Vec<Vec<usize>>,
    /// `U[i][j]`: vertices of class `i` inside each hyperedge of class `j`.
    pub member_counts: Vec<Vec<usize>>,
}

/// The coarsest equitable partition, as computed by refinement from the
/// trivial partition. With no hyperedges the result is a single vertex class
/// and no hyperedge classes.
pub fn coarsest_partition(h: &Hypergraph) -> EquitablePartition {
    let vertex_colors = vec![0; h.vertex_count()];
    let edge_colors = vec![0; h.edge_count()];
    let (vc, ec) = refine_colors(h, vertex_colors, edge_colors);
    to_partition(&vc, &ec)
}

/// Runs refinement rounds starting from an arbitrary joint partition. The
/// result refines the input; refining an already equitable partition returns
/// it unchanged (up to class numbering).
pub fn refine_partition(h: &Hypergraph, start: &EquitablePartition) -> Result<EquitablePartition> {
    let vc = colors_from_classes(&start.vertex_classes, h.vertex_count(), "vertex")?;
    let ec = colors_from_classes(&start.edge_classes, h.edge_count(), "hyperedge")?;
    let (vc, ec) = refine_colors(h, vc, ec);
    Ok(to_partition(&vc, &ec))
}

/// Extracts the parameters `(v, a, D, U)` of `partition`, verifying along the
/// way that it really is equitable: any two members of one class that
/// disagree on a count make it inequitable and produce an error.
pub fn parameters(h: &Hypergraph, partition: &EquitablePartition) -> Result<PartitionParameters> {
    let vc = colors_from_classes(&partition.vertex_classes, h.vertex_count(), "vertex")?;
    let ec = colors_from_classes(&partition.edge_classes, h.edge_count(), "hyperedge")?;
    let s = partition.vertex_classes.len();
    let r = partition.edge_classes.len();

    let mut incidence_counts = vec![vec![0; r]; s];
    let incident = h.incident_edge_lists();
    for (i, class) in partition.vertex_classes.iter().enumerate() {
        for (pos, &x) in class.iter().enumerate() {
            let mut row = vec![0; r];
            for &e in &incident[x] {
                row[ec[e]] += 1;
            }
            if pos == 0 {
                incidence_counts[i] = row;
            } else if incidence_counts[i] != row {
                return Err(Error::NotEquitable(format!(
                    "vertices {} and {} of class {i} meet hyperedge classes differently",
                    class[0], x
                )));
            }
        }
    }

    let mut member_counts = vec![vec![0; r]; s];
    for (j, class) in partition.edge_classes.iter().enumerate() {
        for (pos, &e) in class.iter().enumerate() {
            let mut col = vec![0; s];
            for &x in &h.edges()[e] {
                col[vc[x]] += 1;
            }
            if pos == 0 {
                for i in 0..s {
                    member_counts[i][j] = col[i];
                }
            } else if (0..s).any(|i| member_counts[i][j] != col[i]) {
                return Err(Error::NotEquitable(format!(
                    "hyperedges {} and {} of class {j} contain vertex classes differently",
                    class[0], e
                )));
            }
        }
    }

    let vertex_class_sizes: Vec<usize> = partition.vertex_classes.iter().map(Vec::len).collect();
    let edge_class_sizes: Vec<usize> = partition.edge_classes.iter().map(Vec::len).collect();
    // Double counting incidences between V_i and X_j.
    debug_assert!((0..s).all(|i| (0..r).all(|j| {
        vertex_class_sizes[i] * incidence_counts[i][j] == edge_class_sizes[j] * member_counts[i][j]
    })));

    Ok(PartitionParameters {
        vertex_class_sizes,
        edge_class_sizes,
        incidence_counts,
        member_counts,
    })
}

/// Whether `partition` is equitable for `h`.
pub fn is_equitable(h: &Hypergraph, partition: &EquitablePartition) -> bool {
    parameters(h, partition).is_ok()
}

/// A common coarsest equitable partition of two hypergraphs, when one
/// exists: the two sides share class-by-class sizes and parameters. Class
/// `i` of `left_vertex_classes` corresponds to class `i` of
/// `right_vertex_classes`, and likewise for hyperedge classes.
#[derive(Clone, Debug)]
pub struct CommonPartition {
    pub params: PartitionParameters,
    pub left_vertex_classes: Vec<Vec<usize>>,
    pub right_vertex_classes: Vec<Vec<usize>>,
    pub left_edge_classes: Vec<Vec<usize>>,
    pub right_edge_classes: Vec<Vec<usize>>,
}

/// Refines the disjoint union of `g` and `h` with no initial distinction
/// between the sides. The fixed point's classes all split evenly between the
/// sides exactly when the two hypergraphs admit a common equitable partition;
/// in that case the matched classes and shared parameters come back.
pub fn common_partition(g: &Hypergraph, h: &Hypergraph) -> Option<CommonPartition> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let union = disjoint_union(g, h);
    let vc = vec![0; union.vertex_count()];
    let ec = vec![0; union.edge_count()];
    let (vc, ec) = refine_colors(&union, vc, ec);
    let union_partition = to_partition(&vc, &ec);

    let mut left_vertex_classes = Vec::new();
    let mut right_vertex_classes = Vec::new();
    for class in &union_partition.vertex_classes {
        let (l, r) = split_class(class, g.vertex_count());
        if l.len() != r.len() {
            return None;
        }
        left_vertex_classes.push(l);
        right_vertex_classes.push(r);
    }
    let mut left_edge_classes = Vec::new();
    let mut right_edge_classes = Vec::new();
    for class in &union_partition.edge_classes {
        let (l, r) = split_class(class, g.edge_count());
        if l.len() != r.len() {
            return None;
        }
        left_edge_classes.push(l);
        right_edge_classes.push(r);
    }

    let left = EquitablePartition {
        vertex_classes: left_vertex_classes,
        edge_classes: left_edge_classes,
    };
    let right = EquitablePartition {
        vertex_classes: right_vertex_classes,
        edge_classes: right_edge_classes,
    };
    let params = parameters(g, &left).expect("restriction of a stable partition is equitable");
    debug_assert_eq!(
        params,
        parameters(h, &right).expect("restriction of a stable partition is equitable")
    );
    Some(CommonPartition {
        params,
        left_vertex_classes: left.vertex_classes,
        right_vertex_classes: right.vertex_classes,
        left_edge_classes: left.edge_classes,
        right_edge_classes: right.edge_classes,
    })
}

/// Per-vertex signatures of iterated degree refinement on a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IteratedDegrees {
    /// `rounds[k][v]` is vertex `v`'s interned signature id after `k`
    /// refinement rounds. Round 0 groups by plain degree; each later round
    /// appends the multiset of the neighbors' previous signatures. Ids are
    /// ranks of the sorted signatures, so they are canonical for this graph
    /// but not comparable across graphs.
    pub rounds: Vec<Vec<usize>>,
    /// First round whose classes already matched the round before, when the
    /// run was allowed to reach stability.
    pub stabilized_after: Option<usize>,
}

/// Iterated degree refinement. Runs until two consecutive rounds induce the
/// same classes, or for exactly `round_count` extra rounds when given.
pub fn iterated_degree_sequence(
    graph: &Hypergraph,
    round_count: Option<usize>,
) -> Result<IteratedDegrees> {
    let adj = graph.adjacency_lists()?;
    let n = graph.vertex_count();
    let degrees: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut colors = intern(degrees.iter().map(|&d| (d, Vec::<usize>::new())).collect());
    let mut rounds = vec![colors.clone()];
    let mut stabilized_after = None;

    let max_rounds = round_count.unwrap_or(n + 1);
    for k in 1..=max_rounds {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut neighbor_colors: Vec<usize> = adj[v].iter().map(|&w| colors[w]).collect();
                neighbor_colors.sort_unstable();
                (colors[v], neighbor_colors)
            })
            .collect();
        let next = intern(sigs);
        let stable = next == relabel(&colors);
        colors = next;
        rounds.push(colors.clone());
        if stable && round_count.is_none() {
            stabilized_after = Some(k);
            break;
        }
    }
    Ok(IteratedDegrees {
        rounds,
        stabilized_after,
    })
}

/// Whether two graphs have equal iterated degree sequences at every level:
/// the refinement of their disjoint union stabilizes with every class split
/// evenly between the sides.
pub fn same_ultimate_degrees(g: &Hypergraph, h: &Hypergraph) -> Result<bool> {
    if !g.is_graph() || !h.is_graph() {
        return Err(Error::NotAGraph);
    }
    if g.vertex_count() != h.vertex_count() {
        return Ok(false);
    }
    let union = disjoint_union(g, h);
    let ids = iterated_degree_sequence(&union, None)?;
    let last = ids.rounds.last().expect("at least the degree round exists");
    let mut balance: BTreeMap<usize, i64> = BTreeMap::new();
    for (v, &c) in last.iter().enumerate() {
        *balance.entry(c).or_insert(0) += if v < g.vertex_count() { 1 } else { -1 };
    }
    Ok(balance.values().all(|&b| b == 0))
}

fn refine_colors(
    h: &Hypergraph,
    mut vertex_colors: Vec<usize>,
    mut edge_colors: Vec<usize>,
) -> (Vec<usize>, Vec<usize>) {
    let incident = h.incident_edge_lists();
    loop {
        // Both sides look at the colors from the round before.
        let edge_sigs: Vec<(usize, Vec<usize>)> = h
            .edges()
            .iter()
            .enumerate()
            .map(|(e, edge)| {
                let mut member_colors: Vec<usize> =
                    edge.iter().map(|&x| vertex_colors[x]).collect();
                member_colors.sort_unstable();
                (edge_colors[e], member_colors)
            })
            .collect();
        let vertex_sigs: Vec<(usize, Vec<usize>)> = (0..h.vertex_count())
            .map(|x| {
                let mut touching: Vec<usize> = incident[x].iter().map(|&e| edge_colors[e]).collect();
                touching.sort_unstable();
                (vertex_colors[x], touching)
            })
            .collect();
        let new_vertex = intern(vertex_sigs);
        let new_edge = intern(edge_sigs);
        let stable = new_vertex == relabel(&vertex_colors) && new_edge == relabel(&edge_colors);
        vertex_colors = new_vertex;
        edge_colors = new_edge;
        if stable {
            return (vertex_colors, edge_colors);
        }
    }
}

/// Maps each signature to its rank in sorted order, so equal signatures get
/// equal ids and the numbering is canonical.
fn intern<T: Ord + Clone>(sigs: Vec<T>) -> Vec<usize> {
    let mut distinct: Vec<T> = sigs.clone();
    distinct.sort();
    distinct.dedup();
    sigs.iter()
        .map(|s| distinct.binary_search(s).expect("present by construction"))
        .collect()
}

/// Canonical renumbering of a coloring, for change detection.
fn relabel(colors: &[usize]) -> Vec<usize> {
    intern(colors.to_vec())
}

fn to_partition(vertex_colors: &[usize], edge_colors: &[usize]) -> EquitablePartition {
    EquitablePartition {
        vertex_classes: classes_of(vertex_colors),
        edge_classes: classes_of(edge_colors),
    }
}

fn classes_of(colors: &[usize]) -> Vec<Vec<usize>> {
    let count = colors.iter().copied().max().map_or(0, |c| c + 1);
    let mut classes = vec![Vec::new(); count];
    for (x, &c) in colors.iter().enumerate() {
        classes[c].push(x);
    }
    classes
}

fn colors_from_classes(classes: &[Vec<usize>], total: usize, kind: &str) -> Result<Vec<usize>> {
    let mut colors = vec![usize::MAX; total];
    let mut seen = 0;
    for (c, class) in classes.iter().enumerate() {
        for &x in class {
            if x >= total || colors[x] != usize::MAX {
                return Err(Error::InvalidParameter(format!(
                    "{kind} classes do not form a partition of 0..{total}"
                )));
            }
            colors[x] = c;
            seen += 1;
        }
    }
    if seen != total {
        return Err(Error::InvalidParameter(format!(
            "{kind} classes cover {seen} of {total} elements"
        )));
    }
    Ok(colors)
}

fn split_class(class: &[usize], boundary: usize) -> (Vec<usize>, Vec<usize>) {
    let mut left = Vec::new();
    let mut right = Vec::new();
    for &x in class {
        if x < boundary {
            left.push(x);
        } else {
            right.push(x - boundary);
        }
    }
    (left, right)
}
