//! Fractional invariants, computed exactly as rational linear programs.
//!
//! Everything here reduces to two dual programs over a hypergraph's
//! incidence structure. The covering number is the minimum total weight on
//! hyperedges so that every vertex gathers weight at least one; the packing
//! number is the maximum total weight on vertices so that no hyperedge
//! carries more than one. Applying the pair to derived hypergraphs (the
//! dual, neighborhood hypergraphs, independent set and clique hypergraphs)
//! produces the familiar fractional graph parameters: matching and
//! transversal numbers, independence and chromatic numbers, clique cover
//! and domination numbers.
//!
//! A vertex lying in no hyperedge makes the covering program infeasible and
//! the packing program unbounded; both cases surface as
//! [`InvariantValue::Infinite`], detected before any arithmetic.

use std::fmt;

use num_traits::Zero;

use crate::derived::{
    clique_hypergraph, closed_neighborhood_hypergraph, independent_set_hypergraph,
    open_neighborhood_hypergraph,
};
use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::lp::{solve, Constraint, LpOutcome, LpProblem, Sense};
use crate::partition::coarsest_partition;
use crate::rational::{ratio, Rational};

/// The exact value of a fractional parameter. `Infinite` means the defining
/// program is infeasible or unbounded, which happens exactly when some
/// vertex lies in no hyperedge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantValue {
    Finite(Rational),
    Infinite,
}

impl InvariantValue {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            InvariantValue::Finite(v) => Some(v),
            InvariantValue::Infinite => None,
        }
    }
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantValue::Finite(v) => write!(f, "{v}"),
            InvariantValue::Infinite => write!(f, "infinity"),
        }
    }
}

/// Minimum total hyperedge weight covering every vertex at least once.
pub fn covering_f(h: &Hypergraph) -> InvariantValue {
    if h.vertex_count() == 0 {
        return InvariantValue::Finite(Rational::zero());
    }
    if h.has_exposed_vertex() {
        return InvariantValue::Infinite;
    }
    let m = h.edge_count();
    let incident = h.incident_edge_lists();
    let constraints: Vec<Constraint> = incident
        .iter()
        .map(|edges| {
            let mut coeffs = vec![Rational::zero(); m];
            for &e in edges {
                coeffs[e] = ratio(1, 1);
            }
            Constraint::greater_eq(coeffs, ratio(1, 1))
        })
        .collect();
    let problem = LpProblem::new(Sense::Minimize, vec![ratio(1, 1); m], constraints)
        .expect("covering program is well formed");
    match solve(&problem) {
        LpOutcome::Optimal { value, .. } => InvariantValue::Finite(value),
        LpOutcome::Infeasible | LpOutcome::Unbounded => {
            unreachable!("covering program with no exposed vertex is feasible and bounded")
        }
    }
}

/// Maximum total vertex weight putting at most one on every hyperedge.
pub fn packing_f(h: &Hypergraph) -> InvariantValue {
    if h.vertex_count() == 0 {
        return InvariantValue::Finite(Rational::zero());
    }
    if h.has_exposed_vertex() {
        return InvariantValue::Infinite;
    }
    let n = h.vertex_count();
    let constraints: Vec<Constraint> = h
        .edges()
        .iter()
        .map(|edge| {
            let mut coeffs = vec![Rational::zero(); n];
            for &v in edge {
                coeffs[v] = ratio(1, 1);
            }
            Constraint::less_eq(coeffs, ratio(1, 1))
        })
        .collect();
    let problem = LpProblem::new(Sense::Maximize, vec![ratio(1, 1); n], constraints)
        .expect("packing program is well formed");
    match solve(&problem) {
        LpOutcome::Optimal { value, .. } => InvariantValue::Finite(value),
        LpOutcome::Infeasible | LpOutcome::Unbounded => {
            unreachable!("packing program with no exposed vertex is feasible and bounded")
        }
    }
}

/// Fractional matching number: the packing number of the dual hypergraph.
/// Needs at least one hyperedge.
pub fn matching_f(h: &Hypergraph) -> Result<InvariantValue> {
    Ok(packing_f(&h.dual()?))
}

/// Fractional transversal number: the covering number of the dual
/// hypergraph. Needs at least one hyperedge.
pub fn transversal_f(h: &Hypergraph) -> Result<InvariantValue> {
    Ok(covering_f(&h.dual()?))
}

/// Fractional independence number of a graph: its own packing number.
pub fn independence_f(graph: &Hypergraph) -> Result<InvariantValue> {
    graph.adjacency_lists()?;
    Ok(packing_f(graph))
}

/// Fractional chromatic number of a graph: the covering number of its
/// hypergraph of maximal independent sets.
pub fn chromatic_f(graph: &Hypergraph, limit: usize) -> Result<InvariantValue> {
    Ok(covering_f(&independent_set_hypergraph(graph, limit)?))
}

/// Fractional clique number of a graph: the packing number of its
/// hypergraph of maximal independent sets. By linear programming duality it
/// always equals the fractional chromatic number.
pub fn clique_f(graph: &Hypergraph, limit: usize) -> Result<InvariantValue> {
    Ok(packing_f(&independent_set_hypergraph(graph, limit)?))
}

/// Fractional clique-constrained independence number: the packing number of
/// the hypergraph of maximal cliques.
pub fn clique_independence_f(graph: &Hypergraph, limit: usize) -> Result<InvariantValue> {
    Ok(packing_f(&clique_hypergraph(graph, limit)?))
}

/// Fractional clique cover number: the covering number of the hypergraph of
/// maximal cliques.
pub fn clique_cover_f(graph: &Hypergraph, limit: usize) -> Result<InvariantValue> {
    Ok(covering_f(&clique_hypergraph(graph, limit)?))
}

/// Fractional domination number: the covering number of the closed
/// neighborhood hypergraph. Always finite, since every vertex lies in its
/// own closed neighborhood.
pub fn domination_f(graph: &Hypergraph) -> Result<InvariantValue> {
    Ok(covering_f(&closed_neighborhood_hypergraph(graph)?))
}

/// Fractional total domination number: the covering number of the open
/// neighborhood hypergraph. Infinite exactly when the graph has an isolated
/// vertex.
pub fn total_domination_f(graph: &Hypergraph) -> Result<InvariantValue> {
    Ok(covering_f(&open_neighborhood_hypergraph(graph)?))
}

/// Whether a graph admits a fractional matching saturating every vertex,
/// decided by comparing the fractional matching number with half the vertex
/// count. The empty graph qualifies vacuously.
pub fn has_perfect_fractional_matching(graph: &Hypergraph) -> Result<bool> {
    graph.adjacency_lists()?;
    if graph.vertex_count() == 0 {
        return Ok(true);
    }
    if graph.edge_count() == 0 {
        return Ok(false);
    }
    let half = ratio(graph.vertex_count() as i64, 2);
    match matching_f(graph)? {
        InvariantValue::Finite(mu) => Ok(mu == half),
        InvariantValue::Infinite => Ok(false),
    }
}

/// Builds a saturating fractional matching from the coarsest equitable
/// partition when every vertex class induces a nonempty regular subgraph:
/// each hyperedge internal to class `i` gets weight `1/r_i`, where `r_i` is
/// the induced degree, and cross-class hyperedges get zero. Returns `None`
/// when some class induces no hyperedge at all, in which case this
/// construction does not apply (the graph may still have a saturating
/// matching by other means).
pub fn perfect_matching_from_partition(graph: &Hypergraph) -> Result<Option<Vec<Rational>>> {
    graph.adjacency_lists()?;
    let partition = coarsest_partition(graph);
    let mut class_of = vec![0; graph.vertex_count()];
    for (i, class) in partition.vertex_classes.iter().enumerate() {
        for &v in class {
            class_of[v] = i;
        }
    }

    // An edge is internal when all its vertices share one class.
    let internal_class: Vec<Option<usize>> = graph
        .edges()
        .iter()
        .map(|edge| {
            let mut members = edge.iter().map(|&v| class_of[v]);
            let first = members.next()?;
            members.all(|c| c == first).then_some(first)
        })
        .collect();

    let mut induced_degree = vec![0usize; partition.vertex_classes.len()];
    let mut seen_class = vec![false; partition.vertex_classes.len()];
    let incident = graph.incident_edge_lists();
    for (v, edges) in incident.iter().enumerate() {
        let i = class_of[v];
        let d = edges
            .iter()
            .filter(|&&e| internal_class[e] == Some(i))
            .count();
        if !seen_class[i] {
            induced_degree[i] = d;
            seen_class[i] = true;
        } else {
            debug_assert_eq!(induced_degree[i], d, "equitable classes induce regular subgraphs");
        }
    }

    if induced_degree.iter().any(|&r| r == 0) {
        return Ok(None);
    }
    let weights: Vec<Rational> = internal_class
        .iter()
        .map(|&c| match c {
            Some(i) => ratio(1, induced_degree[i] as i64),
            None => Rational::zero(),
        })
        .collect();
    debug_assert!(incident.iter().all(|edges| {
        edges.iter().map(|&e| &weights[e]).sum::<Rational>() == ratio(1, 1)
    }));
    Ok(Some(weights))
}

/// One row of an invariant report: the parameter's conventional name, how it
/// was computed, and its value when the computation applied. `value` is
/// absent when the parameter does not apply (for instance a graph parameter
/// of a proper hypergraph), with the reason in `detail`.
#[derive(Clone, Debug)]
pub struct ReportEntry {
    pub name: &'static str,
    pub symbol: &'static str,
    pub value: Option<InvariantValue>,
    pub detail: String,
}

/// All parameters of one hypergraph, each computed where it applies.
pub fn invariant_report(h: &Hypergraph, limit: usize) -> Vec<ReportEntry> {
    let mut entries = vec![
        ReportEntry {
            name: "fractional covering number",
            symbol: "k_f",
            value: Some(covering_f(h)),
            detail: "minimum hyperedge weight covering every vertex".into(),
        },
        ReportEntry {
            name: "fractional packing number",
            symbol: "p_f",
            value: Some(packing_f(h)),
            detail: "maximum vertex weight bounded by one on every hyperedge".into(),
        },
    ];
    let mut push = |name, symbol, result: Result<InvariantValue>, detail: &str| {
        let entry = match result {
            Ok(value) => ReportEntry {
                name,
                symbol,
                value: Some(value),
                detail: detail.into(),
            },
            Err(err) => ReportEntry {
                name,
                symbol,
                value: None,
                detail: err.to_string(),
            },
        };
        entries.push(entry);
    };
    push(
        "fractional matching number",
        "mu_f",
        matching_f(h),
        "packing number of the dual hypergraph",
    );
    push(
        "fractional transversal number",
        "tau_f",
        transversal_f(h),
        "covering number of the dual hypergraph",
    );
    push(
        "fractional independence number",
        "alpha_f",
        independence_f(h),
        "packing number of the graph itself",
    );
    push(
        "fractional chromatic number",
        "chi_f",
        chromatic_f(h, limit),
        "covering number over maximal independent sets",
    );
    push(
        "fractional clique number",
        "omega_f",
        clique_f(h, limit),
        "packing number over maximal independent sets",
    );
    push(
        "fractional clique-constrained independence number",
        "alpha_c_f",
        clique_independence_f(h, limit),
        "packing number over maximal cliques",
    );
    push(
        "fractional clique cover number",
        "theta_f",
        clique_cover_f(h, limit),
        "covering number over maximal cliques",
    );
    push(
        "fractional domination number",
        "gamma_f",
        domination_f(h),
        "covering number over closed neighborhoods",
    );
    push(
        "fractional total domination number",
        "Gamma_f",
        total_domination_f(h),
        "covering number over open neighborhoods",
    );
    entries
}

/// One parameter compared across two hypergraphs.
#[derive(Clone, Debug)]
pub struct InvariantComparison {
    pub symbol: &'static str,
    pub left: Option<InvariantValue>,
    pub right: Option<InvariantValue>,
}

impl InvariantComparison {
    /// Both sides produced the same outcome, including both not applying.
    pub fn agree(&self) -> bool {
        self.left == self.right
    }
}

/// Computes every applicable parameter on both hypergraphs side by side.
/// Fractionally isomorphic hypergraphs agree on the covering, packing,
/// matching, transversal, independence, and domination rows; the rows built
/// from maximal independent sets or maximal cliques can still differ.
pub fn invariance_suite(g: &Hypergraph, h: &Hypergraph, limit: usize) -> Vec<InvariantComparison> {
    invariant_report(g, limit)
        .into_iter()
        .zip(invariant_report(h, limit))
        .map(|(l, r)| InvariantComparison {
            symbol: l.symbol,
            left: l.value,
            right: r.value,
        })
        .collect()
}
