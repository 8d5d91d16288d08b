//! Hypergraphs derived from a graph.
//!
//! These constructions feed the LP-based invariants: neighborhood hypergraphs
//! for domination, and maximal-independent-set / maximal-clique hypergraphs
//! for the chromatic and clique-cover families. Restricting to *maximal* sets
//! keeps the hyperedge count manageable without changing any of the optima,
//! since every independent set or clique extends to a maximal one and the
//! covering/packing LPs only improve under supersets.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// One hyperedge per vertex `v`, namely its open neighborhood `N(v)`.
/// An isolated vertex yields an empty hyperedge.
pub fn open_neighborhood_hypergraph(graph: &Hypergraph) -> Result<Hypergraph> {
    let adj = graph.adjacency_lists()?;
    Hypergraph::new(graph.vertex_count(), adj)
}

/// One hyperedge per vertex `v`, namely its closed neighborhood `N[v]`.
pub fn closed_neighborhood_hypergraph(graph: &Hypergraph) -> Result<Hypergraph> {
    let mut adj = graph.adjacency_lists()?;
    for (v, list) in adj.iter_mut().enumerate() {
        list.push(v);
    }
    Hypergraph::new(graph.vertex_count(), adj)
}

/// The hypergraph whose hyperedges are the maximal independent sets of the
/// graph. Enumeration is exponential in the worst case, so vertex counts
/// above `limit` are refused.
pub fn independent_set_hypergraph(graph: &Hypergraph, limit: usize) -> Result<Hypergraph> {
    guard(graph, limit, "maximal independent set enumeration")?;
    let complement_adj = complement_masks(graph)?;
    let sets = maximal_cliques(&complement_adj);
    Hypergraph::new(graph.vertex_count(), sets)
}

/// The hypergraph whose hyperedges are the maximal cliques of the graph.
/// Same guard as [`independent_set_hypergraph`].
pub fn clique_hypergraph(graph: &Hypergraph, limit: usize) -> Result<Hypergraph> {
    guard(graph, limit, "maximal clique enumeration")?;
    let adj = adjacency_masks(graph)?;
    let cliques = maximal_cliques(&adj);
    Hypergraph::new(graph.vertex_count(), cliques)
}

/// The complement graph: same vertices, edges exactly between distinct
/// non-adjacent pairs.
pub fn complement(graph: &Hypergraph) -> Result<Hypergraph> {
    let adj = graph.adjacency_lists()?;
    let n = graph.vertex_count();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if adj[u].binary_search(&v).is_err() {
                edges.push(vec![u, v]);
            }
        }
    }
    Hypergraph::new(n, edges)
}

fn guard(graph: &Hypergraph, limit: usize, operation: &'static str) -> Result<()> {
    if !graph.is_graph() {
        return Err(Error::NotAGraph);
    }
    let n = graph.vertex_count();
    if n > limit || n > 63 {
        return Err(Error::LimitExceeded {
            operation,
            size: n,
            limit: limit.min(63),
        });
    }
    Ok(())
}

fn adjacency_masks(graph: &Hypergraph) -> Result<Vec<u64>> {
    let adj = graph.adjacency_lists()?;
    Ok(adj
        .iter()
        .map(|list| list.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect())
}

fn complement_masks(graph: &Hypergraph) -> Result<Vec<u64>> {
    let n = graph.vertex_count();
    let all = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let adj = adjacency_masks(graph)?;
    Ok((0..n).map(|v| all & !adj[v] & !(1 << v)).collect())
}

/// Bron-Kerbosch with pivoting over bitmask adjacency. Returns every maximal
/// clique as a sorted vertex list, the whole list sorted lexicographically.
/// On an edgeless graph the maximal cliques are the single vertices, so every
/// vertex appears in at least one returned set.
fn maximal_cliques(adj: &[u64]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let all = if n == 0 {
        0
    } else if n == 64 {
        !0
    } else {
        (1u64 << n) - 1
    };
    let mut found = Vec::new();
    expand(adj, 0, all, 0, &mut found);
    let mut sets: Vec<Vec<usize>> = found.into_iter().map(mask_to_vec).collect();
    sets.sort();
    sets
}

fn expand(adj: &[u64], clique: u64, mut candidates: u64, mut excluded: u64, out: &mut Vec<u64>) {
    if candidates == 0 && excluded == 0 {
        if clique != 0 {
            out.push(clique);
        }
        return;
    }
    // Pivot on the candidate-or-excluded vertex covering the most candidates.
    let pivot = iter_bits(candidates | excluded)
        .max_by_key(|&u| (candidates & adj[u]).count_ones())
        .expect("candidates | excluded is nonempty");
    for v in iter_bits(candidates & !adj[pivot]).collect::<Vec<_>>() {
        let bit = 1u64 << v;
        expand(adj, clique | bit, candidates & adj[v], excluded & adj[v], out);
        candidates &= !bit;
        excluded |= bit;
    }
}

fn iter_bits(mask: u64) -> impl Iterator<Item = usize> {
    std::iter::successors((mask != 0).then_some(mask), |&m| {
        let rest = m & (m - 1);
        (rest != 0).then_some(rest)
    })
    .map(|m| m.trailing_zeros() as usize)
}

fn mask_to_vec(mask: u64) -> Vec<usize> {
    iter_bits(mask).collect()
}
