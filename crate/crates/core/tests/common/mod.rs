//! Shared test fixtures and independent oracles.
//!
//! The oracles here recompute everything the library claims by a different
//! route: exhaustive bitmask search for the integer parameters, basic-point
//! enumeration with Gaussian elimination for small linear programs, and
//! nested degree multisets for fractional isomorphism of tiny graphs. None
//! of them share code with the library's solver or refinement paths.

#![allow(dead_code)]

use itertools::Itertools;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use fractiso::generators;
use fractiso::hypergraph::Hypergraph;
use fractiso::invariants::InvariantValue;
use fractiso::lp::{Constraint, Sense};
use fractiso::rational::{ratio, Rational};

pub fn fin(n: i64, d: i64) -> InvariantValue {
    InvariantValue::Finite(ratio(n, d))
}

pub fn path(n: usize) -> Hypergraph {
    let edges = (0..n.saturating_sub(1)).map(|i| vec![i, i + 1]).collect();
    Hypergraph::new(n, edges).unwrap()
}

pub fn star(leaves: usize) -> Hypergraph {
    let edges = (1..=leaves).map(|i| vec![0, i]).collect();
    Hypergraph::new(leaves + 1, edges).unwrap()
}

pub fn petersen() -> Hypergraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push(vec![i, (i + 1) % 5]);
        edges.push(vec![5 + i, 5 + (i + 2) % 5]);
        edges.push(vec![i, 5 + i]);
    }
    Hypergraph::new(10, edges).unwrap()
}

pub fn two_triangles() -> Hypergraph {
    generators::disjoint_union(
        &generators::cycle(3).unwrap(),
        &generators::cycle(3).unwrap(),
    )
}

pub fn c5_union_c7() -> Hypergraph {
    generators::disjoint_union(
        &generators::cycle(5).unwrap(),
        &generators::cycle(7).unwrap(),
    )
}

/// A mixed zoo of named hypergraphs for corpus-wide property checks.
pub fn corpus() -> Vec<(&'static str, Hypergraph)> {
    vec![
        ("K1", generators::complete(1).unwrap()),
        ("K2", generators::complete(2).unwrap()),
        ("K4", generators::complete(4).unwrap()),
        ("K5", generators::complete(5).unwrap()),
        ("P3", path(3)),
        ("P4", path(4)),
        ("C3", generators::cycle(3).unwrap()),
        ("C4", generators::cycle(4).unwrap()),
        ("C5", generators::cycle(5).unwrap()),
        ("C6", generators::cycle(6).unwrap()),
        ("C8", generators::cycle(8).unwrap()),
        ("star3", star(3)),
        ("gem", generators::gem()),
        ("petersen", petersen()),
        ("two triangles", two_triangles()),
        ("C5+C7", c5_union_c7()),
        ("C12", generators::cycle(12).unwrap()),
        ("4-uniform H", generators::fixture_h4u()),
        ("4-uniform G", generators::fixture_g4u()),
        ("isolated vertices", Hypergraph::new(5, vec![]).unwrap()),
        (
            "one hyperedge over everything",
            Hypergraph::new(4, vec![vec![0, 1, 2, 3]]).unwrap(),
        ),
        (
            "hypergraph with empty hyperedge",
            Hypergraph::new(4, vec![vec![0, 1], vec![], vec![1, 2, 3]]).unwrap(),
        ),
        (
            "3-uniform triple system",
            Hypergraph::new(
                6,
                vec![vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 0], vec![1, 3, 5]],
            )
            .unwrap(),
        ),
    ]
}

/// G(n, p)-style random graph, simple, possibly with isolated vertices.
pub fn random_graph(n: usize, edge_percent: u32, rng: &mut ChaCha8Rng) -> Hypergraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_range(0..100) < edge_percent {
                edges.push(vec![u, v]);
            }
        }
    }
    Hypergraph::new(n, edges).unwrap()
}

/// Random hypergraph where each of `m` hyperedges holds each vertex with
/// forty percent probability.
pub fn random_hypergraph(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Hypergraph {
    let edges = (0..m)
        .map(|_| (0..n).filter(|_| rng.random_bool(0.4)).collect())
        .collect();
    Hypergraph::new(n, edges).unwrap()
}

/// The same hypergraph with vertices relabeled by a random permutation and
/// the hyperedge list reshuffled; genuinely isomorphic to the input.
pub fn permuted(h: &Hypergraph, rng: &mut ChaCha8Rng) -> Hypergraph {
    let mut perm: Vec<usize> = (0..h.vertex_count()).collect();
    perm.shuffle(rng);
    let mut edges: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .map(|edge| edge.iter().map(|&v| perm[v]).collect())
        .collect();
    edges.shuffle(rng);
    Hypergraph::new(h.vertex_count(), edges).unwrap()
}

/// Any hypergraph on up to `max_n` vertices with up to `max_m` hyperedges,
/// empty hyperedges included.
pub fn arb_hypergraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    (0..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(0..n.max(1), 0..=n), 0..=max_m).prop_map(
            move |mut edges| {
                if n == 0 {
                    for edge in &mut edges {
                        edge.clear();
                    }
                }
                Hypergraph::new(n, edges).unwrap()
            },
        )
    })
}

/// A simple graph on 1 to `max_n` vertices.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::btree_set((0..n, 0..n), 0..=(n * 2).min(n * n)).prop_map(move |pairs| {
            let edges: std::collections::BTreeSet<Vec<usize>> = pairs
                .into_iter()
                .filter(|&(u, v)| u != v)
                .map(|(u, v)| vec![u.min(v), u.max(v)])
                .collect();
            Hypergraph::new(n, edges.into_iter().collect()).unwrap()
        })
    })
}

fn set_masks(universe: usize, sets: &[Vec<usize>]) -> Vec<u32> {
    assert!(universe <= 20, "oracle is exhaustive, keep instances small");
    sets.iter()
        .map(|s| s.iter().fold(0u32, |m, &v| m | 1 << v))
        .collect()
}

/// Fewest sets whose union is the whole universe; `None` when no union
/// reaches it. Plain dynamic programming over subsets.
pub fn min_set_cover(universe: usize, sets: &[Vec<usize>]) -> Option<usize> {
    let masks = set_masks(universe, sets);
    let full = (1usize << universe) - 1;
    let mut dp = vec![u32::MAX; full + 1];
    dp[0] = 0;
    for mask in 0..=full {
        if dp[mask] == u32::MAX {
            continue;
        }
        for &sm in &masks {
            let next = mask | sm as usize;
            dp[next] = dp[next].min(dp[mask] + 1);
        }
    }
    (dp[full] != u32::MAX).then(|| dp[full] as usize)
}

/// Largest set of elements meeting every given set at most once, by
/// exhaustive search.
pub fn max_int_packing(universe: usize, sets: &[Vec<usize>]) -> usize {
    let masks = set_masks(universe, sets);
    (0u32..1 << universe)
        .filter(|&sub| masks.iter().all(|&sm| (sub & sm).count_ones() <= 1))
        .map(|sub| sub.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn adjacency_masks(g: &Hypergraph) -> Vec<u32> {
    let adj = g.adjacency_lists().unwrap();
    assert!(adj.len() <= 20);
    adj.iter()
        .map(|nb| nb.iter().fold(0u32, |m, &v| m | 1 << v))
        .collect()
}

/// Every independent vertex set, the empty set included.
pub fn independent_subsets(g: &Hypergraph) -> Vec<Vec<usize>> {
    let adj = adjacency_masks(g);
    let n = adj.len();
    (0u32..1 << n)
        .filter(|&sub| (0..n).all(|v| sub & 1 << v == 0 || sub & adj[v] == 0))
        .map(|sub| (0..n).filter(|&v| sub & 1 << v != 0).collect())
        .collect()
}

/// Every nonempty clique.
pub fn clique_subsets(g: &Hypergraph) -> Vec<Vec<usize>> {
    let adj = adjacency_masks(g);
    let n = adj.len();
    (1u32..1 << n)
        .filter(|&sub| {
            (0..n).all(|v| sub & 1 << v == 0 || sub & !adj[v] & !(1 << v) == 0)
        })
        .map(|sub| (0..n).filter(|&v| sub & 1 << v != 0).collect())
        .collect()
}

/// Clique number by exhaustive search.
pub fn max_clique_size(g: &Hypergraph) -> usize {
    clique_subsets(g).iter().map(Vec::len).max().unwrap_or(0)
}

/// Independence number by exhaustive search.
pub fn max_independent_size(g: &Hypergraph) -> usize {
    independent_subsets(g).iter().map(Vec::len).max().unwrap_or(0)
}

/// Chromatic number: fewest independent sets covering all vertices.
pub fn min_colors(g: &Hypergraph) -> usize {
    min_set_cover(g.vertex_count(), &independent_subsets(g)).expect("singletons cover")
}

/// Clique cover number: fewest cliques covering all vertices.
pub fn min_clique_cover(g: &Hypergraph) -> usize {
    min_set_cover(g.vertex_count(), &clique_subsets(g)).expect("singletons cover")
}

/// Largest family of pairwise disjoint hyperedges, by exhaustive search
/// over hyperedge subsets.
pub fn max_disjoint_edges(h: &Hypergraph) -> usize {
    let m = h.edge_count();
    assert!(m <= 20);
    let vertex_masks: Vec<u32> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u32, |acc, &v| acc | 1 << v))
        .collect();
    let mut best = 0;
    'outer: for sub in 0u32..1 << m {
        let mut used = 0u32;
        for e in 0..m {
            if sub & 1 << e != 0 {
                if used & vertex_masks[e] != 0 {
                    continue 'outer;
                }
                used |= vertex_masks[e];
            }
        }
        best = best.max(sub.count_ones() as usize);
    }
    best
}

/// Solves a square rational linear system by Gauss-Jordan elimination;
/// `None` when singular.
pub fn solve_square_system(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for j in col..=n {
            m[col][j] = &m[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..=n {
                    let delta = &f * &m[col][j];
                    m[r][j] = &m[r][j] - &delta;
                }
            }
        }
    }
    Some((0..n).map(|i| m[i][n].clone()).collect())
}

/// The optimum of a small linear program by enumerating candidate basic
/// points: every solution of `num_vars` active constraints drawn from the
/// given rows and the nonnegativity planes. Only sound when the program is
/// feasible-and-bounded or infeasible, which is how the tests use it; an
/// unbounded program would come back with a finite vertex value.
pub fn lp_optimum_by_enumeration(
    sense: Sense,
    objective: &[Rational],
    constraints: &[Constraint],
) -> Option<Rational> {
    let nv = objective.len();
    let mut planes: Vec<(Vec<Rational>, Rational)> = constraints
        .iter()
        .map(|c| (c.coeffs().to_vec(), c.rhs().clone()))
        .collect();
    for i in 0..nv {
        let mut e = vec![Rational::zero(); nv];
        e[i] = ratio(1, 1);
        planes.push((e, Rational::zero()));
    }
    let mut best: Option<Rational> = None;
    for combo in (0..planes.len()).combinations(nv) {
        let a: Vec<Vec<Rational>> = combo.iter().map(|&i| planes[i].0.clone()).collect();
        let b: Vec<Rational> = combo.iter().map(|&i| planes[i].1.clone()).collect();
        let Some(x) = solve_square_system(&a, &b) else {
            continue;
        };
        if x.iter().any(|v| v.is_negative()) {
            continue;
        }
        if !constraints.iter().all(|c| c.satisfied_by(&x)) {
            continue;
        }
        let value: Rational = objective.iter().zip(&x).map(|(c, v)| c * v).sum();
        best = Some(match best {
            None => value,
            Some(prev) => match sense {
                Sense::Minimize => prev.min(value),
                Sense::Maximize => prev.max(value),
            },
        });
    }
    best
}

/// Sorted multisets of nested degree signatures, one per refinement depth:
/// level 0 is the plain degree, level k+1 the sorted list of the neighbors'
/// level-k signatures. Rendered as strings so multisets compare directly
/// across graphs.
pub fn nested_degree_multisets(g: &Hypergraph, depth: usize) -> Vec<Vec<String>> {
    let adj = g.adjacency_lists().unwrap();
    let n = adj.len();
    let mut sigs: Vec<String> = adj.iter().map(|nb| nb.len().to_string()).collect();
    let mut levels = Vec::with_capacity(depth + 1);
    let sorted = |v: &[String]| {
        let mut s = v.to_vec();
        s.sort();
        s
    };
    levels.push(sorted(&sigs));
    for _ in 0..depth {
        sigs = (0..n)
            .map(|v| {
                let mut parts: Vec<String> = adj[v].iter().map(|&w| sigs[w].clone()).collect();
                parts.sort();
                format!("[{}]", parts.join(","))
            })
            .collect();
        levels.push(sorted(&sigs));
    }
    levels
}

/// Fractional isomorphism of small graphs decided from first principles:
/// two graphs are fractionally isomorphic exactly when their nested degree
/// multisets agree at every depth, and depth `n` is always enough.
pub fn fractional_iso_graph_oracle(g: &Hypergraph, h: &Hypergraph) -> bool {
    if g.vertex_count() != h.vertex_count() {
        return false;
    }
    let depth = g.vertex_count();
    nested_degree_multisets(g, depth) == nested_degree_multisets(h, depth)
}
