//! Generators for the graph and hypergraph families used throughout.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// The cycle graph on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Hypergraph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    let edges = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
    Hypergraph::new(n, edges)
}

/// The complete graph on `n >= 1` vertices.
pub fn complete(n: usize) -> Result<Hypergraph> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "complete graph needs at least 1 vertex".into(),
        ));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push(vec![u, v]);
        }
    }
    Hypergraph::new(n, edges)
}

/// The gem: an induced path 0-1-2-3 plus vertex 4 adjacent to all of it.
/// Degree sequence {2, 2, 3, 3, 4}.
pub fn gem() -> Hypergraph {
    let edges = vec![
        vec![0, 1],
        vec![1, 2],
        vec![2, 3],
        vec![0, 4],
        vec![1, 4],
        vec![2, 4],
        vec![3, 4],
    ];
    Hypergraph::new(5, edges).expect("gem is well formed")
}

/// Disjoint union, with the second operand's vertices and hyperedges
/// relabeled to follow the first's.
pub fn disjoint_union(a: &Hypergraph, b: &Hypergraph) -> Hypergraph {
    let shift = a.vertex_count();
    let mut edges: Vec<Vec<usize>> = a.edges().to_vec();
    for edge in b.edges() {
        edges.push(edge.iter().map(|&v| v + shift).collect());
    }
    Hypergraph::new(shift + b.vertex_count(), edges).expect("union of well-formed hypergraphs")
}

/// A 4-uniform 2-regular hypergraph on 8 vertices whose hyperedges chain
/// around in overlapping consecutive quadruples.
pub fn fixture_h4u() -> Hypergraph {
    let edges = vec![
        vec![0, 1, 2, 3],
        vec![2, 3, 4, 5],
        vec![4, 5, 6, 7],
        vec![0, 1, 6, 7],
    ];
    Hypergraph::new(8, edges).expect("fixture is well formed")
}

/// A second 4-uniform 2-regular hypergraph on 8 vertices, fractionally
/// isomorphic to [`fixture_h4u`] but with a different 2-section.
pub fn fixture_g4u() -> Hypergraph {
    let edges = vec![
        vec![0, 1, 2, 3],
        vec![0, 1, 2, 7],
        vec![3, 4, 5, 6],
        vec![4, 5, 6, 7],
    ];
    Hypergraph::new(8, edges).expect("fixture is well formed")
}

/// A uniformly random simple `r`-regular graph on `n` vertices via the
/// pairing model: `r` stubs per vertex are shuffled and paired, and pairings
/// with loops or repeated edges are rejected and retried. Deterministic for a
/// fixed seed. Fails when `n*r` is odd or `r >= n`, and gives up after 1000
/// rejected pairings.
pub fn random_regular(n: usize, r: usize, seed: u64) -> Result<Hypergraph> {
    const MAX_ATTEMPTS: usize = 1000;
    if r >= n || n * r % 2 != 0 {
        return Err(Error::InfeasibleDegree {
            vertex_count: n,
            degree: r,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(r)).collect();
    for _ in 0..MAX_ATTEMPTS {
        stubs.shuffle(&mut rng);
        if let Some(edges) = pair_stubs(&stubs, n) {
            return Hypergraph::new(n, edges);
        }
    }
    Err(Error::GenerationFailed {
        attempts: MAX_ATTEMPTS,
    })
}

fn pair_stubs(stubs: &[usize], n: usize) -> Option<Vec<Vec<usize>>> {
    let mut seen = vec![false; n * n];
    let mut edges = Vec::with_capacity(stubs.len() / 2);
    for pair in stubs.chunks_exact(2) {
        let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
        if u == v || seen[u * n + v] {
            return None;
        }
        seen[u * n + v] = true;
        edges.push(vec![u, v]);
    }
    edges.sort();
    Some(edges)
}
