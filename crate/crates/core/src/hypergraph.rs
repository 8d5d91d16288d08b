//! Hypergraphs and their basic matrix representations.

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::rational::Rational;

/// A finite hypergraph: `n` vertices labeled `0..n` and an ordered list of
/// hyperedges, each a subset of the vertices.
///
/// The hyperedge list is a multiset: the same subset may occur several times,
/// and a hyperedge may be empty. Within one hyperedge, vertices are kept
/// sorted and deduplicated. Graphs are the special case where every hyperedge
/// has exactly two vertices.
#[derive(Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertex_count: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds a hypergraph on `vertex_count` vertices. Repeated vertices
    /// inside one hyperedge collapse to a set; an out-of-range vertex is an
    /// error.
    pub fn new(vertex_count: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        for mut edge in edges {
            for &v in &edge {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        vertex_count,
                    });
                }
            }
            edge.sort_unstable();
            edge.dedup();
            normalized.push(edge);
        }
        Ok(Hypergraph {
            vertex_count,
            edges: normalized,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Number of hyperedges containing `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.binary_search(&v).is_ok()).count()
    }

    /// Degrees of all vertices, indexed by vertex.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertex_count];
        for edge in &self.edges {
            for &v in edge {
                d[v] += 1;
            }
        }
        d
    }

    /// The multiset of vertex degrees.
    pub fn degree_sequence(&self) -> DegreeProfile {
        DegreeProfile::new(self.degrees())
    }

    /// The multiset of hyperedge sizes.
    pub fn hyperedge_sizes(&self) -> DegreeProfile {
        DegreeProfile::new(self.edges.iter().map(Vec::len).collect())
    }

    /// Some vertex lies in no hyperedge.
    pub fn has_exposed_vertex(&self) -> bool {
        self.degrees().iter().any(|&d| d == 0)
    }

    /// `Some(k)` when every hyperedge has exactly `k` vertices.
    pub fn uniformity(&self) -> Option<usize> {
        let k = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == k).then_some(k)
    }

    /// `Some(r)` when every vertex has degree exactly `r`.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.degrees();
        let r = *d.first()?;
        d.iter().all(|&x| x == r).then_some(r)
    }

    /// Every hyperedge has exactly two vertices. Vacuously true with no
    /// hyperedges.
    pub fn is_graph(&self) -> bool {
        self.edges.iter().all(|e| e.len() == 2)
    }

    /// The n x m vertex-hyperedge incidence matrix. Defined only when the
    /// hypergraph has at least one vertex and at least one hyperedge.
    pub fn incidence_matrix(&self) -> Result<RationalMatrix> {
        if self.vertex_count == 0 {
            return Err(Error::NoIncidenceMatrix("no vertices"));
        }
        if self.edges.is_empty() {
            return Err(Error::NoIncidenceMatrix("no hyperedges"));
        }
        let mut m = RationalMatrix::zeros(self.vertex_count, self.edges.len());
        for (j, edge) in self.edges.iter().enumerate() {
            for &v in edge {
                m[(v, j)] = Rational::one();
            }
        }
        Ok(m)
    }

    /// The 0/1 adjacency matrix of a graph.
    pub fn adjacency_matrix(&self) -> Result<RationalMatrix> {
        if !self.is_graph() {
            return Err(Error::NotAGraph);
        }
        let mut a = RationalMatrix::zeros(self.vertex_count, self.vertex_count);
        for edge in &self.edges {
            let (u, v) = (edge[0], edge[1]);
            a[(u, v)] = Rational::one();
            a[(v, u)] = Rational::one();
        }
        Ok(a)
    }

    /// Sorted neighbor lists of a graph.
    pub fn adjacency_lists(&self) -> Result<Vec<Vec<usize>>> {
        if !self.is_graph() {
            return Err(Error::NotAGraph);
        }
        let mut adj = vec![Vec::new(); self.vertex_count];
        for edge in &self.edges {
            let (u, v) = (edge[0], edge[1]);
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(adj)
    }

    /// For each vertex, the sorted list of indices of hyperedges containing it.
    pub fn incident_edge_lists(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.vertex_count];
        for (j, edge) in self.edges.iter().enumerate() {
            for &v in edge {
                inc[v].push(j);
            }
        }
        inc
    }

    /// The dual hypergraph: one vertex per hyperedge of `self`, one hyperedge
    /// per vertex of `self`, with incidence transposed. Needs at least one
    /// hyperedge so the roles can swap.
    pub fn dual(&self) -> Result<Hypergraph> {
        if self.edges.is_empty() {
            return Err(Error::NoIncidenceMatrix("no hyperedges"));
        }
        Ok(Hypergraph {
            vertex_count: self.edges.len(),
            edges: self.incident_edge_lists(),
        })
    }

    /// The 2-section graph: same vertices, an edge between every pair of
    /// distinct vertices that share at least one hyperedge.
    pub fn two_section(&self) -> Hypergraph {
        let n = self.vertex_count;
        let mut adjacent = vec![false; n * n];
        for edge in &self.edges {
            for (i, &u) in edge.iter().enumerate() {
                for &v in &edge[i + 1..] {
                    adjacent[u * n + v] = true;
                }
            }
        }
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if adjacent[u * n + v] {
                    pairs.push(vec![u, v]);
                }
            }
        }
        Hypergraph {
            vertex_count: n,
            edges: pairs,
        }
    }

    /// The bipartite incidence graph: vertices `0..n` are the vertices of
    /// `self`, vertices `n..n+m` are its hyperedges, and `{v, n+j}` is an edge
    /// exactly when vertex `v` lies in hyperedge `j`.
    pub fn bipartite_representation(&self) -> Hypergraph {
        let n = self.vertex_count;
        let mut pairs = Vec::new();
        for (j, edge) in self.edges.iter().enumerate() {
            for &v in edge {
                pairs.push(vec![v, n + j]);
            }
        }
        Hypergraph {
            vertex_count: n + self.edges.len(),
            edges: pairs,
        }
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Hypergraph(n={}, m={}, edges={:?})",
            self.vertex_count,
            self.edges.len(),
            self.edges
        )
    }
}

/// A sorted multiset of nonnegative integers, used for degree sequences and
/// hyperedge size lists. Two profiles compare equal exactly when the
/// multisets are equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeProfile(Vec<usize>);

impl DegreeProfile {
    pub fn new(mut values: Vec<usize>) -> Self {
        values.sort_unstable();
        DegreeProfile(values)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for DegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}
