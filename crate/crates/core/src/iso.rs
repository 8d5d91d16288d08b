//! Fractional isomorphism of hypergraphs.
//!
//! Two hypergraphs `G`, `H` with incidence matrices `M_G`, `M_H` are
//! fractionally isomorphic when doubly stochastic matrices `S1` (vertex
//! coupling) and `S2` (hyperedge coupling) exist with
//!
//! ```text
//! S1 * M_G = M_H * S2^t        M_G * S2 = S1^t * M_H
//! ```
//!
//! Two independent procedures decide this. [`iso_by_lp`] sets the defining
//! equations up as a linear feasibility problem and solves it exactly over
//! the rationals. [`iso_by_partition`] refines the disjoint union and checks
//! that every class of the resulting partition splits evenly between the two
//! sides; a common equitable partition yields an explicit block witness.
//! Both routes answer the same question, so [`decide`] with
//! [`IsoMethod::Both`] runs them against each other and reports any
//! disagreement as an error rather than guessing.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::lp::{feasible, Constraint};
use crate::matrix::RationalMatrix;
use crate::partition::{common_partition, CommonPartition};
use crate::rational::{ratio, Rational};

/// A certified pair of coupling matrices.
///
/// `vertex_coupling` is `n x n` with rows indexed by the second hypergraph's
/// vertices and columns by the first's; `edge_coupling` is `m x m` with rows
/// indexed by the first hypergraph's hyperedges and columns by the second's.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub vertex_coupling: RationalMatrix,
    pub edge_coupling: RationalMatrix,
}

/// Which decision procedure to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoMethod {
    Partition,
    Lp,
    Both,
}

/// The answer of a decision run, along with whatever certificate the chosen
/// route produced.
#[derive(Clone, Debug)]
pub struct IsoVerdict {
    pub isomorphic: bool,
    pub method: IsoMethod,
    pub witness: Option<IsoWitness>,
    pub common: Option<CommonPartition>,
}

/// Outcome of checking a witness against the defining conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub vertex_coupling_doubly_stochastic: bool,
    pub edge_coupling_doubly_stochastic: bool,
    /// `S1 * M_G = M_H * S2^t`.
    pub left_incidence_equation: bool,
    /// `M_G * S2 = S1^t * M_H`.
    pub right_incidence_equation: bool,
}

impl WitnessReport {
    pub fn ok(&self) -> bool {
        self.vertex_coupling_doubly_stochastic
            && self.edge_coupling_doubly_stochastic
            && self.left_incidence_equation
            && self.right_incidence_equation
    }
}

/// Decides fractional isomorphism by the requested route. `limit` caps the
/// vertex and hyperedge counts admitted to the linear programming route.
/// With [`IsoMethod::Both`] the two routes must agree; a split answer is
/// reported as [`Error::MethodDisagreement`].
pub fn decide(g: &Hypergraph, h: &Hypergraph, method: IsoMethod, limit: usize) -> Result<IsoVerdict> {
    match method {
        IsoMethod::Partition => Ok(iso_by_partition(g, h)),
        IsoMethod::Lp => iso_by_lp(g, h, limit),
        IsoMethod::Both => {
            let partition = iso_by_partition(g, h);
            let lp = iso_by_lp(g, h, limit)?;
            if partition.isomorphic != lp.isomorphic {
                return Err(Error::MethodDisagreement {
                    partition: partition.isomorphic,
                    lp: lp.isomorphic,
                });
            }
            Ok(IsoVerdict {
                isomorphic: partition.isomorphic,
                method: IsoMethod::Both,
                witness: partition.witness.or(lp.witness),
                common: partition.common,
            })
        }
    }
}

/// Decides by refinement: the hypergraphs are fractionally isomorphic
/// exactly when they admit a common equitable partition, and the partition
/// then yields a block witness.
pub fn iso_by_partition(g: &Hypergraph, h: &Hypergraph) -> IsoVerdict {
    match common_partition(g, h) {
        Some(common) => {
            let witness = witness_from_partition(g, h, &common);
            IsoVerdict {
                isomorphic: true,
                method: IsoMethod::Partition,
                witness: Some(witness),
                common: Some(common),
            }
        }
        None => IsoVerdict {
            isomorphic: false,
            method: IsoMethod::Partition,
            witness: None,
            common: None,
        },
    }
}

/// Decides by exact linear programming over the defining equations, after
/// rejecting pairs whose vertex counts, hyperedge counts, degree multisets,
/// or hyperedge size multisets already differ (all four are preserved by any
/// coupling). Pairs larger than `limit` on either count are refused.
pub fn iso_by_lp(g: &Hypergraph, h: &Hypergraph, limit: usize) -> Result<IsoVerdict> {
    let not_isomorphic = IsoVerdict {
        isomorphic: false,
        method: IsoMethod::Lp,
        witness: None,
        common: None,
    };
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(not_isomorphic);
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    if n == 0 && m == 0 {
        return Ok(IsoVerdict {
            isomorphic: true,
            method: IsoMethod::Lp,
            witness: Some(IsoWitness {
                vertex_coupling: RationalMatrix::zeros(0, 0),
                edge_coupling: RationalMatrix::zeros(0, 0),
            }),
            common: None,
        });
    }
    let size = n.max(m);
    if size > limit {
        return Err(Error::LimitExceeded {
            operation: "fractional isomorphism linear program",
            size,
            limit,
        });
    }
    if g.degree_sequence() != h.degree_sequence()
        || g.hyperedge_sizes() != h.hyperedge_sizes()
    {
        return Ok(not_isomorphic);
    }

    let constraints = coupling_constraints(g, h);
    let num_vars = n * n + m * m;
    match feasible(num_vars, &constraints)? {
        Some(solution) => {
            let s1 = RationalMatrix::from_fn(n, n, |p, q| solution[p * n + q].clone());
            let s2 = RationalMatrix::from_fn(m, m, |e, f| solution[n * n + e * m + f].clone());
            let witness = IsoWitness {
                vertex_coupling: s1,
                edge_coupling: s2,
            };
            debug_assert!(verify_witness(g, h, &witness).is_ok_and(|r| r.ok()));
            Ok(IsoVerdict {
                isomorphic: true,
                method: IsoMethod::Lp,
                witness: Some(witness),
                common: None,
            })
        }
        None => Ok(not_isomorphic),
    }
}

/// The feasibility system over `n*n + m*m` variables: `S1` row-major, then
/// `S2` row-major. Nonnegativity is implicit in the solver.
fn coupling_constraints(g: &Hypergraph, h: &Hypergraph) -> Vec<Constraint> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let num_vars = n * n + m * m;
    let s1 = |p: usize, q: usize| p * n + q;
    let s2 = |e: usize, f: usize| n * n + e * m + f;
    let one = Rational::from_integer(1.into());
    let mut constraints = Vec::new();

    let mut sum_to_one = |vars: Vec<usize>| {
        let mut coeffs = vec![Rational::zero(); num_vars];
        for v in vars {
            coeffs[v] = one.clone();
        }
        constraints.push(Constraint::equal(coeffs, one.clone()));
    };
    for p in 0..n {
        sum_to_one((0..n).map(|q| s1(p, q)).collect());
    }
    for q in 0..n {
        sum_to_one((0..n).map(|p| s1(p, q)).collect());
    }
    for e in 0..m {
        sum_to_one((0..m).map(|f| s2(e, f)).collect());
    }
    for f in 0..m {
        sum_to_one((0..m).map(|e| s2(e, f)).collect());
    }

    let g_incident = g.incident_edge_lists();
    let h_incident = h.incident_edge_lists();
    // (S1 * M_G)[p][e] = (M_H * S2^t)[p][e] for every second-side vertex p
    // and first-side hyperedge e.
    for p in 0..n {
        for e in 0..m {
            let mut coeffs = vec![Rational::zero(); num_vars];
            for &q in &g.edges()[e] {
                coeffs[s1(p, q)] += &one;
            }
            for &f in &h_incident[p] {
                coeffs[s2(e, f)] -= &one;
            }
            constraints.push(Constraint::equal(coeffs, Rational::zero()));
        }
    }
    // (M_G * S2)[q][f] = (S1^t * M_H)[q][f] for every first-side vertex q
    // and second-side hyperedge f.
    for q in 0..n {
        for f in 0..m {
            let mut coeffs = vec![Rational::zero(); num_vars];
            for &e in &g_incident[q] {
                coeffs[s2(e, f)] += &one;
            }
            for &p in &h.edges()[f] {
                coeffs[s1(p, q)] -= &one;
            }
            constraints.push(Constraint::equal(coeffs, Rational::zero()));
        }
    }
    constraints
}

/// For graphs only: feasibility of a single doubly stochastic `S` with
/// `S * A_G = A_H * S` over the adjacency matrices. For graphs this agrees
/// with the incidence formulation, which makes it a useful cross-check.
pub fn graph_iso_by_adjacency_lp(g: &Hypergraph, h: &Hypergraph, limit: usize) -> Result<bool> {
    let a_g = g.adjacency_matrix()?;
    let a_h = h.adjacency_matrix()?;
    if g.vertex_count() != h.vertex_count() {
        return Ok(false);
    }
    let n = g.vertex_count();
    if n == 0 {
        return Ok(true);
    }
    if n > limit {
        return Err(Error::LimitExceeded {
            operation: "adjacency coupling linear program",
            size: n,
            limit,
        });
    }
    if g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    let one = Rational::from_integer(1.into());
    let var = |p: usize, q: usize| p * n + q;
    let mut constraints = Vec::new();
    for p in 0..n {
        let mut coeffs = vec![Rational::zero(); n * n];
        for q in 0..n {
            coeffs[var(p, q)] = one.clone();
        }
        constraints.push(Constraint::equal(coeffs, one.clone()));
    }
    for q in 0..n {
        let mut coeffs = vec![Rational::zero(); n * n];
        for p in 0..n {
            coeffs[var(p, q)] = one.clone();
        }
        constraints.push(Constraint::equal(coeffs, one.clone()));
    }
    // (S * A_G)[p][q'] = (A_H * S)[p][q']
    for p in 0..n {
        for qq in 0..n {
            let mut coeffs = vec![Rational::zero(); n * n];
            for q in 0..n {
                if !a_g[(q, qq)].is_zero() {
                    coeffs[var(p, q)] += &one;
                }
            }
            for pp in 0..n {
                if !a_h[(p, pp)].is_zero() {
                    coeffs[var(pp, qq)] -= &one;
                }
            }
            constraints.push(Constraint::equal(coeffs, Rational::zero()));
        }
    }
    Ok(feasible(n * n, &constraints)?.is_some())
}

/// Builds the block witness of a common equitable partition: entries
/// `1/v_i` between matched vertex classes and `1/a_j` between matched
/// hyperedge classes.
pub fn witness_from_partition(
    g: &Hypergraph,
    h: &Hypergraph,
    common: &CommonPartition,
) -> IsoWitness {
    let n = g.vertex_count();
    let m = g.edge_count();
    debug_assert_eq!(n, h.vertex_count());
    debug_assert_eq!(m, h.edge_count());
    let mut vertex_coupling = RationalMatrix::zeros(n, n);
    for (i, size) in common.params.vertex_class_sizes.iter().enumerate() {
        let weight = ratio(1, *size as i64);
        for &p in &common.right_vertex_classes[i] {
            for &q in &common.left_vertex_classes[i] {
                vertex_coupling[(p, q)] = weight.clone();
            }
        }
    }
    let mut edge_coupling = RationalMatrix::zeros(m, m);
    for (j, size) in common.params.edge_class_sizes.iter().enumerate() {
        let weight = ratio(1, *size as i64);
        for &e in &common.left_edge_classes[j] {
            for &f in &common.right_edge_classes[j] {
                edge_coupling[(e, f)] = weight.clone();
            }
        }
    }
    IsoWitness {
        vertex_coupling,
        edge_coupling,
    }
}

/// Checks a claimed witness for the pair `(g, h)`. Wrong matrix dimensions
/// are an error; a well-shaped witness that fails a defining condition comes
/// back as a report with the failing checks set to false.
pub fn verify_witness(g: &Hypergraph, h: &Hypergraph, witness: &IsoWitness) -> Result<WitnessReport> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if h.vertex_count() != n || h.edge_count() != m {
        return Err(Error::InvalidWitness(format!(
            "hypergraphs have shapes {}x{} and {}x{}, no coupling relates them",
            n,
            m,
            h.vertex_count(),
            h.edge_count()
        )));
    }
    let s1 = &witness.vertex_coupling;
    let s2 = &witness.edge_coupling;
    if s1.rows() != n || s1.cols() != n {
        return Err(Error::InvalidWitness(format!(
            "vertex coupling is {}x{}, expected {n}x{n}",
            s1.rows(),
            s1.cols()
        )));
    }
    if s2.rows() != m || s2.cols() != m {
        return Err(Error::InvalidWitness(format!(
            "edge coupling is {}x{}, expected {m}x{m}",
            s2.rows(),
            s2.cols()
        )));
    }
    let mut report = WitnessReport {
        vertex_coupling_doubly_stochastic: s1.is_doubly_stochastic(),
        edge_coupling_doubly_stochastic: s2.is_doubly_stochastic(),
        left_incidence_equation: true,
        right_incidence_equation: true,
    };
    if n > 0 && m > 0 {
        let m_g = g.incidence_matrix()?;
        let m_h = h.incidence_matrix()?;
        report.left_incidence_equation = s1.mul(&m_g) == m_h.mul(&s2.transpose());
        report.right_incidence_equation = m_g.mul(s2) == s1.transpose().mul(&m_h);
    }
    Ok(report)
}

/// The identity witness relating a hypergraph to itself.
pub fn identity_witness(g: &Hypergraph) -> IsoWitness {
    IsoWitness {
        vertex_coupling: RationalMatrix::identity(g.vertex_count()),
        edge_coupling: RationalMatrix::identity(g.edge_count()),
    }
}

/// Turns a witness for `(g, h)` into one for `(h, g)` by transposing both
/// couplings.
pub fn reversed_witness(witness: &IsoWitness) -> IsoWitness {
    IsoWitness {
        vertex_coupling: witness.vertex_coupling.transpose(),
        edge_coupling: witness.edge_coupling.transpose(),
    }
}

/// Composes a witness for `(g, h)` with one for `(h, k)` into a witness for
/// `(g, k)`: vertex couplings multiply as `T1 * S1` and edge couplings as
/// `S2 * T2`. Products of doubly stochastic matrices stay doubly stochastic,
/// and the incidence equations chain through the middle hypergraph.
pub fn compose_witnesses(gh: &IsoWitness, hk: &IsoWitness) -> Result<IsoWitness> {
    if gh.vertex_coupling.rows() != hk.vertex_coupling.cols()
        || gh.edge_coupling.cols() != hk.edge_coupling.rows()
    {
        return Err(Error::InvalidWitness(format!(
            "cannot chain couplings of sizes {}x{} and {}x{}",
            gh.vertex_coupling.rows(),
            gh.edge_coupling.rows(),
            hk.vertex_coupling.rows(),
            hk.edge_coupling.rows()
        )));
    }
    Ok(IsoWitness {
        vertex_coupling: hk.vertex_coupling.mul(&gh.vertex_coupling),
        edge_coupling: gh.edge_coupling.mul(&hk.edge_coupling),
    })
}
