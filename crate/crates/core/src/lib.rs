//! Fractional isomorphism of graphs and hypergraphs.
//!
//! Two hypergraphs G and H with incidence matrices M_G and M_H are fractionally
//! isomorphic when there are doubly stochastic matrices S1 and S2 with
//! S1 M_G = M_H S2^t and M_G S2 = S1^t M_H. This crate decides that relation by
//! two independent routes and cross-validates them:
//!
//! * an exact feasibility check of the defining linear system, solved by a
//!   two-phase simplex over arbitrary-precision rationals ([`lp`], [`iso`]);
//! * a joint equitable-partition refinement of vertices and hyperedges, where
//!   the relation holds exactly when the two hypergraphs admit a common
//!   coarsest equitable partition ([`partition`], [`iso`]).
//!
//! On a positive answer the solver produces an explicit witness pair (S1, S2)
//! that can be verified, composed along chains, and serialized ([`iso`]).
//!
//! The [`invariants`] module computes fractional covering, packing, matching,
//! transversal, independence, chromatic, clique, clique cover, domination and
//! total domination numbers exactly, all as rationals, via the hypergraph
//! constructions in [`derived`]. Fractionally isomorphic hypergraphs share
//! covering, packing, matching, transversal, independence, domination, and
//! total domination numbers; the parameters built on independent sets or
//! cliques can differ across a fractionally isomorphic pair.

pub mod derived;
pub mod error;
pub mod generators;
pub mod hypergraph;
pub mod invariants;
pub mod io;
pub mod iso;
pub mod lp;
pub mod matrix;
pub mod partition;
pub mod rational;

pub use error::{Error, Result};
pub use hypergraph::{DegreeProfile, Hypergraph};
pub use matrix::RationalMatrix;
pub use rational::Rational;

/// Default cap on vertex count for constructions that enumerate maximal
/// cliques or maximal independent sets.
pub const DEFAULT_ENUM_LIMIT: usize = 20;

/// Default cap on vertex and hyperedge counts for the LP isomorphism route;
/// beyond it the partition route is the practical decider.
pub const DEFAULT_LP_ISO_LIMIT: usize = 30;
