//! Decorated plumbing graphs of normal surface singularities, with the
//! machinery specific to suspensions `{f(x,y) + z^n = 0}` of irreducible
//! plane curve singularities:
//!
//! * [`graph`] — decorated graphs, structural queries, exact intersection-form
//!   computations (determinants, Smith normal form, homology of the link);
//! * [`blowdown`] — the blow-down calculus and minimal models;
//! * [`canon`] — canonical forms and isomorphism testing for decorated trees;
//! * [`cf`] — negative continued fractions;
//! * [`newton`] — Newton pairs of irreducible plane curve singularities;
//! * [`curve`] — the minimal embedded resolution graph of a plane curve;
//! * [`cover`] — the cyclic-covering construction of the resolution graph of
//!   `f + z^n`, together with the closed-form determinant and genus oracles;
//! * [`recover`] — the inverse algorithm: Newton pairs and `n` from a minimal
//!   resolution graph, including the two ambiguity families and their
//!   resolution by the Milnor number;
//! * [`doc`] — a line-oriented text format for decorated graphs.

pub mod blowdown;
pub mod canon;
pub mod cf;
pub mod cover;
pub mod curve;
pub mod doc;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod newton;
pub mod recover;

pub use error::GraphError;
pub use graph::{Arrow, DecoratedGraph, HomologySummary, VertexData, VertexId};
pub use newton::{NewtonPair, SuspensionData};
