//! Multi-path matroids.
//!
//! A multi-path matroid is a transversal matroid that can be presented by an
//! antichain of intervals in a cyclic order on the ground set.  The class
//! contains all lattice path matroids (wrap the linear order around) as well
//! as all whirls, and it is closed under minors and duality.  Its bases are
//! in correspondence with monotone lattice paths in a planar diagram with one
//! or more start/end point pairs, which is what makes the class
//! algorithmically pleasant: the Tutte polynomial, which is #P-hard for
//! transversal matroids in general, is computable in polynomial time here.
//!
//! The crate provides:
//!
//! * [`cyclic`]: cyclic orders, intervals in them, and induced suborders;
//! * [`presentation`]: interval systems, validation, normalization to an
//!   antichain, and single-element deletion/contraction;
//! * [`diagram`]: the planar diagrams, their label-set semantics, duality by
//!   reflection, extensions, and initial-minor diagrams;
//! * [`tutte`]: the computation-graph dynamic program for the Tutte
//!   polynomial;
//! * [`activities`]: lattice path descriptions of internal/external basis
//!   activities and a second, activity-based Tutte algorithm;
//! * [`structure`]: spanning circuits, cocircuit presentations, minimality;
//! * [`oracle`]: deliberately naive brute-force ground truth for small
//!   instances, used throughout the test suites;
//! * [`fixtures`]: whirls, uniform matroids, and other standard instances.

pub mod activities;
pub mod cyclic;
pub mod diagram;
pub mod error;
pub mod fixtures;
pub mod oracle;
pub mod polynomial;
pub mod presentation;
pub mod structure;
pub mod tutte;

pub use activities::{GammaTable, PathRepresentation};
pub use cyclic::{CyclicOrder, SigmaInterval};
pub use diagram::{Diagram, ElementClass, LatticePath, Step};
pub use error::{Error, Result};
pub use oracle::SetSystem;
pub use polynomial::BivariatePolynomial;
pub use presentation::{SigmaIntervalSystem, ValidationReport};
pub use tutte::ComputationGraph;

/// Ground set elements are canonically the integers `1..=n`.
pub type Element = u32;
