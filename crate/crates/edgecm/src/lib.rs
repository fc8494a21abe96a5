//! Edge ideals of weighted oriented graphs: unmixedness and
//! Cohen-Macaulayness at desk scale.
//!
//! A weighted oriented graph is a simple undirected graph together with an
//! orientation of every edge and a positive integer weight on every vertex.
//! Its edge ideal is the monomial ideal generated by `x * y^w(y)` over the
//! directed edges `(x, y)`. This crate decides whether that ideal is unmixed
//! or Cohen-Macaulay along three independent routes:
//!
//! * [`classifier`] — a combinatorial certificate for underlying graphs of
//!   girth at least 5, built from pendant-edge and basic-5-cycle conditions;
//! * [`oriented`] — the strong-vertex-cover criterion for unmixedness,
//!   decided by exhaustive cover enumeration;
//! * [`oracle`] — an algebraic oracle: polarization to a squarefree ideal,
//!   the Stanley-Reisner complex, and the Reisner criterion via reduced
//!   simplicial homology over an exact field.
//!
//! The [`harness`] module cross-validates the three routes over enumerated
//! instance families and explores the triangle-free analogue of the girth-5
//! classification.

pub mod bits;
pub mod classifier;
pub mod complex;
pub mod fixtures;
pub mod graph;
pub mod harness;
pub mod ideal;
pub mod linalg;
pub mod oracle;
pub mod oriented;

pub use classifier::{classify, Certificate, Classification, Clause};
pub use graph::{Graph, PcDecomposition, VertexSet};
pub use ideal::{Monomial, MonomialIdeal};
pub use oracle::FieldChoice;
pub use oriented::{OrientedGraph, UnmixedVerdict};
