//! Exact-arithmetic toolkit for abstract one-skeleta (GKM graphs).
//!
//! An abstract one-skeleton is a `d`-valent graph whose oriented edges carry
//! covectors (the axial function) together with a connection that transports
//! edge stars along edges, subject to the axioms A1-A3. On top of that data
//! this crate computes combinatorial Betti numbers, the graded cohomology
//! ring of vertex-indexed polynomials with edge-divisibility compatibility,
//! Thom-class generators, blow-ups, reductions at regular levels, symplectic
//! cutting, Kirwan maps and divided-difference Schubert calculus on Johnson
//! graphs.
//!
//! Everything is exact: rationals never round, divisibility of polynomials
//! by linear forms is decided precisely, and linear systems are solved by
//! fraction-free elimination. The crate is `no_std` (it allocates, but does
//! no IO); file formats and the command-line surface live in the companion
//! `gkm-cli` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod blowup;
pub mod builders;
pub mod cohomology;
pub mod covector;
pub mod holonomy;
pub mod linalg;
pub mod polarize;
pub mod poly;
pub mod rational;
pub mod reduction;
pub mod schubert;
pub mod skeleton;

pub use covector::Covector;
pub use poly::Polynomial;
pub use rational::Rational;
pub use skeleton::{EdgeId, OneSkeleton, SubSkeleton, VertexId};
