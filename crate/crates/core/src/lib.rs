//! Exact-arithmetic toolkit around the correspondence between odd sums of
//! two squares and determinants of achiral knots.
//!
//! The crate is organized along the pipeline of that correspondence:
//!
//! - [`numtheory`] — two-square representation counts, totient/omega, and the
//!   determinant-based chirality filters.
//! - [`tangles`] — continued fractions, the Krebes pair calculus for rational
//!   tangles, and the three-strand diagram-algebra pairing.
//! - [`diagrams`] — combinatorial link diagrams, checkerboard structure, and
//!   three independent determinant computations (Goeritz matrix, monocyclic
//!   state enumeration, spanning-tree counts).
//! - [`plangraph`] — planar multigraphs as combinatorial maps: duals,
//!   self-duality, exact spanning-tree counts.
//! - [`realize`] — constructions realizing admissible determinants by achiral
//!   diagrams, with verified certificates.
//! - [`census`] — enumeration of rational knots by determinant.
//! - [`alexander`] — Alexander polynomials of two-bridge knots from all-even
//!   continued fractions and the leading-coefficient laws.
//!
//! With the default `parallel` feature the monocyclic state enumeration runs
//! on a rayon thread pool; disabling it selects a sequential kernel with
//! identical results.

pub mod alexander;
pub mod census;
pub mod diagrams;
pub mod exact;
pub mod numtheory;
pub mod plangraph;
pub mod realize;
pub mod tangles;
