//! Toolkit for weakly distance-regular digraphs and their attached
//! association schemes.
//!
//! The crate builds finite digraphs (directed cycles, lexicographic
//! products, relation unions), computes two-way distance partitions and
//! exact intersection tensors, decides P-polynomiality of an ordering by
//! two independent routes (a tensor shape condition and an exact-rational
//! matrix oracle), and brute-force enumerates the relation unions that
//! stay weakly distance-regular over a fixed scheme.

pub mod attached;
pub mod classify;
pub mod digraph;
pub mod families;
pub mod io;
pub mod matrix;
pub mod ppoly;
pub mod scheme;

/// Exact scalar used by the concrete matrix oracle.
pub type Rational = num_rational::Ratio<i64>;
/// Dense square matrix over [`Rational`].
pub type RationalMatrix = matrix::SquareMatrix<Rational>;
/// Polynomial over [`Rational`].
pub type RationalPoly = matrix::Polynomial<Rational>;
