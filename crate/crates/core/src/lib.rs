//! Exact model of the three dimensional left covariant differential calculus
//! on the quantum group SU_q(2): the braided exterior algebra over the
//! left-invariant 1-forms, a Hodge duality built from a quantum Cartan-Killing
//! metric, and the Hodge-de Rham Dirac operator together with its full
//! spectrum and its q -> 1 round-sphere limit.
//!
//! All symbolic computation happens over the field of rational functions in
//! s = q^(1/2) with Gaussian-rational coefficients ([`qscalar::QScalar`]),
//! extended where needed by a single explicit square root (volume
//! normalisation) so that every operator identity in the library is decided
//! exactly, not numerically.

pub mod dirac;
pub mod excalc;
pub mod hodge;
pub mod linalg;
pub mod qscalar;
pub mod uqsu2;
