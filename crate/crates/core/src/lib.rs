//! Exact finite-field algebra for planar monomials, Dickson polynomials,
//! exceptionality criteria and monomial hyperovals.

pub mod exceptional;
pub mod geometry;
pub mod gf;
pub mod numtheory;
pub mod planar;
pub mod poly;
pub mod report;
pub mod verify;
