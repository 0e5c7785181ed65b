//! Exact verification laboratory for intersection patterns of planar convex sets.
//!
//! Everything here is exact: coordinates are arbitrary-precision rationals,
//! emptiness and coverage questions are decided by an exact rational LP, and
//! the combinatorial searches (transversals, clique enumeration, isomorph-free
//! generation, collapsibility) are exhaustive. No floating point participates
//! in any verdict.
//!
//! Module map:
//! - [`geom`] — rational planar convex geometry: hulls, half-plane
//!   representations, feasibility, union-coverage, hole triangles.
//! - [`redblue`] — red/blue 3-uniform cliques: transversals, forbidden
//!   configuration detectors, f-vectors, 2-collapsibility, canonical forms.
//! - [`enumeration`] — isomorph-free exhaustive generation of the blue
//!   hypergraphs with transversal number at least 3 and the catalog of named
//!   classes.
//! - [`constructions`] — generators and verifiers for the convex families
//!   (nine sets, polygon, extended polygon, triangle, 2k) and the nerve
//!   bridge from geometry to red/blue cliques.
//! - [`bounds`] — arithmetic of the extremal functions and the published
//!   value tables.

pub mod bounds;
pub mod constructions;
pub mod enumeration;
pub mod geom;
pub mod redblue;
pub mod rng;
