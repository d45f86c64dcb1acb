//! Flow polytopes of quivers: tightening, regular subdivisions into
//! compressed cells, classification up to lattice equivalence in low
//! dimension, pulling triangulations, Ehrhart polynomials and toric ideals.

pub mod catalog;
pub mod cli;
pub mod ehrhart;
pub mod exact_math;
pub mod graphs;
pub mod io;
pub mod polytopes;
pub mod quivers;
pub mod subdivision;
pub mod toric;
pub mod triangulation;
