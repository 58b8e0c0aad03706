//! Exact-arithmetic invariants of Bott-Samelson varieties.
//!
//! Given a root system and a word of simple roots, this crate computes the
//! numerical geometry of the corresponding Bott-Samelson variety: divisor
//! classes in the standard basis, Chow-ring products in the square-free
//! monomial basis, pseudoeffective and nef cones of divisors and of
//! codimension-two cycles, dense-orbit and automorphism criteria,
//! Richardson-desingularization data, and explicit log Fano certificates.
//! All arithmetic is exact: integers, big rationals, and exact polyhedral
//! cone duality.

pub mod bsword;
pub mod chow;
pub mod cones;
pub mod error;
mod minors;
mod mpoly;
pub mod num;
pub mod orbits;
pub mod logfano;
pub mod polyhedra;
pub mod richardson;
pub mod root_system;
pub mod weyl;

pub use bsword::{BSWord, DivisorClass};
pub use chow::{subsets, ChowRing, CycleClass};
pub use cones::{
    effective_cone_2cycles, effective_cone_divisors, intersection_matrix, is_ample,
    is_globally_generated, nef2_cone, nef_divisor_cone, sigma_class, sigma_classes, EffConeReport,
    SigmaClass,
};
pub use error::{Error, Result};
pub use logfano::{ample_recipe, log_fano_certificate, LogFanoCertificate};
pub use orbits::{
    aut_stabilization, dense_orbit_criterion, greedy_reduced_subword, tangent_weights,
    DenseOrbitReport, FixedPoint,
};
pub use polyhedra::RationalCone;
pub use richardson::{intersection_desing, RichardsonReport};
pub use root_system::{
    enumerate_positive_roots, pairing, reflect, CartanMatrix, RootDatum, Weight,
};
pub use weyl::{
    bruhat_leq, demazure_product, enumerate_elements, inversion_set, longest_element,
    ordinary_product, WeylElement,
};
