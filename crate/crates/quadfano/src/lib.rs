//! Intersection-theoretic toolkit for blowups of the smooth quadric threefold along curves:
//! K3 lattice arithmetic, curves on low-degree surfaces, weak Fano classification and the
//! resulting Sarkisov links.

pub mod audit;
pub mod catalog;
pub mod classifier;
pub mod error;
pub mod k3;
pub mod lattice;
pub mod surfaces;
pub mod tables;

pub use classifier::{
    classify, nmax_refined, Classification, Containment, CurveInstance, TriState, Verdict,
};
pub use error::{Error, LatticeError, Result};
pub use lattice::{DivisorClass, IntersectionLattice};
