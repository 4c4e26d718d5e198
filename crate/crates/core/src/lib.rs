//! Exact computational toolkit for the six-dimensional hyperoctahedral
//! group: wreath-product element arithmetic with matrix and twelve-point
//! views, classification of the icosahedral subgroups by character type,
//! golden-ratio projection operators onto the two invariant 3D subspaces,
//! and the intersection graphs of the 192 crystallographic representations
//! with their exact integer spectra.
//!
//! Everything is computed over exact domains (integers, rationals, Q(√5));
//! floating point appears only in optional export paths.

pub mod atlas;
pub mod chartab;
pub mod claims;
pub mod cli;
pub mod ggraph;
pub mod group;
pub mod icosa;
pub mod intlin;
pub mod perm;
pub mod pipeline;
pub mod projection;
pub mod qf;
pub mod qfmat;
pub mod store;

pub use chartab::{CharacterVector, IcosaIrrep, IcosaMultiplicities, SubgroupName};
pub use group::{closure, intersect, GroupSet, SubgroupClass};
pub use icosa::{IcosaRep, IsoType, RepCatalog};
pub use perm::{IntMat6, Perm12, Perm6, SignedPerm};
pub use qf::QfElem;
