//! Exact representation data for the Z3-orbifold of the affine sl₂ vertex
//! operator algebra at level `k`.
//!
//! The crate enumerates the `9(k+1)` irreducible modules, assigns their
//! conformal weights as exact fractions, encodes quantum dimensions as
//! integer-polynomial residues, computes fusion products and contragredient
//! modules, and checks the fusion-ring identities these satisfy.
//!
//! ```
//! use z3orbifold::{fuse_irreducible, IrrLabel, Level};
//!
//! let k = Level::new(2).unwrap();
//! let a = IrrLabel::parse_at("t1:1:0", k).unwrap();
//! let b = IrrLabel::parse_at("t2:1:0", k).unwrap();
//! assert_eq!(fuse_irreducible(a, b, k).unwrap().to_string(), "u:0:0 + u:2:1");
//! ```

pub mod cheb;
pub mod cli;
pub mod error;
pub mod fusion;
pub mod labels;
pub mod numeric;
pub mod qdim;
pub mod rational;
pub mod vector;
pub mod verify;
pub mod weights;

pub use cheb::{cheb_u, ChebPoly};
pub use error::{Error, Result};
pub use fusion::{
    contragredient, fuse, fuse_irreducible, fusion_coefficient, sign_value, sl2_fusion_range,
    FusionTable, FusionTriple,
};
pub use labels::{enumerate_irreducibles, make_label, residue3, IrrLabel, Level, Sector};
pub use numeric::Decimal;
pub use qdim::{
    global_dimension, has_unit_qdim, qdim_exact, qdim_modulus, qdim_numeric, GlobalDimension,
    QDimElement, QDimTable,
};
pub use rational::Rational;
pub use vector::FusionVector;
pub use verify::{VerificationReport, VerifyConfig};
pub use weights::{base_twist_weight, conformal_weight, WeightedLabel};
