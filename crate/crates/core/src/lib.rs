//! Spherical systems of wonderful varieties.
//!
//! A spherical system on a semisimple root system is a triple
//! `(Sp, Σ, A)`: a set of simple roots, a set of spherical roots and a
//! finite set of colors with their pairings. This crate validates the
//! axioms, computes quotients and localizations, reduces systems to
//! primitive pieces and enumerates small systems up to isomorphism.
//!
//! ```
//! use wonder_systems::{format::parse_system, RankOneTable};
//!
//! let text = "group: A1\nsp: -\nsigma:\n  1\nA:\n  D+: 1\n  D-: 1\n";
//! let sys = parse_system(text).unwrap();
//! assert!(sys.validate(&RankOneTable::builtin()).is_valid());
//! ```

pub mod enumerate;
pub mod error;
pub mod format;
pub mod linalg;
pub mod lp;
pub mod quotient;
pub mod reduction;
pub mod render;
pub mod rankone;
pub mod rootsystem;
pub mod system;

pub use error::{Error, Result};
pub use rankone::RankOneTable;
pub use rootsystem::{GroupSpec, RootSystem, Weight};
