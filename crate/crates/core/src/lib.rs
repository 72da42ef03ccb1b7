//! Exact computations with representations of the n-Kronecker quiver.
//!
//! The crate is organised bottom-up:
//!
//! * [`field`] and [`linalg`]: exact arithmetic over `GF(p)` and the rationals.
//! * [`kron`]: modules, morphisms, Hom/Ext, the Auslander-Reiten translate.
//! * [`bristle`]: the bristles `B(λ)`, bristled and saturated modules.
//! * [`families`]: preinjective and preprojective modules.
//! * [`cover`]: representations of the universal cover and their push-downs.
//! * [`harness`]: module files, reports and the verification scenarios.

pub mod bristle;
pub mod cover;
mod error;
pub mod families;
pub mod field;
pub mod harness;
pub mod kron;
pub mod linalg;

pub use error::{Error, Result};
