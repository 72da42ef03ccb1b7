//! Representations of the n-Kronecker quiver `1 ⇉ 2` (n arrows).
//!
//! Hom spaces are kernels of the intertwining system. `Ext¹` has two
//! independent routes: the Euler-form identity and the cokernel of the
//! projective presentation.

mod forms;
mod hom;
mod iso;
mod module;
mod translate;

pub use forms::{coxeter, coxeter_inverse, coxeter_power, euler_form, DimensionVector};
pub use hom::{
    end_dim, ext1_cocycles, ext1_dim, ext1_dim_via_resolution, extension, hom_basis, hom_dim, is_generated_by,
    trace_submodule,
};
pub use iso::{find_isomorphism, IsoResult, IsoSearch};
pub use module::{KroneckerModule, Layers, Morphism, SubmodulePair};
pub use translate::{ar_translate, tau, tau_inverse, tau_power, TranslateDirection};
