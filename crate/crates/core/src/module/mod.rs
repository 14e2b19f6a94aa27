//! Finitely presented modules over quotient rings.

mod hom;
mod iso;
mod matrix;
mod presented;
mod span;

pub use hom::{
    dual, dual_with_functionals, free_resolution, functional_embedding, hom_module, is_torsionless, syzygy_basis,
    verify_resolution, Dual, FreeResolution, HomModule, ModuleHom,
};
pub(crate) use hom::{projected_syzygies, prune_columns};
pub use iso::{is_isomorphic, IsoVerdict, SearchContext};
pub use matrix::Matrix;
pub use presented::{
    add_free, betti, direct_sum, localize_module, localize_module_in, minimalize, Betti, Grading, Minimality,
    Minimized, PresentedModule,
};
pub use span::{Lifter, Span};
