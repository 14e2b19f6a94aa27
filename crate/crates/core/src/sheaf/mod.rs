//! Sheaves of modules presented on affine charts glued along basic opens.

mod data;
mod ops;
mod report;
mod validate;

pub use data::{Chart, GluedSheaf, RingMap, Transition};
pub use ops::{
    glue_linked, restrict, sheaf_has_linked_subsheaf, sheaf_is_linked, sheaf_is_locally_free, sheaf_lambda,
    sheaf_transpose, LinkedGlueing, SubsheafReport,
};
pub use report::{ChartReport, SheafReport};
pub use validate::validate_glueing;
