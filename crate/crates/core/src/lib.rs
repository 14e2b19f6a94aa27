//! Linkage of modules and of sheaves of modules presented on affine charts,
//! computed over quotients of polynomial rings over prime fields.

pub mod error;
pub mod linkage;
pub mod module;
pub mod ring;
pub mod sheaf;

pub use error::{Error, Result};
