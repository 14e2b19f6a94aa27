//! Polynomial arithmetic over prime fields, Gröbner bases, ideal operations
//! and quotient rings.

mod field;
pub mod gb;
mod ideal;
mod monomial;
mod parse;
mod poly;
mod quotient;

pub use field::{PrimeField, DEFAULT_PRIME};
pub use gb::{buchberger, normal_form, s_polynomial, Engine, LeadTerm, ModuleOrder, Vector};
pub use ideal::{eliminate, ideal_colon, ideal_intersection, Colon, Ideal};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_matrix_rows, parse_polynomial, parse_polynomial_list, SyntaxError};
pub use poly::{PolyRing, Polynomial};
pub use quotient::{localize_ring, LocalizedRing, QuotientRing};
