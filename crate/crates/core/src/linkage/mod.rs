//! Transpose, the λ operator, stability and linkage of modules and ideals.

mod ideals;
mod operators;
mod report;

pub use ideals::{
    annihilator_of, ass_member, check_certificate, ideal_link_partner, image_isomorphic_to,
    linked_submodule_from_prime, maximal_linked_among, quotient_generators, verify_ideal_link, AssMembership,
    DomainCertificate, LinkedSubmodule, MaximalLinked,
};
pub use operators::{
    is_linked_module, is_linked_pair, is_projective, is_stable, lambda_op, stable_part, transpose,
    transpose_of_presentation, verify_lambda_sequence, Stability, StablePart,
};
pub use report::{Evidence, LinkageReport, Ternary, Verdict};

#[cfg(test)]
mod tests;
