#![allow(dead_code)]

use std::sync::Arc;

use linkage_core::module::{Matrix, PresentedModule, SearchContext};
use linkage_core::ring::{
    parse_matrix_rows, parse_polynomial, MonomialOrder, PolyRing, Polynomial, PrimeField, QuotientRing,
};

pub const P: u32 = 32003;

pub fn poly_ring(vars: &[&str], order: MonomialOrder) -> Arc<PolyRing> {
    let names = vars.iter().map(|s| s.to_string()).collect();
    Arc::new(PolyRing::new(PrimeField::new(P).unwrap(), names, order).unwrap())
}

pub fn quotient(vars: &[&str], rels: &[&str]) -> Arc<QuotientRing> {
    let amb = poly_ring(vars, MonomialOrder::Grevlex);
    let rels = rels.iter().map(|r| parse_polynomial(&amb, r).unwrap()).collect();
    Arc::new(QuotientRing::new(amb, rels).unwrap())
}

pub fn poly(r: &QuotientRing, text: &str) -> Polynomial {
    r.parse(text).unwrap()
}

pub fn mat(r: &QuotientRing, text: &str) -> Matrix {
    let rows = parse_matrix_rows(r.ambient(), text).unwrap();
    Matrix::from_rows(rows, 0).unwrap().reduced(r)
}

pub fn coker(r: &Arc<QuotientRing>, text: &str) -> PresentedModule {
    PresentedModule::new(r.clone(), mat(r, text))
}

pub fn ctx() -> SearchContext {
    SearchContext::default()
}

pub fn nodal() -> Arc<QuotientRing> {
    quotient(&["x", "y"], &["x*y"])
}

/// Small modules over the nodal ring used by several property tests.
pub fn nodal_modules() -> Vec<PresentedModule> {
    let r = nodal();
    vec![
        coker(&r, "[[x]]"),
        coker(&r, "[[y]]"),
        coker(&r, "[[x, y]]"),
        coker(&r, "[[x^2]]"),
        coker(&r, "[[x, 0],[0, y]]"),
        coker(&r, "[[x, y^2]]"),
        PresentedModule::free(r.clone(), 1),
        coker(&r, "[[x],[0]]"),
    ]
}
