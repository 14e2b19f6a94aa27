use std::sync::Arc;

use super::gb::{buchberger, normal_form};
use super::ideal::Ideal;
use super::monomial::{Monomial, MonomialOrder};
use super::parse::{parse_polynomial, SyntaxError};
use super::poly::{PolyRing, Polynomial};
use crate::error::{Error, Result};

/// `S / I` with `I` held as a reduced Gröbner basis. Elements are normal forms.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    ambient: Arc<PolyRing>,
    defining: Ideal,
    homogeneous: bool,
}

impl PartialEq for QuotientRing {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.defining.groebner_basis() == other.defining.groebner_basis()
    }
}

impl Eq for QuotientRing {}

impl QuotientRing {
    pub fn new(ambient: Arc<PolyRing>, relations: Vec<Polynomial>) -> Result<Self> {
        let defining = Ideal::new(ambient.clone(), relations)?;
        Self::from_ideal(defining)
    }

    pub fn from_ideal(defining: Ideal) -> Result<Self> {
        if defining.is_unit() {
            return Err(Error::ZeroRing);
        }
        let homogeneous = defining.is_homogeneous();
        Ok(QuotientRing { ambient: defining.ring().clone(), defining, homogeneous })
    }

    pub fn polynomial_ring(ambient: Arc<PolyRing>) -> Self {
        QuotientRing { defining: Ideal::zero(ambient.clone()), ambient, homogeneous: true }
    }

    pub fn ambient(&self) -> &Arc<PolyRing> {
        &self.ambient
    }

    pub fn defining_ideal(&self) -> &Ideal {
        &self.defining
    }

    pub fn gb(&self) -> &[Polynomial] {
        self.defining.groebner_basis()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn nvars(&self) -> usize {
        self.ambient.nvars()
    }

    pub fn same_as(&self, other: &QuotientRing) -> bool {
        std::ptr::eq(self, other) || self == other
    }

    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        if self.gb().is_empty() {
            return f.clone();
        }
        normal_form(&self.ambient, f, self.gb())
    }

    pub fn is_zero(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero()
    }

    pub fn one(&self) -> Polynomial {
        self.ambient.one()
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.ambient.add(f, g)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.ambient.sub(f, g)
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        self.ambient.neg(f)
    }

    pub fn scale(&self, f: &Polynomial, c: u32) -> Polynomial {
        self.ambient.scale(f, c)
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.reduce(&self.ambient.mul(f, g))
    }

    /// The ideal of `S` generated by `gens` and the defining ideal; ideals of
    /// the quotient are handled through these preimages.
    pub fn ideal(&self, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut all = gens;
        all.extend(self.gb().iter().cloned());
        Ideal::new(self.ambient.clone(), all)
    }

    pub fn is_unit(&self, f: &Polynomial) -> bool {
        let f = self.reduce(f);
        if f.is_zero() {
            return false;
        }
        if f.as_constant().is_some() {
            return true;
        }
        self.ideal(vec![f]).map(|i| i.is_unit()).unwrap_or(false)
    }

    /// Inverse of a unit: the normal form of `s` modulo `I + (s·f − 1)` under
    /// an order eliminating `s`.
    pub fn inverse(&self, f: &Polynomial) -> Option<Polynomial> {
        let f = self.reduce(f);
        if let Some(c) = f.as_constant() {
            return Some(self.ambient.constant(self.ambient.field().inv(c)));
        }
        if !self.is_unit(&f) {
            return None;
        }
        let amb = &self.ambient;
        let mut names = vec![fresh_variable(amb, "s")];
        names.extend(amb.variables().iter().cloned());
        let mut weights = vec![1];
        weights.extend_from_slice(amb.weights());
        let ext = PolyRing::with_weights(amb.field(), names, MonomialOrder::Elimination(1), weights).ok()?;
        let lift = |g: &Polynomial| shift_front(&ext, g);
        let s = ext.var(0);
        let mut gens: Vec<Polynomial> = self.gb().iter().map(lift).collect();
        gens.push(ext.sub(&ext.mul(&s, &lift(&f)), &ext.one()));
        let gb = buchberger(&ext, &gens);
        let nf = normal_form(&ext, &s, &gb);
        if nf.terms().iter().any(|(m, _)| m.exponents()[0] != 0) {
            return None;
        }
        let back = amb.from_terms(
            nf.terms().iter().map(|(m, c)| (Monomial::from_exponents(m.exponents()[1..].to_vec()), *c)).collect(),
        );
        Some(self.reduce(&back))
    }

    pub fn parse(&self, text: &str) -> std::result::Result<Polynomial, SyntaxError> {
        parse_polynomial(&self.ambient, text).map(|f| self.reduce(&f))
    }

    pub fn display(&self, f: &Polynomial) -> String {
        self.ambient.display(f)
    }

    pub(crate) fn without_grading(mut self) -> Self {
        self.homogeneous = false;
        self
    }
}

pub(crate) fn fresh_variable(ring: &PolyRing, base: &str) -> String {
    let mut name = base.to_string();
    let mut k = 0;
    while ring.variable_index(&name).is_some() {
        name = format!("{base}{k}");
        k += 1;
    }
    name
}

fn shift_front(target: &PolyRing, f: &Polynomial) -> Polynomial {
    target.from_terms(
        f.terms()
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0];
                e.extend_from_slice(m.exponents());
                (Monomial::from_exponents(e), *c)
            })
            .collect(),
    )
}

/// `R_f = R[t] / (t·f − 1)`, the coordinate ring of the basic open `D(f)`.
#[derive(Clone, Debug)]
pub struct LocalizedRing {
    base: Arc<QuotientRing>,
    element: Polynomial,
    presentation: Arc<QuotientRing>,
    inverse_var: usize,
}

impl LocalizedRing {
    pub fn base(&self) -> &Arc<QuotientRing> {
        &self.base
    }

    pub fn element(&self) -> &Polynomial {
        &self.element
    }

    pub fn presentation(&self) -> &Arc<QuotientRing> {
        &self.presentation
    }

    /// Index of the adjoined inverse variable in the presentation.
    pub fn inverse_variable(&self) -> usize {
        self.inverse_var
    }

    /// Image of an element of the base ring.
    pub fn embed(&self, f: &Polynomial) -> Polynomial {
        self.presentation.reduce(&append_zero(self.presentation.ambient(), f))
    }
}

fn append_zero(target: &PolyRing, f: &Polynomial) -> Polynomial {
    target.from_terms(
        f.terms()
            .iter()
            .map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                e.push(0);
                (Monomial::from_exponents(e), *c)
            })
            .collect(),
    )
}

/// Adjoins an inverse of `f`. The fresh variable is named `t` unless that
/// name is taken, in which case `t0`, `t1`, ... are tried.
pub fn localize_ring(base: &Arc<QuotientRing>, f: &Polynomial) -> Result<LocalizedRing> {
    base.ambient().check(f)?;
    let f = base.reduce(f);
    if f.is_zero() {
        return Err(Error::LocalizeAtZero);
    }
    let amb = base.ambient();
    let mut names = amb.variables().to_vec();
    names.push(fresh_variable(amb, "t"));
    let mut weights = amb.weights().to_vec();
    weights.push(1);
    let ext = Arc::new(PolyRing::with_weights(amb.field(), names, amb.order(), weights)?);
    let t = ext.var(amb.nvars());
    let mut gens: Vec<Polynomial> = base.gb().iter().map(|g| append_zero(&ext, g)).collect();
    gens.push(ext.sub(&ext.mul(&t, &append_zero(&ext, &f)), &ext.one()));
    let presentation = QuotientRing::new(ext, gens)?.without_grading();
    Ok(LocalizedRing { base: base.clone(), element: f, presentation: Arc::new(presentation), inverse_var: amb.nvars() })
}
