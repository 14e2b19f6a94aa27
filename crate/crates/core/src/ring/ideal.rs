use std::sync::{Arc, OnceLock};

use super::gb::{buchberger, normal_form};
use super::monomial::{Monomial, MonomialOrder};
use super::poly::{PolyRing, Polynomial};
use crate::error::{Error, Result};

/// An ideal of a polynomial ring; the reduced Gröbner basis is computed on
/// first use and cached.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
            && self.groebner_basis() == other.groebner_basis()
    }
}

impl Eq for Ideal {}

impl Ideal {
    pub fn new(ring: Arc<PolyRing>, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            ring.check(g)?;
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring, generators, gb: OnceLock::new() })
    }

    pub fn zero(ring: Arc<PolyRing>) -> Self {
        Ideal { ring, generators: Vec::new(), gb: OnceLock::new() }
    }

    pub fn unit(ring: Arc<PolyRing>) -> Self {
        let one = ring.one();
        Ideal { ring, generators: vec![one], gb: OnceLock::new() }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn groebner_basis(&self) -> &[Polynomial] {
        self.gb.get_or_init(|| buchberger(&self.ring, &self.generators))
    }

    pub fn is_zero(&self) -> bool {
        self.groebner_basis().is_empty()
    }

    pub fn is_unit(&self) -> bool {
        matches!(self.groebner_basis(), [g] if g.as_constant().is_some())
    }

    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        normal_form(&self.ring, f, self.groebner_basis())
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        same_ring(self, other)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(self.ring.clone(), gens)
    }

    /// True when every reduced Gröbner basis element is homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.groebner_basis().iter().all(|g| self.ring.is_homogeneous(g))
    }

    pub fn display(&self) -> String {
        let parts: Vec<String> = self.generators.iter().map(|g| self.ring.display(g)).collect();
        format!("({})", parts.join(", "))
    }
}

fn same_ring(a: &Ideal, b: &Ideal) -> Result<()> {
    if Arc::ptr_eq(&a.ring, &b.ring) || a.ring == b.ring {
        Ok(())
    } else {
        Err(Error::DifferentRings)
    }
}

fn fresh_name(ring: &PolyRing, base: &str) -> String {
    let mut name = base.to_string();
    let mut k = 0;
    while ring.variable_index(&name).is_some() {
        name = format!("{base}{k}");
        k += 1;
    }
    name
}

/// Moves exponent `perm[i]` of the source into slot `i` of the target.
fn permute(target: &PolyRing, f: &Polynomial, perm: &[usize], extra_front: usize) -> Polynomial {
    let terms = f
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut e = vec![0u32; extra_front];
            e.extend(perm.iter().map(|&j| m.exponents()[j]));
            (Monomial::from_exponents(e), *c)
        })
        .collect();
    target.from_terms(terms)
}

/// Eliminates the variables listed in `vars` and returns `I ∩ k[remaining]`
/// as an ideal of the original ring.
pub fn eliminate(ideal: &Ideal, vars: &[usize]) -> Result<Ideal> {
    let ring = ideal.ring();
    if vars.is_empty() {
        return Ok(ideal.clone());
    }
    if vars.iter().any(|&v| v >= ring.nvars()) {
        return Err(Error::structure("eliminated variable out of range"));
    }
    let mut perm: Vec<usize> = vars.to_vec();
    perm.dedup();
    let k = perm.len();
    perm.extend((0..ring.nvars()).filter(|i| !vars.contains(i)));
    let names = perm.iter().map(|&i| ring.variables()[i].clone()).collect();
    let weights = perm.iter().map(|&i| ring.weights()[i]).collect();
    let elim = PolyRing::with_weights(ring.field(), names, MonomialOrder::Elimination(k), weights)?;
    let gens: Vec<Polynomial> = ideal.generators().iter().map(|g| permute(&elim, g, &perm, 0)).collect();
    let gb = buchberger(&elim, &gens);
    let mut inverse = vec![0usize; perm.len()];
    for (slot, &src) in perm.iter().enumerate() {
        inverse[src] = slot;
    }
    let kept = gb
        .into_iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0)))
        .map(|g| permute(ring, &g, &inverse, 0))
        .collect();
    Ideal::new(ring.clone(), kept)
}

/// `I ∩ J` by eliminating `t` from `t·I + (1 − t)·J`.
pub fn ideal_intersection(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    same_ring(i, j)?;
    let ring = i.ring();
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(ring.clone()));
    }
    let mut names = vec![fresh_name(ring, "t")];
    names.extend(ring.variables().iter().cloned());
    let mut weights = vec![1];
    weights.extend_from_slice(ring.weights());
    let ext = PolyRing::with_weights(ring.field(), names, MonomialOrder::Elimination(1), weights)?;
    let ident: Vec<usize> = (0..ring.nvars()).collect();
    let t = ext.var(0);
    let one_minus_t = ext.sub(&ext.one(), &t);
    let mut gens = Vec::new();
    for g in i.groebner_basis() {
        gens.push(ext.mul(&t, &permute(&ext, g, &ident, 1)));
    }
    for g in j.groebner_basis() {
        gens.push(ext.mul(&one_minus_t, &permute(&ext, g, &ident, 1)));
    }
    let lifted = Ideal::new(Arc::new(ext), gens)?;
    let res = eliminate(&lifted, &[0])?;
    let ext = res.ring().clone();
    let back: Vec<usize> = (1..ext.nvars()).collect();
    let gens = res.generators().iter().map(|g| permute(ring, g, &back, 0)).collect();
    Ideal::new(ring.clone(), gens)
}

/// Result of `I : J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Colon {
    pub ideal: Ideal,
    /// Set when `J` is the zero ideal, in which case the colon is the unit ideal.
    pub divisor_is_zero: bool,
}

/// `I : J = ∩_g (I : g)` over the generators `g` of `J`.
pub fn ideal_colon(i: &Ideal, j: &Ideal) -> Result<Colon> {
    same_ring(i, j)?;
    let ring = i.ring();
    if j.is_zero() {
        return Ok(Colon { ideal: Ideal::unit(ring.clone()), divisor_is_zero: true });
    }
    let mut acc: Option<Ideal> = None;
    for g in j.generators() {
        if i.contains(g) {
            continue;
        }
        let principal = Ideal::new(ring.clone(), vec![g.clone()])?;
        let meet = ideal_intersection(i, &principal)?;
        let quotients = meet
            .groebner_basis()
            .iter()
            .map(|h| ring.exact_div(h, g).ok_or_else(|| Error::Internal("inexact division in colon".into())))
            .collect::<Result<Vec<_>>>()?;
        let part = Ideal::new(ring.clone(), quotients)?;
        acc = Some(match acc {
            None => part,
            Some(a) => ideal_intersection(&a, &part)?,
        });
    }
    let ideal = acc.unwrap_or_else(|| Ideal::unit(ring.clone()));
    Ok(Colon { ideal, divisor_is_zero: false })
}
