//! Submodules of free modules over a quotient ring, backed by module
//! Gröbner bases over the ambient polynomial ring.
//!
//! A submodule `U ⊆ R^n` with `R = S/I` is handled through its preimage in
//! `S^n`, generated by the columns together with `g·e_i` for `g` in the
//! Gröbner basis of `I`.

use crate::ring::{Engine, ModuleOrder, Polynomial, QuotientRing, Vector};

fn ideal_generators(ring: &QuotientRing, rank: usize, width: usize) -> Vec<Vector> {
    let mut out = Vec::new();
    for i in 0..rank {
        for g in ring.gb() {
            let mut v = vec![Polynomial::zero(); width];
            v[i] = g.clone();
            out.push(v);
        }
    }
    out
}

/// Column span with a membership test.
#[derive(Clone, Debug)]
pub struct Span {
    rank: usize,
    order: ModuleOrder,
    gb: Vec<Vector>,
}

impl Span {
    pub fn new(ring: &QuotientRing, rank: usize, columns: &[Vec<Polynomial>]) -> Self {
        let order = ModuleOrder::TermOverPosition;
        let engine = Engine::new(ring.ambient(), order);
        let mut gens: Vec<Vector> = columns.to_vec();
        gens.extend(ideal_generators(ring, rank, rank));
        Span { rank, order, gb: engine.groebner(gens) }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn reduce(&self, ring: &QuotientRing, v: &[Polynomial]) -> Vector {
        Engine::new(ring.ambient(), self.order).reduce(v.to_vec(), &self.gb)
    }

    pub fn contains(&self, ring: &QuotientRing, v: &[Polynomial]) -> bool {
        self.reduce(ring, v).iter().all(|p| p.is_zero())
    }

    /// True when the span is the whole free module.
    pub fn is_everything(&self, ring: &QuotientRing) -> bool {
        (0..self.rank).all(|i| {
            let mut e = vec![Polynomial::zero(); self.rank];
            e[i] = ring.one();
            self.contains(ring, &e)
        })
    }
}

/// Expresses vectors as combinations of fixed columns and computes the
/// relations among those columns.
///
/// The columns `c_j` are tagged as `(c_j, e_j)` in `S^{n + k}` and a Gröbner
/// basis is taken in position-over-term order with the data components first,
/// so basis elements whose data part vanishes carry syzygies in their tags.
#[derive(Clone, Debug)]
pub struct Lifter {
    rank: usize,
    ncols: usize,
    gb: Vec<Vector>,
}

impl Lifter {
    pub fn new(ring: &QuotientRing, rank: usize, columns: &[Vec<Polynomial>]) -> Self {
        let ncols = columns.len();
        let width = rank + ncols;
        let mut gens = Vec::with_capacity(ncols);
        for (j, c) in columns.iter().enumerate() {
            let mut v = c.clone();
            v.resize(width, Polynomial::zero());
            v[rank + j] = ring.one();
            gens.push(v);
        }
        gens.extend(ideal_generators(ring, rank, width));
        let engine = Engine::new(ring.ambient(), ModuleOrder::PositionOverTerm);
        Lifter { rank, ncols, gb: engine.groebner(gens) }
    }

    /// Coefficients `a` with `v = Σ a_j c_j` in `R^n`, if `v` lies in the span.
    pub fn lift(&self, ring: &QuotientRing, v: &[Polynomial]) -> Option<Vec<Polynomial>> {
        let mut w = v.to_vec();
        w.resize(self.rank + self.ncols, Polynomial::zero());
        let engine = Engine::new(ring.ambient(), ModuleOrder::PositionOverTerm);
        let r = engine.reduce(w, &self.gb);
        if r[..self.rank].iter().any(|p| !p.is_zero()) {
            return None;
        }
        Some(r[self.rank..].iter().map(|p| ring.reduce(&ring.neg(p))).collect())
    }

    /// Generators of the relation module of the columns over `R`.
    pub fn syzygies(&self, ring: &QuotientRing) -> Vec<Vec<Polynomial>> {
        let mut out: Vec<Vec<Polynomial>> = Vec::new();
        for g in &self.gb {
            if g[..self.rank].iter().any(|p| !p.is_zero()) {
                continue;
            }
            let tag: Vec<Polynomial> = g[self.rank..].iter().map(|p| ring.reduce(p)).collect();
            if tag.iter().any(|p| !p.is_zero()) && !out.contains(&tag) {
                out.push(tag);
            }
        }
        out
    }
}
