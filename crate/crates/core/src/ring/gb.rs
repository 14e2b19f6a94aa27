//! Buchberger's algorithm for submodules of `S^r`, `S` a polynomial ring.
//!
//! A module element is a dense vector of polynomials. Ideals are the rank one
//! case, so a single engine serves ideal and module computations.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};

use super::monomial::Monomial;
use super::poly::{PolyRing, Polynomial};

pub type Vector = Vec<Polynomial>;

/// Extension of the ring's monomial order to `S^r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleOrder {
    /// Lower component index dominates; within a component the ring order.
    PositionOverTerm,
    /// Ring order first, ties broken by lower component index.
    TermOverPosition,
}

/// Leading position of a nonzero vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadTerm {
    pub comp: usize,
    pub mono: Monomial,
    pub coeff: u32,
}

#[derive(Clone, Copy)]
pub struct Engine<'a> {
    pub ring: &'a PolyRing,
    pub order: ModuleOrder,
}

impl<'a> Engine<'a> {
    pub fn new(ring: &'a PolyRing, order: ModuleOrder) -> Self {
        Engine { ring, order }
    }

    pub fn cmp_pos(&self, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        match self.order {
            ModuleOrder::PositionOverTerm => b.0.cmp(&a.0).then_with(|| self.ring.cmp(a.1, b.1)),
            ModuleOrder::TermOverPosition => self.ring.cmp(a.1, b.1).then_with(|| b.0.cmp(&a.0)),
        }
    }

    fn lead_index(&self, v: &[Polynomial]) -> Option<usize> {
        match self.order {
            ModuleOrder::PositionOverTerm => v.iter().position(|p| !p.is_zero()),
            ModuleOrder::TermOverPosition => {
                let mut best: Option<usize> = None;
                for (i, p) in v.iter().enumerate() {
                    let Some(m) = p.lead_monomial() else { continue };
                    best = match best {
                        Some(b) if self.ring.cmp(m, v[b].lead_monomial().unwrap()) != Ordering::Greater => Some(b),
                        _ => Some(i),
                    };
                }
                best
            }
        }
    }

    pub fn lead(&self, v: &[Polynomial]) -> Option<LeadTerm> {
        let c = self.lead_index(v)?;
        let (m, k) = v[c].lead().unwrap();
        Some(LeadTerm { comp: c, mono: m.clone(), coeff: *k })
    }

    pub fn cmp_vectors_by_lead(&self, a: &[Polynomial], b: &[Polynomial]) -> Ordering {
        match (self.lead(a), self.lead(b)) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(x), Some(y)) => self.cmp_pos((x.comp, &x.mono), (y.comp, &y.mono)),
        }
    }

    /// `v -= c * m * g`
    fn sub_mul(&self, v: &mut Vector, c: u32, m: &Monomial, g: &[Polynomial]) {
        for (vi, gi) in v.iter_mut().zip(g) {
            if !gi.is_zero() {
                *vi = self.ring.sub_mul_term(vi, c, m, gi);
            }
        }
    }

    pub fn monic(&self, v: Vector) -> Vector {
        match self.lead(&v) {
            Some(lt) if lt.coeff != 1 => {
                let inv = self.ring.field().inv(lt.coeff);
                v.iter().map(|p| self.ring.scale(p, inv)).collect()
            }
            _ => v,
        }
    }

    fn find_divisor(&self, leads: &[(usize, Monomial, u32)], comp: usize, m: &Monomial) -> Option<usize> {
        leads.iter().position(|(c, lm, _)| *c == comp && lm.divides(m))
    }

    /// Full reduction; divisors are chosen as the first match in list order.
    pub fn reduce(&self, v: Vector, basis: &[Vector]) -> Vector {
        let leads = self.leads(basis);
        self.reduce_with(v, basis, &leads, true)
    }

    fn leads(&self, basis: &[Vector]) -> Vec<(usize, Monomial, u32)> {
        basis
            .iter()
            .map(|g| {
                let lt = self.lead(g).expect("zero vector in basis");
                (lt.comp, lt.mono, lt.coeff)
            })
            .collect()
    }

    fn reduce_with(&self, mut p: Vector, basis: &[Vector], leads: &[(usize, Monomial, u32)], full: bool) -> Vector {
        let fld = self.ring.field();
        let mut rem: Vector = vec![Polynomial::zero(); p.len()];
        while let Some(c) = self.lead_index(&p) {
            let (m, coef) = p[c].lead().cloned().unwrap();
            match self.find_divisor(leads, c, &m) {
                Some(k) => {
                    let (_, lm, lc) = &leads[k];
                    let q = lm.quotient_of(&m).unwrap();
                    self.sub_mul(&mut p, fld.div(coef, *lc), &q, &basis[k]);
                }
                None if full => {
                    let t = p[c].pop_lead().unwrap();
                    rem[c].push_smallest(t);
                }
                None => {
                    for (r, q) in rem.iter_mut().zip(p) {
                        *r = self.ring.add(r, &q);
                    }
                    return rem;
                }
            }
        }
        rem
    }

    /// Reduced Gröbner basis of the submodule generated by `gens`, sorted by
    /// ascending leading term. All vectors must share one length.
    pub fn groebner(&self, gens: Vec<Vector>) -> Vec<Vector> {
        let mut basis: Vec<Vector> = Vec::new();
        let mut leads: Vec<(usize, Monomial, u32)> = Vec::new();
        let mut single: Vec<bool> = Vec::new();
        let mut queue: BinaryHeap<Reverse<(i64, u64, usize, usize)>> = BinaryHeap::new();
        let mut queued: HashSet<(usize, usize)> = HashSet::new();
        let mut seq = 0u64;

        let add = |v: Vector,
                   basis: &mut Vec<Vector>,
                   leads: &mut Vec<(usize, Monomial, u32)>,
                   single: &mut Vec<bool>,
                   queue: &mut BinaryHeap<Reverse<(i64, u64, usize, usize)>>,
                   queued: &mut HashSet<(usize, usize)>,
                   seq: &mut u64| {
            let v = self.monic(v);
            let lt = self.lead(&v).unwrap();
            let is_single = v.iter().filter(|p| !p.is_zero()).count() == 1;
            let n = basis.len();
            for i in 0..n {
                if leads[i].0 != lt.comp {
                    continue;
                }
                if is_single && single[i] && leads[i].1.is_coprime(&lt.mono) {
                    continue;
                }
                let l = leads[i].1.lcm(&lt.mono);
                queue.push(Reverse((self.ring.degree_of(&l), *seq, i, n)));
                queued.insert((i, n));
                *seq += 1;
            }
            basis.push(v);
            leads.push((lt.comp, lt.mono, 1));
            single.push(is_single);
        };

        for g in gens {
            if self.lead(&g).is_some() {
                add(g, &mut basis, &mut leads, &mut single, &mut queue, &mut queued, &mut seq);
            }
        }

        while let Some(Reverse((_, _, i, j))) = queue.pop() {
            queued.remove(&(i, j));
            let lcm = leads[i].1.lcm(&leads[j].1);
            let comp = leads[i].0;
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && leads[k].0 == comp
                    && leads[k].1.divides(&lcm)
                    && !queued.contains(&(i.min(k), i.max(k)))
                    && !queued.contains(&(j.min(k), j.max(k)))
            });
            if chain {
                continue;
            }
            let s = self.s_vector(&basis[i], &leads[i], &basis[j], &leads[j]);
            let r = self.reduce_with(s, &basis, &leads, false);
            if self.lead(&r).is_some() {
                add(r, &mut basis, &mut leads, &mut single, &mut queue, &mut queued, &mut seq);
            }
        }
        self.interreduce(basis)
    }

    fn s_vector(
        &self,
        f: &[Polynomial],
        lf: &(usize, Monomial, u32),
        g: &[Polynomial],
        lg: &(usize, Monomial, u32),
    ) -> Vector {
        let l = lf.1.lcm(&lg.1);
        let fld = self.ring.field();
        let qf = lf.1.quotient_of(&l).unwrap();
        let qg = lg.1.quotient_of(&l).unwrap();
        let mut s: Vector = f.iter().map(|p| self.ring.mul_term(p, fld.inv(lf.2), &qf)).collect();
        self.sub_mul(&mut s, fld.inv(lg.2), &qg, g);
        s
    }

    /// S-vector of two basis elements; exposed for Buchberger-criterion checks.
    pub fn s_vector_of(&self, f: &[Polynomial], g: &[Polynomial]) -> Option<Vector> {
        let a = self.lead(f)?;
        let b = self.lead(g)?;
        if a.comp != b.comp {
            return None;
        }
        Some(self.s_vector(f, &(a.comp, a.mono, a.coeff), g, &(b.comp, b.mono, b.coeff)))
    }

    fn interreduce(&self, mut basis: Vec<Vector>) -> Vec<Vector> {
        basis.sort_by(|a, b| self.cmp_vectors_by_lead(a, b));
        let mut kept: Vec<Vector> = Vec::new();
        let mut kept_leads: Vec<(usize, Monomial, u32)> = Vec::new();
        for g in basis {
            let lt = self.lead(&g).unwrap();
            if self.find_divisor(&kept_leads, lt.comp, &lt.mono).is_none() {
                kept_leads.push((lt.comp, lt.mono, lt.coeff));
                kept.push(g);
            }
        }
        let mut out = Vec::with_capacity(kept.len());
        for k in 0..kept.len() {
            let others: Vec<Vector> =
                kept.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, g)| g.clone()).collect();
            let other_leads: Vec<_> =
                kept_leads.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, l)| l.clone()).collect();
            let r = self.reduce_with(kept[k].clone(), &others, &other_leads, true);
            out.push(self.monic(r));
        }
        out
    }
}

/// Multivariate division of `f` by the list `divisors`.
pub fn normal_form(ring: &PolyRing, f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let engine = Engine::new(ring, ModuleOrder::PositionOverTerm);
    let basis: Vec<Vector> = divisors.iter().filter(|g| !g.is_zero()).map(|g| vec![g.clone()]).collect();
    engine.reduce(vec![f.clone()], &basis).pop().unwrap()
}

/// Reduced, monic Gröbner basis of the ideal generated by `generators`.
pub fn buchberger(ring: &PolyRing, generators: &[Polynomial]) -> Vec<Polynomial> {
    let engine = Engine::new(ring, ModuleOrder::PositionOverTerm);
    let gens = generators.iter().filter(|g| !g.is_zero()).map(|g| vec![g.clone()]).collect();
    engine.groebner(gens).into_iter().map(|mut v| v.pop().unwrap()).collect()
}

/// S-polynomial of two nonzero polynomials.
pub fn s_polynomial(ring: &PolyRing, f: &Polynomial, g: &Polynomial) -> Polynomial {
    let engine = Engine::new(ring, ModuleOrder::PositionOverTerm);
    engine.s_vector_of(std::slice::from_ref(f), std::slice::from_ref(g)).unwrap().pop().unwrap()
}
