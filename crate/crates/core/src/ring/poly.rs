use std::cmp::Ordering;
use std::fmt::Write as _;

use super::field::PrimeField;
use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};

/// Sparse polynomial; terms are sorted strictly descending in the order of the
/// ring that produced it and carry nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<(Monomial, u32)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Monomial, u32)> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn lead_coeff(&self) -> Option<u32> {
        self.terms.first().map(|(_, c)| *c)
    }

    /// The value of a nonzero constant polynomial.
    pub fn as_constant(&self) -> Option<u32> {
        match self.terms.as_slice() {
            [(m, c)] if m.is_one() => Some(*c),
            _ => None,
        }
    }

    pub fn constant_term(&self) -> u32 {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => *c,
            _ => 0,
        }
    }

    pub(crate) fn from_sorted(terms: Vec<(Monomial, u32)>) -> Self {
        Polynomial { terms }
    }

    pub(crate) fn pop_lead(&mut self) -> Option<(Monomial, u32)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    pub(crate) fn push_smallest(&mut self, term: (Monomial, u32)) {
        self.terms.push(term);
    }
}

/// `k[x_1, ..., x_n]` with a fixed monomial order and grading weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: PrimeField,
    vars: Vec<String>,
    order: MonomialOrder,
    weights: Vec<u32>,
}

impl PolyRing {
    pub fn new(field: PrimeField, vars: Vec<String>, order: MonomialOrder) -> Result<Self> {
        let weights = vec![1; vars.len()];
        Self::with_weights(field, vars, order, weights)
    }

    pub fn with_weights(field: PrimeField, vars: Vec<String>, order: MonomialOrder, weights: Vec<u32>) -> Result<Self> {
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::structure(format!("duplicate variable name `{v}`")));
            }
            if v.is_empty() || !v.chars().next().unwrap().is_alphabetic() {
                return Err(Error::structure(format!("invalid variable name `{v}`")));
            }
        }
        if weights.len() != vars.len() {
            return Err(Error::structure("one weight per variable required"));
        }
        if weights.contains(&0) {
            return Err(Error::structure("grading weights must be positive"));
        }
        if let MonomialOrder::Elimination(k) = order {
            if k > vars.len() {
                return Err(Error::structure("elimination block larger than variable count"));
            }
        }
        Ok(PolyRing { field, vars, order, weights })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables and weights, different order.
    pub fn with_order(&self, order: MonomialOrder) -> PolyRing {
        PolyRing { order, ..self.clone() }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.compare(a, b, &self.weights)
    }

    pub fn degree_of(&self, m: &Monomial) -> i64 {
        m.weighted_degree(&self.weights)
    }

    pub fn check(&self, f: &Polynomial) -> Result<()> {
        match f.terms.iter().find(|(m, _)| m.nvars() != self.nvars()) {
            Some(_) => Err(Error::structure("variable count mismatch")),
            None => Ok(()),
        }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: u32) -> Polynomial {
        let c = c % self.field.characteristic();
        if c == 0 {
            Polynomial::zero()
        } else {
            Polynomial::from_sorted(vec![(Monomial::one(self.nvars()), c)])
        }
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::from_sorted(vec![(Monomial::var(self.nvars(), i), 1)])
    }

    pub fn term(&self, c: u32, m: Monomial) -> Polynomial {
        if c == 0 {
            Polynomial::zero()
        } else {
            Polynomial::from_sorted(vec![(m, c)])
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, u32)>) -> Polynomial {
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = self.field.add(*lc, c),
                _ => out.push((m, c % self.field.characteristic())),
            }
        }
        out.retain(|(_, c)| *c != 0);
        Polynomial::from_sorted(out)
    }

    /// Re-sorts a polynomial whose terms came from a ring with another order.
    pub fn resort(&self, f: &Polynomial) -> Polynomial {
        self.from_terms(f.terms.clone())
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.sub_mul_term(f, self.field.neg(1), &Monomial::one(self.nvars()), g)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.sub_mul_term(f, 1, &Monomial::one(self.nvars()), g)
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        Polynomial::from_sorted(f.terms.iter().map(|(m, c)| (m.clone(), self.field.neg(*c))).collect())
    }

    pub fn scale(&self, f: &Polynomial, c: u32) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial::from_sorted(f.terms.iter().map(|(m, a)| (m.clone(), self.field.mul(*a, c))).collect())
    }

    pub fn mul_term(&self, f: &Polynomial, c: u32, m: &Monomial) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial::from_sorted(f.terms.iter().map(|(fm, a)| (fm.mul(m), self.field.mul(*a, c))).collect())
    }

    /// `f - c * m * g`, merging the sorted term lists.
    pub fn sub_mul_term(&self, f: &Polynomial, c: u32, m: &Monomial, g: &Polynomial) -> Polynomial {
        if c == 0 || g.is_zero() {
            return f.clone();
        }
        let fld = self.field;
        let nc = fld.neg(c);
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let mut i = 0;
        let mut gi = g.terms.iter().map(|(gm, gc)| (gm.mul(m), fld.mul(*gc, nc))).peekable();
        while i < f.terms.len() || gi.peek().is_some() {
            let ord = match (f.terms.get(i), gi.peek()) {
                (Some(a), Some(b)) => self.cmp(&a.0, &b.0),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(f.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => out.push(gi.next().unwrap()),
                Ordering::Equal => {
                    let (gm, gc) = gi.next().unwrap();
                    let s = fld.add(f.terms[i].1, gc);
                    if s != 0 {
                        out.push((gm, s));
                    }
                    i += 1;
                }
            }
        }
        Polynomial::from_sorted(out)
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        if f.is_zero() || g.is_zero() {
            return Polynomial::zero();
        }
        let mut terms = Vec::with_capacity(f.len() * g.len());
        for (a, ac) in &f.terms {
            for (b, bc) in &g.terms {
                terms.push((a.mul(b), self.field.mul(*ac, *bc)));
            }
        }
        self.from_terms(terms)
    }

    pub fn pow(&self, f: &Polynomial, mut e: u32) -> Polynomial {
        let mut base = f.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn monic(&self, f: &Polynomial) -> Polynomial {
        match f.lead_coeff() {
            Some(c) if c != 1 => self.scale(f, self.field.inv(c)),
            _ => f.clone(),
        }
    }

    pub fn is_homogeneous(&self, f: &Polynomial) -> bool {
        let mut degs = f.terms.iter().map(|(m, _)| self.degree_of(m));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Weighted degree of a homogeneous polynomial; `None` for zero or
    /// inhomogeneous input.
    pub fn homogeneous_degree(&self, f: &Polynomial) -> Option<i64> {
        if f.is_zero() || !self.is_homogeneous(f) {
            None
        } else {
            Some(self.degree_of(&f.terms[0].0))
        }
    }

    /// Substitutes `images[i]` (polynomials of `target`) for variable `i`.
    pub fn map_into(&self, f: &Polynomial, target: &PolyRing, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars());
        let mut acc = Polynomial::zero();
        for (m, c) in &f.terms {
            let mut t = target.constant(*c);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = target.mul(&t, &target.pow(&images[i], e));
                }
            }
            acc = target.add(&acc, &t);
        }
        acc
    }

    /// Divides `f` by `g` exactly in the polynomial ring; `None` if `g` does
    /// not divide `f`.
    pub fn exact_div(&self, f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
        let (gm, gc) = g.lead()?;
        let ginv = self.field.inv(*gc);
        let mut rem = f.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.lead().cloned() {
            let q = gm.quotient_of(&m)?;
            let qc = self.field.mul(c, ginv);
            rem = self.sub_mul_term(&rem, qc, &q, g);
            quot.push((q, qc));
        }
        Some(self.from_terms(quot))
    }

    pub fn display(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in f.terms.iter().enumerate() {
            let sc = self.field.to_signed(*c);
            let (neg, abs) = (sc < 0, sc.unsigned_abs());
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.display_monomial(m);
            match (abs, mono.is_empty()) {
                (a, true) => write!(s, "{a}").unwrap(),
                (1, false) => s.push_str(&mono),
                (a, false) => write!(s, "{a}*{mono}").unwrap(),
            }
        }
        s
    }

    fn display_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.vars[i].clone()),
                _ => parts.push(format!("{}^{}", self.vars[i], e)),
            }
        }
        parts.join("*")
    }
}
