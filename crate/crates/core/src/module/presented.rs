use std::sync::Arc;

use super::matrix::Matrix;
use super::span::Span;
use crate::error::{Error, Result};
use crate::ring::{localize_ring, LocalizedRing, Polynomial, QuotientRing};

/// How far a presentation is known to be minimal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Minimality {
    /// Not yet minimalized.
    Unknown,
    /// Graded over a homogeneous ring with no scalar entries and a minimal
    /// set of relations: ranks are the graded Betti numbers.
    Minimal,
    /// Units and redundant relations were pruned, but minimality of the ranks
    /// is not certified.
    Heuristic,
}

/// `coker(R^relations -> R^gens)`.
#[derive(Clone, Debug)]
pub struct PresentedModule {
    ring: Arc<QuotientRing>,
    relations: Matrix,
    degrees: Option<Vec<i64>>,
    minimality: Minimality,
}

/// Degrees of generators and relations of a graded presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub generators: Vec<i64>,
    pub relations: Vec<i64>,
}

impl PresentedModule {
    pub fn new(ring: Arc<QuotientRing>, relations: Matrix) -> Self {
        let relations = relations.reduced(&ring);
        PresentedModule { ring, relations, degrees: None, minimality: Minimality::Unknown }
    }

    pub fn with_degrees(mut self, degrees: Vec<i64>) -> Result<Self> {
        if degrees.len() != self.gens() {
            return Err(Error::structure("one degree per generator required"));
        }
        self.degrees = Some(degrees);
        Ok(self)
    }

    pub(crate) fn with_optional_degrees(mut self, degrees: Option<Vec<i64>>) -> Self {
        self.degrees = degrees;
        self
    }

    pub fn free(ring: Arc<QuotientRing>, rank: usize) -> Self {
        let mut m = Self::new(ring, Matrix::zeros(rank, 0));
        m.minimality = Minimality::Minimal;
        m
    }

    pub fn zero(ring: Arc<QuotientRing>) -> Self {
        Self::free(ring, 0)
    }

    /// `R / (f_1, ..., f_k)`.
    pub fn cyclic(ring: Arc<QuotientRing>, generators: Vec<Polynomial>) -> Self {
        let k = generators.len();
        let rel = Matrix::from_rows(vec![generators], k).unwrap();
        Self::new(ring, rel)
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    pub fn gens(&self) -> usize {
        self.relations.nrows()
    }

    pub fn relations(&self) -> &Matrix {
        &self.relations
    }

    pub fn degrees(&self) -> Option<&[i64]> {
        self.degrees.as_deref()
    }

    pub fn minimality(&self) -> Minimality {
        self.minimality
    }

    /// Generator and relation degrees when the ring is homogeneous and the
    /// relations are homogeneous for the declared (default zero) degrees.
    pub fn grading(&self) -> Option<Grading> {
        if !self.ring.is_homogeneous() {
            return None;
        }
        let generators = self.degrees.clone().unwrap_or_else(|| vec![0; self.gens()]);
        let relations = self.relations.infer_column_degrees(&self.ring, &generators)?;
        Some(Grading { generators, relations })
    }

    pub fn is_graded(&self) -> bool {
        self.grading().is_some()
    }

    pub fn same_ring(&self, other: &PresentedModule) -> Result<()> {
        if self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(Error::DifferentRings)
        }
    }

    pub fn relation_span(&self) -> Span {
        Span::new(&self.ring, self.gens(), &self.relations.columns())
    }

    /// Exact zero test: the relations span the whole free module.
    pub fn is_zero(&self) -> bool {
        self.gens() == 0 || self.relation_span().is_everything(&self.ring)
    }

    pub fn display(&self) -> String {
        format!("coker {}", self.relations.display(&self.ring))
    }
}

/// Result of [`minimalize`] with the generator changes that realize the
/// isomorphism to the input.
#[derive(Clone, Debug)]
pub struct Minimized {
    pub module: PresentedModule,
    /// `new.gens × old.gens`: images of the old generators.
    pub to_min: Matrix,
    /// `old.gens × new.gens`: images of the new generators.
    pub from_min: Matrix,
}

fn find_pivot(m: &PresentedModule, graded: bool) -> Option<(usize, usize)> {
    let a = &m.relations;
    for j in 0..a.ncols() {
        for i in 0..a.nrows() {
            if a.get(i, j).as_constant().is_some() {
                return Some((i, j));
            }
        }
    }
    if graded {
        return None;
    }
    for j in 0..a.ncols() {
        for i in 0..a.nrows() {
            let p = a.get(i, j);
            if !p.is_zero() && m.ring.is_unit(p) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Removes generators killed by unit relation entries and redundant
/// relations. Graded input over a homogeneous ring comes out minimal; other
/// input is pruned heuristically and flagged as such.
pub fn minimalize(m: &PresentedModule) -> Minimized {
    let ring = m.ring.clone();
    let grading = m.grading();
    let graded = grading.is_some();
    let n0 = m.gens();
    let mut cur = m.clone();
    cur.degrees = grading.as_ref().map(|g| g.generators.clone());
    let mut to_min = Matrix::identity(&ring, n0);
    let mut from_min = Matrix::identity(&ring, n0);

    loop {
        let nonzero: Vec<usize> =
            (0..cur.relations.ncols()).filter(|&j| cur.relations.column(j).iter().any(|p| !p.is_zero())).collect();
        cur.relations = cur.relations.select_columns(&nonzero);
        let Some((pi, pj)) = find_pivot(&cur, graded) else { break };
        let a = &cur.relations;
        let n = a.nrows();
        let uinv = ring.inverse(a.get(pi, pj)).expect("pivot is a unit");
        let neg_uinv = ring.neg(&uinv);
        // e_pi = -u^{-1} Σ_{k≠pi} a[k][pj] e_k
        let keep_rows: Vec<usize> = (0..n).filter(|&k| k != pi).collect();
        let mut proj = Matrix::zeros(n - 1, n);
        for (new_k, &k) in keep_rows.iter().enumerate() {
            proj.set(new_k, k, ring.one());
            proj.set(new_k, pi, ring.mul(&neg_uinv, a.get(k, pj)));
        }
        let mut incl = Matrix::zeros(n, n - 1);
        for (new_k, &k) in keep_rows.iter().enumerate() {
            incl.set(k, new_k, ring.one());
        }
        let pivot_col = a.column(pj);
        let mut cols = Vec::new();
        for j in 0..a.ncols() {
            if j == pj {
                continue;
            }
            let mut c = a.column(j);
            let factor = ring.mul(&c[pi], &uinv);
            if !factor.is_zero() {
                for k in 0..n {
                    let t = ring.mul(&factor, &pivot_col[k]);
                    c[k] = ring.reduce(&ring.sub(&c[k], &t));
                }
            }
            cols.push(keep_rows.iter().map(|&k| c[k].clone()).collect());
        }
        cur.relations = Matrix::from_columns(n - 1, cols);
        if let Some(d) = cur.degrees.as_mut() {
            d.remove(pi);
        }
        to_min = proj.mul(&ring, &to_min);
        from_min = from_min.mul(&ring, &incl);
    }

    let keep = if graded {
        let degs = cur.relations.infer_column_degrees(&ring, cur.degrees.as_deref().unwrap()).unwrap_or_default();
        let mut idx: Vec<usize> = (0..cur.relations.ncols()).collect();
        idx.sort_by_key(|&j| degs.get(j).copied().unwrap_or(0));
        prune_in_order(&ring, &cur.relations, &idx)
    } else {
        prune_against_rest(&ring, &cur.relations)
    };
    cur.relations = cur.relations.select_columns(&keep);
    cur.minimality = if graded { Minimality::Minimal } else { Minimality::Heuristic };
    Minimized { module: cur, to_min, from_min }
}

/// Greedy: keep a column unless it lies in the span of the columns kept so far.
pub(crate) fn prune_in_order(ring: &QuotientRing, a: &Matrix, order: &[usize]) -> Vec<usize> {
    let mut kept: Vec<usize> = Vec::new();
    for &j in order {
        let c = a.column(j);
        if c.iter().all(|p| p.is_zero()) {
            continue;
        }
        let cols: Vec<_> = kept.iter().map(|&k| a.column(k)).collect();
        if !kept.is_empty() && Span::new(ring, a.nrows(), &cols).contains(ring, &c) {
            continue;
        }
        kept.push(j);
    }
    kept.sort_unstable();
    kept
}

/// Drops, one at a time, columns lying in the span of the remaining ones.
pub(crate) fn prune_against_rest(ring: &QuotientRing, a: &Matrix) -> Vec<usize> {
    let mut kept: Vec<usize> = (0..a.ncols()).filter(|&j| a.column(j).iter().any(|p| !p.is_zero())).collect();
    let mut pos = 0;
    while pos < kept.len() {
        let j = kept[pos];
        let others: Vec<_> = kept.iter().filter(|&&k| k != j).map(|&k| a.column(k)).collect();
        if !others.is_empty() && Span::new(ring, a.nrows(), &others).contains(ring, &a.column(j)) {
            kept.remove(pos);
        } else {
            pos += 1;
        }
    }
    kept
}

/// Ranks `(β₀, β₁)` of a minimalized presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Betti {
    pub generators: usize,
    pub relations: usize,
    /// False when the presentation could only be pruned heuristically.
    pub exact: bool,
}

pub fn betti(m: &PresentedModule) -> Betti {
    let min = minimalize(m).module;
    Betti { generators: min.gens(), relations: min.relations.ncols(), exact: min.minimality == Minimality::Minimal }
}

pub fn direct_sum(m: &PresentedModule, n: &PresentedModule) -> Result<PresentedModule> {
    m.same_ring(n)?;
    let relations = m.relations.block_diag(&n.relations);
    let degrees = match (m.grading(), n.grading()) {
        (Some(a), Some(b)) => Some(a.generators.into_iter().chain(b.generators).collect()),
        _ => None,
    };
    Ok(PresentedModule::new(m.ring.clone(), relations).with_optional_degrees(degrees))
}

/// Direct sum of copies of the ring appended to `m`.
pub fn add_free(m: &PresentedModule, rank: usize) -> PresentedModule {
    direct_sum(m, &PresentedModule::free(m.ring.clone(), rank)).unwrap()
}

/// Re-reads the presentation over `R_f`.
pub fn localize_module(m: &PresentedModule, f: &Polynomial) -> Result<PresentedModule> {
    let loc = localize_ring(&m.ring, f)?;
    Ok(localize_module_in(m, &loc))
}

pub fn localize_module_in(m: &PresentedModule, loc: &LocalizedRing) -> PresentedModule {
    let rel = m.relations.map(|p| loc.embed(p));
    PresentedModule::new(loc.presentation().clone(), rel)
}
