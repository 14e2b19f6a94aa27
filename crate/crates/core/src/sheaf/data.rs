use std::sync::Arc;

use crate::error::{Error, Result};
use crate::module::{Lifter, Matrix, ModuleHom, PresentedModule};
use crate::ring::{localize_ring, LocalizedRing, Polynomial, QuotientRing};

/// A ring homomorphism given by the images of the ambient variables.
#[derive(Clone, Debug)]
pub struct RingMap {
    pub source: Arc<QuotientRing>,
    pub target: Arc<QuotientRing>,
    pub images: Vec<Polynomial>,
}

impl RingMap {
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        let t = &self.target;
        let mut acc = Polynomial::zero();
        for (m, c) in f.terms() {
            let mut term = t.ambient().constant(*c);
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    term = t.mul(&term, &self.images[i]);
                }
            }
            acc = t.add(&acc, &term);
        }
        t.reduce(&acc)
    }

    pub fn apply_matrix(&self, m: &Matrix) -> Matrix {
        m.map(|p| self.apply(p))
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &RingMap) -> RingMap {
        RingMap {
            source: self.source.clone(),
            target: then.target.clone(),
            images: self.images.iter().map(|p| then.apply(p)).collect(),
        }
    }

    /// Sends the defining ideal of the source to zero.
    pub fn is_well_defined(&self) -> bool {
        self.source.gb().iter().all(|g| self.apply(g).is_zero())
    }

    /// `self` followed by `back` fixes every variable of the source.
    pub fn is_left_inverse_of(&self, back: &RingMap) -> bool {
        let composite = self.then(back);
        let amb = self.source.ambient();
        (0..amb.nvars()).all(|i| self.source.is_zero(&self.source.sub(&composite.images[i], &amb.var(i))))
    }

    /// Extends a map on the base ring of `loc` to `loc` by sending the
    /// adjoined inverse to the inverse of the image of the localized element.
    pub fn extend_to_localization(
        loc: &LocalizedRing,
        target: &Arc<QuotientRing>,
        base_images: Vec<Polynomial>,
    ) -> Option<RingMap> {
        let base = RingMap { source: loc.base().clone(), target: target.clone(), images: base_images };
        let inv = target.inverse(&base.apply(loc.element()))?;
        let mut images = base.images;
        images.push(inv);
        Some(RingMap { source: loc.presentation().clone(), target: target.clone(), images })
    }

    /// The inclusion of the base ring into `loc`.
    pub fn into_localization(loc: &LocalizedRing) -> RingMap {
        let amb = loc.presentation().ambient();
        let n = loc.base().nvars();
        RingMap {
            source: loc.base().clone(),
            target: loc.presentation().clone(),
            images: (0..n).map(|i| amb.var(i)).collect(),
        }
    }
}

/// `(U_i = Spec R_i, M_i)`.
#[derive(Clone, Debug)]
pub struct Chart {
    pub name: String,
    pub module: PresentedModule,
}

impl Chart {
    pub fn new(name: impl Into<String>, module: PresentedModule) -> Self {
        Chart { name: name.into(), module }
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        self.module.ring()
    }
}

/// Identification of `D(f_source) ⊆ U_source` with `D(f_target) ⊆ U_target`
/// and of the modules over it.
#[derive(Clone, Debug)]
pub struct Transition {
    pub source: usize,
    pub target: usize,
    pub source_ring: LocalizedRing,
    pub target_ring: LocalizedRing,
    pub forward: RingMap,
    pub backward: RingMap,
    /// `M_target.gens × M_source.gens` over the target localization.
    pub matrix: Matrix,
}

impl Transition {
    /// `ring_map` gives images of the source chart variables in the target
    /// localization, `inverse_map` images of the target chart variables in
    /// the source localization; the adjoined inverses are extended
    /// automatically.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        charts: &[Chart],
        source: usize,
        target: usize,
        f_source: &Polynomial,
        f_target: &Polynomial,
        ring_map: Vec<Polynomial>,
        inverse_map: Vec<Polynomial>,
        matrix: Matrix,
    ) -> Result<Transition> {
        if source >= charts.len() || target >= charts.len() || source == target {
            return Err(Error::Glueing("transition must join two distinct charts".into()));
        }
        let (cs, ct) = (&charts[source], &charts[target]);
        let ls = localize_ring(cs.ring(), f_source)?;
        let lt = localize_ring(ct.ring(), f_target)?;
        if ring_map.len() != cs.ring().nvars() || inverse_map.len() != ct.ring().nvars() {
            return Err(Error::Glueing(format!("{}-{}: one image per chart variable required", cs.name, ct.name)));
        }
        if matrix.nrows() != ct.module.gens() || matrix.ncols() != cs.module.gens() {
            return Err(Error::Glueing(format!(
                "{}-{}: module matrix must be {}x{}",
                cs.name,
                ct.name,
                ct.module.gens(),
                cs.module.gens()
            )));
        }
        let reduce_all = |r: &QuotientRing, v: Vec<Polynomial>| v.into_iter().map(|p| r.reduce(&p)).collect::<Vec<_>>();
        let forward = RingMap::extend_to_localization(&ls, lt.presentation(), reduce_all(lt.presentation(), ring_map))
            .ok_or_else(|| {
                Error::Glueing(format!("{}-{}: the ring map does not send f to a unit", cs.name, ct.name))
            })?;
        let backward =
            RingMap::extend_to_localization(&lt, ls.presentation(), reduce_all(ls.presentation(), inverse_map))
                .ok_or_else(|| {
                    Error::Glueing(format!("{}-{}: the inverse map does not send f to a unit", cs.name, ct.name))
                })?;
        let matrix = matrix.reduced(lt.presentation());
        Ok(Transition { source, target, source_ring: ls, target_ring: lt, forward, backward, matrix })
    }

    /// The source chart ring mapped into the target localization.
    pub fn chart_map(&self) -> RingMap {
        RingMap::into_localization(&self.source_ring).then(&self.forward)
    }

    pub fn target_embedding(&self) -> RingMap {
        RingMap::into_localization(&self.target_ring)
    }

    /// `ψ*M_source → (M_target)_f` for the given chart modules.
    pub fn module_hom(&self, source: &PresentedModule, target: &PresentedModule, matrix: &Matrix) -> Result<ModuleHom> {
        let ring = self.target_ring.presentation().clone();
        let src = PresentedModule::new(ring.clone(), self.chart_map().apply_matrix(source.relations()));
        let tgt = PresentedModule::new(ring, self.target_embedding().apply_matrix(target.relations()));
        ModuleHom::new(src, tgt, matrix.clone())
    }

    /// The same identification read from the other side; `None` when the
    /// module matrix cannot be inverted.
    pub fn reversed(&self, charts: &[Chart]) -> Option<Transition> {
        let inv = invert_over(
            &self.module_hom(&charts[self.source].module, &charts[self.target].module, &self.matrix).ok()?,
        )?;
        Some(Transition {
            source: self.target,
            target: self.source,
            source_ring: self.target_ring.clone(),
            target_ring: self.source_ring.clone(),
            forward: self.backward.clone(),
            backward: self.forward.clone(),
            matrix: self.backward.apply_matrix(&inv),
        })
    }
}

/// Matrix of the inverse of a bijective homomorphism, over the same ring.
pub(crate) fn invert_over(f: &ModuleHom) -> Option<Matrix> {
    let ring = f.source().ring();
    let target = f.target();
    let n = target.gens();
    let mut cols = f.matrix().columns();
    cols.extend(target.relations().columns());
    let lifter = Lifter::new(ring, n, &cols);
    let k = f.source().gens();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut e = vec![Polynomial::zero(); n];
        e[i] = ring.one();
        let a = lifter.lift(ring, &e)?;
        out.push(a[..k].to_vec());
    }
    Some(Matrix::from_columns(k, out))
}

/// Charts glued along basic opens.
#[derive(Clone, Debug)]
pub struct GluedSheaf {
    pub charts: Vec<Chart>,
    pub transitions: Vec<Transition>,
}

impl GluedSheaf {
    pub fn new(charts: Vec<Chart>, transitions: Vec<Transition>) -> Result<Self> {
        let mut names: Vec<&str> = charts.iter().map(|c| c.name.as_str()).collect();
        names.sort_unstable();
        if names.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Glueing("chart names must be distinct".into()));
        }
        let mut pairs: Vec<(usize, usize)> =
            transitions.iter().map(|t| (t.source.min(t.target), t.source.max(t.target))).collect();
        pairs.sort_unstable();
        if pairs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Glueing("at most one transition per pair of charts".into()));
        }
        if transitions.iter().any(|t| t.source >= charts.len() || t.target >= charts.len()) {
            return Err(Error::Glueing("transition refers to a missing chart".into()));
        }
        Ok(GluedSheaf { charts, transitions })
    }

    pub fn chart_index(&self, name: &str) -> Option<usize> {
        self.charts.iter().position(|c| c.name == name)
    }

    pub fn transition_between(&self, a: usize, b: usize) -> Option<&Transition> {
        self.transitions.iter().find(|t| (t.source == a && t.target == b) || (t.source == b && t.target == a))
    }

    /// The transition oriented from `a` to `b`.
    pub fn oriented(&self, a: usize, b: usize) -> Option<Transition> {
        let t = self.transition_between(a, b)?;
        if t.source == a {
            Some(t.clone())
        } else {
            t.reversed(&self.charts)
        }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.charts.len();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(a) = stack.pop() {
            for t in &self.transitions {
                for (x, y) in [(t.source, t.target), (t.target, t.source)] {
                    if x == a && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn overlap_name(&self, a: usize, b: usize) -> String {
        format!("{}-{}", self.charts[a].name, self.charts[b].name)
    }
}
