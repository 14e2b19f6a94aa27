use std::sync::Arc;

use super::matrix::Matrix;
use super::presented::{minimalize, prune_against_rest, prune_in_order, Minimality, PresentedModule};
use super::span::{Lifter, Span};
use crate::error::{Error, Result};
use crate::ring::{Polynomial, QuotientRing};

/// Generators of the kernel of the free map given by `a`, as columns.
pub fn syzygy_basis(ring: &QuotientRing, a: &Matrix) -> Matrix {
    let lifter = Lifter::new(ring, a.nrows(), &a.columns());
    Matrix::from_columns(a.ncols(), lifter.syzygies(ring))
}

/// Syzygies of `a` projected onto the first `keep` coordinates.
pub(crate) fn projected_syzygies(ring: &QuotientRing, a: &Matrix, keep: usize) -> Matrix {
    let syz = syzygy_basis(ring, a);
    let rows: Vec<usize> = (0..keep).collect();
    let p = syz.select_rows(&rows);
    let nonzero: Vec<usize> = (0..p.ncols()).filter(|&j| p.column(j).iter().any(|x| !x.is_zero())).collect();
    p.select_columns(&nonzero)
}

pub(crate) fn column_degrees(ring: &QuotientRing, a: &Matrix, rows: Option<&[i64]>) -> Option<Vec<i64>> {
    if !ring.is_homogeneous() {
        return None;
    }
    a.infer_column_degrees(ring, rows?)
}

/// Drops redundant columns; in the graded case the survivors are a minimal
/// generating set of the column span.
pub(crate) fn prune_columns(ring: &QuotientRing, a: &Matrix, rows: Option<&[i64]>) -> Matrix {
    let keep = match column_degrees(ring, a, rows) {
        Some(degs) => {
            let mut idx: Vec<usize> = (0..a.ncols()).collect();
            idx.sort_by_key(|&j| degs[j]);
            prune_in_order(ring, a, &idx)
        }
        None => prune_against_rest(ring, a),
    };
    a.select_columns(&keep)
}

/// The module generated by the columns of `k` inside `R^{k.nrows()}`.
fn image_module(ring: &Arc<QuotientRing>, k: &Matrix, rows: Option<&[i64]>) -> PresentedModule {
    let degs = column_degrees(ring, k, rows);
    let rel = syzygy_basis(ring, k);
    PresentedModule::new(ring.clone(), rel).with_optional_degrees(degs)
}

#[derive(Clone, Debug)]
pub struct FreeResolution {
    pub module: PresentedModule,
    /// `d_1, d_2, ...` with `d_1` the (minimalized) presentation.
    pub maps: Vec<Matrix>,
    /// Target ranks of the maps.
    pub ranks: Vec<usize>,
    pub minimality: Minimality,
}

pub fn free_resolution(m: &PresentedModule, length: usize) -> Result<FreeResolution> {
    if length < 2 {
        return Err(Error::precondition("resolution length must be at least 2"));
    }
    let ring = m.ring().clone();
    let min = minimalize(m).module;
    let graded = min.grading();
    let mut degrees = graded.as_ref().map(|g| g.relations.clone());
    let mut maps = vec![min.relations().clone()];
    while maps.len() < length {
        let last = maps.last().unwrap();
        let syz = syzygy_basis(&ring, last);
        let next = prune_columns(&ring, &syz, degrees.as_deref());
        degrees = column_degrees(&ring, &next, degrees.as_deref());
        maps.push(next);
    }
    let ranks = maps.iter().map(|d| d.nrows()).collect();
    Ok(FreeResolution { minimality: min.minimality(), module: min, maps, ranks })
}

/// Checks `d_i·d_{i+1} = 0` and that each `d_{i+1}` generates the syzygies
/// of `d_i`.
pub fn verify_resolution(ring: &QuotientRing, res: &FreeResolution) -> bool {
    for w in res.maps.windows(2) {
        if !w[0].mul(ring, &w[1]).is_zero() {
            return false;
        }
        let span = Span::new(ring, w[1].nrows(), &w[1].columns());
        if !syzygy_basis(ring, &w[0]).columns().iter().all(|c| span.contains(ring, c)) {
            return false;
        }
    }
    true
}

/// A homomorphism between presented modules, given on generators.
#[derive(Clone, Debug)]
pub struct ModuleHom {
    source: PresentedModule,
    target: PresentedModule,
    matrix: Matrix,
}

impl ModuleHom {
    pub fn new(source: PresentedModule, target: PresentedModule, matrix: Matrix) -> Result<Self> {
        source.same_ring(&target)?;
        if matrix.nrows() != target.gens() || matrix.ncols() != source.gens() {
            return Err(Error::IllDefinedHom(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.nrows(),
                matrix.ncols(),
                target.gens(),
                source.gens()
            )));
        }
        let matrix = matrix.reduced(source.ring());
        let f = ModuleHom { source, target, matrix };
        if !f.is_well_defined() {
            return Err(Error::IllDefinedHom(
                "a relation of the source is not sent into the relations of the target".into(),
            ));
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: PresentedModule, target: PresentedModule, matrix: Matrix) -> Self {
        ModuleHom { source, target, matrix }
    }

    pub fn identity(m: &PresentedModule) -> Self {
        ModuleHom { source: m.clone(), target: m.clone(), matrix: Matrix::identity(m.ring(), m.gens()) }
    }

    pub fn source(&self) -> &PresentedModule {
        &self.source
    }

    pub fn target(&self) -> &PresentedModule {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    fn ring(&self) -> &Arc<QuotientRing> {
        self.source.ring()
    }

    pub fn is_well_defined(&self) -> bool {
        let ring = self.ring();
        let image = self.matrix.mul(ring, self.source.relations());
        let span = self.target.relation_span();
        image.columns().iter().all(|c| span.contains(ring, c))
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ModuleHom) -> Result<ModuleHom> {
        if first.target.gens() != self.source.gens() {
            return Err(Error::structure("homomorphisms are not composable"));
        }
        let matrix = self.matrix.mul(self.ring(), &first.matrix);
        Ok(ModuleHom { source: first.source.clone(), target: self.target.clone(), matrix })
    }

    pub fn cokernel(&self) -> PresentedModule {
        let rel = self.target.relations().hstack(&self.matrix);
        PresentedModule::new(self.ring().clone(), rel)
            .with_optional_degrees(self.target.grading().map(|g| g.generators))
    }

    /// Generators of the preimage of the target relations, as columns in the
    /// source generator coordinates.
    fn kernel_generators(&self) -> Matrix {
        let ring = self.ring();
        let stacked = self.matrix.hstack(self.target.relations());
        projected_syzygies(ring, &stacked, self.source.gens())
    }

    pub fn kernel(&self) -> PresentedModule {
        let ring = self.ring();
        let k = self.kernel_generators();
        let src_degrees = self.source.grading().map(|g| g.generators);
        let k = prune_columns(ring, &k, src_degrees.as_deref());
        let degs = column_degrees(ring, &k, src_degrees.as_deref());
        let rel = projected_syzygies(ring, &k.hstack(self.source.relations()), k.ncols());
        PresentedModule::new(ring.clone(), rel).with_optional_degrees(degs)
    }

    pub fn is_injective(&self) -> bool {
        let ring = self.ring();
        let span = self.source.relation_span();
        self.kernel_generators().columns().iter().all(|c| span.contains(ring, c))
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().is_zero()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_surjective() && self.is_injective()
    }

    pub fn display(&self) -> String {
        self.matrix.display(self.ring())
    }
}

/// `M* = Hom(M, R)` with its embedding into the dual of the generators.
#[derive(Clone, Debug)]
pub struct Dual {
    pub module: PresentedModule,
    /// `M.gens × dual.gens`: each generator of the dual as a functional.
    pub functionals: Matrix,
}

pub fn dual_with_functionals(m: &PresentedModule) -> Dual {
    let ring = m.ring();
    let k = syzygy_basis(ring, &m.relations().transpose());
    let row_degs = m.grading().map(|g| g.generators.iter().map(|d| -d).collect::<Vec<_>>());
    let k = prune_columns(ring, &k, row_degs.as_deref());
    let min = minimalize(&image_module(ring, &k, row_degs.as_deref()));
    let functionals = k.mul(ring, &min.from_min);
    Dual { module: min.module, functionals }
}

pub fn dual(m: &PresentedModule) -> PresentedModule {
    dual_with_functionals(m).module
}

/// `Hom(M, N)` with one homomorphism per generator.
#[derive(Clone, Debug)]
pub struct HomModule {
    pub module: PresentedModule,
    pub basis: Vec<ModuleHom>,
}

fn vec_to_matrix(v: &[Polynomial], rows: usize, cols: usize) -> Matrix {
    let columns = (0..cols).map(|j| v[j * rows..(j + 1) * rows].to_vec()).collect();
    Matrix::from_columns(rows, columns)
}

fn kron_identity(ring: &QuotientRing, copies: usize, b: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(0, 0);
    for _ in 0..copies {
        out = out.block_diag(b);
    }
    out.reduced(ring)
}

pub fn hom_module(m: &PresentedModule, n: &PresentedModule) -> Result<HomModule> {
    m.same_ring(n)?;
    let ring = m.ring();
    let a = m.relations();
    let b = n.relations();
    let (a0, a1, b0) = (a.nrows(), a.ncols(), b.nrows());
    let dim = a0 * b0;
    // Φ ↦ vec(Φ·A) with vec(Φ)[j*b0 + i] = Φ[i][j].
    let mut c1 = Matrix::zeros(b0 * a1, dim);
    for k in 0..a1 {
        for j in 0..a0 {
            let e = a.get(j, k);
            if e.is_zero() {
                continue;
            }
            for i in 0..b0 {
                c1.set(k * b0 + i, j * b0 + i, e.clone());
            }
        }
    }
    let c = c1.hstack(&kron_identity(ring, a1, b));
    let h = projected_syzygies(ring, &c, dim);
    let row_degs = match (m.grading(), n.grading()) {
        (Some(gm), Some(gn)) => {
            Some((0..dim).map(|r| gn.generators[r % b0.max(1)] - gm.generators[r / b0.max(1)]).collect::<Vec<i64>>())
        }
        _ => None,
    };
    let h = prune_columns(ring, &h, row_degs.as_deref());
    let degs = column_degrees(ring, &h, row_degs.as_deref());
    let trivial = kron_identity(ring, a0, b);
    let rel = projected_syzygies(ring, &h.hstack(&trivial), h.ncols());
    let raw = PresentedModule::new(ring.clone(), rel).with_optional_degrees(degs);
    let min = minimalize(&raw);
    let basis_vecs = h.mul(ring, &min.from_min);
    let basis = basis_vecs
        .columns()
        .iter()
        .map(|v| ModuleHom::new_unchecked(m.clone(), n.clone(), vec_to_matrix(v, b0, a0)))
        .collect();
    Ok(HomModule { module: min.module, basis })
}

/// The natural map `M → R^k` given by a generating set of `M*`.
pub fn functional_embedding(m: &PresentedModule) -> ModuleHom {
    let d = dual_with_functionals(m);
    let k = d.functionals.ncols();
    let target = PresentedModule::free(m.ring().clone(), k);
    ModuleHom::new_unchecked(m.clone(), target, d.functionals.transpose())
}

/// True when `M → M**` is injective, i.e. `M` embeds in a free module.
pub fn is_torsionless(m: &PresentedModule) -> bool {
    functional_embedding(m).is_injective()
}
