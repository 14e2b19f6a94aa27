use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hom::{hom_module, HomModule, ModuleHom};
use super::matrix::Matrix;
use super::presented::{minimalize, Grading, Minimality, Minimized, PresentedModule};
use crate::error::Result;

/// Seeded settings for the randomized homomorphism search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchContext {
    pub seed: u64,
    pub trials: usize,
    /// Run optional cross-checks where an operation offers them.
    pub verify: bool,
}

impl Default for SearchContext {
    fn default() -> Self {
        SearchContext { seed: 0, trials: 64, verify: false }
    }
}

#[derive(Clone, Debug)]
pub enum IsoVerdict {
    /// Mutually inverse-up-to-automorphism witnesses, both bijective.
    Yes {
        forward: ModuleHom,
        backward: ModuleHom,
    },
    No(String),
    Inconclusive {
        trials: usize,
    },
}

impl IsoVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoVerdict::Yes { .. })
    }

    pub fn is_no(&self) -> bool {
        matches!(self, IsoVerdict::No(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            IsoVerdict::Yes { .. } => "yes",
            IsoVerdict::No(_) => "no",
            IsoVerdict::Inconclusive { .. } => "inconclusive",
        }
    }
}

fn combine(hom: &HomModule, coeffs: &[u32]) -> Matrix {
    let ring = hom.basis[0].source().ring();
    let mut acc = Matrix::zeros(hom.basis[0].matrix().nrows(), hom.basis[0].matrix().ncols());
    for (b, &c) in hom.basis.iter().zip(coeffs) {
        if c != 0 {
            acc = acc.add(ring, &b.matrix().scale(ring, c));
        }
    }
    acc
}

/// Degree shift of a homogeneous map between graded modules.
fn shift(f: &ModuleHom, src: &Grading, dst: &Grading) -> Option<i64> {
    let amb = f.source().ring().ambient();
    let mut out = None;
    for (j, col) in f.matrix().columns().iter().enumerate() {
        for (i, p) in col.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let d = amb.homogeneous_degree(p)? + dst.generators[i] - src.generators[j];
            match out {
                None => out = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
    }
    out
}

/// Index sets of the basis that random combinations are drawn from: the
/// whole basis, the maps with a nonzero constant entry term, and for graded
/// modules each group of maps sharing a degree shift.
fn candidate_sets(src: &PresentedModule, dst: &PresentedModule, hom: &HomModule) -> Vec<Vec<usize>> {
    let all: Vec<usize> = (0..hom.basis.len()).collect();
    let mut sets = vec![all.clone()];
    let constant: Vec<usize> = all
        .iter()
        .copied()
        .filter(|&k| hom.basis[k].matrix().columns().iter().flatten().any(|p| p.constant_term() != 0))
        .collect();
    if !constant.is_empty() && constant.len() < all.len() {
        sets.push(constant);
    }
    if let (Some(gs), Some(gd)) = (src.grading(), dst.grading()) {
        let mut groups: BTreeMap<(u64, i64), Vec<usize>> = BTreeMap::new();
        for (k, b) in hom.basis.iter().enumerate() {
            if let Some(d) = shift(b, &gs, &gd) {
                groups.entry((d.unsigned_abs(), d)).or_default().push(k);
            }
        }
        for g in groups.into_values() {
            if !sets.contains(&g) {
                sets.push(g);
            }
        }
    }
    sets
}

/// First surjective homomorphism found among the identity (when shapes
/// agree), the basis of `Hom`, and random combinations of it. Trials cycle
/// through the candidate sets, alternating dense combinations with sparse
/// ones in which each coefficient is dropped with probability one half.
fn find_surjection(
    src: &PresentedModule,
    dst: &PresentedModule,
    hom: &HomModule,
    rng: &mut ChaCha8Rng,
    trials: usize,
) -> Option<ModuleHom> {
    if src.gens() == dst.gens() {
        if let Ok(id) = ModuleHom::new(src.clone(), dst.clone(), Matrix::identity(src.ring(), src.gens())) {
            if id.is_surjective() {
                return Some(id);
            }
        }
    }
    for b in &hom.basis {
        if b.is_surjective() {
            return Some(b.clone());
        }
    }
    let p = src.ring().ambient().field().characteristic();
    let sets = candidate_sets(src, dst, hom);
    for t in 0..trials {
        let set = &sets[t % sets.len()];
        let sparse = (t / sets.len()) % 2 == 1;
        let mut coeffs = vec![0u32; hom.basis.len()];
        for &k in set {
            let c = rng.gen_range(1..p);
            if !(sparse && rng.gen_bool(0.5)) {
                coeffs[k] = c;
            }
        }
        let f = ModuleHom::new_unchecked(src.clone(), dst.clone(), combine(hom, &coeffs));
        if f.is_surjective() {
            return Some(f);
        }
    }
    None
}

fn lift_witness(
    m: &Minimized,
    n: &Minimized,
    f: &ModuleHom,
    source: &PresentedModule,
    target: &PresentedModule,
) -> ModuleHom {
    let ring = source.ring();
    let matrix = n.from_min.mul(ring, f.matrix()).mul(ring, &m.to_min);
    ModuleHom::new_unchecked(source.clone(), target.clone(), matrix)
}

/// Decides `M ≅ N` where possible. The search is over all homomorphisms,
/// not only degree-preserving ones.
pub fn is_isomorphic(m: &PresentedModule, n: &PresentedModule, ctx: &SearchContext) -> Result<IsoVerdict> {
    m.same_ring(n)?;
    let mm = minimalize(m);
    let nn = minimalize(n);
    let (mz, nz) = (mm.module.is_zero(), nn.module.is_zero());
    if mz && nz {
        return Ok(IsoVerdict::Yes {
            forward: ModuleHom::new_unchecked(m.clone(), n.clone(), Matrix::zeros(n.gens(), m.gens())),
            backward: ModuleHom::new_unchecked(n.clone(), m.clone(), Matrix::zeros(m.gens(), n.gens())),
        });
    }
    if mz != nz {
        return Ok(IsoVerdict::No("exactly one of the modules is zero".into()));
    }
    let (a, b) = (&mm.module, &nn.module);
    if a.minimality() == Minimality::Minimal && b.minimality() == Minimality::Minimal {
        let (ba, bb) = ((a.gens(), a.relations().ncols()), (b.gens(), b.relations().ncols()));
        if ba != bb {
            return Ok(IsoVerdict::No(format!("Betti numbers differ: {ba:?} vs {bb:?}")));
        }
    }
    let hom_ab = hom_module(a, b)?;
    if hom_ab.module.is_zero() {
        return Ok(IsoVerdict::No("Hom(M, N) = 0".into()));
    }
    let hom_ba = hom_module(b, a)?;
    if hom_ba.module.is_zero() {
        return Ok(IsoVerdict::No("Hom(N, M) = 0".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let phi = find_surjection(a, b, &hom_ab, &mut rng, ctx.trials);
    let psi = find_surjection(b, a, &hom_ba, &mut rng, ctx.trials);
    if let (Some(phi), Some(psi)) = (phi, psi) {
        // Surjective endomorphisms of finitely generated modules are bijective;
        // the composites are still checked directly.
        let round_a = psi.compose(&phi)?;
        let round_b = phi.compose(&psi)?;
        if round_a.is_isomorphism() && round_b.is_isomorphism() {
            return Ok(IsoVerdict::Yes {
                forward: lift_witness(&mm, &nn, &phi, m, n),
                backward: lift_witness(&nn, &mm, &psi, n, m),
            });
        }
    }
    Ok(IsoVerdict::Inconclusive { trials: ctx.trials })
}
