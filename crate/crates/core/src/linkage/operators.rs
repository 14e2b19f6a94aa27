use crate::error::{Error, Result};
use crate::module::{
    add_free, direct_sum, is_isomorphic, is_torsionless, minimalize, prune_columns, syzygy_basis, Minimality,
    ModuleHom, PresentedModule, SearchContext,
};

use super::report::{Evidence, LinkageReport, Ternary};

fn negated(d: &[i64]) -> Vec<i64> {
    d.iter().map(|x| -x).collect()
}

/// `coker(A^T)` for the presentation matrix `A` of `m` as given, minimalized.
pub fn transpose_of_presentation(m: &PresentedModule) -> PresentedModule {
    let degrees = m.grading().map(|g| negated(&g.relations));
    let t = PresentedModule::new(m.ring().clone(), m.relations().transpose()).with_optional_degrees(degrees);
    minimalize(&t).module
}

/// The transpose, computed from a minimal presentation.
pub fn transpose(m: &PresentedModule) -> PresentedModule {
    transpose_of_presentation(&minimalize(m).module)
}

/// `λM = Ω(Tr M)`, presented as `F₀* / M*`.
pub fn lambda_op(m: &PresentedModule) -> PresentedModule {
    let min = minimalize(m).module;
    let ring = min.ring();
    let row_degs = min.grading().map(|g| negated(&g.generators));
    let k = syzygy_basis(ring, &min.relations().transpose());
    let k = prune_columns(ring, &k, row_degs.as_deref());
    let l = PresentedModule::new(ring.clone(), k).with_optional_degrees(row_degs);
    minimalize(&l).module
}

/// Checks `0 → λM → F₁* → Tr M → 0` for the minimal presentation of `m`.
pub fn verify_lambda_sequence(m: &PresentedModule, ctx: &SearchContext) -> Result<bool> {
    let min = minimalize(m).module;
    let ring = min.ring();
    let row_degs = min.grading().map(|g| negated(&g.generators));
    let k = syzygy_basis(ring, &min.relations().transpose());
    let lam = PresentedModule::new(ring.clone(), k).with_optional_degrees(row_degs);
    let free = PresentedModule::free(ring.clone(), min.relations().ncols());
    let inclusion = ModuleHom::new(lam, free, min.relations().transpose())?;
    if !inclusion.is_injective() {
        return Ok(false);
    }
    Ok(is_isomorphic(&inclusion.cokernel(), &transpose(m), ctx)?.is_yes())
}

/// `M ≅ module ⊕ R^free_rank` with `module` free of free summands.
#[derive(Clone, Debug)]
pub struct StablePart {
    pub module: PresentedModule,
    pub free_rank: usize,
}

pub fn stable_part(m: &PresentedModule) -> Result<StablePart> {
    let tt = transpose(&transpose(m));
    let b0 = minimalize(m).module.gens();
    if tt.gens() > b0 {
        return Err(Error::Internal(format!(
            "double transpose has {} generators, more than the {} of the module",
            tt.gens(),
            b0
        )));
    }
    Ok(StablePart { free_rank: b0 - tt.gens(), module: tt })
}

/// Stability with the evidence that decided it.
#[derive(Clone, Debug)]
pub struct Stability {
    pub verdict: Ternary,
    pub part: StablePart,
    pub detail: String,
}

pub fn is_stable(m: &PresentedModule, ctx: &SearchContext) -> Result<Stability> {
    let part = stable_part(m)?;
    let minimal = minimalize(m).module.minimality() == Minimality::Minimal;
    let (verdict, detail) = if part.free_rank == 0 {
        match is_isomorphic(m, &part.module, ctx)? {
            v if v.is_yes() => (Ternary::Yes, "no free summand; module agrees with its double transpose".to_string()),
            v if v.is_no() => (Ternary::No, "module differs from its double transpose".to_string()),
            _ => (Ternary::Inconclusive, "comparison with the double transpose was inconclusive".to_string()),
        }
    } else if minimal {
        (Ternary::No, format!("free summand of rank {}", part.free_rank))
    } else {
        let split = add_free(&part.module, part.free_rank);
        match is_isomorphic(m, &split, ctx)? {
            v if v.is_yes() => (Ternary::No, format!("free summand of rank {}", part.free_rank)),
            _ => (Ternary::Inconclusive, "free summand suggested by a non-minimal presentation".to_string()),
        }
    };
    Ok(Stability { verdict, part, detail })
}

/// `λM ≅ N` and `λN ≅ M`, both always checked.
pub fn is_linked_pair(m: &PresentedModule, n: &PresentedModule, ctx: &SearchContext) -> Result<LinkageReport> {
    m.same_ring(n)?;
    let lm = lambda_op(m);
    let ln = lambda_op(n);
    let v1 = is_isomorphic(&lm, n, ctx)?;
    let v2 = is_isomorphic(&ln, m, ctx)?;
    let mut evidence = vec![Evidence::from_iso("lambda(M) ~ N", &v1), Evidence::from_iso("lambda(N) ~ M", &v2)];
    if !v1.is_yes() {
        let s = is_isomorphic(&stable_part(&lm)?.module, &stable_part(n)?.module, ctx)?;
        evidence.push(Evidence::from_iso("stable lambda(M) ~ stable N", &s).informational());
    }
    if !v2.is_yes() {
        let s = is_isomorphic(&stable_part(&ln)?.module, &stable_part(m)?.module, ctx)?;
        evidence.push(Evidence::from_iso("stable lambda(N) ~ stable M", &s).informational());
    }
    Ok(LinkageReport::from_evidence(evidence, vec![("lambda(M)".into(), lm), ("lambda(N)".into(), ln)]))
}

/// Linked exactly when stable and torsionless; `λλM ≅ M` is reported as a
/// cross-check.
pub fn is_linked_module(m: &PresentedModule, ctx: &SearchContext) -> Result<LinkageReport> {
    let st = is_stable(m, ctx)?;
    let tl = is_torsionless(m);
    let lm = lambda_op(m);
    let llm = lambda_op(&lm);
    let back = is_isomorphic(&llm, m, ctx)?;
    let evidence = vec![
        Evidence::new("stable", st.verdict, st.detail),
        Evidence::new(
            "torsionless",
            Ternary::from_bool(tl),
            if tl { "embeds in a free module" } else { "the map to the double dual has a kernel" },
        ),
        Evidence::from_iso("lambda(lambda(M)) ~ M", &back).informational(),
    ];
    Ok(LinkageReport::from_evidence(evidence, vec![("lambda(M)".into(), lm), ("lambda(lambda(M))".into(), llm)]))
}

/// Projective exactly when the transpose vanishes.
pub fn is_projective(m: &PresentedModule) -> bool {
    transpose(m).is_zero()
}

/// `F' ⊕ F''` stability, as used for pairs of maximal linked submodules.
pub(crate) fn sum_is_stable(a: &PresentedModule, b: &PresentedModule, ctx: &SearchContext) -> Result<Ternary> {
    Ok(is_stable(&direct_sum(a, b)?, ctx)?.verdict)
}
