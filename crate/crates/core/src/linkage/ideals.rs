use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::module::{
    hom_module, is_isomorphic, projected_syzygies, Matrix, ModuleHom, PresentedModule, SearchContext, Span,
};
use crate::ring::{ideal_colon, Ideal, Polynomial, QuotientRing};

use super::operators::{is_linked_module, sum_is_stable};
use super::report::{LinkageReport, Ternary, Verdict};

/// Nonzero generators of an ideal of `R`, read off the preimage's Gröbner basis.
pub fn quotient_generators(ring: &QuotientRing, ideal: &Ideal) -> Vec<Polynomial> {
    ideal.groebner_basis().iter().map(|g| ring.reduce(g)).filter(|g| !g.is_zero()).collect()
}

/// `x : I` in `R`, returned as its preimage in the ambient ring.
pub fn ideal_link_partner(ring: &QuotientRing, i: &[Polynomial], x: &[Polynomial]) -> Result<Ideal> {
    let ii = ring.ideal(i.to_vec())?;
    let xx = ring.ideal(x.to_vec())?;
    if !ii.contains_ideal(&xx) {
        return Err(Error::precondition("the linking ideal is not contained in the ideal"));
    }
    Ok(ideal_colon(&xx, &ii)?.ideal)
}

/// `x : J = I` and `x : I = J` in `R`.
pub fn verify_ideal_link(ring: &QuotientRing, i: &[Polynomial], j: &[Polynomial], x: &[Polynomial]) -> Result<bool> {
    let ii = ring.ideal(i.to_vec())?;
    let jj = ring.ideal(j.to_vec())?;
    let xx = ring.ideal(x.to_vec())?;
    Ok(ideal_colon(&xx, &jj)?.ideal == ii && ideal_colon(&xx, &ii)?.ideal == jj)
}

/// `ann(v)` for an element `v` of `M` given in generator coordinates, as a
/// preimage ideal.
pub fn annihilator_of(m: &PresentedModule, v: &[Polynomial]) -> Result<Ideal> {
    let ring = m.ring();
    let col = Matrix::from_columns(v.len(), vec![v.to_vec()]);
    let s = projected_syzygies(ring, &col.hstack(m.relations()), 1);
    ring.ideal(s.row(0))
}

/// Outcome of an associated-prime test.
#[derive(Clone, Debug)]
pub struct AssMembership {
    pub verdict: Ternary,
    /// An element of `M` whose annihilator is exactly `p`.
    pub witness: Option<Vec<Polynomial>>,
    /// True when the preimage of `p` is generated by variables, so primality
    /// was checked rather than assumed.
    pub prime_verified: bool,
    pub detail: String,
}

/// The preimage is generated by variables, hence prime.
fn generated_by_variables(p: &Ideal) -> bool {
    !p.is_unit() && p.groebner_basis().iter().all(|g| g.len() == 1 && g.lead_monomial().unwrap().total_degree() == 1)
}

/// Decides `p ∈ Ass(M)` by searching `0 :_M p` for an element with
/// annihilator exactly `p`. Primality of `p` is assumed unless `p` is
/// generated by variables.
pub fn ass_member(p: &[Polynomial], m: &PresentedModule, ctx: &SearchContext) -> Result<AssMembership> {
    let ring = m.ring();
    let pp = ring.ideal(p.to_vec())?;
    if pp.is_unit() {
        return Err(Error::precondition("the unit ideal is not prime"));
    }
    let prime_verified = generated_by_variables(&pp);
    let cyclic = PresentedModule::cyclic(ring.clone(), quotient_generators(ring, &pp));
    let hom = hom_module(&cyclic, m)?;
    if hom.module.is_zero() {
        return Ok(AssMembership {
            verdict: Ternary::No,
            witness: None,
            prime_verified,
            detail: "no nonzero element of M is killed by p".into(),
        });
    }
    let images: Vec<Vec<Polynomial>> = hom.basis.iter().map(|h| h.matrix().column(0)).collect();
    let exact = |v: &[Polynomial]| -> Result<bool> { Ok(annihilator_of(m, v)? == pp) };
    for v in &images {
        if exact(v)? {
            return Ok(found(v.clone(), prime_verified));
        }
    }
    let field = ring.ambient().field();
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    for _ in 0..ctx.trials {
        let mut v = vec![Polynomial::zero(); m.gens()];
        for img in &images {
            let c = rng.gen_range(0..field.characteristic());
            for (a, b) in v.iter_mut().zip(img) {
                *a = ring.add(a, &ring.scale(b, c));
            }
        }
        if exact(&v)? {
            return Ok(found(v, prime_verified));
        }
    }
    Ok(AssMembership {
        verdict: Ternary::Inconclusive,
        witness: None,
        prime_verified,
        detail: format!("elements killed by p exist, but none with annihilator exactly p after {} trials", ctx.trials),
    })
}

fn found(v: Vec<Polynomial>, prime_verified: bool) -> AssMembership {
    AssMembership { verdict: Ternary::Yes, witness: Some(v), prime_verified, detail: "annihilator equals p".into() }
}

/// Evidence that the ring is not a domain.
#[derive(Clone, Debug)]
pub enum DomainCertificate {
    Asserted,
    ZeroDivisors(Polynomial, Polynomial),
}

pub fn check_certificate(ring: &QuotientRing, cert: &DomainCertificate) -> Result<()> {
    match cert {
        DomainCertificate::Asserted => Ok(()),
        DomainCertificate::ZeroDivisors(f, g) => {
            if ring.is_zero(f) || ring.is_zero(g) || !ring.mul(f, g).is_zero() {
                Err(Error::precondition("domain certificate invalid: need f, g nonzero with f*g = 0"))
            } else {
                Ok(())
            }
        }
    }
}

/// `R/p ↪ M` together with the linkage report for `R/p`.
#[derive(Clone, Debug)]
pub struct LinkedSubmodule {
    pub embedding: ModuleHom,
    pub report: LinkageReport,
}

pub fn linked_submodule_from_prime(
    p: &[Polynomial],
    m: &PresentedModule,
    cert: &DomainCertificate,
    ctx: &SearchContext,
) -> Result<LinkedSubmodule> {
    let ring = m.ring();
    check_certificate(ring, cert)?;
    let in_m = ass_member(p, m, ctx)?;
    let Some(witness) = in_m.witness else {
        return Err(Error::precondition("p is not an associated prime of M"));
    };
    let free = PresentedModule::free(ring.clone(), 1);
    if ass_member(p, &free, ctx)?.verdict != Ternary::Yes {
        return Err(Error::precondition("p is not an associated prime of the ring"));
    }
    let pp = ring.ideal(p.to_vec())?;
    let cyclic = PresentedModule::cyclic(ring.clone(), quotient_generators(ring, &pp));
    let embedding = ModuleHom::new(cyclic.clone(), m.clone(), Matrix::from_columns(m.gens(), vec![witness]))?;
    let report = is_linked_module(&cyclic, ctx)?;
    Ok(LinkedSubmodule { embedding, report })
}

/// Result of comparing candidate submodules of a common module.
#[derive(Clone, Debug)]
pub struct MaximalLinked {
    pub reports: Vec<LinkageReport>,
    /// Indices of linked candidates.
    pub linked: Vec<usize>,
    /// Indices of linked candidates whose image is maximal among the linked.
    pub maximal: Vec<usize>,
    /// Stability of `F' ⊕ F''` for each pair of maximal candidates.
    pub pair_stability: Vec<(usize, usize, Ternary)>,
    pub note: String,
}

fn image_contained(ring: &Arc<QuotientRing>, a: &ModuleHom, b: &ModuleHom) -> bool {
    let target = b.target();
    let mut cols = b.matrix().columns();
    cols.extend(target.relations().columns());
    let span = Span::new(ring, target.gens(), &cols);
    a.matrix().columns().iter().all(|c| span.contains(ring, c))
}

pub fn maximal_linked_among(candidates: &[ModuleHom], ctx: &SearchContext) -> Result<MaximalLinked> {
    if candidates.is_empty() {
        return Ok(MaximalLinked {
            reports: Vec::new(),
            linked: Vec::new(),
            maximal: Vec::new(),
            pair_stability: Vec::new(),
            note: "no candidates".into(),
        });
    }
    let ring = candidates[0].source().ring().clone();
    let mut reports = Vec::new();
    let mut linked = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        let r = is_linked_module(c.source(), ctx)?;
        if r.verdict == Verdict::Linked {
            linked.push(i);
        }
        reports.push(r);
    }
    if linked.is_empty() {
        return Ok(MaximalLinked {
            reports,
            linked,
            maximal: Vec::new(),
            pair_stability: Vec::new(),
            note: "no linked candidates".into(),
        });
    }
    let mut maximal = Vec::new();
    for &i in &linked {
        let dominated = linked.iter().any(|&j| {
            j != i
                && image_contained(&ring, &candidates[i], &candidates[j])
                && (!image_contained(&ring, &candidates[j], &candidates[i]) || j < i)
        });
        if !dominated {
            maximal.push(i);
        }
    }
    let mut pair_stability = Vec::new();
    for (k, &i) in maximal.iter().enumerate() {
        for &j in &maximal[k + 1..] {
            let s = sum_is_stable(candidates[i].source(), candidates[j].source(), ctx)?;
            pair_stability.push((i, j, s));
        }
    }
    let note = format!("{} linked of {} candidates, {} maximal", linked.len(), candidates.len(), maximal.len());
    Ok(MaximalLinked { reports, linked, maximal, pair_stability, note })
}

/// Isomorphism of the image of an embedding with a given module.
pub fn image_isomorphic_to(embedding: &ModuleHom, n: &PresentedModule, ctx: &SearchContext) -> Result<Ternary> {
    let ring = embedding.source().ring();
    let target = embedding.target();
    let k = embedding.matrix();
    let rel = projected_syzygies(ring, &k.hstack(target.relations()), k.ncols());
    let image = PresentedModule::new(ring.clone(), rel);
    Ok(Ternary::from(&is_isomorphic(&image, n, ctx)?))
}
