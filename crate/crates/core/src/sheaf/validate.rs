use std::sync::Arc;

use super::data::{GluedSheaf, RingMap, Transition};
use super::report::SheafReport;
use crate::error::Error;
use crate::linkage::{Evidence, Ternary};
use crate::module::Span;
use crate::ring::{localize_ring, LocalizedRing, Polynomial, QuotientRing};

fn check(name: String, ok: bool, pass: &str, fail: &str) -> Evidence {
    Evidence::new(name, Ternary::from_bool(ok), if ok { pass } else { fail })
}

fn transition_checks(s: &GluedSheaf, t: &Transition, out: &mut Vec<Evidence>) {
    let name = s.overlap_name(t.source, t.target);
    out.push(check(
        format!("{name} ring map"),
        t.forward.is_well_defined() && t.backward.is_well_defined(),
        "ring maps respect the defining relations",
        "a ring map does not respect the defining relations",
    ));
    out.push(check(
        format!("{name} ring inverse"),
        t.forward.is_left_inverse_of(&t.backward) && t.backward.is_left_inverse_of(&t.forward),
        "declared inverse composes to the identity on variables",
        "declared inverse does not compose to the identity",
    ));
    let hom = t.module_hom(&s.charts[t.source].module, &s.charts[t.target].module, &t.matrix);
    let (ok, detail) = match hom {
        Err(_) => (false, "module matrix is not well defined"),
        Ok(h) if !h.is_surjective() => (false, "module matrix is not surjective"),
        Ok(h) if !h.is_injective() => (false, "module matrix is not injective"),
        Ok(_) => (true, "module matrix is bijective"),
    };
    out.push(Evidence::new(format!("{name} module map"), Ternary::from_bool(ok), detail));
}

enum Triple {
    Holds,
    Fails(&'static str),
    Empty,
}

fn localize_or_empty(ring: &Arc<QuotientRing>, f: &Polynomial) -> Result<Option<LocalizedRing>, Error> {
    match localize_ring(ring, f) {
        Ok(l) => Ok(Some(l)),
        Err(Error::LocalizeAtZero) | Err(Error::ZeroRing) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Cocycle `g_jk ∘ g_ij = g_ik` on `U_i ∩ U_j ∩ U_k`, computed in a
/// localization of `R_i`.
fn triple_check(s: &GluedSheaf, i: usize, j: usize, k: usize) -> Result<Triple, Error> {
    let (Some(ij), Some(jk), Some(ik)) = (s.oriented(i, j), s.oriented(j, k), s.oriented(i, k)) else {
        return Ok(Triple::Fails("a transition cannot be inverted"));
    };
    let ri = s.charts[i].ring();
    let ni = ri.nvars();
    let nj = s.charts[j].ring().nvars();
    let nk = s.charts[k].ring().nvars();
    let h = ri.mul(ij.source_ring.element(), ik.source_ring.element());
    let Some(l0) = localize_or_empty(ri, &h)? else { return Ok(Triple::Empty) };
    let mut t = l0.presentation().clone();
    let internal = || Error::Internal("overlap element not invertible".into());
    // f_jk pulled back to chart i must be invertible on the triple overlap.
    let base = |t: &Arc<QuotientRing>| (0..ni).map(|v| t.ambient().var(v)).collect::<Vec<_>>();
    let phi = |t: &Arc<QuotientRing>, o: &Transition| RingMap::extend_to_localization(&o.source_ring, t, base(t));
    let rho_j0 = ij.backward.then(&phi(&t, &ij).ok_or_else(internal)?);
    let u = RingMap { source: jk.source_ring.base().clone(), target: t.clone(), images: rho_j0.images[..nj].to_vec() }
        .apply(jk.source_ring.element());
    if !t.is_unit(&u) {
        let Some(l1) = localize_or_empty(&t, &u)? else { return Ok(Triple::Empty) };
        t = l1.presentation().clone();
    }
    let rho_j = ij.backward.then(&phi(&t, &ij).ok_or_else(internal)?);
    let rho_k = ik.backward.then(&phi(&t, &ik).ok_or_else(internal)?);
    let Some(sigma) = RingMap::extend_to_localization(&jk.source_ring, &t, rho_j.images[..nj].to_vec()) else {
        return Ok(Triple::Fails("overlap elements disagree on the triple overlap"));
    };
    let route2 = jk.backward.then(&sigma);
    let agree = (0..nk).all(|v| t.is_zero(&t.sub(&route2.images[v], &rho_k.images[v])));
    if !agree {
        return Ok(Triple::Fails("ring maps do not compose consistently"));
    }
    let g_ij = rho_j.apply_matrix(&ij.matrix);
    let g_jk = route2.apply_matrix(&jk.matrix);
    let g_ik = rho_k.apply_matrix(&ik.matrix);
    let chart_k =
        RingMap { source: s.charts[k].ring().clone(), target: t.clone(), images: rho_k.images[..nk].to_vec() };
    let rel_k = chart_k.apply_matrix(s.charts[k].module.relations());
    let diff = g_jk.mul(&t, &g_ij).sub(&t, &g_ik);
    let span = Span::new(&t, rel_k.nrows(), &rel_k.columns());
    if diff.columns().iter().all(|c| span.contains(&t, c)) {
        Ok(Triple::Holds)
    } else {
        Ok(Triple::Fails("module maps do not compose to the third"))
    }
}

/// Connectivity, ring and module maps on every overlap, and cocycles on
/// triples of pairwise overlapping charts. Failures are report entries.
pub fn validate_glueing(s: &GluedSheaf) -> SheafReport {
    let mut checks = vec![check(
        "connected".into(),
        s.is_connected(),
        "overlap graph is connected",
        "overlap graph is disconnected",
    )];
    for t in &s.transitions {
        transition_checks(s, t, &mut checks);
    }
    let n = s.charts.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if s.transition_between(i, j).is_none()
                    || s.transition_between(j, k).is_none()
                    || s.transition_between(i, k).is_none()
                {
                    continue;
                }
                let name = format!("{}-{}-{} cocycle", s.charts[i].name, s.charts[j].name, s.charts[k].name);
                let e = match triple_check(s, i, j, k) {
                    Ok(Triple::Holds) => Evidence::new(name, Ternary::Yes, "cocycle holds"),
                    Ok(Triple::Empty) => Evidence::new(name, Ternary::Yes, "triple overlap is empty"),
                    Ok(Triple::Fails(why)) => Evidence::new(name, Ternary::No, why),
                    Err(e) => Evidence::new(name, Ternary::Inconclusive, e.to_string()),
                };
                checks.push(e);
            }
        }
    }
    SheafReport::assemble(Vec::new(), checks)
}
