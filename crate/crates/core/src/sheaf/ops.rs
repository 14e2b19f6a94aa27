use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::data::{invert_over, Chart, GluedSheaf, Transition};
use super::report::{ChartReport, SheafReport};
use super::validate::validate_glueing;
use crate::error::{Error, Result};
use crate::linkage::{
    ass_member, check_certificate, is_linked_module, is_projective, linked_submodule_from_prime, AssMembership,
    DomainCertificate, LinkedSubmodule, Ternary, Verdict,
};
use crate::module::{
    betti, localize_module, minimalize, prune_columns, syzygy_basis, Lifter, Matrix, Minimized, PresentedModule,
    SearchContext,
};
use crate::ring::Polynomial;

pub fn restrict(s: &GluedSheaf, chart: usize, f: &Polynomial) -> Result<PresentedModule> {
    let c = s.charts.get(chart).ok_or_else(|| Error::Glueing("no such chart".into()))?;
    localize_module(&c.module, f)
}

fn negated(d: &[i64]) -> Vec<i64> {
    d.iter().map(|x| -x).collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Construction {
    Transpose,
    Lambda,
}

/// The chart-wise construction on the minimal presentation, before the
/// result is minimalized. Generators are dual to the relations (transpose)
/// or to the generators (lambda) of the minimal presentation.
fn raw_construction(min: &PresentedModule, which: Construction) -> PresentedModule {
    let ring = min.ring();
    let grading = min.grading();
    match which {
        Construction::Transpose => {
            let degs = grading.map(|g| negated(&g.relations));
            PresentedModule::new(ring.clone(), min.relations().transpose()).with_optional_degrees(degs)
        }
        Construction::Lambda => {
            let degs = grading.map(|g| negated(&g.generators));
            let k = syzygy_basis(ring, &min.relations().transpose());
            let k = prune_columns(ring, &k, degs.as_deref());
            PresentedModule::new(ring.clone(), k).with_optional_degrees(degs)
        }
    }
}

struct Prepared {
    min: Minimized,
    result: Minimized,
}

fn prepare(c: &Chart, which: Construction) -> Prepared {
    let min = minimalize(&c.module);
    let result = minimalize(&raw_construction(&min.module, which));
    Prepared { min, result }
}

fn tracked(t: &Transition, ps: &Prepared, pt: &Prepared, middle: &Matrix) -> Result<Option<Matrix>> {
    let ring = t.target_ring.presentation();
    let m = t
        .target_embedding()
        .apply_matrix(&pt.result.to_min)
        .mul(ring, middle)
        .mul(ring, &t.chart_map().apply_matrix(&ps.result.from_min));
    let h = t.module_hom(&ps.result.module, &pt.result.module, &m)?;
    Ok(h.is_isomorphism().then_some(m))
}

/// The transition between the constructed modules induced by functoriality.
/// For the transpose the lift of the inverse to relations is only defined up
/// to syzygies of the localized source relations; random corrections by
/// those syzygies are tried when the first lift does not give a bijection.
fn induced(
    s: &GluedSheaf,
    t: &Transition,
    prep: &[Prepared],
    which: Construction,
    ctx: &SearchContext,
) -> Result<Matrix> {
    let name = s.overlap_name(t.source, t.target);
    let (ps, pt) = (&prep[t.source], &prep[t.target]);
    let ring = t.target_ring.presentation();
    let c = t.chart_map();
    let e = t.target_embedding();
    let g_min = e.apply_matrix(&pt.min.to_min).mul(ring, &t.matrix).mul(ring, &c.apply_matrix(&ps.min.from_min));
    let hom = t.module_hom(&ps.min.module, &pt.min.module, &g_min)?;
    let ginv = invert_over(&hom).ok_or_else(|| Error::Glueing(format!("{name}: module map is not invertible")))?;
    let not_iso = || Error::Glueing(format!("{name}: induced map is not an isomorphism"));
    if which == Construction::Lambda {
        return tracked(t, ps, pt, &ginv.transpose())?.ok_or_else(not_iso);
    }
    let a_s = c.apply_matrix(ps.min.module.relations());
    let a_t = e.apply_matrix(pt.min.module.relations());
    let lifter = Lifter::new(ring, a_s.nrows(), &a_s.columns());
    let image = ginv.mul(ring, &a_t);
    let mut cols = Vec::with_capacity(image.ncols());
    for col in image.columns() {
        cols.push(
            lifter
                .lift(ring, &col)
                .ok_or_else(|| Error::Glueing(format!("{name}: relations are not carried to relations")))?,
        );
    }
    let lift = Matrix::from_columns(a_s.ncols(), cols);
    if let Some(m) = tracked(t, ps, pt, &lift.transpose())? {
        return Ok(m);
    }
    let syz = syzygy_basis(ring, &a_s);
    if syz.ncols() == 0 {
        return Err(not_iso());
    }
    let p = ring.ambient().field().characteristic();
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    for _ in 0..ctx.trials {
        let coeffs: Vec<Vec<Polynomial>> = (0..syz.ncols())
            .map(|_| (0..lift.ncols()).map(|_| ring.ambient().constant(rng.gen_range(0..p))).collect())
            .collect();
        let correction = syz.mul(ring, &Matrix::from_rows(coeffs, lift.ncols())?);
        if let Some(m) = tracked(t, ps, pt, &lift.add(ring, &correction).transpose())? {
            return Ok(m);
        }
    }
    Err(not_iso())
}

fn apply_chartwise(s: &GluedSheaf, which: Construction, ctx: &SearchContext) -> Result<(GluedSheaf, SheafReport)> {
    let prep: Vec<Prepared> = s.charts.iter().map(|c| prepare(c, which)).collect();
    let mut transitions = Vec::with_capacity(s.transitions.len());
    for t in &s.transitions {
        let matrix = induced(s, t, &prep, which, ctx)?;
        transitions.push(Transition { matrix, ..t.clone() });
    }
    let charts = s.charts.iter().zip(&prep).map(|(c, p)| Chart::new(c.name.clone(), p.result.module.clone())).collect();
    let out = GluedSheaf::new(charts, transitions)?;
    let report = validate_glueing(&out);
    Ok((out, report))
}

pub fn sheaf_transpose(s: &GluedSheaf, ctx: &SearchContext) -> Result<(GluedSheaf, SheafReport)> {
    apply_chartwise(s, Construction::Transpose, ctx)
}

pub fn sheaf_lambda(s: &GluedSheaf, ctx: &SearchContext) -> Result<(GluedSheaf, SheafReport)> {
    apply_chartwise(s, Construction::Lambda, ctx)
}

fn require_valid(s: &GluedSheaf) -> Result<SheafReport> {
    let v = validate_glueing(s);
    if v.overall != Ternary::Yes {
        let why: Vec<String> = v.failures().map(|e| format!("{}: {}", e.name, e.detail)).collect();
        return Err(Error::Glueing(format!("invalid glueing ({})", why.join("; "))));
    }
    Ok(v)
}

fn verdict_outcome(v: Verdict) -> Ternary {
    match v {
        Verdict::Linked => Ternary::Yes,
        Verdict::NotLinked => Ternary::No,
        Verdict::Inconclusive => Ternary::Inconclusive,
    }
}

pub fn sheaf_is_linked(s: &GluedSheaf, ctx: &SearchContext) -> Result<SheafReport> {
    let valid = require_valid(s)?;
    let mut charts = Vec::new();
    for c in &s.charts {
        let r = is_linked_module(&c.module, ctx)?;
        charts.push(ChartReport {
            chart: c.name.clone(),
            outcome: verdict_outcome(r.verdict),
            summary: r.verdict.to_string(),
            evidence: r.evidence,
        });
    }
    Ok(SheafReport::assemble(charts, valid.checks))
}

pub fn sheaf_is_locally_free(s: &GluedSheaf) -> Result<SheafReport> {
    let valid = require_valid(s)?;
    let mut charts = Vec::new();
    let mut ranks = Vec::new();
    for c in &s.charts {
        let proj = is_projective(&c.module);
        let summary = if proj {
            let r = betti(&c.module).generators;
            ranks.push(r);
            format!("free of rank {r}")
        } else {
            "transpose is nonzero".to_string()
        };
        charts.push(ChartReport {
            chart: c.name.clone(),
            outcome: Ternary::from_bool(proj),
            summary,
            evidence: Vec::new(),
        });
    }
    let mut report = SheafReport::assemble(charts, valid.checks);
    if report.overall == Ternary::Yes {
        if ranks.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::Glueing(format!("chart ranks disagree: {ranks:?}")));
        }
        report.rank = ranks.first().copied();
    }
    Ok(report)
}

/// Glued sheaf with chart presentations padded to a common co-rank.
#[derive(Clone, Debug)]
pub struct LinkedGlueing {
    pub sheaf: GluedSheaf,
    pub report: SheafReport,
    pub co_rank: (usize, usize),
}

pub fn glue_linked(charts: Vec<Chart>, transitions: Vec<Transition>, ctx: &SearchContext) -> Result<LinkedGlueing> {
    for c in &charts {
        match is_linked_module(&c.module, ctx)?.verdict {
            Verdict::Linked => {}
            Verdict::NotLinked => return Err(Error::Glueing(format!("chart {} not linked", c.name))),
            Verdict::Inconclusive => return Err(Error::Glueing(format!("chart {}: linkage inconclusive", c.name))),
        }
    }
    let s = GluedSheaf::new(charts, transitions)?;
    if !s.is_connected() {
        return Err(Error::Glueing("overlap graph is disconnected".into()));
    }
    require_valid(&s)?;
    let mins: Vec<Minimized> = s.charts.iter().map(|c| minimalize(&c.module)).collect();
    let t = mins.iter().map(|m| m.module.gens()).max().unwrap_or(0);
    let k = mins.iter().map(|m| m.module.relations().ncols() + t - m.module.gens()).max().unwrap_or(0);
    let mut charts = Vec::with_capacity(s.charts.len());
    for (c, m) in s.charts.iter().zip(&mins) {
        let ring = c.ring();
        let pad = t - m.module.gens();
        let a = m.module.relations().block_diag(&Matrix::identity(ring, pad));
        let a = a.hstack(&Matrix::zeros(t, k - a.ncols()));
        let degrees = m.module.degrees().map(|d| d.iter().copied().chain(std::iter::repeat_n(0, pad)).collect());
        charts.push(Chart::new(c.name.clone(), PresentedModule::new(ring.clone(), a).with_optional_degrees(degrees)));
    }
    let mut transitions = Vec::with_capacity(s.transitions.len());
    for tr in &s.transitions {
        let ring = tr.target_ring.presentation();
        let (ms, mt) = (&mins[tr.source], &mins[tr.target]);
        let g = tr
            .target_embedding()
            .apply_matrix(&mt.to_min)
            .mul(ring, &tr.matrix)
            .mul(ring, &tr.chart_map().apply_matrix(&ms.from_min));
        let pad = Matrix::zeros(t - mt.module.gens(), t - ms.module.gens());
        transitions.push(Transition { matrix: g.block_diag(&pad), ..tr.clone() });
    }
    let sheaf = GluedSheaf::new(charts, transitions)?;
    let mut report = validate_glueing(&sheaf);
    report.co_rank = Some((t, k));
    Ok(LinkedGlueing { sheaf, report, co_rank: (t, k) })
}

#[derive(Clone, Debug)]
pub struct SubsheafReport {
    pub outcome: Ternary,
    pub in_module: AssMembership,
    pub in_ring: AssMembership,
    pub submodule: Option<LinkedSubmodule>,
}

pub fn sheaf_has_linked_subsheaf(
    s: &GluedSheaf,
    chart: usize,
    p: &[Polynomial],
    cert: &DomainCertificate,
    ctx: &SearchContext,
) -> Result<SubsheafReport> {
    let c = s.charts.get(chart).ok_or_else(|| Error::Glueing("no such chart".into()))?;
    check_certificate(c.ring(), cert)?;
    let in_module = ass_member(p, &c.module, ctx)?;
    let in_ring = ass_member(p, &PresentedModule::free(c.ring().clone(), 1), ctx)?;
    let outcome = match (in_module.verdict, in_ring.verdict) {
        (Ternary::Yes, Ternary::Yes) => Ternary::Yes,
        (Ternary::No, _) | (_, Ternary::No) => Ternary::No,
        _ => Ternary::Inconclusive,
    };
    let submodule =
        if outcome == Ternary::Yes { Some(linked_submodule_from_prime(p, &c.module, cert, ctx)?) } else { None };
    Ok(SubsheafReport { outcome, in_module, in_ring, submodule })
}
