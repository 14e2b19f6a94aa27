use linkage_core::linkage::{
    ass_member, ideal_link_partner, is_linked_module, is_linked_pair, is_projective, is_stable, lambda_op,
    quotient_generators, transpose, verify_ideal_link, verify_lambda_sequence, DomainCertificate, LinkageReport,
};
use linkage_core::module::{
    betti, dual_with_functionals, free_resolution, hom_module, verify_resolution, PresentedModule, SearchContext,
};
use linkage_core::ring::{ideal_colon, ideal_intersection, Ideal, Polynomial, QuotientRing};
use linkage_core::sheaf::{
    glue_linked, sheaf_has_linked_subsheaf, sheaf_is_linked, sheaf_is_locally_free, sheaf_lambda, validate_glueing,
};
use linkage_core::{Error, Result};
use serde_json::{json, Value};

use crate::report::{ternary_name, CommandResult};
use crate::session::Session;

/// Everything after the session file on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invocation {
    pub command: String,
    pub args: Vec<String>,
    pub seed: u64,
    pub trials: usize,
    pub verify: bool,
    pub length: usize,
    pub witness: Option<String>,
}

impl Invocation {
    pub fn new(command: &str, args: &[&str]) -> Self {
        Invocation {
            command: command.to_string(),
            args: args.iter().map(|s| s.to_string()).collect(),
            seed: 0,
            trials: SearchContext::default().trials,
            verify: false,
            length: 4,
            witness: None,
        }
    }

    pub fn context(&self) -> SearchContext {
        SearchContext { seed: self.seed, trials: self.trials, verify: self.verify }
    }

    pub fn echo(&self) -> String {
        std::iter::once(self.command.as_str()).chain(self.args.iter().map(String::as_str)).collect::<Vec<_>>().join(" ")
    }
}

pub const COMMANDS: &[(&str, usize)] = &[
    ("gb", 1),
    ("nf", 2),
    ("colon", 2),
    ("intersect", 2),
    ("resolve", 1),
    ("betti", 1),
    ("dual", 1),
    ("hom", 2),
    ("transpose", 1),
    ("lambda", 1),
    ("stable-part", 1),
    ("link-pair", 2),
    ("link-module", 1),
    ("projective", 1),
    ("ideal-link", 3),
    ("ass", 2),
    ("sheaf-validate", 1),
    ("sheaf-lambda", 1),
    ("sheaf-linked", 1),
    ("sheaf-glue", 1),
    ("sheaf-locally-free", 1),
    ("linked-subsheaf", 3),
];

fn polys(ring: &QuotientRing, ps: &[Polynomial]) -> Value {
    ps.iter().map(|p| Value::String(ring.display(p))).collect()
}

fn ideal_value(ring: &QuotientRing, i: &Ideal) -> Value {
    polys(ring, &quotient_generators(ring, i))
}

fn linkage(out: &mut CommandResult, rep: &LinkageReport, trials: usize) {
    out.verdict(rep.verdict.to_string(), trials);
    out.evidence.extend(rep.evidence.iter().cloned());
    for (label, m) in &rep.partners {
        out.matrix(label.clone(), m.relations().display(m.ring()));
    }
}

fn module_matrix(out: &mut CommandResult, label: &str, m: &PresentedModule) {
    out.matrix(label, m.relations().display(m.ring()));
    if let Some(d) = m.degrees() {
        out.value(&format!("{label}_degrees"), json!(d));
    }
}

pub fn run_command(session: &Session, inv: &Invocation) -> Result<CommandResult> {
    let Some(&(_, arity)) = COMMANDS.iter().find(|(c, _)| *c == inv.command) else {
        return Err(Error::Precondition(format!("unknown command `{}`", inv.command)));
    };
    if inv.args.len() != arity {
        return Err(Error::Precondition(format!(
            "`{}` takes {arity} argument{}, got {}",
            inv.command,
            if arity == 1 { "" } else { "s" },
            inv.args.len()
        )));
    }
    let a = &inv.args;
    let ctx = inv.context();
    let mut out = CommandResult::new(inv.echo());
    match inv.command.as_str() {
        "gb" => {
            let (i, ring) = session.ideal(&a[0])?;
            let pre = ring.ideal(i.gens.clone())?;
            out.value("basis", polys(&ring, pre.groebner_basis()));
        }
        "nf" => {
            let (i, ring) = session.ideal(&a[0])?;
            let f =
                ring.parse(&a[1]).map_err(|e| Error::Parse { line: 0, column: e.column + 1, message: e.message })?;
            let pre = ring.ideal(i.gens.clone())?;
            out.value("normal_form", ring.display(&pre.reduce(&f)));
        }
        "colon" | "intersect" => {
            let (i, ri) = session.ideal(&a[0])?;
            let (j, rj) = session.ideal(&a[1])?;
            if !ri.same_as(&rj) {
                return Err(Error::DifferentRings);
            }
            let (pi, pj) = (ri.ideal(i.gens.clone())?, ri.ideal(j.gens.clone())?);
            if inv.command == "colon" {
                let c = ideal_colon(&pi, &pj)?;
                if c.divisor_is_zero {
                    out.note = Some("the divisor is the zero ideal".into());
                }
                out.value("ideal", ideal_value(&ri, &c.ideal));
            } else {
                out.value("ideal", ideal_value(&ri, &ideal_intersection(&pi, &pj)?));
            }
        }
        "resolve" => {
            let m = session.module(&a[0])?;
            let res = free_resolution(&m, inv.length)?;
            for (k, d) in res.maps.iter().enumerate() {
                out.matrix(format!("d{}", k + 1), d.display(m.ring()));
            }
            let mut ranks = res.ranks.clone();
            ranks.push(res.maps.last().map_or(0, |d| d.ncols()));
            out.value("ranks", json!(ranks));
            out.value("minimality", format!("{:?}", res.minimality));
            if inv.verify {
                out.value("exact", verify_resolution(m.ring(), &res));
            }
        }
        "betti" => {
            let b = betti(&session.module(&a[0])?);
            out.betti = Some(json!({ "generators": b.generators, "relations": b.relations, "exact": b.exact }));
        }
        "dual" => {
            let d = dual_with_functionals(&session.module(&a[0])?);
            module_matrix(&mut out, "dual", &d.module);
            out.matrix("functionals", d.functionals.display(d.module.ring()));
        }
        "hom" => {
            let (m, n) = (session.module(&a[0])?, session.module(&a[1])?);
            let h = hom_module(&m, &n)?;
            module_matrix(&mut out, "hom", &h.module);
            for (k, b) in h.basis.iter().enumerate() {
                out.matrix(format!("basis{}", k + 1), b.matrix().display(m.ring()));
            }
        }
        "transpose" => {
            let m = session.module(&a[0])?;
            let t = transpose(&m);
            if t.is_zero() {
                out.note = Some("transpose vanishes".into());
            }
            module_matrix(&mut out, "transpose", &t);
        }
        "lambda" => {
            let m = session.module(&a[0])?;
            let l = lambda_op(&m);
            if is_projective(&m) {
                out.note = Some("lambda of a free module vanishes".into());
            }
            module_matrix(&mut out, "lambda", &l);
            if inv.verify {
                out.value("sequence_exact", verify_lambda_sequence(&m, &ctx)?);
            }
        }
        "stable-part" => {
            let s = is_stable(&session.module(&a[0])?, &ctx)?;
            out.verdict(ternary_name(s.verdict), ctx.trials);
            out.value("free_rank", s.part.free_rank);
            out.value("detail", s.detail.clone());
            module_matrix(&mut out, "stable_part", &s.part.module);
        }
        "link-pair" => {
            let rep = is_linked_pair(&session.module(&a[0])?, &session.module(&a[1])?, &ctx)?;
            linkage(&mut out, &rep, ctx.trials);
        }
        "link-module" => {
            let rep = is_linked_module(&session.module(&a[0])?, &ctx)?;
            linkage(&mut out, &rep, ctx.trials);
        }
        "projective" => {
            let m = session.module(&a[0])?;
            let p = is_projective(&m);
            out.verdict(if p { "Yes" } else { "No" }, ctx.trials);
            module_matrix(&mut out, "transpose", &transpose(&m));
        }
        "ideal-link" => {
            let (i, ring) = session.ideal(&a[0])?;
            let (j, rj) = session.ideal(&a[1])?;
            let (x, rx) = session.ideal(&a[2])?;
            if !ring.same_as(&rj) || !ring.same_as(&rx) {
                return Err(Error::DifferentRings);
            }
            let linked = verify_ideal_link(&ring, &i.gens, &j.gens, &x.gens)?;
            out.verdict(if linked { "Linked" } else { "NotLinked" }, ctx.trials);
            out.value("partner", ideal_value(&ring, &ideal_link_partner(&ring, &i.gens, &x.gens)?));
        }
        "ass" => {
            let (p, rp) = session.ideal(&a[0])?;
            let m = session.module(&a[1])?;
            if !rp.same_as(m.ring()) {
                return Err(Error::DifferentRings);
            }
            let r = ass_member(&p.gens, &m, &ctx)?;
            out.verdict(ternary_name(r.verdict), ctx.trials);
            out.value("detail", r.detail.clone());
            out.value("prime_verified", r.prime_verified);
            if let Some(w) = &r.witness {
                out.value("witness", polys(&rp, w));
            }
        }
        "sheaf-validate" => {
            let s = session.sheaf(&a[0])?;
            out.sheaf(&validate_glueing(&s.sheaf), ctx.trials);
        }
        "sheaf-lambda" => {
            let s = session.sheaf(&a[0])?;
            let (l, rep) = sheaf_lambda(&s.sheaf, &ctx)?;
            for c in &l.charts {
                module_matrix(&mut out, &c.name, &c.module);
            }
            for t in &l.transitions {
                let label = format!("{}-{}", l.charts[t.source].name, l.charts[t.target].name);
                out.matrix(label, t.matrix.display(t.target_ring.presentation()));
            }
            out.sheaf(&rep, ctx.trials);
        }
        "sheaf-linked" => {
            let s = session.sheaf(&a[0])?;
            out.sheaf(&sheaf_is_linked(&s.sheaf, &ctx)?, ctx.trials);
        }
        "sheaf-glue" => {
            let s = session.sheaf(&a[0])?;
            let g = glue_linked(s.sheaf.charts.clone(), s.sheaf.transitions.clone(), &ctx)?;
            for c in &g.sheaf.charts {
                module_matrix(&mut out, &c.name, &c.module);
            }
            out.sheaf(&g.report, ctx.trials);
        }
        "sheaf-locally-free" => {
            let s = session.sheaf(&a[0])?;
            out.sheaf(&sheaf_is_locally_free(&s.sheaf)?, ctx.trials);
        }
        "linked-subsheaf" => {
            let s = session.sheaf(&a[0])?;
            let chart = s
                .sheaf
                .chart_index(&a[1])
                .ok_or_else(|| Error::Glueing(format!("sheaf {} has no chart {}", a[0], a[1])))?;
            let ring = s.sheaf.charts[chart].ring().clone();
            let (p, rp) = session.ideal(&a[2])?;
            if !rp.same_as(&ring) {
                return Err(Error::DifferentRings);
            }
            let cert = match &inv.witness {
                None => DomainCertificate::Asserted,
                Some(w) => {
                    let (f, g) = w
                        .split_once('|')
                        .ok_or_else(|| Error::Precondition("witness must have the form f|g".into()))?;
                    let parse = |t: &str| {
                        ring.parse(t).map_err(|e| Error::Parse { line: 0, column: e.column + 1, message: e.message })
                    };
                    DomainCertificate::ZeroDivisors(parse(f)?, parse(g)?)
                }
            };
            let r = sheaf_has_linked_subsheaf(&s.sheaf, chart, &p.gens, &cert, &ctx)?;
            out.verdict(ternary_name(r.outcome), ctx.trials);
            out.value("in_module", ternary_name(r.in_module.verdict));
            out.value("in_ring", ternary_name(r.in_ring.verdict));
            if let Some(w) = &r.in_module.witness {
                out.value("witness", polys(&ring, w));
            }
            if let Some(sub) = &r.submodule {
                out.matrix("embedding", sub.embedding.matrix().display(&ring));
                out.value("submodule_verdict", sub.report.verdict.to_string());
                out.evidence.extend(sub.report.evidence.iter().cloned());
            }
        }
        _ => unreachable!(),
    }
    Ok(out)
}
