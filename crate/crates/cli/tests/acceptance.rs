//! Acceptance checks, one PASS/FAIL line per criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::sync::Arc;
use std::time::{Duration, Instant};

use linkage_cli::session::Decl;
use linkage_cli::{parse_session, run, Format, Invocation, Session};
use linkage_core::linkage::{
    ass_member, ideal_link_partner, image_isomorphic_to, is_linked_module, is_projective, lambda_op,
    linked_submodule_from_prime, stable_part, transpose, transpose_of_presentation, verify_ideal_link,
    DomainCertificate, Ternary, Verdict,
};
use linkage_core::module::{
    add_free, free_resolution, is_isomorphic, localize_module, minimalize, syzygy_basis, verify_resolution, Matrix,
    PresentedModule, SearchContext,
};
use linkage_core::ring::{
    buchberger, normal_form, s_polynomial, Ideal, Monomial, MonomialOrder, PolyRing, Polynomial, PrimeField,
};
use linkage_core::sheaf::{glue_linked, restrict, sheaf_is_linked, sheaf_is_locally_free, validate_glueing};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn fixture_text(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    std::fs::read_to_string(path).unwrap()
}

fn session(name: &str) -> Session {
    parse_session(&fixture_text(name)).unwrap()
}

fn module_names(s: &Session) -> Vec<String> {
    s.decls.iter().filter_map(|d| if let Decl::Module(m) = d { Some(m.name.clone()) } else { None }).collect()
}

fn json(text: &str, inv: &Invocation) -> (Value, i32) {
    let (out, code) = run(text, inv, Format::Json);
    (serde_json::from_str(&out).unwrap(), code)
}

fn ctx() -> SearchContext {
    SearchContext::default()
}

const MODULE_FIXTURES: &[&str] = &["nodal.session", "plane.session", "cubic.session", "line.session"];

fn random_poly(rng: &mut ChaCha8Rng, ring: &PolyRing, max_deg: u32, max_terms: usize) -> Polynomial {
    let n = ring.nvars();
    let terms = (0..rng.gen_range(1..=max_terms))
        .map(|_| {
            let mut e = vec![0u32; n];
            let d = rng.gen_range(0..=max_deg);
            for _ in 0..d {
                e[rng.gen_range(0..n)] += 1;
            }
            (Monomial::from_exponents(e), rng.gen_range(1..32003))
        })
        .collect();
    ring.from_terms(terms)
}

fn ring_with(nvars: usize, order: MonomialOrder) -> Arc<PolyRing> {
    let names = ["x", "y", "z"][..nvars].iter().map(|s| s.to_string()).collect();
    Arc::new(PolyRing::new(PrimeField::new(32003).unwrap(), names, order).unwrap())
}

fn gb_and_normal_forms() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut ideals = Vec::new();
    for k in 0..200 {
        let order = if k % 2 == 0 { MonomialOrder::Grevlex } else { MonomialOrder::Lex };
        let ring = ring_with(rng.gen_range(1..=3), order);
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..=3)).map(|_| random_poly(&mut rng, &ring, 3, 4)).collect();
        let gb = buchberger(&ring, &gens);
        for g in &gens {
            ensure!(normal_form(&ring, g, &gb).is_zero(), "generator not reduced to zero in ideal {k}");
        }
        for i in 0..gb.len() {
            for j in i + 1..gb.len() {
                let s = s_polynomial(&ring, &gb[i], &gb[j]);
                ensure!(normal_form(&ring, &s, &gb).is_zero(), "S-polynomial ({i},{j}) of ideal {k} is nonzero");
            }
        }
        ideals.push((ring.clone(), Ideal::new(ring, gens).unwrap()));
    }
    for t in 0..1000 {
        let (ring, ideal) = &ideals[t % ideals.len()];
        let f = random_poly(&mut rng, ring, 4, 5);
        let g = random_poly(&mut rng, ring, 4, 5);
        let c: u32 = rng.gen_range(0..32003);
        let nf = ideal.reduce(&f);
        ensure!(ideal.reduce(&nf) == nf, "normal form not idempotent in triple {t}");
        let lhs = ideal.reduce(&ring.add(&f, &ring.scale(&g, c)));
        let rhs = ring.add(&nf, &ring.scale(&ideal.reduce(&g), c));
        ensure!(lhs == rhs, "normal form not linear in triple {t}");
    }
    let took = start.elapsed();
    ensure!(took < Duration::from_secs(120), "took {took:?}");
    Ok(())
}

fn resolutions() -> Check {
    for f in ["plane.session", "nodal.session", "cubic.session"] {
        let s = session(f);
        for name in module_names(&s) {
            let m = s.module(&name).unwrap();
            let res = free_resolution(&m, 4).map_err(|e| format!("{f} {name}: {e}"))?;
            let ring = m.ring();
            for (i, w) in res.maps.windows(2).enumerate() {
                ensure!(w[0].mul(ring, &w[1]).is_zero(), "{f} {name}: d{} d{} is nonzero", i + 1, i + 2);
            }
            ensure!(verify_resolution(ring, &res), "{f} {name}: syzygies are not complete");
        }
    }
    let (v, code) =
        json(&fixture_text("nodal.session"), &Invocation { verify: true, ..Invocation::new("resolve", &["MX"]) });
    ensure!(code == 0 && v["exact"] == true, "resolve MX: {v}");
    for (d, want) in [("d1", "[[x]]"), ("d2", "[[y]]"), ("d3", "[[x]]"), ("d4", "[[y]]")] {
        ensure!(v["matrices"][d] == want, "resolve MX: {d} is {}", v["matrices"][d]);
    }
    Ok(())
}

fn padded(m: &PresentedModule) -> PresentedModule {
    let ring = m.ring();
    PresentedModule::new(ring.clone(), m.relations().block_diag(&Matrix::identity(ring, 1)))
}

fn stable_decomposition() -> Check {
    let c = ctx();
    for f in MODULE_FIXTURES {
        let s = session(f);
        for name in module_names(&s) {
            let m = s.module(&name).unwrap();
            let sp = stable_part(&m).map_err(|e| e.to_string())?;
            let split = add_free(&sp.module, sp.free_rank);
            ensure!(is_isomorphic(&m, &split, &c).unwrap().is_yes(), "{f} {name}: not the sum of its parts");
            let from_padded = stable_part(&transpose_of_presentation(&padded(&m))).unwrap().module;
            let minimal = stable_part(&transpose(&m)).unwrap().module;
            ensure!(
                is_isomorphic(&from_padded, &minimal, &c).unwrap().is_yes(),
                "{f} {name}: padded transpose differs stably"
            );
        }
    }
    let s = session("nodal.session");
    let from_padded = stable_part(&transpose_of_presentation(&s.module("PADDED").unwrap())).unwrap().module;
    let minimal = stable_part(&transpose(&s.module("MX").unwrap())).unwrap().module;
    ensure!(is_isomorphic(&from_padded, &minimal, &c).unwrap().is_yes(), "PADDED transpose differs stably from MX");
    Ok(())
}

fn node_pair() -> Check {
    let text = fixture_text("nodal.session");
    let (v, code) = json(&text, &Invocation::new("link-pair", &["MX", "MY"]));
    ensure!(code == 0 && v["verdict"] == "Linked", "link-pair: {v}");
    let deciding: Vec<&Value> =
        v["evidence"].as_array().unwrap().iter().filter(|e| e["informational"] == false).collect();
    ensure!(deciding.len() == 2 && deciding.iter().all(|e| e["outcome"] == "Yes"), "iso verdicts: {v}");
    let s = session("nodal.session");
    let (x, ring) = s.ideal("X").unwrap();
    let (y, _) = s.ideal("Y").unwrap();
    let (z, _) = s.ideal("Z").unwrap();
    ensure!(verify_ideal_link(&ring, &x.gens, &y.gens, &z.gens).unwrap(), "(x) and (y) not linked by (0)");
    let (v, _) = json(&text, &Invocation::new("ideal-link", &["X", "Y", "Z"]));
    ensure!(v["verdict"] == "Linked", "ideal-link: {v}");
    // the module route through lambda and the ideal route agree
    let partner = ideal_link_partner(&ring, &x.gens, &z.gens).unwrap();
    let cyclic = |gens: Vec<Polynomial>| {
        let gens: Vec<Polynomial> = gens.iter().map(|g| ring.reduce(g)).filter(|g| !g.is_zero()).collect();
        PresentedModule::cyclic(ring.clone(), gens)
    };
    let via_lambda = lambda_op(&s.module("MX").unwrap());
    let via_ideal = cyclic(partner.generators().to_vec());
    ensure!(is_isomorphic(&via_lambda, &via_ideal, &ctx()).unwrap().is_yes(), "lambda(R/(x)) differs from R/(x):0");
    ensure!(is_isomorphic(&via_ideal, &s.module("MY").unwrap(), &ctx()).unwrap().is_yes(), "partner is not (y)");
    Ok(())
}

fn pid_has_no_linked_modules() -> Check {
    let text = fixture_text("line.session");
    let names = module_names(&session("line.session"));
    ensure!(names.len() >= 6, "only {} modules over k[u]", names.len());
    for name in &names {
        let (v, code) = json(&text, &Invocation::new("link-module", &[name]));
        ensure!(code == 0 && v["verdict"] == "NotLinked", "{name}: {v}");
    }
    Ok(())
}

fn projectivity() -> Check {
    for f in MODULE_FIXTURES.iter().chain(&["nodal_chain.session", "projective_line.session"]) {
        let s = session(f);
        for d in &s.decls {
            let Decl::Module(decl) = d else { continue };
            // fixtures declare free modules with zero relations only
            let free = decl.relations.is_zero();
            let m = s.module(&decl.name).unwrap();
            ensure!(is_projective(&m) == free, "{f} {}: projective is {}", decl.name, !free);
            let t = minimalize(&transpose(&m)).module;
            ensure!(t.is_zero() == free, "{f} {}: transpose zero is {}", decl.name, t.is_zero());
        }
    }
    Ok(())
}

fn lambda_localization() -> Check {
    let cases = [
        ("nodal.session", "MX", "y"),
        ("nodal.session", "MX", "x + y"),
        ("nodal.session", "MY", "x"),
        ("nodal.session", "K", "x + y"),
        ("nodal.session", "SUM", "x + 1"),
        ("nodal.session", "MIXED", "y"),
        ("nodal.session", "MX2", "x + y"),
        ("plane.session", "PT", "x"),
        ("plane.session", "KOS", "x + y + 1"),
        ("cubic.session", "C", "z"),
        ("cubic.session", "D", "x + y"),
        ("line.session", "T", "u + 1"),
    ];
    let c = ctx();
    for (f, name, elt) in cases {
        let s = session(f);
        let m = s.module(name).unwrap();
        let g = m.ring().parse(elt).unwrap();
        let local_first = stable_part(&lambda_op(&localize_module(&m, &g).unwrap())).unwrap().module;
        let lambda_first = stable_part(&localize_module(&lambda_op(&m), &g).unwrap()).unwrap().module;
        let v = is_isomorphic(&local_first, &lambda_first, &c).unwrap();
        ensure!(v.is_yes(), "{f} {name} at {elt}: {}", v.label());
    }
    Ok(())
}

fn sheaves() -> Check {
    let c = ctx();
    let s = session("nodal_chain.session");
    let chain = &s.sheaf("F").unwrap().sheaf;
    ensure!(validate_glueing(chain).overall == Ternary::Yes, "nodal chain does not validate");
    let g = glue_linked(chain.charts.clone(), chain.transitions.clone(), &c).map_err(|e| e.to_string())?;
    ensure!(g.co_rank == (1, 1), "co-rank {:?}", g.co_rank);
    ensure!(sheaf_is_linked(&g.sheaf, &c).unwrap().overall == Ternary::Yes, "glued sheaf is not linked");
    for (i, chart) in chain.charts.iter().enumerate() {
        let one = chart.ring().one();
        let out = restrict(&g.sheaf, i, &one).unwrap();
        let input = restrict(chain, i, &one).unwrap();
        ensure!(is_isomorphic(&out, &input, &c).unwrap().is_yes(), "chart {} changed", chart.name);
    }
    let p = session("projective_line.session");
    let line = &p.sheaf("P1").unwrap().sheaf;
    let lf = sheaf_is_locally_free(line).unwrap();
    ensure!(lf.overall == Ternary::Yes && lf.rank == Some(1), "P1 locally free: {:?} rank {:?}", lf.overall, lf.rank);
    ensure!(sheaf_is_linked(line, &c).unwrap().overall == Ternary::No, "P1 reported linked");
    Ok(())
}

fn associated_primes() -> Check {
    let c = ctx();
    let s = session("nodal_chain.session");
    let m = s.module("O1").unwrap();
    let (p, ring) = s.ideal("P").unwrap();
    let (q, _) = s.ideal("Q").unwrap();
    let a = ass_member(&p.gens, &m, &c).unwrap();
    let y1 = ring.parse("y1").unwrap();
    ensure!(a.verdict == Ternary::Yes, "(x1) not associated: {}", a.detail);
    ensure!(a.witness.as_deref() == Some(&[y1][..]), "witness {:?}", a.witness);
    let cert = DomainCertificate::ZeroDivisors(ring.parse("x1").unwrap(), ring.parse("y1").unwrap());
    let sub = linked_submodule_from_prime(&p.gens, &m, &cert, &c).map_err(|e| e.to_string())?;
    ensure!(sub.report.verdict == Verdict::Linked, "submodule verdict {}", sub.report.verdict);
    // image presented by the first block of syzygies of [K | relations of M]
    let k = sub.embedding.matrix();
    let syz = syzygy_basis(&ring, &k.hstack(m.relations()));
    let image = PresentedModule::new(ring.clone(), syz.select_rows(&(0..k.ncols()).collect::<Vec<_>>()));
    let report = is_linked_module(&image, &c).unwrap();
    ensure!(report.verdict == Verdict::Linked, "image verdict {}", report.verdict);
    let m1 = s.module("M1").unwrap();
    ensure!(image_isomorphic_to(&sub.embedding, &m1, &c).unwrap() == Ternary::Yes, "image is not R/(x1)");
    let b = ass_member(&q.gens, &m, &c).unwrap();
    ensure!(b.verdict == Ternary::No, "(x1,y1) reported {:?}", b.verdict);
    ensure!(linked_submodule_from_prime(&q.gens, &m, &cert, &c).is_err(), "(x1,y1) produced a submodule");
    Ok(())
}

fn determinism() -> Check {
    let runs: &[(&str, &str, &[&str])] = &[
        ("nodal.session", "gb", &["XY"]),
        ("nodal.session", "nf", &["X", "x^2 + y + 1"]),
        ("nodal.session", "colon", &["Z", "X"]),
        ("nodal.session", "intersect", &["X", "Y"]),
        ("nodal.session", "resolve", &["K"]),
        ("nodal.session", "betti", &["SUM"]),
        ("nodal.session", "dual", &["MIXED"]),
        ("nodal.session", "hom", &["MX", "SUM"]),
        ("nodal.session", "transpose", &["K"]),
        ("nodal.session", "lambda", &["MX2"]),
        ("nodal.session", "lambda", &["F"]),
        ("nodal.session", "stable-part", &["PADDED"]),
        ("nodal.session", "link-pair", &["SUM", "SUM"]),
        ("nodal.session", "link-module", &["MIXED"]),
        ("nodal.session", "projective", &["F2"]),
        ("nodal.session", "ideal-link", &["X", "Y", "Z"]),
        ("nodal.session", "ass", &["X", "F"]),
        ("plane.session", "link-module", &["KOS"]),
        ("cubic.session", "link-pair", &["A", "B"]),
        ("line.session", "link-module", &["TT"]),
        ("nodal_chain.session", "sheaf-validate", &["F"]),
        ("nodal_chain.session", "sheaf-lambda", &["F"]),
        ("nodal_chain.session", "sheaf-linked", &["F"]),
        ("nodal_chain.session", "sheaf-glue", &["F"]),
        ("nodal_chain.session", "linked-subsheaf", &["O", "C1", "P"]),
        ("projective_line.session", "sheaf-locally-free", &["P1"]),
        ("projective_line.session", "sheaf-linked", &["P1"]),
    ];
    for (f, cmd, args) in runs {
        let text = fixture_text(f);
        let mut inv = Invocation::new(cmd, args);
        if *cmd == "linked-subsheaf" {
            inv.witness = Some("x1|y1".into());
        }
        let first = run(&text, &inv, Format::Json);
        let second = run(&text, &inv, Format::Json);
        ensure!(first == second, "{f} {cmd} {args:?} differs between runs");
        ensure!(first.1 != 1, "{f} {cmd} {args:?} failed: {}", first.0);
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("Groebner bases and normal forms", gb_and_normal_forms),
        ("free resolutions", resolutions),
        ("stable part and padded transpose", stable_decomposition),
        ("linked pair on the node", node_pair),
        ("no linked modules over a PID", pid_has_no_linked_modules),
        ("projective exactly when free", projectivity),
        ("lambda commutes with localization", lambda_localization),
        ("glued sheaves", sheaves),
        ("associated primes and linked submodules", associated_primes),
        ("deterministic json output", determinism),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {title} ({secs:.1}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {title} ({secs:.1}s): {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
