use std::sync::Arc;

use super::*;
use crate::module::tests::{mat, quotient};
use crate::module::{
    add_free, direct_sum, is_isomorphic, IsoVerdict, Matrix, ModuleHom, PresentedModule, SearchContext,
};
use crate::ring::QuotientRing;

fn ctx() -> SearchContext {
    SearchContext::default()
}

fn nodal() -> Arc<QuotientRing> {
    quotient(&["x", "y"], &["x*y"])
}

fn coker(r: &Arc<QuotientRing>, text: &str) -> PresentedModule {
    PresentedModule::new(r.clone(), mat(r, text))
}

fn iso(a: &PresentedModule, b: &PresentedModule) -> IsoVerdict {
    is_isomorphic(a, b, &ctx()).unwrap()
}

fn polys(r: &QuotientRing, items: &[&str]) -> Vec<crate::ring::Polynomial> {
    items.iter().map(|s| r.parse(s).unwrap()).collect()
}

#[test]
fn transpose_examples() {
    let r = nodal();
    let rx = coker(&r, "[[x]]");
    assert!(iso(&transpose(&rx), &rx).is_yes());
    assert!(transpose(&PresentedModule::free(r.clone(), 2)).is_zero());
    assert!(transpose(&PresentedModule::zero(r.clone())).is_zero());
}

#[test]
fn lambda_examples() {
    let r = nodal();
    let rx = coker(&r, "[[x]]");
    let ry = coker(&r, "[[y]]");
    assert!(iso(&lambda_op(&rx), &ry).is_yes());
    assert!(iso(&lambda_op(&ry), &rx).is_yes());
    assert!(lambda_op(&PresentedModule::free(r.clone(), 3)).is_zero());
    assert!(verify_lambda_sequence(&rx, &ctx()).unwrap());
}

#[test]
fn stable_parts() {
    let r = nodal();
    let rx = coker(&r, "[[x]]");
    let sp = stable_part(&add_free(&rx, 1)).unwrap();
    assert_eq!(sp.free_rank, 1);
    assert!(iso(&sp.module, &rx).is_yes());
    let sp = stable_part(&rx).unwrap();
    assert_eq!(sp.free_rank, 0);
    let sp = stable_part(&PresentedModule::free(r.clone(), 3)).unwrap();
    assert_eq!(sp.free_rank, 3);
    assert!(sp.module.is_zero());
}

#[test]
fn stability() {
    let r = nodal();
    let rx = coker(&r, "[[x]]");
    assert_eq!(is_stable(&rx, &ctx()).unwrap().verdict, Ternary::Yes);
    assert_eq!(is_stable(&PresentedModule::free(r.clone(), 1), &ctx()).unwrap().verdict, Ternary::No);
    assert_eq!(is_stable(&add_free(&rx, 1), &ctx()).unwrap().verdict, Ternary::No);
}

#[test]
fn linked_pairs() {
    let r = nodal();
    let rx = coker(&r, "[[x]]");
    let ry = coker(&r, "[[y]]");
    let rep = is_linked_pair(&rx, &ry, &ctx()).unwrap();
    assert_eq!(rep.verdict, Verdict::Linked);
    assert!(rep.evidence.iter().filter(|e| !e.informational).all(|e| e.outcome == Ternary::Yes));
    assert_eq!(is_linked_pair(&rx, &rx, &ctx()).unwrap().verdict, Verdict::NotLinked);
    let free = PresentedModule::free(r.clone(), 1);
    assert_eq!(is_linked_pair(&free, &rx, &ctx()).unwrap().verdict, Verdict::NotLinked);
    assert_eq!(is_linked_pair(&ry, &rx, &ctx()).unwrap().verdict, Verdict::Linked);
}

#[test]
fn linked_modules() {
    let r = nodal();
    let rep = is_linked_module(&coker(&r, "[[x]]"), &ctx()).unwrap();
    assert_eq!(rep.verdict, Verdict::Linked);
    assert!(rep.evidence.iter().any(|e| e.informational && e.outcome == Ternary::Yes));
    let k = quotient(&["u"], &[]);
    assert_eq!(is_linked_module(&coker(&k, "[[u]]"), &ctx()).unwrap().verdict, Verdict::NotLinked);
    assert_eq!(is_linked_module(&PresentedModule::free(r.clone(), 1), &ctx()).unwrap().verdict, Verdict::NotLinked);
}

#[test]
fn projectivity() {
    let r = nodal();
    assert!(is_projective(&PresentedModule::free(r.clone(), 2)));
    assert!(!is_projective(&coker(&r, "[[x]]")));
    let k = quotient(&["u"], &[]);
    assert!(!is_projective(&coker(&k, "[[u]]")));
}

#[test]
fn ideal_linkage() {
    let s = quotient(&["a", "b"], &[]);
    let partner = ideal_link_partner(&s, &polys(&s, &["a"]), &polys(&s, &["a*b"])).unwrap();
    assert_eq!(quotient_generators(&s, &partner), polys(&s, &["b"]));
    let partner = ideal_link_partner(&s, &polys(&s, &["b"]), &polys(&s, &["a*b"])).unwrap();
    assert_eq!(quotient_generators(&s, &partner), polys(&s, &["a"]));
    assert!(ideal_link_partner(&s, &polys(&s, &["a"]), &polys(&s, &["b"])).is_err());
    assert!(verify_ideal_link(&s, &polys(&s, &["a"]), &polys(&s, &["b"]), &polys(&s, &["a*b"])).unwrap());
    assert!(!verify_ideal_link(&s, &polys(&s, &["a"]), &polys(&s, &["a"]), &polys(&s, &["a*b"])).unwrap());

    let r = nodal();
    let partner = ideal_link_partner(&r, &polys(&r, &["x"]), &[]).unwrap();
    assert_eq!(quotient_generators(&r, &partner), polys(&r, &["y"]));
    assert!(verify_ideal_link(&r, &polys(&r, &["x"]), &polys(&r, &["y"]), &[]).unwrap());
}

#[test]
fn associated_primes() {
    let r = nodal();
    let free = PresentedModule::free(r.clone(), 1);
    let a = ass_member(&polys(&r, &["x"]), &free, &ctx()).unwrap();
    assert_eq!(a.verdict, Ternary::Yes);
    assert!(a.prime_verified);
    assert_eq!(a.witness.unwrap(), polys(&r, &["y"]));
    let a = ass_member(&polys(&r, &["x", "y"]), &free, &ctx()).unwrap();
    assert_eq!(a.verdict, Ternary::No);
    let a = ass_member(&polys(&r, &["x"]), &coker(&r, "[[x]]"), &ctx()).unwrap();
    assert_eq!(a.witness.unwrap(), polys(&r, &["1"]));
    assert!(ass_member(&polys(&r, &["1"]), &free, &ctx()).is_err());
}

#[test]
fn linked_submodules() {
    let r = nodal();
    let free = PresentedModule::free(r.clone(), 1);
    let cert = DomainCertificate::ZeroDivisors(r.parse("x").unwrap(), r.parse("y").unwrap());
    let sub = linked_submodule_from_prime(&polys(&r, &["x"]), &free, &cert, &ctx()).unwrap();
    assert_eq!(sub.embedding.display(), "[[y]]");
    assert!(sub.embedding.is_injective());
    assert_eq!(sub.report.verdict, Verdict::Linked);
    let rx = coker(&r, "[[x]]");
    let sub = linked_submodule_from_prime(&polys(&r, &["x"]), &rx, &cert, &ctx()).unwrap();
    assert_eq!(sub.embedding.display(), "[[1]]");

    let k = quotient(&["u"], &[]);
    let bad = DomainCertificate::ZeroDivisors(k.parse("u").unwrap(), k.parse("u").unwrap());
    let kfree = PresentedModule::free(k.clone(), 1);
    assert!(linked_submodule_from_prime(&polys(&k, &["u"]), &kfree, &bad, &ctx()).is_err());
    assert!(linked_submodule_from_prime(&polys(&k, &["u"]), &kfree, &DomainCertificate::Asserted, &ctx()).is_err());
}

#[test]
fn maximal_linked_candidates() {
    let r = nodal();
    let free = PresentedModule::free(r.clone(), 1);
    let rx = coker(&r, "[[x]]");
    let ry = coker(&r, "[[y]]");
    let emb_x = ModuleHom::new(rx.clone(), free.clone(), mat(&r, "[[y]]")).unwrap();
    let emb_y = ModuleHom::new(ry.clone(), free.clone(), mat(&r, "[[x]]")).unwrap();
    let one = maximal_linked_among(std::slice::from_ref(&emb_x), &ctx()).unwrap();
    assert_eq!(one.maximal, vec![0]);
    let f = ModuleHom::identity(&free);
    assert_eq!(maximal_linked_among(&[f], &ctx()).unwrap().note, "no linked candidates");
    assert_eq!(maximal_linked_among(&[], &ctx()).unwrap().note, "no candidates");
    let both = maximal_linked_among(&[emb_x.clone(), emb_y], &ctx()).unwrap();
    assert_eq!(both.maximal, vec![0, 1]);
    assert_eq!(both.pair_stability.len(), 1);
    assert_eq!(both.pair_stability[0].2, Ternary::Yes);
    assert_eq!(image_isomorphic_to(&emb_x, &rx, &ctx()).unwrap(), Ternary::Yes);
}

#[test]
fn padded_presentation_has_same_stable_part() {
    let r = nodal();
    let rx = coker(&r, "[[x]]");
    let padded = PresentedModule::new(r.clone(), mat(&r, "[[x]]").block_diag(&Matrix::identity(&r, 1)));
    let a = stable_part(&transpose_of_presentation(&padded)).unwrap().module;
    let b = stable_part(&transpose(&rx)).unwrap().module;
    assert!(iso(&a, &b).is_yes());
    let sum = direct_sum(&rx, &coker(&r, "[[y]]")).unwrap();
    assert!(iso(&lambda_op(&add_free(&sum, 2)), &lambda_op(&sum)).is_yes());
}
