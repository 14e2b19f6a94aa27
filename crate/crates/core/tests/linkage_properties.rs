mod common;

use common::{coker, ctx, mat, nodal, nodal_modules, quotient};
use linkage_core::linkage::{
    is_linked_module, is_linked_pair, is_projective, lambda_op, stable_part, transpose, transpose_of_presentation,
    verify_ideal_link, Verdict,
};
use linkage_core::module::{
    add_free, direct_sum, dual, hom_module, is_isomorphic, localize_module, minimalize, IsoVerdict, Matrix, ModuleHom,
    PresentedModule,
};
use proptest::prelude::*;

const ENTRIES: [&str; 7] = ["0", "x", "y", "x^2", "y^2", "x + y", "x^2 + y^2"];

fn arb_module() -> impl Strategy<Value = PresentedModule> {
    (1..=2usize, 1..=2usize)
        .prop_flat_map(|(rows, cols)| {
            prop::collection::vec(0..ENTRIES.len(), rows * cols).prop_map(move |e| (rows, cols, e))
        })
        .prop_map(|(rows, cols, e)| {
            let r = nodal();
            let text: Vec<String> = (0..rows)
                .map(|i| format!("[{}]", (0..cols).map(|j| ENTRIES[e[i * cols + j]]).collect::<Vec<_>>().join(", ")))
                .collect();
            coker(&r, &format!("[{}]", text.join(",")))
        })
}

fn yes(v: IsoVerdict) -> bool {
    v.is_yes()
}

fn stably_iso(a: &PresentedModule, b: &PresentedModule) -> bool {
    let sa = stable_part(a).unwrap().module;
    let sb = stable_part(b).unwrap().module;
    yes(is_isomorphic(&sa, &sb, &ctx()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn minimalization_tracks_an_isomorphism(m in arb_module()) {
        let min = minimalize(&m);
        let there = ModuleHom::new(m.clone(), min.module.clone(), min.to_min.clone()).unwrap();
        let back = ModuleHom::new(min.module.clone(), m.clone(), min.from_min.clone()).unwrap();
        prop_assert!(there.is_isomorphism());
        prop_assert!(back.compose(&there).unwrap().is_well_defined());
        let id = ModuleHom::identity(&m);
        let round = back.compose(&there).unwrap();
        let diff = round.matrix().sub(m.ring(), id.matrix());
        let span = m.relation_span();
        prop_assert!(diff.columns().iter().all(|c| span.contains(m.ring(), c)));
    }

    #[test]
    fn isomorphism_is_symmetric(a in arb_module(), b in arb_module()) {
        let ab = is_isomorphic(&a, &b, &ctx()).unwrap();
        let ba = is_isomorphic(&b, &a, &ctx()).unwrap();
        prop_assert_eq!(ab.is_yes(), ba.is_yes());
        prop_assert_eq!(ab.is_no(), ba.is_no());
        prop_assert!(is_isomorphic(&a, &a, &ctx()).unwrap().is_yes());
    }

    #[test]
    fn module_is_stable_part_plus_free(m in arb_module()) {
        let s = stable_part(&m).unwrap();
        let rebuilt = add_free(&s.module, s.free_rank);
        prop_assert!(yes(is_isomorphic(&m, &rebuilt, &ctx()).unwrap()), "{} vs {}", m.display(), rebuilt.display());
    }

    #[test]
    fn free_summands_do_not_change_operators(m in arb_module()) {
        let padded = add_free(&m, 1);
        prop_assert!(yes(is_isomorphic(&lambda_op(&m), &lambda_op(&padded), &ctx()).unwrap()));
        prop_assert!(yes(is_isomorphic(&transpose(&m), &transpose(&padded), &ctx()).unwrap()));
        prop_assert!(stably_iso(&transpose_of_presentation(&padded), &transpose(&m)));
    }

    #[test]
    fn double_transpose_is_the_stable_part(m in arb_module()) {
        let tt = transpose(&transpose(&m));
        prop_assert!(yes(is_isomorphic(&tt, &stable_part(&m).unwrap().module, &ctx()).unwrap()));
    }

    #[test]
    fn pair_linkage_is_symmetric(a in arb_module(), b in arb_module()) {
        let ab = is_linked_pair(&a, &b, &ctx()).unwrap().verdict;
        let ba = is_linked_pair(&b, &a, &ctx()).unwrap().verdict;
        prop_assert_eq!(ab, ba);
    }

    #[test]
    fn dual_commutes_with_direct_sum(a in arb_module(), b in arb_module()) {
        let lhs = dual(&direct_sum(&a, &b).unwrap());
        let rhs = direct_sum(&dual(&a), &dual(&b)).unwrap();
        prop_assert!(yes(is_isomorphic(&lhs, &rhs, &ctx()).unwrap()), "{} {} : {} vs {}", a.display(), b.display(), lhs.display(), rhs.display());
    }

    #[test]
    fn localization_commutes_with_direct_sum(a in arb_module(), b in arb_module(), f in 1..ENTRIES.len()) {
        let r = a.ring().clone();
        let f = r.parse(ENTRIES[f]).unwrap();
        let lhs = localize_module(&direct_sum(&a, &b).unwrap(), &f).unwrap();
        let rhs = direct_sum(&localize_module(&a, &f).unwrap(), &localize_module(&b, &f).unwrap()).unwrap();
        prop_assert!(yes(is_isomorphic(&lhs, &rhs, &ctx()).unwrap()));
    }

    #[test]
    fn hom_basis_is_well_defined(a in arb_module(), b in arb_module()) {
        let h = hom_module(&a, &b).unwrap();
        prop_assert_eq!(h.basis.len(), h.module.gens());
        prop_assert!(h.basis.iter().all(|g| g.is_well_defined()));
    }
}

#[test]
fn lambda_commutes_with_localization() {
    let r = nodal();
    let mut checked = 0;
    for m in nodal_modules() {
        for f in ["y", "x + y"] {
            let f = r.parse(f).unwrap();
            let lhs = lambda_op(&localize_module(&m, &f).unwrap());
            let rhs = localize_module(&lambda_op(&m), &f).unwrap();
            assert!(stably_iso(&lhs, &rhs), "{}", m.display());
            checked += 1;
        }
    }
    assert!(checked >= 10);
}

#[test]
fn golden_pair_agrees_with_ideal_linkage() {
    let r = nodal();
    let rep = is_linked_pair(&coker(&r, "[[x]]"), &coker(&r, "[[y]]"), &ctx()).unwrap();
    assert_eq!(rep.verdict, Verdict::Linked);
    let x = vec![r.parse("x").unwrap()];
    let y = vec![r.parse("y").unwrap()];
    assert!(verify_ideal_link(&r, &x, &y, &[]).unwrap());
}

#[test]
fn principal_ideal_domain_has_no_linked_modules() {
    let k = quotient(&["u"], &[]);
    let modules = vec![
        coker(&k, "[[u]]"),
        coker(&k, "[[u^2]]"),
        PresentedModule::free(k.clone(), 1),
        PresentedModule::free(k.clone(), 2),
        direct_sum(&PresentedModule::free(k.clone(), 1), &coker(&k, "[[u]]")).unwrap(),
        coker(&k, "[[u - 1]]"),
        PresentedModule::new(k.clone(), mat(&k, "[[u, 0],[0, u^3]]")),
    ];
    for m in &modules {
        assert_eq!(is_linked_module(m, &ctx()).unwrap().verdict, Verdict::NotLinked, "{}", m.display());
    }
}

#[test]
fn projective_exactly_when_free() {
    let r = nodal();
    let free = [PresentedModule::free(r.clone(), 1), PresentedModule::free(r.clone(), 2), coker(&r, "[[1, x]]")];
    for m in &free {
        assert!(is_projective(m));
        assert!(minimalize(&transpose(m)).module.is_zero());
    }
    for m in nodal_modules().iter().filter(|m| minimalize(m).module.relations().ncols() > 0) {
        assert!(!is_projective(m), "{}", m.display());
        assert!(!transpose(m).is_zero());
    }
    let _ = Matrix::zeros(0, 0);
}
