use qhalg::algebra::{AlgebraRef, VertexSet};
use qhalg::chains::{for_each_order, ChainAnalyzer};
use qhalg::fixtures;
use qhalg::modules::{is_isomorphic, IsoConfig, Module};
use qhalg::rejective::*;
use qhalg::Error;

fn alg(name: &str) -> AlgebraRef {
    fixtures::algebra(name).unwrap()
}

fn vs(labels: &[usize]) -> VertexSet {
    labels.iter().map(|l| l - 1).collect()
}

fn chain(a: &AlgebraRef, levels: &[&[usize]]) -> SubcatChain {
    SubcatChain::new(a.clone(), levels.iter().map(|l| vs(l)).collect()).unwrap()
}

#[test]
fn rejective_subcategories() {
    let eg = alg("example_eg");
    assert!(is_right_rejective(&eg, vs(&[2, 3])));
    let pp3 = alg("pp_a3");
    assert!(!is_right_rejective(&pp3, vs(&[3])));
    assert!(is_coreflective(&pp3, vs(&[3])));
    for name in ["pp_a3", "example_eg", "cex_auslander"] {
        let a = alg(name);
        let all = VertexSet::all(a.n_vertices());
        assert!(is_right_rejective(&a, all) && is_left_rejective(&a, all));
        assert!(is_coreflective(&a, VertexSet::empty()));
    }
    assert!(is_coreflective(&alg("pp_a2"), vs(&[2])));
    assert!(is_coreflective(&eg, vs(&[2, 3])));
}

#[test]
fn corner_modules() {
    let eg = alg("example_eg");
    let all = corner_module(&eg, VertexSet::all(3)).unwrap();
    assert_eq!(all.dims(), Module::regular(eg.clone()).dims());
    assert!(all.is_projective());

    let m = corner_module(&alg("pp_a3"), vs(&[3])).unwrap();
    assert_eq!(m.dim(), 3);
    assert_eq!(m.algebra().dim(), 1);
    assert!(m.is_projective());

    let m = corner_module(&alg("schur_a2"), vs(&[2])).unwrap();
    assert_eq!(m.dim(), 2);
    assert_eq!(m.algebra().dim(), 1);
    m.check().unwrap();
}

#[test]
fn cosemisimple_pairs() {
    let eg = alg("example_eg");
    assert!(is_cosemisimple_pair(&eg, vs(&[2, 3]), vs(&[2, 3])).unwrap());
    assert!(is_cosemisimple_pair(&alg("pp_a2"), vs(&[1, 2]), vs(&[2])).unwrap());
    assert!(is_cosemisimple_pair(&eg, vs(&[1, 2, 3]), vs(&[2, 3])).unwrap());
    assert!(matches!(
        is_cosemisimple_pair(&eg, vs(&[2]), vs(&[3])),
        Err(Error::NotNested)
    ));
    // e1 A e1 = trunc: J(k[x]/(x^2)) survives the quotient by nothing
    assert!(!is_cosemisimple_pair(&alg("trunc_2"), vs(&[1]), VertexSet::empty()).unwrap());
}

#[test]
fn cosemisimple_right_rejective() {
    let eg = alg("example_eg");
    assert!(is_cosemisimple_right_rejective(&eg, VertexSet::all(3)).unwrap());
    assert!(is_cosemisimple_right_rejective(&eg, vs(&[2, 3])).unwrap());
    // e1 J(A) ≅ P(3)
    let e1j = qhalg::modules::radical_of(&Module::projective(eg.clone(), 0)).0;
    assert!(is_isomorphic(&e1j, &Module::projective(eg.clone(), 2), &IsoConfig::default()));
    assert!(!is_cosemisimple_right_rejective(&alg("pp_a2"), vs(&[2])).unwrap());
}

#[test]
fn chain_verification() {
    let eg = alg("example_eg");
    let c = chain(&eg, &[&[1, 2, 3], &[2, 3], &[3], &[]]);
    let cert = verify_chain(&c, SubcatKind::TotalRightRejective).unwrap();
    assert!(cert.passed);
    assert_eq!(cert.levels.len(), 3);

    let pp = alg("pp_a2");
    let c = chain(&pp, &[&[1, 2], &[2], &[]]);
    let cert = verify_chain(&c, SubcatKind::TotalRightRejective).unwrap();
    assert!(!cert.passed);
    assert_eq!(cert.witness, Some((1, "total-right-rejective".to_string())));
    assert!(verify_chain(&c, SubcatKind::Coreflective).unwrap().passed);

    let s2 = alg("aus_trunc_2");
    let c = chain(&s2, &[&[1, 2], &[2], &[]]);
    assert!(verify_chain(&c, SubcatKind::Rejective).unwrap().passed);
    let s2 = alg("schur_a2");
    let c = chain(&s2, &[&[1, 2], &[2], &[]]);
    assert!(verify_chain(&c, SubcatKind::Rejective).unwrap().passed);

    assert!(SubcatChain::new(eg.clone(), vec![vs(&[1, 2, 3]), vs(&[2])]).is_err());
    assert_eq!("coreflective".parse::<SubcatKind>().unwrap(), SubcatKind::Coreflective);
}

#[test]
fn chain_and_subcategory_verdicts_agree_on_fixtures() {
    for name in ["example_eg", "schur_a2", "schur_a3", "pp_a2", "pp_a3", "kq_a3", "aus_trunc_2", "trunc_2"] {
        let a = alg(name);
        let mut an = ChainAnalyzer::new(a.clone());
        for_each_order(a.n_vertices(), |o| {
            let cert = an.classify_order(&o);
            let c = SubcatChain::from_order(a.clone(), &o);
            let v = |k| verify_chain(&c, k).unwrap().passed;
            assert_eq!(cert.right_strong, v(SubcatKind::TotalRightRejective), "{name} {o:?}");
            assert_eq!(cert.left_strong, v(SubcatKind::TotalLeftRejective), "{name} {o:?}");
            assert_eq!(cert.strong, v(SubcatKind::Rejective), "{name} {o:?}");
            assert_eq!(cert.right_strong, cert.heredity && v(SubcatKind::Coreflective), "{name} {o:?}");
            assert_eq!(cert.left_strong, cert.heredity && v(SubcatKind::Reflective), "{name} {o:?}");
            true
        });
    }
}

#[test]
fn predicate_consistency_on_fixtures() {
    for name in ["example_eg", "schur_a3", "pp_a3", "cex_auslander", "aus_trunc_3"] {
        let a = alg(name);
        let n = a.n_vertices();
        let all = VertexSet::all(n);
        for bits in 0..(1u64 << n) {
            let s = VertexSet::from_bits(bits);
            if is_right_rejective(&a, s) {
                assert!(is_coreflective(&a, s), "{name} {s:?}");
            }
            assert_eq!(
                is_cosemisimple_right_rejective(&a, s).unwrap(),
                is_right_rejective(&a, s) && is_cosemisimple_pair(&a, all, s).unwrap(),
                "{name} {s:?}"
            );
            for sub in 0..(1u64 << n) {
                let inner = VertexSet::from_bits(sub);
                if inner.is_subset_of(s) {
                    let (x, y) = cosemisimple_clauses(&a, s, inner).unwrap();
                    assert_eq!(x, y, "{name} {s:?} {inner:?}");
                }
            }
        }
    }
}
