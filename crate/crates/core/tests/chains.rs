use qhalg::algebra::{two_sided_closure, AlgebraRef, VertexSet};
use qhalg::chains::*;
use qhalg::fixtures;
use qhalg::modules::{is_isomorphic, IsoConfig, Module};
use qhalg::Error;

fn alg(name: &str) -> AlgebraRef {
    fixtures::algebra(name).unwrap()
}

fn order(a: &AlgebraRef, labels: &[&str]) -> TotalOrder {
    TotalOrder::from_labels(a, labels).unwrap()
}

fn cfg() -> IsoConfig {
    IsoConfig::default()
}

/// Dimension of the two-sided ideal generated by the idempotents of `s`.
fn closure_dim(a: &AlgebraRef, s: VertexSet) -> usize {
    two_sided_closure(a, s.iter().map(|v| a.basis_vec(a.idempotent(v)))).dim()
}

#[test]
fn order_validation() {
    let eg = alg("example_eg");
    assert!(TotalOrder::new(vec![0, 0, 1], 3).is_err());
    assert!(TotalOrder::new(vec![0, 1], 3).is_err());
    assert!(matches!(TotalOrder::from_labels(&eg, &["1", "9", "2"]), Err(Error::UnknownVertex(_))));
    let o = order(&eg, &["2", "1", "3"]);
    assert_eq!(o.as_slice(), &[1, 0, 2]);
    assert_eq!(o.position(0), 1);
    assert_eq!(o.subsets()[1], [0usize, 2].into_iter().collect());
}

#[test]
fn chain_level_dims() {
    for (name, labels, dims) in [
        ("example_eg", vec!["1", "2", "3"], vec![7, 6, 4, 0]),
        ("schur_a2", vec!["1", "2"], vec![5, 4, 0]),
        ("trunc_3", vec!["1"], vec![3, 0]),
    ] {
        let a = alg(name);
        let o = order(&a, &labels);
        let c = order_to_chain(&a, &o);
        let got: Vec<usize> = c.levels.iter().map(|h| h.dim()).collect();
        assert_eq!(got, dims, "{name}");
        let oracle: Vec<usize> = c.subsets.iter().map(|&s| closure_dim(&a, s)).collect();
        assert_eq!(got, oracle, "{name}");
    }
}

#[test]
fn chain_from_subsets_rejects_bad_chains() {
    let eg = alg("example_eg");
    let s = |v: &[usize]| v.iter().copied().collect::<VertexSet>();
    assert!(chain_from_subsets(&eg, vec![s(&[0, 1, 2]), s(&[1]), s(&[])]).is_ok());
    assert!(chain_from_subsets(&eg, vec![s(&[0, 1]), s(&[])]).is_err());
    assert!(chain_from_subsets(&eg, vec![s(&[0, 1, 2]), s(&[1]), s(&[1]), s(&[])]).is_err());
    assert!(chain_from_subsets(&eg, vec![s(&[0, 1, 2]), s(&[1]), s(&[2]), s(&[])]).is_err());
}

#[test]
fn heredity_ideals() {
    assert!(is_heredity_ideal(&alg("schur_a2"), VertexSet::singleton(1)));
    assert!(!is_heredity_ideal(&alg("pp_a2"), VertexSet::singleton(1)));
    assert!(is_heredity_ideal(&alg("semisimple_3"), VertexSet::all(3)));
}

#[test]
fn classification_of_fixture_orders() {
    let eg = alg("example_eg");
    let c = classify_order(&eg, &order(&eg, &["1", "2", "3"]));
    assert!(c.heredity && c.right_strong && !c.left_strong);
    assert_eq!(c.classification, Classification::RightStrong);
    assert!(c.witness.is_some());

    let c = classify_order(&eg, &order(&eg, &["2", "1", "3"]));
    assert!(c.heredity && !c.right_strong && c.left_strong);
    assert_eq!(c.classification, Classification::LeftStrong);

    let s3 = alg("schur_a3");
    let c = classify_order(&s3, &order(&s3, &["1", "2", "3"]));
    assert!(c.heredity && !c.right_strong);

    let s2 = alg("schur_a2");
    let c = classify_order(&s2, &order(&s2, &["1", "2"]));
    assert_eq!(c.classification, Classification::Strong);
    assert!(c.witness.is_none());

    let pp = alg("pp_a2");
    let c = classify_order(&pp, &order(&pp, &["1", "2"]));
    assert_eq!(c.classification, Classification::None);
    assert_eq!(c.levels.len(), 2);
}

#[test]
fn left_classification_is_right_classification_of_opposite() {
    for name in ["example_eg", "schur_a3", "cex_auslander", "pp_a3"] {
        let a = alg(name);
        let op = a.opposite();
        let mut an = ChainAnalyzer::new(a.clone());
        let mut an_op = ChainAnalyzer::new(op.clone());
        for_each_order(a.n_vertices(), |o| {
            let (x, y) = (an.classify_order(&o), an_op.classify_order(&o));
            assert_eq!(x.left_strong, y.right_strong, "{name} {o:?}");
            assert_eq!(x.right_strong, y.left_strong, "{name} {o:?}");
            assert_eq!(x.heredity, y.heredity, "{name} {o:?}");
            true
        });
    }
}

#[test]
fn standard_modules() {
    let eg = alg("example_eg");
    let o = order(&eg, &["1", "2", "3"]);
    let d1 = standard_module(&eg, &o, 0);
    assert!(is_isomorphic(&d1.delta, &Module::simple(eg.clone(), 0), &cfg()));
    for v in [1, 2] {
        let d = standard_module(&eg, &o, v);
        assert!(is_isomorphic(&d.delta, &Module::projective(eg.clone(), v), &cfg()));
        assert!(d.kernel.is_zero());
    }
    for v in 0..3 {
        let d = standard_module(&eg, &o, v);
        assert!(d.is_certified(&o));
        assert_eq!(d.delta.dim() + d.kernel.dim(), Module::projective(eg.clone(), v).dim());
    }

    let s2 = alg("schur_a2");
    let o = order(&s2, &["1", "2"]);
    assert!(is_isomorphic(&standard_module(&s2, &o, 0).delta, &Module::simple(s2.clone(), 0), &cfg()));
    assert!(is_isomorphic(&standard_module(&s2, &o, 1).delta, &Module::projective(s2.clone(), 1), &cfg()));
}

#[test]
fn delta_criterion_matches_chain_verdict() {
    for name in ["example_eg", "schur_a3", "schur_a2", "semisimple_2", "pp_a2", "kq_a3"] {
        let a = alg(name);
        let mut an = ChainAnalyzer::new(a.clone());
        for_each_order(a.n_vertices(), |o| {
            assert_eq!(rsq_via_delta(&a, &o), an.classify_order(&o).right_strong, "{name} {o:?}");
            true
        });
    }
}

#[test]
fn layer_decompositions() {
    let eg = alg("example_eg");
    let levels = cps_decomposition_check(&eg, &order(&eg, &["1", "2", "3"]), &cfg()).unwrap();
    let mult: Vec<Option<usize>> = levels.iter().map(|l| l.multiplicity).collect();
    assert_eq!(mult, vec![Some(1), Some(1), Some(2)]);
    assert_eq!(levels[2].dim, 4);

    let s2 = alg("schur_a2");
    let levels = cps_decomposition_check(&s2, &order(&s2, &["1", "2"]), &cfg()).unwrap();
    assert_eq!(levels[1].multiplicity, Some(2));
    assert_eq!(levels[1].dim, 4);

    let pp = alg("pp_a2");
    assert!(cps_decomposition_check(&pp, &order(&pp, &["1", "2"]), &cfg()).is_err());
}

#[test]
fn order_search() {
    let s3 = alg("schur_a3");
    let r = find_orders(&s3, ChainKind::RightStrong, DEFAULT_SEARCH_BOUND).unwrap();
    assert!(r.found.is_empty());
    assert_eq!(r.examined, 6);
    assert!(!find_orders(&s3, ChainKind::Heredity, DEFAULT_SEARCH_BOUND).unwrap().found.is_empty());

    let eg = alg("example_eg");
    let r = find_orders(&eg, ChainKind::RightStrong, DEFAULT_SEARCH_BOUND).unwrap();
    assert!(r.found.contains(&order(&eg, &["1", "2", "3"])));
    assert!(r.found.windows(2).all(|w| w[0] < w[1]));

    let cex = alg("cex_auslander");
    let r = find_orders(&cex, ChainKind::Strong, DEFAULT_SEARCH_BOUND).unwrap();
    assert!(r.found.is_empty());
    assert_eq!(r.examined, 720);

    assert!(matches!(
        find_orders(&cex, ChainKind::Strong, 5),
        Err(Error::TooManyVertices(6, 5))
    ));
    assert!(find_first_order(&alg("schur_a2"), ChainKind::Strong, 8).unwrap().is_some());
}

#[test]
fn path_algebras_are_strong_for_every_order() {
    for name in ["kq_a3", "linear_a3", "linear_a1"] {
        let a = alg(name);
        let r = find_orders(&a, ChainKind::Strong, 8).unwrap();
        assert_eq!(r.found.len(), r.examined, "{name}");
    }
}

#[test]
fn global_dimension_two_construction() {
    for name in ["kq_a3", "cex_auslander", "schur_a2", "aus_trunc_3"] {
        let a = alg(name);
        let (o, cert) = gl2_rsq_order(&a, 8, &cfg()).unwrap();
        assert!(cert.right_strong, "{name}");
        assert_eq!(classify_order(&a, &o), cert);
        let (o, cert) = gl2_lsq_order(&a, 8, &cfg()).unwrap();
        assert!(cert.left_strong, "{name}");
        assert!(classify_order(&a, &o).left_strong);
    }
    let ss = alg("semisimple_3");
    assert_eq!(gl2_rsq_order(&ss, 4, &cfg()).unwrap().0, TotalOrder::identity(3));
    assert!(matches!(
        gl2_rsq_order(&alg("example_eg"), 4, &cfg()),
        Err(Error::GlobalDimensionTooLarge(_))
    ));
}

#[test]
fn reductions_keep_strength() {
    let eg = alg("example_eg");
    let o = order(&eg, &["1", "2", "3"]);
    let r = reduction_chains(&eg, &o).unwrap();
    assert!(r.right_strong && !r.left_strong);
    assert!(r.preserved());
    assert_eq!(r.levels.len(), 4);
    assert_eq!(r.levels[1].quotient_dim, 1);
    assert!(r.levels[1].quotient.right_strong);
    assert!(r.levels[1].corner.right_strong);
    assert_eq!(r.levels[0].corner, classify_order(&eg, &o));

    let s3 = alg("schur_a3");
    assert!(matches!(
        reduction_chains(&s3, &order(&s3, &["1", "2", "3"])),
        Err(Error::NotStrongChain)
    ));
}
