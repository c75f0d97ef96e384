mod common;

use common::{word_of, PathOracle};
use qhalg::algebra::{
    build_algebra, corner_algebra, idempotent_ideal, is_nakayama, is_semisimple, quotient_algebra, two_sided_closure,
    Algebra, QuiverPresentation, Relation, VertexSet,
};
use qhalg::exactlin::{Rat, Subspace};
use qhalg::fixtures;

fn vs(labels: &[usize]) -> VertexSet {
    labels.iter().map(|l| l - 1).collect()
}

fn fixture_names() -> Vec<&'static str> {
    vec![
        "schur_a2",
        "schur_a3",
        "example_eg",
        "pp_a2",
        "pp_a3",
        "aus_trunc_2",
        "aus_trunc_3",
        "cex_auslander",
        "kq_a3",
        "semisimple_3",
        "trunc_4",
        "linear_a4",
    ]
}

fn degree_counts(a: &Algebra) -> Vec<usize> {
    let mut c = Vec::new();
    for b in a.basis() {
        let d = b.degree.unwrap();
        if c.len() <= d {
            c.resize(d + 1, 0);
        }
        c[d] += 1;
    }
    c
}

#[test]
fn graded_dimensions_match_path_oracle() {
    for name in fixture_names() {
        let p = fixtures::presentation(name).unwrap();
        let a = build_algebra(&p, 30).unwrap();
        let o = PathOracle::new(&p, degree_counts(&a).len() + 1);
        assert_eq!(degree_counts(&a), o.graded_dims(p.vertices.len()), "{name}");
    }
}

#[test]
fn structure_constants_match_path_oracle() {
    for name in fixture_names() {
        let p = fixtures::presentation(name).unwrap();
        let a = build_algebra(&p, 30).unwrap();
        let o = PathOracle::new(&p, degree_counts(&a).len() * 2);
        let d = a.dim();
        for i in 0..d {
            for j in 0..d {
                let (bi, bj) = (&a.basis()[i], &a.basis()[j]);
                if bi.target != bj.source {
                    assert!(a.product(i, j).is_empty());
                    continue;
                }
                let k = bi.degree.unwrap() + bj.degree.unwrap();
                let prod = a.product(i, j);
                if k == 0 {
                    assert_eq!(prod, &[(i, Rat::one())][..]);
                    continue;
                }
                let mut w = word_of(&a, i);
                w.extend(word_of(&a, j));
                let mut combo = vec![(Rat::one(), w)];
                for (m, c) in prod {
                    assert_eq!(a.basis()[*m].degree, Some(k));
                    combo.push((-c.clone(), word_of(&a, *m)));
                }
                assert!(o.in_ideal(k, &combo), "{name}: {} * {}", bi.label, bj.label);
            }
        }
    }
}

#[test]
fn preprojective_a2_basis() {
    let a = fixtures::algebra("pp_a2").unwrap();
    assert_eq!(a.dim(), 4);
    let mut labels: Vec<&str> = a.basis().iter().map(|b| b.label.as_str()).collect();
    labels.sort();
    assert_eq!(labels, ["alpha", "beta", "e1", "e2"]);
    assert_eq!(a.radical().dim(), 2);
    assert!(!is_semisimple(&a));
}

#[test]
fn schur_a2_shapes() {
    let a = fixtures::algebra("schur_a2").unwrap();
    assert_eq!(a.dim(), 5);
    let from = |v: usize| a.block_indices(VertexSet::singleton(v), a.all_vertices()).len();
    assert_eq!(from(0), 3);
    assert_eq!(from(1), 2);
}

#[test]
fn no_arrows_is_semisimple() {
    let a = fixtures::algebra("semisimple_2").unwrap();
    assert_eq!(a.dim(), 2);
    assert!(a.radical().is_zero());
    assert!(is_semisimple(&a));
    let free = build_algebra(&fixtures::linear(2), 30).unwrap();
    assert!(!is_semisimple(&free));
}

#[test]
fn closures() {
    let a = fixtures::algebra("pp_a2").unwrap();
    assert!(two_sided_closure(&a, vec![a.unit()]).is_full());
    assert!(two_sided_closure(&a, Vec::<Vec<Rat>>::new()).is_zero());
    let e2 = a.basis_vec(a.idempotent(1));
    assert_eq!(two_sided_closure(&a, vec![e2]).dim(), 3);
}

#[test]
fn idempotent_ideals_of_example_eg() {
    let a = fixtures::algebra("example_eg").unwrap();
    assert_eq!(a.dim(), 7);
    assert!(idempotent_ideal(&a, a.all_vertices()).is_full());
    let h23 = idempotent_ideal(&a, vs(&[2, 3]));
    assert_eq!(h23.dim(), 6);
    assert!(!h23.contains_vec(&a.basis_vec(a.idempotent(0))));
    let h3 = idempotent_ideal(&a, vs(&[3]));
    assert_eq!(h3.dim(), 4);
    let mut labels: Vec<String> = (0..a.dim())
        .filter(|&b| h3.contains_vec(&a.basis_vec(b)))
        .map(|b| a.basis()[b].label.clone())
        .collect();
    labels.sort();
    assert_eq!(labels, ["beta", "e3", "gamma", "gamma*beta"]);
}

#[test]
fn idempotent_ideal_matches_closure() {
    for name in fixture_names() {
        let a = fixtures::algebra(name).unwrap();
        let n = a.n_vertices();
        for bits in 0..(1u64 << n) {
            let s = VertexSet::from_bits(bits);
            let by_closure = two_sided_closure(&a, vec![a.idempotent_of(s)]);
            assert_eq!(idempotent_ideal(&a, s), by_closure, "{name} {s:?}");
        }
    }
}

#[test]
fn quotients() {
    let a = fixtures::algebra("example_eg").unwrap();
    let q = quotient_algebra(&a, &Subspace::full(a.dim())).unwrap();
    assert_eq!(q.algebra.dim(), 0);
    assert_eq!(q.algebra.n_vertices(), 0);
    let q = quotient_algebra(&a, &Subspace::zero(a.dim())).unwrap();
    assert_eq!(q.algebra.dim(), 7);
    assert_eq!(q.algebra.n_vertices(), 3);
    let q = quotient_algebra(&a, &idempotent_ideal(&a, vs(&[2, 3]))).unwrap();
    assert_eq!(q.algebra.dim(), 1);
    assert_eq!(q.algebra.n_vertices(), 1);
    assert_eq!(q.vertex_map, vec![Some(0), None, None]);
}

#[test]
fn quotient_projection_is_a_homomorphism() {
    for name in fixture_names() {
        let a = fixtures::algebra(name).unwrap();
        let n = a.n_vertices();
        for bits in 0..(1u64 << n) {
            let h = idempotent_ideal(&a, VertexSet::from_bits(bits));
            let q = quotient_algebra(&a, &h).unwrap();
            let b = &q.algebra;
            assert_eq!(b.dim() + h.dim(), a.dim());
            b.check_invariants().unwrap();
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    let xy = a.mul(&a.basis_vec(i), &a.basis_vec(j));
                    let lhs = q.project(&xy);
                    let rhs = b.mul(&q.project(&a.basis_vec(i)), &q.project(&a.basis_vec(j)));
                    assert_eq!(lhs, rhs, "{name} {bits}");
                }
            }
            assert_eq!(b.radical(), &b.trace_radical(), "{name} {bits}");
        }
    }
}

#[test]
fn corners() {
    let a = fixtures::algebra("pp_a3").unwrap();
    let (c, _) = corner_algebra(&a, vs(&[3])).unwrap();
    assert_eq!(c.dim(), 1);
    // alpha1*beta1 is a relation, so the corner at 1 is just k e1
    let (c, _) = corner_algebra(&a, vs(&[1])).unwrap();
    assert_eq!(c.dim(), 1);
    let (c, _) = corner_algebra(&a, vs(&[2])).unwrap();
    assert_eq!(c.dim(), 2);
    let (c, emb) = corner_algebra(&a, a.all_vertices()).unwrap();
    assert_eq!(c.dim(), a.dim());
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let x = emb.restrict(&a.basis_vec(i));
            let y = emb.restrict(&a.basis_vec(j));
            assert_eq!(emb.embed(&c.mul(&x, &y)), a.mul(&a.basis_vec(i), &a.basis_vec(j)));
        }
    }
}

#[test]
fn corner_radical_is_cut_of_radical() {
    for name in fixture_names() {
        let a = fixtures::algebra(name).unwrap();
        let n = a.n_vertices();
        for bits in 1..(1u64 << n) {
            let s = VertexSet::from_bits(bits);
            let (c, emb) = corner_algebra(&a, s).unwrap();
            c.check_invariants().unwrap();
            let cut = Subspace::from_vectors(
                a.dim(),
                a.radical().basis_vectors().iter().map(|x| a.cut(x, s, s)),
            );
            let embedded = Subspace::from_vectors(a.dim(), c.radical().basis_vectors().iter().map(|x| emb.embed(x)));
            assert_eq!(cut, embedded);
            assert_eq!(c.radical(), &c.trace_radical(), "{name} {s:?}");
        }
    }
}

#[test]
fn opposites() {
    for name in fixture_names() {
        let a = fixtures::algebra(name).unwrap();
        let op = a.opposite();
        assert_eq!(op.dim(), a.dim());
        op.check_invariants().unwrap();
        let opop = op.opposite();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                assert_eq!(opop.product(i, j), a.product(i, j));
                assert_eq!(op.product(i, j), a.product(j, i));
            }
        }
    }
    let b = fixtures::algebra("example_eg").unwrap();
    let op = b.opposite();
    assert_eq!(op.block_indices(VertexSet::singleton(1), op.all_vertices()).len(), 3);
}

#[test]
fn graded_radical_equals_trace_radical() {
    for name in fixture_names() {
        let a = fixtures::algebra(name).unwrap();
        assert_eq!(a.graded_radical().unwrap(), a.trace_radical(), "{name}");
        a.check_invariants().unwrap();
    }
}

#[test]
fn radical_is_nilpotent_and_quotient_is_semisimple() {
    for name in fixture_names() {
        let a = fixtures::algebra(name).unwrap();
        let ll = a.loewy_length();
        assert!(ll <= a.dim());
        assert!(a.radical_power(ll).is_zero());
        let q = quotient_algebra(&a, a.radical()).unwrap();
        assert!(q.algebra.trace_radical().is_zero());
        assert_eq!(q.algebra.dim(), a.n_vertices());
    }
}

#[test]
fn nakayama_detection() {
    assert!(is_nakayama(&fixtures::algebra("trunc_3").unwrap()).unwrap());
    assert!(!is_nakayama(&fixtures::algebra("kq_a3").unwrap()).unwrap());
    assert!(is_nakayama(&fixtures::algebra("linear_a2").unwrap()).unwrap());
    let a = fixtures::algebra("example_eg").unwrap();
    let (c, _) = corner_algebra(&a, vs(&[1, 2])).unwrap();
    assert!(is_nakayama(&c).is_err());
}

#[test]
fn cap_and_homogeneity_errors() {
    let p = QuiverPresentation::new("free", &["1"], &[("x", "1", "1")], vec![]);
    assert_eq!(build_algebra(&p, 30).unwrap_err(), qhalg::Error::CapExceeded(30));
    let p = QuiverPresentation::new(
        "mixed",
        &["1", "2"],
        &[("a", "1", "2"), ("b", "2", "1")],
        vec![Relation::difference(&["a", "b"], &["b", "a"])],
    );
    assert_eq!(build_algebra(&p, 30).unwrap_err(), qhalg::Error::NonHomogeneousRelation(0));
}
