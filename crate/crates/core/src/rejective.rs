//! Subcategories `add e_S A` of `proj A` and chains of them.
//!
//! Subcategories are named by vertex subsets. Left-handed predicates run on
//! the opposite algebra.

use serde::Serialize;

use crate::algebra::{
    corner_algebra, ideal_product, idempotent_ideal, quotient_algebra, AlgebraRef, VertexSet,
};
use crate::chains::{check_subsets, TotalOrder};
use crate::error::{Error, Result};
use crate::exactlin::{unit_vec, Mat, Subspace};
use crate::modules::{ideal_as_module, to_regular, Module};

/// Descending vertex subsets `S_0 = all ⊋ S_1 ⊋ ⋯ ⊋ S_n = ∅`.
#[derive(Clone, Debug)]
pub struct SubcatChain {
    pub alg: AlgebraRef,
    pub subsets: Vec<VertexSet>,
}

impl SubcatChain {
    pub fn new(alg: AlgebraRef, subsets: Vec<VertexSet>) -> Result<Self> {
        check_subsets(alg.n_vertices(), &subsets)?;
        Ok(SubcatChain { alg, subsets })
    }

    pub fn from_order(alg: AlgebraRef, o: &TotalOrder) -> Self {
        SubcatChain {
            subsets: o.subsets(),
            alg,
        }
    }
}

pub fn is_right_rejective(a: &AlgebraRef, s: VertexSet) -> bool {
    ideal_as_module(a, &idempotent_ideal(a, s)).is_projective()
}

pub fn is_left_rejective(a: &AlgebraRef, s: VertexSet) -> bool {
    is_right_rejective(&a.opposite(), s)
}

/// `A e_S` as a right module over `e_S A e_S`.
pub fn corner_module(a: &AlgebraRef, s: VertexSet) -> Result<Module> {
    let (c, emb) = corner_algebra(a, s)?;
    let mut coords = a.block_indices(VertexSet::all(a.n_vertices()), s);
    let cv = |b: usize| emb.corner_vertex(a.basis()[b].target).expect("target in S");
    coords.sort_by_key(|&b| (cv(b), b));
    let mut dims = vec![0; c.n_vertices()];
    for &b in &coords {
        dims[cv(b)] += 1;
    }
    let n = coords.len();
    let gens = c
        .generators()
        .iter()
        .map(|g| {
            let y = emb.embed(&g.vector);
            let mut m = Mat::zeros(n, n);
            for (r, &b) in coords.iter().enumerate() {
                let p = a.mul(&unit_vec(a.dim(), b), &y);
                for (k, &b2) in coords.iter().enumerate() {
                    m[(r, k)] = p[b2].clone();
                }
            }
            m
        })
        .collect();
    Ok(Module::from_parts(c, dims, gens))
}

/// `A e_S` is projective over `e_S A e_S`; the empty subcategory is coreflective.
pub fn is_coreflective(a: &AlgebraRef, s: VertexSet) -> bool {
    s.is_empty() || corner_module(a, s).expect("subset of the vertices").is_projective()
}

pub fn is_reflective(a: &AlgebraRef, s: VertexSet) -> bool {
    is_coreflective(&a.opposite(), s)
}

/// The two computations of cosemisimplicity of `add e' A` in `add e A`:
/// `J(eAe / eAe'Ae) = 0`, and `(AeA/Ae'A) J(A/Ae'A) (AeA/Ae'A) = 0`.
pub fn cosemisimple_clauses(a: &AlgebraRef, s: VertexSet, inner: VertexSet) -> Result<(bool, bool)> {
    if !inner.is_subset_of(s) {
        return Err(Error::NotNested);
    }
    let (c, emb) = corner_algebra(a, s)?;
    let inner_c: VertexSet = inner.iter().filter_map(|v| emb.corner_vertex(v)).collect();
    let q = quotient_algebra(&c, &idempotent_ideal(&c, inner_c))?;
    let corner_clause = q.algebra.radical().is_zero();

    let q = quotient_algebra(a, &idempotent_ideal(a, inner))?;
    let qa = &q.algebra;
    let h = idempotent_ideal(qa, s.iter().filter_map(|v| q.vertex_map[v]).collect());
    let ideal_clause = ideal_product(qa, &ideal_product(qa, &h, qa.radical()), &h).is_zero();
    Ok((corner_clause, ideal_clause))
}

pub fn is_cosemisimple_pair(a: &AlgebraRef, s: VertexSet, inner: VertexSet) -> Result<bool> {
    Ok(cosemisimple_clauses(a, s, inner)?.0)
}

/// `(1 − e_S) J(A) ∈ add e_S A` as a right module.
pub fn is_cosemisimple_right_rejective(a: &AlgebraRef, s: VertexSet) -> Result<bool> {
    if !a.is_basic() {
        return Err(Error::NotBasic);
    }
    let all = VertexSet::all(a.n_vertices());
    let rest = s.complement(a.n_vertices());
    let reg = Module::regular(a.clone());
    let u = Subspace::from_vectors(
        reg.dim(),
        a.radical().basis_vectors().iter().map(|x| to_regular(a, &a.cut(x, rest, all))),
    );
    Ok(reg.submodule(&u).0.in_add_of(s))
}

pub fn is_cosemisimple_left_rejective(a: &AlgebraRef, s: VertexSet) -> Result<bool> {
    is_cosemisimple_right_rejective(&a.opposite(), s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubcatKind {
    /// Each level right rejective in `proj A`, cosemisimple in its predecessor.
    TotalRightRejective,
    TotalLeftRejective,
    /// Each level cosemisimple and right and left rejective in its predecessor.
    Rejective,
    RightRejective,
    LeftRejective,
    /// Each level cosemisimple and coreflective in its predecessor.
    Coreflective,
    Reflective,
}

impl SubcatKind {
    pub const ALL: [SubcatKind; 7] = [
        SubcatKind::TotalRightRejective,
        SubcatKind::TotalLeftRejective,
        SubcatKind::Rejective,
        SubcatKind::RightRejective,
        SubcatKind::LeftRejective,
        SubcatKind::Coreflective,
        SubcatKind::Reflective,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SubcatKind::TotalRightRejective => "total-right-rejective",
            SubcatKind::TotalLeftRejective => "total-left-rejective",
            SubcatKind::Rejective => "rejective",
            SubcatKind::RightRejective => "right-rejective",
            SubcatKind::LeftRejective => "left-rejective",
            SubcatKind::Coreflective => "coreflective",
            SubcatKind::Reflective => "reflective",
        }
    }
}

impl std::str::FromStr for SubcatKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SubcatKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidOrder(format!("unknown subcategory chain kind {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubcatLevel {
    pub level: usize,
    pub subset: Vec<String>,
    /// Rejectivity or (co)reflectivity clause for this kind.
    pub inclusion: bool,
    /// Cosemisimple in the previous level.
    pub cosemisimple: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubcatCertificate {
    pub kind: SubcatKind,
    pub levels: Vec<SubcatLevel>,
    pub passed: bool,
    /// First failing level and clause.
    pub witness: Option<(usize, String)>,
}

/// Checks `S_{i}` against the whole algebra (total kinds) or inside the
/// corner algebra of `S_{i−1}` (relative kinds), plus cosemisimplicity of
/// `S_i` in `S_{i−1}`, for `1 ≤ i ≤ n`.
pub fn verify_chain(c: &SubcatChain, kind: SubcatKind) -> Result<SubcatCertificate> {
    let a = &c.alg;
    let mut levels = Vec::new();
    for i in 1..c.subsets.len() {
        let (prev, s) = (c.subsets[i - 1], c.subsets[i]);
        let inclusion = match kind {
            SubcatKind::TotalRightRejective => is_right_rejective(a, s),
            SubcatKind::TotalLeftRejective => is_left_rejective(a, s),
            _ => {
                let (corner, emb) = corner_algebra(a, prev)?;
                let sc: VertexSet = s.iter().filter_map(|v| emb.corner_vertex(v)).collect();
                match kind {
                    SubcatKind::Rejective => is_right_rejective(&corner, sc) && is_left_rejective(&corner, sc),
                    SubcatKind::RightRejective => is_right_rejective(&corner, sc),
                    SubcatKind::LeftRejective => is_left_rejective(&corner, sc),
                    SubcatKind::Coreflective => is_coreflective(&corner, sc),
                    SubcatKind::Reflective => is_reflective(&corner, sc),
                    _ => unreachable!(),
                }
            }
        };
        let cosemisimple = is_cosemisimple_pair(a, prev, s)?;
        levels.push(SubcatLevel {
            level: i,
            subset: s.iter().map(|v| a.vertices()[v].clone()).collect(),
            inclusion,
            cosemisimple,
        });
    }
    let witness = levels.iter().find_map(|l| {
        if !l.inclusion {
            Some((l.level, kind.name().to_string()))
        } else if !l.cosemisimple {
            Some((l.level, "cosemisimple".to_string()))
        } else {
            None
        }
    });
    Ok(SubcatCertificate {
        kind,
        passed: witness.is_none(),
        levels,
        witness,
    })
}
