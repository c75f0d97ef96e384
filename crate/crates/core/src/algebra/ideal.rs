use std::sync::Arc;

use super::{Algebra, AlgebraRef, BasisElem, Provenance, VertexSet};
use crate::error::{Error, Result};
use crate::exactlin::{is_zero_vec, EchelonBasis, Mat, Rat, Subspace};

/// Two-sided ideals are stored as subspaces of the algebra.
pub type Ideal = Subspace;

pub fn radical(a: &Algebra) -> Ideal {
    a.radical().clone()
}

/// Smallest two-sided ideal containing `vectors`.
pub fn two_sided_closure<I>(a: &Algebra, vectors: I) -> Ideal
where
    I: IntoIterator<Item = Vec<Rat>>,
{
    let d = a.dim();
    let mut mults: Vec<Vec<Rat>> = a.idempotents().iter().map(|&e| a.basis_vec(e)).collect();
    mults.extend(a.generators().iter().map(|g| g.vector.clone()));
    let mut span = EchelonBasis::new(d);
    let mut queue: Vec<Vec<Rat>> = Vec::new();
    for v in vectors {
        if span.insert(&v) {
            queue.push(v);
        }
    }
    while let Some(v) = queue.pop() {
        for m in &mults {
            for w in [a.mul(&v, m), a.mul(m, &v)] {
                if span.insert(&w) {
                    queue.push(w);
                }
            }
        }
    }
    span.into_subspace()
}

/// `A e_S A`.
pub fn idempotent_ideal(a: &Algebra, s: VertexSet) -> Ideal {
    let d = a.dim();
    let mut span = EchelonBasis::new(d);
    for i in 0..d {
        let t = a.basis()[i].target;
        if !s.contains(t) {
            continue;
        }
        for j in 0..d {
            if a.basis()[j].source != t {
                continue;
            }
            let mut v = vec![Rat::zero(); d];
            for (k, c) in a.product(i, j) {
                v[*k] += c;
            }
            span.insert(&v);
        }
    }
    span.into_subspace()
}

/// Span of all products `xy` with `x ∈ left`, `y ∈ right`.
pub fn ideal_product(a: &Algebra, left: &Subspace, right: &Subspace) -> Subspace {
    let mut span = EchelonBasis::new(a.dim());
    let rs = right.basis_vectors();
    for x in left.basis_vectors() {
        for y in &rs {
            span.insert(&a.mul(&x, y));
        }
    }
    span.into_subspace()
}

pub struct Quotient {
    pub algebra: AlgebraRef,
    /// Row `b` is the image of basis element `b` in the quotient basis.
    pub projection: Mat,
    /// Old vertex index to new vertex index, `None` for vertices killed by the ideal.
    pub vertex_map: Vec<Option<usize>>,
}

impl Quotient {
    pub fn project(&self, x: &[Rat]) -> Vec<Rat> {
        self.projection.apply(x)
    }
}

/// `A / H` for a two-sided ideal `H` of a basic algebra.
pub fn quotient_algebra(a: &Algebra, h: &Ideal) -> Result<Quotient> {
    let d = a.dim();
    let keep = h.non_pivots();
    let mut new_of = vec![usize::MAX; d];
    for (k, &b) in keep.iter().enumerate() {
        new_of[b] = k;
    }
    let mut vertex_map = vec![None; a.n_vertices()];
    let mut vertices = Vec::new();
    let mut idempotents = Vec::new();
    for v in 0..a.n_vertices() {
        let e = a.idempotent(v);
        if h.contains_vec(&a.basis_vec(e)) {
            continue;
        }
        if new_of[e] == usize::MAX {
            return Err(Error::NotBasic);
        }
        vertex_map[v] = Some(vertices.len());
        vertices.push(a.vertices()[v].clone());
        idempotents.push(new_of[e]);
    }
    let reduce_to = |x: &[Rat]| -> Vec<Rat> {
        let r = h.reduce(x);
        keep.iter().map(|&b| r[b].clone()).collect()
    };
    let mut projection = Mat::zeros(d, keep.len());
    for b in 0..d {
        let row = reduce_to(&a.basis_vec(b));
        projection.row_mut(b).clone_from_slice(&row);
    }
    let basis: Vec<BasisElem> = keep
        .iter()
        .map(|&b| {
            let e = &a.basis()[b];
            Ok(BasisElem {
                label: e.label.clone(),
                source: vertex_map[e.source].ok_or(Error::NotBasic)?,
                target: vertex_map[e.target].ok_or(Error::NotBasic)?,
                degree: None,
            })
        })
        .collect::<Result<_>>()?;
    let n = keep.len();
    let mut table = vec![Vec::new(); n * n];
    for (i, &bi) in keep.iter().enumerate() {
        for (j, &bj) in keep.iter().enumerate() {
            let p = a.product(bi, bj);
            if p.is_empty() {
                continue;
            }
            let mut v = vec![Rat::zero(); d];
            for (k, c) in p {
                v[*k] += c;
            }
            table[i * n + j] = sparse(&reduce_to(&v));
        }
    }
    let alg = Algebra::from_parts(
        format!("{}/I", a.name()),
        vertices,
        basis,
        idempotents,
        table,
        Provenance::Quotient,
    )?;
    let rad = Subspace::from_vectors(n, a.radical().basis_vectors().iter().map(|x| projection.apply(x)));
    let _ = alg.radical.set(rad);
    Ok(Quotient {
        algebra: Arc::new(alg),
        projection,
        vertex_map,
    })
}

#[derive(Clone, Debug)]
pub struct CornerEmbedding {
    /// Basis indices of `A` spanning `e_S A e_S`, in corner basis order.
    pub basis_indices: Vec<usize>,
    /// Vertices of `A` in corner vertex order.
    pub vertices: Vec<usize>,
    ambient: usize,
}

impl CornerEmbedding {
    pub fn embed(&self, x: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.ambient];
        for (k, &b) in self.basis_indices.iter().enumerate() {
            out[b] = x[k].clone();
        }
        out
    }

    /// Corner coordinates of `e_S x e_S`.
    pub fn restrict(&self, x: &[Rat]) -> Vec<Rat> {
        self.basis_indices.iter().map(|&b| x[b].clone()).collect()
    }

    pub fn corner_vertex(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }
}

/// `e_S A e_S` with vertices `S` in increasing order.
pub fn corner_algebra(a: &Algebra, s: VertexSet) -> Result<(AlgebraRef, CornerEmbedding)> {
    let verts: Vec<usize> = s.iter().filter(|&v| v < a.n_vertices()).collect();
    if verts.len() != s.len() {
        return Err(Error::InvalidOrder("vertex set exceeds the algebra".into()));
    }
    let idx = a.block_indices(s, s);
    let d = a.dim();
    let mut new_of = vec![usize::MAX; d];
    for (k, &b) in idx.iter().enumerate() {
        new_of[b] = k;
    }
    let vpos = |v: usize| verts.iter().position(|&w| w == v).expect("vertex in corner");
    let basis: Vec<BasisElem> = idx
        .iter()
        .map(|&b| {
            let e = &a.basis()[b];
            BasisElem {
                label: e.label.clone(),
                source: vpos(e.source),
                target: vpos(e.target),
                degree: e.degree,
            }
        })
        .collect();
    let n = idx.len();
    let mut table = vec![Vec::new(); n * n];
    for (i, &bi) in idx.iter().enumerate() {
        for (j, &bj) in idx.iter().enumerate() {
            table[i * n + j] = a.product(bi, bj).iter().map(|(k, c)| (new_of[*k], c.clone())).collect();
        }
    }
    let idempotents = verts.iter().map(|&v| new_of[a.idempotent(v)]).collect();
    let names = verts.iter().map(|&v| a.vertices()[v].clone()).collect();
    let alg = Algebra::from_parts(
        format!("{}[corner]", a.name()),
        names,
        basis,
        idempotents,
        table,
        Provenance::Corner,
    )?;
    let emb = CornerEmbedding {
        basis_indices: idx,
        vertices: verts,
        ambient: d,
    };
    let rad = Subspace::from_vectors(n, a.radical().basis_vectors().iter().map(|x| emb.restrict(&a.cut(x, s, s))));
    let _ = alg.radical.set(rad);
    Ok((Arc::new(alg), emb))
}

pub fn opposite(a: &Algebra) -> AlgebraRef {
    a.opposite()
}

pub(super) fn opposite_of(a: &Algebra) -> Algebra {
    let d = a.dim();
    let basis = a
        .basis
        .iter()
        .map(|b| BasisElem {
            label: b.label.clone(),
            source: b.target,
            target: b.source,
            degree: b.degree,
        })
        .collect();
    let mut table = vec![Vec::new(); d * d];
    for i in 0..d {
        for j in 0..d {
            table[i * d + j] = a.table[j * d + i].clone();
        }
    }
    let mut op = Algebra::from_parts(
        format!("{}^op", a.name()),
        a.vertices.clone(),
        basis,
        a.idempotents.clone(),
        table,
        Provenance::Opposite,
    )
    .expect("opposite of a valid algebra");
    op.fixed_generators = a.fixed_generators.clone();
    let _ = op.radical.set(a.radical().clone());
    op
}

fn sparse(v: &[Rat]) -> Vec<(usize, Rat)> {
    if is_zero_vec(v) {
        return Vec::new();
    }
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}
