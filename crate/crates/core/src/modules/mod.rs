//! Finite-dimensional right modules given by action matrices.
//!
//! A module's basis is sorted by vertex: the first `dims[0]` coordinates span
//! `M e_0`, the next `dims[1]` span `M e_1`, and so on. Elements are row
//! vectors and the algebra acts on the right.

mod decompose;
mod enumerate;
mod hom;
mod poly;
mod resolution;

use std::fmt;
use std::ops::Range;
use std::sync::OnceLock;

use serde::Serialize;

use crate::algebra::{AlgebraRef, VertexSet};
use crate::error::{Error, Result};
use crate::exactlin::{is_zero_vec, unit_vec, EchelonBasis, Mat, Rat, Subspace};

pub use decompose::{decompose, is_split_local, Summand};
pub use enumerate::{indecomposables_nakayama, indecomposables_type_a};
pub use hom::{end_radical, hom, hom_dim, is_isomorphic, isomorphism, IsoConfig, DEFAULT_ISO_DRAWS, DEFAULT_ISO_SEED};
pub use resolution::{global_dimension, proj_dimension, projective_cover, syzygy, HomDim, MAX_SYZYGY_DIM};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DimensionVector(pub Vec<usize>);

impl DimensionVector {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

/// A homomorphism `x ↦ x · matrix`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    pub matrix: Mat,
}

#[derive(Clone)]
pub struct Module {
    alg: AlgebraRef,
    dims: Vec<usize>,
    offsets: Vec<usize>,
    /// Action of each generator of the algebra.
    gens: Vec<Mat>,
    actions: OnceLock<Vec<Mat>>,
}

fn offsets_of(dims: &[usize]) -> Vec<usize> {
    let mut o = Vec::with_capacity(dims.len() + 1);
    let mut acc = 0;
    o.push(0);
    for d in dims {
        acc += d;
        o.push(acc);
    }
    o
}

impl Module {
    pub(crate) fn from_parts(alg: AlgebraRef, dims: Vec<usize>, gens: Vec<Mat>) -> Module {
        let offsets = offsets_of(&dims);
        Module {
            alg,
            dims,
            offsets,
            gens,
            actions: OnceLock::new(),
        }
    }

    /// Builds a module from the actions of the algebra's generators, checking
    /// block shapes and every structure-constant identity.
    pub fn from_generator_actions(alg: AlgebraRef, dims: Vec<usize>, gens: Vec<Mat>) -> Result<Module> {
        if dims.len() != alg.n_vertices() {
            return Err(Error::InvalidRepresentation("one dimension per vertex required".into()));
        }
        if gens.len() != alg.generators().len() {
            return Err(Error::InvalidRepresentation("one matrix per generator required".into()));
        }
        let m = Module::from_parts(alg, dims, gens);
        let n = m.dim();
        for (g, gen) in m.alg.generators().iter().enumerate() {
            let a = &m.gens[g];
            if a.rows() != n || a.cols() != n {
                return Err(Error::InvalidRepresentation(format!("generator {g} has the wrong shape")));
            }
            for r in 0..n {
                for c in 0..n {
                    if !a[(r, c)].is_zero() && (m.vertex_of(r) != gen.source || m.vertex_of(c) != gen.target) {
                        return Err(Error::InvalidRepresentation(format!(
                            "generator {g} acts outside its vertex block"
                        )));
                    }
                }
            }
        }
        m.check_products().map_err(Error::InvalidRepresentation)?;
        Ok(m)
    }

    /// Representation of a quiver-presented algebra: one matrix per arrow,
    /// of shape `dims[source] × dims[target]`.
    pub fn from_representation(alg: AlgebraRef, dims: Vec<usize>, arrow_mats: Vec<Mat>) -> Result<Module> {
        let p = alg.presentation().ok_or(Error::NotQuiverPresented)?.clone();
        if dims.len() != alg.n_vertices() {
            return Err(Error::InvalidRepresentation("one dimension per vertex required".into()));
        }
        if arrow_mats.len() != p.arrows.len() {
            return Err(Error::InvalidRepresentation("one matrix per arrow required".into()));
        }
        let offsets = offsets_of(&dims);
        let n = offsets[dims.len()];
        let mut gens = Vec::new();
        for (arrow, mat) in p.arrows.iter().zip(&arrow_mats) {
            let (s, t) = (p.vertex_index(&arrow.source)?, p.vertex_index(&arrow.target)?);
            if mat.rows() != dims[s] || mat.cols() != dims[t] {
                return Err(Error::InvalidRepresentation(format!(
                    "arrow {} needs a {}x{} matrix",
                    arrow.name, dims[s], dims[t]
                )));
            }
            let mut g = Mat::zeros(n, n);
            g.set_block(offsets[s], offsets[t], mat);
            gens.push(g);
        }
        for (ri, rel) in p.relations.iter().enumerate() {
            let mut acc = Mat::zeros(n, n);
            for (c, path) in &rel.terms {
                let mut prod = Mat::identity(n);
                for name in path {
                    prod = prod.mul(&gens[p.arrow_index(name)?]);
                }
                acc.add_scaled(c, &prod);
            }
            if !acc.is_zero() {
                return Err(Error::RelationViolated(ri));
            }
        }
        Ok(Module::from_parts(alg, dims, gens))
    }

    pub fn zero(alg: AlgebraRef) -> Module {
        let n = alg.n_vertices();
        let g = alg.generators().len();
        Module::from_parts(alg, vec![0; n], vec![Mat::zeros(0, 0); g])
    }

    /// The simple module at vertex `i`; every generator lies in the radical and acts by zero.
    pub fn simple(alg: AlgebraRef, i: usize) -> Module {
        let mut dims = vec![0; alg.n_vertices()];
        dims[i] = 1;
        let g = alg.generators().len();
        Module::from_parts(alg, dims, vec![Mat::zeros(1, 1); g])
    }

    /// `A_A`, with basis the algebra basis sorted by target vertex (see [`regular_order`]).
    pub fn regular(alg: AlgebraRef) -> Module {
        let order = regular_order(&alg);
        let d = alg.dim();
        let mut pos = vec![0; d];
        for (k, &b) in order.iter().enumerate() {
            pos[b] = k;
        }
        let mut dims = vec![0; alg.n_vertices()];
        for b in alg.basis() {
            dims[b.target] += 1;
        }
        let gens = alg
            .generators()
            .iter()
            .map(|g| {
                let mut m = Mat::zeros(d, d);
                for (k, &b) in order.iter().enumerate() {
                    let prod = alg.mul_basis_left(b, &g.vector);
                    for (j, c) in prod.iter().enumerate() {
                        if !c.is_zero() {
                            m[(k, pos[j])] = c.clone();
                        }
                    }
                }
                m
            })
            .collect();
        Module::from_parts(alg, dims, gens)
    }

    /// `P(i) = e_i A`.
    pub fn projective(alg: AlgebraRef, i: usize) -> Module {
        let reg = Module::regular(alg.clone());
        let u = Subspace::from_vectors(reg.dim(), projective_coords(&alg, i).into_iter().map(|k| unit_vec(reg.dim(), k)));
        reg.submodule(&u).0
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.offsets[self.dims.len()]
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dimension_vector(&self) -> DimensionVector {
        DimensionVector(self.dims.clone())
    }

    pub fn block(&self, v: usize) -> Range<usize> {
        self.offsets[v]..self.offsets[v + 1]
    }

    pub fn vertex_of(&self, coord: usize) -> usize {
        self.offsets.partition_point(|&o| o <= coord) - 1
    }

    pub fn generator_actions(&self) -> &[Mat] {
        &self.gens
    }

    /// Action matrix of every algebra basis element.
    pub fn actions(&self) -> &[Mat] {
        self.actions.get_or_init(|| self.compute_actions())
    }

    fn compute_actions(&self) -> Vec<Mat> {
        let n = self.dim();
        let wd = self.alg.words();
        let word_mats: Vec<Mat> = wd
            .words
            .iter()
            .map(|w| {
                let mut m = self.idempotent_action(w.vertex);
                for &g in &w.gens {
                    m = m.mul(&self.gens[g]);
                }
                m
            })
            .collect();
        (0..self.alg.dim())
            .map(|b| {
                let mut m = Mat::zeros(n, n);
                for (w, c) in wd.basis_in_words.row(b).iter().enumerate() {
                    if !c.is_zero() {
                        m.add_scaled(c, &word_mats[w]);
                    }
                }
                m
            })
            .collect()
    }

    fn idempotent_action(&self, v: usize) -> Mat {
        let n = self.dim();
        let mut m = Mat::zeros(n, n);
        for k in self.block(v) {
            m[(k, k)] = Rat::one();
        }
        m
    }

    /// Matrix of right multiplication by the algebra element `x`.
    pub fn action_of(&self, x: &[Rat]) -> Mat {
        let n = self.dim();
        let mut m = Mat::zeros(n, n);
        for (b, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m.add_scaled(c, &self.actions()[b]);
            }
        }
        m
    }

    /// `m · b` for a basis element `b`.
    pub fn act_basis(&self, m: &[Rat], b: usize) -> Vec<Rat> {
        self.actions()[b].apply(m)
    }

    fn check_products(&self) -> std::result::Result<(), String> {
        let acts = self.actions();
        let d = self.alg.dim();
        for (g, gen) in self.alg.generators().iter().enumerate() {
            if self.action_of(&gen.vector) != self.gens[g] {
                return Err(format!("generator {g} is not reproduced by its word expansion"));
            }
        }
        for i in 0..d {
            for j in 0..d {
                let lhs = acts[i].mul(&acts[j]);
                let mut rhs = Mat::zeros(self.dim(), self.dim());
                for (k, c) in self.alg.product(i, j) {
                    rhs.add_scaled(c, &acts[*k]);
                }
                if lhs != rhs {
                    return Err(format!("action does not respect the product of basis elements {i} and {j}"));
                }
            }
        }
        Ok(())
    }

    /// Verifies the module axioms against the full structure-constant table.
    pub fn check(&self) -> Result<()> {
        self.check_products().map_err(Error::InvalidRepresentation)
    }

    /// Smallest submodule containing `vectors`.
    pub fn closure<I>(&self, vectors: I) -> Subspace
    where
        I: IntoIterator<Item = Vec<Rat>>,
    {
        let n = self.dim();
        let mut span = EchelonBasis::new(n);
        let mut queue = Vec::new();
        for v in vectors {
            for w in 0..self.dims.len() {
                let part = self.cut(&v, w);
                if span.insert(&part) {
                    queue.push(part);
                }
            }
        }
        while let Some(v) = queue.pop() {
            for g in &self.gens {
                let w = g.apply(&v);
                if span.insert(&w) {
                    queue.push(w);
                }
            }
        }
        span.into_subspace()
    }

    /// Component of `x` in `M e_v`.
    pub fn cut(&self, x: &[Rat], v: usize) -> Vec<Rat> {
        let r = self.block(v);
        x.iter()
            .enumerate()
            .map(|(k, c)| if r.contains(&k) { c.clone() } else { Rat::zero() })
            .collect()
    }

    pub fn is_submodule(&self, u: &Subspace) -> bool {
        u.basis_vectors().iter().all(|x| {
            (0..self.dims.len()).all(|v| u.contains_vec(&self.cut(x, v)))
                && self.gens.iter().all(|g| u.contains_vec(&g.apply(x)))
        })
    }

    /// Submodule carried by a subspace closed under the action; returns the
    /// module and its inclusion (rows = basis of `u`).
    pub fn submodule(&self, u: &Subspace) -> (Module, Mat) {
        let basis = u.basis().clone();
        let piv = u.pivots();
        let k = piv.len();
        let mut dims = vec![0; self.dims.len()];
        for &p in piv {
            dims[self.vertex_of(p)] += 1;
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut m = Mat::zeros(k, k);
                for r in 0..k {
                    let img = g.apply(basis.row(r));
                    for (c, &p) in piv.iter().enumerate() {
                        m[(r, c)] = img[p].clone();
                    }
                }
                m
            })
            .collect();
        (Module::from_parts(self.alg.clone(), dims, gens), basis)
    }

    /// Quotient by a submodule; returns the module and the projection (`dim M × dim Q`).
    pub fn quotient(&self, u: &Subspace) -> (Module, Mat) {
        let keep = u.non_pivots();
        let n = self.dim();
        let k = keep.len();
        let mut dims = vec![0; self.dims.len()];
        for &p in &keep {
            dims[self.vertex_of(p)] += 1;
        }
        let mut proj = Mat::zeros(n, k);
        for r in 0..n {
            let red = u.reduce(&unit_vec(n, r));
            for (c, &p) in keep.iter().enumerate() {
                proj[(r, c)] = red[p].clone();
            }
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut m = Mat::zeros(k, k);
                for (r, &p) in keep.iter().enumerate() {
                    let img = proj.apply(g.row(p));
                    for (c, x) in img.into_iter().enumerate() {
                        m[(r, c)] = x;
                    }
                }
                m
            })
            .collect();
        (Module::from_parts(self.alg.clone(), dims, gens), proj)
    }

    /// `M J` as a subspace.
    pub fn radical_space(&self) -> Subspace {
        let n = self.dim();
        let vecs = (0..n).flat_map(|r| self.gens.iter().map(move |g| g.row(r).to_vec()));
        self.closure(vecs)
    }

    /// Dimension vector of the top `M / MJ`.
    pub fn top_dims(&self) -> Vec<usize> {
        let rad = self.radical_space();
        let mut t = self.dims.clone();
        for &p in rad.pivots() {
            t[self.vertex_of(p)] -= 1;
        }
        t
    }

    pub fn is_projective(&self) -> bool {
        let t = self.top_dims();
        let cover: usize = t.iter().enumerate().map(|(v, k)| k * projective_coords(&self.alg, v).len()).sum();
        cover == self.dim()
    }

    /// Projective with top supported in `s`.
    pub fn in_add_of(&self, s: VertexSet) -> bool {
        self.is_projective() && self.top_dims().iter().enumerate().all(|(v, &k)| k == 0 || s.contains(v))
    }

    /// Direct sum with inclusions (rows: summand basis → sum coordinates).
    pub fn direct_sum(parts: &[&Module]) -> (Module, Vec<Mat>) {
        assert!(!parts.is_empty());
        let alg = parts[0].alg.clone();
        let nv = alg.n_vertices();
        let mut dims = vec![0; nv];
        for p in parts {
            for v in 0..nv {
                dims[v] += p.dims[v];
            }
        }
        // position of (part, local coordinate) in the sum
        let mut place: Vec<Vec<usize>> = parts.iter().map(|p| vec![0; p.dim()]).collect();
        let mut next = 0;
        for v in 0..nv {
            for (i, p) in parts.iter().enumerate() {
                for k in p.block(v) {
                    place[i][k] = next;
                    next += 1;
                }
            }
        }
        let total = next;
        let gens = (0..alg.generators().len())
            .map(|g| {
                let mut m = Mat::zeros(total, total);
                for (i, p) in parts.iter().enumerate() {
                    let a = &p.gens[g];
                    for r in 0..p.dim() {
                        for c in 0..p.dim() {
                            if !a[(r, c)].is_zero() {
                                m[(place[i][r], place[i][c])] = a[(r, c)].clone();
                            }
                        }
                    }
                }
                m
            })
            .collect();
        let incl = parts
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let mut m = Mat::zeros(p.dim(), total);
                for k in 0..p.dim() {
                    m[(k, place[i][k])] = Rat::one();
                }
                m
            })
            .collect();
        (Module::from_parts(alg, dims, gens), incl)
    }

    /// Whether `f` intertwines the actions of `self` and `other`.
    pub fn is_homomorphism(&self, other: &Module, f: &Mat) -> bool {
        f.rows() == self.dim()
            && f.cols() == other.dim()
            && self.gens.iter().zip(&other.gens).all(|(a, b)| a.mul(f) == f.mul(b))
            && (0..self.dims.len()).all(|v| {
                self.block(v)
                    .all(|r| (0..other.dim()).all(|c| f[(r, c)].is_zero() || other.vertex_of(c) == v))
            })
    }
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module({:?} over {})", self.dims, self.alg.name())
    }
}

/// Algebra basis indices in the coordinate order of [`Module::regular`].
pub fn regular_order(alg: &crate::algebra::Algebra) -> Vec<usize> {
    let mut order: Vec<usize> = (0..alg.dim()).collect();
    order.sort_by_key(|&b| (alg.basis()[b].target, b));
    order
}

/// Coordinates of `e_i A` inside the regular module.
fn projective_coords(alg: &crate::algebra::Algebra, i: usize) -> Vec<usize> {
    regular_order(alg)
        .iter()
        .enumerate()
        .filter(|(_, &b)| alg.basis()[b].source == i)
        .map(|(k, _)| k)
        .collect()
}

/// Algebra basis elements spanning `P(i)`, in the coordinate order of [`Module::projective`].
pub fn projective_basis(alg: &crate::algebra::Algebra, i: usize) -> Vec<usize> {
    let order = regular_order(alg);
    projective_coords(alg, i).into_iter().map(|k| order[k]).collect()
}

/// Converts an algebra element to coordinates of the regular module.
pub fn to_regular(alg: &crate::algebra::Algebra, x: &[Rat]) -> Vec<Rat> {
    regular_order(alg).iter().map(|&b| x[b].clone()).collect()
}

/// A right ideal (a subspace of the algebra closed under right multiplication) as a module.
pub fn ideal_as_module(alg: &AlgebraRef, h: &Subspace) -> Module {
    let reg = Module::regular(alg.clone());
    let u = Subspace::from_vectors(reg.dim(), h.basis_vectors().iter().map(|x| to_regular(alg, x)));
    reg.submodule(&u).0
}

/// `H / H'` for right ideals `H' ⊆ H`.
pub fn sub_quotient(alg: &AlgebraRef, h: &Subspace, h_inner: &Subspace) -> Result<Module> {
    if !h_inner.is_subspace_of(h) {
        return Err(Error::NotNested);
    }
    let reg = Module::regular(alg.clone());
    let u = Subspace::from_vectors(reg.dim(), h.basis_vectors().iter().map(|x| to_regular(alg, x)));
    let (hm, _) = reg.submodule(&u);
    let inner = Subspace::from_vectors(
        hm.dim(),
        h_inner.basis_vectors().iter().map(|x| {
            let r = to_regular(alg, x);
            u.pivots().iter().map(|&p| r[p].clone()).collect::<Vec<_>>()
        }),
    );
    Ok(hm.quotient(&inner).0)
}

pub fn projective(alg: &AlgebraRef, i: usize) -> Module {
    Module::projective(alg.clone(), i)
}

pub fn regular(alg: &AlgebraRef) -> Module {
    Module::regular(alg.clone())
}

pub fn simple(alg: &AlgebraRef, i: usize) -> Module {
    Module::simple(alg.clone(), i)
}

pub fn radical_of(m: &Module) -> (Module, Mat) {
    m.submodule(&m.radical_space())
}

pub fn top(m: &Module) -> (Module, Mat) {
    m.quotient(&m.radical_space())
}

pub fn submodule_generated(m: &Module, vectors: Vec<Vec<Rat>>) -> (Module, Mat) {
    m.submodule(&m.closure(vectors))
}

pub fn quotient_module(m: &Module, sub: &Subspace) -> Result<(Module, Mat)> {
    if sub.ambient_dim() != m.dim() || !m.is_submodule(sub) {
        return Err(Error::NotNested);
    }
    Ok(m.quotient(sub))
}

/// Sum of the images of all homomorphisms `source → target`, as a subspace of `target`.
pub fn trace_space(target: &Module, source: &Module) -> Subspace {
    let vecs = hom(source, target).into_iter().flat_map(|f| f.matrix.row_vecs());
    Subspace::from_vectors(target.dim(), vecs.filter(|v| !is_zero_vec(v)))
}

pub fn trace_submodule(target: &Module, source: &Module) -> (Module, Mat) {
    target.submodule(&trace_space(target, source))
}

pub fn is_projective(m: &Module) -> bool {
    m.is_projective()
}

pub fn in_add_of(m: &Module, s: VertexSet) -> bool {
    m.in_add_of(s)
}
