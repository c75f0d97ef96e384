//! Finite-dimensional basic algebras over the rationals.
//!
//! Every algebra carries a basis of *vertex-pure* elements: each basis
//! element `b` satisfies `e_s · b · e_t = b` for its source `s` and target
//! `t`, and the idempotent `e_i` of each vertex is itself a basis element.
//! Products follow the left-to-right path convention: for arrows
//! `α: x → y` and `β: y → z` the product `αβ` is the path `x → y → z`.

mod build;
mod ideal;
mod vertexset;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::exactlin::{axpy, is_zero_vec, unit_vec, EchelonBasis, Mat, Rat, Subspace};

pub use build::{build_algebra, build_algebra_capped, Arrow, QuiverPresentation, Relation, DEFAULT_DEGREE_CAP, DEFAULT_DIM_CAP};
pub use ideal::{
    corner_algebra, idempotent_ideal, ideal_product, opposite, quotient_algebra, radical, two_sided_closure, CornerEmbedding,
    Ideal, Quotient,
};
pub use vertexset::VertexSet;

pub type AlgebraRef = Arc<Algebra>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElem {
    pub label: String,
    pub source: usize,
    pub target: usize,
    /// Path length for graded algebras; `None` once the grading is lost.
    pub degree: Option<usize>,
}

#[derive(Clone, Debug)]
pub enum Provenance {
    Quiver(Box<QuiverPresentation>),
    Quotient,
    Corner,
    Opposite,
    Endomorphism,
}

/// A vertex-pure element of the radical; together with the idempotents the
/// generators generate the algebra.
#[derive(Clone, Debug)]
pub struct Generator {
    pub source: usize,
    pub target: usize,
    pub vector: Vec<Rat>,
}

/// A product of generators starting at `vertex`; the empty word is `e_vertex`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    pub vertex: usize,
    pub gens: Vec<usize>,
}

/// Basis of the algebra made of generator words, with the change of basis.
#[derive(Clone, Debug)]
pub struct WordData {
    pub words: Vec<Word>,
    /// Row `b` expresses basis element `b` as a combination of `words`.
    pub basis_in_words: Mat,
}

pub struct Algebra {
    name: String,
    vertices: Vec<String>,
    basis: Vec<BasisElem>,
    idempotents: Vec<usize>,
    table: Vec<Vec<(usize, Rat)>>,
    provenance: Provenance,
    fixed_generators: Option<Vec<usize>>,
    radical: OnceLock<Subspace>,
    generators: OnceLock<Vec<Generator>>,
    words: OnceLock<WordData>,
    opposite: OnceLock<AlgebraRef>,
}

impl Algebra {
    /// Assembles an algebra from structure constants.
    ///
    /// `table[i * d + j]` is the sparse product `b_i · b_j`.
    pub fn from_parts(
        name: String,
        vertices: Vec<String>,
        basis: Vec<BasisElem>,
        idempotents: Vec<usize>,
        table: Vec<Vec<(usize, Rat)>>,
        provenance: Provenance,
    ) -> Result<Algebra> {
        let d = basis.len();
        if table.len() != d * d {
            return Err(Error::InternalDefect("structure table has wrong size".into()));
        }
        if idempotents.len() != vertices.len() {
            return Err(Error::InternalDefect("one idempotent per vertex required".into()));
        }
        for (v, &e) in idempotents.iter().enumerate() {
            let b = &basis[e];
            if b.source != v || b.target != v {
                return Err(Error::InternalDefect(format!("idempotent of vertex {v} is not pure")));
            }
        }
        Ok(Algebra {
            name,
            vertices,
            basis,
            idempotents,
            table,
            provenance,
            fixed_generators: None,
            radical: OnceLock::new(),
            generators: OnceLock::new(),
            words: OnceLock::new(),
            opposite: OnceLock::new(),
        })
    }

    pub(crate) fn with_fixed_generators(mut self, gens: Vec<usize>) -> Self {
        self.fixed_generators = Some(gens);
        self
    }

    pub(crate) fn with_radical(self, r: Subspace) -> Self {
        let _ = self.radical.set(r);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::all(self.n_vertices())
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElem] {
        &self.basis
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn presentation(&self) -> Option<&QuiverPresentation> {
        match &self.provenance {
            Provenance::Quiver(p) => Some(p),
            _ => None,
        }
    }

    pub fn is_quiver_presented(&self) -> bool {
        self.presentation().is_some()
    }

    /// Sparse product of two basis elements.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Rat)] {
        &self.table[i * self.dim() + j]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Rat> {
        unit_vec(self.dim(), i)
    }

    pub fn unit(&self) -> Vec<Rat> {
        let mut u = vec![Rat::zero(); self.dim()];
        for &e in &self.idempotents {
            u[e] = Rat::one();
        }
        u
    }

    /// Idempotent `e_S = Σ_{i ∈ S} e_i`.
    pub fn idempotent_of(&self, s: VertexSet) -> Vec<Rat> {
        let mut u = vec![Rat::zero(); self.dim()];
        for v in s.iter() {
            u[self.idempotents[v]] = Rat::one();
        }
        u
    }

    pub fn mul(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let d = self.dim();
        let mut out = vec![Rat::zero(); d];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = &self.table[i * d + j];
                if t.is_empty() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in t {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    /// `x · b_j`
    pub fn mul_basis_right(&self, x: &[Rat], j: usize) -> Vec<Rat> {
        let d = self.dim();
        let mut out = vec![Rat::zero(); d];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, c) in &self.table[i * d + j] {
                out[*k] += a * c;
            }
        }
        out
    }

    /// `b_i · x`
    pub fn mul_basis_left(&self, i: usize, x: &[Rat]) -> Vec<Rat> {
        let d = self.dim();
        let mut out = vec![Rat::zero(); d];
        for (j, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, c) in &self.table[i * d + j] {
                out[*k] += a * c;
            }
        }
        out
    }

    /// Basis indices with source in `s` and target in `t`.
    pub fn block_indices(&self, s: VertexSet, t: VertexSet) -> Vec<usize> {
        (0..self.dim())
            .filter(|&b| s.contains(self.basis[b].source) && t.contains(self.basis[b].target))
            .collect()
    }

    /// Projection of `x` onto the coordinates with source in `s` and target in `t`,
    /// i.e. `e_s · x · e_t`.
    pub fn cut(&self, x: &[Rat], s: VertexSet, t: VertexSet) -> Vec<Rat> {
        x.iter()
            .enumerate()
            .map(|(b, a)| {
                let e = &self.basis[b];
                if s.contains(e.source) && t.contains(e.target) {
                    a.clone()
                } else {
                    Rat::zero()
                }
            })
            .collect()
    }

    pub fn radical(&self) -> &Subspace {
        self.radical.get_or_init(|| self.graded_radical().unwrap_or_else(|| self.trace_radical()))
    }

    /// Positive-degree span; only defined for quiver-presented algebras.
    pub fn graded_radical(&self) -> Option<Subspace> {
        if !self.is_quiver_presented() {
            return None;
        }
        let d = self.dim();
        let vecs = (0..d)
            .filter(|&b| self.basis[b].degree.is_some_and(|g| g > 0))
            .map(|b| unit_vec(d, b));
        Some(Subspace::from_vectors(d, vecs))
    }

    /// Kernel of the trace form `(x, y) ↦ Tr(L_{xy})`; equals the Jacobson
    /// radical in characteristic zero.
    pub fn trace_radical(&self) -> Subspace {
        let d = self.dim();
        let traces: Vec<Rat> = (0..d)
            .map(|k| {
                (0..d)
                    .flat_map(|j| self.table[k * d + j].iter().filter(move |(m, _)| *m == j))
                    .map(|(_, c)| c.clone())
                    .sum()
            })
            .collect();
        let mut gram = Mat::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                let v: Rat = self.table[i * d + j].iter().map(|(k, c)| c * &traces[*k]).sum();
                gram[(i, j)] = v;
            }
        }
        gram.left_kernel()
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical().is_zero()
    }

    /// Split basic: the semisimple quotient has one dimension per vertex.
    pub fn is_basic(&self) -> bool {
        self.dim() - self.radical().dim() == self.n_vertices()
    }

    /// Radical power `J^k` as a subspace (`J^0 = A`).
    pub fn radical_power(&self, k: usize) -> Subspace {
        let d = self.dim();
        let j = self.radical().basis_vectors();
        let mut cur = Subspace::full(d);
        for _ in 0..k {
            let mut e = EchelonBasis::new(d);
            for x in cur.basis_vectors() {
                for y in &j {
                    e.insert(&self.mul(&x, y));
                }
            }
            cur = e.into_subspace();
            if cur.is_zero() {
                break;
            }
        }
        cur
    }

    /// Smallest `n` with `J^n = 0`.
    pub fn loewy_length(&self) -> usize {
        let mut n = 0;
        while !self.radical_power(n).is_zero() {
            n += 1;
        }
        n
    }

    pub fn generators(&self) -> &[Generator] {
        self.generators.get_or_init(|| self.compute_generators())
    }

    fn compute_generators(&self) -> Vec<Generator> {
        let d = self.dim();
        if let Some(fixed) = &self.fixed_generators {
            return fixed
                .iter()
                .map(|&b| Generator {
                    source: self.basis[b].source,
                    target: self.basis[b].target,
                    vector: unit_vec(d, b),
                })
                .collect();
        }
        let j = self.radical().basis_vectors();
        let mut j2 = Vec::new();
        for x in &j {
            for y in &j {
                let p = self.mul(x, y);
                if !is_zero_vec(&p) {
                    j2.push(p);
                }
            }
        }
        let n = self.n_vertices();
        let mut gens = Vec::new();
        for s in 0..n {
            for t in 0..n {
                let (ss, tt) = (VertexSet::singleton(s), VertexSet::singleton(t));
                let mut e = EchelonBasis::new(d);
                for y in &j2 {
                    e.insert(&self.cut(y, ss, tt));
                }
                for x in &j {
                    let c = self.cut(x, ss, tt);
                    if e.insert(&c) {
                        gens.push(Generator {
                            source: s,
                            target: t,
                            vector: c,
                        });
                    }
                }
            }
        }
        gens
    }

    pub fn words(&self) -> &WordData {
        self.words.get_or_init(|| self.compute_words())
    }

    fn compute_words(&self) -> WordData {
        let d = self.dim();
        let gens = self.generators();
        let mut span = EchelonBasis::new(d);
        let mut words = Vec::new();
        let mut values: Vec<Vec<Rat>> = Vec::new();
        let mut frontier = Vec::new();
        for v in 0..self.n_vertices() {
            let val = self.basis_vec(self.idempotents[v]);
            span.insert(&val);
            frontier.push(words.len());
            words.push(Word { vertex: v, gens: vec![] });
            values.push(val);
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in frontier {
                let end = word_target(&words[w], gens);
                for (g, gen) in gens.iter().enumerate() {
                    if gen.source != end {
                        continue;
                    }
                    let val = self.mul(&values[w], &gen.vector);
                    if span.insert(&val) {
                        let mut word = words[w].clone();
                        word.gens.push(g);
                        next.push(words.len());
                        words.push(word);
                        values.push(val);
                    }
                }
            }
            frontier = next;
        }
        let vmat = Mat::from_rows_with_cols(values, d).expect("word values");
        // rows of V are word values; basis_in_words = V^{-1}
        let basis_in_words = vmat
            .inverse()
            .expect("generators and idempotents must span the algebra");
        WordData { words, basis_in_words }
    }

    pub fn opposite(&self) -> AlgebraRef {
        self.opposite.get_or_init(|| Arc::new(ideal::opposite_of(self))).clone()
    }

    /// Checks vertex purity of products, associativity and the unit.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let (bi, bj) = (&self.basis[i], &self.basis[j]);
                let t = &self.table[i * d + j];
                if bi.target != bj.source && !t.is_empty() {
                    return Err(format!("nonzero product {i}*{j} across vertices"));
                }
                for (k, _) in t {
                    let bk = &self.basis[*k];
                    if bk.source != bi.source || bk.target != bj.target {
                        return Err(format!("product {i}*{j} leaves its block"));
                    }
                }
            }
        }
        let unit = self.unit();
        for i in 0..d {
            let b = self.basis_vec(i);
            if self.mul(&unit, &b) != b || self.mul(&b, &unit) != b {
                return Err(format!("unit fails on basis element {i}"));
            }
        }
        for i in 0..d {
            for j in 0..d {
                let ij = self.mul(&self.basis_vec(i), &self.basis_vec(j));
                if is_zero_vec(&ij) && self.basis[i].target != self.basis[j].source {
                    continue;
                }
                for k in 0..d {
                    let left = self.mul_basis_right(&ij, k);
                    let jk = self.mul(&self.basis_vec(j), &self.basis_vec(k));
                    let right = self.mul_basis_left(i, &jk);
                    if left != right {
                        return Err(format!("associativity fails on ({i},{j},{k})"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Coordinates of `x` expressed over generator words.
    pub fn in_words(&self, x: &[Rat]) -> Vec<Rat> {
        let w = self.words();
        let mut out = vec![Rat::zero(); w.words.len()];
        for (b, a) in x.iter().enumerate() {
            axpy(&mut out, a, w.basis_in_words.row(b));
        }
        out
    }
}

pub(crate) fn word_target(w: &Word, gens: &[Generator]) -> usize {
    w.gens.last().map_or(w.vertex, |&g| gens[g].target)
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("name", &self.name)
            .field("vertices", &self.vertices)
            .field("dim", &self.dim())
            .finish()
    }
}

/// Whether every vertex has at most one incoming and one outgoing arrow.
pub fn is_nakayama(a: &Algebra) -> Result<bool> {
    let p = a.presentation().ok_or(Error::NotQuiverPresented)?;
    let n = p.vertices.len();
    let mut inc = vec![0usize; n];
    let mut out = vec![0usize; n];
    for arrow in &p.arrows {
        out[p.vertex_index(&arrow.source)?] += 1;
        inc[p.vertex_index(&arrow.target)?] += 1;
    }
    Ok(inc.iter().chain(&out).all(|&k| k <= 1))
}

pub fn is_semisimple(a: &Algebra) -> bool {
    a.is_semisimple()
}
