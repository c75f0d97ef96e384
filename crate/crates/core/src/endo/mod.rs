//! Endomorphism algebras of direct sums of indecomposable modules.
//!
//! For `N = ⊕ N_i` the algebra `End_A(N)` has basis the union of bases of
//! `Hom(N_j, N_i)`, product `φψ = φ ∘ ψ` and idempotents the identities of
//! the summands, so that `e_i B = Hom(N, N_i)`. A map `N_j → N_i` is a basis
//! element with source `i` and target `j`.

mod iyama;

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{is_nakayama, Algebra, AlgebraRef, BasisElem, Provenance};
use crate::chains::{find_first_order, ChainKind};
use crate::error::{Error, Result};
use crate::exactlin::{Mat, Rat, Subspace};
use crate::modules::{
    decompose, end_radical, hom, indecomposables_nakayama, indecomposables_type_a, is_isomorphic, is_split_local,
    IsoConfig, Module,
};

pub use iyama::{ajk_algebra, corner_recovery, iyama_chain, iyama_rsq_algebra, AjkResult, IyamaResult};

/// Pairwise non-isomorphic split-local summands with multiplicities and
/// the construction stage each one first appeared in.
#[derive(Clone, Debug)]
pub struct SummandDiagram {
    pub summands: Vec<Module>,
    pub multiplicities: Vec<usize>,
    pub layers: Vec<usize>,
    /// Every stage each summand occurs in.
    pub appears_in: Vec<Vec<usize>>,
}

impl SummandDiagram {
    /// Checks split-locality and pairwise non-isomorphism.
    pub fn new(summands: Vec<Module>, multiplicities: Vec<usize>, layers: Vec<usize>, cfg: &IsoConfig) -> Result<Self> {
        if multiplicities.len() != summands.len() || layers.len() != summands.len() {
            return Err(Error::InvalidRepresentation("one multiplicity and layer per summand".into()));
        }
        for (k, m) in summands.iter().enumerate() {
            if !is_split_local(m) {
                return Err(Error::NonSplitInput(format!("summand {k} is not split-local")));
            }
            if summands[..k].iter().any(|n| is_isomorphic(n, m, cfg)) {
                return Err(Error::InvalidRepresentation(format!("summand {k} repeats an earlier one")));
            }
        }
        let appears_in = layers.iter().map(|&l| vec![l]).collect();
        Ok(SummandDiagram {
            summands,
            multiplicities,
            layers,
            appears_in,
        })
    }

    /// Decomposes each `(module, layer)` and merges isomorphic summands; a
    /// summand keeps the layer it first appeared in. Summands of one layer are
    /// sorted by dimension, then dimension vector, then appearance.
    pub fn collect(modules: &[(Module, usize)], cfg: &IsoConfig) -> Result<Self> {
        let mut summands: Vec<Module> = Vec::new();
        let mut multiplicities = Vec::new();
        let mut layers = Vec::new();
        let mut appears_in: Vec<Vec<usize>> = Vec::new();
        for (m, layer) in modules {
            let mut fresh = Vec::new();
            for s in decompose(m, cfg)? {
                match summands.iter().position(|n| is_isomorphic(n, &s.module, cfg)) {
                    Some(k) => {
                        multiplicities[k] += s.multiplicity;
                        if appears_in[k].last() != Some(layer) {
                            appears_in[k].push(*layer);
                        }
                    }
                    None => fresh.push(s),
                }
            }
            fresh.sort_by(|x, y| {
                (x.module.dim(), x.module.dims()).cmp(&(y.module.dim(), y.module.dims()))
            });
            for s in fresh {
                summands.push(s.module);
                multiplicities.push(s.multiplicity);
                layers.push(*layer);
                appears_in.push(vec![*layer]);
            }
        }
        Ok(SummandDiagram {
            summands,
            multiplicities,
            layers,
            appears_in,
        })
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Index of the summand isomorphic to `m`.
    pub fn find(&self, m: &Module, cfg: &IsoConfig) -> Option<usize> {
        self.summands.iter().position(|n| is_isomorphic(n, m, cfg))
    }
}

/// `End_A(N)` with the map behind every basis element.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub algebra: AlgebraRef,
    pub summands: Vec<Module>,
    /// `maps[b]` is the matrix of basis element `b`, from its target summand to its source summand.
    pub maps: Vec<Mat>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EndSummary {
    pub dim: usize,
    pub vertices: usize,
    pub summand_dims: Vec<usize>,
}

impl EndAlgebra {
    pub fn summary(&self) -> EndSummary {
        EndSummary {
            dim: self.algebra.dim(),
            vertices: self.algebra.n_vertices(),
            summand_dims: self.summands.iter().map(|m| m.dim()).collect(),
        }
    }

    /// Coordinates of a map `N_j → N_i` in the basis of the algebra.
    pub fn element_of(&self, i: usize, j: usize, f: &Mat) -> Option<Vec<Rat>> {
        let idx: Vec<usize> = (0..self.maps.len())
            .filter(|&b| self.algebra.basis()[b].source == i && self.algebra.basis()[b].target == j)
            .collect();
        let rows: Vec<Vec<Rat>> = idx.iter().map(|&b| self.maps[b].entries().to_vec()).collect();
        let coeffs = Mat::from_rows_with_cols(rows, f.entries().len())?.solve_left(f.entries())?;
        let mut out = vec![Rat::zero(); self.maps.len()];
        for (c, &b) in coeffs.into_iter().zip(&idx) {
            out[b] = c;
        }
        Some(out)
    }
}

/// Solves for coordinates in a fixed basis of flattened matrices.
struct Coords {
    cols: Vec<usize>,
    inv: Mat,
}

impl Coords {
    fn new(basis: &[Mat]) -> Option<Coords> {
        if basis.is_empty() {
            return Some(Coords {
                cols: Vec::new(),
                inv: Mat::zeros(0, 0),
            });
        }
        let flat = Mat::from_rows(basis.iter().map(|m| m.entries().to_vec()).collect());
        let (_, cols) = flat.rref();
        let inv = flat.select_cols(&cols).inverse()?;
        Some(Coords { cols, inv })
    }

    fn of(&self, m: &Mat) -> Vec<Rat> {
        let x: Vec<Rat> = self.cols.iter().map(|&c| m.entries()[c].clone()).collect();
        self.inv.apply(&x)
    }
}

/// Basis of `End(m)`: the identity followed by a basis of its radical.
fn local_end_basis(m: &Module) -> Result<Vec<Mat>> {
    let e = hom(m, m);
    let rad = end_radical(&e);
    if e.len() - rad.dim() != 1 {
        return Err(Error::NonSplitInput("summand is not split-local".into()));
    }
    let mut out = vec![Mat::identity(m.dim())];
    for c in rad.basis_vectors() {
        let mut f = Mat::zeros(m.dim(), m.dim());
        for (x, b) in c.iter().zip(&e) {
            if !x.is_zero() {
                f.add_scaled(x, &b.matrix);
            }
        }
        out.push(f);
    }
    Ok(out)
}

pub fn end_algebra(d: &SummandDiagram, name: &str) -> Result<EndAlgebra> {
    let n = d.len();
    let mut basis = Vec::new();
    let mut maps = Vec::new();
    let mut idempotents = Vec::new();
    let mut rad_rows = Vec::new();
    // blocks[i][j]: basis indices of Hom(N_j, N_i)
    let mut blocks = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mats = if i == j {
                local_end_basis(&d.summands[i])?
            } else {
                hom(&d.summands[j], &d.summands[i]).into_iter().map(|f| f.matrix).collect()
            };
            for (k, f) in mats.into_iter().enumerate() {
                let b = basis.len();
                if i == j && k == 0 {
                    idempotents.push(b);
                } else {
                    rad_rows.push(b);
                }
                blocks[i][j].push(b);
                basis.push(BasisElem {
                    label: if i == j && k == 0 { format!("e{}", i + 1) } else { format!("f{}_{}_{}", i + 1, j + 1, k) },
                    source: i,
                    target: j,
                    degree: None,
                });
                maps.push(f);
            }
        }
    }
    let coords: Vec<Vec<Coords>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let ms: Vec<Mat> = blocks[i][j].iter().map(|&b| maps[b].clone()).collect();
                    Coords::new(&ms).ok_or_else(|| Error::InternalDefect("dependent hom basis".into()))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let dim = basis.len();
    let mut table = vec![Vec::new(); dim * dim];
    for x in 0..dim {
        let (i, j) = (basis[x].source, basis[x].target);
        for y in 0..dim {
            if basis[y].source != j {
                continue;
            }
            let k = basis[y].target;
            // φ ∘ ψ acts as x ↦ x Ψ Φ
            let prod = maps[y].mul(&maps[x]);
            let c = coords[i][k].of(&prod);
            table[x * dim + y] = c
                .into_iter()
                .zip(&blocks[i][k])
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, &b)| (b, c))
                .collect();
        }
    }
    let rad = Subspace::from_vectors(dim, rad_rows.iter().map(|&b| crate::exactlin::unit_vec(dim, b)));
    let alg = Algebra::from_parts(
        name.to_string(),
        (1..=n).map(|i| i.to_string()).collect(),
        basis,
        idempotents,
        table,
        Provenance::Endomorphism,
    )?
    .with_radical(rad);
    Ok(EndAlgebra {
        algebra: Arc::new(alg),
        summands: d.summands.clone(),
        maps,
    })
}

/// Complete list of indecomposables for the supported representation-finite families.
pub fn indecomposables(a: &AlgebraRef) -> Result<Vec<Module>> {
    match is_nakayama(a) {
        Ok(true) => indecomposables_nakayama(a),
        Ok(false) => indecomposables_type_a(a),
        Err(Error::NotQuiverPresented) => Err(Error::WrongShape("quiver presentation required".into())),
        Err(e) => Err(e),
    }
}

/// Auslander algebra with vertices in order of descending module length.
pub fn auslander_algebra(a: &AlgebraRef, cfg: &IsoConfig) -> Result<EndAlgebra> {
    let mut ind = indecomposables(a)?;
    ind.sort_by_key(|m| std::cmp::Reverse(m.dim()));
    let n = ind.len();
    let d = SummandDiagram::new(ind, vec![1; n], vec![0; n], cfg)?;
    end_algebra(&d, &format!("Aus({})", a.name()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AusCheck {
    pub nakayama: bool,
    pub strongly_qh: bool,
}

impl AusCheck {
    pub fn agrees(&self) -> bool {
        self.nakayama == self.strongly_qh
    }
}

/// Computes Nakayama-ness from the quiver and strong quasi-heredity of the
/// Auslander algebra by order search.
pub fn theorem_aus_check(a: &AlgebraRef, bound: usize, cfg: &IsoConfig) -> Result<AusCheck> {
    let b = auslander_algebra(a, cfg)?;
    let nakayama = is_nakayama(a)?;
    let strongly_qh = find_first_order(&b.algebra, ChainKind::Strong, bound)?.is_some();
    Ok(AusCheck { nakayama, strongly_qh })
}
