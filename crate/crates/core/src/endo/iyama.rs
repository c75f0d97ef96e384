use serde::Serialize;

use super::{end_algebra, EndAlgebra, SummandDiagram};
use crate::algebra::{AlgebraRef, VertexSet};
use crate::chains::{find_first_order, for_each_order, ChainAnalyzer, ChainKind, TotalOrder};
use crate::error::{Error, Result};
use crate::exactlin::{unit_vec, Mat, Rat, Subspace};
use crate::modules::{end_radical, hom, isomorphism, projective_basis, to_regular, IsoConfig, Module};
use crate::rejective::{verify_chain, SubcatChain, SubcatCertificate, SubcatKind};

/// `M_0 = m`, `M_{k+1} = J(End M_k) M_k`, up to the last nonzero layer.
pub fn iyama_chain(m: &Module) -> Vec<Module> {
    let mut out = Vec::new();
    let mut cur = m.clone();
    while !cur.is_zero() {
        let e = hom(&cur, &cur);
        let rad = end_radical(&e);
        let mut img = Subspace::zero(cur.dim());
        for c in rad.basis_vectors() {
            let mut f = Mat::zeros(cur.dim(), cur.dim());
            for (x, b) in c.iter().zip(&e) {
                if !x.is_zero() {
                    f.add_scaled(x, &b.matrix);
                }
            }
            img = img.sum(&f.row_space()).expect("same ambient");
        }
        let next = cur.submodule(&img).0;
        out.push(cur);
        cur = next;
    }
    out
}

#[derive(Clone, Debug)]
pub struct IyamaResult {
    pub end: EndAlgebra,
    pub layers: Vec<Module>,
    pub diagram: SummandDiagram,
    pub chain: SubcatChain,
    pub certificate: SubcatCertificate,
}

/// `End(⊕ M_k)` over the layers of [`iyama_chain`] with the chain
/// `S_i` = summands occurring in some layer `≥ i`, checked as a total right
/// rejective chain. Repeated subsets are merged.
pub fn iyama_rsq_algebra(m: &Module, cfg: &IsoConfig) -> Result<IyamaResult> {
    if m.is_zero() {
        return Err(Error::InvalidRepresentation("zero module".into()));
    }
    let layers = iyama_chain(m);
    let tagged: Vec<(Module, usize)> = layers.iter().cloned().zip(0..).collect();
    let diagram = SummandDiagram::collect(&tagged, cfg)?;
    let end = end_algebra(&diagram, "End(M)")?;
    let mut subsets: Vec<VertexSet> = Vec::new();
    for i in 0..=layers.len() {
        let s: VertexSet = (0..diagram.len())
            .filter(|&v| diagram.appears_in[v].iter().any(|&l| l >= i))
            .collect();
        if subsets.last() != Some(&s) {
            subsets.push(s);
        }
    }
    let chain = SubcatChain::new(end.algebra.clone(), subsets)?;
    let certificate = verify_chain(&chain, SubcatKind::TotalRightRejective)?;
    Ok(IyamaResult {
        end,
        layers,
        diagram,
        chain,
        certificate,
    })
}

/// Whether the corner of `End(N)` at the summands isomorphic to the
/// indecomposable projectives is isomorphic to `a`, via `φ ↦ φ(e_j)`.
pub fn corner_recovery(a: &AlgebraRef, end: &EndAlgebra, cfg: &IsoConfig) -> Result<bool> {
    let n = a.n_vertices();
    let mut vertex = Vec::new();
    let mut iso = Vec::new();
    for i in 0..n {
        let p = Module::projective(a.clone(), i);
        let found = end
            .summands
            .iter()
            .enumerate()
            .find_map(|(v, s)| isomorphism(s, &p, cfg).map(|t| (v, t)));
        let Some((v, t)) = found else {
            return Ok(false);
        };
        vertex.push(v);
        iso.push(t);
    }
    let b = &end.algebra;
    let mut image: Vec<Option<Vec<Rat>>> = vec![None; b.dim()];
    let mut count = 0;
    for (x, elem) in b.basis().iter().enumerate() {
        let (Some(i), Some(j)) = (
            vertex.iter().position(|&v| v == elem.source),
            vertex.iter().position(|&v| v == elem.target),
        ) else {
            continue;
        };
        // transported map P(j) → P(i), evaluated at e_j
        let inv = iso[j].inverse().ok_or_else(|| Error::InternalDefect("singular isomorphism".into()))?;
        let f = inv.mul(&end.maps[x]).mul(&iso[i]);
        let pj = projective_basis(a, j);
        let pos = pj.iter().position(|&c| c == a.idempotent(j)).expect("idempotent in P(j)");
        let row = f.apply(&unit_vec(f.rows(), pos));
        let mut out = vec![Rat::zero(); a.dim()];
        for (k, c) in projective_basis(a, i).into_iter().enumerate() {
            out[c] = row[k].clone();
        }
        image[x] = Some(out);
        count += 1;
    }
    if count != a.dim() {
        return Ok(false);
    }
    let imgs: Vec<Vec<Rat>> = image.iter().flatten().cloned().collect();
    if Subspace::from_vectors(a.dim(), imgs).dim() != a.dim() {
        return Ok(false);
    }
    for x in 0..b.dim() {
        let Some(fx) = &image[x] else { continue };
        for y in 0..b.dim() {
            let Some(fy) = &image[y] else { continue };
            let prod = b.mul(&unit_vec(b.dim(), x), &unit_vec(b.dim(), y));
            let mut lhs = vec![Rat::zero(); a.dim()];
            for (z, c) in prod.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                match &image[z] {
                    Some(fz) => crate::exactlin::axpy(&mut lhs, c, fz),
                    None => return Ok(false),
                }
            }
            if lhs != a.mul(fx, fy) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug)]
pub struct AjkResult {
    pub end: EndAlgebra,
    pub diagram: SummandDiagram,
    pub left_strong_order: Option<TotalOrder>,
    pub examined: usize,
}

impl AjkResult {
    pub fn left_strong(&self) -> bool {
        self.left_strong_order.is_some()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AjkSummary {
    pub dim: usize,
    pub vertices: usize,
    pub left_strong: bool,
    pub order: Option<Vec<String>>,
    pub examined: usize,
}

impl AjkResult {
    pub fn summary(&self) -> AjkSummary {
        AjkSummary {
            dim: self.end.algebra.dim(),
            vertices: self.end.algebra.n_vertices(),
            left_strong: self.left_strong(),
            order: self.left_strong_order.as_ref().map(|o| o.labels(&self.end.algebra)),
            examined: self.examined,
        }
    }
}

/// At most this many layer-respecting orders are tried before brute force.
const LAYERED_LIMIT: usize = 5040;

/// `End_A(⊕_{k=1}^{n} A/J^k)` and a left-strong order for it, trying orders
/// that keep each `k`-layer contiguous first.
pub fn ajk_algebra(a: &AlgebraRef, bound: usize, cfg: &IsoConfig) -> Result<AjkResult> {
    if a.dim() == 0 {
        return Err(Error::InvalidRepresentation("zero algebra".into()));
    }
    let n = a.loewy_length();
    let reg = Module::regular(a.clone());
    let mut mods = Vec::new();
    for k in 1..=n {
        let jk = a.radical_power(k);
        let u = Subspace::from_vectors(reg.dim(), jk.basis_vectors().iter().map(|x| to_regular(a, x)));
        mods.push((reg.quotient(&u).0, k));
    }
    let diagram = SummandDiagram::collect(&mods, cfg)?;
    let end = end_algebra(&diagram, &format!("End(A/J^k over {})", a.name()))?;
    let b = end.algebra.clone();
    let mut an = ChainAnalyzer::new(b.clone());
    let mut examined = 0;
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (v, &l) in diagram.layers.iter().enumerate() {
        match blocks.last_mut() {
            Some(blk) if diagram.layers[blk[0]] == l => blk.push(v),
            _ => blocks.push(vec![v]),
        }
    }
    for descending in [false, true] {
        let mut bl = blocks.clone();
        if descending {
            bl.reverse();
        }
        let mut found = None;
        layered_orders(&bl, &mut |o| {
            if examined >= LAYERED_LIMIT {
                return false;
            }
            examined += 1;
            if an.classify_order(&o).left_strong {
                found = Some(o);
                return false;
            }
            true
        });
        if found.is_some() {
            return Ok(AjkResult {
                end,
                diagram,
                left_strong_order: found,
                examined,
            });
        }
    }
    let order = find_first_order(&b, ChainKind::LeftStrong, bound)?;
    Ok(AjkResult {
        end,
        diagram,
        left_strong_order: order,
        examined,
    })
}

/// Orders listing the blocks in sequence, each block permuted freely.
fn layered_orders(blocks: &[Vec<usize>], f: &mut dyn FnMut(TotalOrder) -> bool) {
    let total: usize = blocks.iter().map(|b| b.len()).sum();
    fn go(blocks: &[Vec<usize>], prefix: &mut Vec<usize>, total: usize, f: &mut dyn FnMut(TotalOrder) -> bool) -> bool {
        let Some((first, rest)) = blocks.split_first() else {
            return f(TotalOrder::new(prefix.clone(), total).expect("blocks partition the vertices"));
        };
        let mut cont = true;
        for_each_order(first.len(), |p| {
            let len = prefix.len();
            prefix.extend(p.as_slice().iter().map(|&k| first[k]));
            cont = go(rest, prefix, total, f);
            prefix.truncate(len);
            cont
        });
        cont
    }
    go(blocks, &mut Vec::new(), total, f);
}
