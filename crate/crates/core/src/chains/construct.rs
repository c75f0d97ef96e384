use serde::Serialize;

use super::{ChainAnalyzer, ChainCertificate, TotalOrder};
use crate::algebra::{corner_algebra, idempotent_ideal, quotient_algebra, AlgebraRef, VertexSet};
use crate::error::{Error, Result};
use crate::exactlin::Subspace;
use crate::modules::{global_dimension, syzygy, HomDim, IsoConfig, Module};

/// A right-strong order for an algebra of global dimension at most two,
/// built by repeatedly removing the smallest vertex whose simple has
/// projective dimension one in the current corner algebra.
pub fn gl2_rsq_order(a: &AlgebraRef, cap: usize, cfg: &IsoConfig) -> Result<(TotalOrder, ChainCertificate)> {
    match global_dimension(a, cap, cfg) {
        HomDim::Finite(g) if g <= 2 => {}
        HomDim::Finite(g) => return Err(Error::GlobalDimensionTooLarge(g.to_string())),
        HomDim::Infinite => return Err(Error::GlobalDimensionTooLarge("infinite".into())),
        HomDim::Undetermined => return Err(Error::Undetermined(cap)),
    }
    let order = TotalOrder(construct(a)?);
    let cert = ChainAnalyzer::new(a.clone()).classify_order(&order);
    if !cert.right_strong {
        return Err(Error::InternalDefect(format!(
            "constructed order {:?} is not right-strong",
            order.labels(a)
        )));
    }
    Ok((order, cert))
}

fn construct(a: &AlgebraRef) -> Result<Vec<usize>> {
    let mut order = Vec::new();
    let mut rest = VertexSet::all(a.n_vertices());
    while !rest.is_empty() {
        let (c, emb) = corner_algebra(a, rest)?;
        if c.is_semisimple() {
            order.extend(rest.iter());
            break;
        }
        let f = (0..c.n_vertices())
            .find(|&v| {
                let s = Module::simple(c.clone(), v);
                !s.is_projective() && syzygy(&s).is_projective()
            })
            .ok_or_else(|| Error::InternalDefect("no simple of projective dimension one".into()))?;
        let v = emb.vertices[f];
        order.push(v);
        rest.remove(v);
    }
    Ok(order)
}

/// Left-strong counterpart, computed on the opposite algebra.
pub fn gl2_lsq_order(a: &AlgebraRef, cap: usize, cfg: &IsoConfig) -> Result<(TotalOrder, ChainCertificate)> {
    let (order, _) = gl2_rsq_order(&a.opposite(), cap, cfg)?;
    let cert = ChainAnalyzer::new(a.clone()).classify_order(&order);
    if !cert.left_strong {
        return Err(Error::InternalDefect(format!(
            "constructed order {:?} is not left-strong",
            order.labels(a)
        )));
    }
    Ok((order, cert))
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionLevel {
    pub level: usize,
    pub quotient_dim: usize,
    pub quotient: ChainCertificate,
    pub corner_dim: usize,
    pub corner: ChainCertificate,
}

#[derive(Clone, Debug, Serialize)]
pub struct Reductions {
    pub right_strong: bool,
    pub left_strong: bool,
    pub levels: Vec<ReductionLevel>,
}

impl Reductions {
    /// Every induced chain keeps the strength of the original chain.
    pub fn preserved(&self) -> bool {
        self.levels.iter().all(|l| {
            [&l.quotient, &l.corner]
                .iter()
                .all(|c| (!self.right_strong || c.right_strong) && (!self.left_strong || c.left_strong))
        })
    }
}

/// Chains induced on `A/H_i` (levels `H_j/H_i`, `j ≤ i`) and on `e A e` with
/// `e = e_{S_i}` (levels `e H_j e`, `j ≥ i`), for every `0 ≤ i ≤ n`.
pub fn reduction_chains(a: &AlgebraRef, o: &TotalOrder) -> Result<Reductions> {
    let base = ChainAnalyzer::new(a.clone()).classify_order(o);
    if !base.right_strong && !base.left_strong {
        return Err(Error::NotStrongChain);
    }
    let subsets = o.subsets();
    let mut levels = Vec::new();
    for i in 0..subsets.len() {
        let h_i = idempotent_ideal(a, subsets[i]);
        let q = quotient_algebra(a, &h_i)?;
        let q_subsets: Vec<VertexSet> = subsets[..=i]
            .iter()
            .map(|s| s.iter().filter_map(|v| q.vertex_map[v]).collect())
            .collect();
        let quotient = ChainAnalyzer::new(q.algebra.clone()).classify_subsets(&q_subsets)?;

        let (c, emb) = corner_algebra(a, subsets[i])?;
        let c_subsets: Vec<VertexSet> = subsets[i..]
            .iter()
            .map(|s| s.iter().filter_map(|v| emb.corner_vertex(v)).collect())
            .collect();
        for (s, cs) in subsets[i..].iter().zip(&c_subsets) {
            let cut = Subspace::from_vectors(
                c.dim(),
                idempotent_ideal(a, *s).basis_vectors().iter().map(|x| emb.restrict(x)),
            );
            if cut != idempotent_ideal(&c, *cs) {
                return Err(Error::InternalDefect("corner of an idempotent ideal differs".into()));
            }
        }
        let corner = ChainAnalyzer::new(c.clone()).classify_subsets(&c_subsets)?;
        levels.push(ReductionLevel {
            level: i,
            quotient_dim: q.algebra.dim(),
            quotient,
            corner_dim: c.dim(),
            corner,
        });
    }
    Ok(Reductions {
        right_strong: base.right_strong,
        left_strong: base.left_strong,
        levels,
    })
}
