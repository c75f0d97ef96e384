use serde::Serialize;

use super::{classify_order, order_to_chain, ChainAnalyzer, TotalOrder};
use crate::algebra::AlgebraRef;
use crate::error::{Error, Result};
use crate::exactlin::{Mat, Subspace};
use crate::modules::{decompose, is_isomorphic, sub_quotient, syzygy, trace_space, IsoConfig, Module};

/// `Δ(i)` together with `0 → K(i) → P(i) → Δ(i) → 0`.
#[derive(Clone, Debug)]
pub struct StandardModule {
    pub vertex: usize,
    pub delta: Module,
    pub kernel: Module,
    /// Rows span `K(i)` inside `P(i)`.
    pub kernel_inclusion: Mat,
    pub projection: Mat,
}

impl StandardModule {
    /// `Δ(i)` has composition factors only at vertices `≤ i` and `top K(i)` only at vertices `> i`.
    pub fn is_certified(&self, o: &TotalOrder) -> bool {
        let rank = o.position(self.vertex);
        let low = |dims: &[usize], strict: bool| {
            dims.iter().enumerate().all(|(v, &d)| {
                let r = o.position(v);
                d == 0 || if strict { r > rank } else { r <= rank }
            })
        };
        low(self.delta.dims(), false) && low(&self.kernel.top_dims(), true)
    }
}

pub fn standard_module(a: &AlgebraRef, o: &TotalOrder, i: usize) -> StandardModule {
    let p = Module::projective(a.clone(), i);
    let rank = o.position(i);
    let mut k = Subspace::zero(p.dim());
    for &j in &o.as_slice()[rank + 1..] {
        k = k.sum(&trace_space(&p, &Module::projective(a.clone(), j))).expect("same ambient");
    }
    let (kernel, kernel_inclusion) = p.submodule(&k);
    let (delta, projection) = p.quotient(&k);
    StandardModule {
        vertex: i,
        delta,
        kernel,
        kernel_inclusion,
        projection,
    }
}

/// Heredity of the chain together with `pd Δ(i) ≤ 1` for every vertex.
pub fn rsq_via_delta(a: &AlgebraRef, o: &TotalOrder) -> bool {
    rsq_via_delta_with(&mut ChainAnalyzer::new(a.clone()), o)
}

pub(crate) fn rsq_via_delta_with(an: &mut ChainAnalyzer, o: &TotalOrder) -> bool {
    if !an.classify_order(o).heredity {
        return false;
    }
    let a = an.algebra().clone();
    (0..a.n_vertices()).all(|i| {
        let d = standard_module(&a, o, i).delta;
        d.is_projective() || syzygy(&d).is_projective()
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CpsLevel {
    pub level: usize,
    pub vertex: String,
    pub dim: usize,
    /// `m_j` when `H_j/H_{j+1} ≅ Δ(i_j)^{m_j}`.
    pub multiplicity: Option<usize>,
}

/// Checks that every layer `H_j/H_{j+1}` is a direct sum of copies of `Δ(i_j)`.
pub fn cps_decomposition_check(a: &AlgebraRef, o: &TotalOrder, cfg: &IsoConfig) -> Result<Vec<CpsLevel>> {
    if !classify_order(a, o).heredity {
        return Err(Error::InvalidOrder("chain is not a heredity chain".into()));
    }
    let chain = order_to_chain(a, o);
    let mut out = Vec::new();
    for (j, &v) in o.as_slice().iter().enumerate() {
        let layer = sub_quotient(a, &chain.levels[j], &chain.levels[j + 1])?;
        let delta = standard_module(a, o, v).delta;
        let parts = decompose(&layer, cfg)?;
        let multiplicity = match parts.as_slice() {
            [s] if is_isomorphic(&s.module, &delta, cfg) => Some(s.multiplicity),
            _ => None,
        };
        out.push(CpsLevel {
            level: j,
            vertex: a.vertices()[v].clone(),
            dim: layer.dim(),
            multiplicity,
        });
    }
    Ok(out)
}
