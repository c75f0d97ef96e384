use serde::Serialize;

use super::{hom::IsoConfig, is_isomorphic, projective_basis, Module, ModuleMap};
use crate::algebra::AlgebraRef;
use crate::exactlin::Mat;

/// A projective or global dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value")]
pub enum HomDim {
    Finite(usize),
    Infinite,
    Undetermined,
}

impl HomDim {
    pub fn finite(self) -> Option<usize> {
        match self {
            HomDim::Finite(n) => Some(n),
            _ => None,
        }
    }

    /// Whether the dimension is known to be at most `n`.
    pub fn at_most(self, n: usize) -> bool {
        matches!(self, HomDim::Finite(k) if k <= n)
    }
}

impl std::fmt::Display for HomDim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HomDim::Finite(n) => write!(f, "{n}"),
            HomDim::Infinite => write!(f, "infinite"),
            HomDim::Undetermined => write!(f, "undetermined"),
        }
    }
}

/// Minimal projective cover `P → m`.
pub fn projective_cover(m: &Module) -> (Module, ModuleMap) {
    let alg = m.algebra().clone();
    let rad = m.radical_space();
    let lifts = rad.non_pivots();
    if lifts.is_empty() {
        return (Module::zero(alg.clone()), ModuleMap { matrix: Mat::zeros(0, m.dim()) });
    }
    let mut parts = Vec::new();
    let mut lift_vertices = Vec::new();
    for &k in &lifts {
        let v = m.vertex_of(k);
        parts.push(Module::projective(alg.clone(), v));
        lift_vertices.push(v);
    }
    let refs: Vec<&Module> = parts.iter().collect();
    let (p, incl) = Module::direct_sum(&refs);
    let mut f = Mat::zeros(p.dim(), m.dim());
    for (i, &k) in lifts.iter().enumerate() {
        let gen = crate::exactlin::unit_vec(m.dim(), k);
        for (local, b) in projective_basis(&alg, lift_vertices[i]).into_iter().enumerate() {
            let img = m.act_basis(&gen, b);
            let row = incl[i].row(local).iter().position(|x| !x.is_zero()).unwrap();
            f.row_mut(row).clone_from_slice(&img);
        }
    }
    (p, ModuleMap { matrix: f })
}

/// Kernel of the projective cover.
pub fn syzygy(m: &Module) -> Module {
    let (p, f) = projective_cover(m);
    if p.is_zero() {
        return p;
    }
    let k = f.matrix.left_kernel();
    p.submodule(&k).0
}

/// Syzygies larger than this stop the resolution with `Undetermined`.
pub const MAX_SYZYGY_DIM: usize = 64;

pub fn proj_dimension(m: &Module, cap: usize, cfg: &IsoConfig) -> HomDim {
    let mut seen: Vec<Module> = vec![m.clone()];
    let mut cur = m.clone();
    for n in 0..=cap {
        if cur.is_projective() {
            return HomDim::Finite(n);
        }
        if n == cap {
            break;
        }
        cur = syzygy(&cur);
        if cur.dim() > MAX_SYZYGY_DIM {
            break;
        }
        if seen.iter().any(|s| is_isomorphic(s, &cur, cfg)) {
            return HomDim::Infinite;
        }
        seen.push(cur.clone());
    }
    HomDim::Undetermined
}

/// Supremum of the projective dimensions of the simple modules.
pub fn global_dimension(alg: &AlgebraRef, cap: usize, cfg: &IsoConfig) -> HomDim {
    let mut best = 0;
    let mut undetermined = false;
    for v in 0..alg.n_vertices() {
        match proj_dimension(&Module::simple(alg.clone(), v), cap, cfg) {
            HomDim::Finite(n) => best = best.max(n),
            HomDim::Infinite => return HomDim::Infinite,
            HomDim::Undetermined => undetermined = true,
        }
    }
    if undetermined {
        HomDim::Undetermined
    } else {
        HomDim::Finite(best)
    }
}
