use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Module, ModuleMap};
use crate::exactlin::{Mat, Rat, Subspace};

pub const DEFAULT_ISO_SEED: u64 = 0x5eed_0f15;
pub const DEFAULT_ISO_DRAWS: usize = 20;

/// Parameters of the randomized isomorphism search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsoConfig {
    pub seed: u64,
    pub draws: usize,
}

impl Default for IsoConfig {
    fn default() -> Self {
        IsoConfig {
            seed: DEFAULT_ISO_SEED,
            draws: DEFAULT_ISO_DRAWS,
        }
    }
}

/// Basis of `Hom_A(m, n)`.
pub fn hom(m: &Module, n: &Module) -> Vec<ModuleMap> {
    let nv = m.dims().len();
    // unknown F[r][c] for r, c in the same vertex block
    let mut var = vec![Vec::new(); nv];
    let mut count = 0;
    for (v, slot) in var.iter_mut().enumerate() {
        *slot = vec![usize::MAX; m.dims()[v] * n.dims()[v]];
        for x in slot.iter_mut() {
            *x = count;
            count += 1;
        }
    }
    if count == 0 {
        return Vec::new();
    }
    let idx = |r: usize, c: usize| -> Option<usize> {
        let v = m.vertex_of(r);
        if n.vertex_of(c) != v {
            return None;
        }
        let (lr, lc) = (r - m.block(v).start, c - n.block(v).start);
        Some(var[v][lr * n.dims()[v] + lc])
    };
    let mut eqs: Vec<Vec<Rat>> = Vec::new();
    for (g, gen) in m.algebra().generators().iter().enumerate() {
        let (am, an) = (&m.generator_actions()[g], &n.generator_actions()[g]);
        for r in m.block(gen.source) {
            for c in n.block(gen.target) {
                let mut row = vec![Rat::zero(); count];
                // (ρ_M(g) F)[r][c] = Σ_k ρ_M(g)[r][k] F[k][c], k in block t of M
                for k in m.block(gen.target) {
                    if !am[(r, k)].is_zero() {
                        row[idx(k, c).unwrap()] += &am[(r, k)];
                    }
                }
                // (F ρ_N(g))[r][c] = Σ_k F[r][k] ρ_N(g)[k][c], k in block s of N
                for k in n.block(gen.source) {
                    if !an[(k, c)].is_zero() {
                        row[idx(r, k).unwrap()] -= &an[(k, c)];
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    eqs.push(row);
                }
            }
        }
    }
    let sol = if eqs.is_empty() {
        Subspace::full(count)
    } else {
        Mat::from_rows_with_cols(eqs, count).unwrap().transpose().left_kernel()
    };
    sol.basis_vectors()
        .into_iter()
        .map(|x| {
            let mut f = Mat::zeros(m.dim(), n.dim());
            for r in 0..m.dim() {
                for c in n.block(m.vertex_of(r)) {
                    f[(r, c)] = x[idx(r, c).unwrap()].clone();
                }
            }
            ModuleMap { matrix: f }
        })
        .collect()
}

pub fn hom_dim(m: &Module, n: &Module) -> usize {
    hom(m, n).len()
}

/// Radical of `End(m)` as coefficient vectors over the basis `hom(m, m)`:
/// the kernel of the trace form `(φ, ψ) ↦ tr(φψ)` on the faithful module `m`.
pub fn end_radical(basis: &[ModuleMap]) -> Subspace {
    let k = basis.len();
    let mut gram = Mat::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let t = trace_of_product(&basis[i].matrix, &basis[j].matrix);
            gram[(i, j)] = t.clone();
            gram[(j, i)] = t;
        }
    }
    gram.left_kernel()
}

fn trace_of_product(a: &Mat, b: &Mat) -> Rat {
    let mut t = Rat::zero();
    for r in 0..a.rows() {
        for k in 0..a.cols() {
            if !a[(r, k)].is_zero() && !b[(k, r)].is_zero() {
                t += &a[(r, k)] * &b[(k, r)];
            }
        }
    }
    t
}

/// An isomorphism `m → n`, if one is found. A returned matrix is always a
/// verified invertible homomorphism; `None` after the prefilters or after
/// `cfg.draws` random combinations of a hom basis all fail to be invertible.
pub fn isomorphism(m: &Module, n: &Module, cfg: &IsoConfig) -> Option<Mat> {
    if m.dims() != n.dims() {
        return None;
    }
    if m.dim() == 0 {
        return Some(Mat::zeros(0, 0));
    }
    if m.top_dims() != n.top_dims() {
        return None;
    }
    let mn = hom(m, n);
    if mn.is_empty() {
        return None;
    }
    let end_m = hom_dim(m, m);
    if mn.len() != end_m || hom_dim(n, m) != end_m || hom_dim(n, n) != end_m {
        return None;
    }
    for f in &mn {
        if f.matrix.is_invertible() {
            return Some(f.matrix.clone());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let bound: i64 = 1 << 30;
    for _ in 0..cfg.draws {
        let mut f = Mat::zeros(m.dim(), n.dim());
        for b in &mn {
            let c = Rat::from_int(rng.gen_range(-bound..=bound));
            f.add_scaled(&c, &b.matrix);
        }
        if f.is_invertible() {
            return Some(f);
        }
    }
    None
}

pub fn is_isomorphic(m: &Module, n: &Module, cfg: &IsoConfig) -> bool {
    isomorphism(m, n, cfg).is_some()
}
