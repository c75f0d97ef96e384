use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hom::{end_radical, hom, IsoConfig};
use super::poly::{eval_mat, minimal_polynomial, rational_roots, squarefree_factors};
use super::{is_isomorphic, Module};
use crate::error::{Error, Result};
use crate::exactlin::{unit_vec, Mat, Rat, Subspace};

/// An indecomposable summand with its multiplicity; `inclusions` holds one
/// split inclusion (rows = summand basis in the coordinates of the input) per copy.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Module,
    pub multiplicity: usize,
    pub inclusions: Vec<Mat>,
}

/// Whether `End(m)/rad End(m)` is one-dimensional.
pub fn is_split_local(m: &Module) -> bool {
    if m.is_zero() {
        return false;
    }
    let e = hom(m, m);
    e.len() - end_radical(&e).dim() == 1
}

/// Krull–Schmidt decomposition into split-local summands, grouped up to isomorphism.
pub fn decompose(m: &Module, cfg: &IsoConfig) -> Result<Vec<Summand>> {
    let mut pieces = Vec::new();
    split_into(m, Mat::identity(m.dim()), cfg, &mut pieces)?;
    let mut out: Vec<Summand> = Vec::new();
    for (piece, incl) in pieces {
        match out.iter_mut().find(|s| is_isomorphic(&s.module, &piece, cfg)) {
            Some(s) => {
                s.multiplicity += 1;
                s.inclusions.push(incl);
            }
            None => out.push(Summand {
                module: piece,
                multiplicity: 1,
                inclusions: vec![incl],
            }),
        }
    }
    Ok(out)
}

fn split_into(m: &Module, incl: Mat, cfg: &IsoConfig, out: &mut Vec<(Module, Mat)>) -> Result<()> {
    if m.is_zero() {
        return Ok(());
    }
    let end = hom(m, m);
    let rad = end_radical(&end);
    if end.len() - rad.dim() == 1 {
        out.push((m.clone(), incl));
        return Ok(());
    }
    for phi in candidates(&end, &rad, cfg) {
        if let Some((k, i)) = fitting_split(&phi) {
            for part in [k, i] {
                let (sub, sub_incl) = m.submodule(&part);
                split_into(&sub, sub_incl.mul(&incl), cfg, out)?;
            }
            return Ok(());
        }
    }
    Err(Error::NonSplitInput(format!(
        "no rational idempotent found for a module with dimension vector {:?}",
        m.dims()
    )))
}

fn candidates<'a>(
    end: &'a [super::ModuleMap],
    rad: &'a Subspace,
    cfg: &IsoConfig,
) -> impl Iterator<Item = Mat> + 'a {
    let k = end.len();
    let combine = move |coeffs: Vec<Rat>| {
        let n = end[0].matrix.rows();
        let mut f = Mat::zeros(n, n);
        for (c, b) in coeffs.iter().zip(end) {
            if !c.is_zero() {
                f.add_scaled(c, &b.matrix);
            }
        }
        f
    };
    let singles = (0..k).map(move |i| unit_vec(k, i));
    let pairs = (0..k).flat_map(move |i| {
        (i + 1..k).map(move |j| {
            let mut v = unit_vec(k, i);
            v[j] = Rat::one();
            v
        })
    });
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xdec0);
    let randoms = (0..16).map(move |_| (0..k).map(|_| Rat::from_int(rng.gen_range(-3..=3))).collect::<Vec<_>>());
    singles
        .chain(pairs)
        .chain(randoms)
        .filter(move |v| !rad.contains_vec(v))
        .map(combine)
}

/// Fitting decomposition `M = ker f(φ)^n ⊕ im f(φ)^n` for a factor `f` of the
/// minimal polynomial: a rational linear factor, or a squarefree-part factor.
fn fitting_split(phi: &Mat) -> Option<(Subspace, Subspace)> {
    let n = phi.rows();
    let mp = minimal_polynomial(phi);
    if mp.len() <= 2 {
        return None;
    }
    let try_factor = |f: &Vec<Rat>| {
        let p = eval_mat(f, phi).pow(n);
        let k = p.left_kernel();
        (k.dim() > 0 && k.dim() < n).then(|| (k, p.row_space()))
    };
    for root in rational_roots(&mp).unwrap_or_default() {
        if let Some(s) = try_factor(&vec![-root, Rat::one()]) {
            return Some(s);
        }
    }
    let sqf = squarefree_factors(&mp);
    if sqf.len() >= 2 {
        return try_factor(&sqf[0]);
    }
    None
}
