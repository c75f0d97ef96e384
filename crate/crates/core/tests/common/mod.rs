#![allow(dead_code)]

use std::collections::HashMap;

use qhalg::algebra::{Algebra, QuiverPresentation};
use qhalg::exactlin::{Rat, Subspace};

/// Brute-force model of `kQ/I`: all paths of each length, and the ideal in
/// each length spanned by `u · r · w` for relations `r` and paths `u`, `w`.
pub struct PathOracle {
    arrows: Vec<(usize, usize)>,
    pub paths: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
    pub ideal: Vec<Subspace>,
}

impl PathOracle {
    pub fn new(p: &QuiverPresentation, max_len: usize) -> Self {
        let vi = |l: &str| p.vertices.iter().position(|v| v == l).unwrap();
        let arrows: Vec<(usize, usize)> = p.arrows.iter().map(|a| (vi(&a.source), vi(&a.target))).collect();
        let ai = |n: &str| p.arrows.iter().position(|a| a.name == n).unwrap();
        let rels: Vec<Vec<(Rat, Vec<usize>)>> = p
            .relations
            .iter()
            .map(|r| r.terms.iter().map(|(c, path)| (c.clone(), path.iter().map(|n| ai(n)).collect())).collect())
            .collect();
        let mut paths: Vec<Vec<Vec<usize>>> = vec![vec![]; max_len + 1];
        for k in 1..=max_len {
            if k == 1 {
                paths[1] = (0..arrows.len()).map(|a| vec![a]).collect();
            } else {
                let mut next = Vec::new();
                for q in &paths[k - 1] {
                    for a in 0..arrows.len() {
                        if arrows[*q.last().unwrap()].1 == arrows[a].0 {
                            let mut r = q.clone();
                            r.push(a);
                            next.push(r);
                        }
                    }
                }
                paths[k] = next;
            }
        }
        let index: Vec<HashMap<Vec<usize>, usize>> = paths
            .iter()
            .map(|ps| ps.iter().enumerate().map(|(i, q)| (q.clone(), i)).collect())
            .collect();
        let src = |q: &[usize]| arrows[q[0]].0;
        let tgt = |q: &[usize]| arrows[*q.last().unwrap()].1;
        let mut ideal = vec![Subspace::zero(p.vertices.len())];
        for k in 1..=max_len {
            let mut gens = Vec::new();
            for r in &rels {
                let m = r[0].1.len();
                if m > k {
                    continue;
                }
                let (rs, rt) = (src(&r[0].1), tgt(&r[0].1));
                for a in 0..=k - m {
                    let b = k - m - a;
                    let lefts: Vec<Vec<usize>> = if a == 0 {
                        vec![vec![]]
                    } else {
                        paths[a].iter().filter(|u| tgt(u) == rs).cloned().collect()
                    };
                    let rights: Vec<Vec<usize>> = if b == 0 {
                        vec![vec![]]
                    } else {
                        paths[b].iter().filter(|w| src(w) == rt).cloned().collect()
                    };
                    for u in &lefts {
                        for w in &rights {
                            let mut v = vec![Rat::zero(); paths[k].len()];
                            for (c, q) in r {
                                let full: Vec<usize> = u.iter().chain(q).chain(w).copied().collect();
                                v[index[k][&full]] += c;
                            }
                            gens.push(v);
                        }
                    }
                }
            }
            ideal.push(Subspace::from_vectors(paths[k].len(), gens));
        }
        PathOracle {
            arrows,
            paths,
            index,
            ideal,
        }
    }

    /// Dimension of `kQ/I` in each degree, for `n` vertices.
    pub fn graded_dims(&self, n: usize) -> Vec<usize> {
        let mut dims = vec![n];
        for k in 1..self.paths.len() {
            dims.push(self.paths[k].len() - self.ideal[k].dim());
        }
        while dims.len() > 1 && *dims.last().unwrap() == 0 {
            dims.pop();
        }
        dims
    }

    /// Whether `Σ c · path` lies in the ideal; all paths must have length `k ≥ 1`.
    pub fn in_ideal(&self, k: usize, combo: &[(Rat, Vec<usize>)]) -> bool {
        let mut v = vec![Rat::zero(); self.paths[k].len()];
        for (c, q) in combo {
            v[self.index[k][q]] += c;
        }
        self.ideal[k].contains_vec(&v)
    }
}

/// Arrow-index word of a path-labelled basis element of a quiver-presented algebra.
pub fn word_of(a: &Algebra, b: usize) -> Vec<usize> {
    let p = a.presentation().unwrap();
    if a.basis()[b].degree == Some(0) {
        return vec![];
    }
    a.basis()[b]
        .label
        .split('*')
        .map(|n| p.arrows.iter().position(|x| x.name == n).unwrap())
        .collect()
}
