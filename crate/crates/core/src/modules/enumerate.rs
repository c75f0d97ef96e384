use super::Module;
use crate::algebra::{is_nakayama, AlgebraRef};
use crate::error::{Error, Result};
use crate::exactlin::{Mat, Rat, Subspace};

/// All uniserial modules `P(i) / P(i) J^k`, grouped by vertex and ordered by length.
pub fn indecomposables_nakayama(a: &AlgebraRef) -> Result<Vec<Module>> {
    if !is_nakayama(a)? {
        return Err(Error::WrongShape("quiver is not of Nakayama type".into()));
    }
    let mut out = Vec::new();
    for i in 0..a.n_vertices() {
        let p = Module::projective(a.clone(), i);
        let mut layer = Subspace::full(p.dim());
        while !layer.is_zero() {
            let next = p.closure(
                layer
                    .basis_vectors()
                    .iter()
                    .flat_map(|u| p.generator_actions().iter().map(move |g| g.apply(u))),
            );
            out.push(p.quotient(&next).0);
            layer = next;
        }
    }
    Ok(out)
}

/// Interval modules of a path algebra whose quiver is a line with any orientation.
pub fn indecomposables_type_a(a: &AlgebraRef) -> Result<Vec<Module>> {
    let p = a.presentation().ok_or(Error::NotQuiverPresented)?;
    let n = p.vertices.len();
    let wrong = |why: &str| Error::WrongShape(why.to_string());
    if !p.relations.is_empty() {
        return Err(wrong("path algebra without relations required"));
    }
    if n == 0 || p.arrows.len() + 1 != n {
        return Err(wrong("quiver is not a line"));
    }
    let mut adj = vec![Vec::new(); n];
    for arrow in &p.arrows {
        let (s, t) = (p.vertex_index(&arrow.source)?, p.vertex_index(&arrow.target)?);
        if s == t {
            return Err(wrong("loops are not allowed"));
        }
        adj[s].push(t);
        adj[t].push(s);
    }
    if adj.iter().any(|x| x.len() > 2) {
        return Err(wrong("quiver is not a line"));
    }
    let mut line = Vec::new();
    if n == 1 {
        line.push(0);
    } else {
        let start = (0..n).find(|&v| adj[v].len() == 1).ok_or_else(|| wrong("quiver is a cycle"))?;
        let (mut prev, mut cur) = (usize::MAX, start);
        loop {
            line.push(cur);
            match adj[cur].iter().find(|&&w| w != prev) {
                Some(&w) if line.len() < n => {
                    prev = cur;
                    cur = w;
                }
                _ => break,
            }
        }
        if line.len() != n {
            return Err(wrong("quiver is not connected"));
        }
    }
    let mut out = Vec::new();
    for l in 0..n {
        for r in l..n {
            let mut dims = vec![0; n];
            for &v in &line[l..=r] {
                dims[v] = 1;
            }
            let mats = p
                .arrows
                .iter()
                .map(|arrow| {
                    let (s, t) = (p.vertex_index(&arrow.source)?, p.vertex_index(&arrow.target)?);
                    let mut m = Mat::zeros(dims[s], dims[t]);
                    if dims[s] == 1 && dims[t] == 1 {
                        m[(0, 0)] = Rat::one();
                    }
                    Ok(m)
                })
                .collect::<Result<Vec<_>>>()?;
            out.push(Module::from_representation(a.clone(), dims, mats)?);
        }
    }
    Ok(out)
}
