use std::collections::HashMap;
use std::sync::Arc;

use super::{Algebra, AlgebraRef, BasisElem, Provenance};
use crate::error::{Error, Result};
use crate::exactlin::{Mat, Rat};

pub const DEFAULT_DEGREE_CAP: usize = 30;
pub const DEFAULT_DIM_CAP: usize = 5000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: String,
    pub target: String,
}

/// A linear combination of paths; each path is a list of arrow names read
/// left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Rat, Vec<String>)>,
}

impl Relation {
    pub fn monomial(path: &[&str]) -> Self {
        Relation {
            terms: vec![(Rat::one(), path.iter().map(|s| s.to_string()).collect())],
        }
    }

    /// `first - second`
    pub fn difference(first: &[&str], second: &[&str]) -> Self {
        Relation {
            terms: vec![
                (Rat::one(), first.iter().map(|s| s.to_string()).collect()),
                (Rat::from_int(-1), second.iter().map(|s| s.to_string()).collect()),
            ],
        }
    }

    /// Parses expressions such as `b1*a1 - a2*b2` or `2 a*b + -1/2 c*d`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::InvalidPresentation(format!("cannot parse relation {s:?}"));
        let mut terms = Vec::new();
        let mut sign = Rat::one();
        let mut coeff: Option<Rat> = None;
        for tok in s.split_whitespace() {
            match tok {
                "+" => {}
                "-" => sign = -sign,
                _ => {
                    let (neg, body) = match tok.strip_prefix('-') {
                        Some(rest) => (true, rest),
                        None => (false, tok),
                    };
                    let signed = if neg { -sign.clone() } else { sign.clone() };
                    if let Ok(c) = body.parse::<Rat>() {
                        if coeff.is_some() {
                            return Err(bad());
                        }
                        coeff = Some(signed * c);
                        sign = Rat::one();
                        continue;
                    }
                    let path: Vec<String> = body.split('*').map(str::to_string).collect();
                    if path.iter().any(String::is_empty) {
                        return Err(bad());
                    }
                    let c = coeff.take().map_or(signed.clone(), |c| c * if neg { -Rat::one() } else { Rat::one() });
                    terms.push((c, path));
                    sign = Rat::one();
                }
            }
        }
        if terms.is_empty() || coeff.is_some() {
            return Err(bad());
        }
        Ok(Relation { terms })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub name: String,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
}

impl QuiverPresentation {
    pub fn new(name: &str, vertices: &[&str], arrows: &[(&str, &str, &str)], relations: Vec<Relation>) -> Self {
        QuiverPresentation {
            name: name.to_string(),
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            arrows: arrows
                .iter()
                .map(|(n, s, t)| Arrow {
                    name: n.to_string(),
                    source: s.to_string(),
                    target: t.to_string(),
                })
                .collect(),
            relations,
        }
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::InvalidPresentation(format!("unknown arrow {name:?}")))
    }
}

struct ResolvedRelation {
    source: usize,
    len: usize,
    terms: Vec<(Rat, Vec<usize>)>,
}

struct Resolved {
    arrows: Vec<(usize, usize)>,
    relations: Vec<ResolvedRelation>,
}

fn resolve(p: &QuiverPresentation) -> Result<Resolved> {
    let mut seen = std::collections::HashSet::new();
    for v in &p.vertices {
        if !seen.insert(v.as_str()) {
            return Err(Error::InvalidPresentation(format!("duplicate vertex {v:?}")));
        }
    }
    if p.vertices.len() > super::VertexSet::MAX_VERTICES {
        return Err(Error::InvalidPresentation("too many vertices".into()));
    }
    let mut names = std::collections::HashSet::new();
    let mut arrows = Vec::new();
    for a in &p.arrows {
        if !names.insert(a.name.as_str()) {
            return Err(Error::InvalidPresentation(format!("duplicate arrow {:?}", a.name)));
        }
        arrows.push((p.vertex_index(&a.source)?, p.vertex_index(&a.target)?));
    }
    let mut relations = Vec::new();
    for (ri, r) in p.relations.iter().enumerate() {
        let mut combined: Vec<(Rat, Vec<usize>)> = Vec::new();
        let mut shape: Option<(usize, usize, usize)> = None;
        for (c, path) in &r.terms {
            if path.is_empty() {
                return Err(Error::InvalidPresentation(format!("relation {ri} has an empty path")));
            }
            let idx: Vec<usize> = path.iter().map(|n| p.arrow_index(n)).collect::<Result<_>>()?;
            for w in idx.windows(2) {
                if arrows[w[0]].1 != arrows[w[1]].0 {
                    return Err(Error::InvalidPresentation(format!(
                        "relation {ri}: arrows {:?} and {:?} do not compose",
                        p.arrows[w[0]].name, p.arrows[w[1]].name
                    )));
                }
            }
            let s = (arrows[idx[0]].0, arrows[*idx.last().unwrap()].1, idx.len());
            match shape {
                None => shape = Some(s),
                Some(t) if t != s => return Err(Error::NonHomogeneousRelation(ri)),
                _ => {}
            }
            match combined.iter_mut().find(|(_, q)| *q == idx) {
                Some((acc, _)) => *acc += c,
                None => combined.push((c.clone(), idx)),
            }
        }
        combined.retain(|(c, _)| !c.is_zero());
        let Some((source, _, len)) = shape else {
            return Err(Error::InvalidPresentation(format!("relation {ri} is empty")));
        };
        if combined.is_empty() {
            return Err(Error::InvalidPresentation(format!("relation {ri} cancels to zero")));
        }
        if len < 2 {
            return Err(Error::InvalidPresentation(format!(
                "relation {ri} contains a path of length < 2"
            )));
        }
        relations.push(ResolvedRelation {
            source,
            len,
            terms: combined,
        });
    }
    Ok(Resolved { arrows, relations })
}

type Sparse = Vec<(usize, Rat)>;

struct Level {
    paths: Vec<Vec<usize>>,
    source: Vec<usize>,
    target: Vec<usize>,
}

struct Graded {
    levels: Vec<Level>,
    /// `times[d][b * n_arrows + a]` is the normal form of `b · a` in degree `d + 1`.
    times: Vec<Vec<Sparse>>,
    n_arrows: usize,
}

impl Graded {
    fn mult_path(&self, degree: usize, x: &Sparse, path: &[usize]) -> Sparse {
        let mut cur = x.clone();
        let mut d = degree;
        for &a in path {
            if d >= self.times.len() {
                return Vec::new();
            }
            let mut acc: HashMap<usize, Rat> = HashMap::new();
            for (b, c) in &cur {
                for (q, k) in &self.times[d][b * self.n_arrows + a] {
                    *acc.entry(*q).or_insert_with(Rat::zero) += c * k;
                }
            }
            let mut next: Sparse = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            next.sort_by_key(|(q, _)| *q);
            cur = next;
            d += 1;
            if cur.is_empty() {
                break;
            }
        }
        cur
    }
}

/// Basis of `kQ/I` computed degree by degree for a homogeneous admissible ideal.
pub fn build_algebra(p: &QuiverPresentation, degree_cap: usize) -> Result<AlgebraRef> {
    build_algebra_capped(p, degree_cap, DEFAULT_DIM_CAP)
}

pub fn build_algebra_capped(p: &QuiverPresentation, degree_cap: usize, dim_cap: usize) -> Result<AlgebraRef> {
    let res = resolve(p)?;
    let n = p.vertices.len();
    let na = res.arrows.len();

    let mut levels = vec![Level {
        paths: vec![Vec::new(); n],
        source: (0..n).collect(),
        target: (0..n).collect(),
    }];
    let mut times: Vec<Vec<Sparse>> = Vec::new();
    let mut t0 = vec![Vec::new(); n * na];
    for (a, &(s, _)) in res.arrows.iter().enumerate() {
        t0[s * na + a] = vec![(a, Rat::one())];
    }
    times.push(t0);
    levels.push(Level {
        paths: (0..na).map(|a| vec![a]).collect(),
        source: res.arrows.iter().map(|x| x.0).collect(),
        target: res.arrows.iter().map(|x| x.1).collect(),
    });
    let mut total = n + na;
    if na > 0 && degree_cap <= 1 {
        return Err(Error::CapExceeded(degree_cap));
    }

    let mut d = 1;
    while !levels[d].paths.is_empty() {
        let cur = &levels[d];
        let mut cands: Vec<(usize, usize)> = Vec::new();
        let mut cand_index: HashMap<(usize, usize), usize> = HashMap::new();
        for b in 0..cur.paths.len() {
            for (a, &(s, _)) in res.arrows.iter().enumerate() {
                if s == cur.target[b] {
                    cand_index.insert((b, a), cands.len());
                    cands.push((b, a));
                }
            }
        }
        let graded = Graded {
            levels: Vec::new(),
            times: times.clone(),
            n_arrows: na,
        };
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for r in &res.relations {
            if r.len > d + 1 {
                continue;
            }
            let lower = &levels[d + 1 - r.len];
            for pb in 0..lower.paths.len() {
                if lower.target[pb] != r.source {
                    continue;
                }
                let mut row = vec![Rat::zero(); cands.len()];
                for (c, path) in &r.terms {
                    let (head, last) = path.split_at(r.len - 1);
                    let x = graded.mult_path(d + 1 - r.len, &vec![(pb, Rat::one())], head);
                    for (q, k) in x {
                        let idx = cand_index[&(q, last[0])];
                        row[idx] += c * &k;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        let (red, pivots) = Mat::from_rows_with_cols(rows, cands.len()).expect("rows").rref();
        let mut is_pivot = vec![None; cands.len()];
        for (k, &p) in pivots.iter().enumerate() {
            is_pivot[p] = Some(k);
        }
        let mut new_index = vec![usize::MAX; cands.len()];
        let mut next = Level {
            paths: Vec::new(),
            source: Vec::new(),
            target: Vec::new(),
        };
        for (ci, &(b, a)) in cands.iter().enumerate() {
            if is_pivot[ci].is_none() {
                new_index[ci] = next.paths.len();
                let mut path = cur.paths[b].clone();
                path.push(a);
                next.paths.push(path);
                next.source.push(cur.source[b]);
                next.target.push(res.arrows[a].1);
            }
        }
        let mut td = vec![Vec::new(); cur.paths.len() * na];
        for (ci, &(b, a)) in cands.iter().enumerate() {
            td[b * na + a] = match is_pivot[ci] {
                None => vec![(new_index[ci], Rat::one())],
                Some(k) => (0..cands.len())
                    .filter(|&c| is_pivot[c].is_none() && !red[(k, c)].is_zero())
                    .map(|c| (new_index[c], -&red[(k, c)]))
                    .collect(),
            };
        }
        times.push(td);
        total += next.paths.len();
        let nonempty = !next.paths.is_empty();
        levels.push(next);
        d += 1;
        if nonempty && d >= degree_cap {
            return Err(Error::CapExceeded(degree_cap));
        }
        if total > dim_cap {
            return Err(Error::DimensionCapExceeded(dim_cap));
        }
    }
    levels.pop();
    while times.len() < levels.len() {
        times.push(vec![Vec::new(); levels[times.len()].paths.len() * na]);
    }
    let graded = Graded {
        levels,
        times,
        n_arrows: na,
    };
    assemble(p, &graded)
}

fn assemble(p: &QuiverPresentation, g: &Graded) -> Result<AlgebraRef> {
    let n = p.vertices.len();
    let mut offsets = Vec::new();
    let mut basis = Vec::new();
    for (deg, lvl) in g.levels.iter().enumerate() {
        offsets.push(basis.len());
        for (b, path) in lvl.paths.iter().enumerate() {
            let label = if deg == 0 {
                format!("e{}", p.vertices[b])
            } else {
                path.iter().map(|&a| p.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
            };
            basis.push(BasisElem {
                label,
                source: lvl.source[b],
                target: lvl.target[b],
                degree: Some(deg),
            });
        }
    }
    let dim = basis.len();
    let locate: Vec<(usize, usize)> = g
        .levels
        .iter()
        .enumerate()
        .flat_map(|(deg, lvl)| (0..lvl.paths.len()).map(move |b| (deg, b)))
        .collect();
    let mut table = vec![Vec::new(); dim * dim];
    for i in 0..dim {
        let (di, bi) = locate[i];
        for j in 0..dim {
            let (dj, bj) = locate[j];
            if basis[i].target != basis[j].source {
                continue;
            }
            table[i * dim + j] = if dj == 0 {
                vec![(i, Rat::one())]
            } else if di == 0 {
                vec![(j, Rat::one())]
            } else {
                g.mult_path(di, &vec![(bi, Rat::one())], &g.levels[dj].paths[bj])
                    .into_iter()
                    .map(|(q, c)| (offsets[di + dj] + q, c))
                    .collect()
            };
        }
    }
    let arrows_start = if g.levels.len() > 1 { offsets[1] } else { dim };
    let fixed: Vec<usize> = (arrows_start..arrows_start + p.arrows.len().min(dim - arrows_start)).collect();
    let alg = Algebra::from_parts(
        p.name.clone(),
        p.vertices.clone(),
        basis,
        (0..n).collect(),
        table,
        Provenance::Quiver(Box::new(p.clone())),
    )?
    .with_fixed_generators(fixed);
    Ok(Arc::new(alg))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_relations() {
        let r = Relation::parse("b1*a1 - a2*b2").unwrap();
        assert_eq!(r, Relation::difference(&["b1", "a1"], &["a2", "b2"]));
        let r = Relation::parse("2 a*b + -1/2 c*d").unwrap();
        assert_eq!(r.terms[0].0, Rat::from_int(2));
        assert_eq!(r.terms[1].0, Rat::new(-1, 2));
        let r = Relation::parse("-a*b").unwrap();
        assert_eq!(r.terms[0].0, Rat::from_int(-1));
        assert!(Relation::parse("").is_err());
        assert!(Relation::parse("a**b").is_err());
    }

    #[test]
    fn rejects_non_homogeneous() {
        let p = QuiverPresentation::new(
            "bad",
            &["1", "2"],
            &[("a", "1", "2"), ("b", "2", "2"), ("c", "1", "2")],
            vec![Relation {
                terms: vec![
                    (Rat::one(), vec!["a".into(), "b".into()]),
                    (Rat::one(), vec!["c".into(), "b".into(), "b".into()]),
                ],
            }],
        );
        assert_eq!(build_algebra(&p, 30).unwrap_err(), Error::NonHomogeneousRelation(0));
    }

    #[test]
    fn rejects_length_one_relation() {
        let p = QuiverPresentation::new("bad", &["1", "2"], &[("a", "1", "2")], vec![Relation::monomial(&["a"])]);
        assert!(matches!(build_algebra(&p, 30), Err(Error::InvalidPresentation(_))));
    }

    #[test]
    fn free_loop_hits_cap() {
        let p = QuiverPresentation::new("loop", &["1"], &[("x", "1", "1")], vec![]);
        assert_eq!(build_algebra(&p, 10).unwrap_err(), Error::CapExceeded(10));
    }

    #[test]
    fn truncated_polynomial() {
        let p = QuiverPresentation::new("k[x]/x^3", &["1"], &[("x", "1", "1")], vec![Relation::monomial(&["x", "x", "x"])]);
        let a = build_algebra(&p, 30).unwrap();
        assert_eq!(a.dim(), 3);
        a.check_invariants().unwrap();
    }
}
