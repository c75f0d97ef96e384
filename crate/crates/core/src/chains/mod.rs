//! Heredity chains of idempotent ideals and their classification.
//!
//! A total order `(i_1, …, i_n)` gives the chain `H_j = A e_{S_j} A` with
//! `S_j = {i_{j+1}, …, i_n}`: the smallest vertex `i_1` is removed first.

mod construct;
mod search;
mod standard;

use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::{ideal_product, idempotent_ideal, quotient_algebra, AlgebraRef, Ideal, VertexSet};
use crate::error::{Error, Result};
use crate::modules::ideal_as_module;

pub use construct::{gl2_lsq_order, gl2_rsq_order, reduction_chains, ReductionLevel, Reductions};
pub use search::{find_first_order, find_limited, find_orders, for_each_order, SearchResult, DEFAULT_SEARCH_BOUND};
pub use standard::{cps_decomposition_check, rsq_via_delta, standard_module, CpsLevel, StandardModule};

/// Permutation `(i_1, …, i_n)` of vertex indices, `i_1` smallest.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TotalOrder(Vec<usize>);

impl TotalOrder {
    pub fn new(perm: Vec<usize>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(Error::InvalidOrder(format!("expected {n} vertices, got {}", perm.len())));
        }
        for &v in &perm {
            if v >= n || seen[v] {
                return Err(Error::InvalidOrder(format!("{perm:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(TotalOrder(perm))
    }

    pub fn identity(n: usize) -> Self {
        TotalOrder((0..n).collect())
    }

    /// Parses vertex labels such as `["2", "1", "3"]`.
    pub fn from_labels<S: AsRef<str>>(a: &crate::algebra::Algebra, labels: &[S]) -> Result<Self> {
        let perm = labels
            .iter()
            .map(|l| a.vertex_index(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        TotalOrder::new(perm, a.n_vertices())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Rank of vertex `v` in the order.
    pub fn position(&self, v: usize) -> usize {
        self.0.iter().position(|&w| w == v).expect("vertex in order")
    }

    /// `S_j = {i_{j+1}, …, i_n}` for `0 ≤ j ≤ n`.
    pub fn subsets(&self) -> Vec<VertexSet> {
        (0..=self.0.len()).map(|j| self.0[j..].iter().copied().collect()).collect()
    }

    pub fn labels(&self, a: &crate::algebra::Algebra) -> Vec<String> {
        self.0.iter().map(|&v| a.vertices()[v].clone()).collect()
    }
}

/// Descending chain `H_0 = A ⊋ H_1 ⊋ ⋯ ⊋ H_n = 0` with `H_j = A e_{S_j} A`.
#[derive(Clone, Debug)]
pub struct IdealChain {
    pub alg: AlgebraRef,
    pub subsets: Vec<VertexSet>,
    pub levels: Vec<Ideal>,
}

pub fn order_to_chain(a: &AlgebraRef, o: &TotalOrder) -> IdealChain {
    chain_from_subsets(a, o.subsets()).expect("orders give valid chains")
}

/// Chain generated by strictly descending vertex subsets from all vertices to none.
pub fn chain_from_subsets(a: &AlgebraRef, subsets: Vec<VertexSet>) -> Result<IdealChain> {
    check_subsets(a.n_vertices(), &subsets)?;
    let levels = subsets.iter().map(|&s| idempotent_ideal(a, s)).collect();
    Ok(IdealChain {
        alg: a.clone(),
        subsets,
        levels,
    })
}

pub(crate) fn check_subsets(n: usize, subsets: &[VertexSet]) -> Result<()> {
    let bad = |why: &str| Err(Error::InvalidOrder(why.to_string()));
    if subsets.first() != Some(&VertexSet::all(n)) {
        return bad("chain must start at the full vertex set");
    }
    if subsets.last() != Some(&VertexSet::empty()) {
        return bad("chain must end at the empty set");
    }
    for w in subsets.windows(2) {
        if !w[1].is_subset_of(w[0]) || w[1] == w[0] {
            return bad("chain must descend strictly");
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainKind {
    Heredity,
    RightStrong,
    LeftStrong,
    Strong,
}

impl std::str::FromStr for ChainKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "heredity" => Ok(ChainKind::Heredity),
            "right-strong" => Ok(ChainKind::RightStrong),
            "left-strong" => Ok(ChainKind::LeftStrong),
            "strong" => Ok(ChainKind::Strong),
            _ => Err(Error::InvalidOrder(format!("unknown chain kind {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    None,
    Heredity,
    RightStrong,
    LeftStrong,
    Strong,
}

/// Verdicts for the step `H_j ⊋ H_{j+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelVerdict {
    pub level: usize,
    pub subset: Vec<String>,
    pub removed: Vec<String>,
    /// `H_j / H_{j+1}` is projective as a right `A/H_{j+1}`-module.
    pub quotient_projective: bool,
    /// `(H_j/H_{j+1}) J(A/H_{j+1}) (H_j/H_{j+1}) = 0`.
    pub hjh_zero: bool,
    /// `H_j` is projective as a right `A`-module.
    pub right_projective: bool,
    /// `H_j` is projective as a left `A`-module.
    pub left_projective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub level: usize,
    pub clause: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainCertificate {
    pub levels: Vec<LevelVerdict>,
    pub heredity: bool,
    pub right_strong: bool,
    pub left_strong: bool,
    pub strong: bool,
    pub classification: Classification,
    /// First failing clause for the strongest property that fails.
    pub witness: Option<Failure>,
}

impl ChainCertificate {
    pub fn satisfies(&self, kind: ChainKind) -> bool {
        match kind {
            ChainKind::Heredity => self.heredity,
            ChainKind::RightStrong => self.right_strong,
            ChainKind::LeftStrong => self.left_strong,
            ChainKind::Strong => self.strong,
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct StepVerdict {
    quotient_projective: bool,
    hjh_zero: bool,
}

/// Caches per-subset and per-step verdicts for one algebra.
pub struct ChainAnalyzer {
    alg: AlgebraRef,
    right: HashMap<VertexSet, bool>,
    left: HashMap<VertexSet, bool>,
    steps: HashMap<(VertexSet, VertexSet), StepVerdict>,
}

impl ChainAnalyzer {
    pub fn new(alg: AlgebraRef) -> Self {
        ChainAnalyzer {
            alg,
            right: HashMap::new(),
            left: HashMap::new(),
            steps: HashMap::new(),
        }
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.alg
    }

    pub fn right_projective(&mut self, s: VertexSet) -> bool {
        let alg = &self.alg;
        *self
            .right
            .entry(s)
            .or_insert_with(|| ideal_as_module(alg, &idempotent_ideal(alg, s)).is_projective())
    }

    /// Projectivity of `A e_S A` as a left module, computed on the opposite algebra.
    pub fn left_projective(&mut self, s: VertexSet) -> bool {
        let alg = &self.alg;
        *self.left.entry(s).or_insert_with(|| {
            let op = alg.opposite();
            ideal_as_module(&op, &idempotent_ideal(&op, s)).is_projective()
        })
    }

    fn step(&mut self, upper: VertexSet, lower: VertexSet) -> StepVerdict {
        if let Some(v) = self.steps.get(&(upper, lower)) {
            return *v;
        }
        let v = step_verdict(&self.alg, upper, lower);
        self.steps.insert((upper, lower), v);
        v
    }

    /// Heredity clauses of `A e_S A / A e_{S'} A` inside `A / A e_{S'} A`.
    pub fn is_heredity_step(&mut self, upper: VertexSet, lower: VertexSet) -> (bool, bool) {
        let v = self.step(upper, lower);
        (v.quotient_projective, v.hjh_zero)
    }

    pub fn classify_subsets(&mut self, subsets: &[VertexSet]) -> Result<ChainCertificate> {
        check_subsets(self.alg.n_vertices(), subsets)?;
        let alg = self.alg.clone();
        let labels = |s: VertexSet| -> Vec<String> { s.iter().map(|v| alg.vertices()[v].clone()).collect() };
        let mut levels = Vec::new();
        for j in 0..subsets.len() - 1 {
            let (upper, lower) = (subsets[j], subsets[j + 1]);
            let step = self.step(upper, lower);
            let right_projective = self.right_projective(upper);
            let left_projective = self.left_projective(upper);
            levels.push(LevelVerdict {
                level: j,
                subset: labels(upper),
                removed: labels(upper.difference(lower)),
                quotient_projective: step.quotient_projective,
                hjh_zero: step.hjh_zero,
                right_projective,
                left_projective,
            });
        }
        Ok(certificate(levels))
    }

    pub fn classify_order(&mut self, o: &TotalOrder) -> ChainCertificate {
        self.classify_subsets(&o.subsets()).expect("orders give valid chains")
    }
}

fn step_verdict(a: &AlgebraRef, upper: VertexSet, lower: VertexSet) -> StepVerdict {
    let q = quotient_algebra(a, &idempotent_ideal(a, lower)).expect("basic algebra");
    let qa = &q.algebra;
    let mapped: VertexSet = upper.iter().filter_map(|v| q.vertex_map[v]).collect();
    let h = idempotent_ideal(qa, mapped);
    let quotient_projective = ideal_as_module(qa, &h).is_projective();
    let hj = ideal_product(qa, &h, qa.radical());
    let hjh_zero = ideal_product(qa, &hj, &h).is_zero();
    StepVerdict {
        quotient_projective,
        hjh_zero,
    }
}

fn certificate(levels: Vec<LevelVerdict>) -> ChainCertificate {
    let heredity = levels.iter().all(|l| l.quotient_projective && l.hjh_zero);
    let right_strong = levels.iter().all(|l| l.right_projective && l.hjh_zero);
    let left_strong = levels.iter().all(|l| l.left_projective && l.hjh_zero);
    let strong = right_strong && left_strong;
    let classification = if strong {
        Classification::Strong
    } else if right_strong {
        Classification::RightStrong
    } else if left_strong {
        Classification::LeftStrong
    } else if heredity {
        Classification::Heredity
    } else {
        Classification::None
    };
    let witness = levels.iter().find_map(|l| {
        let clause = if !l.hjh_zero {
            "hjh-zero"
        } else if !l.quotient_projective {
            "quotient-projective"
        } else if !l.right_projective {
            "right-projective"
        } else if !l.left_projective {
            "left-projective"
        } else {
            return None;
        };
        Some(Failure {
            level: l.level,
            clause: clause.to_string(),
        })
    });
    ChainCertificate {
        levels,
        heredity,
        right_strong,
        left_strong,
        strong,
        classification,
        witness,
    }
}

pub fn classify_chain(c: &IdealChain) -> ChainCertificate {
    ChainAnalyzer::new(c.alg.clone())
        .classify_subsets(&c.subsets)
        .expect("chain subsets were validated")
}

pub fn classify_order(a: &AlgebraRef, o: &TotalOrder) -> ChainCertificate {
    ChainAnalyzer::new(a.clone()).classify_order(o)
}

/// Whether `A e_S A` is a heredity ideal of `A`.
pub fn is_heredity_ideal(a: &AlgebraRef, s: VertexSet) -> bool {
    let h = idempotent_ideal(a, s);
    if !ideal_as_module(a, &h).is_projective() {
        return false;
    }
    let hj = ideal_product(a, &h, a.radical());
    ideal_product(a, &hj, &h).is_zero()
}
