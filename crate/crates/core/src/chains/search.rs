use serde::Serialize;

use super::{ChainAnalyzer, ChainKind, TotalOrder};
use crate::algebra::AlgebraRef;
use crate::error::{Error, Result};

pub const DEFAULT_SEARCH_BOUND: usize = 8;

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub orders: Vec<Vec<String>>,
    #[serde(skip)]
    pub found: Vec<TotalOrder>,
    pub examined: usize,
}

/// Visits every permutation of `0..n` in lexicographic order until `f` returns `false`.
pub fn for_each_order(n: usize, mut f: impl FnMut(TotalOrder) -> bool) {
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        if !f(TotalOrder(p.clone())) {
            return;
        }
        // next lexicographic permutation
        let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
            return;
        };
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

fn check_bound(a: &AlgebraRef, bound: usize) -> Result<()> {
    if a.n_vertices() > bound {
        return Err(Error::TooManyVertices(a.n_vertices(), bound));
    }
    Ok(())
}

/// All orders whose chain satisfies `kind`, in lexicographic order.
pub fn find_orders(a: &AlgebraRef, kind: ChainKind, bound: usize) -> Result<SearchResult> {
    find_limited(a, kind, bound, usize::MAX)
}

/// Like [`find_orders`] but stops after `limit` hits.
pub fn find_limited(a: &AlgebraRef, kind: ChainKind, bound: usize, limit: usize) -> Result<SearchResult> {
    check_bound(a, bound)?;
    let mut an = ChainAnalyzer::new(a.clone());
    let mut found = Vec::new();
    let mut examined = 0;
    for_each_order(a.n_vertices(), |o| {
        examined += 1;
        if an.classify_order(&o).satisfies(kind) {
            found.push(o);
        }
        found.len() < limit
    });
    Ok(SearchResult {
        orders: found.iter().map(|o| o.labels(a)).collect(),
        found,
        examined,
    })
}

pub fn find_first_order(a: &AlgebraRef, kind: ChainKind, bound: usize) -> Result<Option<TotalOrder>> {
    Ok(find_limited(a, kind, bound, 1)?.found.pop())
}
