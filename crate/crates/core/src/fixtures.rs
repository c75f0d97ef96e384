//! Built-in quiver presentations.

use crate::algebra::{build_algebra, AlgebraRef, QuiverPresentation, Relation, DEFAULT_DEGREE_CAP};
use crate::error::{Error, Result};

fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn pres(name: &str, n: usize, arrows: Vec<(String, usize, usize)>, relations: Vec<Relation>) -> QuiverPresentation {
    let vs = labels(n);
    let vr: Vec<&str> = vs.iter().map(String::as_str).collect();
    let ar: Vec<(&str, &str, &str)> = arrows
        .iter()
        .map(|(a, s, t)| (a.as_str(), vr[s - 1], vr[t - 1]))
        .collect();
    QuiverPresentation::new(name, &vr, &ar, relations)
}

/// Double quiver `1 ⇄ 2 ⇄ ⋯ ⇄ n` with `alpha_i: i → i+1` and `beta_i: i+1 → i`.
fn double_line(n: usize) -> Vec<(String, usize, usize)> {
    let mut arrows = Vec::new();
    for i in 1..n {
        arrows.push((format!("alpha{i}"), i, i + 1));
        arrows.push((format!("beta{i}"), i + 1, i));
    }
    arrows
}

fn path(names: &[String]) -> Vec<&str> {
    names.iter().map(String::as_str).collect()
}

/// Schur-algebra block `A_n`: relations `alpha_{i-1} alpha_i`, `beta_i beta_{i-1}`,
/// `beta_{i-1} alpha_{i-1} - alpha_i beta_i` for `2 ≤ i ≤ n-1`, and `beta_{n-1} alpha_{n-1}`.
pub fn schur(n: usize) -> QuiverPresentation {
    assert!(n >= 2);
    let a = |i: usize| format!("alpha{i}");
    let b = |i: usize| format!("beta{i}");
    let mut rels = Vec::new();
    for i in 2..n {
        rels.push(Relation::monomial(&path(&[a(i - 1), a(i)])));
        rels.push(Relation::monomial(&path(&[b(i), b(i - 1)])));
        rels.push(Relation::difference(&path(&[b(i - 1), a(i - 1)]), &path(&[a(i), b(i)])));
    }
    rels.push(Relation::monomial(&path(&[b(n - 1), a(n - 1)])));
    pres(&format!("schur_a{n}"), n, double_line(n), rels)
}

/// Auslander algebra of `k[x]/(x^n)`: relations `beta_i alpha_i - alpha_{i+1} beta_{i+1}`
/// for `1 ≤ i ≤ n-2` and `beta_{n-1} alpha_{n-1}`.
pub fn aus_trunc(n: usize) -> QuiverPresentation {
    assert!(n >= 2);
    let a = |i: usize| format!("alpha{i}");
    let b = |i: usize| format!("beta{i}");
    let mut rels = Vec::new();
    for i in 1..n - 1 {
        rels.push(Relation::difference(&path(&[b(i), a(i)]), &path(&[a(i + 1), b(i + 1)])));
    }
    rels.push(Relation::monomial(&path(&[b(n - 1), a(n - 1)])));
    pres(&format!("aus_trunc_{n}"), n, double_line(n), rels)
}

/// Preprojective algebra of type `A_n` for `n = 2, 3`.
pub fn preprojective(n: usize) -> QuiverPresentation {
    let s = |x: &str| x.to_string();
    match n {
        2 => pres(
            "pp_a2",
            2,
            vec![(s("alpha"), 1, 2), (s("beta"), 2, 1)],
            vec![Relation::monomial(&["beta", "alpha"]), Relation::monomial(&["alpha", "beta"])],
        ),
        3 => pres(
            "pp_a3",
            3,
            double_line(3),
            vec![
                Relation::monomial(&["alpha1", "beta1"]),
                Relation::difference(&["beta1", "alpha1"], &["alpha2", "beta2"]),
                Relation::monomial(&["beta2", "alpha2"]),
            ],
        ),
        _ => panic!("preprojective fixture only for n = 2, 3"),
    }
}

/// `alpha: 2 → 1`, `gamma: 1 → 3`, `beta: 3 → 2` with relations `alpha gamma`, `beta alpha`.
pub fn example_eg() -> QuiverPresentation {
    let s = |x: &str| x.to_string();
    pres(
        "example_eg",
        3,
        vec![(s("alpha"), 2, 1), (s("gamma"), 1, 3), (s("beta"), 3, 2)],
        vec![Relation::monomial(&["alpha", "gamma"]), Relation::monomial(&["beta", "alpha"])],
    )
}

/// Auslander algebra of the path algebra of `1 ← 2 → 3`.
pub fn cex_auslander() -> QuiverPresentation {
    let s = |x: &str| x.to_string();
    pres(
        "cex_auslander",
        6,
        vec![
            (s("alpha"), 1, 2),
            (s("beta"), 2, 4),
            (s("gamma"), 3, 2),
            (s("delta"), 2, 5),
            (s("epsilon"), 4, 6),
            (s("phi"), 5, 6),
        ],
        vec![
            Relation::monomial(&["alpha", "beta"]),
            Relation::monomial(&["gamma", "delta"]),
            Relation::difference(&["beta", "epsilon"], &["delta", "phi"]),
        ],
    )
}

/// Path algebra of `1 ← 2 → 3`.
pub fn kq_a3() -> QuiverPresentation {
    let s = |x: &str| x.to_string();
    pres("kq_a3", 3, vec![(s("a"), 2, 1), (s("b"), 2, 3)], vec![])
}

pub fn semisimple(n: usize) -> QuiverPresentation {
    pres(&format!("semisimple_{n}"), n, vec![], vec![])
}

/// `k[x]/(x^n)`.
pub fn truncated_polynomial(n: usize) -> QuiverPresentation {
    assert!(n >= 1);
    if n == 1 {
        let mut p = semisimple(1);
        p.name = "trunc_1".into();
        return p;
    }
    let xs = vec!["x"; n];
    pres(
        &format!("trunc_{n}"),
        1,
        vec![("x".to_string(), 1, 1)],
        vec![Relation::monomial(&xs)],
    )
}

/// Path algebra of the linear quiver `1 → 2 → ⋯ → n`.
pub fn linear(n: usize) -> QuiverPresentation {
    let arrows = (1..n).map(|i| (format!("a{i}"), i, i + 1)).collect();
    pres(&format!("linear_a{n}"), n, arrows, vec![])
}

pub const CATALOG: &[&str] = &[
    "schur_a2",
    "schur_a3",
    "example_eg",
    "pp_a2",
    "pp_a3",
    "aus_trunc_2",
    "aus_trunc_3",
    "cex_auslander",
    "kq_a3",
    "semisimple_n",
];

fn suffix(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?.parse().ok()
}

/// Looks up a fixture; parametrised families accept any size, e.g. `semisimple_4`,
/// `trunc_3`, `linear_a5`, `schur_a4`, `aus_trunc_4`.
pub fn presentation(name: &str) -> Option<QuiverPresentation> {
    match name {
        "example_eg" => return Some(example_eg()),
        "pp_a2" => return Some(preprojective(2)),
        "pp_a3" => return Some(preprojective(3)),
        "cex_auslander" => return Some(cex_auslander()),
        "kq_a3" => return Some(kq_a3()),
        _ => {}
    }
    let bounded = |n: usize, lo: usize| (lo..=12).contains(&n).then_some(n);
    if let Some(n) = suffix(name, "schur_a").and_then(|n| bounded(n, 2)) {
        return Some(schur(n));
    }
    if let Some(n) = suffix(name, "aus_trunc_").and_then(|n| bounded(n, 2)) {
        return Some(aus_trunc(n));
    }
    if let Some(n) = suffix(name, "semisimple_").and_then(|n| bounded(n, 1)) {
        return Some(semisimple(n));
    }
    if let Some(n) = suffix(name, "trunc_").and_then(|n| bounded(n, 1)) {
        return Some(truncated_polynomial(n));
    }
    if let Some(n) = suffix(name, "linear_a").and_then(|n| bounded(n, 1)) {
        return Some(linear(n));
    }
    None
}

pub fn algebra(name: &str) -> Result<AlgebraRef> {
    let p = presentation(name).ok_or_else(|| Error::UnknownFixture(name.to_string()))?;
    build_algebra(&p, DEFAULT_DEGREE_CAP)
}
