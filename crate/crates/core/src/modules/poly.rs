//! Univariate polynomials over the rationals, coefficients listed from the constant term up.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactlin::{Mat, Rat};

pub(crate) type Poly = Vec<Rat>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Rat::is_zero) {
        p.pop();
    }
    p
}

fn monic(p: Poly) -> Poly {
    let p = trim(p);
    match p.last() {
        None => p,
        Some(lead) => {
            let inv = lead.recip();
            p.iter().map(|c| c * &inv).collect()
        }
    }
}

fn derivative(p: &Poly) -> Poly {
    trim(p.iter().enumerate().skip(1).map(|(k, c)| c * &Rat::from_int(k as i64)).collect())
}

/// Quotient and remainder.
fn divmod(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let b = trim(b.clone());
    let mut r = trim(a.clone());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![Rat::zero(); r.len() - b.len() + 1];
    let lead = b.last().expect("division by zero polynomial").recip();
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * &lead;
        for (k, bc) in b.iter().enumerate() {
            r[shift + k] -= &c * bc;
        }
        q[shift] = c;
        r = trim(r);
    }
    (trim(q), r)
}

fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut x, mut y) = (trim(a.clone()), trim(b.clone()));
    while !y.is_empty() {
        let (_, r) = divmod(&x, &y);
        x = y;
        y = r;
    }
    monic(x)
}

/// Yun's squarefree factorisation: `p = Π f_i^i` with the `f_i` squarefree and
/// pairwise coprime. Returns the nonconstant `f_i`.
pub(crate) fn squarefree_factors(p: &Poly) -> Vec<Poly> {
    let p = monic(p.clone());
    let mut out = Vec::new();
    let dp = derivative(&p);
    let mut a = gcd(&p, &dp);
    let mut b = divmod(&p, &a).0;
    let mut c = divmod(&dp, &a).0;
    let mut d = trim(sub(&c, &derivative(&b)));
    while b.len() > 1 {
        a = gcd(&b, &d);
        if a.len() > 1 {
            out.push(a.clone());
        }
        b = divmod(&b, &a).0;
        c = divmod(&d, &a).0;
        d = trim(sub(&c, &derivative(&b)));
    }
    out
}

fn sub(a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    (0..n)
        .map(|k| {
            let x = a.get(k).cloned().unwrap_or_else(Rat::zero);
            let y = b.get(k).cloned().unwrap_or_else(Rat::zero);
            x - y
        })
        .collect()
}

pub(crate) fn eval(p: &Poly, x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// `p(m)` for a square matrix.
pub(crate) fn eval_mat(p: &Poly, m: &Mat) -> Mat {
    let n = m.rows();
    let mut acc = Mat::zeros(n, n);
    for c in p.iter().rev() {
        acc = acc.mul(m);
        if !c.is_zero() {
            acc.add_scaled(c, &Mat::identity(n));
        }
    }
    acc
}

/// Monic minimal polynomial of a square matrix.
pub(crate) fn minimal_polynomial(m: &Mat) -> Poly {
    let n = m.rows();
    let mut powers: Vec<Vec<Rat>> = vec![Mat::identity(n).entries().to_vec()];
    let mut cur = Mat::identity(n);
    loop {
        cur = cur.mul(m);
        let v = cur.entries().to_vec();
        let basis = Mat::from_rows_with_cols(powers.clone(), n * n).unwrap();
        if let Some(x) = basis.solve_left(&v) {
            let mut p: Poly = x.into_iter().map(|c| -c).collect();
            p.push(Rat::one());
            return p;
        }
        powers.push(v);
    }
}

const DIVISOR_BOUND: u64 = 1 << 40;

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > DIVISOR_BOUND {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
        if d > 1 << 20 {
            return None;
        }
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// Rational roots of `p` by the rational root theorem. Returns `None` when the
/// integer coefficients are too large to enumerate divisors.
pub(crate) fn rational_roots(p: &Poly) -> Option<Vec<Rat>> {
    let p = trim(p.clone());
    if p.len() <= 1 {
        return Some(Vec::new());
    }
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut roots = Vec::new();
    let z = ints.iter().take_while(|c| c.is_zero()).count();
    if z > 0 {
        roots.push(Rat::zero());
    }
    let ints = &ints[z..];
    if ints.len() <= 1 {
        return Some(roots);
    }
    let num = divisors(&ints[0])?;
    let den = divisors(ints.last().unwrap())?;
    let rest: Poly = p[z..].to_vec();
    for &a in &num {
        for &b in &den {
            let a_big = BigInt::from(a);
            let b_big = BigInt::from(b);
            if a_big.gcd(&b_big) != BigInt::one() {
                continue;
            }
            for sign in [1i64, -1] {
                let x = Rat::from_big(&a_big * BigInt::from(sign), b_big.clone());
                if eval(&rest, &x).is_zero() && !roots.contains(&x) {
                    roots.push(x);
                }
            }
        }
    }
    Some(roots)
}
