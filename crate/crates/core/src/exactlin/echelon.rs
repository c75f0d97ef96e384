use super::mat::{is_zero_vec, Mat};
use super::{Rat, Subspace};

/// Incrementally grown semi-echelon basis.
///
/// Each stored row is normalized at its pivot and vanishes on the pivots of
/// all earlier rows, so reducing a vector in insertion order is exact.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    ambient: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(ambient: usize) -> Self {
        EchelonBasis {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        debug_assert_eq!(v.len(), self.ambient);
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (o, b) in out.iter_mut().zip(row) {
                if !b.is_zero() {
                    *o -= &f * b;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Inserts `v`; returns `false` when it was already in the span.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    pub fn into_subspace(self) -> Subspace {
        let m = Mat::from_rows_with_cols(self.rows, self.ambient).expect("row length");
        Subspace::from_mat(m)
    }
}
