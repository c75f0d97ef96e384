use super::mat::{is_zero_vec, Mat};
use super::{LinError, Rat};

/// A linear subspace of `Q^n`, stored as the reduced row-echelon basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_vectors<I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Rat>>,
    {
        let rows: Vec<Vec<Rat>> = vectors.into_iter().filter(|v| !is_zero_vec(v)).collect();
        let m = Mat::from_rows_with_cols(rows, ambient).expect("vector length != ambient dimension");
        Self::from_mat(m)
    }

    pub fn from_mat(mut m: Mat) -> Self {
        let ambient = m.cols();
        let pivots = m.rref_in_place();
        let keep: Vec<usize> = (0..pivots.len()).collect();
        Subspace {
            ambient,
            basis: m.select_rows(&keep),
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.pivots.len() == self.ambient
    }

    /// Basis rows in reduced row-echelon form.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rat>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Standard coordinates not used as pivots; their unit vectors span a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    /// Canonical representative of `v` modulo the subspace (zero on every pivot).
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ambient, "vector length != ambient dimension");
        let mut out = v.to_vec();
        for (k, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (o, b) in out.iter_mut().zip(self.basis.row(k)) {
                if !b.is_zero() {
                    *o -= &f * b;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rat]) -> Result<bool, LinError> {
        if v.len() != self.ambient {
            return Err(LinError::AmbientMismatch(self.ambient, v.len()));
        }
        Ok(self.contains_vec(v))
    }

    pub fn contains_vec(&self, v: &[Rat]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Coefficients of `v` in the echelon basis, `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        if !self.contains_vec(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && (0..self.dim()).all(|k| other.contains_vec(self.basis.row(k)))
    }

    fn check(&self, other: &Subspace) -> Result<(), LinError> {
        if self.ambient != other.ambient {
            Err(LinError::AmbientMismatch(self.ambient, other.ambient))
        } else {
            Ok(())
        }
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinError> {
        self.check(other)?;
        Ok(Subspace::from_mat(Mat::vstack(self.ambient, &[&self.basis, &other.basis])))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let stacked = Mat::vstack(self.ambient, &[&self.basis, &other.basis]);
        let k = stacked.left_kernel();
        let d = self.dim();
        let vecs = k.basis_vectors().into_iter().map(|x| self.basis.apply(&x[..d]));
        Ok(Subspace::from_vectors(self.ambient, vecs))
    }

    /// Adds vectors to the span.
    pub fn extended<I>(&self, vectors: I) -> Subspace
    where
        I: IntoIterator<Item = Vec<Rat>>,
    {
        let extra: Vec<Vec<Rat>> = vectors.into_iter().collect();
        let extra = Mat::from_rows_with_cols(extra, self.ambient).expect("vector length != ambient dimension");
        Subspace::from_mat(Mat::vstack(self.ambient, &[&self.basis, &extra]))
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} in {}, {:?})", self.dim(), self.ambient, self.basis)
    }
}
