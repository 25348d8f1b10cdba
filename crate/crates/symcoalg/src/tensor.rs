//! Three-index structure-constant tables.
//!
//! Comultiplications, multiplications and coactions are all carried as
//! dense rank-3 grids of exact scalars; desk-scale dimensions keep this
//! cheap and simple.

use crate::field::Field;
use crate::matrix::Matrix;

/// Dense d0×d1×d2 grid of scalars, indexed `[i][j][k]`.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor3<F: Field> {
    d0: usize,
    d1: usize,
    d2: usize,
    data: Vec<F>,
}

impl<F: Field> Tensor3<F> {
    pub fn zeros(d0: usize, d1: usize, d2: usize) -> Self {
        Tensor3 {
            d0,
            d1,
            d2,
            data: vec![F::zero(); d0 * d1 * d2],
        }
    }

    pub fn from_triples(
        d0: usize,
        d1: usize,
        d2: usize,
        triples: &[(usize, usize, usize, F)],
    ) -> Self {
        let mut t: Tensor3<F> = Tensor3::zeros(d0, d1, d2);
        for (i, j, k, v) in triples {
            let cur = t.at(*i, *j, *k).clone();
            t.set(*i, *j, *k, cur + v);
        }
        t
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.d0, self.d1, self.d2)
    }

    pub fn at(&self, i: usize, j: usize, k: usize) -> &F {
        debug_assert!(i < self.d0 && j < self.d1 && k < self.d2);
        &self.data[(i * self.d1 + j) * self.d2 + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: F) {
        debug_assert!(i < self.d0 && j < self.d1 && k < self.d2);
        self.data[(i * self.d1 + j) * self.d2 + k] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, k: usize, v: F) {
        let cur = self.at(i, j, k).clone();
        self.set(i, j, k, cur + &v);
    }

    pub fn iter_nonzero(&self) -> impl Iterator<Item = (usize, usize, usize, &F)> {
        let (d1, d2) = (self.d1, self.d2);
        self.data.iter().enumerate().filter_map(move |(idx, v)| {
            if v.is_zero() {
                None
            } else {
                let k = idx % d2;
                let j = (idx / d2) % d1;
                let i = idx / (d1 * d2);
                Some((i, j, k, v))
            }
        })
    }

    /// Contracts the first index with a coordinate vector, yielding the
    /// d1×d2 matrix `Σ_i x_i T[i][·][·]`.
    pub fn contract0(&self, x: &[F]) -> Matrix<F> {
        assert_eq!(x.len(), self.d0);
        let mut m: Matrix<F> = Matrix::zeros(self.d1, self.d2);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.d1 {
                for k in 0..self.d2 {
                    let t = self.at(i, j, k);
                    if !t.is_zero() {
                        let cur = m.at(j, k).clone();
                        m.set(j, k, cur + &(xi.clone() * t));
                    }
                }
            }
        }
        m
    }

    /// The d1×d2 slice `T[i][·][·]` as a matrix.
    pub fn slice0(&self, i: usize) -> Matrix<F> {
        Matrix::from_fn(self.d1, self.d2, |j, k| self.at(i, j, k).clone())
    }
}

impl<F: Field> std::fmt::Debug for Tensor3<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tensor3 {}x{}x{} {{", self.d0, self.d1, self.d2)?;
        for (i, j, k, v) in self.iter_nonzero() {
            write!(f, " [{i},{j},{k}]={v}")?;
        }
        write!(f, " }}")
    }
}
