//! Subspaces of a based vector space in canonical form.
//!
//! A subspace is held as a reduced row-echelon basis matrix, one basis
//! vector per row, so subspace equality is plain matrix equality. These
//! carry coideals, ideals and wedge subspaces.

use thiserror::Error;

use crate::field::Field;
use crate::matrix::Matrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("ambient dimension mismatch: {0} vs {1}")]
pub struct AmbientMismatch(pub usize, pub usize);

/// A subspace of k^ambient with canonical (rref) basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Matrix<F>,
}

impl<F: Field> Subspace<F> {
    /// Subspace spanned by the given vectors; the basis is canonicalized.
    pub fn span(ambient: usize, vectors: Vec<Vec<F>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient, "vector length must match ambient");
        }
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        let (r, pivots) = Matrix::from_rows(vectors).rref();
        let basis = Matrix::from_rows((0..pivots.len()).map(|i| r.row(i).to_vec()).collect());
        Subspace {
            ambient,
            basis: if pivots.is_empty() {
                Matrix::zeros(0, ambient)
            } else {
                basis
            },
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    pub fn line(v: Vec<F>) -> Self {
        let ambient = v.len();
        Subspace::span(ambient, vec![v])
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis matrix, one vector per row.
    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[F]> {
        self.basis.rows_iter()
    }

    /// Reduces `v` against the basis; the remainder is zero iff `v` lies
    /// in the subspace.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.ambient);
        let mut v = v.to_vec();
        for row in self.basis.rows_iter() {
            let pivot = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("basis rows are nonzero");
            if v[pivot].is_zero() {
                continue;
            }
            let c = v[pivot].clone();
            for (j, r) in row.iter().enumerate() {
                if !r.is_zero() {
                    v[j] = v[j].clone() - &(c.clone() * r);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn contains_subspace(&self, other: &Self) -> Result<bool, AmbientMismatch> {
        self.check_ambient(other)?;
        Ok(other.basis_vectors().all(|v| self.contains(v)))
    }

    pub fn sum(&self, other: &Self) -> Result<Self, AmbientMismatch> {
        self.check_ambient(other)?;
        let mut rows: Vec<Vec<F>> = self.basis_vectors().map(|r| r.to_vec()).collect();
        rows.extend(other.basis_vectors().map(|r| r.to_vec()));
        Ok(Subspace::span(self.ambient, rows))
    }

    /// Intersection via the kernel of the stacked coefficient system:
    /// x = uᵀA = vᵀB forces [Aᵀ | −Bᵀ]·(u,v) = 0.
    pub fn intersect(&self, other: &Self) -> Result<Self, AmbientMismatch> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let at = self.basis.transpose();
        let bt = other.basis.transpose().scale(&-F::one());
        let stacked = at.hstack(&bt);
        let p = self.dim();
        let mut rows = Vec::new();
        for k in stacked.kernel_basis() {
            let u = &k[..p];
            let mut x = vec![F::zero(); self.ambient];
            for (i, ui) in u.iter().enumerate() {
                if ui.is_zero() {
                    continue;
                }
                for (j, a) in self.basis.row(i).iter().enumerate() {
                    if !a.is_zero() {
                        x[j] = x[j].clone() + &(ui.clone() * a);
                    }
                }
            }
            rows.push(x);
        }
        Ok(Subspace::span(self.ambient, rows))
    }

    /// Rows `t` with `t · v = 0` for every `v` in the subspace, i.e. a
    /// defining constraint system: `v ∈ S ⟺ constraints · v = 0`.
    pub fn constraints(&self) -> Matrix<F> {
        let rows = self.basis.kernel_basis();
        if rows.is_empty() {
            Matrix::zeros(0, self.ambient)
        } else {
            Matrix::from_rows(rows)
        }
    }

    fn check_ambient(&self, other: &Self) -> Result<(), AmbientMismatch> {
        if self.ambient != other.ambient {
            Err(AmbientMismatch(self.ambient, other.ambient))
        } else {
            Ok(())
        }
    }
}

impl<F: Field> std::fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subspace(dim {} of {}) {:?}",
            self.dim(),
            self.ambient,
            self.basis
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, Rational};
    use num::Zero;

    fn vecs(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&n| rat(n)).collect())
            .collect()
    }

    #[test]
    fn sum_of_axes_is_full_plane() {
        let e0 = Subspace::span(2, vecs(&[&[1, 0]]));
        let e1 = Subspace::span(2, vecs(&[&[0, 1]]));
        assert_eq!(e0.sum(&e1).unwrap(), Subspace::full(2));
    }

    #[test]
    fn intersection_with_itself() {
        let s = Subspace::span(3, vecs(&[&[1, 2, 0], &[0, 0, 1]]));
        assert_eq!(s.intersect(&s).unwrap(), s);
    }

    #[test]
    fn full_space_contains_everything() {
        let full = Subspace::<Rational>::full(3);
        assert!(full.contains(&[rat(7), rat(-2), rat(9)]));
        let z = Subspace::zero(3);
        assert!(full.contains_subspace(&z).unwrap());
        assert!(!z.contains(&[rat(1), rat(0), rat(0)]));
    }

    #[test]
    fn canonical_form_is_order_independent() {
        let a = Subspace::span(3, vecs(&[&[1, 1, 0], &[0, 1, 1]]));
        let b = Subspace::span(3, vecs(&[&[0, 2, 2], &[1, 2, 1]]));
        assert_eq!(a, b);
    }

    #[test]
    fn intersection_of_planes_in_3d() {
        let a = Subspace::span(3, vecs(&[&[1, 0, 0], &[0, 1, 0]]));
        let b = Subspace::span(3, vecs(&[&[0, 1, 0], &[0, 0, 1]]));
        let i = a.intersect(&b).unwrap();
        assert_eq!(i, Subspace::span(3, vecs(&[&[0, 1, 0]])));
    }

    #[test]
    fn constraints_define_the_subspace() {
        let s = Subspace::span(4, vecs(&[&[1, 2, 0, 1], &[0, 0, 1, -1]]));
        let k = s.constraints();
        assert_eq!(k.nrows(), 2);
        for v in s.basis_vectors() {
            assert!(k.apply(v).iter().all(|x| x.is_zero()));
        }
        assert!(!k
            .apply(&[rat(1), rat(0), rat(0), rat(0)])
            .iter()
            .all(|x| x.is_zero()));
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::<Rational>::full(2);
        let b = Subspace::<Rational>::full(3);
        assert!(a.sum(&b).is_err());
        assert!(a.intersect(&b).is_err());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn subspace(ambient: usize, rows: usize) -> impl Strategy<Value = Subspace<Rational>> {
            prop::collection::vec(-3i64..=3, ambient * rows).prop_map(move |v| {
                Subspace::span(
                    ambient,
                    v.chunks(ambient)
                        .map(|r| r.iter().map(|&n| rat(n)).collect())
                        .collect(),
                )
            })
        }

        proptest! {
            #[test]
            fn dimension_formula(a in subspace(5, 3), b in subspace(5, 3)) {
                let sum = a.sum(&b).unwrap();
                let meet = a.intersect(&b).unwrap();
                prop_assert_eq!(sum.dim() + meet.dim(), a.dim() + b.dim());
                prop_assert!(sum.contains_subspace(&a).unwrap());
                prop_assert!(a.contains_subspace(&meet).unwrap());
            }

            #[test]
            fn constraints_cut_out_the_subspace(a in subspace(4, 2)) {
                let k = a.constraints();
                prop_assert_eq!(k.nrows() + a.dim(), 4);
                for v in a.basis_vectors() {
                    prop_assert!(k.apply(v).iter().all(|x| x.is_zero()));
                }
            }
        }
    }
}
