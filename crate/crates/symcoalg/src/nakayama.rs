//! The Nakayama automorphism of a co-Frobenius coalgebra.
//!
//! For a nondegenerate balanced form with maps α, β there is a unique
//! σ with α(x) = β(σ(x)); in Gram terms S = (Mᵀ)⁻¹·M. σ is a ring
//! automorphism of (C,∘), is the identity exactly when the form is
//! symmetric, and is inner (σ(x) = u⁻¹·x·u for an invertible u ∈ C*)
//! exactly when the coalgebra is symmetric. Two forms on the same
//! coalgebra have conjugate automorphisms: σ'(y) = σ(u⁻¹·y·u) where
//! B'(x,y) = B(x, y·u).

use thiserror::Error;

use crate::coalgebra::Coalgebra;
use crate::field::Field;
use crate::frobenius::FrobeniusCertificate;
use crate::matrix::Matrix;
use crate::search;
use crate::subspace::Subspace;

/// σ and its inverse for one certificate.
#[derive(Clone, Debug)]
pub struct NakayamaAuto<F: Field> {
    sigma: Matrix<F>,
    sigma_inv: Matrix<F>,
}

impl<F: Field> NakayamaAuto<F> {
    pub fn sigma(&self) -> &Matrix<F> {
        &self.sigma
    }

    pub fn sigma_inv(&self) -> &Matrix<F> {
        &self.sigma_inv
    }

    pub fn apply(&self, x: &[F]) -> Vec<F> {
        self.sigma.apply(x)
    }

    pub fn is_identity(&self) -> bool {
        self.sigma == Matrix::identity(self.sigma.nrows())
    }
}

/// Solves α(x) = β(σ(x)) for σ. Nondegeneracy of the form guarantees
/// solvability and bijectivity.
pub fn nakayama<F: Field>(cert: &FrobeniusCertificate<F>) -> NakayamaAuto<F> {
    let sigma = cert
        .beta()
        .solve(cert.alpha())
        .expect("square system")
        .expect("beta is invertible");
    let sigma_inv = sigma
        .inverse()
        .expect("square")
        .expect("sigma is a bijection");
    NakayamaAuto { sigma, sigma_inv }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompareFormsError {
    #[error("the two certificates live on coalgebras of different dimension")]
    DimensionMismatch,
    #[error("no intertwining dual element exists (forms not related by a module map)")]
    NoIntertwiner,
    #[error("conjugation law fails at basis index {0}")]
    ConjugationFails(usize),
}

/// The comparison datum of two nondegenerate balanced forms on one
/// coalgebra: the invertible u ∈ C* with B'(x,y) = B(x, y·u).
#[derive(Clone, Debug)]
pub struct FormComparison<F: Field> {
    pub u: Vec<F>,
    pub u_inv: Vec<F>,
}

/// Computes u ∈ U(C*) with (α⁻¹∘α')(x) = x·u, so B'(x,y) = B(x, y·u),
/// and verifies the conjugation law σ'(y) = σ(u⁻¹·y·u) on every basis
/// element.
pub fn compare_forms<F: Field>(
    c: &Coalgebra<F>,
    cert: &FrobeniusCertificate<F>,
    cert2: &FrobeniusCertificate<F>,
) -> Result<FormComparison<F>, CompareFormsError> {
    let n = c.dim();
    if cert.alpha().nrows() != n || cert2.alpha().nrows() != n {
        return Err(CompareFormsError::DimensionMismatch);
    }
    // f = α⁻¹ ∘ α' is a left C*-module automorphism of C, hence a right
    // translation x ↦ x·u; u = ε∘f recovers it.
    let f = cert
        .alpha()
        .solve(cert2.alpha())
        .expect("square system")
        .expect("alpha invertible");
    let u = counit_compose(c, &f);
    // check f(x) = x·u on the basis
    for i in 0..n {
        let x = c.basis_vector(i);
        if c.hit_right(&x, &u) != f.col(i) {
            return Err(CompareFormsError::NoIntertwiner);
        }
    }
    let u_inv = c
        .convolution_inverse(&u)
        .ok_or(CompareFormsError::NoIntertwiner)?;
    // conjugation law
    let sigma = nakayama(cert);
    let sigma2 = nakayama(cert2);
    for i in 0..n {
        let y = c.basis_vector(i);
        let conj = c.hit_right(&c.hit_left(&u_inv, &y), &u);
        if sigma2.apply(&y) != sigma.apply(&conj) {
            return Err(CompareFormsError::ConjugationFails(i));
        }
    }
    Ok(FormComparison { u, u_inv })
}

/// ε∘f as a dual vector: u_l = Σ_k ε_k `f[k][l]`.
pub fn counit_compose<F: Field>(c: &Coalgebra<F>, f: &Matrix<F>) -> Vec<F> {
    let n = c.dim();
    (0..n)
        .map(|l| {
            let mut acc = F::zero();
            for k in 0..n {
                let e = &c.counit()[k];
                if !e.is_zero() {
                    acc = acc + &(e.clone() * f.at(k, l));
                }
            }
            acc
        })
        .collect()
}

/// Solution space of the linear system u·φ(x) = x·u over u ∈ C*, the
/// candidates for conjugating φ to the identity.
pub fn conjugating_unit_space<F: Field>(c: &Coalgebra<F>, phi: &Matrix<F>) -> Subspace<F> {
    let n = c.dim();
    assert_eq!(phi.nrows(), n);
    // coefficient of c_j in e_l·φ(cᵢ) − cᵢ·e_l, as a function of l
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut row = vec![F::zero(); n];
            let mut nonzero = false;
            for (l, item) in row.iter_mut().enumerate() {
                let mut acc = F::zero();
                for k in 0..n {
                    let s = phi.at(k, i);
                    if !s.is_zero() {
                        let d = c.delta().at(k, j, l);
                        if !d.is_zero() {
                            acc = acc + &(s.clone() * d);
                        }
                    }
                }
                acc = acc - c.delta().at(i, l, j);
                if !acc.is_zero() {
                    nonzero = true;
                }
                *item = acc;
            }
            if nonzero {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Subspace::full(n);
    }
    Subspace::span(n, Matrix::from_rows(rows).kernel_basis())
}

/// Certified search for an invertible element of C* inside a subspace;
/// invertibility is nonsingularity of the left-convolution matrix.
pub fn find_invertible_dual<F: Field>(
    c: &Coalgebra<F>,
    space: &Subspace<F>,
    seed: u64,
) -> Option<Vec<F>> {
    let mats: Vec<Matrix<F>> = space
        .basis_vectors()
        .map(|u| c.left_convolution_matrix(u))
        .collect();
    let w = search::find_nonsingular(&mats, seed)?;
    Some(combine_basis(space, &w.coefficients))
}

/// Grid-only variant for determinism cross-checks.
pub fn find_invertible_dual_grid<F: Field>(
    c: &Coalgebra<F>,
    space: &Subspace<F>,
) -> Option<Vec<F>> {
    let mats: Vec<Matrix<F>> = space
        .basis_vectors()
        .map(|u| c.left_convolution_matrix(u))
        .collect();
    let w = search::find_nonsingular_grid(&mats)?;
    Some(combine_basis(space, &w.coefficients))
}

fn combine_basis<F: Field>(space: &Subspace<F>, coefficients: &[i64]) -> Vec<F> {
    let n = space.ambient_dim();
    let mut out = vec![F::zero(); n];
    for (b, &t) in space.basis_vectors().zip(coefficients) {
        if t == 0 {
            continue;
        }
        let tf = F::from_int(t);
        for (j, v) in b.iter().enumerate() {
            if !v.is_zero() {
                out[j] = out[j].clone() + &(tf.clone() * v);
            }
        }
    }
    out
}

/// Decides whether σ is inner: finds invertible u ∈ C* with
/// σ(x) = u⁻¹·x·u (linearized as u·σ(x) = x·u), or certifies absence.
/// Presence is equivalent to the coalgebra being symmetric.
pub fn is_inner<F: Field>(c: &Coalgebra<F>, na: &NakayamaAuto<F>, seed: u64) -> Option<Vec<F>> {
    let space = conjugating_unit_space(c, na.sigma());
    find_invertible_dual(c, &space, seed)
}
