//! The ring structure transferred onto a co-Frobenius coalgebra.
//!
//! A Frobenius certificate pulls the convolution product of C* back to C
//! through α: x∘y = α⁻¹(α(x)α(y)) = Σ α(x)(y₂)y₁, and through β:
//! x⊙y = Σ α(x₁)(y)x₂. The two multiplications coincide, (C,∘) is
//! associative with two-sided identity e = α⁻¹(ε) (finite dimension
//! turns the local units into a genuine unit), and the multiplication is
//! a morphism of (C*,C*)-bimodules. Under ∘, left/right ideals match
//! right/left coideals — note the side swap.

use std::fmt;

use crate::coalgebra::{Coalgebra, CoidealSide};
use crate::field::Field;
use crate::frobenius::FrobeniusCertificate;
use crate::subspace::Subspace;
use crate::tensor::Tensor3;

/// (C,∘) for a fixed certificate: cached multiplication table and the
/// identity element.
#[derive(Clone)]
pub struct TransferredRing<F: Field> {
    /// `mult[i][j][k]`: coefficient of c_k in cᵢ∘cⱼ.
    mult: Tensor3<F>,
    identity: Vec<F>,
}

/// Builds (C,∘) from the α-formula cᵢ∘cⱼ = Σ_{a,k} `μ[j][a][k]`·`M[k][i]`·c_a.
pub fn build_ring<F: Field>(
    c: &Coalgebra<F>,
    cert: &FrobeniusCertificate<F>,
) -> TransferredRing<F> {
    let n = c.dim();
    let mut mult = Tensor3::zeros(n, n, n);
    for i in 0..n {
        for (j, a, k, v) in c.delta().iter_nonzero() {
            let m = cert.alpha().at(k, i);
            if !m.is_zero() {
                mult.add_at(i, j, a, v.clone() * m);
            }
        }
    }
    TransferredRing {
        mult,
        identity: cert.identity().to_vec(),
    }
}

/// The β-route table x⊙y = Σ α(x₁)(y)x₂, i.e. cᵢ⊙cⱼ has c_k-coefficient
/// Σ_a `μ[i][a][k]`·`M[j][a]`. Recomputed independently so tests can assert
/// it equals the α-route.
pub fn build_mult_beta<F: Field>(c: &Coalgebra<F>, cert: &FrobeniusCertificate<F>) -> Tensor3<F> {
    let n = c.dim();
    let mut mult = Tensor3::zeros(n, n, n);
    for j in 0..n {
        for (i, a, k, v) in c.delta().iter_nonzero() {
            let m = cert.alpha().at(j, a);
            if !m.is_zero() {
                mult.add_at(i, j, k, v.clone() * m);
            }
        }
    }
    mult
}

impl<F: Field> TransferredRing<F> {
    pub fn dim(&self) -> usize {
        self.mult.dims().0
    }

    pub fn mult_table(&self) -> &Tensor3<F> {
        &self.mult
    }

    pub fn identity(&self) -> &[F] {
        &self.identity
    }

    /// x∘y for coordinate vectors.
    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out = vec![F::zero(); n];
        for (i, j, k, v) in self.mult.iter_nonzero() {
            if x[i].is_zero() || y[j].is_zero() {
                continue;
            }
            out[k] = out[k].clone() + &(x[i].clone() * v * &y[j]);
        }
        out
    }

    /// Associativity and identity violations on basis elements; empty for
    /// a ring built from a genuine certificate.
    pub fn ring_violations(&self) -> Vec<String> {
        let n = self.dim();
        let mut out = Vec::new();
        let basis = |i: usize| {
            let mut v = vec![F::zero(); n];
            v[i] = F::one();
            v
        };
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(&basis(a), &basis(b));
                for c in 0..n {
                    if self.mul(&ab, &basis(c))
                        != self.mul(&basis(a), &self.mul(&basis(b), &basis(c)))
                    {
                        out.push(format!("associativity fails at ({a},{b},{c})"));
                    }
                }
            }
        }
        for a in 0..n {
            let e = basis(a);
            if self.mul(&self.identity, &e) != e {
                out.push(format!("left identity fails at {a}"));
            }
            if self.mul(&e, &self.identity) != e {
                out.push(format!("right identity fails at {a}"));
            }
        }
        out
    }

    /// Corrupted copy for negative controls in tests.
    pub fn with_entry(&self, i: usize, j: usize, k: usize, v: F) -> Self {
        let mut r = self.clone();
        r.mult.set(i, j, k, v);
        r
    }
}

impl<F: Field> fmt::Debug for TransferredRing<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "TransferredRing {:?} identity {:?}",
            self.mult, self.identity
        )
    }
}

/// One violated instance of the bimodule law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleViolation {
    pub law: &'static str,
    pub triple: (usize, usize, usize),
}

/// Checks that ∘ is a morphism of (C*,C*)-bimodules on all basis
/// triples: (c*·x)∘y = c*·(x∘y) and x∘(y·c*) = (x∘y)·c*. For a
/// symmetric form additionally (x·c*)∘y = x∘(c*·y).
pub fn bimodule_law_check<F: Field>(
    c: &Coalgebra<F>,
    ring: &TransferredRing<F>,
    check_symmetric_law: bool,
) -> Vec<BimoduleViolation> {
    let n = c.dim();
    let mut out = Vec::new();
    for l in 0..n {
        let f = c.basis_vector(l);
        for i in 0..n {
            let x = c.basis_vector(i);
            let fx = c.hit_left(&f, &x);
            let xf = c.hit_right(&x, &f);
            for j in 0..n {
                let y = c.basis_vector(j);
                let xy = ring.mul(&x, &y);
                if ring.mul(&fx, &y) != c.hit_left(&f, &xy) {
                    out.push(BimoduleViolation {
                        law: "(c*.x)oy = c*.(xoy)",
                        triple: (l, i, j),
                    });
                }
                if ring.mul(&x, &c.hit_right(&y, &f)) != c.hit_right(&xy, &f) {
                    out.push(BimoduleViolation {
                        law: "xo(y.c*) = (xoy).c*",
                        triple: (l, i, j),
                    });
                }
                if check_symmetric_law && ring.mul(&xf, &y) != ring.mul(&x, &c.hit_left(&f, &y)) {
                    out.push(BimoduleViolation {
                        law: "(x.c*)oy = xo(c*.y)",
                        triple: (l, i, j),
                    });
                }
            }
        }
    }
    out
}

/// Ideal and coideal predicates of one subspace, with the equivalence of
/// the side-swapped pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealCoidealReport {
    pub left_ideal: bool,
    pub right_ideal: bool,
    pub left_coideal: bool,
    pub right_coideal: bool,
}

impl IdealCoidealReport {
    /// Left ideal ⟺ right coideal, right ideal ⟺ left coideal.
    pub fn equivalence_holds(&self) -> bool {
        self.left_ideal == self.right_coideal && self.right_ideal == self.left_coideal
    }
}

pub fn is_left_ideal<F: Field>(ring: &TransferredRing<F>, s: &Subspace<F>) -> bool {
    let n = ring.dim();
    assert_eq!(s.ambient_dim(), n);
    s.basis_vectors().all(|w| {
        (0..n).all(|i| {
            let mut basis = vec![F::zero(); n];
            basis[i] = F::one();
            s.contains(&ring.mul(&basis, w))
        })
    })
}

pub fn is_right_ideal<F: Field>(ring: &TransferredRing<F>, s: &Subspace<F>) -> bool {
    let n = ring.dim();
    assert_eq!(s.ambient_dim(), n);
    s.basis_vectors().all(|w| {
        (0..n).all(|i| {
            let mut basis = vec![F::zero(); n];
            basis[i] = F::one();
            s.contains(&ring.mul(w, &basis))
        })
    })
}

/// Computes all four predicates for `s`; the report's `equivalence_holds`
/// is the side-swapped ideal/coideal correspondence.
pub fn ideal_coideal_check<F: Field>(
    c: &Coalgebra<F>,
    ring: &TransferredRing<F>,
    s: &Subspace<F>,
) -> IdealCoidealReport {
    IdealCoidealReport {
        left_ideal: is_left_ideal(ring, s),
        right_ideal: is_right_ideal(ring, s),
        left_coideal: c.is_coideal(s, CoidealSide::Left),
        right_coideal: c.is_coideal(s, CoidealSide::Right),
    }
}
