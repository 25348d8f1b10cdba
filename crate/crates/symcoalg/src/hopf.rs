//! Finite-dimensional Hopf algebras: integrals, unimodularity in both
//! senses, the antipode square, and the symmetric-coalgebra criterion.
//!
//! Unimodularity is computed in two distinct senses and never conflated:
//! *on H* means the left/right integral lines in H* coincide; *in H*
//! means the left/right integral lines in H coincide. The coalgebra of H
//! is symmetric iff H is unimodular **on** H and S² is conjugation by an
//! invertible u ∈ H*; H is symmetric as an algebra iff H is unimodular
//! **in** H and S² is inner in H.
//!
//! The wedge X∧Y = Δ⁻¹(X⊗C + C⊗Y) and its iterates live here too: for a
//! finite-dimensional subcoalgebra A the tower ∧ⁿA stabilizes, and
//! H∞ = (k·1)∞ is a Hopf subalgebra.

use std::fmt;

use thiserror::Error;

use crate::coalgebra::{subspace_coordinates, Coalgebra};
use crate::field::Field;
use crate::frobenius::{BilinearForm, CertificateError, FrobeniusCertificate};
use crate::matrix::Matrix;
use crate::nakayama::{conjugating_unit_space, find_invertible_dual};
use crate::search;
use crate::subspace::Subspace;
use crate::tensor::Tensor3;

/// A Hopf algebra: a coalgebra plus multiplication (`mult[i][j][k]` the
/// c_k-coefficient of cᵢcⱼ), unit element and antipode matrix.
#[derive(Clone)]
pub struct HopfAlgebra<F: Field> {
    coalgebra: Coalgebra<F>,
    mult: Tensor3<F>,
    unit: Vec<F>,
    antipode: Matrix<F>,
}

impl<F: Field> HopfAlgebra<F> {
    pub fn new(
        coalgebra: Coalgebra<F>,
        mult: Tensor3<F>,
        unit: Vec<F>,
        antipode: Matrix<F>,
    ) -> Self {
        let n = coalgebra.dim();
        assert_eq!(mult.dims(), (n, n, n));
        assert_eq!(unit.len(), n);
        assert_eq!((antipode.nrows(), antipode.ncols()), (n, n));
        HopfAlgebra {
            coalgebra,
            mult,
            unit,
            antipode,
        }
    }

    pub fn coalgebra(&self) -> &Coalgebra<F> {
        &self.coalgebra
    }

    pub fn name(&self) -> &str {
        self.coalgebra.name()
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim()
    }

    pub fn mult(&self) -> &Tensor3<F> {
        &self.mult
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn antipode(&self) -> &Matrix<F> {
        &self.antipode
    }

    pub fn s2(&self) -> Matrix<F> {
        self.antipode.mul(&self.antipode)
    }

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

    /// Matrix of left multiplication x ↦ g·x; nonsingular iff g ∈ U(H).
    pub fn left_mult_matrix(&self, g: &[F]) -> Matrix<F> {
        let n = self.dim();
        let mut m: Matrix<F> = Matrix::zeros(n, n);
        for (a, j, k, v) in self.mult.iter_nonzero() {
            if g[a].is_zero() {
                continue;
            }
            let cur = m.at(k, j).clone();
            m.set(k, j, cur + &(g[a].clone() * v));
        }
        m
    }

    /// All Hopf axioms: underlying coalgebra, associative unital algebra,
    /// Δ and ε algebra maps, grouplike unit, antipode law.
    pub fn validate(&self) -> Vec<String> {
        let n = self.dim();
        let mut out: Vec<String> = self
            .coalgebra
            .validate()
            .violations
            .iter()
            .map(|v| v.to_string())
            .collect();
        let basis = |i: usize| self.coalgebra.basis_vector(i);
        // associativity + unit
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(&basis(a), &basis(b));
                for c in 0..n {
                    if self.mul(&ab, &basis(c))
                        != self.mul(&basis(a), &self.mul(&basis(b), &basis(c)))
                    {
                        out.push(format!("multiplication not associative at ({a},{b},{c})"));
                    }
                }
            }
        }
        for a in 0..n {
            let e = basis(a);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                out.push(format!("unit law fails at {a}"));
            }
        }
        // Δ is an algebra map
        let delta = self.coalgebra.delta();
        for i in 0..n {
            for j in 0..n {
                let mut lhs: Matrix<F> = Matrix::zeros(n, n);
                for k in 0..n {
                    let v = self.mult.at(i, j, k);
                    if v.is_zero() {
                        continue;
                    }
                    for (kk, p, q, w) in delta.iter_nonzero() {
                        if kk == k {
                            let cur = lhs.at(p, q).clone();
                            lhs.set(p, q, cur + &(v.clone() * w));
                        }
                    }
                }
                let mut rhs: Matrix<F> = Matrix::zeros(n, n);
                for (ii, a, b, v) in delta.iter_nonzero() {
                    if ii != i {
                        continue;
                    }
                    for (jj, c, d, w) in delta.iter_nonzero() {
                        if jj != j {
                            continue;
                        }
                        for p in 0..n {
                            let m1 = self.mult.at(a, c, p);
                            if m1.is_zero() {
                                continue;
                            }
                            for q in 0..n {
                                let m2 = self.mult.at(b, d, q);
                                if m2.is_zero() {
                                    continue;
                                }
                                let cur = rhs.at(p, q).clone();
                                rhs.set(p, q, cur + &(v.clone() * w * &(m1.clone() * m2)));
                            }
                        }
                    }
                }
                if lhs != rhs {
                    out.push(format!("Delta is not multiplicative at ({i},{j})"));
                }
                // ε multiplicative
                let prod = self.mul(&basis(i), &basis(j));
                let eps_prod = self.coalgebra.counit_of(&prod);
                let expected = self.coalgebra.counit()[i].clone() * &self.coalgebra.counit()[j];
                if eps_prod != expected {
                    out.push(format!("counit is not multiplicative at ({i},{j})"));
                }
            }
        }
        // unit is grouplike
        let unit_grid = self.coalgebra.delta_of(&self.unit);
        let expected = Matrix::from_fn(n, n, |p, q| self.unit[p].clone() * &self.unit[q]);
        if unit_grid != expected {
            out.push("Delta(1) differs from 1⊗1".into());
        }
        if self.coalgebra.counit_of(&self.unit) != F::one() {
            out.push("epsilon(1) differs from 1".into());
        }
        // antipode law
        for i in 0..n {
            let mut left = vec![F::zero(); n];
            let mut right = vec![F::zero(); n];
            for (ii, j, k, v) in delta.iter_nonzero() {
                if ii != i {
                    continue;
                }
                let sj = self.antipode_of(&basis(j));
                let sk = self.antipode_of(&basis(k));
                let l = self.mul(&sj, &basis(k));
                let r = self.mul(&basis(j), &sk);
                for t in 0..n {
                    left[t] = left[t].clone() + &(v.clone() * &l[t]);
                    right[t] = right[t].clone() + &(v.clone() * &r[t]);
                }
            }
            let expected: Vec<F> = self
                .unit
                .iter()
                .map(|u| self.coalgebra.counit()[i].clone() * u)
                .collect();
            if left != expected {
                out.push(format!("left antipode law fails at {i}"));
            }
            if right != expected {
                out.push(format!("right antipode law fails at {i}"));
            }
        }
        out
    }

    pub fn antipode_of(&self, x: &[F]) -> Vec<F> {
        self.antipode.apply(x)
    }
}

impl<F: Field> fmt::Debug for HopfAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "HopfAlgebra {} (dim {}) mult={:?} unit={:?} antipode={:?}",
            self.name(),
            self.dim(),
            self.mult,
            self.unit.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            self.antipode
        )
    }
}

/// Dual Hopf algebra: comultiplication and multiplication trade places,
/// the antipode transposes.
pub fn dual_hopf<F: Field>(h: &HopfAlgebra<F>) -> HopfAlgebra<F> {
    let n = h.dim();
    let mut delta = Tensor3::zeros(n, n, n);
    for (i, j, k, v) in h.mult().iter_nonzero() {
        // e_k ↦ Σ ν[i][j][k] e_i⊗e_j
        delta.add_at(k, i, j, v.clone());
    }
    let counit = h.unit().to_vec();
    let names: Vec<String> = h
        .coalgebra()
        .basis_names()
        .iter()
        .map(|s| format!("{s}*"))
        .collect();
    let coalgebra = Coalgebra::new(format!("{}*", h.name()), names, delta, counit);
    let mut mult = Tensor3::zeros(n, n, n);
    for (i, j, k, v) in h.coalgebra().delta().iter_nonzero() {
        // e_j·e_k = Σ μ[i][j][k] e_i
        mult.add_at(j, k, i, v.clone());
    }
    let unit = h.coalgebra().counit().to_vec();
    let antipode = h.antipode().transpose();
    HopfAlgebra::new(coalgebra, mult, unit, antipode)
}

/// The four integral lines of a finite-dimensional Hopf algebra and the
/// two unimodularity flags.
#[derive(Clone, Debug)]
pub struct IntegralData<F: Field> {
    /// t ∈ H* with h*t = h*(1)t.
    pub left_on: Subspace<F>,
    /// t ∈ H* with th* = h*(1)t.
    pub right_on: Subspace<F>,
    /// t ∈ H with ht = ε(h)t.
    pub left_in: Subspace<F>,
    /// t ∈ H with th = ε(h)t.
    pub right_in: Subspace<F>,
}

impl<F: Field> IntegralData<F> {
    /// Left and right integral spaces in H* coincide.
    pub fn unimodular_on(&self) -> bool {
        self.left_on == self.right_on
    }

    /// Left and right integral spaces in H coincide.
    pub fn unimodular_in(&self) -> bool {
        self.left_in == self.right_in
    }

    /// A nonzero two-sided integral on H, normalized, when unimodular.
    pub fn two_sided_on(&self) -> Option<Vec<F>> {
        if self.unimodular_on() {
            normalized_line(&self.left_on)
        } else {
            None
        }
    }
}

/// The single normalized vector of a 1-dimensional subspace (first
/// nonzero coordinate 1 — automatic in rref form).
pub fn normalized_line<F: Field>(s: &Subspace<F>) -> Option<Vec<F>> {
    if s.dim() == 1 {
        s.basis_vectors().next().map(|v| v.to_vec())
    } else {
        None
    }
}

/// Solves all four integral systems as kernels of linear systems.
pub fn integrals<F: Field>(h: &HopfAlgebra<F>) -> IntegralData<F> {
    let n = h.dim();
    let delta = h.coalgebra().delta();
    let eps = h.coalgebra().counit();

    // on H, left: Σ_a μ[i][l][a]·t_a = unit_l·t_i  for all (l,i)
    let mut left_on_rows = Vec::new();
    let mut right_on_rows = Vec::new();
    for l in 0..n {
        for i in 0..n {
            let mut row_l = vec![F::zero(); n];
            let mut row_r = vec![F::zero(); n];
            for a in 0..n {
                row_l[a] = delta.at(i, l, a).clone();
                row_r[a] = delta.at(i, a, l).clone();
            }
            row_l[i] = row_l[i].clone() - &h.unit()[l];
            row_r[i] = row_r[i].clone() - &h.unit()[l];
            left_on_rows.push(row_l);
            right_on_rows.push(row_r);
        }
    }
    // in H, left: Σ_a ν[l][a][k]·t_a = ε_l·t_k  for all (l,k)
    let mut left_in_rows = Vec::new();
    let mut right_in_rows = Vec::new();
    for l in 0..n {
        for k in 0..n {
            let mut row_l = vec![F::zero(); n];
            let mut row_r = vec![F::zero(); n];
            for a in 0..n {
                row_l[a] = h.mult().at(l, a, k).clone();
                row_r[a] = h.mult().at(a, l, k).clone();
            }
            row_l[k] = row_l[k].clone() - &eps[l];
            row_r[k] = row_r[k].clone() - &eps[l];
            left_in_rows.push(row_l);
            right_in_rows.push(row_r);
        }
    }
    let kernel = |rows: Vec<Vec<F>>| Subspace::span(n, Matrix::from_rows(rows).kernel_basis());
    IntegralData {
        left_on: kernel(left_on_rows),
        right_on: kernel(right_on_rows),
        left_in: kernel(left_in_rows),
        right_in: kernel(right_in_rows),
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IntegralFormError {
    #[error("integral is zero")]
    ZeroIntegral,
    #[error("form from integral is defective: {0}")]
    Certificate(#[from] CertificateError),
}

/// The bilinear form D(x,y) = t(x·S(y)) of a nonzero integral, wrapped
/// as a Frobenius certificate (it is nondegenerate and H*-balanced).
pub fn form_from_integral<F: Field>(
    h: &HopfAlgebra<F>,
    t: &[F],
) -> Result<FrobeniusCertificate<F>, IntegralFormError> {
    if t.iter().all(|v| v.is_zero()) {
        return Err(IntegralFormError::ZeroIntegral);
    }
    let n = h.dim();
    let gram = Matrix::from_fn(n, n, |i, j| {
        let sj = h.antipode_of(&h.coalgebra().basis_vector(j));
        let prod = h.mul(&h.coalgebra().basis_vector(i), &sj);
        let mut acc = F::zero();
        for (b, tb) in t.iter().enumerate() {
            if !tb.is_zero() {
                acc = acc + &(prod[b].clone() * tb);
            }
        }
        acc
    });
    Ok(FrobeniusCertificate::new(
        h.coalgebra(),
        BilinearForm::new(gram),
    )?)
}

/// Verdict of the symmetric-as-coalgebra test with all witnesses.
#[derive(Clone, Debug)]
pub struct HopfSymmetricVerdict<F: Field> {
    pub unimodular_on: bool,
    /// Invertible u ∈ H* with S²(h) = u⁻¹·h·u, when it exists.
    pub u: Option<Vec<F>>,
    /// The explicit symmetric form B(x,y) = t((u⁻¹·x)·S(y)) when the
    /// verdict is positive.
    pub certificate: Option<FrobeniusCertificate<F>>,
}

impl<F: Field> HopfSymmetricVerdict<F> {
    pub fn symmetric(&self) -> bool {
        self.unimodular_on && self.u.is_some()
    }
}

/// H is symmetric as a coalgebra iff it is unimodular (integrals on H)
/// and S² is conjugation by an invertible element of H*. On a positive
/// verdict the explicit form t((u⁻¹·x)S(y)) is emitted and checked
/// symmetric, nondegenerate and balanced.
pub fn hopf_symmetric_coalgebra<F: Field>(
    h: &HopfAlgebra<F>,
    seed: u64,
) -> HopfSymmetricVerdict<F> {
    let ints = integrals(h);
    let unimodular_on = ints.unimodular_on();
    let space = conjugating_unit_space(h.coalgebra(), &h.s2());
    let u = find_invertible_dual(h.coalgebra(), &space, seed);
    let certificate = match (&u, ints.two_sided_on()) {
        (Some(u), Some(t)) if unimodular_on => {
            let u_inv = h
                .coalgebra()
                .convolution_inverse(u)
                .expect("u is invertible");
            let d = form_from_integral(h, &t).expect("nonzero integral");
            let n = h.dim();
            let gram = Matrix::from_fn(n, n, |i, j| {
                let x = h
                    .coalgebra()
                    .hit_left(&u_inv, &h.coalgebra().basis_vector(i));
                let mut acc = F::zero();
                for (a, xa) in x.iter().enumerate() {
                    if !xa.is_zero() {
                        acc = acc + &(xa.clone() * d.form().gram().at(a, j));
                    }
                }
                acc
            });
            let form = BilinearForm::new(gram);
            assert!(form.is_symmetric(), "emitted form must be symmetric");
            let cert = FrobeniusCertificate::new(h.coalgebra(), form)
                .expect("emitted form is nondegenerate and balanced");
            Some(cert)
        }
        _ => None,
    };
    HopfSymmetricVerdict {
        unimodular_on,
        u,
        certificate,
    }
}

/// Finds invertible g ∈ H with x·g = g·S²(x) for all x (S² inner in H),
/// or certifies absence.
pub fn s2_inner_in_h<F: Field>(h: &HopfAlgebra<F>, seed: u64) -> Option<Vec<F>> {
    let n = h.dim();
    let s2 = h.s2();
    let mut rows = Vec::new();
    for i in 0..n {
        for k in 0..n {
            let mut row = vec![F::zero(); n];
            let mut nonzero = false;
            for (a, item) in row.iter_mut().enumerate() {
                let mut acc = h.mult().at(i, a, k).clone();
                for b in 0..n {
                    let s = s2.at(b, i);
                    if !s.is_zero() {
                        let m = h.mult().at(a, b, k);
                        if !m.is_zero() {
                            acc = acc - &(s.clone() * m);
                        }
                    }
                }
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
    let space = if rows.is_empty() {
        Subspace::full(n)
    } else {
        Subspace::span(n, Matrix::from_rows(rows).kernel_basis())
    };
    let mats: Vec<Matrix<F>> = space
        .basis_vectors()
        .map(|g| h.left_mult_matrix(g))
        .collect();
    let w = search::find_nonsingular(&mats, seed)?;
    let mut g = vec![F::zero(); n];
    for (gb, &t) in space.basis_vectors().zip(&w.coefficients) {
        if t == 0 {
            continue;
        }
        let tf = F::from_int(t);
        for (j, v) in gb.iter().enumerate() {
            if !v.is_zero() {
                g[j] = g[j].clone() + &(tf.clone() * v);
            }
        }
    }
    Some(g)
}

/// Verdict of the symmetric-as-algebra test: unimodular in H and S²
/// inner in H.
#[derive(Clone, Debug)]
pub struct AlgebraSymmetricVerdict<F: Field> {
    pub unimodular_in: bool,
    pub g: Option<Vec<F>>,
}

impl<F: Field> AlgebraSymmetricVerdict<F> {
    pub fn symmetric(&self) -> bool {
        self.unimodular_in && self.g.is_some()
    }
}

pub fn symmetric_as_algebra<F: Field>(h: &HopfAlgebra<F>, seed: u64) -> AlgebraSymmetricVerdict<F> {
    AlgebraSymmetricVerdict {
        unimodular_in: integrals(h).unimodular_in(),
        g: s2_inner_in_h(h, seed),
    }
}

/// The wedge X∧Y = Δ⁻¹(X⊗C + C⊗Y), computed as a kernel through the
/// n²-dimensional tensor square.
pub fn wedge<F: Field>(c: &Coalgebra<F>, x: &Subspace<F>, y: &Subspace<F>) -> Subspace<F> {
    let n = c.dim();
    assert_eq!(x.ambient_dim(), n, "ambient mismatch");
    assert_eq!(y.ambient_dim(), n, "ambient mismatch");
    let mut rows: Vec<Vec<F>> = Vec::new();
    for xv in x.basis_vectors() {
        for b in 0..n {
            let mut v = vec![F::zero(); n * n];
            for (a, xa) in xv.iter().enumerate() {
                if !xa.is_zero() {
                    v[a * n + b] = xa.clone();
                }
            }
            rows.push(v);
        }
    }
    for yv in y.basis_vectors() {
        for a in 0..n {
            let mut v = vec![F::zero(); n * n];
            for (b, yb) in yv.iter().enumerate() {
                if !yb.is_zero() {
                    v[a * n + b] = yb.clone();
                }
            }
            rows.push(v);
        }
    }
    let t = Subspace::span(n * n, rows);
    let constraints = t.constraints();
    let composed = constraints.mul(&c.delta_as_matrix());
    Subspace::span(n, composed.kernel_basis())
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("subspace is not a subcoalgebra")]
pub struct NotSubcoalgebra;

/// A stabilized wedge tower and the number of wedge steps taken.
#[derive(Clone, Debug)]
pub struct WedgeTower<F: Field> {
    pub subspace: Subspace<F>,
    pub steps: usize,
}

/// A∞ = ⋃ₙ ∧ⁿA for a subcoalgebra A: iterate W ← W∧A until stable. The
/// dimensions are bounded by dim C, so this terminates; the result is
/// again a subcoalgebra and is wedge-stable.
pub fn a_infinity<F: Field>(
    c: &Coalgebra<F>,
    a: &Subspace<F>,
) -> Result<WedgeTower<F>, NotSubcoalgebra> {
    if !c.is_subcoalgebra(a) {
        return Err(NotSubcoalgebra);
    }
    let mut w = a.clone();
    let mut steps = 0;
    loop {
        let next = wedge(c, &w, a);
        steps += 1;
        if next == w {
            return Ok(WedgeTower { subspace: w, steps });
        }
        w = next;
    }
}

/// S²(A) ⊆ A for a subcoalgebra A. With H symmetric as a coalgebra this
/// holds for every subcoalgebra.
pub fn s2_preserves_subcoalgebra<F: Field>(
    h: &HopfAlgebra<F>,
    a: &Subspace<F>,
) -> Result<bool, NotSubcoalgebra> {
    if !h.coalgebra().is_subcoalgebra(a) {
        return Err(NotSubcoalgebra);
    }
    let s2 = h.s2();
    Ok(a.basis_vectors().all(|v| a.contains(&s2.apply(v))))
}

/// Best-effort grouplike scan: reports the basis elements g with
/// Δ(g) = g⊗g and ε(g) = 1. Complete for coalgebras with a grouplike
/// basis (group algebras and friends); a general variety scan is out of
/// scope.
pub fn grouplike_basis_scan<F: Field>(c: &Coalgebra<F>) -> Vec<usize> {
    let n = c.dim();
    (0..n)
        .filter(|&i| {
            if c.counit()[i] != F::one() {
                return false;
            }
            let grid = c.delta_of(&c.basis_vector(i));
            let expected = Matrix::from_fn(n, n, |p, q| {
                if p == i && q == i {
                    F::one()
                } else {
                    F::zero()
                }
            });
            grid == expected
        })
        .collect()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubhopfError {
    #[error("subspace is not a subcoalgebra")]
    NotSubcoalgebra,
    #[error("subspace is not closed under multiplication")]
    NotMultClosed,
    #[error("subspace does not contain the unit")]
    MissingUnit,
    #[error("subspace is not antipode-stable")]
    NotAntipodeStable,
}

/// Restricts all Hopf structure to a subspace that is a subcoalgebra,
/// multiplicatively closed, unital and antipode-stable; returns the
/// restricted Hopf algebra and the inclusion matrix.
pub fn extract_subhopf<F: Field>(
    h: &HopfAlgebra<F>,
    s: &Subspace<F>,
) -> Result<(HopfAlgebra<F>, Matrix<F>), SubhopfError> {
    let n = h.dim();
    let d = s.dim();
    if !h.coalgebra().is_subcoalgebra(s) {
        return Err(SubhopfError::NotSubcoalgebra);
    }
    if !s.contains(h.unit()) {
        return Err(SubhopfError::MissingUnit);
    }
    let basis: Vec<Vec<F>> = s.basis_vectors().map(|v| v.to_vec()).collect();
    let mut mult = Tensor3::zeros(d, d, d);
    for (i, bi) in basis.iter().enumerate() {
        for (j, bj) in basis.iter().enumerate() {
            let p = h.mul(bi, bj);
            let coords = subspace_coordinates(s, &p).ok_or(SubhopfError::NotMultClosed)?;
            for (k, ck) in coords.into_iter().enumerate() {
                if !ck.is_zero() {
                    mult.set(i, j, k, ck);
                }
            }
        }
    }
    let mut delta = Tensor3::zeros(d, d, d);
    let mut counit = Vec::with_capacity(d);
    for (i, bi) in basis.iter().enumerate() {
        let grid = h.coalgebra().delta_of(bi);
        // Δ(bᵢ) ∈ S⊗S: write it as Σ_{p,q} T[p][q] b_p⊗b_q
        let t = tensor_coordinates(s, &grid).ok_or(SubhopfError::NotSubcoalgebra)?;
        for p in 0..d {
            for q in 0..d {
                let v = t.at(p, q).clone();
                if !v.is_zero() {
                    delta.set(i, p, q, v);
                }
            }
        }
        counit.push(h.coalgebra().counit_of(bi));
    }
    let mut antipode = Matrix::zeros(d, d);
    for (j, bj) in basis.iter().enumerate() {
        let img = h.antipode_of(bj);
        let coords = subspace_coordinates(s, &img).ok_or(SubhopfError::NotAntipodeStable)?;
        for (i, ci) in coords.into_iter().enumerate() {
            antipode.set(i, j, ci);
        }
    }
    let unit = subspace_coordinates(s, h.unit()).expect("unit is in the subspace");
    let names: Vec<String> = (0..d).map(|i| format!("k{i}")).collect();
    let coalgebra = Coalgebra::new(format!("{}|sub", h.name()), names, delta, counit);
    let sub = HopfAlgebra::new(coalgebra, mult, unit, antipode);
    let inclusion = Matrix::from_fn(n, d, |row, col| s.basis().at(col, row).clone());
    Ok((sub, inclusion))
}

/// Writes `grid` (an element of C⊗C supported on S⊗S) in coordinates of
/// the canonical basis of S on both legs; `None` if it does not lie in
/// S⊗S.
fn tensor_coordinates<F: Field>(s: &Subspace<F>, grid: &Matrix<F>) -> Option<Matrix<F>> {
    let n = s.ambient_dim();
    let d = s.dim();
    // S has an rref basis, so the coordinate of a vector along b_p is
    // its entry at the p-th pivot; reading the pivot rows of the grid
    // gives candidate second legs r_p with grid = Σ_p b_p ⊗ r_p.
    let mut rows_in_s: Vec<Vec<F>> = vec![vec![F::zero(); n]; d];
    let pivots: Vec<usize> = s
        .basis_vectors()
        .map(|row| row.iter().position(|x| !x.is_zero()).expect("nonzero"))
        .collect();
    for (p, &piv) in pivots.iter().enumerate() {
        for b in 0..n {
            rows_in_s[p][b] = grid.at(piv, b).clone();
        }
    }
    // verify reconstruction: grid == Σ_p b_p ⊗ rows_in_s[p]
    let mut recon: Matrix<F> = Matrix::zeros(n, n);
    for (p, bp) in s.basis_vectors().enumerate() {
        for (a, ba) in bp.iter().enumerate() {
            if ba.is_zero() {
                continue;
            }
            for b in 0..n {
                let v = &rows_in_s[p][b];
                if !v.is_zero() {
                    let cur = recon.at(a, b).clone();
                    recon.set(a, b, cur + &(ba.clone() * v));
                }
            }
        }
    }
    if &recon != grid {
        return None;
    }
    // second legs: each rows_in_s[p] must lie in S
    let mut t: Matrix<F> = Matrix::zeros(d, d);
    for p in 0..d {
        let coords = subspace_coordinates(s, &rows_in_s[p])?;
        for (q, v) in coords.into_iter().enumerate() {
            t.set(p, q, v);
        }
    }
    Some(t)
}
