//! Finite-dimensional coalgebras by structure constants.
//!
//! A coalgebra is a based vector space with comultiplication
//! Δ(cᵢ) = Σ `μ[i][j][k]` cⱼ⊗c_k and counit ε. Everything downstream —
//! the dual algebra under convolution, the hit actions making C a
//! (C*,C*)-bimodule, coideals, cocommutative elements — is derived from
//! the grid μ and the vector ε.
//!
//! Index conventions used throughout the crate:
//! * `delta[i][j][k]` is the coefficient of cⱼ⊗c_k in Δ(cᵢ);
//! * left hit `c*·x = Σ c*(x₂)x₁` contracts the second leg;
//! * right hit `x·c* = Σ c*(x₁)x₂` contracts the first leg;
//! * convolution `(f*g)(cᵢ) = Σ μ[i][j][k] f(cⱼ)g(c_k)`.

use std::fmt;

use crate::field::Field;
use crate::matrix::Matrix;
use crate::subspace::Subspace;
use crate::tensor::Tensor3;

/// Which coideal condition to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoidealSide {
    /// Δ(I) ⊆ C⊗I
    Left,
    /// Δ(I) ⊆ I⊗C
    Right,
    /// Both sides; equivalently Δ(I) ⊆ I⊗I, the subcoalgebra condition.
    TwoSided,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    Coassociativity { basis_index: usize },
    CounitLeft { basis_index: usize },
    CounitRight { basis_index: usize },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::Coassociativity { basis_index } => {
                write!(f, "coassociativity fails at basis index {basis_index}")
            }
            AxiomViolation::CounitLeft { basis_index } => {
                write!(f, "left counit law fails at basis index {basis_index}")
            }
            AxiomViolation::CounitRight { basis_index } => {
                write!(f, "right counit law fails at basis index {basis_index}")
            }
        }
    }
}

/// Outcome of `Coalgebra::validate`: empty means all axioms hold.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<AxiomViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(f, "valid")
        } else {
            for v in &self.violations {
                writeln!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

/// A finite-dimensional coalgebra over the field `F`.
#[derive(Clone, PartialEq, Eq)]
pub struct Coalgebra<F: Field> {
    name: String,
    basis_names: Vec<String>,
    delta: Tensor3<F>,
    counit: Vec<F>,
}

impl<F: Field> Coalgebra<F> {
    /// Builds a coalgebra from raw structure constants. Shapes are
    /// asserted; call `validate` to check the coalgebra axioms.
    pub fn new(
        name: impl Into<String>,
        basis_names: Vec<String>,
        delta: Tensor3<F>,
        counit: Vec<F>,
    ) -> Self {
        let n = counit.len();
        assert!(n >= 1, "coalgebras here have dimension at least 1");
        assert_eq!(basis_names.len(), n, "one basis name per dimension");
        assert_eq!(delta.dims(), (n, n, n), "delta must be n×n×n");
        Coalgebra {
            name: name.into(),
            basis_names,
            delta,
            counit,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn dim(&self) -> usize {
        self.counit.len()
    }

    pub fn delta(&self) -> &Tensor3<F> {
        &self.delta
    }

    pub fn counit(&self) -> &[F] {
        &self.counit
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        v[i] = F::one();
        v
    }

    /// Checks coassociativity and both counit laws exactly, reporting
    /// every violation with the offending basis index.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let d = &self.delta;
        let mut violations = Vec::new();
        for i in 0..n {
            let mut ok = true;
            'outer: for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        // (Δ⊗id)Δ vs (id⊗Δ)Δ on c_i, coefficient of c_a⊗c_b⊗c_c.
                        let mut lhs = F::zero();
                        for j in 0..n {
                            let x = d.at(i, j, c);
                            if !x.is_zero() {
                                lhs = lhs + &(x.clone() * d.at(j, a, b));
                            }
                        }
                        let mut rhs = F::zero();
                        for k in 0..n {
                            let x = d.at(i, a, k);
                            if !x.is_zero() {
                                rhs = rhs + &(x.clone() * d.at(k, b, c));
                            }
                        }
                        if lhs != rhs {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
            }
            if !ok {
                violations.push(AxiomViolation::Coassociativity { basis_index: i });
            }
        }
        for i in 0..n {
            for k in 0..n {
                let mut acc = F::zero();
                for j in 0..n {
                    let x = d.at(i, j, k);
                    if !x.is_zero() {
                        acc = acc + &(x.clone() * &self.counit[j]);
                    }
                }
                let expected = if i == k { F::one() } else { F::zero() };
                if acc != expected {
                    violations.push(AxiomViolation::CounitLeft { basis_index: i });
                    break;
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let mut acc = F::zero();
                for k in 0..n {
                    let x = d.at(i, j, k);
                    if !x.is_zero() {
                        acc = acc + &(x.clone() * &self.counit[k]);
                    }
                }
                let expected = if i == j { F::one() } else { F::zero() };
                if acc != expected {
                    violations.push(AxiomViolation::CounitRight { basis_index: i });
                    break;
                }
            }
        }
        ValidationReport { violations }
    }

    /// Δ(x) reshaped as the n×n matrix V with Δ(x) = Σ `V[j][k]` cⱼ⊗c_k.
    pub fn delta_of(&self, x: &[F]) -> Matrix<F> {
        self.delta.contract0(x)
    }

    /// Δ as a linear map kⁿ → k^(n²); row (j·n + k) holds the cⱼ⊗c_k
    /// coefficient.
    pub fn delta_as_matrix(&self) -> Matrix<F> {
        let n = self.dim();
        let mut m = Matrix::zeros(n * n, n);
        for (i, j, k, v) in self.delta.iter_nonzero() {
            m.set(j * n + k, i, v.clone());
        }
        m
    }

    /// ε(x) for a coordinate vector.
    pub fn counit_of(&self, x: &[F]) -> F {
        let mut acc = F::zero();
        for (xi, e) in x.iter().zip(&self.counit) {
            if !xi.is_zero() {
                acc = acc + &(xi.clone() * e);
            }
        }
        acc
    }

    /// Left hit `c*·x = Σ c*(x₂)x₁`.
    pub fn hit_left(&self, f: &[F], x: &[F]) -> Vec<F> {
        let n = self.dim();
        assert_eq!(f.len(), n);
        assert_eq!(x.len(), n);
        let mut out = vec![F::zero(); n];
        for (i, j, k, v) in self.delta.iter_nonzero() {
            if x[i].is_zero() || f[k].is_zero() {
                continue;
            }
            out[j] = out[j].clone() + &(x[i].clone() * v * &f[k]);
        }
        out
    }

    /// Right hit `x·c* = Σ c*(x₁)x₂`.
    pub fn hit_right(&self, x: &[F], f: &[F]) -> Vec<F> {
        let n = self.dim();
        assert_eq!(f.len(), n);
        assert_eq!(x.len(), n);
        let mut out = vec![F::zero(); n];
        for (i, j, k, v) in self.delta.iter_nonzero() {
            if x[i].is_zero() || f[j].is_zero() {
                continue;
            }
            out[k] = out[k].clone() + &(x[i].clone() * v * &f[j]);
        }
        out
    }

    /// Convolution product of two functionals in the dual algebra.
    pub fn convolve(&self, f: &[F], g: &[F]) -> Vec<F> {
        let n = self.dim();
        assert_eq!(f.len(), n);
        assert_eq!(g.len(), n);
        let mut out = vec![F::zero(); n];
        for (i, j, k, v) in self.delta.iter_nonzero() {
            if f[j].is_zero() || g[k].is_zero() {
                continue;
            }
            out[i] = out[i].clone() + &(f[j].clone() * v * &g[k]);
        }
        out
    }

    /// Matrix of left convolution by `u`, i.e. `v ↦ u * v` on the dual.
    /// Nonsingularity is exactly invertibility of `u` in C*.
    pub fn left_convolution_matrix(&self, u: &[F]) -> Matrix<F> {
        let n = self.dim();
        let mut m: Matrix<F> = Matrix::zeros(n, n);
        for (i, j, k, v) in self.delta.iter_nonzero() {
            if u[j].is_zero() {
                continue;
            }
            let cur = m.at(i, k).clone();
            m.set(i, k, cur + &(u[j].clone() * v));
        }
        m
    }

    /// Convolution inverse of `u` in C*, if it exists.
    pub fn convolution_inverse(&self, u: &[F]) -> Option<Vec<F>> {
        let l = self.left_convolution_matrix(u);
        let inv = l.solve_vec(&self.counit).ok()??;
        // In a finite-dimensional algebra a right inverse of an element
        // with injective left multiplication is two-sided; check anyway.
        if self.convolve(&inv, u) == self.counit {
            Some(inv)
        } else {
            None
        }
    }

    /// The dual algebra C* with the convolution product on the dual basis.
    pub fn dual_algebra(&self) -> DualAlgebra<F> {
        let n = self.dim();
        let mut mult = Tensor3::zeros(n, n, n);
        for (i, j, k, v) in self.delta.iter_nonzero() {
            mult.set(j, k, i, v.clone());
        }
        DualAlgebra {
            mult,
            unit: self.counit.clone(),
        }
    }

    /// Coideal / subcoalgebra membership test for a subspace.
    ///
    /// Left coideal means Δ(I) ⊆ C⊗I: every first-leg contraction
    /// (row of the reshaped Δ(v)) stays in I. Right is the mirror image
    /// on columns; two-sided demands both.
    pub fn is_coideal(&self, s: &Subspace<F>, side: CoidealSide) -> bool {
        assert_eq!(s.ambient_dim(), self.dim(), "ambient dimension mismatch");
        let n = self.dim();
        for v in s.basis_vectors() {
            let grid = self.delta_of(v);
            match side {
                CoidealSide::Left => {
                    for a in 0..n {
                        if !s.contains(grid.row(a)) {
                            return false;
                        }
                    }
                }
                CoidealSide::Right => {
                    for b in 0..n {
                        if !s.contains(&grid.col(b)) {
                            return false;
                        }
                    }
                }
                CoidealSide::TwoSided => {
                    for a in 0..n {
                        if !s.contains(grid.row(a)) {
                            return false;
                        }
                    }
                    for b in 0..n {
                        if !s.contains(&grid.col(b)) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn is_subcoalgebra(&self, s: &Subspace<F>) -> bool {
        self.is_coideal(s, CoidealSide::TwoSided)
    }

    /// Subspace of cocommutative elements: kernel of x ↦ Δ(x) − twist(Δ(x)).
    pub fn cocommutative_elements(&self) -> Subspace<F> {
        let n = self.dim();
        let mut rows = Vec::new();
        for a in 0..n {
            for b in 0..a {
                let mut row = vec![F::zero(); n];
                let mut nonzero = false;
                for (i, item) in row.iter_mut().enumerate() {
                    let v = self.delta.at(i, a, b).clone() - self.delta.at(i, b, a);
                    if !v.is_zero() {
                        nonzero = true;
                    }
                    *item = v;
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

    /// Smallest right coideal containing `x` (the cyclic left C*-submodule
    /// C*·x), computed by closing under second-leg contractions.
    pub fn right_coideal_generated(&self, x: &[F]) -> Subspace<F> {
        self.leg_closure(x, true, false)
    }

    /// Smallest left coideal containing `x` (the cyclic right C*-submodule
    /// x·C*), closed under first-leg contractions.
    pub fn left_coideal_generated(&self, x: &[F]) -> Subspace<F> {
        self.leg_closure(x, false, true)
    }

    /// Smallest subcoalgebra containing `x`: closure under both legs.
    pub fn subcoalgebra_generated(&self, x: &[F]) -> Subspace<F> {
        self.leg_closure(x, true, true)
    }

    fn leg_closure(&self, x: &[F], columns: bool, rows: bool) -> Subspace<F> {
        let n = self.dim();
        let mut w = Subspace::span(n, vec![x.to_vec()]);
        loop {
            let mut new_rows: Vec<Vec<F>> = w.basis_vectors().map(|v| v.to_vec()).collect();
            for v in w.basis_vectors() {
                let grid = self.delta_of(v);
                if rows {
                    for a in 0..n {
                        new_rows.push(grid.row(a).to_vec());
                    }
                }
                if columns {
                    for b in 0..n {
                        new_rows.push(grid.col(b));
                    }
                }
            }
            let next = Subspace::span(n, new_rows);
            if next == w {
                return w;
            }
            w = next;
        }
    }

    /// Largest left coideal contained in `w`, by iterating
    /// W ← {v ∈ W : Δ(v) ∈ C⊗W} until stable.
    pub fn largest_left_coideal_in(&self, w: &Subspace<F>) -> Subspace<F> {
        self.largest_coideal_in(w, CoidealSide::Left)
    }

    /// Largest right coideal contained in `w`.
    pub fn largest_right_coideal_in(&self, w: &Subspace<F>) -> Subspace<F> {
        self.largest_coideal_in(w, CoidealSide::Right)
    }

    fn largest_coideal_in(&self, w: &Subspace<F>, side: CoidealSide) -> Subspace<F> {
        assert_eq!(w.ambient_dim(), self.dim());
        let n = self.dim();
        let mut cur = w.clone();
        loop {
            if cur.is_zero() || cur.is_full() {
                // the zero and full subspaces are coideals on both sides
                return cur;
            }
            let t = cur.constraints();
            let mut rows: Vec<Vec<F>> = t.rows_iter().map(|r| r.to_vec()).collect();
            for trow in t.rows_iter() {
                for leg in 0..n {
                    let mut row = vec![F::zero(); n];
                    let mut nonzero = false;
                    for (i, item) in row.iter_mut().enumerate() {
                        let mut acc = F::zero();
                        for (c, tc) in trow.iter().enumerate() {
                            if tc.is_zero() {
                                continue;
                            }
                            let v = match side {
                                // rows of Δ(v) ∈ W: row `leg`, entries over k
                                CoidealSide::Left => self.delta.at(i, leg, c),
                                // columns of Δ(v) ∈ W: column `leg`, entries over j
                                CoidealSide::Right => self.delta.at(i, c, leg),
                                CoidealSide::TwoSided => unreachable!(),
                            };
                            if !v.is_zero() {
                                acc = acc + &(tc.clone() * v);
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
            let next = Subspace::span(n, Matrix::from_rows(rows).kernel_basis());
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    // ----- constructors -----

    /// Grouplike coalgebra: Δ(g) = g⊗g, ε(g) = 1 for every label.
    pub fn grouplike(name: impl Into<String>, labels: &[&str]) -> Self {
        let n = labels.len();
        assert!(n >= 1);
        let mut delta = Tensor3::zeros(n, n, n);
        for i in 0..n {
            delta.set(i, i, i, F::one());
        }
        Coalgebra::new(
            name,
            labels.iter().map(|s| s.to_string()).collect(),
            delta,
            vec![F::one(); n],
        )
    }

    /// Matrix coalgebra M^c(n): basis e_{ij}, Δ(e_{ij}) = Σ_k e_{ik}⊗e_{kj},
    /// ε(e_{ij}) = δ_{ij}.
    pub fn matrix_coalgebra(n: usize) -> Self {
        assert!(n >= 1);
        let dim = n * n;
        let idx = |i: usize, j: usize| i * n + j;
        let mut delta = Tensor3::zeros(dim, dim, dim);
        let mut counit = vec![F::zero(); dim];
        let mut names = Vec::with_capacity(dim);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    delta.set(idx(i, j), idx(i, k), idx(k, j), F::one());
                }
                if i == j {
                    counit[idx(i, j)] = F::one();
                }
                names.push(format!("e{}{}", i + 1, j + 1));
            }
        }
        Coalgebra::new(format!("Mc{n}"), names, delta, counit)
    }

    /// Direct sum: block structure constants, no cross terms.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (n, m) = (self.dim(), other.dim());
        let dim = n + m;
        let mut delta = Tensor3::zeros(dim, dim, dim);
        for (i, j, k, v) in self.delta.iter_nonzero() {
            delta.set(i, j, k, v.clone());
        }
        for (i, j, k, v) in other.delta.iter_nonzero() {
            delta.set(n + i, n + j, n + k, v.clone());
        }
        let mut counit = self.counit.clone();
        counit.extend(other.counit.iter().cloned());
        let mut names: Vec<String> = self.basis_names.iter().map(|s| format!("l.{s}")).collect();
        names.extend(other.basis_names.iter().map(|s| format!("r.{s}")));
        Coalgebra::new(
            format!("{}(+){}", self.name, other.name),
            names,
            delta,
            counit,
        )
    }

    /// Tensor product coalgebra with the middle twist:
    /// Δ(c⊗d) = Σ (c₁⊗d₁)⊗(c₂⊗d₂). Basis index of c_i⊗d_j is i·dim(D)+j.
    pub fn tensor(&self, other: &Self) -> Self {
        let (n, m) = (self.dim(), other.dim());
        let dim = n * m;
        let idx = |i: usize, j: usize| i * m + j;
        let mut delta = Tensor3::zeros(dim, dim, dim);
        for (i, j, k, v) in self.delta.iter_nonzero() {
            for (p, q, r, w) in other.delta.iter_nonzero() {
                delta.add_at(idx(i, p), idx(j, q), idx(k, r), v.clone() * w);
            }
        }
        let mut counit = Vec::with_capacity(dim);
        let mut names = Vec::with_capacity(dim);
        for i in 0..n {
            for j in 0..m {
                counit.push(self.counit[i].clone() * &other.counit[j]);
                names.push(format!("{}*{}", self.basis_names[i], other.basis_names[j]));
            }
        }
        Coalgebra::new(
            format!("{}(x){}", self.name, other.name),
            names,
            delta,
            counit,
        )
    }

    /// Opposite coalgebra C^cop: the two legs of Δ are swapped.
    pub fn opposite(&self) -> Self {
        let n = self.dim();
        let mut delta = Tensor3::zeros(n, n, n);
        for (i, j, k, v) in self.delta.iter_nonzero() {
            delta.set(i, k, j, v.clone());
        }
        Coalgebra::new(
            format!("{}^cop", self.name),
            self.basis_names.clone(),
            delta,
            self.counit.clone(),
        )
    }

    /// Dual coalgebra of a finite-dimensional algebra given by structure
    /// constants: Δ is the transpose of the multiplication, ε the unit.
    pub fn dual_of_algebra(
        name: impl Into<String>,
        basis_names: Vec<String>,
        mult: &Tensor3<F>,
        unit: &[F],
    ) -> Self {
        let n = unit.len();
        assert_eq!(mult.dims(), (n, n, n));
        let mut delta = Tensor3::zeros(n, n, n);
        for (j, k, i, v) in mult.iter_nonzero() {
            // c_j·c_k has c_i-coefficient v, so Δ(eᵢ) gains v·eⱼ⊗e_k.
            delta.add_at(i, j, k, v.clone());
        }
        Coalgebra::new(name, basis_names, delta, unit.to_vec())
    }
}

impl<F: Field> fmt::Debug for Coalgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Coalgebra {} (dim {}) delta={:?} counit={:?}",
            self.name,
            self.dim(),
            self.delta,
            self.counit
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
        )
    }
}

/// The dual algebra C* on the dual basis: `mult[f][g][h]` is the
/// e_h-coefficient of e_f * e_g; the unit is ε.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualAlgebra<F: Field> {
    mult: Tensor3<F>,
    unit: Vec<F>,
}

impl<F: Field> DualAlgebra<F> {
    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    pub fn mult(&self) -> &Tensor3<F> {
        &self.mult
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn mul(&self, f: &[F], g: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out = vec![F::zero(); n];
        for (a, b, h, v) in self.mult.iter_nonzero() {
            if f[a].is_zero() || g[b].is_zero() {
                continue;
            }
            out[h] = out[h].clone() + &(f[a].clone() * v * &g[b]);
        }
        out
    }

    /// Violations of associativity/unit laws on basis triples. Empty for
    /// the dual of a valid coalgebra.
    pub fn algebra_violations(&self) -> Vec<String> {
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
                    let lhs = self.mul(&ab, &basis(c));
                    let rhs = self.mul(&basis(a), &self.mul(&basis(b), &basis(c)));
                    if lhs != rhs {
                        out.push(format!("associativity fails at ({a},{b},{c})"));
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
        out
    }
}

/// A right C-comodule by structure constants: `rho[i][j][b]` is the
/// mⱼ⊗c_b coefficient of ρ(mᵢ). The zero comodule has dimension 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule<F: Field> {
    dim: usize,
    rho: Tensor3<F>,
}

impl<F: Field> Comodule<F> {
    pub fn new(coalgebra_dim: usize, dim: usize, rho: Tensor3<F>) -> Self {
        assert_eq!(rho.dims(), (dim, dim, coalgebra_dim));
        Comodule { dim, rho }
    }

    /// C as a right comodule over itself, ρ = Δ.
    pub fn regular(c: &Coalgebra<F>) -> Self {
        Comodule {
            dim: c.dim(),
            rho: c.delta().clone(),
        }
    }

    pub fn zero(coalgebra_dim: usize) -> Self {
        Comodule {
            dim: 0,
            rho: Tensor3::zeros(0, 0, coalgebra_dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rho(&self) -> &Tensor3<F> {
        &self.rho
    }

    /// Comodule axioms against its coalgebra, as violation strings.
    pub fn validate(&self, c: &Coalgebra<F>) -> Vec<String> {
        let (m, n) = (self.dim, c.dim());
        let mut out = Vec::new();
        for i in 0..m {
            let mut ok = true;
            'outer: for p in 0..m {
                for q in 0..n {
                    for b in 0..n {
                        let mut lhs = F::zero();
                        for j in 0..m {
                            let x = self.rho.at(i, j, b);
                            if !x.is_zero() {
                                lhs = lhs + &(x.clone() * self.rho.at(j, p, q));
                            }
                        }
                        let mut rhs = F::zero();
                        for a in 0..n {
                            let x = self.rho.at(i, p, a);
                            if !x.is_zero() {
                                rhs = rhs + &(x.clone() * c.delta().at(a, q, b));
                            }
                        }
                        if lhs != rhs {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
            }
            if !ok {
                out.push(format!("comodule coassociativity fails at index {i}"));
            }
        }
        for i in 0..m {
            for j in 0..m {
                let mut acc = F::zero();
                for a in 0..n {
                    let x = self.rho.at(i, j, a);
                    if !x.is_zero() {
                        acc = acc + &(x.clone() * &c.counit()[a]);
                    }
                }
                let expected = if i == j { F::one() } else { F::zero() };
                if acc != expected {
                    out.push(format!("comodule counit law fails at index {i}"));
                    break;
                }
            }
        }
        out
    }

    /// Left C*-action `c*·m = Σ c*(m₁)m₀`.
    pub fn act(&self, f: &[F], v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.dim);
        let mut out = vec![F::zero(); self.dim];
        for (i, j, b, w) in self.rho.iter_nonzero() {
            if v[i].is_zero() || f[b].is_zero() {
                continue;
            }
            out[j] = out[j].clone() + &(v[i].clone() * w * &f[b]);
        }
        out
    }

    /// Checks that `u` (target-dim × source-dim) is a comodule morphism
    /// from `self` to `other`: ρ_N ∘ u = (u⊗id) ∘ ρ_M.
    pub fn is_morphism(&self, other: &Self, u: &Matrix<F>, coalgebra_dim: usize) -> bool {
        if u.nrows() != other.dim || u.ncols() != self.dim {
            return false;
        }
        for i in 0..self.dim {
            for p in 0..other.dim {
                for b in 0..coalgebra_dim {
                    let mut lhs = F::zero();
                    for j in 0..self.dim {
                        let x = self.rho.at(i, j, b);
                        if !x.is_zero() {
                            lhs = lhs + &(x.clone() * u.at(p, j));
                        }
                    }
                    let mut rhs = F::zero();
                    for q in 0..other.dim {
                        let x = u.at(q, i);
                        if !x.is_zero() {
                            rhs = rhs + &(x.clone() * other.rho.at(q, p, b));
                        }
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Restricts to a subcomodule spanned by `s` if ρ(S) ⊆ S⊗C;
    /// returns the restricted comodule and the inclusion matrix.
    pub fn sub_comodule(
        &self,
        c: &Coalgebra<F>,
        s: &Subspace<F>,
    ) -> Option<(Comodule<F>, Matrix<F>)> {
        assert_eq!(s.ambient_dim(), self.dim);
        let n = c.dim();
        let d = s.dim();
        let mut rho = Tensor3::zeros(d, d, n);
        for (r, w) in s.basis_vectors().enumerate() {
            // reshape ρ(w) as (module leg) × (coalgebra leg)
            let mut grid: Matrix<F> = Matrix::zeros(self.dim, n);
            for (i, j, b, v) in self.rho.iter_nonzero() {
                if w[i].is_zero() {
                    continue;
                }
                let cur = grid.at(j, b).clone();
                grid.set(j, b, cur + &(w[i].clone() * v));
            }
            for b in 0..n {
                let colv = grid.col(b);
                let coords = subspace_coordinates(s, &colv)?;
                for (j, cj) in coords.into_iter().enumerate() {
                    if !cj.is_zero() {
                        rho.add_at(r, j, b, cj);
                    }
                }
            }
        }
        let inclusion = Matrix::from_fn(self.dim, d, |i, r| s.basis().at(r, i).clone());
        Some((Comodule::new(n, d, rho), inclusion))
    }
}

/// Coordinates of `v` in the canonical (rref) basis of `s`, if `v ∈ s`.
pub fn subspace_coordinates<F: Field>(s: &Subspace<F>, v: &[F]) -> Option<Vec<F>> {
    if !s.contains(v) {
        return None;
    }
    let coords: Vec<F> = s
        .basis_vectors()
        .map(|row| {
            let pivot = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
            v[pivot].clone()
        })
        .collect();
    Some(coords)
}
