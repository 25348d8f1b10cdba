//! Dense exact matrices and the elimination kernel.
//!
//! Row reduction uses fraction-free (Bareiss-style) elimination: each
//! update is `(pivot·a[i][j] − a[i][c]·a[r][j]) / prev_pivot`, where the
//! division is exact, so integer inputs stay integers scaled by pivots
//! until the final normalization pass. Determinants come straight out of
//! the forward sweep.

use std::fmt;

use thiserror::Error;

use crate::field::Field;

/// Dense matrix over an exact field, row-major storage.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
}

impl<F: Field> Matrix<F> {
    pub fn new(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![F::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix::new(rows, cols, data)
    }

    /// Integer convenience constructor, mostly for tests and corpora.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| F::from_int(n)).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[F]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, j).clone() + other.at(i, j)
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, j).clone() - other.at(i, j)
        })
    }

    pub fn scale(&self, s: &F) -> Self {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j).clone() * s)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "inner dimensions must agree for multiplication"
        );
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = F::zero();
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                acc = acc + &(a.clone() * other.at(k, j));
            }
            acc
        })
    }

    /// Matrix–vector product.
    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for j in 0..self.cols {
                    let a = self.at(i, j);
                    if !a.is_zero() {
                        acc = acc + &(a.clone() * &v[j]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Kronecker (tensor) product; index (i,j) of the result pairs as
    /// `(i_self * other.rows + i_other, j_self * other.cols + j_other)`.
    pub fn kron(&self, other: &Self) -> Self {
        Matrix::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            let a = self.at(i / other.rows, j / other.cols);
            a.clone() * other.at(i % other.rows, j % other.cols)
        })
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                other.at(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        Matrix::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.at(i, j).clone()
            } else {
                other.at(i - self.rows, j).clone()
            }
        })
    }

    /// Reduced row-echelon form together with the pivot columns.
    ///
    /// The forward sweep is fraction-free Gauss–Jordan; a final pass
    /// divides every row by its pivot, so pivots are 1 with zeros above
    /// and below and the row space is preserved exactly.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a: Vec<Vec<F>> = self.rows_iter().map(|r| r.to_vec()).collect();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots: Vec<usize> = Vec::new();
        let mut prev = F::one();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let pivot = a[r][c].clone();
            let rescale = pivot.clone() / prev.clone();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = a[i][c].clone();
                if factor.is_zero() {
                    if !rescale.is_one() {
                        for j in 0..cols {
                            if !a[i][j].is_zero() {
                                a[i][j] = a[i][j].clone() * &rescale;
                            }
                        }
                    }
                    continue;
                }
                for j in 0..cols {
                    let num = pivot.clone() * &a[i][j] - &(factor.clone() * &a[r][j]);
                    a[i][j] = num / prev.clone();
                }
            }
            prev = pivot;
            pivots.push(c);
            r += 1;
        }
        // Normalize pivots to 1.
        for (k, &c) in pivots.iter().enumerate() {
            let inv = a[k][c].inv().expect("pivot is nonzero");
            for j in 0..cols {
                if !a[k][j].is_zero() {
                    a[k][j] = a[k][j].clone() * &inv;
                }
            }
        }
        (Matrix::from_rows(a), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Result<F, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(F::one());
        }
        let mut a: Vec<Vec<F>> = self.rows_iter().map(|r| r.to_vec()).collect();
        let mut prev = F::one();
        let mut sign_flip = false;
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
                return Ok(F::zero());
            };
            if p != c {
                a.swap(c, p);
                sign_flip = !sign_flip;
            }
            let pivot = a[c][c].clone();
            for i in (c + 1)..n {
                let factor = a[i][c].clone();
                for j in c..n {
                    let num = pivot.clone() * &a[i][j] - &(factor.clone() * &a[c][j]);
                    a[i][j] = num / prev.clone();
                }
            }
            prev = pivot;
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if sign_flip { -det } else { det })
    }

    pub fn is_invertible(&self) -> bool {
        matches!(self.det(), Ok(d) if !d.is_zero())
    }

    /// Inverse matrix; `None` exactly when the determinant vanishes.
    pub fn inverse(&self) -> Result<Option<Self>, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let (r, pivots) = self.hstack(&Matrix::identity(n)).rref();
        if pivots.len() < n || pivots.iter().any(|&c| c >= n) {
            return Ok(None);
        }
        Ok(Some(Matrix::from_fn(n, n, |i, j| r.at(i, n + j).clone())))
    }

    /// Some solution `x` of `self · x = b`, or `None` if inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &Self) -> Result<Option<Self>, MatrixError> {
        if self.rows != b.rows {
            return Err(MatrixError::DimensionMismatch(format!(
                "coefficient matrix has {} rows, right-hand side has {}",
                self.rows, b.rows
            )));
        }
        let (r, pivots) = self.hstack(b).rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.cols, b.cols);
        for (k, &c) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(c, j, r.at(k, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    /// Solve for a single right-hand-side vector.
    pub fn solve_vec(&self, b: &[F]) -> Result<Option<Vec<F>>, MatrixError> {
        let col = Matrix::new(b.len(), 1, b.to_vec());
        Ok(self.solve(&col)?.map(|x| x.col(0)))
    }

    /// Basis of the right kernel `{x : self·x = 0}`, one vector per row,
    /// in reduced row-echelon form.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut piv_iter: Vec<Option<usize>> = vec![None; self.cols];
        for (k, &c) in pivots.iter().enumerate() {
            piv_iter[c] = Some(k);
        }
        for free in 0..self.cols {
            if piv_iter[free].is_some() {
                continue;
            }
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (k, &c) in pivots.iter().enumerate() {
                v[c] = -r.at(k, free).clone();
            }
            basis.push(v);
        }
        basis
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Incremental exact kernel of a large sparse constraint system.
///
/// Rows arrive as sparse `(column, coefficient)` lists and are folded into
/// a fully reduced basis; the final kernel has the same canonical form the
/// dense path produces. This keeps the big bilinear-form systems (n² unknowns,
/// n³ constraints, almost all of them zero) tractable.
pub struct SparseReducer<F: Field> {
    ncols: usize,
    /// `(pivot column, row)`: sorted entries, coefficient 1 at the pivot,
    /// all other entries sit in currently-free columns.
    rows: Vec<(usize, Vec<(usize, F)>)>,
    /// pivot column -> index into `rows`.
    pivot_row: Vec<Option<usize>>,
}

impl<F: Field> SparseReducer<F> {
    pub fn new(ncols: usize) -> Self {
        SparseReducer {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds one constraint row; entries need not be sorted or combined.
    pub fn insert(&mut self, entries: Vec<(usize, F)>) {
        let mut row = normalize_sparse(entries, self.ncols);
        // Clear every entry that sits in a pivot column. Each subtraction
        // removes one pivot column and only introduces free columns, so
        // this terminates.
        loop {
            let hit = row
                .iter()
                .find(|(c, _)| self.pivot_row[*c].is_some())
                .cloned();
            match hit {
                Some((c, coef)) => {
                    let k = self.pivot_row[c].expect("pivot exists");
                    row = sparse_axpy(&row, &coef, &self.rows[k].1);
                }
                None => break,
            }
        }
        let Some(&(lead, ref coef)) = row.first() else {
            return; // dependent constraint
        };
        let inv = coef.inv().expect("leading coefficient nonzero");
        for (_, v) in row.iter_mut() {
            *v = v.clone() * &inv;
        }
        // The lead column stops being free: eliminate it from stored rows.
        for k in 0..self.rows.len() {
            if let Ok(pos) = self.rows[k].1.binary_search_by_key(&lead, |e| e.0) {
                let c = self.rows[k].1[pos].1.clone();
                self.rows[k].1 = sparse_axpy(&self.rows[k].1, &c, &row);
            }
        }
        self.pivot_row[lead] = Some(self.rows.len());
        self.rows.push((lead, row));
    }

    /// Dense basis of the solution space of the accumulated system.
    pub fn kernel_basis(self) -> Vec<Vec<F>> {
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if self.pivot_row[free].is_some() {
                continue;
            }
            let mut v = vec![F::zero(); self.ncols];
            v[free] = F::one();
            for (pivot_col, row) in &self.rows {
                if let Ok(pos) = row.binary_search_by_key(&free, |e| e.0) {
                    v[*pivot_col] = -row[pos].1.clone();
                }
            }
            basis.push(v);
        }
        basis
    }
}

fn normalize_sparse<F: Field>(mut entries: Vec<(usize, F)>, ncols: usize) -> Vec<(usize, F)> {
    entries.retain(|(_, v)| !v.is_zero());
    for (c, _) in &entries {
        assert!(*c < ncols, "column index out of range");
    }
    entries.sort_by_key(|e| e.0);
    let mut out: Vec<(usize, F)> = Vec::with_capacity(entries.len());
    for (c, v) in entries {
        match out.last_mut() {
            Some(last) if last.0 == c => last.1 = last.1.clone() + &v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// `a - coef * b` for sorted sparse rows.
fn sparse_axpy<F: Field>(a: &[(usize, F)], coef: &F, b: &[(usize, F)]) -> Vec<(usize, F)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = -(coef.clone() * &b[j].1);
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = a[i].1.clone() - &(coef.clone() * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
