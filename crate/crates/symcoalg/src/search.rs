//! Certified search for a nonsingular member of a matrix pencil.
//!
//! Given matrices A₁…A_s of size n×n, decide whether some combination
//! Σ tᵢAᵢ is nonsingular. det(Σ tᵢAᵢ) is a polynomial of degree ≤ n in
//! each tᵢ, so the two phases below are conclusive:
//!
//! 1. randomized: sample integer tuples uniformly from [−n·s, n·s]^s,
//!    up to 64 trials (Schwartz–Zippel makes a miss overwhelmingly
//!    unlikely when a witness exists);
//! 2. deterministic grid: evaluate on all of {0,…,n}^s. A polynomial of
//!    degree ≤ n per variable vanishing on that grid is identically
//!    zero, so exhausting the grid certifies absence.
//!
//! Both phases are exact; the randomized phase is reproducible from the
//! seed. The grid is exponential in s — fine for the small solution
//! spaces these searches run over, and the price of a certified "no".

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::Field;
use crate::matrix::Matrix;

pub const RANDOM_TRIALS: usize = 64;

/// A successful pencil search: integer coefficients and the witness.
#[derive(Clone, Debug)]
pub struct PencilWitness<F: Field> {
    pub coefficients: Vec<i64>,
    pub matrix: Matrix<F>,
    /// True when the witness came from the deterministic grid phase.
    pub from_grid: bool,
}

fn combine<F: Field>(mats: &[Matrix<F>], t: &[i64]) -> Matrix<F> {
    let n = mats[0].nrows();
    let mut acc = Matrix::zeros(n, mats[0].ncols());
    for (m, &c) in mats.iter().zip(t) {
        if c == 0 {
            continue;
        }
        acc = acc.add(&m.scale(&F::from_int(c)));
    }
    acc
}

fn try_tuple<F: Field>(mats: &[Matrix<F>], t: &[i64], from_grid: bool) -> Option<PencilWitness<F>> {
    let m = combine(mats, t);
    match m.det() {
        Ok(d) if !d.is_zero() => Some(PencilWitness {
            coefficients: t.to_vec(),
            matrix: m,
            from_grid,
        }),
        _ => None,
    }
}

/// Randomized phase only. `None` means 64 misses, not certified absence.
pub fn find_nonsingular_randomized<F: Field>(
    mats: &[Matrix<F>],
    seed: u64,
) -> Option<PencilWitness<F>> {
    if mats.is_empty() {
        return None;
    }
    let n = mats[0].nrows() as i64;
    let s = mats.len();
    let bound = (n * s as i64).max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_TRIALS {
        let t: Vec<i64> = (0..s).map(|_| rng.gen_range(-bound..=bound)).collect();
        if let Some(w) = try_tuple(mats, &t, false) {
            return Some(w);
        }
    }
    None
}

/// Deterministic grid phase over {0,…,n}^s. `None` here is a certificate
/// that the whole pencil is singular.
pub fn find_nonsingular_grid<F: Field>(mats: &[Matrix<F>]) -> Option<PencilWitness<F>> {
    if mats.is_empty() {
        return None;
    }
    let n = mats[0].nrows();
    let s = mats.len();
    let mut t = vec![0i64; s];
    loop {
        // advance odometer
        let mut i = 0;
        loop {
            if i == s {
                return None;
            }
            if t[i] < n as i64 {
                t[i] += 1;
                break;
            }
            t[i] = 0;
            i += 1;
        }
        if let Some(w) = try_tuple(mats, &t, true) {
            return Some(w);
        }
    }
}

/// Full certified search: randomized first, then the grid. A `None` is a
/// proof that every combination is singular.
pub fn find_nonsingular<F: Field>(mats: &[Matrix<F>], seed: u64) -> Option<PencilWitness<F>> {
    find_nonsingular_randomized(mats, seed).or_else(|| find_nonsingular_grid(mats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use num::Zero;

    type M = Matrix<Rational>;

    #[test]
    fn finds_the_identity() {
        let w = find_nonsingular(&[M::identity(3)], 0).unwrap();
        assert!(!w.matrix.det().unwrap().is_zero());
    }

    #[test]
    fn rank_deficient_span_is_certified_absent() {
        let m = M::from_int_rows(&[&[1, 0], &[0, 0]]);
        assert!(find_nonsingular(&[m], 0).is_none());
    }

    #[test]
    fn needs_a_combination() {
        // Each generator is singular but their sum is not.
        let a = M::from_int_rows(&[&[1, 0], &[0, 0]]);
        let b = M::from_int_rows(&[&[0, 0], &[0, 1]]);
        let w = find_nonsingular(&[a, b], 7).unwrap();
        assert!(!w.matrix.det().unwrap().is_zero());
    }

    #[test]
    fn grid_agrees_with_randomized_on_presence() {
        let a = M::from_int_rows(&[&[0, 1], &[0, 0]]);
        let b = M::from_int_rows(&[&[0, 0], &[1, 0]]);
        let r = find_nonsingular_randomized(&[a.clone(), b.clone()], 11);
        let g = find_nonsingular_grid(&[a, b]);
        assert!(r.is_some() && g.is_some());
    }

    #[test]
    fn empty_pencil_is_absent() {
        assert!(find_nonsingular::<Rational>(&[], 0).is_none());
    }

    #[test]
    fn randomized_is_reproducible() {
        let a = M::from_int_rows(&[&[1, 0], &[0, 1]]);
        let b = M::from_int_rows(&[&[0, 1], &[1, 0]]);
        let w1 = find_nonsingular(&[a.clone(), b.clone()], 42).unwrap();
        let w2 = find_nonsingular(&[a, b], 42).unwrap();
        assert_eq!(w1.coefficients, w2.coefficients);
    }

    #[test]
    fn det_zero_pencil_with_several_generators() {
        // span of strictly upper-triangular matrices: all singular
        let a = M::from_int_rows(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        let b = M::from_int_rows(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]);
        let c = M::from_int_rows(&[&[0, 0, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert!(find_nonsingular(&[a, b, c], 3).is_none());
    }
}
