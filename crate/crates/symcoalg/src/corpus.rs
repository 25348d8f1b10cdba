//! Built-in instances over ℚ, entered as exact structure constants and
//! validated at load. The test suites run every decision procedure over
//! these.

use crate::coalgebra::Coalgebra;
use crate::field::{rat, Rational};
use crate::hopf::HopfAlgebra;
use crate::matrix::Matrix;
use crate::tensor::Tensor3;

/// The 2-dimensional coalgebra with a grouplike g and a (g,g)-primitive
/// x: Δg = g⊗g, Δx = g⊗x + x⊗g. It is the dual of `k[x]/(x²)`.
pub fn dual_numbers() -> Coalgebra<Rational> {
    let mut delta = Tensor3::zeros(2, 2, 2);
    delta.set(0, 0, 0, rat(1));
    delta.set(1, 0, 1, rat(1));
    delta.set(1, 1, 0, rat(1));
    Coalgebra::new(
        "DualNumbers*",
        vec!["g".into(), "x".into()],
        delta,
        vec![rat(1), rat(0)],
    )
}

/// Dual coalgebra of the exterior algebra Λ(x,y) on two generators,
/// basis (1, x, y, xy). The algebra is Frobenius but not symmetric in
/// characteristic 0, so this coalgebra is co-Frobenius but not symmetric.
pub fn exterior_dual() -> Coalgebra<Rational> {
    // multiplication of Λ(x,y): x² = y² = 0, yx = −xy
    let (e, x, y, xy) = (0usize, 1usize, 2usize, 3usize);
    let mut mult = Tensor3::zeros(4, 4, 4);
    for i in 0..4 {
        mult.set(e, i, i, rat(1));
        if i != e {
            mult.set(i, e, i, rat(1));
        }
    }
    mult.set(x, y, xy, rat(1));
    mult.set(y, x, xy, rat(-1));
    Coalgebra::dual_of_algebra(
        "ExteriorDual",
        vec!["1*".into(), "x*".into(), "y*".into(), "xy*".into()],
        &mult,
        &[rat(1), rat(0), rat(0), rat(0)],
    )
}

/// Dual coalgebra of the upper-triangular 2×2 matrix algebra, basis
/// (E11, E12, E22). That algebra is not self-injective, so this
/// coalgebra is not co-Frobenius.
pub fn triangular_dual() -> Coalgebra<Rational> {
    let (e11, e12, e22) = (0usize, 1usize, 2usize);
    let mut mult = Tensor3::zeros(3, 3, 3);
    mult.set(e11, e11, e11, rat(1));
    mult.set(e11, e12, e12, rat(1));
    mult.set(e12, e22, e12, rat(1));
    mult.set(e22, e22, e22, rat(1));
    Coalgebra::dual_of_algebra(
        "TriangularDual",
        vec!["E11*".into(), "E12*".into(), "E22*".into()],
        &mult,
        &[rat(1), rat(0), rat(1)],
    )
}

/// The coalgebra corpus: grouplikes, matrix coalgebras, the primitive
/// example, both 4-dimensional duals, and direct-sum / tensor builds up
/// to dimension 12.
pub fn coalgebras() -> Vec<Coalgebra<Rational>> {
    let g1 = Coalgebra::grouplike("kG1", &["g"]);
    let g2 = Coalgebra::grouplike("kG2", &["g", "h"]);
    let g3 = Coalgebra::grouplike("kG3", &["g", "h", "k"]);
    let mc2 = Coalgebra::matrix_coalgebra(2);
    let mc3 = Coalgebra::matrix_coalgebra(3);
    vec![
        g1.clone(),
        g2.clone(),
        dual_numbers(),
        mc2.clone(),
        exterior_dual(),
        triangular_dual(),
        mc2.direct_sum(&g1),
        mc3,
        g3.tensor(&mc2),
    ]
}

/// Group algebra of a finite group given by its Cayley table
/// (`table[i][j]` = index of gᵢgⱼ) with identity at index 0.
pub fn group_algebra(name: &str, labels: &[&str], table: &[Vec<usize>]) -> HopfAlgebra<Rational> {
    let n = labels.len();
    assert_eq!(table.len(), n);
    let mut mult = Tensor3::zeros(n, n, n);
    let mut inverse = vec![usize::MAX; n];
    for (i, row) in table.iter().enumerate() {
        assert_eq!(row.len(), n);
        for (j, &k) in row.iter().enumerate() {
            mult.set(i, j, k, rat(1));
            if k == 0 {
                inverse[i] = j;
            }
        }
    }
    assert!(
        inverse.iter().all(|&i| i != usize::MAX),
        "not a group table"
    );
    let coalgebra = Coalgebra::grouplike(name, labels);
    let mut unit = vec![rat(0); n];
    unit[0] = rat(1);
    let antipode = Matrix::from_fn(n, n, |i, j| if inverse[j] == i { rat(1) } else { rat(0) });
    HopfAlgebra::new(coalgebra, mult, unit, antipode)
}

/// Group algebra of the cyclic group Cₙ.
pub fn cyclic_group_algebra(n: usize) -> HopfAlgebra<Rational> {
    assert!(n >= 1);
    let labels: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
    let label_refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    let table: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    group_algebra(&format!("kC{n}"), &label_refs, &table)
}

/// Group algebra of the symmetric group S₃; elements r^a s^f with
/// r³ = s² = e and s r s = r⁻¹.
pub fn s3_group_algebra() -> HopfAlgebra<Rational> {
    // (a,f)·(b,g) = (a + (-1)^f b mod 3, f+g mod 2)
    let idx = |a: usize, f: usize| f * 3 + a;
    let mut table = vec![vec![0usize; 6]; 6];
    for a in 0..3 {
        for f in 0..2 {
            for b in 0..3 {
                for g in 0..2 {
                    let bb = if f == 1 { (3 - b) % 3 } else { b };
                    table[idx(a, f)][idx(b, g)] = idx((a + bb) % 3, (f + g) % 2);
                }
            }
        }
    }
    let labels = ["e", "r", "r2", "s", "rs", "r2s"];
    group_algebra("kS3", &labels, &table)
}

/// Sweedler's 4-dimensional Hopf algebra H₄ over ℚ: g² = 1, x² = 0,
/// xg = −gx, Δg = g⊗g, Δx = x⊗1 + g⊗x, S(g) = g, S(x) = −gx.
/// Its integral lines in H differ left vs right, so it is not unimodular.
pub fn sweedler_h4() -> HopfAlgebra<Rational> {
    let (one, g, x, gx) = (0usize, 1usize, 2usize, 3usize);
    let names = vec!["1".into(), "g".into(), "x".into(), "gx".into()];

    let mut mult = Tensor3::zeros(4, 4, 4);
    let mut set = |a: usize, b: usize, c: usize, v: i64| mult.set(a, b, c, rat(v));
    for i in 0..4 {
        set(one, i, i, 1);
        if i != one {
            set(i, one, i, 1);
        }
    }
    set(g, g, one, 1);
    set(g, x, gx, 1);
    set(x, g, gx, -1); // xg = −gx
    set(x, x, one, 0);
    set(g, gx, x, 1); // g·gx = g²x = x
    set(gx, g, x, -1); // gx·g = g·xg = −g²x·… = −x
    set(x, gx, one, 0); // x·gx = xgx = −gx² = 0
    set(gx, x, one, 0); // gx·x = 0
    set(gx, gx, one, 0); // gxgx = −g²x² = 0

    let mut delta = Tensor3::zeros(4, 4, 4);
    delta.set(one, one, one, rat(1));
    delta.set(g, g, g, rat(1));
    // Δx = x⊗1 + g⊗x
    delta.set(x, x, one, rat(1));
    delta.set(x, g, x, rat(1));
    // Δ(gx) = (g⊗g)(x⊗1 + g⊗x) = gx⊗g + 1⊗gx
    delta.set(gx, gx, g, rat(1));
    delta.set(gx, one, gx, rat(1));

    let counit = vec![rat(1), rat(1), rat(0), rat(0)];
    let coalgebra = Coalgebra::new("H4", names, delta, counit);

    let mut unit = vec![rat(0); 4];
    unit[one] = rat(1);
    // S: 1↦1, g↦g, x↦−gx, gx↦x
    let mut antipode = Matrix::zeros(4, 4);
    antipode.set(one, one, rat(1));
    antipode.set(g, g, rat(1));
    antipode.set(gx, x, rat(-1));
    antipode.set(x, gx, rat(1));
    HopfAlgebra::new(coalgebra, mult, unit, antipode)
}

/// The Hopf corpus: cyclic group algebras up to C₄, S₃, Sweedler's H₄,
/// and the duals of all of these.
pub fn hopf_algebras() -> Vec<HopfAlgebra<Rational>> {
    let mut out = Vec::new();
    for n in 2..=4 {
        out.push(cyclic_group_algebra(n));
    }
    out.push(s3_group_algebra());
    out.push(sweedler_h4());
    let duals: Vec<HopfAlgebra<Rational>> = out.iter().map(crate::hopf::dual_hopf).collect();
    out.extend(duals);
    out
}
