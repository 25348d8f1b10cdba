//! Wedge powers of subcoalgebras and the H∞ construction.
//!
//! X∧Y = Δ⁻¹(X⊗C + C⊗Y); iterating the wedge of a subcoalgebra A gives
//! an increasing tower that stabilizes at a finite-dimensional
//! subcoalgebra A∞. For a Hopf algebra the tower of k·1 is a Hopf
//! subalgebra H∞, and the antipode square preserves every subcoalgebra
//! when H is symmetric as a coalgebra.
//!
//! ```bash
//! cargo run --example wedge_tower
//! ```

use symcoalg::coalgebra::Coalgebra;
use symcoalg::corpus;
use symcoalg::field::{rat, Rational};
use symcoalg::hopf::{a_infinity, extract_subhopf, s2_preserves_subcoalgebra, wedge};
use symcoalg::subspace::Subspace;

fn main() {
    // the wedge itself on a non-coideal line in kC2: span{1+g} wedges to
    // span{1−g} and back — without the subcoalgebra hypothesis nothing
    // forces the tower to grow
    let kc2 = corpus::cyclic_group_algebra(2);
    let c = kc2.coalgebra();
    let plus = Subspace::<Rational>::line(vec![rat(1), rat(1)]);
    let w1 = wedge(c, &plus, &plus);
    let w2 = wedge(c, &w1, &plus);
    println!(
        "kC2: span{{1+g}} ∧ span{{1+g}} = span{{1−g}} ({}), next step returns ({})",
        w1.contains(&[rat(1), rat(-1)]),
        w2 == plus
    );

    // A∞ for a simple block of a cosemisimple coalgebra stabilizes at once
    let cs =
        Coalgebra::<Rational>::matrix_coalgebra(2).direct_sum(&Coalgebra::grouplike("k", &["g"]));
    let block = Subspace::span(5, (0..4).map(|i| cs.basis_vector(i)).collect());
    let tower = a_infinity(&cs, &block).unwrap();
    println!(
        "{}: block tower stabilizes at dim {} after {} step(s)",
        cs.name(),
        tower.subspace.dim(),
        tower.steps
    );

    // H∞ = (k·1)∞ for the Hopf corpus
    for h in corpus::hopf_algebras() {
        let unit_line = Subspace::line(h.unit().to_vec());
        let tower = a_infinity(h.coalgebra(), &unit_line).unwrap();
        let (sub, _) = extract_subhopf(&h, &tower.subspace).expect("H∞ is a Hopf subalgebra");
        println!(
            "{:<6} H∞ has dim {} (steps: {}), restricts to a Hopf algebra: {}",
            h.name(),
            tower.subspace.dim(),
            tower.steps,
            sub.validate().is_empty()
        );
    }

    // S² preserves subcoalgebras of a symmetric Hopf algebra
    let ks3 = corpus::s3_group_algebra();
    let x: Vec<Rational> = vec![rat(1), rat(0), rat(2), rat(0), rat(-1), rat(1)];
    let a = ks3.coalgebra().subcoalgebra_generated(&x);
    println!(
        "kS3: S² preserves the generated subcoalgebra (dim {}): {}",
        a.dim(),
        s2_preserves_subcoalgebra(&ks3, &a).unwrap()
    );
}
