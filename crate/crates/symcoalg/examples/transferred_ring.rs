//! The ring structure (C,∘) a certificate transfers onto a coalgebra.
//!
//! x∘y = α⁻¹(α(x)α(y)) pulls the convolution product of C* back to C;
//! the same product arises from β, the multiplication is a morphism of
//! (C*,C*)-bimodules, and left/right ideals of (C,∘) are exactly the
//! right/left coideals of C.
//!
//! ```bash
//! cargo run --example transferred_ring
//! ```

use symcoalg::coalgebra::Coalgebra;
use symcoalg::field::{rat, Rational};
use symcoalg::frobenius::is_symmetric;
use symcoalg::ring::{bimodule_law_check, build_mult_beta, build_ring, ideal_coideal_check};

fn main() {
    let mc2 = Coalgebra::<Rational>::matrix_coalgebra(2);
    let cert = is_symmetric(&mc2, 0).expect("M^c(2) is symmetric");
    let ring = build_ring(&mc2, &cert);

    println!("identity element e = α⁻¹(ε):");
    println!("  {:?}", strings(ring.identity()));

    println!("Cayley table of ∘ on basis pairs (nonzero entries):");
    for (i, j, k, v) in ring.mult_table().iter_nonzero() {
        println!(
            "  {} ∘ {} ∋ {}·{}",
            mc2.basis_names()[i],
            mc2.basis_names()[j],
            v,
            mc2.basis_names()[k]
        );
    }

    // the β-route multiplication coincides with the α-route
    assert_eq!(ring.mult_table(), &build_mult_beta(&mc2, &cert));
    println!("α-route and β-route multiplications agree");

    // bimodule law on all basis triples
    let violations = bimodule_law_check(&mc2, &ring, true);
    println!("bimodule-law violations: {}", violations.len());

    // a generated right coideal is a left ideal of (C,∘) — note the swap
    let x = vec![rat(1), rat(1), rat(0), rat(2)];
    let coideal = mc2.right_coideal_generated(&x);
    let report = ideal_coideal_check(&mc2, &ring, &coideal);
    println!(
        "generated subspace (dim {}): right coideal = {}, left ideal = {}, swap law holds = {}",
        coideal.dim(),
        report.right_coideal,
        report.left_ideal,
        report.equivalence_holds()
    );
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}
