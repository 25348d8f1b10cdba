//! The Nakayama automorphism and the inner-ness test for symmetry.
//!
//! Every nondegenerate balanced form B gives a unique σ with
//! α(x) = β(σ(x)); σ is the identity iff B is symmetric, two forms give
//! conjugate automorphisms, and σ is inner (σ(x) = u⁻¹·x·u for a unit
//! u ∈ C*) exactly when the coalgebra is symmetric.
//!
//! ```bash
//! cargo run --example nakayama_automorphism
//! ```

use symcoalg::coalgebra::Coalgebra;
use symcoalg::corpus;
use symcoalg::field::{rat, Rational};
use symcoalg::frobenius::{
    balanced_form_space, is_cofrobenius, BilinearForm, FrobeniusCertificate,
};
use symcoalg::nakayama::{compare_forms, is_inner, nakayama};

fn main() {
    // the exterior dual: co-Frobenius, not symmetric, σ ≠ id
    let ext = corpus::exterior_dual();
    let cert = is_cofrobenius(&ext, 0).expect("co-Frobenius");
    let na = nakayama(&cert);
    println!("{}: σ =", ext.name());
    print!("{}", na.sigma());
    println!("σ is the identity: {}", na.is_identity());
    println!("σ is inner: {}", is_inner(&ext, &na, 0).is_some());

    // a second independent form conjugates σ by a unit of C*
    let space = balanced_form_space(&ext);
    let second = space
        .iter()
        .flat_map(|b| (1..=5).map(move |t| (b, t)))
        .find_map(|(b, t)| {
            let g = cert.form().gram().add(&b.gram().scale(&rat(t)));
            if &g == cert.form().gram() {
                return None;
            }
            let candidate = BilinearForm::new(g);
            candidate
                .is_nondegenerate()
                .then(|| FrobeniusCertificate::new(&ext, candidate).unwrap())
        })
        .expect("the balanced space has dimension 4");
    let cmp = compare_forms(&ext, &cert, &second).expect("conjugation law verified");
    println!(
        "second form found; conjugating unit u = {:?}",
        strings(&cmp.u)
    );

    // on a symmetric coalgebra σ from a symmetric witness is the identity
    // and is inner via ε
    let mc2 = Coalgebra::<Rational>::matrix_coalgebra(2);
    let cert = symcoalg::frobenius::is_symmetric(&mc2, 0).unwrap();
    let na = nakayama(&cert);
    let u = is_inner(&mc2, &na, 0).expect("symmetric ⇒ inner");
    println!(
        "\n{}: σ = id is {}, inner with u = {:?}",
        mc2.name(),
        na.is_identity(),
        strings(&u)
    );
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}
