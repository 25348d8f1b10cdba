//! Comparing the hom functors F, G, H on concrete comodules.
//!
//! F(M) = Hom_k(M,k) and G(M) = Hom_{C*}(M,C) are always naturally
//! equivalent; G(M) ≅ H(M) = Hom_{C*}(M,C*) characterizes symmetric
//! coalgebras. Everything here is an instance-level, exact verification.
//!
//! ```bash
//! cargo run --example brauer_functors
//! ```

use symcoalg::brauer::{
    automorphism_description, compute_f, compute_g, compute_h, equivalence_fg, naturality_fg,
    symmetric_via_gh,
};
use symcoalg::coalgebra::{Coalgebra, Comodule};
use symcoalg::field::{rat, Rational};
use symcoalg::matrix::Matrix;
use symcoalg::subspace::Subspace;

fn main() {
    let mc2 = Coalgebra::<Rational>::matrix_coalgebra(2);
    let regular = Comodule::regular(&mc2);
    let f = compute_f(&mc2, &regular);
    let g = compute_g(&mc2, &regular);
    let h = compute_h(&mc2, &regular);
    println!(
        "M = {} over itself: dim F = {}, dim G = {}, dim H = {}",
        mc2.name(),
        f.dim(),
        g.dim(),
        h.dim()
    );

    let report = equivalence_fg(&mc2, &regular);
    println!(
        "F ≅ G: roundtrips exact = {}, α right-linear = {}",
        report.beta_alpha_identity && report.alpha_beta_identity,
        report.alpha_right_linear
    );

    // naturality against the inclusion of the first-row subcomodule
    let row = Subspace::span(4, vec![mc2.basis_vector(0), mc2.basis_vector(1)]);
    let (simple, inclusion) = regular.sub_comodule(&mc2, &row).unwrap();
    println!(
        "naturality square for the row inclusion commutes: {}",
        naturality_fg(&mc2, &simple, &regular, &inclusion)
    );

    // G ≅ H via the symmetric structure
    let gh = symmetric_via_gh(&mc2, &[regular, simple], 0);
    println!(
        "symmetric: {}; per-sample equivalence verified: {}",
        gh.symmetric,
        gh.all_verified()
    );
    for s in &gh.samples {
        println!(
            "  dim M = {}, dim G = {}, dim H = {}",
            s.dim_m, s.dim_g, s.dim_h
        );
    }

    // every bijective left C*-module endomorphism of C is a right
    // translation by a unit of C*
    let kg = Coalgebra::<Rational>::grouplike("kG", &["g", "h"]);
    let u0 = vec![rat(3), rat(-1)];
    let translation = Matrix::from_fn(2, 2, |k, i| {
        let x = kg.basis_vector(i);
        kg.hit_right(&x, &u0)[k].clone()
    });
    let recovered = automorphism_description(&kg, &translation).unwrap();
    println!(
        "\nright translation on {} recovered u = {:?}",
        kg.name(),
        recovered.iter().map(|x| x.to_string()).collect::<Vec<_>>()
    );
}
