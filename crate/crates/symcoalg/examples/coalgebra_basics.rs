//! Constructing coalgebras and working with their duals and hit actions.
//!
//! ```bash
//! cargo run --example coalgebra_basics
//! ```

use symcoalg::coalgebra::{Coalgebra, CoidealSide};
use symcoalg::field::{rat, Rational};
use symcoalg::subspace::Subspace;

fn main() {
    // the matrix coalgebra M^c(2): Δ(e_ij) = Σ_k e_ik ⊗ e_kj
    let mc2 = Coalgebra::<Rational>::matrix_coalgebra(2);
    println!("{} has dimension {}", mc2.name(), mc2.dim());
    println!("axioms: {}", mc2.validate());

    // the dual algebra is the 2×2 matrix algebra: e12* · e21* = e11*
    let dual = mc2.dual_algebra();
    let e12 = mc2.basis_vector(1);
    let e21 = mc2.basis_vector(2);
    println!("e12* * e21* = {:?}", strings(&dual.mul(&e12, &e21)));

    // hit actions make C a (C*,C*)-bimodule
    let eps = mc2.counit().to_vec();
    let x = vec![rat(1), rat(2), rat(3), rat(4)];
    assert_eq!(mc2.hit_left(&eps, &x), x, "ε acts as identity");
    let e11s = mc2.basis_vector(0);
    println!("e11* · e12 = {:?}", strings(&mc2.hit_left(&e11s, &e12)));

    // the first row span is a right coideal but not a left one
    let row = Subspace::span(4, vec![mc2.basis_vector(0), mc2.basis_vector(1)]);
    println!(
        "row span: right coideal = {}, left coideal = {}",
        mc2.is_coideal(&row, CoidealSide::Right),
        mc2.is_coideal(&row, CoidealSide::Left),
    );

    // cocommutative elements of M^c(2): the line through e11 + e22
    let cc = mc2.cocommutative_elements();
    println!("cocommutative subspace has dimension {}", cc.dim());

    // constructors compose: direct sums, tensor products, opposites
    let kg = Coalgebra::grouplike("kG", &["g", "h"]);
    let sum = mc2.direct_sum(&kg);
    let tensor = kg.tensor(&mc2);
    println!(
        "dim({}) = {}, dim({}) = {}",
        sum.name(),
        sum.dim(),
        tensor.name(),
        tensor.dim()
    );
    assert!(sum.validate().is_valid() && tensor.validate().is_valid());
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}
