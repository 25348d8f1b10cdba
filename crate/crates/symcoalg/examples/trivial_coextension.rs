//! Embedding any finite-dimensional coalgebra into a symmetric one.
//!
//! D = C ⊕ C* with the trivial coextension comultiplication is always a
//! symmetric coalgebra: the bimodule map α(c,m) = (m, σ(c)) is written
//! down directly, no search involved, and the dual algebra of D is the
//! trivial extension C* ⊕ M*.
//!
//! ```bash
//! cargo run --example trivial_coextension
//! ```

use symcoalg::coextension::{
    dual_is_trivial_extension, embedding_theorem_check, rat_dual_bicomodule,
};
use symcoalg::corpus;
use symcoalg::frobenius::is_symmetric;

fn main() {
    // start from a coalgebra that is NOT symmetric (not even co-Frobenius)
    let c = corpus::triangular_dual();
    println!(
        "{}: symmetric = {}",
        c.name(),
        is_symmetric(&c, 0).is_some()
    );

    let report = embedding_theorem_check(&c, 0);
    let d = &report.coextension;
    println!(
        "coextension D = C ⊕ C* has dimension {} and validates: {}",
        d.dim(),
        d.validate().is_valid()
    );
    println!("explicit witness Gram matrix (the swap form):");
    print!("{}", report.certificate.form().gram());
    println!("α is a left module map:  {}", report.left_module_map);
    println!("α is a right module map: {}", report.right_module_map);
    println!(
        "C sits in D as a subcoalgebra: {}",
        report.contains_original
    );
    println!(
        "independent search agrees D is symmetric: {}",
        report.search_agrees
    );

    // the dual algebra of D is the trivial extension C* ⊕ M* with
    // product (c*,m*)(b*,n*) = (c*b*, c*n* + m*b*)
    let m = rat_dual_bicomodule(&c);
    let violations = dual_is_trivial_extension(&c, &m);
    println!(
        "dual-algebra comparison on all {} basis pairs: {} violations",
        (2 * c.dim()) * (2 * c.dim()),
        violations.len()
    );
}
