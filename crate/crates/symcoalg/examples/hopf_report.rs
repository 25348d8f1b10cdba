//! Full Hopf-algebra reports: integrals, unimodularity in both senses,
//! S² inner-ness in both senses, and the symmetric verdicts.
//!
//! ```bash
//! cargo run --example hopf_report
//! ```

use symcoalg::corpus;
use symcoalg::field::Rational;
use symcoalg::frobenius::is_symmetric;
use symcoalg::hopf::{
    hopf_symmetric_coalgebra, integrals, normalized_line, s2_inner_in_h, symmetric_as_algebra,
    HopfAlgebra,
};

fn report(h: &HopfAlgebra<Rational>) {
    println!("== {} (dim {})", h.name(), h.dim());
    let ints = integrals(h);
    let show = |s: &symcoalg::subspace::Subspace<Rational>| match normalized_line(s) {
        Some(v) => format!("{:?}", v.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
        None => "not a line".into(),
    };
    println!(
        "  left/right integral on H:  {} / {}",
        show(&ints.left_on),
        show(&ints.right_on)
    );
    println!(
        "  left/right integral in H:  {} / {}",
        show(&ints.left_in),
        show(&ints.right_in)
    );
    println!(
        "  unimodular on H: {}, in H: {}",
        ints.unimodular_on(),
        ints.unimodular_in()
    );
    let verdict = hopf_symmetric_coalgebra(h, 0);
    println!(
        "  S² inner in H*: {}, inner in H: {}",
        verdict.u.is_some(),
        s2_inner_in_h(h, 0).is_some()
    );
    println!(
        "  symmetric as coalgebra: {} (direct decision: {})",
        verdict.symmetric(),
        is_symmetric(h.coalgebra(), 0).is_some()
    );
    if let Some(cert) = &verdict.certificate {
        println!("  explicit symmetric form t((u⁻¹·x)S(y)), Gram:");
        for row in cert.form().gram().rows_iter() {
            println!(
                "    [{}]",
                row.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
        }
    }
    println!(
        "  symmetric as algebra: {}",
        symmetric_as_algebra(h, 0).symmetric()
    );
}

fn main() {
    report(&corpus::cyclic_group_algebra(3));
    report(&corpus::sweedler_h4());
    report(&symcoalg::hopf::dual_hopf(&corpus::sweedler_h4()));
    report(&corpus::s3_group_algebra());
}
