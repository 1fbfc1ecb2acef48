//! The local model at a tacnode of the branch divisor: multiplication and
//! differential matrices for the degree 4 cover x = u^2 + v, y = v^2,
//! pushed through the blow-up root substitution and the frame change, with
//! pole orders read off in the dlog basis.
//!
//! ```bash
//! cargo run -p prymcalc --example local_higgs_forms
//! ```

use prymcalc::localforms::{
    build_local_matrices, critical_quadratic, is_logarithmic, root_cover_matrices,
    verify_derivation_identities, verify_full_higgs_closure, SIZE,
};
use prymcalc::rat::Rat;

fn main() {
    // the matrices over C{x,y} and their defining identities
    let local = build_local_matrices();
    println!("u =");
    for i in 0..SIZE {
        let row: Vec<String> = (0..SIZE).map(|j| local.u.entry(i, j).to_string()).collect();
        println!("  [{}]", row.join(", "));
    }
    for check in verify_derivation_identities(&local) {
        println!(
            "{}: {}",
            check.name,
            if check.pass { "holds" } else { "FAILS" }
        );
    }

    // after x = alpha^2 beta^4, y = alpha^4 beta^4 the corner entry of du
    // still has a second-order pole along alpha
    let root = root_cover_matrices().unwrap();
    let pre = is_logarithmic("du", &root.du, &["alpha", "beta"]);
    for f in &pre.failures {
        println!(
            "before frame change: du({},{}) has order {} pole along {}",
            f.row + 1,
            f.col + 1,
            f.order,
            f.divisor
        );
    }
    println!("du(4,1) = {}", root.du.entry(3, 0));

    // the frame (1/alpha beta, 1, 1, alpha beta) absorbs it
    println!("du_f(4,1) = {}", root.du_framed.entry(3, 0));
    for report in verify_full_higgs_closure().unwrap() {
        println!(
            "product {:<5} {}",
            report.matrix_name,
            if report.passes() {
                "logarithmic"
            } else {
                "NOT logarithmic"
            }
        );
    }

    // the first-order critical-locus quadratic x^2 + (2-c)xv + v^2
    for ratio in [0i64, 1, 2, 3] {
        let q = critical_quadratic(&Rat::int(ratio), &Rat::one()).unwrap();
        println!(
            "ratio {ratio}: c = {}, discriminant {}, {} branch(es)",
            q.c, q.discriminant, q.branch_count
        );
    }
}
