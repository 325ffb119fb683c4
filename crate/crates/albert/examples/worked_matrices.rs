//! The three built-in worked matrices and their listed non-real
//! eigenpairs, verified by residual.
//!
//! ```bash
//! cargo run -p albert --example worked_matrices
//! ```

use albert::catalog;
use albert::eigen;

fn main() {
    let (p, q, theta) = (1.0, 2.0, 0.7);
    let ex1 = catalog::example1(p, q, theta);
    println!("example 1 (p={p}, q={q}, theta={theta}):");
    for pair in catalog::example1_pairs(p, q, theta) {
        println!(
            "  {:3} lambda = {:?}  residual {:.3e}",
            pair.name,
            pair.lambda,
            eigen::residual_norm(&ex1, &pair.v, pair.lambda)
        );
    }

    let (p, q) = (0.5, 1.5);
    let ex2 = catalog::example2(p, q);
    println!("\nexample 2 (p={p}, q={q}):");
    for pair in catalog::example2_pairs(p, q) {
        println!(
            "  {:3} lambda = {:?}  residual {:.3e}  eigenspace dim {}",
            pair.name,
            pair.lambda,
            eigen::residual_norm(&ex2, &pair.v, pair.lambda),
            eigen::eigenspace_dim(&ex2, pair.lambda)
        );
    }

    let (p, q) = (0.0, 1.0);
    let ex3 = catalog::example3(p, q);
    let pair = catalog::example3_pair(p, q);
    println!("\nexample 3 (p={p}, q={q}):");
    println!(
        "  {:3} lambda = {:?}  residual {:.3e}",
        pair.name,
        pair.lambda,
        eigen::residual_norm(&ex3, &pair.v, pair.lambda)
    );
    println!(
        "  entry associator / q^3 = {:?}",
        catalog::example3_entry_associator(q)
    );
}
