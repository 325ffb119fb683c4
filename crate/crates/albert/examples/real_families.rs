//! The two families of real eigenvalues: the multiplier operator, its
//! real eigenvalues, and the family cubics.
//!
//! ```bash
//! cargo run -p albert --example real_families
//! ```

use albert::catalog;
use albert::eigen;
use albert::jordan::JordanMatrix;
use albert::realops;

fn show(label: &str, a: &JordanMatrix) {
    println!(
        "{label}: trace {}  sigma {}  det {}",
        a.trace(),
        a.sigma(),
        a.det()
    );
    let op = eigen::rhs_multiplier_operator(a);
    let eigs = realops::real_eigenvalues(&op, 1e-7 * op.frob_norm().max(1.0)).unwrap();
    println!("  multiplier operator real eigenvalues: {eigs:?}");
    for fam in eigen::real_eigen_families(a).unwrap() {
        let sum: f64 = fam.lambdas.iter().sum();
        println!(
            "  family r = {:+.6}: lambdas {:?} (dims {:?}, sum {:.6} = trace)",
            fam.r, fam.lambdas, fam.nullities, sum
        );
    }
}

fn main() {
    show("diag(1,2,3)", &JordanMatrix::diag(1.0, 2.0, 3.0));
    show(
        "example 1 (p=0, q=1, theta=0)",
        &catalog::example1(0.0, 1.0, 0.0),
    );
    show(
        "example 1 (p=1, q=2, theta=pi/5)",
        &catalog::example1(1.0, 2.0, std::f64::consts::PI / 5.0),
    );
    let (p, q) = (1.0, 1.0);
    show("example 2 (p=1, q=1)", &catalog::example2(p, q));
    println!(
        "  trace-consistent listing: {:?}",
        catalog::example2_trace_consistent_real_families(p, q)
    );
    println!(
        "  original listing:         {:?}   <- third value breaks the trace rule",
        catalog::example2_listed_real_families(p, q)
    );
}
