//! Iterative search for non-real right eigenvalues: alternate the
//! smallest-singular-vector step with the closed-form lambda update.
//!
//! Non-real right eigenvalues are not isolated: perturbing a known
//! eigenvalue off its plane and searching converges to a nearby point of
//! the eigenvalue set rather than back to the listed representative. The
//! residual printed for each run is the convergence certificate.
//!
//! ```bash
//! cargo run -p albert --example nonreal_search
//! ```

use albert::catalog;
use albert::eigen::{self, SearchOptions};
use albert::octonion::Octonion;

fn main() {
    let (p, q, theta) = (0.0, 1.0, std::f64::consts::PI / 4.0);
    let a = catalog::example1(p, q, theta);
    let s_bar = (Octonion::real(theta.cos()) + Octonion::KL.scale(theta.sin())).conj();
    let listed = s_bar.scale(q);

    println!("seeding at the listed eigenvalue:");
    let found = eigen::eigen_search(&a, listed, SearchOptions::default());
    println!(
        "  lambda {:?}\n  residual {:.3e}, distance to listed {:.3e}",
        found.lambda,
        found.residual,
        found.lambda.dist(&listed)
    );

    println!("\nseeding 0.01 off-plane (the eigenvalue set is a continuum):");
    let found = eigen::eigen_search(
        &a,
        listed + Octonion::I.scale(0.01),
        SearchOptions {
            max_iter: 500,
            tol: 1e-14,
        },
    );
    println!(
        "  lambda {:?}\n  residual {:.3e}, distance to listed {:.3e}, eigenspace dim {}",
        found.lambda,
        found.residual,
        found.lambda.dist(&listed),
        eigen::eigenspace_dim(&a, found.lambda)
    );

    println!("\nrandom seeds on example 2:");
    let bh = catalog::example2(1.0, 1.0);
    let rep = albert::report::eigs_report(&bh, true, 8, 3, 1e-10).unwrap();
    for line in &rep.nonreal {
        println!(
            "  lambda {:?}  residual {:.3e}  dim {}",
            line.lambda, line.residual, line.nullity
        );
    }
}
