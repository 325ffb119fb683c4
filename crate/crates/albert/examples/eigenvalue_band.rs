//! The one-parameter band of additional eigenvalues of the first worked
//! matrix: lambda = (p + rho) - beta kl with
//! 32 beta^2 = (sqrt(32 rho^2 - 7q^2) - 5q)(11q - sqrt(32 rho^2 - 7q^2)),
//! defined for q^2 <= rho^2 <= 4q^2 and collapsing to the real
//! eigenvalues at the boundary.
//!
//! ```bash
//! cargo run -p albert --example eigenvalue_band
//! ```

use albert::catalog;
use albert::eigen::{self, SearchOptions};
use albert::octonion::Octonion;

fn main() {
    let (p, q, theta) = (1.0, 1.0, std::f64::consts::PI / 5.0);
    let a = catalog::example1(p, q, theta);

    println!("rho/q     beta       search residual   eigenspace dim");
    for step in 0..=8 {
        let rho = q * (1.0 + step as f64 / 8.0);
        let Ok((beta, _)) = eigen::band_beta(rho, q) else {
            println!("{:.3}  out of range", rho / q);
            continue;
        };
        let lambda = Octonion::real(p + rho) - Octonion::KL.scale(beta);
        let found = eigen::eigen_search(&a, lambda, SearchOptions::default());
        let dim = eigen::eigenspace_dim(&a, lambda);
        println!(
            "{:5.3}  {:9.6}   {:.3e}         {}",
            rho / q,
            beta,
            found.residual,
            dim
        );
    }

    println!("\noutside the band, the relation has no real solution:");
    for rho in [0.5 * q, 2.5 * q] {
        println!(
            "  rho = {rho}: {:?}",
            eigen::band_beta(rho, q).err().unwrap()
        );
    }
}
