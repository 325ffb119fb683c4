//! Generalized orthogonality and eigenvector decompositions: where they
//! work (the first worked matrix) and where they provably fail (the
//! second).
//!
//! ```bash
//! cargo run -p albert --example decompositions
//! ```

use albert::catalog;
use albert::eigen::{self, EigenPair};
use albert::jordan::OctMatrix3;

fn main() {
    // first worked matrix: the sign-consistent triple decomposes
    let (p, q, theta) = (1.0, 2.0, 0.9);
    let a = catalog::example1(p, q, theta);
    let pairs = catalog::example1_pairs(p, q, theta);
    let get = |name: &str| {
        let pr = pairs.iter().find(|x| x.name == name).unwrap();
        EigenPair::new(&a, pr.v.normalized(), pr.lambda)
    };
    println!("example 1, triple (u+, v+, w+):");
    let devs = eigen::decomposition_checks(&a, &[get("u+"), get("v+"), get("w+")]);
    println!("  {devs:#?}");
    println!("example 1, mixed-sign triple (u+, v+, w-):");
    let devs = eigen::decomposition_checks(&a, &[get("u+"), get("v+"), get("w-")]);
    println!("  max deviation {:.3} (no decomposition)", devs.max());

    // second worked matrix: v1 is orthogonal to u1 and w1, but u1 and w1
    // are not orthogonal, and no triple containing w1 is
    let (p, q) = (0.7, 1.3);
    let bh = catalog::example2(p, q);
    let pairs2 = catalog::example2_pairs(p, q);
    let vec_of = |name: &str| &pairs2.iter().find(|x| x.name == name).unwrap().v;
    println!("\nexample 2 orthogonality pattern:");
    println!(
        "  (v1 v1^dag) u1: {:.3e}",
        eigen::ortho_check(vec_of("v1"), vec_of("u1"))
    );
    println!(
        "  (v1 v1^dag) w1: {:.3e}",
        eigen::ortho_check(vec_of("v1"), vec_of("w1"))
    );
    println!(
        "  (u1 u1^dag) w1: {:.3}",
        eigen::ortho_check(vec_of("u1"), vec_of("w1"))
    );

    // ... yet the six normalized squares still sum to twice the identity
    let vs: Vec<_> = pairs2.iter().map(|x| x.v.normalized()).collect();
    let sum = eigen::six_square_sum(&vs.try_into().unwrap());
    println!(
        "  six squares vs 2I: {:.3e}",
        sum.dist(&OctMatrix3::identity().scale(2.0))
    );

    // randomized multi-restart search for an orthogonal triple through w1
    let w1 = pairs2.iter().find(|x| x.name == "w1").unwrap();
    let fixed = EigenPair::new(&bh, w1.v.normalized(), w1.lambda);
    let others: Vec<_> = pairs2
        .iter()
        .map(|pr| (pr.lambda, eigen::eigenspace_basis(&bh, pr.lambda)))
        .collect();
    let best = eigen::orthogonal_triple_search(&bh, &fixed, &others, 120, 42);
    println!("\nbest triple-through-w1 residual over 120 restarts: {best:.4}");
    println!("(bounded away from zero: evidence that no orthogonal triple exists)");
}
