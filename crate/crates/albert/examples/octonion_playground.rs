//! Octonion arithmetic basics: the multiplication table, conjugation,
//! norms, and the associator.
//!
//! ```bash
//! cargo run -p albert --example octonion_playground
//! ```

use albert::octonion::{Octonion, BASIS_NAMES};
use albert::table;

fn main() {
    let t = table::default_table();
    println!("multiplication table ({}):\n", t.describe());

    // full basis product table
    print!("{:>4}", "");
    for name in BASIS_NAMES {
        print!("{name:>5}");
    }
    println!();
    for q in 0..8 {
        print!("{:>4}", BASIS_NAMES[q]);
        for r in 0..8 {
            let (sign, idx) = t.basis_product(q, r);
            let cell = format!("{}{}", if sign < 0.0 { "-" } else { "" }, BASIS_NAMES[idx]);
            print!("{cell:>5}");
        }
        println!();
    }

    // noncommutativity and nonassociativity in one line each
    let (i, j, l) = (Octonion::I, Octonion::J, Octonion::L);
    println!("\ni*j = {:?},  j*i = {:?}", i * j, j * i);
    println!("(i*j)*l = {:?},  i*(j*l) = {:?}", (i * j) * l, i * (j * l));
    println!("[i,j,l] = {:?}", Octonion::associator(&i, &j, &l));

    // the composition property |ab| = |a||b|
    let a = Octonion([0.5, -1.0, 0.25, 2.0, 0.0, -0.5, 1.0, 0.75]);
    let b = Octonion([-0.25, 0.5, 1.5, 0.0, 1.0, 2.0, -0.75, 0.5]);
    println!(
        "\n|ab| = {:.12}, |a||b| = {:.12}",
        (a * b).norm(),
        a.norm() * b.norm()
    );

    // conjugation reverses products
    let lhs = (a * b).conj();
    let rhs = b.conj() * a.conj();
    println!("max |conj(ab) - conj(b)conj(a)| = {:.3e}", lhs.dist(&rhs));
}
