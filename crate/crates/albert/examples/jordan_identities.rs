//! Hermitian 3x3 matrices over the octonions: the Jordan product, the
//! cubic characteristic identity, and the dual-route invariants.
//!
//! ```bash
//! cargo run -p albert --example jordan_identities
//! ```

use albert::catalog;
use albert::jordan::JordanMatrix;
use albert::octonion::Octonion;

fn main() {
    let a = catalog::example1(1.0, 2.0, 0.9);
    println!("trace {}  sigma {}  det {}", a.trace(), a.sigma(), a.det());

    // sigma and det are each computed by two independent routes
    println!(
        "sigma via traces:      {}  (closed form {})",
        a.sigma_via_trace(),
        a.sigma()
    );
    println!(
        "det via Freudenthal:   {}  (closed form {})",
        a.det_via_freudenthal(),
        a.det()
    );

    // the cubic characteristic identity holds for every Hermitian matrix
    println!(
        "characteristic residual (max entry norm): {:.3e}",
        a.char_residual().to_matrix().max_entry_norm()
    );

    // powers are unambiguous
    let (lhs, rhs) = a.power3_both();
    println!("cube grouping gap: {:.3e}", lhs.sub(&rhs).norm());

    // Freudenthal product generalizes the adjugate
    let d = JordanMatrix::diag(1.0, 2.0, 3.0);
    let adj = d.freudenthal(&d);
    println!(
        "adjugate of diag(1,2,3): diag({}, {}, {})",
        adj.p, adj.m, adj.n
    );

    // a non-diagonal example matrix with octonion entries
    let b = JordanMatrix::new(
        0.5,
        -1.0,
        2.0,
        Octonion::I + Octonion::L.scale(0.5),
        Octonion::K.scale(-0.25),
        Octonion::JL.scale(1.5),
    );
    println!(
        "random-ish matrix: det {} (Freudenthal {})",
        b.det(),
        b.det_via_freudenthal()
    );
}
