//! Octonion arithmetic, 3x3 octonionic Hermitian matrices (the
//! exceptional Jordan algebra), and the right eigenvalue problem
//! `A v = v lambda` over the octonions.
//!
//! The crate is organized around five pieces:
//!
//! - [`octonion`]: exact-as-floating-point octonion arithmetic over a
//!   data-driven multiplication table, plus the classical identities
//!   (composition norm, alternativity, the four-slot associator rule).
//! - [`jordan`]: Hermitian `(p, m, n, a, b, c)` matrices with the Jordan
//!   and Freudenthal products, trace/sigma/determinant (each computed by
//!   two independent routes), and the cubic characteristic identity.
//! - [`realops`]: tiny dense kernels written in place - 8x8 and 24x24
//!   linearizations of octonion-linear maps, one-sided Jacobi singular
//!   values, Francis QR eigenvalues, real cubic roots.
//! - [`eigen`]: residuals, the generalized characteristic equation, the
//!   two real-eigenvalue families, a numerical search for non-real
//!   eigenvalues, eigenspace dimensions, and every orthogonality /
//!   decomposition checker.
//! - [`catalog`] and [`report`]: three built-in worked matrices with
//!   known eigenpairs, and the machine-readable verification report the
//!   CLI emits.
//!
//! ```
//! use albert::{catalog, eigen, Octonion};
//!
//! // the first worked matrix has eigenvalue p + q conj(s) with a
//! // 5-dimensional eigenspace
//! let (p, q, theta) = (1.0, 2.0, 0.7);
//! let a = catalog::example1(p, q, theta);
//! let s = Octonion::real(theta.cos()) + Octonion::KL.scale(theta.sin());
//! let lambda = Octonion::real(p) + s.conj().scale(q);
//! assert_eq!(eigen::eigenspace_dim(&a, lambda), 5);
//!
//! // any vector in that eigenspace solves A v = v lambda
//! let v = &eigen::eigenspace_basis(&a, lambda)[0];
//! assert!(eigen::residual_norm(&a, v, lambda) < 1e-9);
//! ```
//!
//! # Runnable examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p albert --example octonion_playground   # table and identities
//! cargo run -p albert --example jordan_identities     # cubic identity, dual routes
//! cargo run -p albert --example worked_matrices       # built-in matrices + eigenpairs
//! cargo run -p albert --example real_families         # the two real-eigenvalue families
//! cargo run -p albert --example nonreal_search        # iterative non-real eigen-search
//! cargo run -p albert --example eigenvalue_band       # the one-parameter eigenvalue band
//! cargo run -p albert --example decompositions        # orthogonality and decompositions
//! cargo run -p albert --example full_report           # the complete verification report
//! ```
//!
//! The thin `albert` binary exposes the same machinery as subcommands
//! (`verify-paper`, `eigs`, `nullity`, `property-suite`); see the README.

pub mod catalog;
pub mod eigen;
pub mod jordan;
pub mod octonion;
pub mod realops;
pub mod report;
pub mod table;

pub use jordan::{JordanMatrix, OctMatrix3, OctVec3};
pub use octonion::Octonion;
pub use table::MultiplicationTable;
