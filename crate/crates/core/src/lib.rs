//! Linear-time determinants of general tridiagonal matrices.
//!
//! A tridiagonal matrix is stored as three vectors ([`TridiagonalMatrix`]).
//! Its pivot vector `c_1 = d_1`, `c_i = d_i - a_{i-1} b_{i-1} / c_{i-1}`
//! gives, in `O(n)`:
//!
//! * the determinant, as the product of pivots or through the three-term
//!   recurrence for the principal minors ([`recurrences`]), including a
//!   hybrid that switches recurrences at the first vanishing pivot;
//! * the Doolittle and Crout LU factors and a positive-definiteness test
//!   for symmetric matrices ([`factorization`]).
//!
//! [`symbolic`] evaluates the determinant by carrying a symbol `z` in place
//! of vanishing pivots. [`oracle`] provides dense elimination for
//! cross-checking, [`generators`] the example families and random models,
//! and [`bench`] a timing harness.
//!
//! ```
//! use tridet::{det_hybrid, TridiagonalMatrix, ZeroTest};
//!
//! let m = TridiagonalMatrix::new(
//!     vec![1.0, 1.0, 2.0, -1.0],
//!     vec![1.0, -1.0, 1.0],
//!     vec![1.0, 1.0, -3.0],
//! )?;
//! let det = det_hybrid(&m, ZeroTest::Exact)?;
//! assert_eq!(det.value, -1.0);
//! assert_eq!(det.pivot_break, Some(2));
//! # Ok::<(), tridet::Error>(())
//! ```

pub mod bench;
pub mod cli;
pub mod error;
pub mod factorization;
pub mod generators;
pub mod matrix;
pub mod oracle;
pub mod recurrences;
pub mod signed_log;
pub mod symbolic;

pub use error::{Error, Result};
pub use factorization::{is_positive_definite, lu_factorize, Convention, Definiteness, LuFactors};
pub use generators::{closed_form_det, gen_example, Family};
pub use matrix::TridiagonalMatrix;
pub use recurrences::{
    det_hybrid, det_hybrid_scaled, det_three_term, det_two_term, pivot_sequence, Algorithm,
    DetResult, MinorSequence, PivotSequence, StepCounts, ZeroTest,
};
pub use signed_log::SignedLog;
pub use symbolic::{det_detgtri, det_detgtri_exact};
