//! Exact verification of minor non-vanishing for the discrete Fourier
//! matrix and of the sparsity bound `w(P) * (n - k) >= n` for polynomials
//! vanishing at roots of unity, over exactly-represented cyclotomic fields.
//!
//! Everything is computed in exact rational arithmetic: `w` is a root of the
//! n-th cyclotomic polynomial, matrices live over Q(w_n), and every verdict
//! (a minor vanishing, a rank, a kernel vector, an equality-case
//! classification) is decided by coordinate-wise zero tests, never by
//! floating-point tolerance.
//!
//! The crate is organized around five pieces:
//!
//! - [`cyclotomic`]: field arithmetic in Q(w_n) with decidable equality;
//! - [`linalg`]: exact determinant, rank, and right kernel over Q(w_n);
//! - [`spectral`]: the DFT matrix, its minors, circulants of sparse
//!   polynomials, and the rank/root-count lemma connecting them;
//! - [`uncertainty`]: the weight bound, the extremal family `D_{n,r,l}`,
//!   the equality classifier, and a finite exhaustive verifier;
//! - [`cli`]: the batch command-line surface wrapping all of the above.
//!
//! See the `examples/` directory for one runnable walkthrough per
//! capability, and the `chebotarev` binary for the batch interface.

pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod linalg;
mod ratpoly;
pub mod spectral;
pub mod uncertainty;

pub use cyclotomic::{CycElem, IntPoly, Rational};
pub use error::{Error, Result};
pub use linalg::{CycMatrix, CycVector};
pub use spectral::{MinorWitness, SparsePoly};
pub use uncertainty::{BoundReport, ExtremalDescriptor, TheoremReport};
