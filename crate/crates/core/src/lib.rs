//! Exact symbolic engine for the degenerate quantum general linear group
//! U_q(gl_{m,n}).
//!
//! The crate constructs the algebra from its presentation over Q(q) and
//! mechanically verifies its structural identities by reduction to canonical
//! normal form:
//!
//! * [`scalars`] — exact arithmetic in Q(q) and its Laurent extension in the
//!   spectral parameters x, y.
//! * [`rewrite`] — the free-algebra rewriting engine: monomial order,
//!   reduction, degree-bounded diamond-lemma completion, verdicts.
//! * [`uqglmn`] — the presentation of U_q(gl_{m,n}), root vectors, Hopf maps,
//!   K_2rho, and the commutation-relation suites.
//! * [`tensorrep`] — the natural representation and matrices over the
//!   algebra realizing U ⊗ End(V)^{⊗d}, with partial traces.
//! * [`casimir`] — L-operators, Gamma, central elements, and the closed-form
//!   quantum Casimir.
//! * [`ybe`] — the R-matrix, its variants, the universal L-operator, and the
//!   spectral Yang–Baxter equation.
//! * [`rll`] — the FRT-style algebra U(R), its Hopf structure, and the
//!   isomorphism with U_q(gl_{m,n}).
//! * [`cli`] — the command-line driver, report formats, and presentation
//!   cache.

pub mod casimir;
pub mod cli;
pub mod rewrite;
pub mod rll;
pub mod scalars;
pub mod tensorrep;
pub mod uqglmn;
pub mod ybe;

/// Version tag recorded in reports and cache headers.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Default completion degree bound: covers every identity in the verification
/// corpus for m+n <= 4 (empirically determined; Undecided verdicts instruct
/// raising it).
pub fn default_degree_bound(m: usize, n: usize) -> usize {
    2 * (m + n) + 6
}
