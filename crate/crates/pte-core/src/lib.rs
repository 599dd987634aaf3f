//! Exact integer and rational algebra for C-finite sequences, rational
//! generating functions, and Prouhet-Tarry-Escott (PTE) solution pairs.
//!
//! Everything in this crate is exact: coefficients are arbitrary-precision
//! integers ([`num_bigint::BigInt`]) or rationals ([`num_rational::BigRational`]),
//! and every equality check is literal equality. No floating point is used
//! anywhere.
//!
//! The crate is organised in layers:
//!
//! * [`poly`] - dense univariate polynomials over the integers, plus the
//!   rational-coefficient variant needed for division.
//! * [`gf`] - rational generating functions `num/den` held in a canonical
//!   reduced form, so equality of series is equality of struct fields.
//! * [`text`] - parsing and printing of polynomials and generating functions
//!   in both comma-separated and human-readable forms.
//! * [`resultant`] - bivariate resultants via fraction-free elimination,
//!   the engine behind Hadamard products of recurrences.
//! * [`cfinite`] - sequences satisfying linear recurrences with constant
//!   coefficients: expansion, recurrence/GF conversion in both directions,
//!   linear combination, shift, Hadamard product and recurrence guessing.
//! * [`pte`] - integer multisets, power sums, PTE degree certification,
//!   the classical Euler size-4 family and the Chernick size-6 family.
//! * [`quad`] - exact arithmetic in the quadratic field obtained by
//!   adjoining sqrt(6) to the rationals.
//! * [`pell`] - the Pell-type sequence `h(k+1) = 10 h(k) - h(k-1)` and its
//!   closed forms over [`quad`].
//! * [`identities`] - the eleven-sequence ideal-PTE identity, the cubic
//!   identity attributed to Ramanujan, and exact whole-family verifiers.
//! * [`search`] - bounded meet-in-the-middle search for ideal PTE pairs.

pub mod cfinite;
pub mod gf;
pub mod identities;
pub mod pell;
pub mod poly;
pub mod pte;
pub mod quad;
pub mod resultant;
pub mod search;
pub mod text;

pub use gf::RationalGF;
pub use poly::Polynomial;
