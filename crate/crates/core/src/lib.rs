//! Exact computations in the affine nilTemperley-Lieb algebra `Â_N`.
//!
//! The algebra is generated by `a_0, …, a_{N-1}` (indices modulo `N`, `N >= 3`)
//! subject to `a_i² = 0`, `a_i a_{i±1} a_i = 0` and `a_i a_j = a_j a_i` whenever
//! `i - j ≢ ±1 (mod N)`.
//!
//! The crate is `no_std` (it only needs `alloc`) and contains no IO. It covers:
//!
//! * [`word`]: raw monomials, the combinatorial zero test, commutation equality
//!   and the gradings.
//! * [`normal_form`]: the block/strand normal form of a nonzero monomial, the
//!   injective invariant `ψ = (I_in, I_out, ℓ)` and its inverse on its image.
//! * [`config`], [`qpoly`] and [`fock`]: the representation on fermionic
//!   particle configurations on a circle with exact `ℤ[q]` scalars.
//! * [`element`]: integer linear combinations of canonical monomials.
//! * [`center`]: projector monomials, the central generators `t_k`, the
//!   `e_IJ` basis and the factorization of monomials over the center.
//! * [`embed`]: the unital embeddings `Â_N → Â_{N+1}`.
//! * [`linalg`]: exact sparse rank computations over `ℚ`.
//! * [`search`]: exhaustive enumeration of words and canonical monomials.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod center;
pub mod config;
pub mod element;
pub mod embed;
mod error;
pub mod fock;
pub mod linalg;
pub mod normal_form;
pub mod qpoly;
pub mod search;
pub mod word;

pub use center::BasisLabel;
pub use config::Config;
pub use element::Element;
pub use error::{Error, Result};
pub use fock::{FockVector, RepMatrix};
pub use normal_form::{IntegralSequence, NormalForm, PsiKey, Strand};
pub use qpoly::QPoly;
pub use word::{Rank, Word};
