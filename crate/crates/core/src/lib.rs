//! Exact combinatorics of the level-one Fock space and the unipotent
//! characters of `GL(n,q)`.
//!
//! * [`partition`]: partitions, e-cores, e-quotients and charge vectors.
//! * [`laurent`]: Laurent polynomials over arbitrary-precision integers.
//! * [`symfunc`]: Kostka, inverse Kostka and Littlewood-Richardson numbers, `p_e(s_μ)`.
//! * [`fock`]: the Fock space with ribbon operators `V_k`, `S_μ`, `b_r` and `f_r`.
//! * [`lusztig`]: blocks, Lusztig induction `L_μ`, Farahat restriction, Levi data.
//! * [`canonical`]: bar involution, canonical bases, decomposition matrices.
//! * [`cli`]: the command-line front end.

pub mod canonical;
pub mod cli;
pub mod convention;
pub mod error;
pub mod fock;
pub mod laurent;
pub mod lusztig;
pub mod matrix;
pub mod partition;
pub mod render;
pub mod symfunc;

pub use canonical::{CanonicalEngine, CanonicalVector};
pub use convention::Convention;
pub use error::{Error, Result};
pub use fock::{FockSpace, FockVector};
pub use laurent::LaurentPoly;
pub use lusztig::{CharacterVector, Lusztig};
pub use matrix::TransitionMatrix;
pub use partition::{ChargeVector, Partition, QuotientTuple};
pub use symfunc::SchurExpansion;
