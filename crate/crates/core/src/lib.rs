//! Exact combinatorics for the affine hyperoctahedral quotient and lecture
//! hall partitions.
//!
//! A minimal coset representative `w` of `C̃_n / C_n` is written as a window
//! `[c_1 N + σ_1, …, c_n N + σ_n]` with `N = 2n + 2`. The engine maps it to a
//! signed permutation `σ`, then to a `(2,4,…,2n)`-inversion sequence `e`, and
//! finally to the lecture hall partition `λ_i = 2i c_i − e_i`, which is also
//! the class inversion vector of `w`.
//!
//! - [`perms`]: `S_n` and `C_n` with their inversion and descent statistics.
//! - [`invseq`]: `s`-inversion sequences and the encodings `Θ` and `Ψ`.
//! - [`lecturehall`]: `s`-lecture hall partitions, ceilings and excesses.
//! - [`affine`]: windows, the bijection, window statistics and a BFS length oracle.
//! - [`qseries`]: sparse multivariate polynomials with big-integer coefficients.
//! - [`identities`]: generating-function identities checked by enumeration.

pub mod affine;
pub mod error;
pub mod identities;
pub mod invseq;
pub mod lecturehall;
pub mod limits;
pub mod notation;
pub mod perms;
pub mod qseries;

pub use affine::{AffineElement, ClassInversions, CosetRep, WindowStats};
pub use error::{Error, Result};
pub use invseq::{InversionSequence, SSequence};
pub use lecturehall::{CeilingExcessPair, LectureHallPartition};
pub use limits::Limits;
pub use perms::{Permutation, SignedPermutation};
pub use qseries::{Exponents, Monomial, MultiPoly, Space};
