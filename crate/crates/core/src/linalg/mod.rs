//! Exact dense linear algebra over arbitrary-precision rationals and integers.
//!
//! Nothing in this crate touches floating point. Every rank, kernel and
//! determinant is computed exactly, with deterministic pivoting (first
//! nonzero entry, columns scanned left to right) so that kernel bases are
//! reproducible.

mod int;
mod rat;

pub use int::{dot, IntMatrix};
pub use rat::{RatMatrix, Rref};

use thiserror::Error;

pub use malachite::Integer as Int;
pub use malachite::Rational as Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {context} ({left} vs {right})")]
    DimensionMismatch {
        context: &'static str,
        left: usize,
        right: usize,
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("inverse is not integral")]
    NotUnimodular,
}

pub(crate) fn rat(v: i64) -> Rat {
    Rat::from(v)
}

/// Converts an integral rational to an integer, `None` when it has a denominator.
pub fn rat_to_int(r: &Rat) -> Option<Int> {
    Int::try_from(r).ok()
}

/// Exact inner product of two rational vectors.
pub fn rat_dot(a: &[Rat], b: &[Rat]) -> Rat {
    let mut acc = Rat::from(0);
    for (x, y) in a.iter().zip(b) {
        if *x != 0 && *y != 0 {
            acc += x * y;
        }
    }
    acc
}

pub fn int_vec(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn int_vec_to_i64(v: &[Int]) -> Vec<i64> {
    v.iter()
        .map(|x| i64::try_from(x).expect("integer entry exceeds i64"))
        .collect()
}
