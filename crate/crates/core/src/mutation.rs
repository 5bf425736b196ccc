//! Matrix mutation and the elementary matrices `S(B, k)`.
//!
//! Directions are zero-based here; the CLI converts from one-based input.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use thiserror::Error;

use crate::linalg::{Int, IntMatrix, LinalgError};
use crate::report::{int_json, Report};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MutationError {
    #[error("direction {k} out of range for {cols} columns")]
    Direction { k: usize, cols: usize },
    #[error("matrix has more columns ({cols}) than rows ({rows})")]
    Shape { rows: usize, cols: usize },
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn pos(a: &Int) -> Int {
    if *a > 0 {
        a.clone()
    } else {
        Int::from(0)
    }
}

/// `μ_k(B)` for an `l × m` matrix with `l >= m`.
pub fn mutate(b: &IntMatrix, k: usize) -> Result<IntMatrix, MutationError> {
    let (l, m) = (b.rows(), b.cols());
    if l < m {
        return Err(MutationError::Shape { rows: l, cols: m });
    }
    if k >= m {
        return Err(MutationError::Direction { k, cols: m });
    }
    let mut out = IntMatrix::zeros(l, m);
    for i in 0..l {
        for j in 0..m {
            out[(i, j)] = if i == k || j == k {
                -b[(i, j)].clone()
            } else {
                let bik = &b[(i, k)];
                let bkj = &b[(k, j)];
                b[(i, j)].clone() + pos(&-bik.clone()) * bkj + bik * pos(bkj)
            };
        }
    }
    Ok(out)
}

/// `S(B, k)`: the identity with row `k` replaced by `s_kj = -δ_kj + [-b_kj]_+`.
pub fn s_matrix(b: &IntMatrix, k: usize) -> Result<IntMatrix, MutationError> {
    if !b.is_square() {
        return Err(MutationError::NotSquare);
    }
    let n = b.cols();
    if k >= n {
        return Err(MutationError::Direction { k, cols: n });
    }
    let mut s = IntMatrix::identity(n);
    for j in 0..n {
        s[(k, j)] = if j == k {
            Int::from(-1)
        } else {
            pos(&-b[(k, j)].clone())
        };
    }
    Ok(s)
}

pub fn is_skew_symmetric(b: &IntMatrix) -> bool {
    b.is_square() && b.transpose() == b.neg()
}

fn require_skew(b: &IntMatrix, k: usize) -> Result<(), MutationError> {
    if !is_skew_symmetric(b) {
        return Err(MutationError::NotSkewSymmetric);
    }
    if k >= b.cols() {
        return Err(MutationError::Direction { k, cols: b.cols() });
    }
    Ok(())
}

fn conjugate(s: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix, MutationError> {
    Ok(s.transpose().matmul(b)?.matmul(s)?)
}

/// `μ_k(μ_k(B)) = B` and `μ_k(-B) = -μ_k(B)`.
pub fn verify_mutation_rules(b: &IntMatrix, k: usize) -> Result<Report, MutationError> {
    let mu = mutate(b, k)?;
    let lhs = json!({
        "involution": int_json(&mutate(&mu, k)?),
        "negation": int_json(&mutate(&b.neg(), k)?),
    });
    let rhs = json!({
        "involution": int_json(b),
        "negation": int_json(&mu.neg()),
    });
    Ok(Report::compare(
        "mutation-rules",
        "matrix",
        json!({"b": int_json(b), "k": k + 1}),
        lhs,
        rhs,
    ))
}

/// `S^t B S = μ_k(B)` for `S = S(B, k)` and `S = S(-B, k)`, and `S(-B, k)^2 = I`.
pub fn verify_gls_conjugation(b: &IntMatrix, k: usize) -> Result<Report, MutationError> {
    require_skew(b, k)?;
    let mu = mutate(b, k)?;
    let s = s_matrix(b, k)?;
    let s_neg = s_matrix(&b.neg(), k)?;
    let lhs = json!({
        "plus": int_json(&conjugate(&s, b)?),
        "minus": int_json(&conjugate(&s_neg, b)?),
        "square": int_json(&s_neg.matmul(&s_neg)?),
    });
    let rhs = json!({
        "plus": int_json(&mu),
        "minus": int_json(&mu),
        "square": int_json(&IntMatrix::identity(b.cols())),
    });
    Ok(Report::compare(
        "gls-conjugation",
        "matrix",
        json!({"b": int_json(b), "k": k + 1}),
        lhs,
        rhs,
    ))
}

/// `G_U B G_U^t = μ_k(B)` with `G_U = S(-B, k)^t`.
pub fn verify_theorem_3_11(b: &IntMatrix, k: usize) -> Result<Report, MutationError> {
    require_skew(b, k)?;
    let g_u = s_matrix(&b.neg(), k)?.transpose();
    let lhs = g_u.matmul(b)?.matmul(&g_u.transpose())?;
    Ok(Report::compare(
        "thm-3.11",
        "matrix",
        json!({"b": int_json(b), "k": k + 1, "g_u": int_json(&g_u)}),
        int_json(&lhs),
        int_json(&mutate(b, k)?),
    ))
}

/// Random skew-symmetric `m × m` matrix with entries in `[-bound, bound]`.
pub fn random_skew_symmetric(rng: &mut ChaCha8Rng, m: usize, bound: i64) -> IntMatrix {
    let mut b = IntMatrix::zeros(m, m);
    for i in 0..m {
        for j in i + 1..m {
            let v = rng.random_range(-bound..=bound);
            b[(i, j)] = Int::from(v);
            b[(j, i)] = Int::from(-v);
        }
    }
    b
}

/// Runs the mutation rules and both identities for `count` random skew-symmetric matrices of size
/// `1..=max_m` in every direction. Returns the failures and the number of checks.
pub fn random_batch(seed: u64, count: usize, max_m: usize, bound: i64) -> (Vec<Report>, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut checks = 0;
    for _ in 0..count {
        let m = rng.random_range(1..=max_m);
        let b = random_skew_symmetric(&mut rng, m, bound);
        for k in 0..m {
            for r in [
                verify_mutation_rules(&b, k),
                verify_gls_conjugation(&b, k),
                verify_theorem_3_11(&b, k),
            ] {
                let r = r.expect("skew-symmetric input");
                checks += 1;
                if !r.pass {
                    failures.push(r);
                }
            }
        }
    }
    (failures, checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64(rows)
    }

    #[test]
    fn mutation_examples() {
        assert_eq!(mutate(&IntMatrix::zeros(3, 3), 1).unwrap(), IntMatrix::zeros(3, 3));
        let b = m(&[&[0, 1], &[-1, 0]]);
        assert_eq!(mutate(&b, 0).unwrap(), m(&[&[0, -1], &[1, 0]]));
        assert!(matches!(mutate(&b, 2), Err(MutationError::Direction { .. })));
        // A3 linear orientation, mutation at the middle vertex.
        let a3 = m(&[&[0, 1, 0], &[-1, 0, 1], &[0, -1, 0]]);
        assert_eq!(mutate(&a3, 1).unwrap(), m(&[&[0, -1, 1], &[1, 0, -1], &[-1, 1, 0]]));
    }

    #[test]
    fn rectangular_mutation() {
        let b = m(&[&[0, 1], &[-1, 0], &[2, -1]]);
        let mu = mutate(&b, 0).unwrap();
        assert_eq!(mu, m(&[&[0, -1], &[1, 0], &[-2, 1]]));
        assert_eq!(mutate(&mu, 0).unwrap(), b);
        assert!(mutate(&m(&[&[0, 1, 2]]), 0).is_err());
    }

    #[test]
    fn s_matrix_examples() {
        assert_eq!(s_matrix(&IntMatrix::zeros(2, 2), 0).unwrap(), m(&[&[-1, 0], &[0, 1]]));
        assert_eq!(s_matrix(&m(&[&[0, 1], &[-1, 0]]), 0).unwrap(), m(&[&[-1, 0], &[0, 1]]));
        assert_eq!(s_matrix(&m(&[&[0, -2], &[2, 0]]), 0).unwrap(), m(&[&[-1, 2], &[0, 1]]));
    }

    #[test]
    fn identities_on_small_cases() {
        let b = m(&[&[0, 1], &[-1, 0]]);
        for k in 0..2 {
            assert!(verify_gls_conjugation(&b, k).unwrap().pass);
            assert!(verify_theorem_3_11(&b, k).unwrap().pass);
        }
        assert!(verify_theorem_3_11(&IntMatrix::zeros(3, 3), 2).unwrap().pass);
        assert!(matches!(
            verify_theorem_3_11(&m(&[&[0, 1], &[1, 0]]), 0),
            Err(MutationError::NotSkewSymmetric)
        ));
    }

    #[test]
    fn random_batch_passes() {
        let (fails, checks) = random_batch(7, 200, 6, 4);
        assert!(fails.is_empty(), "{:?}", fails.first());
        assert!(checks >= 600);
    }
}
