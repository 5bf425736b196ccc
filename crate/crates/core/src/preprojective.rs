//! Generalized preprojective algebras `Pi(C, D, Omega)`.
//!
//! The double quiver has a loop `eps_i` at each vertex and, for every
//! `(i, j)` in `Omega` or its opposite, arrows `a_ij^(g): j -> i` for
//! `1 <= g <= g_ij`, where `g_ij = |gcd(c_ij, c_ji)|` and
//! `f_ij = |c_ij| / g_ij`. The relations are
//!
//! * nilpotency: `eps_i^{c_i} = 0`,
//! * commutativity: `a_ij eps_i^{f_ij} = eps_j^{f_ji} a_ij`,
//! * mesh at `i`: `sum_j sum_g sum_f sgn(i,j) eps_i^{f_ij-1-f} a_ji a_ij eps_i^f = 0`.
//!
//! The commutativity relations are homogeneous for a grading (and the loop
//! powers compatible) exactly when `c_ij c_j = c_ji c_i`, i.e. when `C D` is
//! symmetric; the builder requires this.

use thiserror::Error;

use crate::algebra::Algebra;
use crate::linalg::rat;
use crate::quiver::{bound_quiver_algebra, Quiver, QuiverError, Relation, DEFAULT_LENGTH_CAP};
use crate::weyl::{gcd, lcm, CartanGcm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PreprojectiveError {
    #[error("symmetrizer must have {rank} positive entries")]
    BadSymmetrizer { rank: usize },
    #[error("C·D is not symmetric at ({i}, {j}): c_ij c_j = {left}, c_ji c_i = {right}")]
    IncompatibleSymmetrizer {
        i: usize,
        j: usize,
        left: i64,
        right: i64,
    },
    #[error("orientation violates {0}")]
    BadOrientation(&'static str),
    #[error("dimension depends on orientation: {0} vs {1}")]
    OrientationMismatch(usize, usize),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

/// Orientation with `(i, j)` for every `i < j` such that `c_ij < 0`.
pub fn default_orientation(c: &CartanGcm) -> Vec<(usize, usize)> {
    let n = c.rank();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if c.entry(i, j) < 0 {
                out.push((i, j));
            }
        }
    }
    out
}

pub fn opposite_orientation(omega: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = omega.iter().map(|&(i, j)| (j, i)).collect();
    out.sort_unstable();
    out
}

fn check_orientation(c: &CartanGcm, omega: &[(usize, usize)]) -> Result<(), PreprojectiveError> {
    let n = c.rank();
    if omega.iter().any(|&(i, j)| i >= n || j >= n || i == j) {
        return Err(PreprojectiveError::BadOrientation("vertex range"));
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let present = omega.contains(&(i, j)) || omega.contains(&(j, i));
            if present != (c.entry(i, j) < 0) {
                return Err(PreprojectiveError::BadOrientation("(A1)"));
            }
        }
    }
    let mut q = Quiver::new(n);
    for &(i, j) in omega {
        q.arrow(format!("{i}-{j}"), i, j);
    }
    if !q.is_acyclic() {
        return Err(PreprojectiveError::BadOrientation("(A2)"));
    }
    Ok(())
}

fn check_symmetrizer(c: &CartanGcm, d: &[i64]) -> Result<(), PreprojectiveError> {
    let n = c.rank();
    if d.len() != n || d.iter().any(|&x| x < 1) {
        return Err(PreprojectiveError::BadSymmetrizer { rank: n });
    }
    for i in 0..n {
        for j in 0..n {
            let left = c.entry(i, j) * d[j];
            let right = c.entry(j, i) * d[i];
            if left != right {
                return Err(PreprojectiveError::IncompatibleSymmetrizer {
                    i: i + 1,
                    j: j + 1,
                    left,
                    right,
                });
            }
        }
    }
    Ok(())
}

/// The double quiver with its relations.
pub fn preprojective_quiver(
    c: &CartanGcm,
    d: &[i64],
    omega: &[(usize, usize)],
) -> Result<(Quiver, Vec<Relation>), PreprojectiveError> {
    check_symmetrizer(c, d)?;
    check_orientation(c, omega)?;
    let n = c.rank();
    let l = d.iter().fold(1, |acc, &x| lcm(acc, x));
    let w: Vec<i64> = d.iter().map(|&x| l / x).collect();
    let g = |i: usize, j: usize| gcd(c.entry(i, j), c.entry(j, i));
    let f = |i: usize, j: usize| c.entry(i, j).abs() / g(i, j);
    let mut top = 0;
    for &(i, j) in omega {
        top = top.max(f(i, j) * w[i]);
    }
    let k = top + 2;

    let mut q = Quiver::new(n);
    let eps: Vec<usize> = (0..n)
        .map(|i| q.weighted_arrow(format!("eps{}", i + 1), i, i, w[i] as usize))
        .collect();
    // arrow[(i, j, g)] = a_ij^(g): j -> i
    let mut arrow = std::collections::BTreeMap::new();
    for &(i, j) in omega {
        let pair = (k - f(i, j) * w[i]) as usize;
        for gi in 0..g(i, j) as usize {
            let suffix = if g(i, j) > 1 {
                format!("_{}", gi + 1)
            } else {
                String::new()
            };
            let ij = q.weighted_arrow(format!("a{}{}{suffix}", i + 1, j + 1), j, i, 1);
            let ji = q.weighted_arrow(format!("a{}{}{suffix}", j + 1, i + 1), i, j, pair - 1);
            arrow.insert((i, j, gi), ij);
            arrow.insert((j, i, gi), ji);
        }
    }
    let power = |i: usize, p: i64| vec![eps[i]; p as usize];

    let mut rels = Vec::new();
    for i in 0..n {
        rels.push(Relation::monomial(power(i, d[i])));
    }
    for (&(i, j, _), &a) in &arrow {
        let mut left = vec![a];
        left.extend(power(i, f(i, j)));
        let mut right = power(j, f(j, i));
        right.push(a);
        rels.push(Relation::commutativity(left, right));
    }
    for i in 0..n {
        let mut terms = Vec::new();
        for j in 0..n {
            if i == j || c.entry(i, j) == 0 {
                continue;
            }
            let sign = if omega.contains(&(i, j)) { 1 } else { -1 };
            for gi in 0..g(i, j) as usize {
                for e in 0..f(i, j) {
                    let mut path = power(i, f(i, j) - 1 - e);
                    path.push(arrow[&(j, i, gi)]);
                    path.push(arrow[&(i, j, gi)]);
                    path.extend(power(i, e));
                    terms.push((rat(sign), path));
                }
            }
        }
        if !terms.is_empty() {
            rels.push(Relation { terms });
        }
    }
    Ok((q, rels))
}

pub fn preprojective(
    name: impl Into<String>,
    c: &CartanGcm,
    d: &[i64],
    omega: &[(usize, usize)],
    length_cap: usize,
) -> Result<Algebra, PreprojectiveError> {
    let (q, rels) = preprojective_quiver(c, d, omega)?;
    Ok(bound_quiver_algebra(name, &q, &rels, length_cap)?)
}

/// Builds with the default orientation and checks that the opposite
/// orientation gives an algebra of the same dimension.
pub fn preprojective_checked(
    name: impl Into<String>,
    c: &CartanGcm,
    d: &[i64],
) -> Result<Algebra, PreprojectiveError> {
    let omega = default_orientation(c);
    let alg = preprojective(name, c, d, &omega, DEFAULT_LENGTH_CAP)?;
    let other = preprojective("cross-check", c, d, &opposite_orientation(&omega), DEFAULT_LENGTH_CAP)?;
    if other.dim() != alg.dim() {
        return Err(PreprojectiveError::OrientationMismatch(alg.dim(), other.dim()));
    }
    Ok(alg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_a2() {
        let c = CartanGcm::of_type("A2").unwrap();
        let a = preprojective_checked("pi(A2)", &c, &[1, 1]).unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(a.labels(), &["e1", "e2", "a12", "a21"]);
        a.verify().unwrap();
    }

    #[test]
    fn classical_dimensions() {
        let a1 = preprojective_checked("pi(A1)", &CartanGcm::of_type("A1").unwrap(), &[1]).unwrap();
        assert_eq!(a1.dim(), 1);
        let a3 = preprojective_checked("pi(A3)", &CartanGcm::of_type("A3").unwrap(), &[1, 1, 1]).unwrap();
        assert_eq!(a3.dim(), 10);
        a3.verify().unwrap();
    }

    #[test]
    fn affine_type_exceeds_cap() {
        let c = CartanGcm::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        let err = preprojective("affine", &c, &[1, 1], &default_orientation(&c), 12).unwrap_err();
        assert!(matches!(err, PreprojectiveError::Quiver(QuiverError::CapExceeded { .. })));
    }

    #[test]
    fn symmetrizer_side_is_checked() {
        let c = CartanGcm::new(vec![vec![2, -1], vec![-2, 2]]).unwrap();
        let err = preprojective("b2", &c, &[2, 1], &default_orientation(&c), 64).unwrap_err();
        assert!(matches!(err, PreprojectiveError::IncompatibleSymmetrizer { .. }));
        let ok = preprojective_checked("b2", &c, &[1, 2]).unwrap();
        ok.verify().unwrap();
    }

    #[test]
    fn orientation_axioms() {
        let c = CartanGcm::of_type("A3").unwrap();
        assert_eq!(
            preprojective("x", &c, &[1, 1, 1], &[(0, 1)], 64).unwrap_err(),
            PreprojectiveError::BadOrientation("(A1)")
        );
    }
}
