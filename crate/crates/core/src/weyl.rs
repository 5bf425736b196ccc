//! Generalized Cartan matrices and the geometric representation of their
//! Weyl groups.
//!
//! Vertex indices and word letters are zero-based in this module.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{Int, IntMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("not a generalized Cartan matrix: {0}")]
    NotGcm(String),
    #[error("Cartan matrix is not symmetrizable")]
    NotSymmetrizable,
    #[error("Cartan matrix is not of Dynkin type")]
    NotDynkin,
    #[error("letter {letter} out of range for rank {rank}")]
    LetterOutOfRange { letter: usize, rank: usize },
    #[error("group enumeration limited to rank {max_rank}, got rank {rank}")]
    TooLarge { rank: usize, max_rank: usize },
    #[error("unknown Cartan type {0}")]
    UnknownType(String),
}

/// A generalized Cartan matrix: `c_ii = 2`, `c_ij <= 0` off the diagonal and
/// `c_ij = 0` exactly when `c_ji = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct CartanGcm {
    entries: Vec<Vec<i64>>,
}

impl TryFrom<Vec<Vec<i64>>> for CartanGcm {
    type Error = WeylError;
    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self, WeylError> {
        CartanGcm::new(rows)
    }
}

impl From<CartanGcm> for Vec<Vec<i64>> {
    fn from(c: CartanGcm) -> Self {
        c.entries
    }
}

impl CartanGcm {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self, WeylError> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(WeylError::NotGcm("matrix is not square".into()));
            }
            if row[i] != 2 {
                return Err(WeylError::NotGcm(format!("diagonal entry {} is not 2", i + 1)));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if row[j] > 0 {
                    return Err(WeylError::NotGcm(format!(
                        "entry ({}, {}) is positive",
                        i + 1,
                        j + 1
                    )));
                }
                if (row[j] == 0) != (entries[j][i] == 0) {
                    return Err(WeylError::NotGcm(format!(
                        "zero pattern not symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(CartanGcm { entries })
    }

    /// Named finite types: `A1..`, `B2..`, `C2..`, `D4..`, `G2`.
    ///
    /// `B_n` has the short simple root last, with `c_{n,n-1} = -2`.
    pub fn of_type(name: &str) -> Result<Self, WeylError> {
        let err = || WeylError::UnknownType(name.to_string());
        let (letter, rank) = name.split_at(1);
        let n: usize = rank.parse().map_err(|_| err())?;
        let mut c = vec![vec![0i64; n]; n];
        for i in 0..n {
            c[i][i] = 2;
        }
        let chain = |c: &mut Vec<Vec<i64>>, upto: usize| {
            for i in 0..upto.saturating_sub(1) {
                c[i][i + 1] = -1;
                c[i + 1][i] = -1;
            }
        };
        match (letter, n) {
            ("A", n) if n >= 1 => chain(&mut c, n),
            ("B", n) if n >= 2 => {
                chain(&mut c, n);
                c[n - 1][n - 2] = -2;
            }
            ("C", n) if n >= 2 => {
                chain(&mut c, n);
                c[n - 2][n - 1] = -2;
            }
            ("D", n) if n >= 4 => {
                chain(&mut c, n - 1);
                c[n - 3][n - 1] = -1;
                c[n - 1][n - 3] = -1;
            }
            ("G", 2) => {
                c[0][1] = -1;
                c[1][0] = -3;
            }
            _ => return Err(err()),
        }
        CartanGcm::new(c)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_i64_rows(&self.entries).expect("square by construction")
    }

    pub fn transpose(&self) -> CartanGcm {
        let n = self.rank();
        let rows = (0..n).map(|i| (0..n).map(|j| self.entries[j][i]).collect()).collect();
        CartanGcm { entries: rows }
    }

    /// Minimal positive `c_1..c_n` with `c_i c_ij = c_j c_ji`, i.e. with
    /// `diag(c) C` symmetric, found by propagation over the Coxeter graph.
    pub fn find_symmetrizer(&self) -> Result<Vec<i64>, WeylError> {
        let n = self.rank();
        // Rational weights num/den per vertex, normalized per component.
        let mut weight: Vec<Option<(i64, i64)>> = vec![None; n];
        let mut out = vec![0i64; n];
        for root in 0..n {
            if weight[root].is_some() {
                continue;
            }
            weight[root] = Some((1, 1));
            let mut component = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(i) = queue.pop_front() {
                let (p, q) = weight[i].expect("visited");
                for j in 0..n {
                    if i == j || self.entries[i][j] == 0 {
                        continue;
                    }
                    // c_j = c_i * c_ij / c_ji
                    let num = p * self.entries[i][j];
                    let den = q * self.entries[j][i];
                    let g = gcd(num, den);
                    let cand = (num / g * den.signum(), (den / g).abs());
                    match weight[j] {
                        None => {
                            weight[j] = Some(cand);
                            component.push(j);
                            queue.push_back(j);
                        }
                        Some(w) if w.0 * cand.1 != cand.0 * w.1 => {
                            return Err(WeylError::NotSymmetrizable)
                        }
                        Some(_) => {}
                    }
                }
            }
            let l = component
                .iter()
                .fold(1i64, |acc, &v| lcm(acc, weight[v].expect("set").1));
            let scaled: Vec<i64> = component
                .iter()
                .map(|&v| {
                    let (p, q) = weight[v].expect("set");
                    p * (l / q)
                })
                .collect();
            let g = scaled.iter().fold(0i64, |acc, &x| gcd(acc, x));
            for (&v, x) in component.iter().zip(scaled) {
                out[v] = x / g;
            }
        }
        Ok(out)
    }

    /// Symmetrized matrix `diag(c) C`.
    pub fn symmetrized(&self) -> Result<IntMatrix, WeylError> {
        let d = self.find_symmetrizer()?;
        let n = self.rank();
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| d[i] * self.entries[i][j]).collect())
            .collect();
        Ok(IntMatrix::from_i64_rows(&rows).expect("square"))
    }

    /// Dynkin type test: the symmetrized matrix is positive definite,
    /// checked through its leading principal minors.
    pub fn is_dynkin(&self) -> bool {
        let Ok(s) = self.symmetrized() else {
            return false;
        };
        let n = self.rank();
        (1..=n).all(|k| {
            let rows: Vec<Vec<i64>> = (0..k)
                .map(|i| (0..k).map(|j| s.get_i64(i, j)).collect())
                .collect();
            IntMatrix::from_i64_rows(&rows)
                .expect("square")
                .det()
                .expect("square")
                > 0
        })
    }

    fn check_word(&self, w: &[usize]) -> Result<(), WeylError> {
        match w.iter().find(|&&i| i >= self.rank()) {
            Some(&letter) => Err(WeylError::LetterOutOfRange {
                letter,
                rank: self.rank(),
            }),
            None => Ok(()),
        }
    }

    /// `R_i`: identity except row `i`, which is `(-c_i1, ..., -1, ..., -c_in)`.
    /// Column `j` holds the coordinates of `s_i(alpha_j) = alpha_j - c_ij alpha_i`.
    pub fn reflection(&self, i: usize) -> IntMatrix {
        let n = self.rank();
        let mut r = IntMatrix::identity(n);
        for j in 0..n {
            r[(i, j)] = Int::from(-self.entries[i][j]);
        }
        r[(i, i)] = Int::from(-1);
        r
    }

    /// `Sigma_i`, the matrix of the contragredient action on the dual basis:
    /// `s_i` fixes `alpha_l^*` for `l != i` and sends `alpha_i^*` to
    /// `alpha_i^* - sum_j c_ij alpha_j^*`.
    pub fn sigma(&self, i: usize) -> IntMatrix {
        let n = self.rank();
        let mut columns: Vec<Vec<Int>> = Vec::with_capacity(n);
        for l in 0..n {
            let mut col: Vec<Int> = (0..n).map(|k| Int::from(i64::from(k == l))).collect();
            if l == i {
                for (j, x) in col.iter_mut().enumerate() {
                    *x -= Int::from(self.entries[i][j]);
                }
            }
            columns.push(col);
        }
        IntMatrix::from_columns(n, &columns)
    }

    /// `R_w = R_{i_1} ... R_{i_k}`.
    pub fn word_matrix(&self, w: &[usize]) -> Result<IntMatrix, WeylError> {
        self.check_word(w)?;
        let mut m = IntMatrix::identity(self.rank());
        for &i in w {
            m = m.matmul(&self.reflection(i)).expect("square");
        }
        Ok(m)
    }

    /// `Sigma_w = Sigma_{i_1} ... Sigma_{i_k}`.
    pub fn sigma_word(&self, w: &[usize]) -> Result<IntMatrix, WeylError> {
        self.check_word(w)?;
        let mut m = IntMatrix::identity(self.rank());
        for &i in w {
            m = m.matmul(&self.sigma(i)).expect("square");
        }
        Ok(m)
    }

    /// Root criterion: every prefix `u` followed by `s_i` must send
    /// `alpha_i` to a positive root under `u`.
    pub fn is_reduced(&self, w: &[usize]) -> Result<bool, WeylError> {
        self.check_word(w)?;
        let mut u = IntMatrix::identity(self.rank());
        for &i in w {
            if !is_nonnegative(&u.column(i)) {
                return Ok(false);
            }
            u = u.matmul(&self.reflection(i)).expect("square");
        }
        Ok(true)
    }

    /// Deletes letter pairs by the exchange condition until the word is
    /// reduced. The result represents the same group element.
    pub fn reduce(&self, w: &[usize]) -> Result<Vec<usize>, WeylError> {
        self.check_word(w)?;
        let mut word = w.to_vec();
        'outer: loop {
            let mut u = IntMatrix::identity(self.rank());
            for t in 0..word.len() {
                let i = word[t];
                if !is_nonnegative(&u.column(i)) {
                    let mut beta: Vec<Int> = unit(self.rank(), i);
                    for r in (0..t).rev() {
                        beta = self.reflection(word[r]).matvec(&beta).expect("square");
                        if is_nonpositive(&beta) {
                            word.remove(t);
                            word.remove(r);
                            continue 'outer;
                        }
                    }
                    unreachable!("exchange condition always finds a deletion");
                }
                u = u.matmul(&self.reflection(i)).expect("square");
            }
            return Ok(word);
        }
    }

    /// Longest element by greedy right multiplication.
    pub fn longest_element(&self) -> Result<Vec<usize>, WeylError> {
        if !self.is_dynkin() {
            return Err(WeylError::NotDynkin);
        }
        let mut word = Vec::new();
        let mut m = IntMatrix::identity(self.rank());
        loop {
            let next = (0..self.rank()).find(|&i| is_nonnegative(&m.column(i)));
            match next {
                Some(i) => {
                    word.push(i);
                    m = m.matmul(&self.reflection(i)).expect("square");
                }
                None => return Ok(word),
            }
        }
    }

    /// All group elements, breadth first, each with a shortest word.
    pub fn enumerate_group(&self) -> Result<Vec<(IntMatrix, Vec<usize>)>, WeylError> {
        const MAX_RANK: usize = 4;
        if self.rank() > MAX_RANK {
            return Err(WeylError::TooLarge {
                rank: self.rank(),
                max_rank: MAX_RANK,
            });
        }
        if !self.is_dynkin() {
            return Err(WeylError::NotDynkin);
        }
        let id = IntMatrix::identity(self.rank());
        let mut seen: HashMap<IntMatrix, usize> = HashMap::from([(id.clone(), 0)]);
        let mut out = vec![(id, Vec::new())];
        let mut head = 0;
        while head < out.len() {
            let (m, w) = out[head].clone();
            head += 1;
            for i in 0..self.rank() {
                let next = m.matmul(&self.reflection(i)).expect("square");
                if !seen.contains_key(&next) {
                    seen.insert(next.clone(), out.len());
                    let mut w2 = w.clone();
                    w2.push(i);
                    out.push((next, w2));
                }
            }
        }
        Ok(out)
    }

    /// Order of `s_i s_j` read off from `c_ij c_ji`.
    pub fn braid_order(&self, i: usize, j: usize) -> Option<usize> {
        if i == j {
            return Some(1);
        }
        match self.entries[i][j] * self.entries[j][i] {
            0 => Some(2),
            1 => Some(3),
            2 => Some(4),
            3 => Some(6),
            _ => None,
        }
    }
}

impl fmt::Display for CartanGcm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.entries)
    }
}

/// Inverse word: letters reversed.
pub fn inverse_word(w: &[usize]) -> Vec<usize> {
    w.iter().rev().copied().collect()
}

fn unit(n: usize, i: usize) -> Vec<Int> {
    (0..n).map(|k| Int::from(i64::from(k == i))).collect()
}

fn is_nonnegative(v: &[Int]) -> bool {
    v.iter().all(|x| *x >= 0)
}

fn is_nonpositive(v: &[Int]) -> bool {
    v.iter().all(|x| *x <= 0)
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        0
    } else {
        (a / gcd(a, b) * b).abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> CartanGcm {
        CartanGcm::of_type("A2").unwrap()
    }

    fn b2() -> CartanGcm {
        CartanGcm::new(vec![vec![2, -1], vec![-2, 2]]).unwrap()
    }

    #[test]
    fn reflection_matrices() {
        assert_eq!(a2().reflection(0), IntMatrix::from_i64(&[&[-1, 1], &[0, 1]]));
        let b = b2();
        assert_eq!(b.reflection(0).row(0), &[Int::from(-1), Int::from(1)]);
        assert_eq!(b.reflection(1).row(1), &[Int::from(2), Int::from(-1)]);
        for c in [a2(), b] {
            for i in 0..2 {
                let r = c.reflection(i);
                assert_eq!(r.matmul(&r).unwrap(), IntMatrix::identity(2));
                assert_eq!(c.sigma(i), r.transpose());
            }
        }
    }

    #[test]
    fn braid_relation_in_a2() {
        let c = a2();
        assert_eq!(c.word_matrix(&[0, 1, 0]).unwrap(), c.word_matrix(&[1, 0, 1]).unwrap());
        assert_eq!(c.word_matrix(&[]).unwrap(), IntMatrix::identity(2));
    }

    #[test]
    fn reduction() {
        let c = a2();
        assert_eq!(c.reduce(&[0, 0]).unwrap(), Vec::<usize>::new());
        let r = c.reduce(&[0, 1, 0, 1]).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(c.word_matrix(&r).unwrap(), c.word_matrix(&[0, 1, 0, 1]).unwrap());
        assert_eq!(c.reduce(&[0, 1, 0]).unwrap(), vec![0, 1, 0]);
        assert!(!c.is_reduced(&[0, 1, 0, 1]).unwrap());
    }

    #[test]
    fn longest_elements() {
        assert_eq!(CartanGcm::of_type("A1").unwrap().longest_element().unwrap(), vec![0]);
        let c = a2();
        let w0 = c.longest_element().unwrap();
        assert_eq!(w0.len(), 3);
        assert_eq!(c.word_matrix(&w0).unwrap(), IntMatrix::from_i64(&[&[0, -1], &[-1, 0]]));
        let b = b2();
        let w0 = b.longest_element().unwrap();
        assert_eq!(w0.len(), 4);
        assert_eq!(b.word_matrix(&w0).unwrap(), IntMatrix::identity(2).neg());
    }

    #[test]
    fn group_orders() {
        let sizes: Vec<usize> = ["A1", "A2", "B2", "A3", "G2", "D4"]
            .iter()
            .map(|t| CartanGcm::of_type(t).unwrap().enumerate_group().unwrap().len())
            .collect();
        assert_eq!(sizes, vec![2, 6, 8, 24, 12, 192]);
    }

    #[test]
    fn symmetrizers() {
        assert_eq!(b2().find_symmetrizer().unwrap(), vec![2, 1]);
        assert_eq!(a2().find_symmetrizer().unwrap(), vec![1, 1]);
        assert_eq!(CartanGcm::of_type("G2").unwrap().find_symmetrizer().unwrap(), vec![3, 1]);
        let affine = CartanGcm::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        assert!(!affine.is_dynkin());
        assert_eq!(affine.longest_element(), Err(WeylError::NotDynkin));
    }

    #[test]
    fn invalid_gcm() {
        assert!(CartanGcm::new(vec![vec![2, 1], vec![1, 2]]).is_err());
        assert!(CartanGcm::new(vec![vec![2, -1], vec![0, 2]]).is_err());
        assert!(CartanGcm::new(vec![vec![1]]).is_err());
    }
}
