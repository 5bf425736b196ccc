use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{rat_to_int, Int, LinalgError, Rat, RatMatrix};

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Serializes as a row-major array of arrays of JSON integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    let mut acc = Int::from(0);
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![Int::from(0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Int::from(1);
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let owned: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        Self::from_i64_rows(&owned).expect("ragged rows")
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(LinalgError::DimensionMismatch {
                    context: "ragged rows",
                    left: c,
                    right: row.len(),
                });
            }
            data.extend(row.iter().map(|&x| Int::from(x)));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data,
        })
    }

    /// Matrix whose columns are the given integer vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Int>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, &x) in entries.iter().enumerate() {
            m[(i, i)] = Int::from(x);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Int>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| i64::try_from(x).expect("integer entry exceeds i64"))
                    .collect()
            })
            .collect()
    }

    pub fn get_i64(&self, i: usize, j: usize) -> i64 {
        i64::try_from(&self[(i, j)]).expect("integer entry exceeds i64")
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn matmul(&self, other: &IntMatrix) -> Result<IntMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                context: "matmul",
                left: self.cols,
                right: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if *a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if *b != 0 {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Product of a chain of matrices, `None` for an empty chain.
    pub fn product<'a>(mats: impl IntoIterator<Item = &'a IntMatrix>) -> Result<Option<IntMatrix>, LinalgError> {
        let mut acc: Option<IntMatrix> = None;
        for m in mats {
            acc = Some(match acc {
                None => m.clone(),
                Some(a) => a.matmul(m)?,
            });
        }
        Ok(acc)
    }

    pub fn matvec(&self, v: &[Int]) -> Result<Vec<Int>, LinalgError> {
        if self.cols != v.len() {
            return Err(LinalgError::DimensionMismatch {
                context: "matvec",
                left: self.cols,
                right: v.len(),
            });
        }
        Ok((0..self.rows).map(|i| super::dot(self.row(i), v)).collect())
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                context: "add",
                left: self.rows * self.cols,
                right: other.rows * other.cols,
            });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x.clone()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| *x == 0)
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix::from_vec(
            self.rows,
            self.cols,
            self.data.iter().map(Rat::from).collect(),
        )
    }

    /// Converts back from a rational matrix; fails if an entry is not integral.
    pub fn from_rat(m: &RatMatrix) -> Option<IntMatrix> {
        let mut out = Self::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out[(i, j)] = rat_to_int(&m[(i, j)])?;
            }
        }
        Some(out)
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Result<Int, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Int::from(1));
        }
        let mut m = self.data.clone();
        let mut sign = 1i32;
        let mut prev = Int::from(1);
        for k in 0..n - 1 {
            if m[k * n + k] == 0 {
                let Some(p) = (k + 1..n).find(|&i| m[i * n + k] != 0) else {
                    return Ok(Int::from(0));
                };
                for j in 0..n {
                    m.swap(k * n + j, p * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                    m[i * n + j] = v / &prev;
                }
            }
            prev = m[k * n + k].clone();
        }
        let d = m[n * n - 1].clone();
        Ok(if sign < 0 { -d } else { d })
    }

    pub fn inverse(&self) -> Result<RatMatrix, LinalgError> {
        self.to_rat().inverse()
    }

    /// Integer inverse; errors unless the determinant is a unit.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix, LinalgError> {
        let inv = self.inverse()?;
        IntMatrix::from_rat(&inv).ok_or(LinalgError::NotUnimodular)
    }

    /// Every row is entirely nonnegative or entirely nonpositive.
    pub fn is_row_sign_coherent(&self) -> bool {
        (0..self.rows).all(|i| sign_coherent(self.row(i).iter()))
    }

    pub fn is_column_sign_coherent(&self) -> bool {
        (0..self.cols).all(|j| sign_coherent((0..self.rows).map(|i| &self[(i, j)])))
    }
}

fn sign_coherent<'a>(mut it: impl Iterator<Item = &'a Int> + Clone) -> bool {
    let it2 = it.clone();
    it.all(|x| *x >= 0) || it2.into_iter().all(|x| *x <= 0)
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut row = Vec::with_capacity(self.cols);
            for x in self.row(i) {
                row.push(i64::try_from(x).map_err(|_| {
                    serde::ser::Error::custom("matrix entry does not fit in 64 bits")
                })?);
            }
            rows.push(row);
        }
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<i64>>::deserialize(d)?;
        IntMatrix::from_i64_rows(&rows).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_small_cases() {
        assert_eq!(IntMatrix::identity(3).det().unwrap(), 1);
        assert_eq!(IntMatrix::from_i64(&[&[1, 1], &[-1, 0]]).det().unwrap(), 1);
        assert_eq!(IntMatrix::from_i64(&[&[0, 1], &[1, 0]]).det().unwrap(), -1);
        assert_eq!(IntMatrix::from_i64(&[&[1, 2], &[2, 4]]).det().unwrap(), 0);
        let m = IntMatrix::from_i64(&[&[0, 2, 1], &[3, 0, 1], &[1, 1, 0]]);
        // 0*(0-1) - 2*(0-1) + 1*(3-0) = 5
        assert_eq!(m.det().unwrap(), 5);
    }

    #[test]
    fn unimodular_inverse() {
        let m = IntMatrix::from_i64(&[&[1, 1], &[-1, 0]]);
        assert_eq!(
            m.inverse_unimodular().unwrap(),
            IntMatrix::from_i64(&[&[0, -1], &[1, 1]])
        );
        let m = IntMatrix::from_i64(&[&[2, 0], &[0, 1]]);
        assert_eq!(m.inverse_unimodular(), Err(LinalgError::NotUnimodular));
    }

    #[test]
    fn sign_coherence() {
        let g = IntMatrix::from_i64(&[&[1, 1], &[0, -1]]);
        assert!(g.is_row_sign_coherent());
        assert!(!g.is_column_sign_coherent());
    }

    #[test]
    fn json_shape() {
        let m = IntMatrix::from_i64(&[&[0, -1], &[1, 0]]);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, "[[0,-1],[1,0]]");
        let back: IntMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
    }
}
