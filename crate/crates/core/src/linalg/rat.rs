use std::fmt;

use super::{rat, LinalgError, Rat};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

/// Reduced row echelon form together with rank and pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: RatMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![rat(0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = rat(1);
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rat>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length must be rows*cols");
        RatMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<Rat>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().cloned());
        }
        RatMatrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let rows: Vec<Vec<Rat>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Rat>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
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

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Rat>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| *x == 0)
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn matmul(&self, other: &RatMatrix) -> Result<RatMatrix, LinalgError> {
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

    pub fn matvec(&self, v: &[Rat]) -> Result<Vec<Rat>, LinalgError> {
        if self.cols != v.len() {
            return Err(LinalgError::DimensionMismatch {
                context: "matvec",
                left: self.cols,
                right: v.len(),
            });
        }
        let mut out = vec![rat(0); self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            for (a, b) in self.row(i).iter().zip(v) {
                if *a != 0 && *b != 0 {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &RatMatrix) -> Result<RatMatrix, LinalgError> {
        self.check_same_shape(other, "add")?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(RatMatrix::from_vec(self.rows, self.cols, data))
    }

    pub fn sub(&self, other: &RatMatrix) -> Result<RatMatrix, LinalgError> {
        self.check_same_shape(other, "sub")?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(RatMatrix::from_vec(self.rows, self.cols, data))
    }

    pub fn scale(&self, s: &Rat) -> RatMatrix {
        let data = self.data.iter().map(|a| a * s).collect();
        RatMatrix::from_vec(self.rows, self.cols, data)
    }

    fn check_same_shape(&self, other: &RatMatrix, context: &'static str) -> Result<(), LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                context,
                left: self.rows * self.cols,
                right: other.rows * other.cols,
            });
        }
        Ok(())
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &RatMatrix) -> Result<RatMatrix, LinalgError> {
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(LinalgError::DimensionMismatch {
                context: "vstack",
                left: self.cols,
                right: other.cols,
            });
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(RatMatrix::from_vec(self.rows + other.rows, cols, data))
    }

    /// Submatrix with the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> RatMatrix {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out[(a, b)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m[(i, c)] != 0) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = rat(1) / &m[(r, c)];
            for j in c..m.cols {
                if m[(r, j)] != 0 {
                    let v = &m[(r, j)] * &inv;
                    m[(r, j)] = v;
                }
            }
            let pivot_row: Vec<(usize, Rat)> = (c..m.cols)
                .filter(|&j| m[(r, j)] != 0)
                .map(|j| (j, m[(r, j)].clone()))
                .collect();
            for i in 0..m.rows {
                if i == r || m[(i, c)] == 0 {
                    continue;
                }
                let f = m[(i, c)].clone();
                for (j, v) in &pivot_row {
                    let d = &f * v;
                    m.data[i * m.cols + j] -= d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let rref = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &rref.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut v = vec![rat(0); self.cols];
            v[f] = rat(1);
            for (r, &p) in rref.pivots.iter().enumerate() {
                let x = &rref.matrix[(r, f)];
                if *x != 0 {
                    v[p] = -x.clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Some solution of `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Rat]) -> Result<Option<Vec<Rat>>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch {
                context: "solve",
                left: self.rows,
                right: b.len(),
            });
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let rref = aug.rref();
        if rref.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![rat(0); self.cols];
        for (r, &p) in rref.pivots.iter().enumerate() {
            x[p] = rref.matrix[(r, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<RatMatrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = rat(1);
        }
        let rref = aug.rref();
        if rref.rank < n || rref.pivots[n - 1] != n - 1 {
            return Err(LinalgError::Singular);
        }
        let rows: Vec<usize> = (0..n).collect();
        let cols: Vec<usize> = (n..2 * n).collect();
        Ok(rref.matrix.select(&rows, &cols))
    }

    pub fn det(&self) -> Result<Rat, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut m = self.clone();
        let n = self.rows;
        let mut det = rat(1);
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| m[(i, c)] != 0) else {
                return Ok(rat(0));
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det *= &piv;
            for i in c + 1..n {
                if m[(i, c)] == 0 {
                    continue;
                }
                let f = &m[(i, c)] / &piv;
                for j in c..n {
                    let d = &f * &m[(c, j)];
                    m.data[i * n + j] -= d;
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for RatMatrix {
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_of_identity_is_identity() {
        let r = RatMatrix::identity(2).rref();
        assert_eq!(r.matrix, RatMatrix::identity(2));
        assert_eq!(r.rank, 2);
    }

    #[test]
    fn rref_dependent_rows() {
        let r = RatMatrix::from_i64(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r.matrix, RatMatrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn rref_needs_row_swap() {
        let r = RatMatrix::from_i64(&[&[0, 1], &[1, 0]]).rref();
        assert_eq!(r.matrix, RatMatrix::identity(2));
        assert_eq!(r.rank, 2);
    }

    #[test]
    fn kernels() {
        assert!(RatMatrix::identity(3).kernel_basis().is_empty());
        assert_eq!(RatMatrix::zeros(2, 2).kernel_basis().len(), 2);
        let k = RatMatrix::from_i64(&[&[1, 1]]).kernel_basis();
        assert_eq!(k, vec![vec![rat(-1), rat(1)]]);
    }

    #[test]
    fn solve_cases() {
        let b = vec![rat(3), rat(-2)];
        assert_eq!(RatMatrix::identity(2).solve(&b).unwrap(), Some(b.clone()));

        let m = RatMatrix::from_i64(&[&[1, 1]]);
        let x = m.solve(&[rat(2)]).unwrap().unwrap();
        assert_eq!(m.matvec(&x).unwrap(), vec![rat(2)]);

        let m = RatMatrix::from_i64(&[&[1], &[1]]);
        assert_eq!(m.solve(&[rat(1), rat(2)]).unwrap(), None);

        assert!(matches!(
            m.solve(&[rat(1)]),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn inverse_and_det() {
        let m = RatMatrix::from_i64(&[&[1, 1], &[-1, 0]]);
        assert_eq!(m.det().unwrap(), rat(1));
        let inv = m.inverse().unwrap();
        assert_eq!(inv, RatMatrix::from_i64(&[&[0, -1], &[1, 1]]));
        assert_eq!(inv.matmul(&m).unwrap(), RatMatrix::identity(2));
        let singular = RatMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(singular.inverse(), Err(LinalgError::Singular));
    }
}
