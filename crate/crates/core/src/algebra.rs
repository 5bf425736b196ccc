//! Finite-dimensional basic algebras given by structure constants.
//!
//! Every algebra here is basic: the first `n` basis vectors are the vertex
//! idempotents `e_1, ..., e_n` and the remaining ones span the Jacobson
//! radical. Each basis vector `b` is vertex-homogeneous, `b = e_s b e_t`,
//! where `(s, t)` is recorded as its (source, target) pair. Paths compose
//! left to right, so an arrow `a: i -> j` equals `e_i a e_j`.

use std::sync::{Arc, OnceLock, Weak};

use thiserror::Error;

use crate::linalg::{rat, Rat, RatMatrix};

/// Sparse coordinate vector: sorted `(basis index, nonzero coefficient)` pairs.
pub type Sparse = Vec<(usize, Rat)>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("structure table has {found} entries, expected {expected}")]
    TableShape { expected: usize, found: usize },
    #[error("multiplication is not associative on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("idempotent axiom fails for e{0} e{1}")]
    Idempotents(usize, usize),
    #[error("product of basis elements {0} and {1} violates the vertex grading")]
    Grading(usize, usize),
    #[error("basis element {0} is neither left nor right unital for its vertices")]
    Unit(usize),
    #[error("radical is not nilpotent")]
    NotNilpotent,
    #[error("radical basis does not span a two-sided ideal (product of {0} and {1})")]
    RadicalNotIdeal(usize, usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("trace-form radical failed the nilpotency check")]
    TraceRadical,
}

/// A basic finite-dimensional algebra over the rationals.
#[derive(Debug)]
pub struct Algebra {
    name: String,
    vertices: usize,
    labels: Vec<String>,
    ends: Vec<(usize, usize)>,
    table: Vec<Sparse>,
    generators: Vec<usize>,
    expansions: Vec<Vec<(Rat, Vec<usize>)>>,
    opposite: OnceLock<Arc<Algebra>>,
    opposite_of: Option<Weak<Algebra>>,
}

impl Algebra {
    /// Builds an algebra from its multiplication table.
    ///
    /// `table[i * dim + j]` holds the coordinates of `b_i b_j`. Basis indices
    /// `0..vertices` must be the idempotents, the rest a radical basis.
    /// `expansions` optionally writes each radical basis element as a linear
    /// combination of words in the generators (indices into the generator
    /// list); it is computed when absent.
    pub fn from_table(
        name: impl Into<String>,
        vertices: usize,
        labels: Vec<String>,
        ends: Vec<(usize, usize)>,
        table: Vec<Sparse>,
        expansions: Option<(Vec<usize>, Vec<Vec<(Rat, Vec<usize>)>>)>,
    ) -> Result<Self, AlgebraError> {
        let dim = labels.len();
        if table.len() != dim * dim || ends.len() != dim {
            return Err(AlgebraError::TableShape {
                expected: dim * dim,
                found: table.len(),
            });
        }
        let mut alg = Algebra {
            name: name.into(),
            vertices,
            labels,
            ends,
            table,
            generators: Vec::new(),
            expansions: Vec::new(),
            opposite: OnceLock::new(),
            opposite_of: None,
        };
        alg.check_grading()?;
        match expansions {
            Some((gens, exps)) => {
                alg.generators = gens;
                alg.expansions = exps;
            }
            None => {
                alg.generators = alg.compute_generators();
                alg.expansions = alg.compute_expansions()?;
            }
        }
        Ok(alg)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Number of vertices `n`.
    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, b: usize) -> &str {
        &self.labels[b]
    }

    /// (source, target) of basis element `b`, zero-based.
    pub fn ends(&self, b: usize) -> (usize, usize) {
        self.ends[b]
    }

    pub fn idempotent(&self, v: usize) -> usize {
        v
    }

    pub fn radical_basis(&self) -> std::ops::Range<usize> {
        self.vertices..self.dim()
    }

    /// Radical basis elements spanning a complement of rad^2 in rad.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Radical basis element `b` as a combination of generator words.
    pub fn expansion(&self, b: usize) -> &[(Rat, Vec<usize>)] {
        &self.expansions[b - self.vertices]
    }

    /// Coordinates of `b_i b_j`.
    pub fn product(&self, i: usize, j: usize) -> &Sparse {
        &self.table[i * self.dim() + j]
    }

    /// Basis indices with the given source vertex, in basis order.
    pub fn basis_from(&self, s: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.ends[b].0 == s).collect()
    }

    /// Basis indices with the given target vertex, in basis order.
    pub fn basis_to(&self, t: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.ends[b].1 == t).collect()
    }

    /// Basis of `e_s A e_t`.
    pub fn basis_between(&self, s: usize, t: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.ends[b] == (s, t)).collect()
    }

    pub fn unit(&self) -> Vec<Rat> {
        let mut v = vec![rat(0); self.dim()];
        for i in 0..self.vertices {
            v[i] = rat(1);
        }
        v
    }

    pub fn basis_vector(&self, b: usize) -> Vec<Rat> {
        let mut v = vec![rat(0); self.dim()];
        v[b] = rat(1);
        v
    }

    /// Bilinear product of two coordinate vectors.
    pub fn multiply(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let dim = self.dim();
        let mut out = vec![rat(0); dim];
        for (i, xi) in x.iter().enumerate() {
            if *xi == 0 {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if *yj == 0 {
                    continue;
                }
                let c = xi * yj;
                for (k, v) in &self.table[i * dim + j] {
                    out[*k] += &c * v;
                }
            }
        }
        out
    }

    /// Dimension of `e_s A e_t`.
    pub fn dim_between(&self, s: usize, t: usize) -> usize {
        self.ends.iter().filter(|&&e| e == (s, t)).count()
    }

    /// Cartan data: dimension vector of `P(i) = e_i A`.
    pub fn projective_dim_vector(&self, i: usize) -> Vec<usize> {
        (0..self.vertices).map(|j| self.dim_between(i, j)).collect()
    }

    /// The opposite algebra, with the same basis and reversed products.
    /// Taking it twice returns the original algebra.
    pub fn opposite(self: &Arc<Self>) -> Arc<Algebra> {
        if let Some(orig) = self.opposite_of.as_ref().and_then(Weak::upgrade) {
            return orig;
        }
        self.opposite
            .get_or_init(|| {
                let dim = self.dim();
                let mut table = Vec::with_capacity(dim * dim);
                for i in 0..dim {
                    for j in 0..dim {
                        table.push(self.table[j * dim + i].clone());
                    }
                }
                let ends = self.ends.iter().map(|&(s, t)| (t, s)).collect();
                let expansions = self
                    .expansions
                    .iter()
                    .map(|e| {
                        e.iter()
                            .map(|(c, w)| (c.clone(), w.iter().rev().copied().collect()))
                            .collect()
                    })
                    .collect();
                let name = match self.name.strip_suffix("^op") {
                    Some(base) => base.to_string(),
                    None => format!("{}^op", self.name),
                };
                Arc::new(Algebra {
                    name,
                    vertices: self.vertices,
                    labels: self.labels.clone(),
                    ends,
                    table,
                    generators: self.generators.clone(),
                    expansions,
                    opposite: OnceLock::new(),
                    opposite_of: Some(Arc::downgrade(self)),
                })
            })
            .clone()
    }

    fn check_grading(&self) -> Result<(), AlgebraError> {
        let dim = self.dim();
        let n = self.vertices;
        for (b, &(s, t)) in self.ends.iter().enumerate() {
            if s >= n || t >= n {
                return Err(AlgebraError::Grading(b, b));
            }
            if b < n && (s, t) != (b, b) {
                return Err(AlgebraError::Idempotents(b, b));
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                let (s1, t1) = self.ends[i];
                let (s2, t2) = self.ends[j];
                let p = &self.table[i * dim + j];
                if t1 != s2 {
                    if !p.is_empty() {
                        return Err(AlgebraError::Grading(i, j));
                    }
                    continue;
                }
                if p.iter().any(|(k, _)| self.ends[*k] != (s1, t2)) {
                    return Err(AlgebraError::Grading(i, j));
                }
            }
        }
        Ok(())
    }

    fn compute_generators(&self) -> Vec<usize> {
        let dim = self.dim();
        let n = self.vertices;
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for i in n..dim {
            for j in n..dim {
                let p = &self.table[i * dim + j];
                if !p.is_empty() {
                    rows.push(dense(p, dim));
                }
            }
        }
        let mut echelon = Echelon::new(dim);
        for r in rows {
            echelon.insert(r);
        }
        let mut gens = Vec::new();
        for b in n..dim {
            if echelon.insert(self.basis_vector(b)) {
                gens.push(b);
            }
        }
        gens
    }

    /// Breadth-first search over generator words, keeping only words that
    /// enlarge the span, then solving for each radical basis vector.
    fn compute_expansions(&self) -> Result<Vec<Vec<(Rat, Vec<usize>)>>, AlgebraError> {
        let dim = self.dim();
        let n = self.vertices;
        let mut echelon = Echelon::new(dim);
        let mut words: Vec<(Vec<usize>, Vec<Rat>)> = Vec::new();
        let mut frontier: Vec<(Vec<usize>, Vec<Rat>)> = Vec::new();
        for (gi, &g) in self.generators.iter().enumerate() {
            let v = self.basis_vector(g);
            if echelon.insert(v.clone()) {
                frontier.push((vec![gi], v));
            }
        }
        let mut depth = 0;
        while !frontier.is_empty() {
            depth += 1;
            if depth > dim + 1 {
                return Err(AlgebraError::NotNilpotent);
            }
            let mut next = Vec::new();
            for (w, v) in &frontier {
                for (gi, &g) in self.generators.iter().enumerate() {
                    let p = self.multiply(v, &self.basis_vector(g));
                    if p.iter().all(|x| *x == 0) {
                        continue;
                    }
                    if echelon.insert(p.clone()) {
                        let mut w2 = w.clone();
                        w2.push(gi);
                        next.push((w2, p));
                    }
                }
            }
            words.append(&mut frontier);
            frontier = next;
        }
        let columns: Vec<Vec<Rat>> = words.iter().map(|(_, v)| v.clone()).collect();
        let m = RatMatrix::from_columns(dim, &columns);
        let mut out = Vec::with_capacity(dim - n);
        for b in n..dim {
            let x = m
                .solve(&self.basis_vector(b))
                .expect("dimensions agree")
                .ok_or(AlgebraError::RadicalNotIdeal(b, b))?;
            out.push(
                x.into_iter()
                    .enumerate()
                    .filter(|(_, c)| *c != 0)
                    .map(|(k, c)| (c, words[k].0.clone()))
                    .collect(),
            );
        }
        Ok(out)
    }

    /// Full structural self-check: associativity on all basis triples,
    /// idempotent and unit axioms, grading, and nilpotency of the radical.
    pub fn verify(&self) -> Result<(), AlgebraError> {
        let dim = self.dim();
        let n = self.vertices;
        self.check_grading()?;
        for i in 0..n {
            for j in 0..n {
                let p = self.product(i, j);
                let ok = if i == j {
                    p.len() == 1 && p[0].0 == i && p[0].1 == 1
                } else {
                    p.is_empty()
                };
                if !ok {
                    return Err(AlgebraError::Idempotents(i, j));
                }
            }
        }
        for b in 0..dim {
            let (s, t) = self.ends[b];
            let unit = |p: &Sparse| p.len() == 1 && p[0].0 == b && p[0].1 == 1;
            if !unit(self.product(s, b)) || !unit(self.product(b, t)) {
                return Err(AlgebraError::Unit(b));
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                let ij = dense(self.product(i, j), dim);
                for k in 0..dim {
                    let left = self.multiply(&ij, &self.basis_vector(k));
                    let jk = dense(self.product(j, k), dim);
                    let right = self.multiply(&self.basis_vector(i), &jk);
                    if left != right {
                        return Err(AlgebraError::NotAssociative(i, j, k));
                    }
                }
            }
        }
        for i in n..dim {
            for j in 0..dim {
                for (a, b) in [(i, j), (j, i)] {
                    if self.product(a, b).iter().any(|(k, _)| *k < n) {
                        return Err(AlgebraError::RadicalNotIdeal(a, b));
                    }
                }
            }
        }
        if self.radical_power_dims().last().copied().unwrap_or(0) != 0 {
            return Err(AlgebraError::NotNilpotent);
        }
        Ok(())
    }

    /// Dimensions of rad, rad^2, ... until the powers vanish or stop shrinking.
    pub fn radical_power_dims(&self) -> Vec<usize> {
        let dim = self.dim();
        let n = self.vertices;
        let rad: Vec<Vec<Rat>> = (n..dim).map(|b| self.basis_vector(b)).collect();
        let mut dims = vec![rad.len()];
        let mut power = rad.clone();
        while !power.is_empty() {
            let mut echelon = Echelon::new(dim);
            for x in &power {
                for y in &rad {
                    echelon.insert(self.multiply(x, y));
                }
            }
            let next = echelon.into_rows();
            if next.len() >= power.len() {
                dims.push(next.len());
                break;
            }
            dims.push(next.len());
            power = next;
        }
        dims
    }

    /// Whether every radical basis element is a single generator word.
    pub fn is_monomial(&self) -> bool {
        self.expansions
            .iter()
            .all(|e| e.len() == 1 && e[0].0 == 1)
    }
}

/// A subspace of an algebra, stored as a reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    echelon: Echelon,
}

impl Subspace {
    pub fn zero(dim: usize) -> Self {
        Subspace {
            echelon: Echelon::new(dim),
        }
    }

    pub fn spanned_by(dim: usize, vectors: impl IntoIterator<Item = Vec<Rat>>) -> Self {
        let mut echelon = Echelon::new(dim);
        for v in vectors {
            echelon.insert(v);
        }
        Subspace { echelon }
    }

    pub fn dim(&self) -> usize {
        self.echelon.len()
    }

    pub fn is_zero(&self) -> bool {
        self.echelon.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        self.echelon.rows()
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.echelon.contains(v)
    }

    pub fn echelon(&self) -> &Echelon {
        &self.echelon
    }
}

impl Algebra {
    /// Span of the designated radical basis.
    pub fn radical(&self) -> Subspace {
        Subspace::spanned_by(self.dim(), self.radical_basis().map(|b| self.basis_vector(b)))
    }

    /// Smallest two-sided ideal containing the generators.
    pub fn two_sided_ideal(&self, generators: &[Vec<Rat>]) -> Subspace {
        let dim = self.dim();
        let mut echelon = Echelon::new(dim);
        let mut queue: Vec<Vec<Rat>> = Vec::new();
        // Splitting by idempotents on both sides keeps every queued vector homogeneous.
        for g in generators {
            for s in 0..self.vertices {
                let left = self.multiply(&self.basis_vector(s), g);
                for t in 0..self.vertices {
                    let v = self.multiply(&left, &self.basis_vector(t));
                    if echelon.insert(v.clone()) {
                        queue.push(v);
                    }
                }
            }
        }
        while let Some(x) = queue.pop() {
            for &g in &self.generators {
                let gv = self.basis_vector(g);
                for v in [self.multiply(&gv, &x), self.multiply(&x, &gv)] {
                    if echelon.insert(v.clone()) {
                        queue.push(v);
                    }
                }
            }
        }
        Subspace { echelon }
    }

    /// Span of all products `x y` with `x` in `i` and `y` in `j`.
    pub fn ideal_product(&self, i: &Subspace, j: &Subspace) -> Subspace {
        let mut echelon = Echelon::new(self.dim());
        for x in i.basis() {
            for y in j.basis() {
                echelon.insert(self.multiply(x, y));
            }
        }
        Subspace { echelon }
    }

    /// The subspace `e_v I` of a two-sided ideal, as a list of vectors.
    pub fn left_corner(&self, v: usize, ideal: &Subspace) -> Subspace {
        let e = self.basis_vector(v);
        Subspace::spanned_by(self.dim(), ideal.basis().iter().map(|x| self.multiply(&e, x)))
    }
}

/// Jacobson radical of an algebra given only by structure constants, via the
/// characteristic-zero trace form: `x` is radical iff `tr(L_{xy}) = 0` for
/// every basis element `y`.
pub fn trace_radical(dim: usize, table: &[Sparse]) -> Result<Vec<Vec<Rat>>, AlgebraError> {
    let trace_of_left = |z: usize| -> Rat {
        let mut t = rat(0);
        for k in 0..dim {
            for (idx, c) in &table[z * dim + k] {
                if *idx == k {
                    t += c;
                }
            }
        }
        t
    };
    let traces: Vec<Rat> = (0..dim).map(trace_of_left).collect();
    // form[i][j] = tr(L_{b_i b_j})
    let mut form = RatMatrix::zeros(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            let mut t = rat(0);
            for (k, c) in &table[i * dim + j] {
                t += c * &traces[*k];
            }
            form[(i, j)] = t;
        }
    }
    let rad = form.kernel_basis();
    let mult = |x: &[Rat], y: &[Rat]| -> Vec<Rat> {
        let mut out = vec![rat(0); dim];
        for (i, xi) in x.iter().enumerate() {
            if *xi == 0 {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if *yj == 0 {
                    continue;
                }
                for (k, v) in &table[i * dim + j] {
                    out[*k] += xi * yj * v;
                }
            }
        }
        out
    };
    let mut power = rad.clone();
    for _ in 0..=dim {
        if power.is_empty() {
            return Ok(rad);
        }
        let mut echelon = Echelon::new(dim);
        for x in &power {
            for y in &rad {
                echelon.insert(mult(x, y));
            }
        }
        let next = echelon.into_rows();
        if next.len() >= power.len() {
            return Err(AlgebraError::TraceRadical);
        }
        power = next;
    }
    Err(AlgebraError::TraceRadical)
}

pub(crate) fn dense(s: &Sparse, dim: usize) -> Vec<Rat> {
    let mut v = vec![rat(0); dim];
    for (k, c) in s {
        v[*k] = c.clone();
    }
    v
}

/// Incrementally maintained reduced row echelon basis of a subspace.
#[derive(Clone, Debug)]
pub struct Echelon {
    len: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(len: usize) -> Self {
        Echelon {
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn ambient(&self) -> usize {
        self.len
    }

    /// Reduces `v` against the current rows.
    pub fn reduce(&self, mut v: Vec<Rat>) -> Vec<Rat> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p] != 0 {
                let f = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if *r != 0 {
                        *x -= &f * r;
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v.to_vec()).iter().all(|x| *x == 0)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<Rat>) -> bool {
        assert_eq!(v.len(), self.len, "echelon vector length");
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| *x != 0) else {
            return false;
        };
        let inv = rat(1) / &v[p];
        for x in v.iter_mut() {
            if *x != 0 {
                *x *= &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if row[p] != 0 {
                let f = row[p].clone();
                for (x, r) in row.iter_mut().zip(&v) {
                    if *r != 0 {
                        *x -= &f * r;
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// Rows in reduced echelon form, sorted by pivot.
    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn into_rows(self) -> Vec<Vec<Rat>> {
        self.rows
    }

    /// Coordinates of `v` (assumed in the span) with respect to the rows.
    pub fn coordinates(&self, v: &[Rat]) -> Vec<Rat> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }
}

impl PartialEq for Echelon {
    fn eq(&self, other: &Self) -> bool {
        self.len == other.len && self.rows == other.rows
    }
}

impl Eq for Echelon {}

#[cfg(test)]
mod tests {
    use super::*;

    fn semisimple2() -> Algebra {
        let one = |k: usize| vec![(k, rat(1))];
        Algebra::from_table(
            "QxQ",
            2,
            vec!["e1".into(), "e2".into()],
            vec![(0, 0), (1, 1)],
            vec![one(0), vec![], vec![], one(1)],
            None,
        )
        .unwrap()
    }

    #[test]
    fn semisimple_has_zero_radical() {
        let a = semisimple2();
        a.verify().unwrap();
        assert_eq!(a.radical_basis().len(), 0);
        assert!(a.generators().is_empty());
        let x = vec![rat(2), rat(3)];
        assert_eq!(a.multiply(&a.unit(), &x), x);
        assert_eq!(a.multiply(&a.basis_vector(0), &a.basis_vector(1)), vec![rat(0), rat(0)]);
    }

    #[test]
    fn trace_radical_of_semisimple_is_zero() {
        let a = semisimple2();
        let table: Vec<Sparse> = (0..4).map(|k| a.product(k / 2, k % 2).clone()).collect();
        assert!(trace_radical(2, &table).unwrap().is_empty());
    }

    #[test]
    fn echelon_insert_and_reduce() {
        let mut e = Echelon::new(3);
        assert!(e.insert(vec![rat(0), rat(2), rat(2)]));
        assert!(e.insert(vec![rat(1), rat(1), rat(0)]));
        assert!(!e.insert(vec![rat(2), rat(4), rat(2)]));
        assert_eq!(e.pivots(), &[0, 1]);
        assert!(e.contains(&[rat(1), rat(0), rat(-1)]));
    }
}
