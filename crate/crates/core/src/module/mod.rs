//! Right modules over a basic algebra.
//!
//! A module is a graded vector space `M = ⊕ M e_v` together with, for each
//! algebra generator `g` with ends `(s, t)`, the block `M e_s -> M e_t` of
//! its action. Blocks act on column vectors, so for right modules
//! `ρ(xy) = ρ(y) ρ(x)`.

mod functors;
mod hom;
mod presentation;
mod torsion;

use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::algebra::{Algebra, Echelon};
use crate::linalg::{rat, Rat, RatMatrix};

pub use functors::{injective_envelope, injective_module, nakayama, tau, tau_inverse, transpose};
pub use hom::{ext1_dim, hom_dim, hom_space, is_isomorphic, ModuleMap};
pub use presentation::{Cover, FreeModule, Presentation};
pub use torsion::{trace_torsion, TorsionParts};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("grading refers to vertex {0} outside the algebra")]
    BadGrading(usize),
    #[error("expected {expected} generator blocks, found {found}")]
    GeneratorCount { expected: usize, found: usize },
    #[error("block for generator {0} has the wrong shape")]
    BlockShape(usize),
    #[error("action violates the relation for basis product ({0}, {1})")]
    Relation(usize, usize),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("algebra: {0}")]
    Algebra(String),
}

#[derive(Clone)]
pub struct Module {
    alg: Arc<Algebra>,
    grading: Vec<usize>,
    index: Vec<Vec<usize>>,
    position: Vec<usize>,
    gens: Vec<RatMatrix>,
    blocks: OnceLock<Arc<Vec<RatMatrix>>>,
    cover: OnceLock<Arc<Cover>>,
}

impl std::fmt::Debug for Module {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Module")
            .field("algebra", &self.alg.name())
            .field("dim_vector", &self.dim_vector())
            .finish()
    }
}

/// A submodule together with its inclusion matrix into the ambient module.
#[derive(Clone, Debug)]
pub struct Submodule {
    pub module: Module,
    pub inclusion: RatMatrix,
}

/// A quotient module together with the projection matrix.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub module: Module,
    pub projection: RatMatrix,
}

impl Module {
    /// Builds a module from generator blocks; `gens[k]` is the action of
    /// `alg.generators()[k]` from its source to its target component.
    pub fn from_blocks(
        alg: Arc<Algebra>,
        grading: Vec<usize>,
        gens: Vec<RatMatrix>,
    ) -> Result<Self, ModuleError> {
        let n = alg.vertices();
        if let Some(&v) = grading.iter().find(|&&v| v >= n) {
            return Err(ModuleError::BadGrading(v));
        }
        if gens.len() != alg.generators().len() {
            return Err(ModuleError::GeneratorCount {
                expected: alg.generators().len(),
                found: gens.len(),
            });
        }
        let mut index = vec![Vec::new(); n];
        let mut position = vec![0; grading.len()];
        for (k, &v) in grading.iter().enumerate() {
            position[k] = index[v].len();
            index[v].push(k);
        }
        for (gi, (&g, block)) in alg.generators().iter().zip(&gens).enumerate() {
            let (s, t) = alg.ends(g);
            if block.rows() != index[t].len() || block.cols() != index[s].len() {
                return Err(ModuleError::BlockShape(gi));
            }
        }
        Ok(Module {
            alg,
            grading,
            index,
            position,
            gens,
            blocks: OnceLock::new(),
            cover: OnceLock::new(),
        })
    }

    pub fn zero(alg: Arc<Algebra>) -> Self {
        let gens = alg
            .generators()
            .iter()
            .map(|_| RatMatrix::zeros(0, 0))
            .collect();
        Module::from_blocks(alg, Vec::new(), gens).expect("zero module is well formed")
    }

    /// Simple module at zero-based vertex `v`.
    pub fn simple(alg: Arc<Algebra>, v: usize) -> Self {
        let gens = alg
            .generators()
            .iter()
            .map(|&g| {
                let (s, t) = alg.ends(g);
                RatMatrix::zeros(usize::from(t == v), usize::from(s == v))
            })
            .collect();
        Module::from_blocks(alg, vec![v], gens).expect("simple module is well formed")
    }

    /// Indecomposable projective `P(v) = e_v A`.
    pub fn projective(alg: Arc<Algebra>, v: usize) -> Self {
        FreeModule::new(alg, vec![v]).module
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.grading.len()
    }

    pub fn is_zero(&self) -> bool {
        self.grading.is_empty()
    }

    pub fn grading(&self) -> &[usize] {
        &self.grading
    }

    /// Basis indices lying in `M e_v`.
    pub fn indices(&self, v: usize) -> &[usize] {
        &self.index[v]
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.index[v].len()
    }

    pub fn dim_vector(&self) -> Vec<usize> {
        self.index.iter().map(Vec::len).collect()
    }

    pub fn dim_vector_i64(&self) -> Vec<i64> {
        self.index.iter().map(|i| i.len() as i64).collect()
    }

    pub fn generator_blocks(&self) -> &[RatMatrix] {
        &self.gens
    }

    fn same_algebra(&self, other: &Module) -> bool {
        Arc::ptr_eq(&self.alg, &other.alg)
    }

    /// Action block of basis element `b`, from `M e_s` to `M e_t`.
    pub fn block(&self, b: usize) -> &RatMatrix {
        let blocks = self.blocks.get_or_init(|| Arc::new(self.compute_blocks()));
        &blocks[b]
    }

    fn compute_blocks(&self) -> Vec<RatMatrix> {
        let alg = &self.alg;
        let n = alg.vertices();
        let mut out: Vec<RatMatrix> = (0..n).map(|v| RatMatrix::identity(self.dim_at(v))).collect();
        for b in alg.radical_basis() {
            let (s, t) = alg.ends(b);
            let mut acc = RatMatrix::zeros(self.dim_at(t), self.dim_at(s));
            for (coef, word) in alg.expansion(b) {
                let mut m = self.gens[word[0]].clone();
                for &g in &word[1..] {
                    m = self.gens[g].matmul(&m).expect("graded shapes");
                }
                acc = acc.add(&m.scale(coef)).expect("graded shapes");
            }
            out.push(acc);
        }
        out
    }

    /// Block of the homogeneous element `x ∈ e_s A e_t`, acting `M e_s -> M e_t`.
    pub fn element_block(&self, x: &[Rat], s: usize, t: usize) -> RatMatrix {
        let mut acc = RatMatrix::zeros(self.dim_at(t), self.dim_at(s));
        for b in self.alg.basis_between(s, t) {
            if x[b] != 0 {
                acc = acc.add(&self.block(b).scale(&x[b])).expect("graded shapes");
            }
        }
        acc
    }

    /// Restriction of a vector to the coordinates of `M e_v`.
    pub fn local(&self, v: usize, x: &[Rat]) -> Vec<Rat> {
        self.index[v].iter().map(|&k| x[k].clone()).collect()
    }

    /// Embeds local coordinates at vertex `v` into the whole module.
    pub fn global(&self, v: usize, local: &[Rat]) -> Vec<Rat> {
        let mut out = vec![rat(0); self.dim()];
        for (&k, x) in self.index[v].iter().zip(local) {
            out[k] = x.clone();
        }
        out
    }

    /// `x · a` for a module vector `x` and algebra element `a`.
    pub fn act(&self, x: &[Rat], a: &[Rat]) -> Vec<Rat> {
        let mut out = vec![rat(0); self.dim()];
        for b in 0..self.alg.dim() {
            if a[b] == 0 {
                continue;
            }
            let (s, t) = self.alg.ends(b);
            let xs = self.local(s, x);
            if xs.iter().all(|c| *c == 0) {
                continue;
            }
            let y = self.block(b).matvec(&xs).expect("graded shapes");
            for (&k, c) in self.index[t].iter().zip(y) {
                out[k] += &a[b] * c;
            }
        }
        out
    }

    /// Full action matrix of basis element `b` on the whole module.
    pub fn action_matrix(&self, b: usize) -> RatMatrix {
        let (s, t) = self.alg.ends(b);
        let block = self.block(b);
        let mut m = RatMatrix::zeros(self.dim(), self.dim());
        for (r, &i) in self.index[t].iter().enumerate() {
            for (c, &j) in self.index[s].iter().enumerate() {
                m[(i, j)] = block[(r, c)].clone();
            }
        }
        m
    }

    /// Checks `ρ(b_i b_j) = ρ(b_j) ρ(b_i)` on all basis pairs.
    pub fn verify(&self) -> Result<(), ModuleError> {
        let alg = self.alg.clone();
        let dim = alg.dim();
        for i in 0..dim {
            for j in 0..dim {
                let (s, t) = alg.ends(i);
                let (s2, u) = alg.ends(j);
                if t != s2 {
                    continue;
                }
                let lhs = self.element_block(&crate::algebra::dense(alg.product(i, j), dim), s, u);
                let rhs = self.block(j).matmul(self.block(i)).expect("graded shapes");
                if lhs != rhs {
                    return Err(ModuleError::Relation(i, j));
                }
            }
        }
        Ok(())
    }

    /// Submodule generated by the given vectors.
    pub fn submodule(&self, generators: &[Vec<Rat>]) -> Submodule {
        let n = self.alg.vertices();
        let mut ech: Vec<Echelon> = (0..n).map(|v| Echelon::new(self.dim_at(v))).collect();
        let mut queue: Vec<(usize, Vec<Rat>)> = Vec::new();
        for x in generators {
            for v in 0..n {
                let l = self.local(v, x);
                if ech[v].insert(l.clone()) {
                    queue.push((v, l));
                }
            }
        }
        while let Some((v, l)) = queue.pop() {
            for (gi, &g) in self.alg.generators().iter().enumerate() {
                let (s, t) = self.alg.ends(g);
                if s != v {
                    continue;
                }
                let y = self.gens[gi].matvec(&l).expect("graded shapes");
                if ech[t].insert(y.clone()) {
                    queue.push((t, y));
                }
            }
        }
        self.submodule_from_echelons(ech)
    }

    /// Submodule whose vertex components are the given subspaces; the caller
    /// guarantees closure under the action.
    fn submodule_from_echelons(&self, ech: Vec<Echelon>) -> Submodule {
        let mut grading = Vec::new();
        let mut columns = Vec::new();
        for (v, e) in ech.iter().enumerate() {
            for row in e.rows() {
                grading.push(v);
                columns.push(self.global(v, row));
            }
        }
        let gens = self
            .alg
            .generators()
            .iter()
            .enumerate()
            .map(|(gi, &g)| {
                let (s, t) = self.alg.ends(g);
                let mut block = RatMatrix::zeros(ech[t].len(), ech[s].len());
                for (c, row) in ech[s].rows().iter().enumerate() {
                    let y = self.gens[gi].matvec(row).expect("graded shapes");
                    debug_assert!(ech[t].contains(&y), "subspace not closed under action");
                    for (r, x) in ech[t].coordinates(&y).into_iter().enumerate() {
                        block[(r, c)] = x;
                    }
                }
                block
            })
            .collect();
        let module = Module::from_blocks(self.alg.clone(), grading, gens).expect("well formed");
        Submodule {
            module,
            inclusion: RatMatrix::from_columns(self.dim(), &columns),
        }
    }

    /// Quotient by the submodule generated by the given vectors.
    pub fn quotient(&self, generators: &[Vec<Rat>]) -> Quotient {
        let sub = self.submodule(generators);
        let n = self.alg.vertices();
        let ech: Vec<Echelon> = (0..n)
            .map(|v| {
                let mut e = Echelon::new(self.dim_at(v));
                for &k in sub.module.indices(v) {
                    e.insert(self.local(v, &sub.inclusion.column(k)));
                }
                e
            })
            .collect();
        self.quotient_by_echelons(&ech)
    }

    fn quotient_by_echelons(&self, ech: &[Echelon]) -> Quotient {
        let n = self.alg.vertices();
        let free: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                (0..self.dim_at(v))
                    .filter(|j| !ech[v].pivots().contains(j))
                    .collect()
            })
            .collect();
        let project = |v: usize, y: Vec<Rat>| -> Vec<Rat> {
            let r = ech[v].reduce(y);
            free[v].iter().map(|&j| r[j].clone()).collect()
        };
        let mut grading = Vec::new();
        for v in 0..n {
            grading.extend(std::iter::repeat_n(v, free[v].len()));
        }
        let gens = self
            .alg
            .generators()
            .iter()
            .enumerate()
            .map(|(gi, &g)| {
                let (s, t) = self.alg.ends(g);
                let mut block = RatMatrix::zeros(free[t].len(), free[s].len());
                for (c, &j) in free[s].iter().enumerate() {
                    let y = self.gens[gi].column(j);
                    for (r, x) in project(t, y).into_iter().enumerate() {
                        block[(r, c)] = x;
                    }
                }
                block
            })
            .collect();
        let module = Module::from_blocks(self.alg.clone(), grading, gens).expect("well formed");
        let mut projection = RatMatrix::zeros(module.dim(), self.dim());
        for v in 0..n {
            for (p, &k) in self.index[v].iter().enumerate() {
                let mut unit = vec![rat(0); self.dim_at(v)];
                unit[p] = rat(1);
                for (r, x) in project(v, unit).into_iter().enumerate() {
                    projection[(module.indices(v)[r], k)] = x;
                }
            }
        }
        Quotient { module, projection }
    }

    /// Vertex components of `M · rad A`, the span of the generator images.
    pub(crate) fn radical_echelons(&self) -> Vec<Echelon> {
        let mut ech: Vec<Echelon> = (0..self.alg.vertices())
            .map(|v| Echelon::new(self.dim_at(v)))
            .collect();
        for (gi, &g) in self.alg.generators().iter().enumerate() {
            let t = self.alg.ends(g).1;
            for c in 0..self.gens[gi].cols() {
                ech[t].insert(self.gens[gi].column(c));
            }
        }
        ech
    }

    /// `M · rad A`.
    pub fn radical_submodule(&self) -> Submodule {
        self.submodule_from_echelons(self.radical_echelons())
    }

    /// `top M = M / M rad A`.
    pub fn top(&self) -> Quotient {
        self.quotient_by_echelons(&self.radical_echelons())
    }

    /// Vectors annihilated by the radical.
    pub fn socle(&self) -> Submodule {
        let n = self.alg.vertices();
        let ech: Vec<Echelon> = (0..n)
            .map(|v| {
                let mut stacked = RatMatrix::zeros(0, self.dim_at(v));
                for (gi, &g) in self.alg.generators().iter().enumerate() {
                    if self.alg.ends(g).0 == v {
                        stacked = stacked.vstack(&self.gens[gi]).expect("same width");
                    }
                }
                let mut e = Echelon::new(self.dim_at(v));
                for k in stacked.kernel_basis() {
                    e.insert(k);
                }
                e
            })
            .collect();
        self.submodule_from_echelons(ech)
    }

    /// `rad^k M`.
    pub fn radical_power(&self, k: usize) -> Submodule {
        let mut current = Submodule {
            module: self.clone(),
            inclusion: RatMatrix::identity(self.dim()),
        };
        for _ in 0..k {
            let next = current.module.radical_submodule();
            current = Submodule {
                inclusion: current.inclusion.matmul(&next.inclusion).expect("shapes"),
                module: next.module,
            };
        }
        current
    }

    /// Linear dual, a right module over the opposite algebra.
    pub fn dual(&self) -> Module {
        let op = self.alg.opposite();
        let gens = self.gens.iter().map(RatMatrix::transpose).collect();
        Module::from_blocks(op, self.grading.clone(), gens).expect("dual is well formed")
    }

    /// Direct sum; basis vectors of the summands are concatenated in order.
    pub fn direct_sum(summands: &[Module]) -> Result<Module, ModuleError> {
        let Some(first) = summands.first() else {
            return Err(ModuleError::AlgebraMismatch);
        };
        if summands.iter().any(|m| !m.same_algebra(first)) {
            return Err(ModuleError::AlgebraMismatch);
        }
        let alg = first.alg.clone();
        let grading: Vec<usize> = summands.iter().flat_map(|m| m.grading.iter().copied()).collect();
        let gens = alg
            .generators()
            .iter()
            .enumerate()
            .map(|(gi, &g)| {
                let (s, t) = alg.ends(g);
                let rows: usize = summands.iter().map(|m| m.dim_at(t)).sum();
                let cols: usize = summands.iter().map(|m| m.dim_at(s)).sum();
                let mut block = RatMatrix::zeros(rows, cols);
                let (mut r0, mut c0) = (0, 0);
                for m in summands {
                    let b = &m.gens[gi];
                    for r in 0..b.rows() {
                        for c in 0..b.cols() {
                            block[(r0 + r, c0 + c)] = b[(r, c)].clone();
                        }
                    }
                    r0 += b.rows();
                    c0 += b.cols();
                }
                block
            })
            .collect();
        Module::from_blocks(alg, grading, gens)
    }

    /// Same module with basis vectors permuted: new vector `k` is old `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Module {
        let grading: Vec<usize> = perm.iter().map(|&k| self.grading[k]).collect();
        // Local order at each vertex follows the new global order.
        let n = self.alg.vertices();
        let mut new_index = vec![Vec::new(); n];
        for (k, &v) in grading.iter().enumerate() {
            new_index[v].push(k);
        }
        let gens = self
            .alg
            .generators()
            .iter()
            .enumerate()
            .map(|(gi, &g)| {
                let (s, t) = self.alg.ends(g);
                let mut block = RatMatrix::zeros(self.dim_at(t), self.dim_at(s));
                for (r, &nk) in new_index[t].iter().enumerate() {
                    for (c, &nj) in new_index[s].iter().enumerate() {
                        let (ok, oj) = (perm[nk], perm[nj]);
                        block[(r, c)] =
                            self.gens[gi][(self.position[ok], self.position[oj])].clone();
                    }
                }
                block
            })
            .collect();
        Module::from_blocks(self.alg.clone(), grading, gens).expect("well formed")
    }

    /// Projective exactly when the minimal presentation has no relations.
    pub fn is_projective(&self) -> bool {
        self.presentation().p1.is_empty()
    }
}

#[cfg(test)]
mod tests;
