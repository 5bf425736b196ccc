//! Homomorphism spaces and first extension groups.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{rat, Rat, RatMatrix};

use super::presentation::offsets;
use super::{Module, ModuleError};

/// A module homomorphism given by its matrix, `dim target × dim source`.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: Module,
    pub target: Module,
    pub matrix: RatMatrix,
}

impl ModuleMap {
    pub fn new(source: Module, target: Module, matrix: RatMatrix) -> Result<Self, ModuleError> {
        if !source.same_algebra(&target) {
            return Err(ModuleError::AlgebraMismatch);
        }
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(ModuleError::BlockShape(usize::MAX));
        }
        Ok(ModuleMap {
            source,
            target,
            matrix,
        })
    }

    /// Whether the matrix respects gradings and commutes with every generator.
    pub fn is_homomorphism(&self) -> bool {
        let alg = self.source.algebra();
        for (k, &v) in self.source.grading().iter().enumerate() {
            for (r, &w) in self.target.grading().iter().enumerate() {
                if v != w && self.matrix[(r, k)] != 0 {
                    return false;
                }
            }
        }
        for &g in alg.generators() {
            let lhs = self
                .target
                .action_matrix(g)
                .matmul(&self.matrix)
                .expect("shapes");
            let rhs = self
                .matrix
                .matmul(&self.source.action_matrix(g))
                .expect("shapes");
            if lhs != rhs {
                return false;
            }
        }
        true
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn compose(&self, after: &ModuleMap) -> Result<ModuleMap, ModuleError> {
        let matrix = after
            .matrix
            .matmul(&self.matrix)
            .map_err(|_| ModuleError::AlgebraMismatch)?;
        ModuleMap::new(self.source.clone(), after.target.clone(), matrix)
    }
}

/// Basis of `Hom_A(M, N)`, solved vertex by vertex from the generator
/// equations `N_g F_s = F_t M_g`.
pub fn hom_space(m: &Module, n: &Module) -> Result<Vec<ModuleMap>, ModuleError> {
    if !m.same_algebra(n) {
        return Err(ModuleError::AlgebraMismatch);
    }
    let alg = m.algebra();
    let verts = alg.vertices();
    // Unknown F_v is dim N_v × dim M_v, stored row-major after offset[v].
    let off = offsets((0..verts).map(|v| n.dim_at(v) * m.dim_at(v)));
    let unknowns = off[verts];
    let var = |v: usize, r: usize, c: usize| off[v] + r * m.dim_at(v) + c;
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for (gi, &g) in alg.generators().iter().enumerate() {
        let (s, t) = alg.ends(g);
        let mg = &m.generator_blocks()[gi];
        let ng = &n.generator_blocks()[gi];
        for r in 0..n.dim_at(t) {
            for c in 0..m.dim_at(s) {
                let mut eq = vec![rat(0); unknowns];
                for p in 0..n.dim_at(s) {
                    if ng[(r, p)] != 0 {
                        eq[var(s, p, c)] += &ng[(r, p)];
                    }
                }
                for q in 0..m.dim_at(t) {
                    if mg[(q, c)] != 0 {
                        eq[var(t, r, q)] -= &mg[(q, c)];
                    }
                }
                if eq.iter().any(|x| *x != 0) {
                    rows.push(eq);
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        (0..unknowns)
            .map(|i| {
                let mut e = vec![rat(0); unknowns];
                e[i] = rat(1);
                e
            })
            .collect()
    } else {
        RatMatrix::from_rows(&rows).kernel_basis()
    };
    Ok(kernel
        .into_iter()
        .map(|x| {
            let mut f = RatMatrix::zeros(n.dim(), m.dim());
            for v in 0..verts {
                for (r, &i) in n.indices(v).iter().enumerate() {
                    for (c, &j) in m.indices(v).iter().enumerate() {
                        f[(i, j)] = x[var(v, r, c)].clone();
                    }
                }
            }
            ModuleMap {
                source: m.clone(),
                target: n.clone(),
                matrix: f,
            }
        })
        .collect())
}

/// `dim Hom_A(M, N)` from the minimal presentation of `M`.
pub fn hom_dim(m: &Module, n: &Module) -> Result<usize, ModuleError> {
    if !m.same_algebra(n) {
        return Err(ModuleError::AlgebraMismatch);
    }
    let p = m.presentation();
    let phi = p.hom_matrix(n);
    let total: usize = p.p0.iter().map(|&u| n.dim_at(u)).sum();
    Ok(total - phi.rank())
}

/// `dim Ext^1_A(M, N)` from `0 -> Hom(M,N) -> Hom(P_0,N) -> Hom(ΩM,N) -> Ext^1(M,N) -> 0`.
pub fn ext1_dim(m: &Module, n: &Module) -> Result<usize, ModuleError> {
    let hom_mn = hom_dim(m, n)?;
    let p0: usize = m.cover().free.vertices.iter().map(|&u| n.dim_at(u)).sum();
    let hom_omega = hom_dim(m.syzygy(), n)?;
    Ok(hom_omega + hom_mn - p0)
}

/// Isomorphism test: equal dimension vectors and an invertible random
/// combination of a Hom basis. Seeded, so deterministic.
pub fn is_isomorphic(m: &Module, n: &Module) -> Result<bool, ModuleError> {
    if !m.same_algebra(n) {
        return Err(ModuleError::AlgebraMismatch);
    }
    if m.dim_vector() != n.dim_vector() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let basis = hom_space(m, n)?;
    if basis.is_empty() {
        return Ok(false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..4 {
        let mut f = RatMatrix::zeros(n.dim(), m.dim());
        for b in &basis {
            let c = rat(rng.random_range(-1000i64..=1000));
            f = f.add(&b.matrix.scale(&c)).expect("shapes");
        }
        if f.rank() == m.dim() {
            return Ok(true);
        }
    }
    Ok(false)
}
