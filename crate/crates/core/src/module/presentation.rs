//! Projective covers and minimal projective presentations.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::linalg::{rat, Rat, RatMatrix};

use super::{Module, Submodule};

/// A free module `⊕_l e_{u_l} A` with its slot bookkeeping.
#[derive(Clone, Debug)]
pub struct FreeModule {
    pub vertices: Vec<usize>,
    pub module: Module,
    /// `(slot, algebra basis index)` for each module basis vector.
    pub slot_of: Vec<(usize, usize)>,
}

impl FreeModule {
    pub fn new(alg: Arc<Algebra>, vertices: Vec<usize>) -> Self {
        let mut slot_of = Vec::new();
        for (l, &u) in vertices.iter().enumerate() {
            for b in alg.basis_from(u) {
                slot_of.push((l, b));
            }
        }
        let grading: Vec<usize> = slot_of.iter().map(|&(_, b)| alg.ends(b).1).collect();
        let lookup: std::collections::HashMap<(usize, usize), usize> =
            slot_of.iter().enumerate().map(|(k, &sb)| (sb, k)).collect();
        let n = alg.vertices();
        let mut index = vec![Vec::new(); n];
        let mut position = vec![0; grading.len()];
        for (k, &v) in grading.iter().enumerate() {
            position[k] = index[v].len();
            index[v].push(k);
        }
        let gens = alg
            .generators()
            .iter()
            .map(|&g| {
                let (s, t) = alg.ends(g);
                let mut block = RatMatrix::zeros(index[t].len(), index[s].len());
                for (c, &k) in index[s].iter().enumerate() {
                    let (l, b) = slot_of[k];
                    for (m, coef) in alg.product(b, g) {
                        let row = position[lookup[&(l, *m)]];
                        block[(row, c)] = coef.clone();
                    }
                }
                block
            })
            .collect();
        let module = Module::from_blocks(alg, grading, gens).expect("free module is well formed");
        FreeModule {
            vertices,
            module,
            slot_of,
        }
    }

    /// Module vector of the element `x ∈ e_{u_l} A` placed in slot `l`.
    pub fn embed(&self, l: usize, x: &[Rat]) -> Vec<Rat> {
        self.slot_of
            .iter()
            .map(|&(sl, b)| if sl == l { x[b].clone() } else { rat(0) })
            .collect()
    }

    /// Component of a module vector in slot `l`, as an algebra element.
    pub fn component(&self, l: usize, v: &[Rat]) -> Vec<Rat> {
        let mut x = vec![rat(0); self.module.algebra().dim()];
        for (k, &(sl, b)) in self.slot_of.iter().enumerate() {
            if sl == l {
                x[b] = v[k].clone();
            }
        }
        x
    }
}

/// Projective cover `π: P_0 -> M` together with its kernel.
#[derive(Clone, Debug)]
pub struct Cover {
    pub free: FreeModule,
    /// Basis indices of `M` lifting a basis of `top M`, one per slot.
    pub lifts: Vec<usize>,
    /// Matrix of `π`, `dim M × dim P_0`.
    pub map: RatMatrix,
    pub kernel: Submodule,
}

/// Minimal projective presentation `P_1 -> P_0 -> M -> 0`.
///
/// The differential sends the generator of the `k`-th summand `e_{v_k} A`
/// of `P_1` to `Σ_l d[k][l]`, where `d[k][l] ∈ e_{u_l} A e_{v_k}` sits in the
/// `l`-th summand of `P_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub p0: Vec<usize>,
    pub p1: Vec<usize>,
    pub d: Vec<Vec<Vec<Rat>>>,
}

impl Presentation {
    /// `(a_i - b_i)_i` from the multiplicities of `P_0` and `P_1`.
    pub fn g_vector(&self, n: usize) -> Vec<i64> {
        let mut g = vec![0i64; n];
        for &u in &self.p0 {
            g[u] += 1;
        }
        for &v in &self.p1 {
            g[v] -= 1;
        }
        g
    }

    pub fn multiplicities(vertices: &[usize], n: usize) -> Vec<usize> {
        let mut m = vec![0; n];
        for &v in vertices {
            m[v] += 1;
        }
        m
    }

    /// Matrix of `Hom(P_0, X) -> Hom(P_1, X)`, `f ↦ f ∘ d`, in the bases
    /// `⊕_l X e_{u_l}` and `⊕_k X e_{v_k}`.
    pub fn hom_matrix(&self, x: &Module) -> RatMatrix {
        d_hom_matrix(&self.p0, &self.p1, &self.d, x)
    }
}

/// `Hom(⊕_l e_{u_l}A, X) -> Hom(⊕_k e_{v_k}A, X)` for the map given by the
/// element matrix `d[k][l] ∈ e_{u_l} A e_{v_k}`.
pub fn d_hom_matrix(p0: &[usize], p1: &[usize], d: &[Vec<Vec<Rat>>], x: &Module) -> RatMatrix {
    let col_off = offsets(p0.iter().map(|&u| x.dim_at(u)));
    let row_off = offsets(p1.iter().map(|&v| x.dim_at(v)));
    let mut m = RatMatrix::zeros(row_off[p1.len()], col_off[p0.len()]);
    for (k, &v) in p1.iter().enumerate() {
        for (l, &u) in p0.iter().enumerate() {
            let e = &d[k][l];
            if e.iter().all(|c| *c == 0) {
                continue;
            }
            let block = x.element_block(e, u, v);
            for r in 0..block.rows() {
                for c in 0..block.cols() {
                    m[(row_off[k] + r, col_off[l] + c)] = block[(r, c)].clone();
                }
            }
        }
    }
    m
}

pub(crate) fn offsets(sizes: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut out = vec![0];
    for s in sizes {
        out.push(out.last().copied().unwrap_or(0) + s);
    }
    out
}

impl Module {
    /// Projective cover and syzygy, computed once and cached.
    pub fn cover(&self) -> &Cover {
        self.cover.get_or_init(|| Arc::new(self.compute_cover()))
    }

    fn compute_cover(&self) -> Cover {
        let alg = self.algebra().clone();
        let n = alg.vertices();
        // Basis vectors at the non-pivot positions of M rad A lift a basis of the top.
        let rad = self.radical_echelons();
        let mut vertices = Vec::new();
        let mut lifts = Vec::new();
        for v in 0..n {
            for j in 0..self.dim_at(v) {
                if !rad[v].pivots().contains(&j) {
                    vertices.push(v);
                    lifts.push(self.indices(v)[j]);
                }
            }
        }
        let free = FreeModule::new(alg.clone(), vertices);
        let mut map = RatMatrix::zeros(self.dim(), free.module.dim());
        for (col, &(l, b)) in free.slot_of.iter().enumerate() {
            let m = lifts[l];
            let (s, t) = alg.ends(b);
            let block = self.block(b);
            let pos = self.indices(s).iter().position(|&x| x == m).expect("lift at vertex");
            for (r, &row) in self.indices(t).iter().enumerate() {
                map[(row, col)] = block[(r, pos)].clone();
            }
        }
        let kernel_vectors = map.kernel_basis();
        let kernel = free.module.submodule(&kernel_vectors);
        Cover {
            free,
            lifts,
            map,
            kernel,
        }
    }

    /// Syzygy `Ω M = ker(P_0 -> M)`.
    pub fn syzygy(&self) -> &Module {
        &self.cover().kernel.module
    }

    pub fn presentation(&self) -> Presentation {
        let cover = self.cover();
        let omega = &cover.kernel;
        let inner = omega.module.cover();
        let p0 = cover.free.vertices.clone();
        let p1 = inner.free.vertices.clone();
        let d = inner
            .lifts
            .iter()
            .map(|&k| {
                let z = omega.inclusion.column(k);
                (0..p0.len()).map(|l| cover.free.component(l, &z)).collect()
            })
            .collect();
        Presentation { p0, p1, d }
    }

    pub fn g_vector(&self) -> Vec<i64> {
        self.presentation().g_vector(self.algebra().vertices())
    }

    /// Multiplicities of `P(i)` in `P_0`.
    pub fn top_vector(&self) -> Vec<usize> {
        Presentation::multiplicities(&self.cover().free.vertices, self.algebra().vertices())
    }

    /// Projective dimension at most one: the second syzygy vanishes.
    pub fn has_pd_at_most_one(&self) -> bool {
        self.syzygy().syzygy().is_zero()
    }
}
