//! The endomorphism algebra `B = End_A(T)` of a basic module and the
//! B-modules `Hom_A(T, X)` and `Ext^1_A(T, X)`.

use std::sync::Arc;

use serde_json::json;

use crate::algebra::{Algebra, Echelon, Sparse};
use crate::linalg::{rat, Rat, RatMatrix};
use crate::module::{hom_space, injective_envelope, is_isomorphic, tau, trace_torsion, Module, ModuleError};
use crate::report::{rat_json, Report};
use crate::theory::{rat_apply, TauTiltingPair, TheoryError};

fn flatten(m: &RatMatrix) -> Vec<Rat> {
    (0..m.rows()).flat_map(|r| m.row(r).to_vec()).collect()
}

fn unflatten(v: &[Rat], rows: usize, cols: usize) -> RatMatrix {
    RatMatrix::from_vec(rows, cols, v.to_vec())
}

fn trace(m: &RatMatrix) -> Rat {
    let mut t = rat(0);
    for i in 0..m.rows().min(m.cols()) {
        t += &m[(i, i)];
    }
    t
}

/// `(λ, m - λ·1)` with `λ = tr(m) / dim`.
fn trace_free(m: &RatMatrix) -> (Rat, RatMatrix) {
    let n = m.rows();
    if n == 0 {
        return (rat(0), m.clone());
    }
    let lambda = trace(m) / rat(n as i64);
    let rest = m.sub(&RatMatrix::identity(n).scale(&lambda)).expect("square");
    (lambda, rest)
}

type Blocks = Vec<Vec<(Vec<usize>, Echelon)>>;

fn coordinates_in(blocks: &Blocks, a: usize, c: usize, m: &RatMatrix) -> Sparse {
    let mut out = Vec::new();
    let mut rest = m.clone();
    if a == c {
        let (lambda, r) = trace_free(m);
        rest = r;
        if lambda != 0 {
            out.push((a, lambda));
        }
    }
    let (idx, ech) = &blocks[a][c];
    for (k, x) in ech.coordinates(&flatten(&rest)).into_iter().enumerate() {
        if x != 0 {
            out.push((idx[k], x));
        }
    }
    out
}

/// `End_A(T_1 ⊕ ... ⊕ T_n)` with the summand identities as idempotents.
/// A basis element `T_a -> T_c` has ends `(c, a)` and `x · y = x ∘ y`.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub algebra: Arc<Algebra>,
    pub summands: Vec<Module>,
    /// Matrix of each basis element.
    maps: Vec<RatMatrix>,
    /// Per `(a, c)`: basis indices and the echelon they come from.
    blocks: Blocks,
}

impl EndAlgebra {
    pub fn new(name: impl Into<String>, summands: Vec<Module>) -> Result<Self, TheoryError> {
        let n = summands.len();
        let mut maps: Vec<RatMatrix> = summands.iter().map(|t| RatMatrix::identity(t.dim())).collect();
        let mut labels: Vec<String> = (0..n).map(|j| format!("e{}", j + 1)).collect();
        let mut ends: Vec<(usize, usize)> = (0..n).map(|j| (j, j)).collect();
        let mut blocks = vec![Vec::with_capacity(n); n];
        for a in 0..n {
            for c in 0..n {
                let mut ech = Echelon::new(summands[c].dim() * summands[a].dim());
                for f in hom_space(&summands[a], &summands[c])? {
                    let m = if a == c { trace_free(&f.matrix).1 } else { f.matrix };
                    ech.insert(flatten(&m));
                }
                let mut idx = Vec::new();
                for (k, row) in ech.rows().iter().enumerate() {
                    idx.push(maps.len());
                    maps.push(unflatten(row, summands[c].dim(), summands[a].dim()));
                    labels.push(format!("f{}{}_{}", a + 1, c + 1, k + 1));
                    ends.push((c, a));
                }
                blocks[a].push((idx, ech));
            }
        }
        let dim = maps.len();
        let mut table: Vec<Sparse> = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let (c, a) = ends[i];
                let (c2, a2) = ends[j];
                table.push(if a == c2 {
                    let m = maps[i].matmul(&maps[j]).expect("composable");
                    coordinates_in(&blocks, a2, c, &m)
                } else {
                    Vec::new()
                });
            }
        }
        let alg = Algebra::from_table(name, n, labels, ends, table, None)
            .map_err(|e| TheoryError::Algebra(e.to_string()))?;
        Ok(EndAlgebra {
            algebra: Arc::new(alg),
            summands,
            maps,
            blocks,
        })
    }

    /// Coordinates of a map `T_a -> T_c` in the basis of `B`.
    pub fn coordinates(&self, a: usize, c: usize, m: &RatMatrix) -> Sparse {
        coordinates_in(&self.blocks, a, c, m)
    }

    /// `Hom_A(T, X)` as a right B-module, `f · b = f ∘ b`.
    pub fn hom_module(&self, x: &Module) -> Result<Module, TheoryError> {
        let spaces: Vec<Echelon> = self
            .summands
            .iter()
            .map(|t| {
                let mut e = Echelon::new(x.dim() * t.dim());
                for f in hom_space(t, x)? {
                    e.insert(flatten(&f.matrix));
                }
                Ok(e)
            })
            .collect::<Result<_, ModuleError>>()?;
        let reps: Vec<Vec<RatMatrix>> = spaces
            .iter()
            .zip(&self.summands)
            .map(|(e, t)| e.rows().iter().map(|r| unflatten(r, x.dim(), t.dim())).collect())
            .collect();
        self.precomposition_module(&reps, |a, m| spaces[a].coordinates(&flatten(m)))
    }

    /// `Ext^1_A(T, X)` as a right B-module, computed as the cokernel of
    /// `Hom(T, I) -> Hom(T, I/X)` for the injective envelope `X -> I`.
    pub fn ext_module(&self, x: &Module) -> Result<Module, TheoryError> {
        let (i0, embedding) = injective_envelope(x);
        let q = i0.quotient(&embedding.columns());
        let proj = &q.projection;
        let qm = &q.module;
        let mut spaces = Vec::new();
        let mut images = Vec::new();
        let mut free = Vec::new();
        for t in &self.summands {
            let mut e = Echelon::new(qm.dim() * t.dim());
            for f in hom_space(t, qm)? {
                e.insert(flatten(&f.matrix));
            }
            let mut w = Echelon::new(e.len());
            for h in hom_space(t, &i0)? {
                let composite = proj.matmul(&h.matrix).expect("shapes");
                w.insert(e.coordinates(&flatten(&composite)));
            }
            let positions: Vec<usize> = (0..e.len()).filter(|p| !w.pivots().contains(p)).collect();
            spaces.push(e);
            images.push(w);
            free.push(positions);
        }
        let reps: Vec<Vec<RatMatrix>> = (0..self.summands.len())
            .map(|a| {
                let e = &spaces[a];
                free[a]
                    .iter()
                    .map(|&p| unflatten(&e.rows()[p], qm.dim(), self.summands[a].dim()))
                    .collect()
            })
            .collect();
        self.precomposition_module(&reps, |a, m| {
            let reduced = images[a].reduce(spaces[a].coordinates(&flatten(m)));
            free[a].iter().map(|&p| reduced[p].clone()).collect()
        })
    }

    /// Module with basis `reps[j]` at vertex `j` and generator `b: T_a -> T_c`
    /// acting `f ↦ f ∘ b`; `coords(a, m)` expresses a map out of `T_a`.
    fn precomposition_module(
        &self,
        reps: &[Vec<RatMatrix>],
        coords: impl Fn(usize, &RatMatrix) -> Vec<Rat>,
    ) -> Result<Module, TheoryError> {
        let alg = &self.algebra;
        let grading: Vec<usize> = reps.iter().enumerate().flat_map(|(j, r)| vec![j; r.len()]).collect();
        let gens = alg
            .generators()
            .iter()
            .map(|&g| {
                let (c, a) = alg.ends(g);
                let mut block = RatMatrix::zeros(reps[a].len(), reps[c].len());
                for (col, f) in reps[c].iter().enumerate() {
                    let composite = f.matmul(&self.maps[g]).expect("composable");
                    for (row, x) in coords(a, &composite).into_iter().enumerate() {
                        block[(row, col)] = x;
                    }
                }
                block
            })
            .collect();
        Ok(Module::from_blocks(alg.clone(), grading, gens)?)
    }
}

/// Which part of the torsion pair `(Gen T, T^⊥)` an indecomposable lies in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorsionCase {
    Torsion,
    FreeWithFreeTranslate,
    FreeWithTranslateOutside { vertex: usize },
    /// Both `tX` and `fX` are nonzero.
    Neither,
}

pub fn classify(t: &TauTiltingPair, x: &Module) -> Result<TorsionCase, TheoryError> {
    let sum = Module::direct_sum(t.modules())?;
    let parts = trace_torsion(&sum, x)?;
    if parts.free.module.is_zero() {
        return Ok(TorsionCase::Torsion);
    }
    if !parts.torsion.module.is_zero() {
        return Ok(TorsionCase::Neither);
    }
    let tx = tau(x);
    if trace_torsion(&sum, &tx)?.torsion.module.is_zero() {
        return Ok(TorsionCase::FreeWithFreeTranslate);
    }
    let alg = t.algebra();
    for a in 0..alg.vertices() {
        let fp = trace_torsion(&sum, &Module::projective(alg.clone(), a))?.free.module;
        if is_isomorphic(&fp, x)? {
            return Ok(TorsionCase::FreeWithTranslateOutside { vertex: a });
        }
    }
    Err(TheoryError::Hypothesis("no projective P(a) with fP(a) = X".into()))
}

/// The B-side g-vector of `Hom(T, X)` or `Ext^1(T, X)` against `±G_T^{-1}`
/// applied to `g^X` or `g^{P(a)}`, according to where `X` lies.
pub fn verify_prop_3_12(t: &TauTiltingPair, end: &EndAlgebra, x: &Module) -> Result<Report, TheoryError> {
    let g_inv = t.g().inverse()?;
    let case = classify(t, x)?;
    let n = t.algebra().vertices();
    let (label, lhs, rhs) = match case {
        TorsionCase::Torsion => {
            let m = end.hom_module(x)?;
            ("torsion", m.g_vector(), rat_apply(&g_inv, &x.g_vector()))
        }
        TorsionCase::FreeWithFreeTranslate => {
            let m = end.ext_module(x)?;
            ("torsion-free", m.g_vector(), rat_apply(&g_inv.scale(&rat(-1)), &x.g_vector()))
        }
        TorsionCase::FreeWithTranslateOutside { vertex } => {
            let m = end.ext_module(x)?;
            let mut e = vec![0; n];
            e[vertex] = 1;
            ("f-projective", m.g_vector(), rat_apply(&g_inv.scale(&rat(-1)), &e))
        }
        TorsionCase::Neither => {
            return Err(TheoryError::Hypothesis("module is neither torsion nor torsion-free".into()));
        }
    };
    let rhs_json: Vec<_> = rhs.iter().map(crate::report::rat_value).collect();
    Ok(Report::compare(
        "prop-3.12",
        t.algebra().name(),
        json!({"tilting": t.describe(), "module": x.dim_vector_i64(), "case": label}),
        json!(lhs),
        json!(rhs_json),
    ))
}

/// `G_T^{-1} = (g_1, ..., g_n)` with `g_i = g_B^{Hom(T, P(i))}` when
/// `P(i) ∈ add T` and `-g_B^{Ext^1(T, P(i))}` otherwise.
pub fn verify_prop_3_12_corollary(t: &TauTiltingPair, end: &EndAlgebra) -> Result<Report, TheoryError> {
    let alg = t.algebra();
    let n = alg.vertices();
    let mut cols = Vec::with_capacity(n);
    for i in 0..n {
        let p = Module::projective(alg.clone(), i);
        let mut in_add = false;
        for s in t.modules() {
            if is_isomorphic(s, &p)? {
                in_add = true;
            }
        }
        let g: Vec<Rat> = if in_add {
            end.hom_module(&p)?.g_vector().into_iter().map(rat).collect()
        } else {
            end.ext_module(&p)?.g_vector().into_iter().map(|x| rat(-x)).collect()
        };
        cols.push(g);
    }
    let assembled = RatMatrix::from_columns(n, &cols);
    Ok(Report::compare(
        "cor-3.12",
        alg.name(),
        t.describe(),
        rat_json(&assembled),
        rat_json(&t.g().inverse()?),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{hereditary, linear_a};
    use crate::theory::endomorphism_cartan;

    fn a2_pair() -> (Arc<Algebra>, TauTiltingPair) {
        let a = Arc::new(hereditary("A2", &linear_a(2)).unwrap());
        let t = vec![Module::projective(a.clone(), 0), Module::simple(a.clone(), 0)];
        let pair = TauTiltingPair::tilting(&a, t).unwrap();
        (a, pair)
    }

    #[test]
    fn end_algebra_of_a2_tilting() {
        let (_, pair) = a2_pair();
        let end = EndAlgebra::new("B", pair.modules().to_vec()).unwrap();
        end.algebra.verify().unwrap();
        assert_eq!(end.algebra.dim(), 3);
        let cb = endomorphism_cartan(pair.modules()).unwrap();
        let from_b = crate::theory::cartan_matrix(&end.algebra);
        assert_eq!(from_b, cb);
    }

    #[test]
    fn summands_give_projectives() {
        let (_, pair) = a2_pair();
        let end = EndAlgebra::new("B", pair.modules().to_vec()).unwrap();
        for (j, t) in pair.modules().iter().enumerate() {
            let h = end.hom_module(t).unwrap();
            let mut e = vec![0; 2];
            e[j] = 1;
            assert_eq!(h.g_vector(), e);
            assert!(h.is_projective());
            assert!(verify_prop_3_12(&pair, &end, t).unwrap().pass);
        }
    }

    #[test]
    fn simple_two_over_a2() {
        let (a, pair) = a2_pair();
        let end = EndAlgebra::new("B", pair.modules().to_vec()).unwrap();
        let s2 = Module::simple(a.clone(), 1);
        let ext = end.ext_module(&s2).unwrap();
        assert_eq!(ext.dim_vector(), vec![0, 1]);
        let r = verify_prop_3_12(&pair, &end, &s2).unwrap();
        assert!(r.pass, "{r:?}");
        assert!(verify_prop_3_12_corollary(&pair, &end).unwrap().pass);
    }
}
