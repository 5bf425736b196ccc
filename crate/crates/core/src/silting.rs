//! Two-term complexes of projectives `P^{-1} -> P^0` and their homotopy Hom spaces.

use std::sync::Arc;

use serde_json::json;
use thiserror::Error;

use crate::algebra::Algebra;
use crate::linalg::{int_vec, rat, IntMatrix, Rat, RatMatrix};
use crate::module::{hom_dim, ext1_dim, FreeModule, Module, ModuleError, Presentation};
use crate::report::{int_json, Report};
use crate::theory::{apply, is_tau_tilting_pair, is_tilting, TheoryError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SiltingError {
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Theory(#[from] TheoryError),
    #[error("differential of summand {0} has a non-radical entry")]
    NotMinimal(usize),
    #[error("differential of summand {summand} has the wrong shape")]
    Shape { summand: usize },
    #[error("complex is not silting")]
    NotSilting,
    #[error("not a tau-tilting pair")]
    NotTauTilting,
    #[error("algebras differ")]
    AlgebraMismatch,
}

/// A two-term complex given as a direct sum of designated summands. Each
/// summand uses the [`Presentation`] layout: `P^0 = ⊕ e_{p0[l]} A`,
/// `P^{-1} = ⊕ e_{p1[k]} A` and `d[k][l] ∈ e_{p0[l]} A e_{p1[k]}`.
#[derive(Clone, Debug)]
pub struct TwoTermComplex {
    alg: Arc<Algebra>,
    summands: Vec<Presentation>,
}

fn is_radical(alg: &Algebra, x: &[Rat]) -> bool {
    (0..alg.vertices()).all(|v| x[alg.idempotent(v)] == 0)
}

impl TwoTermComplex {
    pub fn new(alg: &Arc<Algebra>, summands: Vec<Presentation>) -> Result<Self, SiltingError> {
        for (i, s) in summands.iter().enumerate() {
            if s.d.len() != s.p1.len() || s.d.iter().any(|row| row.len() != s.p0.len()) {
                return Err(SiltingError::Shape { summand: i });
            }
            if s.d.iter().flatten().any(|x| x.len() != alg.dim() || !is_radical(alg, x)) {
                return Err(SiltingError::NotMinimal(i));
            }
        }
        Ok(TwoTermComplex {
            alg: alg.clone(),
            summands,
        })
    }

    /// `(0 -> A)`.
    pub fn stalk_zero(alg: &Arc<Algebra>) -> Self {
        let summands = (0..alg.vertices())
            .map(|v| Presentation {
                p0: vec![v],
                p1: Vec::new(),
                d: Vec::new(),
            })
            .collect();
        TwoTermComplex {
            alg: alg.clone(),
            summands,
        }
    }

    /// `(A -> 0)`.
    pub fn stalk_one(alg: &Arc<Algebra>) -> Self {
        let summands = (0..alg.vertices()).map(shifted_projective).collect();
        TwoTermComplex {
            alg: alg.clone(),
            summands,
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn summands(&self) -> &[Presentation] {
        &self.summands
    }

    pub fn summand(&self, i: usize) -> TwoTermComplex {
        TwoTermComplex {
            alg: self.alg.clone(),
            summands: vec![self.summands[i].clone()],
        }
    }

    /// The whole complex as one presentation with block-diagonal differential.
    pub fn total(&self) -> Presentation {
        let zero = vec![rat(0); self.alg.dim()];
        let p0: Vec<usize> = self.summands.iter().flat_map(|s| s.p0.iter().copied()).collect();
        let p1: Vec<usize> = self.summands.iter().flat_map(|s| s.p1.iter().copied()).collect();
        let mut d = vec![vec![zero; p0.len()]; p1.len()];
        let (mut r0, mut r1) = (0, 0);
        for s in &self.summands {
            for (k, row) in s.d.iter().enumerate() {
                for (l, x) in row.iter().enumerate() {
                    d[r1 + k][r0 + l] = x.clone();
                }
            }
            r0 += s.p0.len();
            r1 += s.p1.len();
        }
        Presentation { p0, p1, d }
    }

    /// `G_{P*}`: column `i` is `[P^0_i] - [P^{-1}_i]` for the `i`-th summand.
    pub fn g_matrix(&self) -> IntMatrix {
        let n = self.alg.vertices();
        let cols: Vec<_> = self.summands.iter().map(|s| int_vec(&s.g_vector(n))).collect();
        IntMatrix::from_columns(n, &cols)
    }
}

fn shifted_projective(v: usize) -> Presentation {
    Presentation {
        p0: Vec::new(),
        p1: vec![v],
        d: vec![Vec::new()],
    }
}

/// `dim Hom_{D^b}(P, X[shift])` for `shift` 0 or 1.
pub fn hom_complex_dim(p: &TwoTermComplex, x: &Module, shift: usize) -> usize {
    hom_presentation_dim(&p.total(), x, shift)
}

fn hom_presentation_dim(p: &Presentation, x: &Module, shift: usize) -> usize {
    let phi = p.hom_matrix(x);
    let rank = phi.rank();
    match shift {
        0 => p.p0.iter().map(|&u| x.dim_at(u)).sum::<usize>() - rank,
        1 => p.p1.iter().map(|&v| x.dim_at(v)).sum::<usize>() - rank,
        _ => 0,
    }
}

/// `dim Hom_{K^b(proj A)}(P, Q[1])`: maps `P^{-1} -> Q^0` modulo those of the
/// form `h^0 d_P + d_Q h^{-1}`.
pub fn hom_2term_dim(p: &TwoTermComplex, q: &TwoTermComplex) -> Result<usize, SiltingError> {
    if !Arc::ptr_eq(&p.alg, &q.alg) {
        return Err(SiltingError::AlgebraMismatch);
    }
    let alg = &p.alg;
    let (pp, qq) = (p.total(), q.total());
    let q0 = FreeModule::new(alg.clone(), qq.p0.clone());
    let q1 = FreeModule::new(alg.clone(), qq.p1.clone());
    let total: usize = pp.p1.iter().map(|&v| q0.module.dim_at(v)).sum();
    if total == 0 {
        return Ok(0);
    }
    // Precomposition with d_P: Hom(P^0, Q^0) -> Hom(P^{-1}, Q^0).
    let pre = pp.hom_matrix(&q0.module);
    // Postcomposition with d_Q: Hom(P^{-1}, Q^{-1}) -> Hom(P^{-1}, Q^0).
    let dq = free_map_matrix(alg, &q1, &q0, &qq.d);
    let mut cols: Vec<Vec<Rat>> = pre.columns();
    let mut offset = 0;
    for &v in &pp.p1 {
        let src = q1.module.indices(v);
        let tgt = q0.module.indices(v);
        for &c in src {
            let mut col = vec![rat(0); total];
            for (r, &row) in tgt.iter().enumerate() {
                col[offset + r] = dq[(row, c)].clone();
            }
            cols.push(col);
        }
        offset += tgt.len();
    }
    let rank = if cols.is_empty() {
        0
    } else {
        RatMatrix::from_columns(total, &cols).rank()
    };
    Ok(total - rank)
}

/// Matrix of the map `⊕ e_{p1[k]} A -> ⊕ e_{p0[l]} A` with element matrix `d`.
fn free_map_matrix(alg: &Algebra, src: &FreeModule, tgt: &FreeModule, d: &[Vec<Vec<Rat>>]) -> RatMatrix {
    let mut m = RatMatrix::zeros(tgt.module.dim(), src.module.dim());
    for (c, &(k, b)) in src.slot_of.iter().enumerate() {
        let x = alg.basis_vector(b);
        for (l, e) in d[k].iter().enumerate() {
            let y = alg.multiply(e, &x);
            for (r, val) in tgt.embed(l, &y).into_iter().enumerate() {
                if val != 0 {
                    m[(r, c)] += val;
                }
            }
        }
    }
    m
}

/// `Hom_K(P, P[1]) = 0`.
pub fn is_presilting(p: &TwoTermComplex) -> Result<bool, SiltingError> {
    Ok(hom_2term_dim(p, p)? == 0)
}

/// Presilting with `n` summands of pairwise distinct g-vectors. For
/// presilting complexes distinct g-vectors mean non-isomorphic summands.
pub fn is_silting(p: &TwoTermComplex) -> Result<bool, SiltingError> {
    let n = p.alg.vertices();
    if p.summands.len() != n {
        return Ok(false);
    }
    let g: Vec<Vec<i64>> = p.summands.iter().map(|s| s.g_vector(n)).collect();
    for (i, a) in g.iter().enumerate() {
        if g[i + 1..].contains(a) {
            return Ok(false);
        }
    }
    is_presilting(p)
}

/// `φ(P) = (H^0(P), vertices of the summands P(v) -> 0)`.
pub fn phi(p: &TwoTermComplex) -> (Vec<Module>, Vec<usize>) {
    let mut modules = Vec::new();
    let mut projectives = Vec::new();
    for s in &p.summands {
        if s.p0.is_empty() && s.p1.len() == 1 {
            projectives.push(s.p1[0]);
        } else {
            modules.push(cokernel(&p.alg, s));
        }
    }
    (modules, projectives)
}

/// `H^0 = coker(P^{-1} -> P^0)`.
pub fn cokernel(alg: &Arc<Algebra>, s: &Presentation) -> Module {
    let free = FreeModule::new(alg.clone(), s.p0.clone());
    let relations: Vec<Vec<Rat>> = s
        .d
        .iter()
        .map(|row| {
            let mut v = vec![rat(0); free.module.dim()];
            for (l, x) in row.iter().enumerate() {
                for (a, b) in v.iter_mut().zip(free.embed(l, x)) {
                    *a += b;
                }
            }
            v
        })
        .collect();
    free.module.quotient(&relations).module
}

/// `φ^{-1}(M, P) = (P_1 ⊕ P -> P_0)`, with the minimal presentation of each
/// summand of `M` and `P(v) -> 0` for each `v` in `P`.
pub fn phi_inverse(alg: &Arc<Algebra>, modules: &[Module], projectives: &[usize]) -> Result<TwoTermComplex, SiltingError> {
    if !is_tau_tilting_pair(alg, modules, projectives)? {
        return Err(SiltingError::NotTauTilting);
    }
    Ok(phi_inverse_unchecked(alg, modules, projectives))
}

/// As [`phi_inverse`] for τ-rigid pairs of any size.
pub fn phi_inverse_unchecked(alg: &Arc<Algebra>, modules: &[Module], projectives: &[usize]) -> TwoTermComplex {
    let mut summands: Vec<Presentation> = modules.iter().map(Module::presentation).collect();
    summands.extend(projectives.iter().map(|&v| shifted_projective(v)));
    TwoTermComplex {
        alg: alg.clone(),
        summands,
    }
}

/// `G_{P*}^t dim X = (dim Hom(P_i, X) - dim Hom(P_i, X[1]))_i`.
pub fn verify_theorem_7_3(p: &TwoTermComplex, x: &Module) -> Result<Report, SiltingError> {
    if !is_silting(p)? {
        return Err(SiltingError::NotSilting);
    }
    let g = p.g_matrix();
    let lhs = apply(&g.transpose(), &x.dim_vector_i64());
    let rhs: Vec<i64> = p
        .summands
        .iter()
        .map(|s| hom_presentation_dim(s, x, 0) as i64 - hom_presentation_dim(s, x, 1) as i64)
        .collect();
    Ok(Report::compare(
        "thm-7.3",
        p.alg.name(),
        json!({"g": int_json(&g), "module": x.dim_vector_i64()}),
        json!(lhs),
        json!(rhs),
    ))
}

/// When `H^0(P)` is tilting, the shift-0 and shift-1 dimensions agree with
/// `dim Hom(T_i, X)` and `dim Ext^1(T_i, X)`.
pub fn verify_silting_matches_tilting(p: &TwoTermComplex, x: &Module) -> Result<Option<Report>, SiltingError> {
    let (modules, projectives) = phi(p);
    if !projectives.is_empty() || !is_tilting(&modules)? {
        return Ok(None);
    }
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for (s, t) in p.summands.iter().zip(&modules) {
        lhs.push([hom_presentation_dim(s, x, 0), hom_presentation_dim(s, x, 1)]);
        rhs.push([hom_dim(t, x)?, ext1_dim(t, x)?]);
    }
    Ok(Some(Report::compare(
        "thm-7.3-tilting",
        p.alg.name(),
        json!({"g": int_json(&p.g_matrix()), "module": x.dim_vector_i64()}),
        json!(lhs),
        json!(rhs),
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{auslander_nilpotent, hereditary, linear_a};
    use crate::theory::g_matrix_over;

    fn a2() -> Arc<Algebra> {
        Arc::new(hereditary("A2", &linear_a(2)).unwrap())
    }

    #[test]
    fn stalks() {
        let a = a2();
        let x = Module::projective(a.clone(), 0);
        let p = TwoTermComplex::stalk_zero(&a);
        assert_eq!(hom_complex_dim(&p, &x, 0), 2);
        assert_eq!(hom_complex_dim(&p, &x, 1), 0);
        assert!(is_silting(&p).unwrap());
        let q = TwoTermComplex::stalk_one(&a);
        assert_eq!(hom_complex_dim(&q, &x, 0), 0);
        assert_eq!(q.g_matrix(), IntMatrix::identity(2).neg());
        assert!(is_silting(&q).unwrap());
        assert_eq!(hom_2term_dim(&p, &p).unwrap(), 0);
        for s in [Module::simple(a.clone(), 0), Module::simple(a.clone(), 1)] {
            assert!(verify_theorem_7_3(&p, &s).unwrap().pass);
            let r = verify_theorem_7_3(&q, &s).unwrap();
            assert!(r.pass);
            assert_eq!(r.lhs, json!(s.dim_vector_i64().iter().map(|x| -x).collect::<Vec<_>>()));
        }
    }

    #[test]
    fn simple_presentation_over_a2() {
        let a = a2();
        let s1 = Module::simple(a.clone(), 0);
        let p = phi_inverse_unchecked(&a, &[s1], &[]);
        let s2 = Module::simple(a.clone(), 1);
        assert_eq!(hom_complex_dim(&p, &s2, 0), 0);
        assert_eq!(hom_complex_dim(&p, &s2, 1), 1);
        // (0 -> P(1)) against (P(2) -> 0): e_2 A e_1 = 0.
        let p1 = TwoTermComplex::new(&a, vec![Presentation { p0: vec![0], p1: vec![], d: vec![] }]).unwrap();
        let p2 = TwoTermComplex::new(&a, vec![shifted_projective(1)]).unwrap();
        assert_eq!(hom_2term_dim(&p1, &p2).unwrap(), 0);
        assert!(is_presilting(&p1).unwrap());
        assert!(!is_silting(&p1).unwrap());
    }

    #[test]
    fn tilting_module_round_trip() {
        let a = a2();
        let t = vec![Module::projective(a.clone(), 0), Module::simple(a.clone(), 0)];
        let p = phi_inverse(&a, &t, &[]).unwrap();
        assert_eq!(p.g_matrix(), IntMatrix::from_i64(&[&[1, 1], &[0, -1]]));
        assert_eq!(p.g_matrix(), g_matrix_over(&a, &t, &[]).unwrap().g);
        assert!(is_silting(&p).unwrap());
        let (m, proj) = phi(&p);
        assert!(proj.is_empty());
        for (x, y) in m.iter().zip(&t) {
            assert!(crate::module::is_isomorphic(x, y).unwrap());
        }
        for v in 0..2 {
            let s = Module::simple(a.clone(), v);
            assert!(verify_theorem_7_3(&p, &s).unwrap().pass);
            assert!(verify_silting_matches_tilting(&p, &s).unwrap().unwrap().pass);
        }
    }

    #[test]
    fn non_rigid_pair_is_not_presilting() {
        let a = a2();
        let s = vec![Module::simple(a.clone(), 0), Module::simple(a.clone(), 1)];
        let p = phi_inverse_unchecked(&a, &s, &[]);
        assert!(!is_presilting(&p).unwrap());
        assert!(phi_inverse(&a, &s, &[]).is_err());
    }

    #[test]
    fn auslander_ideal_complex() {
        let a = Arc::new(auslander_nilpotent(2).unwrap());
        let rad = Module::projective(a.clone(), 0).radical_submodule().module;
        let t = vec![rad, Module::projective(a.clone(), 1)];
        let p = phi_inverse(&a, &t, &[]).unwrap();
        for v in 0..2 {
            let s = Module::simple(a.clone(), v);
            assert!(verify_theorem_7_3(&p, &s).unwrap().pass);
            assert!(verify_silting_matches_tilting(&p, &s).unwrap().unwrap().pass);
        }
    }

    #[test]
    fn non_radical_differential_is_rejected() {
        let a = a2();
        let mut e = vec![rat(0); a.dim()];
        e[a.idempotent(0)] = rat(1);
        let bad = Presentation { p0: vec![0], p1: vec![0], d: vec![vec![e]] };
        assert!(matches!(TwoTermComplex::new(&a, vec![bad]), Err(SiltingError::NotMinimal(0))));
    }
}
