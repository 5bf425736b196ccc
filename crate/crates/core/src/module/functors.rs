//! Transpose, Auslander-Reiten translates, injectives and the Nakayama functor.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::linalg::{rat, RatMatrix};

use super::{FreeModule, Module};

/// `Tr M`, a right module over the opposite algebra: the cokernel of
/// `Hom(P_0, A) -> Hom(P_1, A)`.
pub fn transpose(m: &Module) -> Module {
    let p = m.presentation();
    let op = m.algebra().opposite();
    let free = FreeModule::new(op, p.p1.clone());
    let relations: Vec<_> = (0..p.p0.len())
        .map(|l| {
            let mut v = vec![rat(0); free.module.dim()];
            for (k, row) in p.d.iter().enumerate() {
                for (x, y) in v.iter_mut().zip(free.embed(k, &row[l])) {
                    *x += y;
                }
            }
            v
        })
        .collect();
    free.module.quotient(&relations).module
}

/// `τ M = D Tr M`.
pub fn tau(m: &Module) -> Module {
    transpose(m).dual()
}

/// `τ⁻ M = Tr D M`.
pub fn tau_inverse(m: &Module) -> Module {
    transpose(&m.dual())
}

/// `I(i) = D(A e_i)`.
pub fn injective_module(alg: &Arc<Algebra>, i: usize) -> Module {
    Module::projective(alg.opposite(), i).dual()
}

/// Injective envelope `M -> I`, returned with the embedding matrix.
pub fn injective_envelope(m: &Module) -> (Module, RatMatrix) {
    let dm = m.dual();
    let cover = dm.cover();
    (cover.free.module.dual(), cover.map.transpose())
}

/// `ν M = D Hom_A(M, A)`, where `Hom_A(M, A)` is the kernel of
/// `Hom(P_0, A) -> Hom(P_1, A)` between free modules over the opposite algebra.
pub fn nakayama(m: &Module) -> Module {
    let p = m.presentation();
    let op = m.algebra().opposite();
    let f0 = FreeModule::new(op.clone(), p.p0.clone());
    let f1 = FreeModule::new(op.clone(), p.p1.clone());
    let mut map = RatMatrix::zeros(f1.module.dim(), f0.module.dim());
    for (col, &(l, b)) in f0.slot_of.iter().enumerate() {
        let x = op.basis_vector(b);
        for (k, row) in p.d.iter().enumerate() {
            let y = op.multiply(&row[l], &x);
            for (r, c) in f1.embed(k, &y).into_iter().enumerate() {
                if c != 0 {
                    map[(r, col)] += c;
                }
            }
        }
    }
    let kernel = if f1.module.dim() == 0 {
        f0.module.clone()
    } else {
        f0.module.submodule(&map.kernel_basis()).module
    };
    kernel.dual()
}
