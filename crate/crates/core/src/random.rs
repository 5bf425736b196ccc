//! Seeded random modules and indecomposable pools.

use std::sync::Arc;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{trace_radical, Algebra, Echelon, Sparse};
use crate::linalg::{rat, Rat};
use crate::module::{hom_space, injective_module, is_isomorphic, tau, tau_inverse, FreeModule, Module, ModuleError};

fn random_element(rng: &mut ChaCha8Rng, free: &FreeModule, radical_only: bool) -> Vec<Rat> {
    let alg = free.module.algebra();
    free.slot_of
        .iter()
        .map(|&(_, b)| {
            if radical_only && b < alg.vertices() {
                rat(0)
            } else {
                rat(rng.random_range(-2i64..=2))
            }
        })
        .collect()
}

/// `F / U` for a free module `F` on one or two random vertices and `U`
/// generated by up to two random radical elements.
fn random_quotient(alg: &Arc<Algebra>, rng: &mut ChaCha8Rng) -> Module {
    let n = alg.vertices();
    let tops = rng.random_range(1..=2usize);
    let vertices: Vec<usize> = (0..tops).map(|_| rng.random_range(0..n)).collect();
    let free = FreeModule::new(alg.clone(), vertices);
    let count = rng.random_range(0..=2usize);
    let gens: Vec<Vec<Rat>> = (0..count).map(|_| random_element(rng, &free, true)).collect();
    free.module.quotient(&gens).module
}

/// A random nonzero module: a quotient of a free module, or the dual of one
/// over the opposite algebra (a submodule of an injective).
pub fn random_module(alg: &Arc<Algebra>, rng: &mut ChaCha8Rng) -> Module {
    loop {
        let m = if rng.random_bool(0.5) {
            random_quotient(alg, rng)
        } else {
            random_quotient(&alg.opposite(), rng).dual()
        };
        if !m.is_zero() {
            return m;
        }
    }
}

/// `count` random modules from a fixed seed.
pub fn random_modules(alg: &Arc<Algebra>, seed: u64, count: usize) -> Vec<Module> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_module(alg, &mut rng)).collect()
}

/// Indecomposable exactly when `End M / rad End M` is one-dimensional.
pub fn is_indecomposable(m: &Module) -> Result<bool, ModuleError> {
    if m.is_zero() {
        return Ok(false);
    }
    let maps: Vec<_> = hom_space(m, m)?.into_iter().map(|f| f.matrix).collect();
    let dim = maps.len();
    if dim == 1 {
        return Ok(true);
    }
    let flat = |x: &crate::linalg::RatMatrix| -> Vec<Rat> {
        (0..x.rows()).flat_map(|r| x.row(r).to_vec()).collect()
    };
    let mut ech = Echelon::new(m.dim() * m.dim());
    for f in &maps {
        ech.insert(flat(f));
    }
    let rows: Vec<_> = ech
        .rows()
        .iter()
        .map(|r| crate::linalg::RatMatrix::from_vec(m.dim(), m.dim(), r.clone()))
        .collect();
    let mut table: Vec<Sparse> = Vec::with_capacity(dim * dim);
    for x in &rows {
        for y in &rows {
            let p = y.matmul(x).expect("square");
            let c = ech.coordinates(&flat(&p));
            table.push(c.into_iter().enumerate().filter(|(_, v)| *v != 0).collect());
        }
    }
    let rad = trace_radical(dim, &table).map_err(|e| ModuleError::Algebra(e.to_string()))?;
    Ok(dim - rad.len() == 1)
}

/// Adds `m` to `pool` unless it is zero, decomposable or already present.
fn push_new(pool: &mut Vec<Module>, m: Module) -> Result<bool, ModuleError> {
    if !is_indecomposable(&m)? {
        return Ok(false);
    }
    for x in pool.iter() {
        if x.dim_vector() == m.dim_vector() && is_isomorphic(x, &m)? {
            return Ok(false);
        }
    }
    pool.push(m);
    Ok(true)
}

/// Indecomposables found from projectives, injectives, simples, radical
/// layers, `count` random modules, and closure under `τ` and `τ^-1`.
/// Complete for small representation-finite algebras whose indecomposables
/// are reached this way; callers should not assume completeness in general.
pub fn indecomposable_pool(alg: &Arc<Algebra>, seed: u64, count: usize) -> Result<Vec<Module>, ModuleError> {
    let n = alg.vertices();
    let mut seeds = Vec::new();
    for v in 0..n {
        let p = Module::projective(alg.clone(), v);
        let depth = alg.radical_power_dims().len();
        for k in 0..=depth {
            let r = p.radical_power(k).module;
            if r.is_zero() {
                break;
            }
            seeds.push(p.quotient(&p.radical_power(k + 1).inclusion.columns()).module);
            seeds.push(r);
        }
        seeds.push(injective_module(alg, v));
        seeds.push(Module::simple(alg.clone(), v));
    }
    seeds.extend(random_modules(alg, seed, count));
    let mut pool = Vec::new();
    for m in seeds {
        push_new(&mut pool, m)?;
    }
    let mut i = 0;
    while i < pool.len() {
        let m = pool[i].clone();
        push_new(&mut pool, tau(&m))?;
        push_new(&mut pool, tau_inverse(&m))?;
        i += 1;
        if pool.len() > 500 {
            break;
        }
    }
    pool.sort_by_key(|m| (m.dim(), m.dim_vector()));
    Ok(pool)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{hereditary, linear_a};

    #[test]
    fn random_modules_are_reproducible() {
        let a = Arc::new(hereditary("A3", &linear_a(3)).unwrap());
        let x = random_modules(&a, 3, 10);
        let y = random_modules(&a, 3, 10);
        for (m, n) in x.iter().zip(&y) {
            assert_eq!(m.dim_vector(), n.dim_vector());
            m.verify().unwrap();
        }
    }

    #[test]
    fn indecomposability() {
        let a = Arc::new(hereditary("A2", &linear_a(2)).unwrap());
        let p = Module::projective(a.clone(), 0);
        assert!(is_indecomposable(&p).unwrap());
        let s = Module::direct_sum(&[Module::simple(a.clone(), 0), Module::simple(a.clone(), 1)]).unwrap();
        assert!(!is_indecomposable(&s).unwrap());
        let two = Module::direct_sum(&[p.clone(), p]).unwrap();
        assert!(!is_indecomposable(&two).unwrap());
    }

    #[test]
    fn pools_of_linear_quivers() {
        for (k, count) in [(2, 3), (3, 6), (4, 10)] {
            let a = Arc::new(hereditary("A", &linear_a(k)).unwrap());
            assert_eq!(indecomposable_pool(&a, 1, 10).unwrap().len(), count);
        }
    }
}
