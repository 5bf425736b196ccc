use std::sync::Arc;

use proptest::prelude::*;

use gmatrix::algebra::Algebra;
use gmatrix::catalog;
use gmatrix::linalg::IntMatrix;
use gmatrix::module::{hom_dim, Module};
use gmatrix::mutation::{mutate, s_matrix, verify_theorem_3_11};
use gmatrix::random::random_modules;
use gmatrix::theory::{verify_cartan_g_vector, verify_key_lemma};
use gmatrix::weyl::{inverse_word, CartanGcm};

fn skew_symmetric() -> impl Strategy<Value = (IntMatrix, usize)> {
    (2usize..=6).prop_flat_map(|m| {
        (proptest::collection::vec(-4i64..=4, m * (m - 1) / 2), 0..m).prop_map(move |(upper, k)| {
            let mut rows = vec![vec![0i64; m]; m];
            let mut it = upper.into_iter();
            for i in 0..m {
                for j in i + 1..m {
                    let x = it.next().unwrap();
                    rows[i][j] = x;
                    rows[j][i] = -x;
                }
            }
            (IntMatrix::from_i64_rows(&rows).unwrap(), k)
        })
    })
}

fn algebra(name: &str) -> Arc<Algebra> {
    catalog::build(name).unwrap().algebra
}

const ALGEBRAS: &[&str] = &["hereditary:A3", "auslander:n=3", "preprojective:A2", "preprojective:B2:d=2,1"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mutation_is_an_involution((b, k) in skew_symmetric()) {
        let mu = mutate(&b, k).unwrap();
        prop_assert_eq!(mutate(&mu, k).unwrap(), b.clone());
        prop_assert_eq!(mutate(&b.neg(), k).unwrap(), mu.neg());
    }

    #[test]
    fn s_matrices_conjugate_to_mutation((b, k) in skew_symmetric()) {
        let mu = mutate(&b, k).unwrap();
        for sign in [b.clone(), b.neg()] {
            let s = s_matrix(&sign, k).unwrap();
            let conj = s.transpose().matmul(&b).unwrap().matmul(&s).unwrap();
            prop_assert_eq!(conj, mu.clone());
            prop_assert_eq!(s.det().unwrap().to_string(), "-1");
        }
        prop_assert!(verify_theorem_3_11(&b, k).unwrap().pass);
    }

    #[test]
    fn sigma_is_transpose_of_inverse(ty in prop::sample::select(vec!["A2", "A3", "B2", "C3", "D4", "G2"]),
                                     raw in proptest::collection::vec(0usize..4, 0..10)) {
        let gcm = CartanGcm::of_type(ty).unwrap();
        let w: Vec<usize> = raw.into_iter().map(|i| i % gcm.rank()).collect();
        let sigma = gcm.sigma_word(&w).unwrap();
        let r_inv = gcm.word_matrix(&inverse_word(&w)).unwrap();
        prop_assert_eq!(sigma, r_inv.transpose());
        let r = gcm.word_matrix(&w).unwrap();
        prop_assert_eq!(gcm.word_matrix(&gcm.reduce(&w).unwrap()).unwrap(), r.clone());
        let det = r.det().unwrap().to_string();
        prop_assert!(det == "1" || det == "-1");
        prop_assert!(r.is_column_sign_coherent() || !gcm.is_reduced(&w).unwrap() || w.is_empty());
    }

    #[test]
    fn key_lemma_on_random_pairs(which in 0..ALGEBRAS.len(), seed in any::<u64>()) {
        let alg = algebra(ALGEBRAS[which]);
        let mods = random_modules(&alg, seed, 2);
        prop_assert!(verify_key_lemma(&mods[0], &mods[1]).unwrap().pass);
        prop_assert!(verify_cartan_g_vector(&mods[0]).unwrap().pass);
    }

    #[test]
    fn hom_ignores_basis_order(which in 0..ALGEBRAS.len(), seed in any::<u64>(), shuffle in any::<u64>()) {
        let alg = algebra(ALGEBRAS[which]);
        let mods = random_modules(&alg, seed, 2);
        let m = &mods[0];
        let mut perm: Vec<usize> = (0..m.dim()).collect();
        let mut s = shuffle;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let p = m.permuted(&perm);
        p.verify().unwrap();
        prop_assert_eq!(p.dim_vector(), m.dim_vector());
        prop_assert_eq!(hom_dim(&p, &mods[1]).unwrap(), hom_dim(m, &mods[1]).unwrap());
        prop_assert_eq!(hom_dim(&mods[1], &p).unwrap(), hom_dim(&mods[1], m).unwrap());
        prop_assert_eq!(p.g_vector(), m.g_vector());
    }
}

#[test]
fn projectives_have_unit_g_vectors() {
    for name in ALGEBRAS {
        let alg = algebra(name);
        for v in 0..alg.vertices() {
            let g = Module::projective(alg.clone(), v).g_vector();
            let mut e = vec![0; alg.vertices()];
            e[v] = 1;
            assert_eq!(g, e, "{name} P{}", v + 1);
        }
    }
}
