use gmatrix::catalog::{self, parse_module};
use gmatrix::endo::{classify, verify_prop_3_12, verify_prop_3_12_corollary, EndAlgebra, TorsionCase};
use gmatrix::module::Module;
use gmatrix::theory::{verify_prop_3_3, verify_theorem_3_1, TauTiltingPair};

#[test]
fn a3_tilting_module_with_split_and_unsplit_modules() {
    let alg = catalog::build("hereditary:A3").unwrap().algebra;
    let t: Vec<Module> = ["P3", "I1", "P1"].iter().map(|s| parse_module(&alg, s).unwrap()).collect();
    let t = TauTiltingPair::tilting(&alg, t).unwrap();
    assert!(t.is_tilting());
    assert!(verify_prop_3_3(&t).unwrap().pass);
    let end = EndAlgebra::new("End T", t.modules().to_vec()).unwrap();
    let mut cases = Vec::new();
    for spec in ["S1", "S2", "S3", "P1", "P2", "P3", "I1", "I2", "I3", "radI1"] {
        let x = parse_module(&alg, spec).unwrap();
        assert!(verify_theorem_3_1(&t, &x).unwrap().pass, "{spec}");
        let case = classify(&t, &x).unwrap();
        if case != TorsionCase::Neither {
            assert!(verify_prop_3_12(&t, &end, &x).unwrap().pass, "{spec}");
        }
        cases.push(case);
    }
    assert!(cases.contains(&TorsionCase::Neither));
    assert!(cases.contains(&TorsionCase::Torsion));
    assert!(verify_prop_3_12_corollary(&t, &end).unwrap().pass);
}

#[test]
fn a2_projective_plus_simple() {
    let alg = catalog::build("hereditary:A2").unwrap().algebra;
    let t = TauTiltingPair::new(&alg, vec![parse_module(&alg, "P1").unwrap(), parse_module(&alg, "S1").unwrap()], vec![]).unwrap();
    assert!(t.is_tilting());
    assert_eq!(t.g().to_i64_rows(), vec![vec![1, 1], vec![0, -1]]);
    for v in 0..2 {
        assert!(verify_theorem_3_1(&t, &Module::simple(alg.clone(), v)).unwrap().pass);
    }
}
