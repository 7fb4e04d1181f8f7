use atlas_core::exactnum::Rational;
use atlas_core::jordan::{
    check_algebra_axioms, check_pair_axioms, check_triple_axioms, derivations_of_j, reduced_structure_algebra, tkk,
    v_normalization, JordanAlgebra,
};
use atlas_core::lie::{grading_decompose, jacobi_check, GradingSource, JacobiMode};

const NS: [usize; 4] = [1, 2, 4, 8];

#[test]
fn jordan_dimensions() {
    for (n, d) in NS.iter().zip([6, 9, 15, 27]) {
        assert_eq!(JordanAlgebra::new(*n).unwrap().dim(), d);
    }
}

#[test]
fn derivation_and_structure_dimensions() {
    for (n, (der, str0)) in NS.iter().zip([(3, 8), (8, 16), (21, 35), (52, 78)]) {
        assert_eq!(derivations_of_j(*n).unwrap().dim(), der, "Der(J3^{n})");
        assert_eq!(reduced_structure_algebra(*n).unwrap().dim(), str0, "str0(J3^{n})");
    }
}

#[test]
fn tkk_is_a_graded_lie_algebra() {
    for (n, d) in NS.iter().zip([21, 35, 66, 133]) {
        let t = tkk(*n).unwrap();
        assert_eq!(t.lie.dim(), d);
        let mode = if *n == 8 { JacobiMode::Sampled { triples: 20_000, seed: 11 } } else { JacobiMode::Exhaustive };
        let report = jacobi_check(&t.lie, &mode);
        assert!(report.is_ok(), "tkk(J3^{n}): {:?}", report.examples);
        let degrees = t.lie.grading().unwrap().to_vec();
        let dec = grading_decompose(
            &t.lie,
            &[GradingSource::Labels { name: "tkk".into(), degrees, modulus: None }],
        )
        .unwrap();
        let sizes: Vec<usize> = dec.parts.iter().map(|p| p.dim()).collect();
        let m = t.jordan_dim();
        assert_eq!(sizes.iter().sum::<usize>(), d);
        assert!(sizes.contains(&m));
    }
}

#[test]
fn bracket_v_matches_quadratic_v() {
    for n in NS {
        assert_eq!(v_normalization(n, 5, 7).unwrap(), Some(Rational::ONE));
    }
}

#[test]
fn jordan_algebra_axioms() {
    for n in NS {
        let r = check_algebra_axioms(n, 100, 21).unwrap();
        assert!(r.is_ok(), "J3^{n}: {:?}", r.failures);
    }
}

#[test]
fn jordan_triple_axioms() {
    for n in NS {
        let r = check_triple_axioms(n, 100, 22).unwrap();
        assert!(r.is_ok(), "J3^{n}: {:?}", r.failures);
    }
}

#[test]
fn jordan_pair_axioms() {
    for n in NS {
        let r = check_pair_axioms(n, 100, 23).unwrap();
        assert!(r.is_ok(), "J3^{n}: {:?}", r.failures);
        assert_eq!(r.checks, 600);
    }
}
