use atlas_core::exactnum::Rational;
use atlas_core::lie::{jacobi_check, JacobiMode};
use atlas_core::titslie::*;
use std::time::Instant;

#[test]
fn fitted_constants_match_named_constants() {
    for (h, n) in [(4, 1), (4, 2), (8, 1)] {
        let f = fit_tits_constants(h, n, 60, 1).unwrap();
        assert!(f.consistent);
        assert_eq!(f.lambda, Some(tits_lambda()), "λ from T({h},{n})");
        assert_eq!(f.mu, Some(tits_mu()), "μ from T({h},{n})");
    }
    // over C the middle bracket is μ[L_x, L_y] alone, so Jacobi cannot see μ
    let f = fit_tits_constants(2, 4, 60, 1).unwrap();
    assert_eq!((f.lambda, f.mu), (None, None));
}

#[test]
fn wrong_constants_break_jacobi() {
    let l = tits_construct_with(4, 2, &Rational::frac(1, 3), &tits_mu()).unwrap();
    assert!(!jacobi_check(&l, &JacobiMode::Exhaustive).is_ok());
    let l = tits_construct_with(4, 2, &tits_lambda(), &Rational::ONE).unwrap();
    assert!(!jacobi_check(&l, &JacobiMode::Exhaustive).is_ok());
}

#[test]
fn dimension_formula() {
    let der_h = [0, 0, 3, 14];
    let der_j = [3, 8, 21, 52];
    for (a, h) in HURWITZ_DIMS.iter().enumerate() {
        for (b, n) in HURWITZ_DIMS.iter().enumerate() {
            let l = tits_construct(*h, *n).unwrap();
            assert_eq!(l.dim(), der_h[a] + (h - 1) * (3 * n + 2) + der_j[b]);
            assert_eq!(l.dim(), MAGIC_DIMS[a][b]);
        }
    }
}

#[test]
fn e8_construction_and_sampled_jacobi_is_fast() {
    let t = Instant::now();
    let l = tits_construct(8, 8).unwrap();
    let (r, _) = verify_jacobi(&l, VerifyMode::Sampled { triples: 2000, seed: 9 });
    assert!(r.is_ok());
    assert_eq!(l.dim(), 248);
    assert!(t.elapsed().as_secs() < 300);
}

#[test]
fn zorn_e8_grading() {
    let z = zorn_graded_e8().unwrap();
    let (coarse, fine) = zorn_grading(&z).unwrap();
    let dims: Vec<usize> = coarse.parts.iter().map(|p| p.dim()).collect();
    assert_eq!(dims, vec![86, 81, 81]);
    let twenty_sevens = fine.parts.iter().filter(|p| p.dim() == 27).count();
    assert_eq!(twenty_sevens, 6);
    assert!(jacobi_check(&z.lie, &JacobiMode::Sampled { triples: 500, seed: 2 }).is_ok());
}

#[test]
fn chain_bookkeeping() {
    let inp = ChainInputs {
        tits_blocks: [14, 182, 52],
        l0: 86,
        l_k: [27; 6],
        d7: 8,
        e6_a2_roots: 6,
        e6_jordan_roots: [9; 6],
        e6_g0_roots: 12,
        e6_rank: 6,
    };
    let c = chain_decompose_e8(&inp).unwrap();
    assert_eq!(c.totals(), vec![248; 4]);
    assert_eq!(c.tree.leaf_roots(), 240);
    let bad = ChainInputs { l0: 85, ..inp };
    assert!(chain_decompose_e8(&bad).is_err());
}
