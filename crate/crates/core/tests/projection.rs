use atlas_core::exactnum::{FieldScalar, Rational, Surd};
use atlas_core::projection::{
    axis_direction, build_planes, c3_panels, compare_with_lists, cyclic_image, decompose, distance_to, eta_embedding,
    figure_points, label_particles, negate, nested_decomposition, particle_lists, pi_plane, plane_checks, project,
    quantum_numbers, recognize_inside_e8, table3_literal, table3_printed_distinct, table3_quantum_numbers,
    three_plane_types, EtaTarget, ParticleKind, PartTag, SubstitutionReading,
};
use atlas_core::rootspace::{generate_roots, inner, AlgebraName, RootVector};

const EXCEPTIONAL: [(AlgebraName, usize, usize); 4] =
    [(AlgebraName::F4, 6, 6), (AlgebraName::E6, 9, 12), (AlgebraName::E7, 15, 30), (AlgebraName::E8, 27, 72)];

fn v(s: &str) -> RootVector {
    RootVector::parse_expr(s).unwrap()
}

fn surd(n: i64, d: i64, s: Surd) -> FieldScalar {
    FieldScalar::surd(Rational::frac(n, d), s)
}

#[test]
fn pi_plane_basics() {
    let pi = pi_plane();
    assert_eq!(project(&v("k1-k2"), &pi).unwrap(), v("k1-k2"));
    assert_eq!(project(&v("k2+k3"), &pi).unwrap(), v("1/3(k2+k3-2k1)"));
    assert_eq!(project(&v("-k1"), &pi).unwrap(), v("1/3(k2+k3-2k1)"));
    assert!(project(&v("k1+k2+k3"), &pi).unwrap().is_zero());
    assert!(project(&v("k7"), &pi).unwrap().is_zero());
}

#[test]
fn decomposition_sizes_and_partition() {
    for (name, j, g0) in EXCEPTIONAL {
        let dec = decompose(name).unwrap();
        let rs = generate_roots(name).unwrap();
        assert_eq!(dec.total(), rs.len());
        assert_eq!(dec.part(PartTag::OuterA2).len(), 6);
        assert_eq!(dec.part(PartTag::G0).len(), g0);
        for m in 1..=3 {
            assert_eq!(dec.part(PartTag::J(m)).len(), j, "{name} J({m})");
            assert_eq!(dec.part(PartTag::JBar(m)).len(), j, "{name} Jbar({m})");
            let d = axis_direction([1, 2, 3], m);
            for r in dec.part(PartTag::J(m)) {
                assert_eq!(project(r, &pi_plane()).unwrap(), d);
            }
        }
        let mut all: Vec<RootVector> = dec.parts.iter().flat_map(|p| p.roots.clone()).collect();
        all.sort();
        assert_eq!(all, rs.roots);
    }
}

#[test]
fn classification_matches_the_listed_sets() {
    for (name, _, _) in EXCEPTIONAL {
        let dec = decompose(name).unwrap();
        let cmp = compare_with_lists(&dec, name).unwrap();
        assert!(cmp.is_ok(), "{name}: {cmp:?}");
        if name == AlgebraName::E7 {
            assert!(!cmp.hw_literal_equal);
            assert_eq!(cmp.hw_literal_non_roots.len(), 2);
        } else {
            assert!(cmp.hw_literal_equal);
        }
    }
}

#[test]
fn cyclic_images_and_negation() {
    for (name, _, _) in EXCEPTIONAL {
        let dec = decompose(name).unwrap();
        let hw = dec.parts.iter().find(|p| p.tag == PartTag::J(1)).unwrap();
        let once = cyclic_image(hw, [1, 2, 3], 1);
        assert_eq!(once.tag, PartTag::J(2));
        assert_eq!(once.roots, dec.part(PartTag::J(2)));
        assert_eq!(cyclic_image(hw, [1, 2, 3], 2).roots, dec.part(PartTag::J(3)));
        assert_eq!(cyclic_image(&cyclic_image(&once, [1, 2, 3], 1), [1, 2, 3], 1), *hw);
        let bar = negate(hw);
        assert_eq!(bar.tag, PartTag::JBar(1));
        assert_eq!(bar.roots, dec.part(PartTag::JBar(1)));
    }
}

#[test]
fn plane_claims_hold() {
    for (name, _, _) in EXCEPTIONAL {
        for c in plane_checks(name).unwrap() {
            assert!(c.ok, "{name}: {}", c.label);
        }
    }
}

#[test]
fn distances() {
    let f4 = build_planes(AlgebraName::F4).unwrap();
    let d = distance_to(f4.subspace("Pi+").unwrap(), f4.subspace("Pi0").unwrap()).unwrap();
    assert_eq!(d.squared, FieldScalar::from(Rational::frac(2, 3)));
    assert_eq!(d.value, Some(surd(1, 3, Surd::R6)));
    let zero = f4.subspace("Pi0").unwrap();
    assert_eq!(distance_to(zero, zero).unwrap().squared, FieldScalar::from(0));
    let e8 = build_planes(AlgebraName::E8).unwrap();
    let d = distance_to(e8.subspace("Sigma+").unwrap(), e8.subspace("Sigma0").unwrap()).unwrap();
    assert_eq!(d.value, Some(surd(1, 3, Surd::R6)));
    let e6 = build_planes(AlgebraName::E6).unwrap();
    assert!(distance_to(e6.subspace("Pi0(1)").unwrap(), e6.subspace("Pi0(2)").unwrap()).is_err());
    assert_eq!(e6.vector("u1").unwrap(), &v("1/6(-5k1+k2+k3+3k4-3k5-r3k6)"));
}

#[test]
fn table3_matches_row_for_row() {
    let rows = table3_quantum_numbers().unwrap();
    assert_eq!(rows.len(), 9);
    assert!(!table3_printed_distinct());
    for lit in table3_literal() {
        let row = rows.iter().find(|r| r.root == lit.root).expect("listed root is an h.w. root");
        assert_eq!((row.plane1_index, row.plane2_index), (lit.block, lit.row), "{}", lit.root);
        assert_eq!(row.st, lit.st, "{}", lit.root);
        assert_eq!(row.st_prime, lit.st_prime, "{}", lit.root);
    }
    let first = rows.iter().find(|r| r.root == v("-k1+k4")).unwrap();
    assert_eq!(first.st, (surd(1, 2, Surd::R2), surd(-1, 6, Surd::R6)));
    let conj = quantum_numbers(&v("k1-k4"), true).unwrap();
    assert_eq!(conj.st, (-&first.st.0, -&first.st.1));
    assert_eq!(conj.st_prime, (-&first.st_prime.0, -&first.st_prime.1));
}

#[test]
fn eta_embeddings() {
    let a5 = eta_embedding(EtaTarget::A5InE6).unwrap();
    assert!(a5.is_ok(), "{:?}", a5.checks);
    assert_eq!(a5.images.len(), 30);
    assert_eq!(a5.image("eta1-eta2"), Some(&v("k4+k5")));
    let d6 = eta_embedding(EtaTarget::D6InE7).unwrap();
    assert!(d6.is_ok(), "{:?}", d6.checks);
    assert_eq!(d6.images.len(), 60);
    assert_eq!(d6.image("eta5+eta6"), Some(&v("k2+k3")));
    let etas = d6.etas.unwrap();
    assert_eq!(inner(&etas[0], &etas[1]), FieldScalar::from(0));
}

#[test]
fn three_plane_subsystems() {
    for (name, _, _) in EXCEPTIONAL {
        for t in three_plane_types(name).unwrap() {
            assert!(t.is_ok(), "{t:?}");
        }
    }
}

#[test]
fn e6_and_e7_inside_e8() {
    let e6 = recognize_inside_e8(AlgebraName::E6).unwrap();
    assert_eq!(e6.reading, SubstitutionReading::SubscriptShift);
    assert!(e6.isometry && e6.set_equal);
    assert_eq!(e6.target_size, 72);
    let e7 = recognize_inside_e8(AlgebraName::E7).unwrap();
    assert_eq!(e7.reading, SubstitutionReading::SubscriptShift);
    assert!(e7.isometry);
    assert_eq!(e7.target_size, 126);
    assert_eq!(e7.images[6], v("r2/2(k2+k3)"));
    assert_eq!(e7.tried.iter().filter(|(_, ok)| *ok).count(), 1);
}

#[test]
fn nested_e8() {
    let tree = nested_decomposition(AlgebraName::E8).unwrap();
    let counts = tree.leaf_counts();
    let total: usize = counts.iter().map(|(_, n)| n).sum();
    assert_eq!(total, 240);
    let a2: Vec<_> = counts.iter().filter(|(_, n)| *n == 6).collect();
    assert_eq!(a2.len(), 4);
    assert_eq!(counts.iter().filter(|(_, n)| *n == 27).count(), 6);
    assert_eq!(counts.iter().filter(|(_, n)| *n == 9).count(), 6);
    assert!(tree.find("a2^g1").unwrap().roots.contains(&v("k7+k8")));
}

#[test]
fn nested_lower_rows() {
    for (name, plus, zero) in [(AlgebraName::F4, 2, 2), (AlgebraName::E6, 4, 4), (AlgebraName::E7, 9, 12)] {
        let tree = nested_decomposition(name).unwrap();
        let g0 = tree.find("g0").unwrap();
        let sizes: Vec<usize> = g0.children.iter().map(|c| c.roots.len()).collect();
        assert_eq!(sizes, vec![plus, plus, zero], "{name}");
    }
}

#[test]
fn particles_partition_e8() {
    let labels = label_particles().unwrap();
    assert_eq!(labels.len(), 240);
    let lists = particle_lists().unwrap();
    let size = |k: ParticleKind| lists.iter().find(|(kind, _)| *kind == k).unwrap().1.len();
    let dec = decompose(AlgebraName::E8).unwrap();
    let tree = nested_decomposition(AlgebraName::E8).unwrap();
    for c in 1..=3 {
        assert_eq!(size(ParticleKind::Quark(c)), 27);
        let q = &lists.iter().find(|(k, _)| *k == ParticleKind::Quark(c)).unwrap().1;
        assert_eq!(q.as_slice(), dec.part(PartTag::J(c)));
    }
    for f in 4..=6 {
        assert_eq!(size(ParticleKind::Lepton(f)), 9);
        let l = &lists.iter().find(|(k, _)| *k == ParticleKind::Lepton(f)).unwrap().1;
        assert_eq!(l, &tree.find(&format!("J({f})")).unwrap().roots);
    }
    let g1 = &lists.iter().find(|(k, _)| *k == ParticleKind::A2g1).unwrap().1;
    assert_eq!(g1, &tree.find("a2^g1").unwrap().roots);
    let quark = labels.iter().find(|l| l.root == v("-k1+k4")).unwrap();
    assert_eq!(quark.kind, ParticleKind::Quark(1));
}

#[test]
fn figure_multiplicities() {
    for (name, j, g0) in [("f4", 6, 6), ("e6", 9, 12), ("e7", 15, 30), ("e8", 27, 72)] {
        let fig = figure_points(name).unwrap();
        assert_eq!(fig.points.len(), 13);
        assert_eq!(fig.center().unwrap().multiplicity, g0);
        let jordan = fig.points.iter().filter(|p| p.tag.starts_with('J')).collect::<Vec<_>>();
        assert_eq!(jordan.len(), 6);
        assert!(jordan.iter().all(|p| p.multiplicity == j));
    }
    let g2 = figure_points("g2").unwrap();
    assert_eq!((g2.points.len(), g2.total_roots()), (12, 12));
    let c3 = figure_points("c3").unwrap();
    assert_eq!(c3.total_roots(), 18);
    let panels = c3_panels().unwrap();
    assert_eq!(panels.iter().map(|(_, p)| p.len()).collect::<Vec<_>>(), vec![6, 6, 6]);
}
