use atlas_core::rootspace::*;
use atlas_core::{FieldScalar, Rational};

#[test]
fn table_counts_and_ranks() {
    let expected = [
        (AlgebraName::G2, 12, 2),
        (AlgebraName::F4, 48, 4),
        (AlgebraName::E6, 72, 6),
        (AlgebraName::E7, 126, 7),
        (AlgebraName::E8, 240, 8),
    ];
    for (name, count, rank) in expected {
        let rs = generate_roots(name).unwrap();
        assert_eq!(rs.len(), count, "{name}");
        assert_eq!(rs.rank, rank, "{name}");
        let report = validate_root_system(&rs);
        assert!(report.is_valid(), "{name}: {:?}", report.violations.first());
    }
}

#[test]
fn f4_root_lengths() {
    let rs = generate_roots(AlgebraName::F4).unwrap();
    let long = rs.roots.iter().filter(|r| r.norm2() == FieldScalar::from(2)).count();
    let short = rs.roots.iter().filter(|r| r.norm2() == FieldScalar::one()).count();
    assert_eq!((long, short), (24, 24));
}

#[test]
fn g2_length_ratio() {
    let rs = generate_roots(AlgebraName::G2).unwrap();
    let mut norms: Vec<FieldScalar> = rs.roots.iter().map(RootVector::norm2).collect();
    norms.sort();
    norms.dedup();
    assert_eq!(norms, vec![FieldScalar::from(Rational::frac(2, 3)), FieldScalar::from(2)]);
}

#[test]
fn parity_readings() {
    println!("e6: {:?}", resolve_parity_reading(AlgebraName::E6));
    println!("e7: {:?}", resolve_parity_reading(AlgebraName::E7));
}

#[test]
fn exceptional_types() {
    for (name, ty) in [
        (AlgebraName::G2, "G2"),
        (AlgebraName::F4, "F4"),
        (AlgebraName::E6, "E6"),
        (AlgebraName::E7, "E7"),
        (AlgebraName::E8, "E8"),
    ] {
        let rs = generate_roots(name).unwrap();
        assert_eq!(dynkin_type(&rs).unwrap().to_string(), ty);
    }
}
