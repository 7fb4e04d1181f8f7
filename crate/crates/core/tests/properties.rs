use atlas_core::exactnum::{FieldScalar, Rational};
use atlas_core::hurwitz::HurwitzElement;
use atlas_core::jordan::{circ, JordanElement};
use atlas_core::rootspace::{generate_roots, inner, AlgebraName, RootVector};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::frac(n, d))
}

fn scalar() -> impl Strategy<Value = FieldScalar> {
    proptest::array::uniform8(rational()).prop_map(FieldScalar::from_components)
}

fn small_scalar() -> impl Strategy<Value = FieldScalar> {
    proptest::array::uniform8((-3i64..=3).prop_map(Rational::int)).prop_map(FieldScalar::from_components)
}

fn octonion() -> impl Strategy<Value = HurwitzElement<FieldScalar>> {
    proptest::collection::vec(small_scalar(), 8).prop_map(|c| HurwitzElement::new(c).unwrap())
}

fn real_octonion() -> impl Strategy<Value = HurwitzElement<Rational>> {
    proptest::collection::vec((-5i64..=5).prop_map(Rational::int), 8).prop_map(|c| HurwitzElement::new(c).unwrap())
}

proptest! {
    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, FieldScalar::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), FieldScalar::one());
        }
    }

    #[test]
    fn conjugations_are_automorphisms(a in scalar(), b in scalar()) {
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a * &b).flip_sqrt2(), &a.flip_sqrt2() * &b.flip_sqrt2());
        prop_assert_eq!((&a * &b).flip_sqrt3(), &a.flip_sqrt3() * &b.flip_sqrt3());
    }

    #[test]
    fn scalar_text_round_trip(a in scalar()) {
        let back: FieldScalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn rational_text_round_trip(q in rational()) {
        let back: Rational = q.to_string().parse().unwrap();
        prop_assert_eq!(back, q);
    }

    #[test]
    fn octonion_norm_is_multiplicative(x in octonion(), y in octonion()) {
        let xy = x.mul(&y).unwrap();
        prop_assert_eq!(xy.norm(), &x.norm() * &y.norm());
    }

    #[test]
    fn octonions_are_alternative(x in octonion(), y in octonion()) {
        prop_assert!(x.associator(&x, &y).unwrap().is_zero());
        prop_assert!(y.associator(&x, &x).unwrap().is_zero());
        prop_assert!(x.associator(&y, &x).unwrap().is_zero());
    }

    #[test]
    fn octonion_conjugation_reverses_products(x in real_octonion(), y in real_octonion()) {
        let lhs = x.mul(&y).unwrap().conj_oct();
        let rhs = y.conj_oct().mul(&x.conj_oct()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jordan_product_is_commutative_and_jordan(
        a in proptest::collection::vec((-3i64..=3).prop_map(Rational::int), 27),
        b in proptest::collection::vec((-3i64..=3).prop_map(Rational::int), 27),
    ) {
        let x = JordanElement::from_coords(8, &a).unwrap();
        let y = JordanElement::from_coords(8, &b).unwrap();
        let xy = circ(&x, &y).unwrap();
        prop_assert_eq!(&xy, &circ(&y, &x).unwrap());
        let x2 = circ(&x, &x).unwrap();
        let lhs = circ(&xy, &x2).unwrap();
        let rhs = circ(&x, &circ(&y, &x2).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn e8_is_closed_under_reflections(i in 0usize..240, j in 0usize..240) {
        let rs = generate_roots(AlgebraName::E8).unwrap();
        let (a, b) = (&rs.roots[i], &rs.roots[j]);
        let two = FieldScalar::from(2);
        let c = &(&two * &inner(a, b)) * &inner(a, a).inv().unwrap();
        let image: RootVector = b + &(-&a.scale(&c));
        prop_assert!(rs.contains(&image));
        prop_assert!(c.to_rational().is_some_and(|q| q.is_integer()));
    }
}
