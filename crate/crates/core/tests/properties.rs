use blobtilt::adjoint::bythat_identity;
use blobtilt::coeff::{CycInt, ParamBundle, RingElement, Specialization};
use blobtilt::linalg::{rank, SparseVector};
use blobtilt::mult::vm_table;
use blobtilt::rep::{build_blob, check_relations, Variant};
use blobtilt::words::Word;
use num_rational::BigRational;
use proptest::prelude::*;

fn ring_element() -> impl Strategy<Value = RingElement> {
    prop::collection::vec((-6i64..=6, -3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3), 0..4).prop_map(|terms| {
        RingElement::from_terms(terms.into_iter().map(|(e, a, b, c, d)| (e, CycInt::new(a, b, c, d))))
    })
}

fn spec() -> impl Strategy<Value = Specialization> {
    (1i64..=50, 1i64..=50, 1i64..=4)
        .prop_map(|(p, q, m)| Specialization::rational(BigRational::new(p.into(), q.into()), m).unwrap())
        .prop_filter("valid point", |s| s.is_valid())
}

fn field_vectors(s: &Specialization, raw: &[Vec<(usize, i64, i64)>], dim: usize) -> Vec<SparseVector<blobtilt::coeff::FieldElement>> {
    let k = s.field();
    raw.iter()
        .map(|v| {
            SparseVector::from_entries(
                dim,
                v.iter().map(|&(i, a, b)| (i % dim, &k.integer(a) + &(&k.zeta_pow(1) * &k.integer(b)))),
            )
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(a in ring_element(), b in ring_element(), c in ring_element()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &RingElement::one(), a.clone());
    }

    #[test]
    fn specialization_is_a_homomorphism(a in ring_element(), b in ring_element(), s in spec()) {
        prop_assert_eq!(s.eval(&(&a * &b)), &s.eval(&a) * &s.eval(&b));
        prop_assert_eq!(s.eval(&(&a + &b)), &s.eval(&a) + &s.eval(&b));
    }

    #[test]
    fn field_inverse(s in spec(), a in -5i64..=5, b in -5i64..=5) {
        prop_assume!(a != 0 || b != 0);
        let k = s.field();
        let x = &k.integer(a) + &(&k.zeta_pow(1) * &k.integer(b));
        prop_assert_eq!(&x * &x.inverse().unwrap(), k.one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn rank_invariances(
        s in spec(),
        raw in prop::collection::vec(prop::collection::vec((0usize..12, -3i64..=3, -3i64..=3), 0..5), 1..9),
        scale in 1i64..=7,
        shift in 0usize..8,
    ) {
        let dim = 12;
        let vs = field_vectors(&s, &raw, dim);
        let r = rank(&vs).unwrap();
        prop_assert!(r <= vs.len().min(dim));
        let k = s.field();
        let c = &k.integer(scale) + &k.zeta_pow(2);
        let scaled: Vec<_> = vs.iter().map(|v| v.scale(&c)).collect();
        prop_assert_eq!(rank(&scaled).unwrap(), r);
        let mut rotated = vs.clone();
        rotated.rotate_left(shift % vs.len());
        prop_assert_eq!(rank(&rotated).unwrap(), r);
        let mut doubled = vs.clone();
        doubled.push(vs[0].add(&vs[vs.len() - 1]));
        prop_assert_eq!(rank(&doubled).unwrap(), r);
    }

    #[test]
    fn bythat_dependency(bits in 0u64..256, n in 5usize..=8, i in 1usize..=7, j in 1usize..=7) {
        prop_assume!(i < n && j < n && i.abs_diff(j) >= 2);
        let mut l = Word::from_index((bits as usize) & ((1 << n) - 1), n).letters();
        l[i - 1] = 1;
        l[i] = 2;
        l[j - 1] = 1;
        l[j] = 2;
        let w = Word::from_letters(&l).unwrap();
        let p = ParamBundle::<RingElement>::generic(2);
        prop_assert!(bythat_identity(w, i, j, &p).unwrap());
    }

    #[test]
    fn relations_at_random_points(s in spec(), n in 1usize..=3) {
        let g = build_blob(n, &ParamBundle::specialized(&s).unwrap(), Variant::Rho).unwrap();
        for r in check_relations(&g).unwrap() {
            prop_assert!(r.passed(), "{}", r.line());
        }
    }

    #[test]
    fn vm_cross_template(l in -8i64..=8, mu in -4i64..=5) {
        let t = vm_table(12, 6).unwrap();
        let l = 2 * (l / 2);
        prop_assert_eq!(
            t.get(l - 2, mu) + 2 * t.get(l, mu) + t.get(l + 2, mu),
            t.get(l, mu + 1) + t.get(l, mu - 1)
        );
        prop_assert_eq!(t.get(l, mu), t.get(-l, mu));
        prop_assert_eq!(t.get(l, mu), t.get(l, 1 - mu));
    }
}
