use proptest::prelude::*;
use quandle_core::closure::{self, GroupKind, DEFAULT_CAP};
use quandle_core::constructors::*;
use quandle_core::euler::euler_characteristic;
use quandle_core::spec::{self, parse_spec};
use quandle_core::{FiniteGroup, FiniteQuandle, Permutation};

fn small_quandle() -> impl Strategy<Value = FiniteQuandle> {
    prop_oneof![
        (1usize..7).prop_map(|n| trivial(n).unwrap()),
        (1usize..10).prop_map(|n| dihedral(n).unwrap()),
        (1usize..5).prop_map(|n| discrete_sphere(n).unwrap()),
        (2usize..5).prop_map(|n| cycle_quandle(n).unwrap()),
        (2usize..5).prop_map(|n| path_quandle(n).unwrap()),
        (2usize..8, 1usize..8).prop_map(|(n, k)| {
            let g = FiniteGroup::cyclic(n).unwrap();
            // k is coprime to n only sometimes; fall back to inversion
            let sigma = g.power_map(k).unwrap_or_else(|_| g.inversion_map());
            galex(&g, &sigma).unwrap()
        }),
    ]
}

fn relabeling(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn quandle_and_relabeling() -> impl Strategy<Value = (FiniteQuandle, Permutation)> {
    small_quandle().prop_flat_map(|q| {
        let n = q.size();
        (Just(q), relabeling(n))
    })
}

fn chi(q: &FiniteQuandle) -> usize {
    euler_characteristic(q, DEFAULT_CAP).unwrap().chi.unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn table_json_round_trip_is_byte_identical(q in small_quandle()) {
        let text = spec::table_json(&q);
        let again = parse_spec(&text).unwrap().resolve().unwrap();
        prop_assert_eq!(&again, &q);
        prop_assert_eq!(spec::table_json(&again), text);
    }

    #[test]
    fn relabeling_preserves_invariants((q, pi) in quandle_and_relabeling()) {
        let r = q.relabel(&pi).unwrap();
        for x in 0..q.size() {
            for y in 0..q.size() {
                prop_assert_eq!(r.act(pi.apply(x), pi.apply(y)), pi.apply(q.act(x, y)));
            }
        }
        prop_assert_eq!(chi(&r), chi(&q));
        prop_assert_eq!(r.is_connected(), q.is_connected());
        prop_assert_eq!(r.is_trivial(), q.is_trivial());
        let order = |q: &FiniteQuandle| closure::group_order(q, GroupKind::Displacement, DEFAULT_CAP).unwrap();
        prop_assert_eq!(order(&r), order(&q));
    }

    #[test]
    fn point_symmetries_are_automorphisms(q in small_quandle()) {
        for x in 0..q.size() {
            prop_assert!(q.is_automorphism(&q.point_symmetry(x).unwrap()));
        }
    }

    #[test]
    fn dis_is_a_subgroup_of_inn(q in small_quandle()) {
        let inn = closure::quandle_group(&q, GroupKind::Inner, DEFAULT_CAP).unwrap();
        let dis = closure::quandle_group(&q, GroupKind::Displacement, DEFAULT_CAP).unwrap();
        prop_assert!(dis.elements().all(|g| inn.contains(g)));
        prop_assert_eq!(inn.order() % dis.order(), 0);
    }

    #[test]
    fn chi_bounds(q in small_quandle()) {
        let c = chi(&q);
        prop_assert!(c <= q.size());
        prop_assert_eq!(c == q.size(), q.is_trivial());
    }

    #[test]
    fn product_and_union_are_quandles(x in small_quandle(), y in small_quandle()) {
        let p = FiniteQuandle::direct_product(&x, &y).unwrap();
        prop_assert_eq!(p.size(), x.size() * y.size());
        prop_assert!(FiniteQuandle::validate(p.table()).is_ok());
        let u = FiniteQuandle::free_union(&x, &y).unwrap();
        prop_assert_eq!(u.size(), x.size() + y.size());
        prop_assert!(FiniteQuandle::validate(u.table()).is_ok());
        for a in 0..x.size() {
            for b in 0..y.size() {
                prop_assert_eq!(u.act(a, x.size() + b), x.size() + b);
                prop_assert_eq!(u.act(x.size() + b, a), a);
            }
        }
    }

    #[test]
    fn spec_value_round_trip(n in 1usize..9, dim in 1usize..5) {
        let text = format!(
            r#"{{"type":"product","factors":[{{"type":"dihedral","n":{n}}},{{"type":"free_union","parts":[{{"type":"sphere","dim":{dim}}},{{"type":"trivial","n":1}}]}}]}}"#
        );
        let parsed = parse_spec(&text).unwrap();
        let reparsed = parse_spec(&parsed.to_value().to_string()).unwrap();
        prop_assert_eq!(&reparsed, &parsed);
        prop_assert_eq!(reparsed.resolve().unwrap(), parsed.resolve().unwrap());
    }
}
