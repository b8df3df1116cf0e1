use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::sample::Index;
use qcycle_core::enumeration::{enumerate_qcs, EnumFilter};
use qcycle_core::extensions::{
    build_extension, extension_equivalence, generated_congruence, semidirect_product, verify_dynamical_pair,
    DynamicalPair,
};
use qcycle_core::iso::{are_isomorphic, automorphisms, canonical_form};
use qcycle_core::perm::Perm;
use qcycle_core::qcs::verify_qcycle;
use qcycle_core::QCycleSet;

/// Every labeled structure of order 1 to 3.
fn pool() -> &'static [QCycleSet] {
    static POOL: OnceLock<Vec<QCycleSet>> = OnceLock::new();
    POOL.get_or_init(|| {
        (1..=3)
            .flat_map(|n| enumerate_qcs(n, EnumFilter::default()).unwrap().structures)
            .collect()
    })
}

fn structure() -> impl Strategy<Value = QCycleSet> {
    any::<Index>().prop_map(|i| i.get(pool()).clone())
}

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

fn relabeled() -> impl Strategy<Value = (QCycleSet, Perm)> {
    structure().prop_flat_map(|x| {
        let n = x.n();
        (Just(x), perm(n))
    })
}

/// A base from the pool together with fiber tables of size `m`: `α` rows are
/// shuffles, `α′` entries arbitrary.
fn random_pair() -> impl Strategy<Value = DynamicalPair> {
    // the first 15 pool entries are orders 1 and 2
    (any::<Index>().prop_map(|i| i.get(&pool()[..15]).clone()), 1usize..=3)
        .prop_flat_map(|(x, m)| {
            let rows = x.n() * x.n() * m;
            let alpha = proptest::collection::vec(Just((0..m).collect::<Vec<usize>>()).prop_shuffle(), rows);
            let alpha_prime = proptest::collection::vec(0..m, rows * m);
            (Just(x), Just(m), alpha, alpha_prime)
        })
        .prop_map(|(x, m, a, ap)| DynamicalPair::new(x, m, a.concat(), ap).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn canonical_form_is_idempotent_and_invariant((x, p) in relabeled()) {
        let c = canonical_form(&x);
        prop_assert_eq!(&canonical_form(&c), &c);
        prop_assert_eq!(canonical_form(&x.relabel(&p)), c);
    }

    #[test]
    fn isomorphism_witness_transports((x, p) in relabeled()) {
        let y = x.relabel(&p);
        let iso = are_isomorphic(&x, &y).unwrap();
        prop_assert_eq!(x.relabel(&iso), y.clone());
        prop_assert!(x.is_homomorphism_to(&y, iso.images()));
    }

    #[test]
    fn relabeling_preserves_properties((x, p) in relabeled()) {
        let y = x.relabel(&p);
        prop_assert!(verify_qcycle(y.dot_table(), y.colon_table()).unwrap().ok());
        prop_assert_eq!(x.is_regular(), y.is_regular());
        prop_assert_eq!(x.is_nondegenerate(), y.is_nondegenerate());
        prop_assert_eq!(x.is_cycle_set(), y.is_cycle_set());
    }

    #[test]
    fn solution_roundtrip((x, p) in relabeled()) {
        let y = x.relabel(&p);
        let s = y.to_solution();
        prop_assert!(s.is_braided());
        prop_assert!(s.is_left_nondegenerate());
        prop_assert_eq!(s.to_qcycle_set().unwrap(), y);
    }

    #[test]
    fn generated_congruences_are_compatible(x in structure(), a in any::<Index>(), b in any::<Index>()) {
        let n = x.n();
        let (a, b) = (a.index(n), b.index(n));
        let c = generated_congruence(&x, &[(a, b)]);
        prop_assert!(c.is_compatible(&x));
        prop_assert_eq!(c.block_of()[a], c.block_of()[b]);
    }

    #[test]
    fn extension_equivalence_and_regularity(d in random_pair()) {
        prop_assert!(extension_equivalence(&d));
        if verify_dynamical_pair(&d).ok() {
            let e = build_extension(&d).unwrap();
            prop_assert_eq!(e.is_regular(), d.base().is_regular() && d.alpha_prime_rows_bijective());
        }
    }

    #[test]
    fn semidirect_products_are_valid(
        x in structure(),
        s in structure(),
        picks in proptest::collection::vec(any::<Index>(), 3),
    ) {
        let auts = automorphisms(&s, 1000).unwrap();
        let theta: Vec<Perm> = (0..x.n()).map(|i| picks[i].get(&auts).clone()).collect();
        if let Ok(p) = semidirect_product(&x, &s, &theta) {
            prop_assert_eq!(p.n(), x.n() * s.n());
            prop_assert!(verify_qcycle(p.dot_table(), p.colon_table()).unwrap().ok());
        }
    }

    #[test]
    fn constant_theta_semidirect_is_valid(x in structure(), s in structure(), pick in any::<Index>()) {
        // a constant automorphism satisfies the compatibility condition
        let auts = automorphisms(&s, 1000).unwrap();
        let t = pick.get(&auts).clone();
        let p = semidirect_product(&x, &s, &vec![t; x.n()]).unwrap();
        prop_assert!(verify_qcycle(p.dot_table(), p.colon_table()).unwrap().ok());
    }
}
