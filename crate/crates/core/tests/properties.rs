use hilbert_schur::algebra::multiply;
use hilbert_schur::kclasses::{basis, KClass};
use hilbert_schur::schur::{convolve_functions, quotient_map};
use hilbert_schur::{IntKClass, SetPartition};
use proptest::prelude::*;

/// A random basis element `target <- source` among the set partitions of `n`.
fn element(n: usize, target: usize, source: usize, pick: usize) -> IntKClass {
    let parts = SetPartition::all(n);
    let (t, s) = (&parts[target % parts.len()], &parts[source % parts.len()]);
    let b = basis(t, s).unwrap();
    KClass::basis_element(&b[pick % b.len()]).unwrap()
}

fn triple() -> impl Strategy<Value = (usize, [usize; 4], [usize; 3], [i64; 3])> {
    (3usize..=4, any::<[usize; 4]>(), any::<[usize; 3]>(), prop::array::uniform3(-3i64..=3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn associative_and_bilinear((n, g, p, c) in triple()) {
        let x = element(n, g[0], g[1], p[0]);
        let y = element(n, g[1], g[2], p[1]);
        let y2 = element(n, g[1], g[2], p[2]);
        let z = element(n, g[2], g[3], p[2]);
        prop_assert_eq!(multiply(&multiply(&x, &y).unwrap(), &z).unwrap(), multiply(&x, &multiply(&y, &z).unwrap()).unwrap());
        let comb = y.scale(&c[0]).add(&y2.scale(&c[1])).unwrap();
        let lhs = multiply(&x.scale(&c[2]), &comb).unwrap();
        let rhs = multiply(&x, &y).unwrap().scale(&(c[0] * c[2])).add(&multiply(&x, &y2).unwrap().scale(&(c[1] * c[2]))).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn units_and_transpose((n, g, p, _) in triple()) {
        let x = element(n, g[0], g[1], p[0]);
        prop_assert_eq!(multiply(&KClass::idempotent(x.target()), &x).unwrap(), x.clone());
        prop_assert_eq!(multiply(&x, &KClass::idempotent(x.source())).unwrap(), x.clone());
        prop_assert_eq!(x.transpose().transpose(), x.clone());
        prop_assert_eq!(x.transpose().target().clone(), x.source().clone());
    }

    #[test]
    fn coordinates_and_json_round_trip((n, g, p, c) in triple()) {
        let x = element(n, g[0], g[1], p[0]).scale(&c[0]).add(&element(n, g[0], g[1], p[1])).unwrap();
        let coords = x.to_basis_coords();
        prop_assert_eq!(KClass::from_basis_coords(x.target(), x.source(), &coords).unwrap(), x.clone());
        prop_assert_eq!(IntKClass::from_json(&x.to_json()).unwrap(), x);
    }

    #[test]
    fn quotient_is_multiplicative((n, g, p, _) in triple()) {
        let x = element(n, g[0], g[1], p[0]);
        let y = element(n, g[1], g[2], p[1]);
        prop_assert_eq!(quotient_map(&multiply(&x, &y).unwrap()), convolve_functions(&quotient_map(&x), &quotient_map(&y)).unwrap());
    }
}

#[test]
fn big_integer_coefficients_agree() {
    let x = element(4, 3, 7, 5);
    let y = element(4, 7, 11, 2);
    let big = multiply(&x.map_coeffs(|v| num_bigint::BigInt::from(*v)), &y.map_coeffs(|v| num_bigint::BigInt::from(*v))).unwrap();
    let small = multiply(&x, &y).unwrap();
    assert_eq!(big, small.map_coeffs(|v| num_bigint::BigInt::from(*v)));
}
