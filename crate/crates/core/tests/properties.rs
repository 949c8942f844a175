use proptest::prelude::*;

use young_core::algebra::{multiply, AlgebraElement};
use young_core::classification::normalize_gl_label;
use young_core::permutation::enumerate_group;
use young_core::schur::{algebra_operator, apply_schur_functor, monoid_operator};
use young_core::tableaux::{count_standard, enumerate_standard, hook_length_count};
use young_core::{
    enumerate_bounded, enumerate_partitions, Field, Permutation, Rational, RationalMatrix,
    YoungDiagram,
};

fn diagram(max_boxes: usize) -> impl Strategy<Value = YoungDiagram> {
    prop::collection::vec(1usize..=max_boxes, 0..=max_boxes)
        .prop_map(YoungDiagram::from_unsorted)
}

fn permutation(max_degree: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_degree).prop_flat_map(|n| {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_one_line(&v).unwrap())
    })
}

fn element(n: usize) -> impl Strategy<Value = AlgebraElement<Rational>> {
    let group = enumerate_group(n).unwrap();
    let len = group.len();
    prop::collection::vec((0..len, -4i64..=4, 1i64..=3), 0..6).prop_map(move |terms| {
        AlgebraElement::from_terms(
            n,
            terms
                .into_iter()
                .map(|(i, p, q)| (group[i].clone(), Rational::from_frac(p, q))),
        )
        .unwrap()
    })
}

fn matrix(n: usize) -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
        RationalMatrix::from_rows(
            v.chunks(n)
                .map(|r| r.iter().map(|&x| Rational::from_int(x)).collect())
                .collect(),
        )
        .unwrap()
    })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(y in diagram(9)) {
        prop_assert_eq!(y.conjugate().conjugate(), y.clone());
        prop_assert_eq!(y.conjugate().box_count(), y.box_count());
        prop_assert_eq!(y.conjugate().row_count(), y.column_count());
    }

    #[test]
    fn diagram_text_round_trip(y in diagram(9)) {
        prop_assert_eq!(y.to_string().parse::<YoungDiagram>().unwrap(), y);
    }

    #[test]
    fn cycle_decomposition_round_trip(g in permutation(10)) {
        let dec = g.cycle_decomposition();
        prop_assert_eq!(dec.to_permutation().unwrap(), g.clone());
        prop_assert_eq!(Permutation::parse(&g.to_string(), None).unwrap(), g.clone());
        prop_assert_eq!(g.cycle_type().box_count(), g.degree());
        let lens: Vec<usize> = dec.cycles.iter().map(Vec::len).collect();
        prop_assert!(lens.windows(2).all(|w| w[0] >= w[1]));
        for c in &dec.cycles {
            prop_assert_eq!(c[0], *c.iter().min().unwrap());
        }
    }

    #[test]
    fn sign_is_multiplicative(
        (g, h) in (1usize..=9).prop_flat_map(|n| {
            let p = Just((1..=n).collect::<Vec<_>>()).prop_shuffle();
            (p.clone(), p)
        })
    ) {
        let g = Permutation::from_one_line(&g).unwrap();
        let h = Permutation::from_one_line(&h).unwrap();
        prop_assert_eq!(g.compose(&h).unwrap().sign(), g.sign() * h.sign());
        prop_assert_eq!(g.conjugate_by(&h).unwrap().cycle_type(), g.cycle_type());
    }

    #[test]
    fn algebra_operator_is_multiplicative(a in element(3), b in element(3)) {
        let ab = multiply(&a, &b).unwrap();
        let lhs = algebra_operator(&ab, 2);
        let rhs = algebra_operator(&a, 2).compose(&algebra_operator(&b, 2)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_powers_commute_with_permutation_algebra(a in element(3), m in matrix(3)) {
        let power = monoid_operator(&m, 3).unwrap();
        prop_assert!(power.commutes_with(&algebra_operator(&a, 3)));
    }

    #[test]
    fn degree_four_operators(a in element(4), b in element(4), m in matrix(2)) {
        let lhs = algebra_operator(&multiply(&a, &b).unwrap(), 2);
        let rhs = algebra_operator(&a, 2).compose(&algebra_operator(&b, 2)).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(monoid_operator(&m, 4).unwrap().commutes_with(&algebra_operator(&a, 2)));
    }

    #[test]
    fn schur_functor_is_functorial(
        a in matrix(2),
        b in matrix(2),
        which in 0usize..4,
    ) {
        let y = [vec![2], vec![3], vec![2, 1], vec![2, 2]][which].clone();
        let y = YoungDiagram::new(y).unwrap();
        let ab = apply_schur_functor(&y, &a.mul(&b).unwrap()).unwrap();
        let prod = apply_schur_functor(&y, &a).unwrap()
            .mul(&apply_schur_functor(&y, &b).unwrap()).unwrap();
        prop_assert_eq!(ab, prod);
    }

    #[test]
    fn normalize_is_idempotent(y in diagram(8), k in -5i64..=5, n in 1usize..=5) {
        prop_assume!(y.row_count() <= n);
        let (z, j) = normalize_gl_label(&y, k, n).unwrap();
        prop_assert!(z.row_count() < n);
        prop_assert_eq!(normalize_gl_label(&z, j, n).unwrap(), (z, j));
    }
}

#[test]
fn four_by_four_schur_functor_is_functorial() {
    // n = 4 with N = 2 covers a shape whose projector has a non-trivial
    // column group and a repeated-row-length row group.
    let a = RationalMatrix::from_i64_rows(&[&[1, 2], &[-1, 3]]).unwrap();
    let b = RationalMatrix::from_i64_rows(&[&[0, 1], &[2, -2]]).unwrap();
    let y = YoungDiagram::new(vec![3, 1]).unwrap();
    let ab = apply_schur_functor(&y, &a.mul(&b).unwrap()).unwrap();
    let prod = apply_schur_functor(&y, &a)
        .unwrap()
        .mul(&apply_schur_functor(&y, &b).unwrap())
        .unwrap();
    assert_eq!(ab, prod);
}

// p(n) by counting compositions of n whose parts are weakly decreasing,
// independent of the recursive generator.
fn partition_count_oracle(n: usize) -> usize {
    if n == 0 {
        return 1;
    }
    (0u32..1 << (n - 1))
        .filter(|mask| {
            let mut parts = Vec::new();
            let mut len = 1;
            for bit in 0..n - 1 {
                if mask >> bit & 1 == 1 {
                    parts.push(len);
                    len = 1;
                } else {
                    len += 1;
                }
            }
            parts.push(len);
            parts.windows(2).all(|w| w[0] >= w[1])
        })
        .count()
}

#[test]
fn partition_enumeration_matches_oracle() {
    for n in 0..=12 {
        let parts = enumerate_partitions(n);
        assert_eq!(parts.len(), partition_count_oracle(n), "n = {n}");
        let set: std::collections::HashSet<_> = parts.iter().collect();
        assert_eq!(set.len(), parts.len());
        assert!(parts.iter().all(|y| y.box_count() == n));
        assert!(parts.windows(2).all(|w| w[0].rows() > w[1].rows()));
    }
}

#[test]
fn bounded_enumeration_is_a_filter() {
    for n in 0..=8 {
        for r in 0..=8 {
            let expected: Vec<_> = enumerate_partitions(n)
                .into_iter()
                .filter(|y| y.row_count() <= r)
                .collect();
            assert_eq!(enumerate_bounded(n, r), expected);
        }
    }
}

#[test]
fn tableau_counts() {
    for n in 0..=10 {
        for y in enumerate_partitions(n) {
            assert_eq!(hook_length_count(&y), count_standard(&y).unwrap().into());
        }
    }
    for n in 0..=8 {
        for y in enumerate_partitions(n) {
            let ts = enumerate_standard(&y).unwrap();
            assert!(ts.iter().all(|t| t.is_standard() && t.shape() == &y));
            assert!(ts.windows(2).all(|w| w[0].reading() < w[1].reading()));
        }
    }
}
