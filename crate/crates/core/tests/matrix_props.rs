use mfact_core::poly::rational;
use mfact_core::{EvalPoint, PolyMatrix, Polynomial, ShuffleMatrix, VarId};
use proptest::prelude::*;

fn entry() -> impl Strategy<Value = Polynomial> {
    prop_oneof![
        Just(Polynomial::zero()),
        (-4i64..=4).prop_map(Polynomial::integer),
        (-3i64..=3, 0usize..3, 1u32..3).prop_map(|(c, v, e)| {
            let x = Polynomial::var(["x", "y", "z"][v]).unwrap().pow(e);
            &x * &Polynomial::integer(c)
        }),
    ]
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = PolyMatrix> {
    proptest::collection::vec(entry(), rows * cols).prop_map(move |es| {
        let mut it = es.into_iter();
        PolyMatrix::from_fn(rows, cols, |_, _| it.next().unwrap())
    })
}

fn sized(max: usize) -> impl Strategy<Value = PolyMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| matrix(r, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn kron_mixed_product(
        (a, b, c, d) in (2usize..=3, 2usize..=3).prop_flat_map(|(n, m)| {
            (matrix(n, n), matrix(m, m), matrix(n, n), matrix(m, m))
        })
    ) {
        let lhs = a.kron(&b).mul(&c.kron(&d)).unwrap();
        let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kron_associative(a in sized(3), b in sized(3), c in sized(2)) {
        prop_assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
    }

    #[test]
    fn shuffle_conjugation(a in sized(4), b in sized(4)) {
        let (p, q) = a.shape();
        let (r, s) = b.shape();
        let left = ShuffleMatrix::new(p, r).to_matrix();
        let right = ShuffleMatrix::new(q, s).to_matrix().transpose();
        let got = left.mul(&a.kron(&b)).unwrap().mul(&right).unwrap();
        prop_assert_eq!(got, b.kron(&a));
    }

    #[test]
    fn shuffle_is_orthogonal(m in 1usize..=5, n in 1usize..=5) {
        let s = ShuffleMatrix::new(m, n).to_matrix();
        prop_assert_eq!(s.mul(&s.transpose()).unwrap(), PolyMatrix::identity(m * n));
    }

    #[test]
    fn direct_sum_distributes_over_right_kron(
        (a, b, c) in (1usize..=3, 1usize..=3).prop_flat_map(|(n, k)| {
            (matrix(n, n), matrix(n, n), matrix(k, k))
        })
    ) {
        prop_assert_eq!(a.direct_sum(&b).kron(&c), a.kron(&c).direct_sum(&b.kron(&c)));
    }

    #[test]
    fn evaluation_commutes_with_product(a in matrix(3, 2), b in matrix(2, 3), vals in proptest::collection::vec(-20i64..=20, 3)) {
        let mut pt = EvalPoint::new();
        for (n, v) in ["x", "y", "z"].iter().zip(vals) {
            pt.set(VarId::new(n).unwrap(), rational(v));
        }
        let lhs = a.mul(&b).unwrap().evaluate(&pt).unwrap();
        let rhs = a.evaluate(&pt).unwrap().mul(&b.evaluate(&pt).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn evaluate_small_cases() {
    let pt = EvalPoint::new().with(VarId::new("x").unwrap(), rational(3));
    let m = PolyMatrix::from_rows(vec![
        vec![Polynomial::var("x").unwrap(), Polynomial::integer(-2)],
        vec![Polynomial::integer(2), Polynomial::var("x").unwrap()],
    ])
    .unwrap();
    let e = m.evaluate(&pt).unwrap();
    assert_eq!(
        (e.get(0, 0), e.get(0, 1), e.get(1, 0), e.get(1, 1)),
        (&rational(3), &rational(-2), &rational(2), &rational(3))
    );
    assert!(PolyMatrix::identity(4)
        .evaluate(&pt)
        .unwrap()
        .is_identity_multiple(&rational(1)));
    assert!(PolyMatrix::scalar(&Polynomial::var("q").unwrap(), 1)
        .evaluate(&pt)
        .is_err());
}
