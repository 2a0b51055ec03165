//! Randomized checks beyond the exhaustive boxes: random data at larger
//! weights and random operator words.

use mvpoly::{AlgebraKind, Crystal, LusztigDatum, Node, Op, Partition, RealRoot, Side, Solver};
use proptest::prelude::*;

fn kind() -> impl Strategy<Value = AlgebraKind> {
    prop_oneof![Just(AlgebraKind::Sl2Hat), Just(AlgebraKind::A22)]
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..5, 0..4).prop_map(Partition::from_parts)
}

fn datum() -> impl Strategy<Value = LusztigDatum> {
    (
        kind(),
        prop::collection::vec((any::<bool>(), 1u32..5, 1u32..4), 0..4),
        partition(),
    )
        .prop_map(|(kind, real, delta)| {
            let entries = real.into_iter().map(|(low, k, m)| {
                (
                    if low {
                        RealRoot::low(k)
                    } else {
                        RealRoot::high(k)
                    },
                    m,
                )
            });
            LusztigDatum::new(kind, entries, delta).unwrap()
        })
}

fn raising_word() -> impl Strategy<Value = Vec<Op>> {
    prop::collection::vec(prop::sample::select(Op::RAISING.to_vec()), 0..10)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn completion_is_mv_and_invertible(d in datum(), side in prop_oneof![Just(Side::Left), Just(Side::Right)]) {
        let solver = Solver::fast();
        let p = solver.complete(side, &d).unwrap();
        prop_assert!(p.is_mv().passes());
        prop_assert!(p.is_convex());
        prop_assert_eq!(p.weight(), d.weight());
        let (mine, other) = match side {
            Side::Left => (p.left().clone(), p.right().clone()),
            Side::Right => (p.right().clone(), p.left().clone()),
        };
        prop_assert_eq!(&mine, &d);
        let back = solver.complete(side.other(), &other).unwrap();
        prop_assert_eq!(back, p.clone());
        prop_assert!(p.swapped().is_mv().passes());
    }

    #[test]
    fn pruned_and_fast_solvers_agree(d in datum()) {
        let pruned = Solver::new(mvpoly::Strategy::Pruned).left_to_right(&d).unwrap();
        prop_assert_eq!(pruned, Solver::fast().left_to_right(&d).unwrap());
    }

    #[test]
    fn random_words_stay_in_the_crystal(k in kind(), word in raising_word()) {
        let c = Crystal::new(k);
        let b = c.apply_word(&word, &c.lowest()).unwrap();
        let expected = word.iter().fold(mvpoly::RootVector::ZERO, |w, op| match op {
            Op::E(i) | Op::EStar(i) => w + i.simple_root(),
            _ => unreachable!(),
        });
        prop_assert_eq!(b.weight(), expected);
        prop_assert!(b.polytope().is_mv().passes());
        let mut negated: Vec<_> = b.polytope().vertex_multiset().into_iter().map(|v| b.weight() - v).collect();
        negated.sort();
        prop_assert_eq!(c.star(&b).polytope().vertex_multiset(), negated);
        for i in Node::ALL {
            let up = c.e(i, &b).unwrap();
            prop_assert_eq!(c.f(i, &up).unwrap(), Some(b.clone()));
            if c.phi(i, &b) == 0 {
                let s = c.saito(i, &b).unwrap();
                prop_assert_eq!(c.saito_star(i, &s).unwrap(), b.clone());
                prop_assert_eq!(s.weight(), k.simple_reflection(i, b.weight()));
            }
        }
    }

    #[test]
    fn imaginary_left_completes_to_trapezoid(k in kind(), lambda in partition()) {
        let p = Solver::oracle().complete(Side::Left, &LusztigDatum::imaginary(k, lambda.clone())).unwrap();
        prop_assert_eq!(p.right(), &LusztigDatum::trapezoid(k, &lambda));
    }
}
