use num_traits::{One, Zero};
use proptest::prelude::*;

use pseudoknot::bijection::{crossing_number, diagram_to_walk, rsk_insert, rsk_reverse, walk_to_diagram};
use pseudoknot::walk::{ChamberPoint, Walk};
use pseudoknot::{binomial, Diagram, Error, Rational, Series, Tableau};

fn diagram_strategy(max_n: usize) -> impl Strategy<Value = Diagram> {
    (0..=max_n).prop_flat_map(|n| {
        let vertices: Vec<usize> = (1..=n).collect();
        (Just(vertices).prop_shuffle(), 0..=n / 2).prop_map(move |(order, pairs)| {
            let arcs = (0..pairs).map(|p| {
                let (a, b) = (order[2 * p], order[2 * p + 1]);
                (a.min(b), a.max(b))
            });
            Diagram::new(n, arcs).expect("disjoint pairs")
        })
    })
}

fn series_strategy(order: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(-20i64..20, order + 1).prop_map(move |c| Series::from_integers(&c, order))
}

proptest! {
    #[test]
    fn rsk_insertion_reverses(values in Just((1u32..=14).collect::<Vec<_>>()).prop_shuffle(), len in 0usize..=14) {
        let mut history = vec![Tableau::empty()];
        for &v in &values[..len] {
            let next = rsk_insert(history.last().unwrap(), v).unwrap();
            prop_assert_eq!(next.len(), history.last().unwrap().len() + 1);
            history.push(next);
        }
        for (i, pair) in history.windows(2).enumerate().rev() {
            let (before, after) = (&pair[0], &pair[1]);
            let (restored, popped) = rsk_reverse(after, &before.shape()).unwrap();
            prop_assert_eq!(&restored, before);
            prop_assert_eq!(popped, values[i]);
        }
    }

    #[test]
    fn diagram_walk_round_trip(d in diagram_strategy(16)) {
        let crossing = crossing_number(&d);
        let k = (crossing + 1).max(2);
        let walk = diagram_to_walk(k, &d).unwrap();
        prop_assert_eq!(walk.len(), d.n());
        prop_assert!(walk.positions().iter().all(|p| ChamberPoint(p.clone()).is_interior()));
        prop_assert_eq!(walk_to_diagram(&walk).unwrap(), d.clone());
        let text = walk.to_string();
        prop_assert_eq!(Walk::parse_steps(k, &text).unwrap(), walk);
        if crossing >= 2 {
            let rejected = matches!(diagram_to_walk(crossing, &d), Err(Error::CrossingTooLarge { .. }));
            prop_assert!(rejected);
        }
    }

    #[test]
    fn diagram_text_round_trip(d in diagram_strategy(20)) {
        let text = d.to_string();
        prop_assert_eq!(text.parse::<Diagram>().unwrap(), d);
    }

    #[test]
    fn series_ring_laws(a in series_strategy(8), b in series_strategy(8), c in series_strategy(8)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn binomial_pascal(n in 1i64..200, k in -3i64..203) {
        prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
        prop_assert_eq!(binomial(n, k), binomial(n, n - k));
    }

    #[test]
    fn rational_inverse(num in -1_000_000i64..1_000_000, den in 1i64..1_000_000) {
        prop_assume!(num != 0);
        let x = Rational::new(num.into(), den.into());
        prop_assert!((&x * x.recip()).is_one());
        prop_assert!((&x - &x).is_zero());
    }
}
