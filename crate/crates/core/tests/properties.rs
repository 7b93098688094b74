use overpart::bijections::{
    gon_conjugate, gon_conjugate_inverse, hon_from_distinct, hon_to_distinct, involution_i,
    mex_embed, mex_embed_inverse, sylvester_forward, sylvester_inverse, DistinctPair,
};
use overpart::classes::{basis, classify, compose, decompose, ClassId, Decomposition};
use overpart::partitions::{
    boundary_stats, conjugate, maex, mex, parse_overpartition, parse_partition, Overpartition,
    Part, Partition,
};
use overpart::qseries::{qpoch, Count, Series, Sign};
use proptest::prelude::*;

const ORDER: usize = 16;

fn series() -> impl Strategy<Value = Series> {
    prop::collection::vec(-20i64..=20, ORDER + 1).prop_map(|v| Series::from_i64s(&v, ORDER))
}

fn unit_series() -> impl Strategy<Value = Series> {
    (prop::bool::ANY, prop::collection::vec(-9i64..=9, ORDER)).prop_map(|(neg, tail)| {
        let mut v = vec![if neg { -1 } else { 1 }];
        v.extend(tail);
        Series::from_i64s(&v, ORDER)
    })
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=12, 0..10).prop_map(Partition::from_unsorted)
}

fn distinct_partition() -> impl Strategy<Value = Partition> {
    prop::collection::btree_set(1u32..=14, 0..7)
        .prop_map(|s| Partition::from_unsorted(s.into_iter().collect()))
}

fn overpartition() -> impl Strategy<Value = Overpartition> {
    (
        prop::collection::btree_set(1u32..=12, 0..6),
        prop::collection::vec(1u32..=12, 0..8),
    )
        .prop_map(|(o, p)| {
            let parts = o
                .into_iter()
                .map(Part::over)
                .chain(p.into_iter().map(Part::plain))
                .collect();
            Overpartition::new(parts).unwrap()
        })
}

/// A random class member built from a basis element and a padding.
fn member(class: ClassId) -> impl Strategy<Value = Overpartition> {
    (
        1u32..8,
        any::<prop::sample::Index>(),
        prop::collection::vec(0u32..6, 8),
    )
        .prop_map(move |(m, pick, mut pad)| {
            let bases = basis(class, m);
            let base = bases[pick.index(bases.len())].clone();
            pad.truncate(m as usize);
            pad.sort_unstable_by(|a, b| b.cmp(a));
            compose(&Decomposition {
                class,
                base,
                padding: pad,
            })
            .unwrap()
        })
}

proptest! {
    #[test]
    fn series_ring_laws(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.try_mul(&b).unwrap(), b.try_mul(&a).unwrap());
        prop_assert_eq!(
            a.try_mul(&b).unwrap().try_mul(&c).unwrap(),
            a.try_mul(&b.try_mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.try_mul(&b.try_add(&c).unwrap()).unwrap(),
            a.try_mul(&b).unwrap().try_add(&a.try_mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.try_add(&b).unwrap().try_sub(&b).unwrap(), a);
    }

    #[test]
    fn series_inverse(u in unit_series()) {
        let inv = u.invert().unwrap();
        prop_assert_eq!(u.try_mul(&inv).unwrap(), Series::one(ORDER));
        prop_assert_eq!(inv.invert().unwrap(), u);
    }

    #[test]
    fn binomial_mul_div_cancel(s in series(), e in 1usize..10, plus in any::<bool>()) {
        let sign = if plus { Sign::Plus } else { Sign::Minus };
        let mut t = s.clone();
        t.mul_binomial(sign, e);
        t.div_binomial(sign, e);
        prop_assert_eq!(t, s);
    }

    #[test]
    fn pochhammer_splits(a in 1usize..4, n in 0usize..6, m in 0usize..6) {
        let whole = qpoch(a, 1, Count::Finite(n + m), ORDER);
        let left = qpoch(a, 1, Count::Finite(n), ORDER);
        let right = qpoch(a + n, 1, Count::Finite(m), ORDER);
        prop_assert_eq!(whole, left.try_mul(&right).unwrap());
    }

    #[test]
    fn text_round_trip(op in overpartition(), p in partition()) {
        prop_assert_eq!(parse_overpartition(&op.to_string()).unwrap(), op);
        prop_assert_eq!(parse_partition(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn conjugation_is_an_involution(p in partition()) {
        let c = conjugate(&p);
        prop_assert_eq!(c.weight(), p.weight());
        prop_assert_eq!(c.largest(), p.len() as u32);
        prop_assert_eq!(conjugate(&c), p);
    }

    #[test]
    fn involution_swaps_direction(op in overpartition()) {
        prop_assume!(!op.is_empty());
        let img = involution_i(&op).unwrap();
        prop_assert_eq!(img.weight(), op.weight());
        prop_assert_eq!(involution_i(&img).unwrap(), op);
    }

    #[test]
    fn class_decomposition_round_trip((class, op) in prop::sample::select(ClassId::ALL.to_vec())
        .prop_flat_map(|c| (Just(c), member(c))))
    {
        prop_assert!(classify(&op).contains(class));
        let d = decompose(&op, class).unwrap();
        prop_assert_eq!(compose(&d).unwrap(), op);
    }

    #[test]
    fn sylvester_round_trip(op in member(ClassId::Gno)) {
        let pair = sylvester_forward(&op).unwrap();
        prop_assert_eq!(pair.weight(), op.weight());
        prop_assert_eq!(pair.overline_count(), op.num_overlined() as u32);
        prop_assert_eq!(sylvester_inverse(&pair, op.num_overlined() as u32).unwrap(), op);
    }

    #[test]
    fn sylvester_inverse_first(alpha in distinct_partition(), beta in distinct_partition()) {
        let pair = DistinctPair::new(alpha, beta).unwrap();
        let k = pair.overline_count();
        let op = sylvester_inverse(&pair, k).unwrap();
        prop_assert!(classify(&op).contains(ClassId::Gno));
        prop_assert_eq!(op.num_overlined() as u32, k);
        prop_assert_eq!(sylvester_forward(&op).unwrap(), pair);
    }

    #[test]
    fn mex_embed_round_trip(mu in partition(), pick in any::<prop::sample::Index>()) {
        let k = pick.index(mex(&mu) as usize) as u32;
        let op = mex_embed_inverse(&mu, k).unwrap();
        prop_assert!(classify(&op).contains(ClassId::Gno));
        prop_assert_eq!(mex_embed(&op).unwrap(), (mu, k));
    }

    #[test]
    fn gon_conjugate_round_trip(op in member(ClassId::Gon)) {
        let (mu, k) = gon_conjugate(&op).unwrap();
        prop_assert!(k < mu.largest() - maex(&mu).unwrap());
        prop_assert_eq!(gon_conjugate_inverse(&mu, k).unwrap(), op);
    }

    #[test]
    fn hon_round_trip(p in distinct_partition()) {
        prop_assume!(!p.is_empty());
        let op = hon_from_distinct(&p).unwrap();
        let b = boundary_stats(&op);
        prop_assert!(op.num_plain() == 1 && b.ln > b.lo);
        prop_assert_eq!(hon_to_distinct(&op).unwrap(), p);
    }
}
