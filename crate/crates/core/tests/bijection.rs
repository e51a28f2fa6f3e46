use hallway::affine::{compose, from_lhp};
use hallway::{CosetRep, SignedPermutation, WindowStats};
use proptest::prelude::*;

fn signed_perm(max_n: usize) -> impl Strategy<Value = SignedPermutation> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let values: Vec<i64> = (1..=n as i64).collect();
            (Just(values).prop_shuffle(), prop::collection::vec(any::<bool>(), n))
        })
        .prop_map(|(values, signs)| {
            let signed = values.iter().zip(signs).map(|(&v, neg)| if neg { -v } else { v }).collect();
            SignedPermutation::new(signed).unwrap()
        })
}

/// A pair `(c, σ)` whose ceiling vector climbs by at least one at every descent.
fn pair(max_n: usize) -> impl Strategy<Value = (Vec<i64>, SignedPermutation)> {
    signed_perm(max_n).prop_flat_map(|sigma| {
        let n = sigma.len();
        prop::collection::vec(0..3i64, n).prop_map(move |steps| {
            let des = sigma.des_set();
            let mut prev = 0;
            let c = steps
                .iter()
                .enumerate()
                .map(|(i, &step)| {
                    prev += step + i64::from(des.contains(&i));
                    prev
                })
                .collect();
            (c, sigma.clone())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn composed_windows_are_representatives((c, sigma) in pair(8)) {
        let w = compose(&c, &sigma).unwrap();
        let again = CosetRep::new(w.window().to_vec()).unwrap();
        prop_assert_eq!(again.decompose(), (c, sigma));
    }

    #[test]
    fn partition_is_class_inversion_vector((c, sigma) in pair(8)) {
        let w = compose(&c, &sigma).unwrap();
        let lambda = w.to_lhp();
        let inv = w.class_inv();
        prop_assert_eq!(lambda.parts(), inv.entries());
        prop_assert_eq!(lambda.weight(), inv.inv_tilde());
    }

    #[test]
    fn window_partition_round_trip((c, sigma) in pair(8)) {
        let w = compose(&c, &sigma).unwrap();
        prop_assert_eq!(from_lhp(&w.to_lhp()).unwrap(), w);
    }

    #[test]
    fn statistics_agree_on_both_sides((c, sigma) in pair(8)) {
        let w = compose(&c, &sigma).unwrap();
        prop_assert_eq!(WindowStats::from_partition(&w.to_lhp()).unwrap(), w.stats());
    }

    #[test]
    fn dropping_a_descent_step_is_rejected((c, sigma) in pair(6)) {
        let des = sigma.des_set();
        if let Some(&i) = des.first() {
            let mut bad = c.clone();
            let floor = if i == 0 { 0 } else { c[i - 1] };
            for v in bad.iter_mut().skip(i) {
                *v -= c[i] - floor;
            }
            prop_assert!(compose(&bad, &sigma).is_err());
        }
    }
}
