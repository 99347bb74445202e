use num_bigint::BigInt;
use proptest::prelude::*;
use qpartitions::{ProductSpec, QSeries};

fn series(len: usize) -> impl Strategy<Value = QSeries> {
    prop::collection::vec(-50i64..50, len).prop_map(|c| QSeries::from_i64s(&c))
}

fn unit_series(len: usize) -> impl Strategy<Value = QSeries> {
    (prop_oneof![Just(1i64), Just(-1i64)], prop::collection::vec(-20i64..20, len - 1)).prop_map(
        |(c0, rest)| {
            let mut c = vec![c0];
            c.extend(rest);
            QSeries::from_i64s(&c)
        },
    )
}

proptest! {
    #[test]
    fn multiplication_commutes(a in series(24), b in series(24)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn multiplication_distributes(a in series(16), b in series(16), c in series(16)) {
        prop_assert_eq!(a.mul(&(&b + &c)), &a.mul(&b) + &a.mul(&c));
    }

    #[test]
    fn inverse_is_two_sided(u in unit_series(30)) {
        let inv = u.inverse().unwrap();
        prop_assert_eq!(u.mul(&inv), QSeries::one(30));
    }

    #[test]
    fn dissections_reassemble(a in series(40), m in 1usize..6) {
        let mut rebuilt = QSeries::zero(40);
        for r in 0..m {
            let part = a.dissect(m, r).unwrap();
            let spread = part.substitute_power(m).unwrap();
            let take = spread.precision().min(40 - r.min(40));
            let shifted = spread.truncate(take).unwrap().shift(r);
            let padded: Vec<BigInt> = (0..40)
                .map(|i| shifted.coeff(i).cloned().unwrap_or_default())
                .collect();
            rebuilt = &rebuilt + &QSeries::from_coeffs(padded);
        }
        prop_assert_eq!(rebuilt, a);
    }

    #[test]
    fn negative_power_inverts(u in unit_series(20), e in 1i64..4) {
        let up = u.pow(e).unwrap();
        let down = u.pow(-e).unwrap();
        prop_assert_eq!(up.mul(&down), QSeries::one(20));
    }

    #[test]
    fn product_expansion_is_multiplicative(
        k1 in 1usize..5, e1 in -3i64..4, k2 in 1usize..5, e2 in -3i64..4,
    ) {
        let n = 60;
        let joint = ProductSpec::new().eta(k1, e1).eta(k2, e2).expand(n).unwrap();
        let apart = ProductSpec::new().eta(k1, e1).expand(n).unwrap()
            .mul(&ProductSpec::new().eta(k2, e2).expand(n).unwrap());
        prop_assert_eq!(joint, apart);
    }

    #[test]
    fn substitution_commutes_with_product(k in 1usize..4, e in -3i64..4, s in 2usize..4) {
        let spec = ProductSpec::new().eta(k, e).pochhammer(1, 2, 1);
        let direct = spec.substituted(s).unwrap().expand(60).unwrap();
        let via = spec.expand(30).unwrap().substitute_power(s).unwrap().truncate(60).unwrap();
        prop_assert_eq!(direct, via);
    }

    #[test]
    fn bivariate_specializes_to_univariate(h in 1i64..4, t in 1usize..5) {
        let spec = ProductSpec::new()
            .eta(2, 1)
            .z_pochhammer(h, 1, 1, -1)
            .z_pochhammer(-h, t, t, -1);
        let b = spec.expand_bivariate(25).unwrap();
        let flat = ProductSpec::new().eta(2, 1).eta(1, -1).eta(t, -1).expand(25).unwrap();
        prop_assert_eq!(b.at_z_one(), flat);
    }
}

#[test]
fn json_round_trip_keeps_big_values() {
    let p = ProductSpec::new().eta(1, -1).expand(301).unwrap();
    let text = serde_json::to_string(&p).unwrap();
    assert!(text.contains("\"9253082936723602\""));
    let back: QSeries = serde_json::from_str(&text).unwrap();
    assert_eq!(back, p);
}
