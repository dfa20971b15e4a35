use proptest::prelude::*;
use rand::Rng;

use rankmetric::construct;
use rankmetric::equivalence::RankEquivalence;
use rankmetric::gf::{Fe, Field};
use rankmetric::linalg::{self, Subspace, Tag};
use rankmetric::rankcore;
use rankmetric::rng;
use rankmetric::schemes;
use rankmetric::weights;

const CAP: u128 = 1 << 22;

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 48,
        ..ProptestConfig::default()
    }
}

/// `(p, e, m)` with `p^{em}` small enough for exhaustive checks.
fn small_field() -> impl Strategy<Value = (u32, u32, u32)> {
    prop_oneof![
        (1..=4u32).prop_map(|m| (2, 1, m)),
        (1..=2u32).prop_map(|m| (3, 1, m)),
        Just((2, 2, 2)),
        Just((5, 1, 2)),
    ]
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn field_operations((p, e, m) in small_field(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let f = Field::new(p, e, m).unwrap();
        let n = f.order();
        let (a, b, c) = (Fe(a % n), Fe(b % n), Fe(c % n));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
        }
        let q = f.q() as u64;
        prop_assert_eq!(f.frobenius(f.mul(a, b), 1), f.mul(f.frobenius(a, 1), f.frobenius(b, 1)));
        prop_assert_eq!(f.pow(a, q), f.frobenius(a, 1));
        prop_assert!(f.in_subfield(f.trace(a)));
        prop_assert_eq!(f.from_coords(&f.coords(a)), a);
    }

    #[test]
    fn rank_weight_profile_shape(seed in any::<u64>(), m in 1..=3u32, n in 1..=4usize, k in 1..=4usize) {
        let k = k.min(n);
        let f = Field::new(2, 1, m).unwrap();
        let mut r = rng::seeded(seed);
        let c = construct::random_code(&f, n, k, &mut r).unwrap();
        let d = weights::grw_profile(&c, CAP).unwrap();
        let h = weights::hamming_weights(&c, CAP).unwrap().values;
        prop_assert_eq!(d.len(), k);
        prop_assert!(d.windows(2).all(|w| w[0] < w[1]));
        for r in 1..=k {
            prop_assert!(d[r - 1] <= h[r - 1]);
            prop_assert!(d[r - 1] <= n - k + r);
        }
        prop_assert_eq!(d[k - 1], c.rank_weight());
        let brute = c
            .codewords()
            .filter(|w| w.iter().any(|x| !x.is_zero()))
            .map(|w| rankcore::rank_weight(&f, &w))
            .min()
            .unwrap();
        prop_assert_eq!(d[0], brute);
    }

    #[test]
    fn equivalences_preserve_rank_weights(seed in any::<u64>(), m in 2..=3u32, n in 2..=4usize, k in 1..=3usize) {
        let k = k.min(n);
        let f = Field::new(2, 1, m).unwrap();
        let mut r = rng::seeded(seed);
        let c = construct::random_code(&f, n, k, &mut r).unwrap();
        let beta = loop {
            let x = linalg::random_scalar(&f, Tag::Ext, &mut r);
            if !x.is_zero() {
                break x;
            }
        };
        let a = linalg::random_full_rank(&f, Tag::Base, n, n, &mut r);
        let eq = RankEquivalence::new(&f, beta, a, Subspace::full(n, Tag::Ext)).unwrap();
        let image = eq.apply_code(&c).unwrap();
        prop_assert_eq!(weights::grw_profile(&c, CAP).unwrap(), weights::grw_profile(&image, CAP).unwrap());
        for w in c.codewords().take(16) {
            prop_assert_eq!(rankcore::rank_weight(&f, &w), rankcore::rank_weight(&f, &eq.apply(&f, &w).unwrap()));
        }
    }

    #[test]
    fn leakage_is_monotone_and_bounded(seed in any::<u64>(), n in 2..=4usize, k1 in 1..=3usize, k2 in 0..=2usize) {
        let k1 = k1.min(n);
        let k2 = k2.min(k1 - 1);
        let f = Field::new(2, 1, 2).unwrap();
        let mut r = rng::seeded(seed);
        let p = construct::random_pair(&f, n, k1, k2, &mut r).unwrap();
        let small = linalg::random_subspace(&f, Tag::Base, n, r.random_range(0..=n), &mut r);
        let extra = linalg::random_subspace(&f, Tag::Base, n, 1, &mut r);
        let big = small.sum(&f, &extra).unwrap();
        let (a, b) = (schemes::leakage(&p, &small).unwrap(), schemes::leakage(&p, &big).unwrap());
        prop_assert!(a <= b && b <= a + 1);
        prop_assert!(b <= p.ell());
        prop_assert_eq!(schemes::leakage(&p, &Subspace::full(n, Tag::Base)).unwrap(), p.ell());
        let oracle = schemes::leakage_entropy_oracle(&p, big.basis(), CAP).unwrap();
        prop_assert_eq!(oracle, schemes::rational(b));
    }

    #[test]
    fn closure_is_the_smallest_frobenius_stable_superspace(seed in any::<u64>(), m in 2..=3u32, n in 1..=3usize, k in 1..=2usize) {
        let k = k.min(n);
        let f = Field::new(2, 1, m).unwrap();
        let mut r = rng::seeded(seed);
        let d = linalg::random_subspace(&f, Tag::Ext, n, k, &mut r);
        let star = rankcore::closure(&f, &d);
        prop_assert!(d.is_subspace_of(&f, &star).unwrap());
        prop_assert!(rankcore::is_galois_closed(&f, &star));
        prop_assert_eq!(star.dim(), rankcore::space_rank_weight(&f, &d));
        let brute = linalg::all_subspaces(&f, n, Tag::Ext, CAP)
            .unwrap()
            .into_iter()
            .filter(|v| rankcore::is_galois_closed(&f, v) && d.is_subspace_of(&f, v).unwrap())
            .map(|v| v.dim())
            .min()
            .unwrap();
        prop_assert_eq!(star.dim(), brute);
    }
}
