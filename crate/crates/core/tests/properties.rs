//! Property tests for the invariants that hold across the whole parameter space.

use num_traits::ToPrimitive;
use proptest::prelude::*;
use symweight::arith::pow;
use symweight::bounds::{best_bounds, cw_lower, Direction, NoOracle};
use symweight::codes::{exhaustive_optimum, hamming, parse_code, Code, CodeFile, CodeFormat, WordSpace};
use symweight::compositions::{dplus, hamming_distance_compositions, is_refinement, Composition};
use symweight::spaces::{
    bounded_word_count, entropy_q, scan_symbol_weights, size_bounded_sw, size_constant_sw, SpaceMode,
};
use symweight::{Config, Count, Exec};

/// Composition of `n` into `q` parts from `q-1` cut points.
fn composition(n: u32, q: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(0..=n, q - 1).prop_map(move |mut cuts| {
        cuts.sort_unstable();
        let mut prev = 0;
        let mut parts: Vec<u32> = cuts.iter().map(|&c| std::mem::replace(&mut prev, c)).collect();
        for (p, c) in parts.iter_mut().zip(&cuts) {
            *p = c - *p;
        }
        parts.push(n - prev);
        Composition::new(parts).unwrap()
    })
}

fn shape() -> impl Strategy<Value = (u32, usize)> {
    (1u32..=30, 1usize..=8)
}

fn triple() -> impl Strategy<Value = (Composition, Composition, Composition)> {
    shape().prop_flat_map(|(n, q)| (composition(n, q), composition(n, q), composition(n, q)))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 512, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn dplus_is_a_metric((a, b, c) in triple()) {
        let ab = dplus(&a, &b).unwrap();
        prop_assert_eq!(ab, dplus(&b, &a).unwrap());
        prop_assert_eq!(ab == 0, a == b);
        prop_assert!(dplus(&a, &c).unwrap() <= ab + dplus(&b, &c).unwrap());
    }

    #[test]
    fn dplus_is_half_the_l1_distance((a, b, _c) in triple()) {
        let l1: u32 = a.parts().iter().zip(b.parts()).map(|(x, y)| x.abs_diff(*y)).sum();
        prop_assert_eq!(2 * dplus(&a, &b).unwrap(), l1);
    }

    #[test]
    fn dplus_at_least_half_the_differing_parts((a, b, _c) in triple()) {
        let dh = hamming_distance_compositions(&a, &b).unwrap();
        prop_assert!(2 * dplus(&a, &b).unwrap() >= dh);
    }

    #[test]
    fn uniform_gaps_scale_the_bound((n, q) in shape(), gap in 1u32..5, seed in any::<u64>()) {
        // Shift mass between coordinates in multiples of `gap`, so every
        // per-part difference is 0 or at least `gap`.
        let base = vec![gap * n; q];
        let mut other = base.clone();
        let mut s = seed;
        for _ in 0..q {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let (i, j) = ((s >> 33) as usize % q, (s >> 13) as usize % q);
            let k = ((s >> 50) as u32 % 3) * gap;
            if other[i] >= k {
                other[i] -= k;
                other[j] += k;
            }
        }
        let (a, b) = (Composition::new(base).unwrap(), Composition::new(other).unwrap());
        prop_assert!(a.parts().iter().zip(b.parts()).all(|(x, y)| x == y || x.abs_diff(*y) >= gap));
        let dh = hamming_distance_compositions(&a, &b).unwrap();
        prop_assert!(2 * dplus(&a, &b).unwrap() >= dh * gap);
    }

    #[test]
    fn dplus_lower_bounds_word_distance(q in 1u32..6, words in prop::collection::vec(prop::collection::vec(0u32..6, 12), 2)) {
        let (x, y): (Vec<u32>, Vec<u32>) = (words[0].iter().map(|s| s % q).collect(), words[1].iter().map(|s| s % q).collect());
        let (a, b) = (Composition::of_word(&x, q as usize).unwrap(), Composition::of_word(&y, q as usize).unwrap());
        prop_assert!(dplus(&a, &b).unwrap() <= hamming(&x, &y));
    }

    #[test]
    fn merging_parts_gives_a_refinement(a in (1u32..=12, 2usize..=6).prop_flat_map(|(n, q)| composition(n, q))) {
        let p = a.parts();
        let mut merged = vec![p[0] + p[1]];
        merged.extend_from_slice(&p[2..]);
        let coarse = Composition::new(merged).unwrap();
        prop_assert!(is_refinement(&a, &coarse).is_some());
    }

    #[test]
    fn exact_sizes_partition_and_accumulate(n in 1u32..=16, q in 1u32..=6) {
        let cfg = Config::default();
        let lo = n.div_ceil(q);
        let mut total = Count::from(0u32);
        for r in lo..=n {
            let exact = size_constant_sw(n, q, r, &cfg).unwrap();
            let bounded = size_bounded_sw(n, q, r, &cfg).unwrap();
            if r > lo {
                prop_assert_eq!(&bounded - size_bounded_sw(n, q, r - 1, &cfg).unwrap(), exact.clone());
            } else {
                prop_assert_eq!(&bounded, &exact);
            }
            prop_assert_eq!(&bounded, &bounded_word_count(n, q, r));
            total += exact;
        }
        prop_assert_eq!(total, pow(q as u64, n as u64));
    }

    #[test]
    fn entropy_stays_in_the_unit_interval(q in 2u32..=64, x in 0.0f64..=1.0) {
        let h = entropy_q(x, q).unwrap();
        let peak = entropy_q((q - 1) as f64 / q as f64, q).unwrap();
        prop_assert!((-1e-12..=peak + 1e-12).contains(&h));
        prop_assert!((peak - 1.0).abs() < 1e-12);
    }

    #[test]
    fn code_files_round_trip(n in 1usize..6, q in 1u32..6, raw in prop::collection::vec(any::<u32>(), 1..20), d in proptest::option::of(0u32..7), r in proptest::option::of(0u32..7)) {
        let mut words: Vec<Vec<u32>> = raw.chunks(1).map(|c| (0..n).map(|i| c[0].rotate_left(i as u32 * 5) % q).collect()).collect();
        words.sort();
        words.dedup();
        let code = Code::new(n, q, words).unwrap();
        let file = CodeFile::from_code(&code, d, r);
        for fmt in [CodeFormat::Text, CodeFormat::Json] {
            prop_assert_eq!(&parse_code(&file.render(fmt)).unwrap(), &file);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn bounds_sandwich_the_optimum(
        (n, q) in (1u32..=4, 2u32..=4),
        d in 1u32..=4,
        r in 1u32..=4,
        bounded in any::<bool>(),
    ) {
        prop_assume!(d <= n && r <= n);
        let mode = if bounded { SpaceMode::Bounded } else { SpaceMode::Exact };
        prop_assume!(bounded || r * q >= n);
        let cfg = Config::default();
        let b = best_bounds(n, q, d, r, mode, &NoOracle, &cfg).unwrap();
        let space = if bounded { WordSpace::BoundedWeight(r) } else { WordSpace::ExactWeight(r) };
        let opt = Count::from(exhaustive_optimum(n as usize, q, d, &space, &cfg).unwrap().size);
        let empty = r * q < n;
        for x in &b.all {
            let v = x.size_value().unwrap();
            if x.direction.bounds_below() && !empty {
                prop_assert!(v <= &opt, "{:?} {} > {}", x.provenance, v, opt);
            }
            if x.direction.bounds_above() {
                prop_assert!(v >= &opt, "{:?} {} < {}", x.provenance, v, opt);
            }
        }
    }

    #[test]
    fn refinement_never_shrinks_the_optimum(a in (2u32..=6, 2usize..=3).prop_flat_map(|(n, q)| composition(n, q)), d in 1u32..=4) {
        // Splitting the first part in two is a refinement of `a`.
        let p = a.parts();
        prop_assume!(p[0] >= 2 && p.len() < 4);
        let mut fine = vec![p[0] / 2, p[0] - p[0] / 2];
        fine.extend_from_slice(&p[1..]);
        let fine = Composition::new(fine).unwrap();
        let cfg = Config::default();
        let opt = |c: &Composition| {
            exhaustive_optimum(c.n() as usize, c.q() as u32, d, &WordSpace::Composition(c.clone()), &cfg).unwrap().size
        };
        prop_assert!(opt(&fine) >= opt(&a));
    }

    #[test]
    fn constant_weight_values_are_achievable(q in 2u32..=9, d in 1u32..=9, w in 0u32..=9) {
        prop_assume!(w <= q);
        let b = cw_lower(q, d, w).unwrap();
        // Binary words of length q and weight w realise the composition (q-w, w).
        let class = WordSpace::Composition(Composition::new(vec![q - w, w]).unwrap());
        let opt = exhaustive_optimum(q as usize, 2, d, &class, &Config::default()).unwrap();
        let v = b.size_value().unwrap().to_u64().unwrap();
        prop_assert!(v <= opt.size as u64);
        if b.direction == Direction::Exact {
            prop_assert_eq!(v, opt.size as u64);
        }
    }

    #[test]
    fn sequential_scan_matches_parallel(n in 1u32..=7, q in 1u32..=5) {
        let par = scan_symbol_weights(n, q, &Config::default()).unwrap();
        let seq = scan_symbol_weights(n, q, &Config::default().with_exec(Exec::Sequential)).unwrap();
        prop_assert_eq!(par, seq);
    }
}
