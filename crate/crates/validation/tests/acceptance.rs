//! Acceptance suite: one PASS/FAIL line per criterion with its runtime.
//!
//! Every check compares library output against an independent computation
//! in this file (brute-force scans, direct enumeration, closed forms).

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{ToPrimitive, Zero};
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::TestRunner;
use symweight::arith::pow;
use symweight::bounds::{
    anticode_sum_lower, best_bounds, bsw_lower_composed, composed_sums, csw_lower_composed, curve_samples, BestBounds,
    CurveAxis, LiteratureOracle, NoOracle, QMode,
};
use symweight::codes::{
    ball_size, conjecture_check, conjecture_sweep, enumerate_s_r, exhaustive_optimum, hamming, mds_weight_distribution,
    symbol_weight, symbol_weight_class_bound, RsCode, RsCswSubcode, Word, WordSpace,
};
use symweight::compositions::{
    count_bounded_compositions, dplus, hamming_distance_compositions, search_anticode, AnticodeStrategy, Composition,
};
use symweight::field::{monic_polys, Field, Poly};
use symweight::spaces::{entropy_q, rate_of, scan_symbol_weights, size_bounded_sw, size_constant_sw, SpaceMode};
use symweight::{Config, Count};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn lib<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn c(v: u64) -> Count {
    Count::from(v)
}

/// Every `(n, q)` with `q >= 2` and `q^n <= 3^6`.
fn tiny_shapes() -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for q in 2u32..=729 {
        let mut n = 1;
        while (q as u64).pow(n) <= 729 {
            out.push((n, q));
            n += 1;
        }
    }
    out
}

fn space_sizes() -> Outcome {
    let cfg = Config::default();
    let size = lib(size_bounded_sw(3, 3, 2, &cfg))?;
    ensure!(size == c(24), "|SW(3,3,<=2)| = {size}");
    let brute = (0..27u32)
        .filter(|x| symbol_weight(&[x % 3, x / 3 % 3, x / 9]) <= 2)
        .count();
    ensure!(brute == 24, "direct scan counts {brute}");
    let space = WordSpace::BoundedWeight(2);
    let a = lib(ball_size(&[1, 0, 0], 3, 1, &space, &cfg))?;
    let b = lib(ball_size(&[2, 1, 0], 3, 1, &space, &cfg))?;
    ensure!(a == c(6) && b == c(7), "ball sizes {a} and {b}");
    Ok("|SW(3,3,<=2)| = 24; radius-1 balls around 100 and 210 hold 6 and 7 words".into())
}

fn bounded_composition_count() -> Outcome {
    let v = count_bounded_compositions(24, 16, 2);
    // Independent count: choose how many of the 16 parts equal 2, the rest of the mass in ones.
    let binom = |n: u64, k: u64| (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1));
    let direct: u64 = (0..=12u64)
        .filter(|t| 24 - 2 * t <= 16 - t)
        .map(|t| binom(16, t) * binom(16 - t, 24 - 2 * t))
        .sum();
    ensure!(v == c(258570) && direct == 258570, "library {v}, direct {direct}");
    Ok("compositions of 24 into 16 parts of size at most 2: 258570".into())
}

fn sizes_match_scans() -> Outcome {
    let cfg = Config::default();
    let mut checked = 0;
    for (n, q) in tiny_shapes() {
        let hist = lib(scan_symbol_weights(n, q, &cfg))?;
        let total: Count = hist.iter().sum();
        ensure!(
            total == pow(q as u64, n as u64),
            "partition identity fails at n={n} q={q}"
        );
        // Below ceil(n/q) no word exists.
        let lo = n.div_ceil(q);
        ensure!(
            hist[..lo as usize].iter().all(Zero::is_zero),
            "words below weight {lo} at n={n} q={q}"
        );
        let mut prefix = Count::zero();
        for r in lo..=n {
            prefix += &hist[r as usize];
            let exact = lib(size_constant_sw(n, q, r, &cfg))?;
            let bounded = lib(size_bounded_sw(n, q, r, &cfg))?;
            ensure!(
                exact == hist[r as usize],
                "|SW({n},{q},{r})| = {exact}, scan {}",
                hist[r as usize]
            );
            ensure!(bounded == prefix, "|SW({n},{q},<={r})| = {bounded}, scan {prefix}");
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} (n,q,r) points agree with direct scans; sizes partition q^n"
    ))
}

fn composition(n: u32, q: usize) -> impl Strategy<Value = Composition> {
    proptest::collection::vec(0..=n, q - 1).prop_map(move |mut cuts| {
        cuts.sort_unstable();
        let mut parts = Vec::with_capacity(q);
        let mut prev = 0;
        for cut in cuts {
            parts.push(cut - prev);
            prev = cut;
        }
        parts.push(n - prev);
        Composition::new(parts).unwrap()
    })
}

fn metric_axioms() -> Outcome {
    let triples =
        (1u32..=40, 1usize..=10).prop_flat_map(|(n, q)| (composition(n, q), composition(n, q), composition(n, q)));
    let mut runner = TestRunner::deterministic();
    let (mut even_pairs, mut gap_pairs) = (0, 0);
    for _ in 0..10_000 {
        let (a, b, x) = triples.new_tree(&mut runner).map_err(|e| e.to_string())?.current();
        let d = |u: &Composition, v: &Composition| dplus(u, v).unwrap();
        ensure!(d(&a, &b) == d(&b, &a), "asymmetric at {a}, {b}");
        ensure!((d(&a, &b) == 0) == (a == b), "identity fails at {a}, {b}");
        ensure!(d(&a, &x) <= d(&a, &b) + d(&b, &x), "triangle fails at {a}, {b}, {x}");
        // Direct form: n minus the coordinatewise minima.
        let overlap: u32 = a.parts().iter().zip(b.parts()).map(|(u, v)| u.min(v)).sum();
        ensure!(
            d(&a, &b) == a.n() - overlap,
            "d+ disagrees with n - sum min at {a}, {b}"
        );
        let dh = lib(hamming_distance_compositions(&a, &b))?;
        if dh % 2 == 0 {
            even_pairs += 1;
            ensure!(d(&a, &b) >= dh / 2, "d_H = {dh} but d+ = {} at {a}, {b}", d(&a, &b));
        }
        // Uniform gap: every differing part differs by the same amount.
        let diffs: Vec<u32> = a
            .parts()
            .iter()
            .zip(b.parts())
            .map(|(u, v)| u.abs_diff(*v))
            .filter(|&g| g > 0)
            .collect();
        if let Some(&g) = diffs.first() {
            if diffs.iter().all(|&x| x == g) {
                gap_pairs += 1;
                ensure!(
                    2 * d(&a, &b) >= dh * g,
                    "gap {g}, d_H = {dh}, d+ = {} at {a}, {b}",
                    d(&a, &b)
                );
            }
        }
    }
    ensure!(
        even_pairs > 0 && gap_pairs > 0,
        "sampling produced no even-distance or uniform-gap pairs"
    );
    Ok(format!(
        "10000 triples; {even_pairs} even-distance pairs, {gap_pairs} uniform-gap pairs"
    ))
}

fn composed_examples() -> Outcome {
    let cfg = Config::default();
    let oracle = |s: &str| LiteratureOracle::new(vec![s.parse().unwrap()]);
    let unit = c(4096);
    let fpa = oracle("6^4:4096");

    let one = lib(csw_lower_composed(24, 8, 7, 5, &oracle("1^4 5^4:4096"), &cfg))?;
    let one_v = one.size_value().cloned().unwrap_or_default();
    ensure!(one_v >= &unit * 14u32, "A_8(24,7,5) >= {one_v}");
    let t = one.terms.iter().find(|t| t.k == 4).ok_or("no k = 4 term")?;
    ensure!(
        t.cw_distance == 4 && t.cw == c(14),
        "k = 4 term has cw {} at distance {}",
        t.cw,
        t.cw_distance
    );

    let sums = lib(composed_sums(24, 16, 7, 2, &fpa, &cfg))?;
    let k8 = sums.iter().find(|s| s.k1 == 8).ok_or("no k1 = 8 sum")?;
    ensure!(k8.total == &unit * 2u32, "k1 = 8 sum is {}", k8.total);
    let two = lib(csw_lower_composed(24, 16, 7, 2, &fpa, &cfg))?;
    ensure!(
        two.size_value().is_some_and(|v| v >= &(&unit * 2u32)),
        "A_16(24,7,2) composed bound too small"
    );
    let fam = lib(search_anticode(24, 16, 2, 7, AnticodeStrategy::Greedy, &cfg))?;
    ensure!(fam.len() >= 5, "greedy anticode has {} compositions", fam.len());
    for (i, x) in fam.members().iter().enumerate() {
        for y in &fam.members()[i + 1..] {
            ensure!(
                x.n() - x.parts().iter().zip(y.parts()).map(|(u, v)| u.min(v)).sum::<u32>() >= 7,
                "anticode pair closer than 7"
            );
        }
    }
    let anti = lib(anticode_sum_lower(&fam, 7, &fpa))?;
    let anti_v = anti.size_value().cloned().unwrap_or_default();
    ensure!(anti_v >= &unit * 5u32, "anticode sum {anti_v}");

    let three = lib(bsw_lower_composed(24, 16, 7, 3, &fpa, &cfg))?;
    let three_v = three.size_value().cloned().unwrap_or_default();
    ensure!(three_v == &unit * 120u32, "A_16(24,7,<=3) >= {three_v}");
    Ok(format!(
        "A_8(24,7,5) >= {}*2^12; A_16(24,7,2) >= 2*2^12 at k1=8, greedy anticode of {} gives {}*2^12; A_16(24,7,<=3) >= 120*2^12",
        one_v / &unit,
        fam.len(),
        anti_v / &unit
    ))
}

/// Every analytic bound against the clique-search optimum on the tiny shapes.
fn bounds_sandwich() -> Outcome {
    let search_cfg = Config::default().with_node_budget(Some(2_000_000));
    // Analytic bounds only: the clique search inside `best_bounds` is disabled.
    let mut analytic_cfg = Config::default();
    analytic_cfg.exhaustive_word_cap = 0;
    let (mut instances, mut certified, mut large_weight) = (0, 0, 0);
    let mut open = Vec::new();
    for (n, q) in tiny_shapes() {
        for mode in [SpaceMode::Exact, SpaceMode::Bounded] {
            for r in 1..=n {
                if mode == SpaceMode::Exact && r * q < n {
                    continue;
                }
                for d in 1..=n {
                    instances += 1;
                    let b: BestBounds = lib(best_bounds(n, q, d, r, mode, &NoOracle, &analytic_cfg))?;
                    let space = match mode {
                        SpaceMode::Exact => WordSpace::ExactWeight(r),
                        SpaceMode::Bounded => WordSpace::BoundedWeight(r),
                    };
                    let opt = lib(exhaustive_optimum(n as usize, q, d, &space, &search_cfg))?;
                    let (found, ceiling) = (c(opt.size as u64), c(opt.upper_bound as u64));
                    // The witness must be a genuine code in the space.
                    ensure!(
                        opt.witness.words().iter().all(|w| match mode {
                            SpaceMode::Exact => symbol_weight(w.symbols()) == r,
                            SpaceMode::Bounded => symbol_weight(w.symbols()) <= r,
                        }),
                        "witness leaves the space at n={n} q={q} d={d} r={r}"
                    );
                    ensure!(
                        pairwise_distance(opt.witness.words()) >= d || opt.size <= 1,
                        "witness too close"
                    );
                    let lower = b.lower.size_value().cloned().unwrap_or_default();
                    let upper = b.upper.size_value().cloned().unwrap_or_default();
                    let tag = format!("{mode:?} n={n} q={q} d={d} r={r}");
                    for x in &b.all {
                        let v = x.size_value().cloned().unwrap_or_default();
                        if x.direction.bounds_below() {
                            ensure!(
                                v <= ceiling,
                                "{tag}: {} lower bound {v} exceeds the optimum ({ceiling})",
                                x.provenance
                            );
                        }
                        if x.direction.bounds_above() {
                            ensure!(
                                v >= found,
                                "{tag}: {} upper bound {v} below a code of size {found}",
                                x.provenance
                            );
                        }
                    }
                    if opt.proven || found == ceiling || found == upper || ceiling == lower {
                        certified += 1;
                    } else {
                        open.push(format!("{tag} in [{found}, {}]", ceiling.clone().min(upper.clone())));
                    }
                    if mode == SpaceMode::Exact && r <= d && 3 * r > 2 * n {
                        large_weight += 1;
                        ensure!(
                            b.is_exact() && lower == c(q as u64) && (!opt.proven || found == c(q as u64)),
                            "{tag}: large-weight instance gives [{lower}, {upper}], search {found}"
                        );
                    }
                }
            }
        }
    }
    let summary = format!(
        "{instances} instances, {large_weight} large-weight instances equal q; optimum certified on {certified}"
    );
    if std::env::var_os("ACCEPTANCE_VERBOSE").is_some() {
        for o in &open {
            eprintln!("open: {o}");
        }
    }
    if open.is_empty() {
        Ok(summary)
    } else {
        Err(format!(
            "{summary}; {} stay open within the search budget (no bound crosses the search interval), e.g. {}",
            open.len(),
            open.iter().take(3).cloned().collect::<Vec<_>>().join("; ")
        ))
    }
}

fn pairwise_distance(words: &[Word]) -> u32 {
    let mut best = u32::MAX;
    for (i, x) in words.iter().enumerate() {
        for y in &words[i + 1..] {
            best = best.min(hamming(x.symbols(), y.symbols()));
        }
    }
    best
}

fn rate_curves() -> Outcome {
    let delta = 2.0 / 3.0;
    let grid: Vec<f64> = (0..=110).map(|i| 0.55 + 0.11 * i as f64 / 110.0).collect();
    let samples = lib(curve_samples(QMode::Constant(16), CurveAxis::Rho { delta }, &grid))?;
    let mut worst = f64::INFINITY;
    for s in &samples {
        let (Some(up), Some(lp)) = (s.large_r, s.lp) else {
            return Err(format!("missing curve value at rho = {}", s.rho));
        };
        ensure!(
            up < lp - 1e-9,
            "rho = {}: large-weight bound {up} not below LP {lp}",
            s.rho
        );
        worst = worst.min(lp - up);
    }
    // Growing q: a grid in (rho, delta) over the whole unit square.
    let (mut strict, mut touching) = (0, 0);
    for i in 1..=60 {
        let rho = i as f64 / 90.0;
        let deltas: Vec<f64> = (0..=60)
            .map(|j| j as f64 / 60.0)
            .chain([1.5 * rho])
            .filter(|&x| x <= 1.0)
            .collect();
        for s in lib(curve_samples(QMode::Growing, CurveAxis::Delta { rho }, &deltas))? {
            let in_band = s.delta >= s.rho && s.delta <= 1.5 * s.rho;
            match (s.large_r, s.singleton) {
                (Some(up), Some(single)) if in_band => {
                    if s.delta < 1.5 * s.rho - 1e-12 {
                        ensure!(
                            up < single - 1e-9,
                            "rho = {}, delta = {}: {up} not below Singleton {single}",
                            s.rho,
                            s.delta
                        );
                        strict += 1;
                    } else {
                        ensure!((up - single).abs() < 1e-9, "boundary rho = {}: {up} vs {single}", s.rho);
                        touching += 1;
                    }
                }
                (Some(up), Some(single)) => {
                    ensure!(
                        up >= single - 1e-9,
                        "rho = {}, delta = {}: below Singleton outside the band",
                        s.rho,
                        s.delta
                    )
                }
                (None, _) => ensure!(
                    !in_band || s.rho > 2.0 / 3.0,
                    "bound missing inside the band at {}, {}",
                    s.rho,
                    s.delta
                ),
                (Some(_), None) => return Err("Singleton missing".into()),
            }
        }
    }
    Ok(format!(
        "q=16: LP margin >= {worst:.4} on rho in [0.55,0.66]; growing q: {strict} strict points in the band, {touching} on delta = 1.5 rho"
    ))
}

fn reed_solomon() -> Outcome {
    let cfg = Config::default();
    let field = lib(Field::from_order(7))?;
    let rs = lib(RsCode::new(&field, 3))?;
    let code = lib(rs.materialize(&cfg))?;
    let words = code.words();
    ensure!(words.len() == 343, "{} codewords", words.len());
    let d = pairwise_distance(words);
    ensure!(d == 4 && rs.d() == 4, "minimum distance {d}");
    let constant = |w: &Word| w.symbols().iter().all(|&s| s == w.symbols()[0]);
    let heaviest = words
        .iter()
        .filter(|w| !constant(w))
        .map(|w| w.symbol_weight())
        .max()
        .unwrap_or(0);
    ensure!(heaviest <= 2, "non-constant codeword of symbol weight {heaviest}");
    let mut counted = vec![0u64; 7];
    for w in words {
        counted[w.symbols().iter().filter(|&&s| s != 0).count()] += 1;
    }
    let mds = lib(mds_weight_distribution(6, 3, 7))?;
    ensure!(
        (0..=6).all(|w| mds.get(w) == c(counted[w])),
        "MDS distribution {:?} vs {counted:?}",
        mds.b
    );
    ensure!(counted[4] == 90, "B_4 = {}", counted[4]);
    let s_r = lib(enumerate_s_r(&field, 3, &cfg))?;
    let mut by_weight = vec![0u64; 7];
    for w in words {
        by_weight[w.symbol_weight() as usize] += 1;
    }
    for r in 1..6 {
        ensure!(
            s_r[r] == c(by_weight[r]),
            "|S({r})| = {}, direct {}",
            s_r[r],
            by_weight[r]
        );
        let bound = symbol_weight_class_bound(&mds, 6, 7, r);
        ensure!(s_r[r] <= bound, "|S({r})| = {} exceeds {bound}", s_r[r]);
    }
    Ok(format!(
        "RS[6,3] over GF(7): d = 4, non-constant symbol weight <= 2, B = {counted:?}, |S(r)| = {by_weight:?}"
    ))
}

fn root_free_monic(field: &Field, degree: usize) -> u64 {
    monic_polys(field, degree).filter(|g| !g.has_root(field)).count() as u64
}

fn constant_weight_subcodes() -> Outcome {
    let cfg = Config::default();
    let mut cases = 0;
    let mut words = Count::zero();
    for q in [8u32, 9, 11, 13] {
        let field = lib(Field::from_order(q))?;
        let n = q as usize - 1;
        for k in 2..n {
            for r in n.div_ceil(2)..k {
                let sub = lib(RsCswSubcode::new(&field, k, r, &cfg))?;
                let audit = sub.audit(&cfg);
                let expected = root_free_monic(&field, k - 1 - r);
                ensure!(audit.passed(), "GF({q}) k={k} r={r}: {audit:?}");
                ensure!(
                    audit.factors == c(expected),
                    "GF({q}) k={k} r={r}: {} factors, direct count {expected}",
                    audit.factors
                );
                ensure!(
                    audit.emitted >= c(expected),
                    "GF({q}) k={k} r={r}: emitted {}",
                    audit.emitted
                );
                cases += 1;
                words += audit.emitted;
            }
        }
    }
    Ok(format!(
        "{cases} (q,k,r) cases, {words} words: all of symbol weight r and in the code"
    ))
}

fn root_subset_search() -> Outcome {
    let cfg = Config::default();
    let full = lib(conjecture_sweep(13, None, &cfg))?;
    let in_range = |reps: &[symweight::codes::ConjectureReport]| {
        reps.iter()
            .filter(|r| r.in_conjectured_range)
            .map(|r| r.failures)
            .sum::<usize>()
    };
    let full_failures = in_range(&full);
    let full_checked: usize = full.iter().map(|r| r.checked).sum();
    let mut sampled = Vec::new();
    for q in [16u32, 17] {
        let field = lib(Field::from_order(q))?;
        let n = q as usize - 1;
        for k in 2..n {
            for r in (k - 1).div_ceil(2).max(1)..k {
                // Sampled subset: factor degree at most 4; higher degrees exceed desk scale.
                if k - 1 - r <= 4 {
                    sampled.push(lib(conjecture_check(&field, k, r, &cfg))?);
                }
            }
        }
    }
    let sampled_failures = in_range(&sampled);
    let gf7 = lib(Field::from_order(7))?;
    let rep = lib(conjecture_check(&gf7, 5, 1, &cfg))?;
    let cubic = lib(Poly::from_labels(&gf7, &[2, 0, 0, 1]))?;
    let entry = rep
        .entries
        .iter()
        .find(|e| e.g == cubic)
        .ok_or("x^3+2 not enumerated")?;
    // Independent check: no root a makes (x - a)(x^3 + 2) take some value exactly once.
    let direct_fail = (1..7u32).all(|a| {
        let values: Vec<u32> = (1..7u32).map(|x| ((x + 7 - a) * ((x * x * x + 2) % 7)) % 7).collect();
        symbol_weight(&values) != 1
    });
    ensure!(!entry.success && direct_fail, "GF(7) x^3+2 at r = 1 did not fail");
    ensure!(
        full_failures == 0 && sampled_failures == 0,
        "{full_failures} + {sampled_failures} counterexamples in range"
    );
    Ok(format!(
        "q <= 13 full range: {} cases, {full_checked} factors, no counterexample; GF(16), GF(17) partial (factor degree <= 4): {} cases clean; GF(7) x^3+2, r=1 fails for every root",
        full.len(),
        sampled.len()
    ))
}

fn rate_convergence() -> Outcome {
    let cfg = Config::default();
    let limit = lib(entropy_q(1.0 / 3.0, 3))?;
    // h_3(1/3) from the definition: -(x) log3(x/2) - (1-x) log3(1-x).
    let direct = -(1.0 / 3.0) * (1.0f64 / 6.0).log(3.0) - (2.0 / 3.0) * (2.0f64 / 3.0).log(3.0);
    ensure!((limit - direct).abs() < 1e-12, "h_3(1/3) = {limit}, direct {direct}");
    let mut prev = f64::NEG_INFINITY;
    let mut rows = Vec::new();
    for (n, tol) in [(30u32, 0.12), (60, 0.07), (90, 0.05)] {
        let size = lib(size_constant_sw(n, 3, 2 * n / 3, &cfg))?;
        let rate = rate_of(&size, n, 3);
        let via_bits = size.bits() as f64;
        ensure!(via_bits > 0.0 && size.to_f64().is_some(), "size overflow at n = {n}");
        let gap = limit - rate;
        ensure!(rate > prev, "rate at n = {n} ({rate}) does not increase");
        ensure!(gap > 0.0 && gap < tol, "gap {gap} at n = {n} outside (0, {tol})");
        prev = rate;
        rows.push(format!("n={n}: {rate:.4} (gap {gap:.4})"));
    }
    Ok(format!("h_3(1/3) = {limit:.5}; {}", rows.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 11] = [
        ("space sizes", space_sizes, Duration::from_secs(1)),
        (
            "bounded composition count",
            bounded_composition_count,
            Duration::from_secs(1),
        ),
        (
            "size formulas against scans",
            sizes_match_scans,
            Duration::from_secs(60),
        ),
        ("composition metric", metric_axioms, Duration::from_secs(60)),
        ("composed lower bounds", composed_examples, Duration::from_secs(300)),
        ("bounds sandwich the optimum", bounds_sandwich, Duration::from_secs(600)),
        ("rate curves", rate_curves, Duration::from_secs(10)),
        ("Reed-Solomon machinery", reed_solomon, Duration::from_secs(10)),
        (
            "constant symbol-weight subcodes",
            constant_weight_subcodes,
            Duration::from_secs(300),
        ),
        ("root subset search", root_subset_search, Duration::from_secs(1800)),
        ("rate convergence", rate_convergence, Duration::from_secs(60)),
    ];
    let only: Option<usize> = std::env::var("ACCEPTANCE_ONLY").ok().and_then(|s| s.parse().ok());
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        if only.is_some_and(|o| o != i + 1) {
            continue;
        }
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > *limit => Err(format!("{msg}; took longer than {:.0} s", limit.as_secs_f64())),
            other => other,
        };
        let (status, msg) = match &outcome {
            Ok(m) => ("PASS", m),
            Err(m) => ("FAIL", m),
        };
        failed += outcome.is_err() as usize;
        println!("{status} {:>2} {name} ({:.2} s): {msg}", i + 1, took.as_secs_f64());
    }
    println!("acceptance: {failed} failed");
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
