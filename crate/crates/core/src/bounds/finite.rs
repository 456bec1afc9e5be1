//! Bounds at a fixed length.

use num_traits::{One, Zero};

use super::{BoundInputs, BoundResult, Direction, Provenance};
use crate::arith::{binomial, ceil_div, derangements, falling_factorial, pow};
use crate::spaces::{SpaceMode, SpaceSpec};
use crate::{Config, Count, Error, Result};

fn check_distance(n: u32, d: u32) -> Result<()> {
    if d == 0 || d > n {
        return Err(Error::invalid(format!("distance {d} outside [1, n] for n={n}")));
    }
    Ok(())
}

/// Singleton bound `q^{n-d+1}`.
pub fn singleton_upper(n: u32, d: u32, q: u32) -> Result<BoundResult> {
    check_distance(n, d)?;
    Ok(BoundResult::size(
        Provenance::Singleton,
        Direction::Upper,
        pow(q as u64, (n - d + 1) as u64),
        BoundInputs::sized(n, q, d, None, None),
    ))
}

/// `A = q` exactly when `r <= d <= n` and `3r > 2n`.
///
/// The upper half needs only `d >= r > 2n/3`; the `q` translates of one
/// word supply the lower half once `d <= n`.
pub fn trivial_q_regime(n: u32, d: u32, r: u32, q: u32) -> Option<BoundResult> {
    SpaceSpec::new(n, q, r, SpaceMode::Exact).ok()?;
    (r <= d && d <= n && 3 * r > 2 * n).then(|| {
        BoundResult::size(
            Provenance::LargeWeight,
            Direction::Exact,
            Count::from(q),
            BoundInputs::sized(n, q, d, Some(r), Some(SpaceMode::Exact)),
        )
    })
}

/// The `q` words `x + a 1` are pairwise at distance `n` and share the
/// symbol weight of `x`; applies whenever the space is non-empty and `d <= n`.
pub fn shift_lower(n: u32, d: u32, r: u32, q: u32, mode: SpaceMode) -> Result<BoundResult> {
    SpaceSpec::new(n, q, r, mode)?;
    check_distance(n, d)?;
    if (r as u64) * (q as u64) < n as u64 {
        return Err(Error::NotApplicable(format!("SW({n},{q},<={r}) is empty")));
    }
    Ok(BoundResult::size(
        Provenance::Shift,
        Direction::Lower,
        Count::from(q),
        BoundInputs::sized(n, q, d, Some(r), Some(mode)),
    ))
}

/// Johnson-type recursion `U(m) = floor(m q U(m-1) / (m-r))` anchored at
/// `U(a) = q` for the largest `a` with `3r > 2a`.
///
/// Refuses when `d < r`, where the anchor does not hold.
pub fn johnson_upper(n: u32, d: u32, r: u32, q: u32) -> Result<BoundResult> {
    SpaceSpec::new(n, q, r, SpaceMode::Exact)?;
    check_distance(n, d)?;
    if d < r {
        return Err(Error::NotApplicable(format!(
            "the recursion needs d >= r; got d={d}, r={r}"
        )));
    }
    let anchor = (3 * r).div_ceil(2) - 1;
    let mut u = Count::from(q);
    for m in anchor + 1..=n {
        u = u * m * q / (m - r);
    }
    let steps = n.saturating_sub(anchor);
    Ok(BoundResult::size(
        Provenance::JohnsonRecursion,
        Direction::Upper,
        u,
        BoundInputs::sized(n, q, d, Some(r), Some(SpaceMode::Exact)),
    )
    .with_note(format!("{steps} puncturing steps down to length {}", n.min(anchor))))
}

/// Dukes' bound `q (q-1) ... (q-n+d)` for `r = 1`, valid when `q > n`.
pub fn dukes_upper(n: u32, d: u32, q: u32) -> Result<BoundResult> {
    check_distance(n, d)?;
    if q <= n {
        return Err(Error::NotApplicable(format!("needs q > n; got q={q}, n={n}")));
    }
    Ok(BoundResult::size(
        Provenance::Dukes,
        Direction::Upper,
        falling_factorial(q as u64, (n - d + 1) as u64),
        BoundInputs::sized(n, q, d, Some(1), Some(SpaceMode::Exact)),
    ))
}

/// Hamming ball volume `sum_{i < d} C(n,i) (q-1)^i`.
fn hamming_ball(n: u32, radius: u32, q: u32) -> Count {
    (0..=radius.min(n) as u64)
        .map(|i| binomial(n as u64, i) * pow(q as u64 - 1, i))
        .sum()
}

/// GV-type lower bound by averaging: some translate of a Hamming code of
/// size `ceil(q^n / V(d-1))` meets the space in at least
/// `ceil(|space| ceil(q^n / V(d-1)) / q^n)` words.
pub fn gv_lower(n: u32, d: u32, r: u32, q: u32, mode: SpaceMode, cfg: &Config) -> Result<BoundResult> {
    let spec = SpaceSpec::new(n, q, r, mode)?;
    check_distance(n, d)?;
    let space = spec.size(cfg)?;
    let total = pow(q as u64, n as u64);
    let hamming = ceil_div(&total, &hamming_ball(n, d - 1, q));
    Ok(BoundResult::size(
        Provenance::Gv,
        Direction::Lower,
        ceil_div(&(space * hamming), &total),
        BoundInputs::sized(n, q, d, Some(r), Some(mode)),
    ))
}

/// Number of permutations of `r` points within Hamming distance `radius`
/// of the identity: `sum_{i <= radius} C(r,i) D_i`.
pub fn perm_ball_volume(r: u32, radius: u32) -> Count {
    let der = derangements(r as usize);
    (0..=radius.min(r))
        .map(|i| binomial(r as u64, i as u64) * &der[i as usize])
        .sum()
}

/// Lower bound `ceil(r! / V(2d-1))` on the number of rearrangements of
/// `[1, ..., r]` pairwise at `d+ >= d`, from a GV permutation code with
/// Hamming distance `2d`. The space has `n = r(r+1)/2` and `q = r`.
pub fn perm_anticode_lower(r: u32, d: u32) -> Result<BoundResult> {
    if r == 0 || d == 0 {
        return Err(Error::invalid("needs r >= 1 and d >= 1"));
    }
    let n = r * (r + 1) / 2;
    let fact: Count = (1..=r as u64).map(Count::from).product();
    let vol = perm_ball_volume(r, 2 * d - 1);
    let value = if vol.is_zero() {
        Count::one()
    } else {
        ceil_div(&fact, &vol)
    };
    Ok(BoundResult::size(
        Provenance::PermutationAnticode,
        Direction::Lower,
        value,
        BoundInputs::sized(n, r, d, Some(r), Some(SpaceMode::Exact)),
    )
    .with_note(format!("anticode size; ball volume {vol}")))
}
