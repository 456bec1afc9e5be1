//! Sizes of the constant and bounded symbol-weight spaces.
//!
//! `SW(n,q,r)` holds the words of `Z_q^n` whose most frequent symbol occurs
//! exactly `r` times; `SW(n,q,<=r)` holds those where it occurs at most `r`
//! times. Exact sizes are big integers; rates are `log_q(size) / n`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, log_base, pow, Factorials};
use crate::compositions::{count_bounded_compositions, Compositions, Order, WeightFilter};
use crate::{Config, Count, Error, Result};

/// `max(n - (r-1) q, 1)`: the fewest parts equal to `r` in a weight-`r` composition.
pub fn k0(n: u32, q: u32, r: u32) -> u32 {
    let v = n as i64 - (r as i64 - 1) * q as i64;
    v.max(1) as u32
}

fn check_exact(n: u32, q: u32, r: u32) -> Result<()> {
    if q == 0 || n == 0 {
        return Err(Error::invalid("spaces need n >= 1 and q >= 1"));
    }
    if (r as u64) * (q as u64) < n as u64 || r > n {
        return Err(Error::invalid(format!(
            "symbol weight {r} outside [ceil(n/q), n] for n={n}, q={q}"
        )));
    }
    Ok(())
}

fn check_bounded(n: u32, q: u32, r: u32) -> Result<()> {
    if q == 0 || n == 0 {
        return Err(Error::invalid("spaces need n >= 1 and q >= 1"));
    }
    if r == 0 || r > n {
        return Err(Error::invalid(format!(
            "symbol weight bound {r} outside [1, n] for n={n}"
        )));
    }
    Ok(())
}

/// Range of `k` (number of parts equal to `r`) contributing to `N(r)`.
fn k_range(n: u32, q: u32, r: u32) -> std::ops::RangeInclusive<u32> {
    k0(n, q, r)..=(n / r).min(q)
}

/// `|N(r)|`, the number of compositions of `n` into `q` parts with largest part `r`.
pub fn count_family_exact(n: u32, q: u32, r: u32) -> Result<Count> {
    check_exact(n, q, r)?;
    Ok(k_range(n, q, r)
        .map(|k| {
            binomial(q as u64, k as u64) * count_bounded_compositions((n - r * k) as u64, (q - k) as u64, r as u64 - 1)
        })
        .sum())
}

/// `sum over x in P(N,K,R) of multinomial(N; x)`: the number of words of
/// length `N` over `K` symbols using each symbol at most `R` times.
///
/// Streams the bounded compositions; refuses beyond the enumeration cap.
pub fn bounded_multinomial_sum(n: u32, k: u32, r: u32, cfg: &Config) -> Result<Count> {
    if k == 0 {
        return Ok(Count::from((n == 0) as u32));
    }
    let members = count_bounded_compositions(n as u64, k as u64, r as u64);
    cfg.check_enumeration("bounded composition family", &members)?;
    let f = Factorials::new(n as usize);
    Ok(
        Compositions::new(n, k as usize, WeightFilter::Bounded(r), Order::Ascending)?
            .map(|c| f.multinomial(c.parts()))
            .sum(),
    )
}

/// Same count as [`bounded_multinomial_sum`] by dynamic programming over symbols.
///
/// `W(j, m)` counts length-`m` words over `j` symbols with each used at most `R`
/// times, so `W(j+1, m) = sum_t C(m, t) W(j, m-t)`.
pub fn bounded_word_count(n: u32, k: u32, r: u32) -> Count {
    let n = n as usize;
    let mut w = vec![Count::zero(); n + 1];
    w[0] = Count::one();
    let binoms: Vec<Vec<Count>> = (0..=n)
        .map(|m| (0..=m.min(r as usize)).map(|t| binomial(m as u64, t as u64)).collect())
        .collect();
    for _ in 0..k {
        let mut next = vec![Count::zero(); n + 1];
        for (m, slot) in next.iter_mut().enumerate() {
            for (t, b) in binoms[m].iter().enumerate() {
                if !w[m - t].is_zero() {
                    *slot += b * &w[m - t];
                }
            }
        }
        w = next;
    }
    std::mem::take(&mut w[n])
}

/// `|SW(n,q,r)|` by the sum over `k`, the number of symbols occurring `r` times:
/// `C(q,k) * n! / ((r!)^k (n-rk)!) * (words of length n-rk over q-k symbols, each < r times)`.
pub fn size_constant_sw(n: u32, q: u32, r: u32, cfg: &Config) -> Result<Count> {
    check_exact(n, q, r)?;
    let f = Factorials::new(n as usize);
    let mut total = Count::zero();
    for k in k_range(n, q, r) {
        let rest = n - r * k;
        let inner = bounded_multinomial_sum(rest, q - k, r - 1, cfg)?;
        if inner.is_zero() {
            continue;
        }
        let placement =
            f.get(n as usize) / (num_traits::pow(f.get(r as usize).clone(), k as usize) * f.get(rest as usize));
        total += binomial(q as u64, k as u64) * placement * inner;
    }
    Ok(total)
}

/// `|SW(n,q,r)|` by summing `multinomial(n; parts)` over every weight-`r` composition.
pub fn size_constant_sw_by_compositions(n: u32, q: u32, r: u32, cfg: &Config) -> Result<Count> {
    check_exact(n, q, r)?;
    cfg.check_enumeration("weight-r composition family", &count_family_exact(n, q, r)?)?;
    let f = Factorials::new(n as usize);
    Ok(
        Compositions::new(n, q as usize, WeightFilter::Exact(r), Order::Ascending)?
            .map(|c| f.multinomial(c.parts()))
            .sum(),
    )
}

/// `|SW(n,q,<=r)|`.
pub fn size_bounded_sw(n: u32, q: u32, r: u32, cfg: &Config) -> Result<Count> {
    check_bounded(n, q, r)?;
    bounded_multinomial_sum(n, q, r, cfg)
}

/// q-ary entropy `h_q(x) = -x log_q(x/(q-1)) - (1-x) log_q(1-x)`, with `h_q(0) = 0`.
pub fn entropy_q(x: f64, q: u32) -> Result<f64> {
    if q < 2 {
        return Err(Error::invalid(format!("entropy needs q >= 2, got {q}")));
    }
    if !(0.0..=1.0).contains(&x) || x.is_nan() {
        return Err(Error::invalid(format!("entropy argument {x} outside [0, 1]")));
    }
    Ok(entropy_unchecked(x, q as f64))
}

/// Entropy for a real alphabet size; `q` must exceed 1 and `x` lie in `[0, 1]`.
pub(crate) fn entropy_unchecked(x: f64, q: f64) -> f64 {
    let lq = q.ln();
    let mut h = 0.0;
    if x > 0.0 {
        h -= x * (x / (q - 1.0)).ln();
    }
    if x < 1.0 {
        h -= (1.0 - x) * (1.0 - x).ln();
    }
    h / lq
}

/// Limits `q ~ theta n^epsilon`, `r/n -> rho`, `d/n -> delta`.
///
/// `epsilon = 0` is the constant-alphabet regime with `q = theta`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticRegime {
    pub theta: f64,
    pub epsilon: f64,
    pub rho: f64,
    pub delta: f64,
}

/// Integer parameters realising a regime at a finite length.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RegimeInstance {
    pub n: u32,
    pub q: u32,
    pub r: u32,
    pub d: u32,
    /// `r/n - rho` after rounding `rho n` to the nearest integer.
    pub rho_deviation: f64,
    /// `d/n - delta` after rounding `delta n` to the nearest integer.
    pub delta_deviation: f64,
}

impl AsymptoticRegime {
    pub fn constant(q: u32, rho: f64, delta: f64) -> Result<Self> {
        AsymptoticRegime {
            theta: q as f64,
            epsilon: 0.0,
            rho,
            delta,
        }
        .validated()
    }

    pub fn validated(self) -> Result<Self> {
        if !(self.theta > 0.0) || !(0.0..=1.0).contains(&self.epsilon) {
            return Err(Error::invalid("regime needs theta > 0 and epsilon in [0, 1]"));
        }
        if !(0.0..=1.0).contains(&self.rho) || !(0.0..=1.0).contains(&self.delta) {
            return Err(Error::invalid("regime needs rho and delta in [0, 1]"));
        }
        if self.is_constant() && (self.theta < 2.0 || self.theta.fract() != 0.0) {
            return Err(Error::invalid("a constant alphabet needs an integer q >= 2"));
        }
        Ok(self)
    }

    pub fn is_constant(&self) -> bool {
        self.epsilon == 0.0
    }

    /// Alphabet size when constant.
    pub fn q(&self) -> Option<u32> {
        self.is_constant().then_some(self.theta as u32)
    }

    /// Rounds the regime to integers at length `n`, reporting the deviations.
    pub fn instance(&self, n: u32) -> RegimeInstance {
        let nf = n as f64;
        let q = (self.theta * nf.powf(self.epsilon)).round().max(2.0) as u32;
        let r = (self.rho * nf).round().clamp(1.0, nf) as u32;
        let d = (self.delta * nf).round().clamp(1.0, nf) as u32;
        RegimeInstance {
            n,
            q,
            r,
            d,
            rho_deviation: r as f64 / nf - self.rho,
            delta_deviation: d as f64 / nf - self.delta,
        }
    }
}

/// Leading term of the rate of `SW(n,q,rho n)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RateEstimate {
    pub rate: f64,
    /// Finite-length parameters when a length was supplied.
    pub instance: Option<RegimeInstance>,
}

/// Leading term of `log_q |SW(n,q,rho n)| / n`.
///
/// Constant `q`: `h_q(1 - rho)`, which equals 1 at the smallest admissible
/// weight `rho = 1/q`. Growing `q`: `1 - rho`, the limit of `h_q(1 - rho)`.
/// With a length `n`, the weight is rounded and the rate is 1 exactly when
/// `r = ceil(n/q)`.
pub fn asymptotic_rate_constant_sw(regime: &AsymptoticRegime, n: Option<u32>) -> Result<RateEstimate> {
    let regime = regime.validated()?;
    let instance = n.map(|n| regime.instance(n));
    if let Some(inst) = instance {
        if inst.r == inst.n.div_ceil(inst.q) {
            return Ok(RateEstimate { rate: 1.0, instance });
        }
    }
    let rate = match regime.q() {
        Some(q) => {
            let rho = regime.rho.max(1.0 / q as f64);
            entropy_unchecked(1.0 - rho, q as f64)
        }
        None => 1.0 - regime.rho,
    };
    Ok(RateEstimate { rate, instance })
}

/// Exact-weight or bounded-weight space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpaceMode {
    Exact,
    Bounded,
}

/// Validated parameters of `SW(n,q,r)` or `SW(n,q,<=r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceSpec {
    pub n: u32,
    pub q: u32,
    pub r: u32,
    pub mode: SpaceMode,
}

impl SpaceSpec {
    pub fn new(n: u32, q: u32, r: u32, mode: SpaceMode) -> Result<Self> {
        match mode {
            SpaceMode::Exact => check_exact(n, q, r)?,
            SpaceMode::Bounded => check_bounded(n, q, r)?,
        }
        Ok(SpaceSpec { n, q, r, mode })
    }

    pub fn contains(&self, word: &[u32]) -> bool {
        if word.len() != self.n as usize || word.iter().any(|&s| s >= self.q) {
            return false;
        }
        let w = crate::codes::symbol_weight(word);
        match self.mode {
            SpaceMode::Exact => w == self.r,
            SpaceMode::Bounded => w <= self.r,
        }
    }

    pub fn size(&self, cfg: &Config) -> Result<Count> {
        match self.mode {
            SpaceMode::Exact => size_constant_sw(self.n, self.q, self.r, cfg),
            SpaceMode::Bounded => size_bounded_sw(self.n, self.q, self.r, cfg),
        }
    }

    /// Size with its rate `log_q(size) / n`.
    pub fn row(&self, cfg: &Config) -> Result<SpaceRow> {
        let size = self.size(cfg)?;
        let rate = if self.q < 2 {
            0.0
        } else {
            log_base(&size, self.q as f64) / self.n as f64
        };
        Ok(SpaceRow {
            n: self.n,
            q: self.q,
            r: self.r,
            mode: self.mode,
            size: size.to_string(),
            rate,
        })
    }
}

/// One output row of a size table; `size` is the exact decimal value.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpaceRow {
    pub n: u32,
    pub q: u32,
    pub r: u32,
    pub mode: SpaceMode,
    pub size: String,
    pub rate: f64,
}

/// Histogram of symbol weights over all of `Z_q^n` by direct scan:
/// entry `w` counts the words of symbol weight `w`.
pub fn scan_symbol_weights(n: u32, q: u32, cfg: &Config) -> Result<Vec<Count>> {
    if q == 0 || n == 0 {
        return Err(Error::invalid("scan needs n >= 1 and q >= 1"));
    }
    let words = cfg.check_enumeration("Hamming space", &pow(q as u64, n as u64))?;
    let (n, q) = (n as usize, q as u64);
    let hist = cfg.exec.fold_range(
        0..words,
        || vec![0u64; n + 1],
        |mut acc, idx| {
            let best = if q <= 256 {
                let mut counts = [0u8; 256];
                let mut x = idx;
                let mut best = 0u8;
                for _ in 0..n {
                    let s = (x % q) as usize;
                    x /= q;
                    counts[s] += 1;
                    best = best.max(counts[s]);
                }
                best
            } else {
                let mut digits = [0u64; 64];
                let mut x = idx;
                for dgt in digits.iter_mut().take(n) {
                    *dgt = x % q;
                    x /= q;
                }
                let digits = &mut digits[..n];
                digits.sort_unstable();
                let mut best = 0u8;
                let mut run = 0u8;
                for i in 0..n {
                    run = if i > 0 && digits[i] == digits[i - 1] {
                        run + 1
                    } else {
                        1
                    };
                    best = best.max(run);
                }
                best
            };
            acc[best as usize] += 1;
            acc
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    );
    Ok(hist.into_iter().map(Count::from).collect())
}

impl RegimeInstance {
    /// Rate of the exact-weight space at this instance.
    pub fn empirical_rate(&self, cfg: &Config) -> Result<f64> {
        let size = size_constant_sw(self.n, self.q, self.r, cfg)?;
        Ok(log_base(&size, self.q as f64) / self.n as f64)
    }
}

/// `log_q(size) / n` for a space size given as a count.
pub fn rate_of(size: &Count, n: u32, q: u32) -> f64 {
    if size.is_zero() {
        return f64::NEG_INFINITY;
    }
    log_base(size, q as f64) / n as f64
}
