//! Exact combinatorial arithmetic on [`Count`].

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::Count;

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Count {
    if k > n {
        return Count::zero();
    }
    let k = k.min(n - k);
    let mut acc = Count::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `base^exp` as a [`Count`].
pub fn pow(base: u64, exp: u64) -> Count {
    num_traits::pow(Count::from(base), exp as usize)
}

/// Falling factorial `q (q-1) ... (q-m+1)`.
pub fn falling_factorial(q: u64, m: u64) -> Count {
    if m > q {
        return Count::zero();
    }
    (0..m).fold(Count::one(), |acc, i| acc * (q - i))
}

/// Derangement numbers `D_0 ..= D_n` (`D_0 = 1`, `D_1 = 0`).
pub fn derangements(n: usize) -> Vec<Count> {
    let mut d = vec![Count::one()];
    if n >= 1 {
        d.push(Count::zero());
    }
    for i in 2..=n {
        let next = (&d[i - 1] + &d[i - 2]) * (i as u64 - 1);
        d.push(next);
    }
    d
}

/// Ceiling of `a / b`.
pub fn ceil_div(a: &Count, b: &Count) -> Count {
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        q
    } else {
        q + 1u32
    }
}

/// Natural logarithm of a big integer (`-inf` for zero).
pub fn ln(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().unwrap_or(f64::INFINITY);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `log_base(x)` for a big integer.
pub fn log_base(x: &BigUint, base: f64) -> f64 {
    ln(x) / base.ln()
}

/// Table of factorials `0! ..= n!` for repeated multinomial evaluation.
#[derive(Clone, Debug)]
pub struct Factorials {
    table: Vec<Count>,
}

impl Factorials {
    pub fn new(n: usize) -> Self {
        let mut table = Vec::with_capacity(n + 1);
        table.push(Count::one());
        for i in 1..=n {
            let next = &table[i - 1] * i as u64;
            table.push(next);
        }
        Factorials { table }
    }

    pub fn get(&self, n: usize) -> &Count {
        &self.table[n]
    }

    /// Multinomial coefficient `(sum parts)! / prod(parts!)`.
    pub fn multinomial(&self, parts: &[u32]) -> Count {
        let total: usize = parts.iter().map(|&p| p as usize).sum();
        let denom = parts
            .iter()
            .filter(|&&p| p > 1)
            .fold(Count::one(), |acc, &p| acc * &self.table[p as usize]);
        &self.table[total] / denom
    }
}

/// Multinomial coefficient without a precomputed table.
pub fn multinomial(parts: &[u32]) -> Count {
    let mut acc = Count::one();
    let mut running = 0u64;
    for &p in parts {
        running += p as u64;
        acc *= binomial(running, p as u64);
    }
    acc
}

/// Serialises a [`Count`] as a decimal string.
pub(crate) fn ser_count<S: serde::Serializer>(c: &Count, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(c)
}

/// Serialises a slice of [`Count`] as decimal strings.
pub(crate) fn ser_counts<S: serde::Serializer>(cs: &[Count], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(cs.iter().map(|c| c.to_string()))
}
