use num_bigint::{BigInt, Sign};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{Composition, CompositionFamily, FamilyKind};
use crate::arith::binomial;
use crate::{Config, Count, Error, Result};

/// Which compositions an enumeration keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WeightFilter {
    All,
    /// Largest part exactly `r`.
    Exact(u32),
    /// Largest part at most `r`.
    Bounded(u32),
}

impl WeightFilter {
    pub fn accepts(self, c: &Composition) -> bool {
        match self {
            WeightFilter::All => true,
            WeightFilter::Exact(r) => c.symbol_weight() == r,
            WeightFilter::Bounded(r) => c.symbol_weight() <= r,
        }
    }

    fn part_cap(self, n: u32) -> u32 {
        match self {
            WeightFilter::All => n,
            WeightFilter::Exact(r) | WeightFilter::Bounded(r) => r.min(n),
        }
    }
}

/// Colexicographic direction: position `q-1` is the most significant.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Order {
    #[default]
    Ascending,
    Descending,
}

/// Number of `K`-part compositions of `N` with every part in `[0, R]`.
///
/// `K = 0` admits only `N = 0`.
pub fn count_bounded_compositions(n: u64, k: u64, r: u64) -> Count {
    if k == 0 {
        return Count::from((n == 0) as u32);
    }
    let mut acc = BigInt::zero();
    for i in 0..=k {
        let Some(shift) = (r + 1).checked_mul(i) else { break };
        if shift > n {
            break;
        }
        let term = BigInt::from_biguint(Sign::Plus, binomial(k, i) * binomial(k + n - shift - 1, k - 1));
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc.to_biguint().expect("inclusion-exclusion count is non-negative")
}

/// Number of compositions of `n` into `q` parts passing `filter`.
pub fn count_compositions(n: u32, q: usize, filter: WeightFilter) -> Count {
    let (n64, q64) = (n as u64, q as u64);
    match filter {
        WeightFilter::All => binomial(n64 + q64 - 1, q64 - 1),
        WeightFilter::Bounded(r) => count_bounded_compositions(n64, q64, r as u64),
        WeightFilter::Exact(0) => Count::from((n == 0) as u32),
        WeightFilter::Exact(r) => {
            count_bounded_compositions(n64, q64, r as u64) - count_bounded_compositions(n64, q64, r as u64 - 1)
        }
    }
}

/// Streaming enumeration of compositions in colexicographic order.
#[derive(Clone, Debug)]
pub struct Compositions {
    parts: Vec<u32>,
    cap: u32,
    filter: WeightFilter,
    order: Order,
    done: bool,
}

impl Compositions {
    pub fn new(n: u32, q: usize, filter: WeightFilter, order: Order) -> Result<Self> {
        if q == 0 {
            return Err(Error::invalid("compositions need q >= 1"));
        }
        let cap = filter.part_cap(n);
        let done = (cap as u64) * (q as u64) < n as u64;
        let mut parts = vec![0u32; q];
        if !done {
            match order {
                Order::Ascending => fill_front(&mut parts, n, cap),
                Order::Descending => fill_back(&mut parts, n, cap),
            }
        }
        Ok(Compositions {
            parts,
            cap,
            filter,
            order,
            done,
        })
    }

    fn advance(&mut self) {
        let cap = self.cap;
        let mut prefix = 0u32;
        for i in 0..self.parts.len() {
            let step = match self.order {
                Order::Ascending => i >= 1 && self.parts[i] < cap && prefix >= 1,
                Order::Descending => i >= 1 && self.parts[i] > 0 && (prefix as u64) < i as u64 * cap as u64,
            };
            if step {
                match self.order {
                    Order::Ascending => {
                        self.parts[i] += 1;
                        fill_front(&mut self.parts[..i], prefix - 1, cap);
                    }
                    Order::Descending => {
                        self.parts[i] -= 1;
                        fill_back(&mut self.parts[..i], prefix + 1, cap);
                    }
                }
                return;
            }
            prefix += self.parts[i];
        }
        self.done = true;
    }
}

fn fill_front(parts: &mut [u32], mut total: u32, cap: u32) {
    for p in parts.iter_mut() {
        *p = total.min(cap);
        total -= *p;
    }
}

fn fill_back(parts: &mut [u32], mut total: u32, cap: u32) {
    for p in parts.iter_mut().rev() {
        *p = total.min(cap);
        total -= *p;
    }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        while !self.done {
            let current = Composition::new(self.parts.clone()).expect("q >= 1");
            self.advance();
            if self.filter.accepts(&current) {
                return Some(current);
            }
        }
        None
    }
}

/// Materialises every composition of `n` into `q` parts passing `filter`,
/// refusing when the family exceeds the enumeration cap.
pub fn enumerate_compositions(n: u32, q: usize, filter: WeightFilter, cfg: &Config) -> Result<CompositionFamily> {
    if q == 0 {
        return Err(Error::invalid("compositions need q >= 1"));
    }
    cfg.check_enumeration("composition family", &count_compositions(n, q, filter))?;
    let members: Vec<Composition> = Compositions::new(n, q, filter, Order::Ascending)?.collect();
    let kind = match filter {
        WeightFilter::All => FamilyKind::All,
        WeightFilter::Exact(r) => FamilyKind::ExactWeight { r },
        WeightFilter::Bounded(r) => FamilyKind::BoundedWeight { r },
    };
    Ok(CompositionFamily { n, q, kind, members })
}
