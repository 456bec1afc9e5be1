//! Compositions of `n` into `q` ordered parts.
//!
//! A composition records how often each symbol of `Z_q` occurs in a word of
//! length `n`. This module counts and enumerates them, measures the `d+`
//! distance between them, tests refinement, and searches for anticodes
//! (families of pairwise distant compositions of fixed symbol weight).

mod anticode;
mod count;
mod refine;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use anticode::{search_anticode, AnticodeStrategy};
pub use count::{
    count_bounded_compositions, count_compositions, enumerate_compositions, Compositions, Order, WeightFilter,
};
pub use refine::is_refinement;

/// Ordered vector of non-negative symbol frequencies.
///
/// Parts are stored unnormalised: position `i` is the frequency of symbol `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Composition {
    parts: Vec<u32>,
    total: u32,
}

impl Composition {
    /// Builds a composition; at least one part is required.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::invalid("a composition needs at least one part"));
        }
        let total = parts
            .iter()
            .try_fold(0u32, |acc, &p| acc.checked_add(p))
            .ok_or_else(|| Error::invalid("composition total overflows"))?;
        Ok(Composition { parts, total })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts (the word length).
    pub fn n(&self) -> u32 {
        self.total
    }

    /// Number of parts (the alphabet size).
    pub fn q(&self) -> usize {
        self.parts.len()
    }

    /// Largest part.
    pub fn symbol_weight(&self) -> u32 {
        self.parts.iter().copied().max().unwrap_or(0)
    }

    /// Parts sorted in non-increasing order; the orbit label under symbol permutations.
    pub fn sorted_desc(&self) -> Vec<u32> {
        let mut s = self.parts.clone();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    /// Composition of a word over `Z_q`.
    pub fn of_word(word: &[u32], q: usize) -> Result<Self> {
        let mut parts = vec![0u32; q];
        for &s in word {
            *parts
                .get_mut(s as usize)
                .ok_or_else(|| Error::invalid(format!("symbol {s} outside Z_{q}")))? += 1;
        }
        Composition::new(parts)
    }

    fn check_shape(&self, other: &Composition) -> Result<()> {
        if self.q() != other.q() || self.n() != other.n() {
            return Err(Error::invalid(format!(
                "compositions differ in shape: (n={}, q={}) vs (n={}, q={})",
                self.n(),
                self.q(),
                other.n(),
                other.q()
            )));
        }
        Ok(())
    }
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<u32> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

/// Exponential notation: runs of equal parts written `v^t`, a lone `v` for `t = 1`.
impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let v = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&p| p == v).count();
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if run == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for token in s.split_whitespace() {
            let (v, t) = match token.split_once('^') {
                Some((v, t)) => (v, t),
                None => (token, "1"),
            };
            let v: u32 = v
                .parse()
                .map_err(|_| Error::Parse(format!("bad part value in token {token:?}")))?;
            let t: usize = t
                .parse()
                .map_err(|_| Error::Parse(format!("bad repetition count in token {token:?}")))?;
            parts.extend(std::iter::repeat(v).take(t));
        }
        if parts.is_empty() {
            return Err(Error::Parse(format!("empty composition {s:?}")));
        }
        Composition::new(parts)
    }
}

/// The `d+` distance `n - sum_i min(a_i, b_i)`.
pub fn dplus(a: &Composition, b: &Composition) -> Result<u32> {
    a.check_shape(b)?;
    let overlap: u32 = a.parts.iter().zip(&b.parts).map(|(&x, &y)| x.min(y)).sum();
    Ok(a.n() - overlap)
}

/// Number of positions where the parts differ.
pub fn hamming_distance_compositions(a: &Composition, b: &Composition) -> Result<u32> {
    a.check_shape(b)?;
    Ok(a.parts.iter().zip(&b.parts).filter(|(x, y)| x != y).count() as u32)
}

/// What a [`CompositionFamily`] is known to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum FamilyKind {
    All,
    ExactWeight { r: u32 },
    BoundedWeight { r: u32 },
    Anticode { r: u32, d: u32 },
}

/// Set of distinct compositions sharing `(n, q)`, validated against its kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompositionFamily {
    n: u32,
    q: usize,
    kind: FamilyKind,
    members: Vec<Composition>,
}

impl CompositionFamily {
    pub fn new(n: u32, q: usize, kind: FamilyKind, members: Vec<Composition>) -> Result<Self> {
        let mut seen = std::collections::HashSet::with_capacity(members.len());
        for m in &members {
            if m.n() != n || m.q() != q {
                return Err(Error::invalid(format!("member {m} does not have n={n}, q={q}")));
            }
            if !seen.insert(m) {
                return Err(Error::invalid(format!("duplicate member {m}")));
            }
            let w = m.symbol_weight();
            match kind {
                FamilyKind::All => {}
                FamilyKind::ExactWeight { r } | FamilyKind::Anticode { r, .. } if w != r => {
                    return Err(Error::invalid(format!("member {m} has symbol weight {w}, not {r}")))
                }
                FamilyKind::BoundedWeight { r } if w > r => {
                    return Err(Error::invalid(format!("member {m} has symbol weight {w} > {r}")))
                }
                _ => {}
            }
        }
        if let FamilyKind::Anticode { d, .. } = kind {
            for (i, a) in members.iter().enumerate() {
                for b in &members[i + 1..] {
                    let dist = dplus(a, b)?;
                    if dist < d {
                        return Err(Error::invalid(format!(
                            "members {a} and {b} are at distance {dist} < {d}"
                        )));
                    }
                }
            }
        }
        Ok(CompositionFamily { n, q, kind, members })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn members(&self) -> &[Composition] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Smallest pairwise `d+`, or `None` for fewer than two members.
    pub fn min_dplus(&self) -> Option<u32> {
        let mut best: Option<u32> = None;
        for (i, a) in self.members.iter().enumerate() {
            for b in &self.members[i + 1..] {
                let d = a.n() - a.parts.iter().zip(&b.parts).map(|(&x, &y)| x.min(y)).sum::<u32>();
                best = Some(best.map_or(d, |m| m.min(d)));
            }
        }
        best
    }
}
