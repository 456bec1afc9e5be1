//! Codes over `Z_q`: containers, brute-force oracles and constructions.

mod conjecture;
mod construct;
mod io;
mod rs;

use std::collections::{BTreeMap, HashSet};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::clique::{max_clique_by_orbits, Graph};
use crate::compositions::Composition;
use crate::{Config, Count, Error, Exec, Result};

pub use conjecture::{conjecture_check, conjecture_sweep, ConjectureEntry, ConjectureReport};
pub use construct::{concat_construct, fpa_multiplicity, uv_construct, Construction, ConstructionSummary};
pub use io::{parse_code, CodeFile, CodeFormat};
pub use rs::{
    best_coset_intersection, enumerate_s_r, mds_weight_distribution, mds_weight_upper, symbol_weight_class_bound,
    CosetReport, CswAudit, RsCode, RsCswSubcode,
};

/// Largest number of times a single symbol occurs in `word`; 0 for the empty word.
pub fn symbol_weight(word: &[u32]) -> u32 {
    if word.iter().all(|&s| s < 256) {
        let mut counts = [0u32; 256];
        let mut best = 0;
        for &s in word {
            counts[s as usize] += 1;
            best = best.max(counts[s as usize]);
        }
        best
    } else {
        let mut sorted = word.to_vec();
        sorted.sort_unstable();
        sorted
            .chunk_by(|a, b| a == b)
            .map(|run| run.len() as u32)
            .max()
            .unwrap_or(0)
    }
}

/// Number of positions where two equal-length words differ.
pub fn hamming(a: &[u32], b: &[u32]) -> u32 {
    a.iter().zip(b).filter(|(x, y)| x != y).count() as u32
}

/// Length-`n` sequence of symbols of `Z_q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(symbols: Vec<u32>, q: u32) -> Result<Self> {
        if let Some(&s) = symbols.iter().find(|&&s| s >= q) {
            return Err(Error::invalid(format!("symbol {s} outside Z_{q}")));
        }
        Ok(Word(symbols))
    }

    pub fn symbols(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbol_weight(&self) -> u32 {
        symbol_weight(&self.0)
    }
}

/// Hamming weight histogram: entry `w` counts codewords of weight `w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightDistribution {
    #[serde(serialize_with = "crate::arith::ser_counts")]
    pub b: Vec<Count>,
}

impl WeightDistribution {
    pub fn get(&self, w: usize) -> Count {
        self.b.get(w).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> Count {
        self.b.iter().sum()
    }
}

/// Set of distinct words sharing `(n, q)`, with lazily cached metadata.
#[derive(Debug)]
pub struct Code {
    n: usize,
    q: u32,
    words: Vec<Word>,
    min_distance: OnceLock<Option<u32>>,
    weights: OnceLock<Option<(u32, u32)>>,
}

impl Clone for Code {
    fn clone(&self) -> Self {
        Code {
            n: self.n,
            q: self.q,
            words: self.words.clone(),
            min_distance: self.min_distance.clone(),
            weights: self.weights.clone(),
        }
    }
}

impl PartialEq for Code {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.q == other.q && self.words == other.words
    }
}

impl Code {
    /// Validates lengths, alphabet and uniqueness.
    pub fn new(n: usize, q: u32, words: Vec<Vec<u32>>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(words.len());
        let mut out = Vec::with_capacity(words.len());
        for w in words {
            if w.len() != n {
                return Err(Error::invalid(format!(
                    "word of length {} in a length-{n} code",
                    w.len()
                )));
            }
            let w = Word::new(w, q)?;
            if !seen.insert(w.clone()) {
                return Err(Error::invalid(format!("duplicate word {:?}", w.symbols())));
            }
            out.push(w);
        }
        Ok(Code {
            n,
            q,
            words: out,
            min_distance: OnceLock::new(),
            weights: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// Minimum pairwise Hamming distance; needs at least two words.
    pub fn min_distance(&self) -> Result<u32> {
        self.min_distance_with(Exec::default())
    }

    pub fn min_distance_with(&self, exec: Exec) -> Result<u32> {
        let cached = self.min_distance.get_or_init(|| {
            if self.words.len() < 2 {
                return None;
            }
            let rows = exec.map_range(0..self.words.len(), |i| {
                let a = self.words[i].symbols();
                self.words[i + 1..]
                    .iter()
                    .map(|b| hamming(a, b.symbols()))
                    .min()
                    .unwrap_or(u32::MAX)
            });
            rows.into_iter().min()
        });
        cached.ok_or_else(|| Error::invalid("minimum distance needs at least two codewords"))
    }

    /// Smallest and largest symbol weight over the codewords.
    pub fn symbol_weight_range(&self) -> Option<(u32, u32)> {
        *self.weights.get_or_init(|| {
            let mut it = self.words.iter().map(Word::symbol_weight);
            let first = it.next()?;
            Some(it.fold((first, first), |(lo, hi), w| (lo.min(w), hi.max(w))))
        })
    }

    /// Common symbol weight when every codeword has the same one.
    pub fn constant_symbol_weight(&self) -> Option<u32> {
        self.symbol_weight_range().filter(|(lo, hi)| lo == hi).map(|(lo, _)| lo)
    }

    pub fn weight_distribution(&self) -> WeightDistribution {
        let mut b = vec![0u64; self.n + 1];
        for w in &self.words {
            b[w.symbols().iter().filter(|&&s| s != 0).count()] += 1;
        }
        WeightDistribution {
            b: b.into_iter().map(Count::from).collect(),
        }
    }
}

/// Ambient space of a code search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WordSpace {
    Hamming,
    ExactWeight(u32),
    BoundedWeight(u32),
    Composition(Composition),
}

impl WordSpace {
    pub fn contains(&self, word: &[u32]) -> bool {
        match self {
            WordSpace::Hamming => true,
            WordSpace::ExactWeight(r) => symbol_weight(word) == *r,
            WordSpace::BoundedWeight(r) => symbol_weight(word) <= *r,
            WordSpace::Composition(c) => {
                let mut counts = vec![0u32; c.q()];
                for &s in word {
                    match counts.get_mut(s as usize) {
                        Some(x) => *x += 1,
                        None => return false,
                    }
                }
                counts == c.parts()
            }
        }
    }

    /// Label of the orbit of `word` under automorphisms that preserve both
    /// the space and Hamming distance.
    fn orbit_key(&self, word: &[u32], q: u32) -> Vec<u32> {
        match self {
            // Symbol permutations per coordinate act transitively.
            WordSpace::Hamming => vec![],
            // Coordinate permutations act transitively on a composition class.
            WordSpace::Composition(_) => vec![],
            // Coordinate and global symbol permutations: the sorted composition.
            WordSpace::ExactWeight(_) | WordSpace::BoundedWeight(_) => {
                let mut counts = vec![0u32; q as usize];
                for &s in word {
                    counts[s as usize] += 1;
                }
                counts.sort_unstable_by(|a, b| b.cmp(a));
                counts
            }
        }
    }
}

/// Words of `space` in lexicographic order (first coordinate most significant).
pub fn space_words(n: usize, q: u32, space: &WordSpace, cfg: &Config) -> Result<Vec<Vec<u32>>> {
    let total = cfg.check_enumeration("Hamming space", &crate::arith::pow(q as u64, n as u64))?;
    let words = cfg.exec.map_range(0..total as usize, |idx| {
        let mut w = vec![0u32; n];
        let mut x = idx as u64;
        for slot in w.iter_mut().rev() {
            *slot = (x % q as u64) as u32;
            x /= q as u64;
        }
        w
    });
    Ok(words.into_iter().filter(|w| space.contains(w)).collect())
}

/// Largest code with minimum distance `d` found by exhaustive clique search.
#[derive(Clone, Debug)]
pub struct Optimum {
    /// Size of the witness.
    pub size: usize,
    pub witness: Code,
    /// True when the search completed, so `size` is the optimum.
    pub proven: bool,
    /// Proven upper bound on the optimum (equal to `size` when proven).
    pub upper_bound: usize,
    pub nodes: u64,
}

/// Maximum size of a length-`n` code over `Z_q` inside `space` with minimum distance `d`.
///
/// Refuses when `q^n` exceeds the exhaustive word cap or the space exceeds
/// the clique vertex cap. With a node budget the search may stop early;
/// the result then carries a valid witness and a valid upper bound.
pub fn exhaustive_optimum(n: usize, q: u32, d: u32, space: &WordSpace, cfg: &Config) -> Result<Optimum> {
    if n == 0 || q == 0 || d == 0 {
        return Err(Error::invalid("exhaustive search needs n, q, d >= 1"));
    }
    if let WordSpace::Composition(c) = space {
        if c.q() != q as usize || c.n() as usize != n {
            return Err(Error::invalid(format!("composition {c} does not match n={n}, q={q}")));
        }
    }
    let volume = crate::arith::pow(q as u64, n as u64);
    if volume > Count::from(cfg.exhaustive_word_cap) {
        return Err(Error::cap(
            "exhaustive code search space",
            volume,
            cfg.exhaustive_word_cap,
        ));
    }
    let words = space_words(n, q, space, cfg)?;
    if words.len() > cfg.clique_vertex_cap {
        return Err(Error::cap(
            "code search graph",
            words.len(),
            cfg.clique_vertex_cap as u64,
        ));
    }
    let g = Graph::from_predicate(words.len(), cfg.exec, |a, b| hamming(&words[a], &words[b]) >= d);
    let mut orbits: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
    for (i, w) in words.iter().enumerate() {
        orbits.entry(space.orbit_key(w, q)).or_default().push(i);
    }
    let orbits: Vec<Vec<usize>> = orbits.into_values().collect();
    let res = max_clique_by_orbits(&g, &orbits, true, cfg.clique_node_budget, cfg.exec);
    let witness = Code::new(n, q, res.clique.iter().map(|&i| words[i].clone()).collect())?;
    Ok(Optimum {
        size: witness.len(),
        witness,
        proven: res.optimal,
        upper_bound: res.upper_bound,
        nodes: res.nodes,
    })
}

/// Number of words of `space` within Hamming distance `radius` of `center`.
pub fn ball_size(center: &[u32], q: u32, radius: u32, space: &WordSpace, cfg: &Config) -> Result<Count> {
    let n = center.len() as u64;
    if center.iter().any(|&s| s >= q) {
        return Err(Error::invalid("center has a symbol outside the alphabet"));
    }
    let volume: Count = (0..=radius.min(n as u32) as u64)
        .map(|i| crate::arith::binomial(n, i) * crate::arith::pow(q as u64 - 1, i))
        .sum();
    cfg.check_enumeration("Hamming ball", &volume)?;
    let mut word = center.to_vec();
    let mut count = 0u64;
    visit_ball(&mut word, center, q, 0, radius, &mut |w| {
        if space.contains(w) {
            count += 1;
        }
    });
    Ok(Count::from(count))
}

fn visit_ball(word: &mut Vec<u32>, center: &[u32], q: u32, from: usize, budget: u32, f: &mut impl FnMut(&[u32])) {
    f(word);
    if budget == 0 {
        return;
    }
    for i in from..word.len() {
        for s in 0..q {
            if s == center[i] {
                continue;
            }
            word[i] = s;
            visit_ball(word, center, q, i + 1, budget - 1, f);
        }
        word[i] = center[i];
    }
}
