//! Lower bounds assembled from constant-composition codes (CCCs).
//!
//! A family of compositions pairwise at `d+ >= d` lets CCCs of distance `d`
//! be united into one symbol-weight code. Families come either from binary
//! constant-weight codes over near-uniform compositions or from an explicit
//! anticode search. CCC sizes come from a pluggable [`CccOracle`].

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::cw::cw_lower;
use super::{BoundInputs, BoundResult, Direction, Provenance};
use crate::arith::multinomial;
use crate::codes::{exhaustive_optimum, WordSpace};
use crate::compositions::{is_refinement, Composition, CompositionFamily};
use crate::spaces::{k0, SpaceMode, SpaceSpec};
use crate::{Config, Count, Error, Result};

/// A lower bound on `A_q(comp, d)` and where it came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CccValue {
    #[serde(serialize_with = "crate::arith::ser_count")]
    pub value: Count,
    pub source: String,
}

/// Supplies lower bounds on the largest CCC of a composition at distance `d`.
pub trait CccOracle: Sync {
    fn lower_bound(&self, comp: &Composition, d: u32) -> Option<CccValue>;
}

/// Knows nothing; every CCC falls back to a single word.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoOracle;

impl CccOracle for NoOracle {
    fn lower_bound(&self, _: &Composition, _: u32) -> Option<CccValue> {
        None
    }
}

/// A published CCC or FPA size.
///
/// Without a distance the value is taken to hold at whatever distance it is
/// queried for; with one it holds for every smaller distance too.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiteratureEntry {
    #[serde(serialize_with = "ser_display")]
    pub composition: Composition,
    #[serde(serialize_with = "crate::arith::ser_count")]
    pub value: Count,
    pub distance: Option<u32>,
    pub source: String,
}

/// Parses `composition:count` or `composition:count@d`, e.g. `6^4:4096@7`.
impl FromStr for LiteratureEntry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (comp, rest) = s
            .rsplit_once(':')
            .ok_or_else(|| Error::Parse(format!("oracle entry {s:?} is not `composition:count[@d]`")))?;
        let (count, distance) = match rest.split_once('@') {
            Some((c, d)) => (c, Some(d)),
            None => (rest, None),
        };
        let composition: Composition = comp.trim().parse()?;
        let value: Count = count
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad count {count:?} in oracle entry {s:?}")))?;
        let distance = distance
            .map(|d| {
                d.trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad distance {d:?} in oracle entry {s:?}")))
            })
            .transpose()?;
        Ok(LiteratureEntry {
            source: format!("supplied value for {composition}"),
            composition,
            value,
            distance,
        })
    }
}

/// Published values, inherited by every refinement of the listed compositions.
#[derive(Clone, Debug, Default)]
pub struct LiteratureOracle {
    entries: Vec<LiteratureEntry>,
}

impl LiteratureOracle {
    pub fn new(entries: Vec<LiteratureEntry>) -> Self {
        LiteratureOracle { entries }
    }

    pub fn entries(&self) -> &[LiteratureEntry] {
        &self.entries
    }
}

impl CccOracle for LiteratureOracle {
    fn lower_bound(&self, comp: &Composition, d: u32) -> Option<CccValue> {
        self.entries
            .iter()
            .filter(|e| e.distance.map_or(true, |ed| ed >= d))
            .filter(|e| is_refinement(comp, &e.composition).is_some())
            .max_by(|a, b| a.value.cmp(&b.value))
            .map(|e| CccValue {
                value: e.value.clone(),
                source: if e.composition.sorted_desc() == comp.sorted_desc() {
                    e.source.clone()
                } else {
                    format!("refines {} ({})", e.composition, e.source)
                },
            })
    }
}

/// Exact or budgeted clique search inside the composition class; results are
/// cached per sorted composition and distance.
pub struct ExhaustiveCccOracle {
    cfg: Config,
    cache: Mutex<HashMap<(Vec<u32>, u32), Option<CccValue>>>,
}

impl ExhaustiveCccOracle {
    pub fn new(cfg: Config) -> Self {
        ExhaustiveCccOracle {
            cfg,
            cache: Mutex::new(HashMap::new()),
        }
    }
}

impl CccOracle for ExhaustiveCccOracle {
    fn lower_bound(&self, comp: &Composition, d: u32) -> Option<CccValue> {
        let key = (comp.sorted_desc(), d);
        if let Some(v) = self.cache.lock().expect("cache lock").get(&key) {
            return v.clone();
        }
        let sorted = Composition::new(key.0.clone()).ok()?;
        let res = exhaustive_optimum(
            sorted.n() as usize,
            sorted.q() as u32,
            d,
            &WordSpace::Composition(sorted),
            &self.cfg,
        )
        .ok()
        .map(|opt| CccValue {
            value: Count::from(opt.size),
            source: if opt.proven {
                "exhaustive search (optimal)"
            } else {
                "exhaustive search (budgeted)"
            }
            .into(),
        });
        self.cache.lock().expect("cache lock").insert(key, res.clone());
        res
    }
}

/// The largest value any member oracle offers.
#[derive(Default)]
pub struct CombinedOracle {
    oracles: Vec<Box<dyn CccOracle + Send>>,
}

impl CombinedOracle {
    pub fn new() -> Self {
        CombinedOracle::default()
    }

    pub fn with(mut self, oracle: impl CccOracle + Send + 'static) -> Self {
        self.oracles.push(Box::new(oracle));
        self
    }
}

impl CccOracle for CombinedOracle {
    fn lower_bound(&self, comp: &Composition, d: u32) -> Option<CccValue> {
        self.oracles
            .iter()
            .filter_map(|o| o.lower_bound(comp, d))
            .max_by(|a, b| a.value.cmp(&b.value))
    }
}

/// Lower bound on `A_q(comp, d)`: the whole class for `d <= 1`, otherwise
/// the oracle value, never below a single word.
pub fn ccc_lower(comp: &Composition, d: u32, oracle: &dyn CccOracle) -> CccValue {
    if d <= 1 {
        return CccValue {
            value: multinomial(comp.parts()),
            source: "every word of the class".into(),
        };
    }
    let single = CccValue {
        value: Count::one(),
        source: "a single word".into(),
    };
    if d > comp.n() {
        return single;
    }
    match oracle.lower_bound(comp, d) {
        Some(v) if v.value > Count::one() => v,
        _ => single,
    }
}

/// `[r^k, l1^(rem - m l0), l0^(m - rem + m l0)]` with `m = q - k`,
/// `rem = n - r k`, `l0 = floor(rem/m)`, `l1 = ceil(rem/m)`.
///
/// Returns the composition and, when every non-`r` part is equal to some
/// `l`, the gap `a = r - l` separating differing parts of two rearrangements.
/// `None` when `k` is 0 or exceeds `q`, when `r k > n`, or when `l1 >= r`.
pub fn near_uniform_composition(n: u32, q: u32, k: u32, r: u32) -> Option<(Composition, Option<u32>)> {
    if k == 0 || k > q || r.checked_mul(k)? > n {
        return None;
    }
    let rem = n - r * k;
    let m = q - k;
    if m == 0 {
        return (rem == 0).then(|| (Composition::new(vec![r; q as usize]).expect("non-empty"), None));
    }
    let (l0, l1) = (rem / m, rem.div_ceil(m));
    if l1 >= r {
        return None;
    }
    let ones = rem - m * l0;
    let mut parts = vec![r; k as usize];
    parts.extend(std::iter::repeat(l1).take(ones as usize));
    parts.extend(std::iter::repeat(l0).take((m - ones) as usize));
    let gap = (ones == 0).then_some(r - l0);
    Some((Composition::new(parts).expect("non-empty"), gap))
}

/// One product `A_2(q, D, k) A_q(comp, d)` of a composed sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComposedTerm {
    /// Symbol weight of the composition.
    pub s: u32,
    /// Number of parts equal to `s`.
    pub k: u32,
    #[serde(serialize_with = "ser_display")]
    pub composition: Composition,
    /// Uniform gap between differing parts, when there is one.
    pub gap: Option<u32>,
    /// Binary distance `D` required of the constant-weight code.
    pub cw_distance: u32,
    #[serde(serialize_with = "crate::arith::ser_count")]
    pub cw: Count,
    pub cw_source: String,
    #[serde(serialize_with = "crate::arith::ser_count")]
    pub ccc: Count,
    pub ccc_source: String,
    #[serde(serialize_with = "crate::arith::ser_count")]
    pub product: Count,
}

/// The sum over `i = 0..=b` of terms with `k = k1 + 2 d i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComposedSum {
    pub s: u32,
    pub k1: u32,
    #[serde(serialize_with = "crate::arith::ser_count")]
    pub total: Count,
    pub terms: Vec<ComposedTerm>,
}

fn ser_display<T: fmt::Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn composed_term(n: u32, q: u32, d: u32, s: u32, k: u32, oracle: &dyn CccOracle) -> Option<ComposedTerm> {
    let (composition, gap) = near_uniform_composition(n, q, k, s)?;
    // Rearrangements whose parts differ by 0 or a are at d+ >= D a / 2.
    let cw_distance = match gap {
        Some(a) => 2 * d.div_ceil(a),
        None => 2 * d,
    };
    let cw = cw_lower(q, cw_distance, k).ok()?;
    let cw_source = match &cw.note {
        Some(note) => format!("{} ({note})", cw.provenance),
        None => cw.provenance.to_string(),
    };
    let cw = cw.size_value().expect("size").clone();
    let ccc = ccc_lower(&composition, d, oracle);
    Some(ComposedTerm {
        s,
        k,
        composition,
        gap,
        cw_distance,
        product: &cw * &ccc.value,
        cw,
        cw_source,
        ccc: ccc.value,
        ccc_source: ccc.source,
    })
}

/// Every sum for symbol weight `s`, one per `k1` in `[k0, min(n/s, q)]`.
///
/// Rearrangements of near-uniform compositions whose `s`-positions form
/// binary words at distance at least `2d` are at `d+ >= d`, so the terms
/// add. Weight classes `2d` apart are far enough for the same reason.
pub fn composed_sums(n: u32, q: u32, d: u32, s: u32, oracle: &dyn CccOracle, cfg: &Config) -> Result<Vec<ComposedSum>> {
    SpaceSpec::new(n, q, s, SpaceMode::Exact)?;
    if d == 0 {
        return Err(Error::invalid("distance must be at least 1"));
    }
    let top = (n / s).min(q);
    let k1s: Vec<u32> = (k0(n, q, s)..=top).collect();
    Ok(cfg.exec.map_slice(&k1s, |&k1| {
        let b = (top - k1) / (2 * d);
        let terms: Vec<ComposedTerm> = (0..=b)
            .filter_map(|i| composed_term(n, q, d, s, k1 + 2 * d * i, oracle))
            .collect();
        ComposedSum {
            s,
            k1,
            total: terms.iter().map(|t| &t.product).sum(),
            terms,
        }
    }))
}

fn best_sum(sums: impl IntoIterator<Item = ComposedSum>) -> Option<ComposedSum> {
    // Ties keep the earliest (smallest s, then k1) for determinism.
    sums.into_iter().fold(None, |best, s| match best {
        Some(b) if b.total >= s.total => Some(b),
        _ => Some(s),
    })
}

fn composed_result(provenance: Provenance, best: Option<ComposedSum>, inputs: BoundInputs) -> BoundResult {
    match best {
        Some(sum) => {
            let mut b = BoundResult::size(
                provenance,
                Direction::Lower,
                sum.total.clone().max(Count::one()),
                inputs,
            )
            .with_note(format!("s = {}, k1 = {}", sum.s, sum.k1));
            b.terms = sum.terms;
            b
        }
        None => BoundResult::size(provenance, Direction::Lower, Count::one(), inputs),
    }
}

/// `A_q^SW(n,d,r) >= max_{k1} sum_i A_2(q, 2d, k1 + 2di) A_q(n(l0,l1,k1+2di,r), d)`,
/// sharpened within a weight class by the uniform gap when there is one.
pub fn csw_lower_composed(n: u32, q: u32, d: u32, r: u32, oracle: &dyn CccOracle, cfg: &Config) -> Result<BoundResult> {
    let sums = composed_sums(n, q, d, r, oracle, cfg)?;
    Ok(composed_result(
        Provenance::ComposedConstant,
        best_sum(sums),
        BoundInputs::sized(n, q, d, Some(r), Some(SpaceMode::Exact)),
    ))
}

/// `A_q^SW(n,d,<=r) >= max_{ceil(n/q) <= s <= r} A_q^SW(n,d,s)` with each
/// term bounded as in [`csw_lower_composed`].
pub fn bsw_lower_composed(n: u32, q: u32, d: u32, r: u32, oracle: &dyn CccOracle, cfg: &Config) -> Result<BoundResult> {
    SpaceSpec::new(n, q, r, SpaceMode::Bounded)?;
    let mut all = Vec::new();
    for s in n.div_ceil(q).max(1)..=r {
        all.extend(composed_sums(n, q, d, s, oracle, cfg)?);
    }
    Ok(composed_result(
        Provenance::ComposedBounded,
        best_sum(all),
        BoundInputs::sized(n, q, d, Some(r), Some(SpaceMode::Bounded)),
    ))
}

/// `sum over the family of A_q(comp, d)` for a family pairwise at `d+ >= d`.
pub fn anticode_sum_lower(family: &CompositionFamily, d: u32, oracle: &dyn CccOracle) -> Result<BoundResult> {
    if let Some(min) = family.min_dplus() {
        if min < d {
            return Err(Error::invalid(format!("family has members at d+ = {min} < {d}")));
        }
    }
    let values: Vec<CccValue> = family.members().iter().map(|c| ccc_lower(c, d, oracle)).collect();
    let total: Count = values.iter().map(|v| &v.value).sum();
    let from_oracle = values.iter().filter(|v| v.value > Count::one()).count();
    let inputs = BoundInputs {
        n: Some(family.n()),
        q: Some(family.q() as u32),
        d: Some(d),
        ..Default::default()
    };
    let note = format!("{} compositions, {from_oracle} with CCC values above 1", family.len());
    let mut b = BoundResult::size(Provenance::AnticodeSum, Direction::Lower, total, inputs).with_note(note);
    if b.size_value().is_some_and(Zero::is_zero) {
        b.note = Some("empty family".into());
    }
    Ok(b)
}
