//! Every applicable bound at one parameter point, audited against each other.

use num_traits::{One, Zero};
use serde::Serialize;

use super::composed::{anticode_sum_lower, bsw_lower_composed, ccc_lower, csw_lower_composed, CccOracle};
use super::finite::{
    dukes_upper, gv_lower, johnson_upper, perm_anticode_lower, shift_lower, singleton_upper, trivial_q_regime,
};
use super::{BoundInputs, BoundResult, Direction, Provenance};
use crate::codes::{exhaustive_optimum, WordSpace};
use crate::compositions::{count_compositions, search_anticode, AnticodeStrategy, Composition, WeightFilter};
use crate::spaces::{SpaceMode, SpaceSpec};
use crate::{Config, Count, Error, Result};

/// Tightest lower and upper bounds with every candidate that produced them.
#[derive(Clone, Debug, Serialize)]
pub struct BestBounds {
    pub lower: BoundResult,
    pub upper: BoundResult,
    pub all: Vec<BoundResult>,
}

impl BestBounds {
    /// True when the lower and upper bounds meet.
    pub fn is_exact(&self) -> bool {
        self.lower.size_value() == self.upper.size_value()
    }
}

/// Evaluates every bound that applies to `A_q^SW(n,d,r)` (exact mode) or
/// `A_q^SW(n,d,<=r)` (bounded mode), including a clique search when `q^n`
/// is within the exhaustive cap, and audits that no lower bound exceeds any
/// upper bound.
pub fn best_bounds(
    n: u32,
    q: u32,
    d: u32,
    r: u32,
    mode: SpaceMode,
    oracle: &dyn CccOracle,
    cfg: &Config,
) -> Result<BestBounds> {
    let spec = SpaceSpec::new(n, q, r, mode)?;
    if d == 0 {
        return Err(Error::invalid("distance must be at least 1"));
    }
    let inputs = BoundInputs::sized(n, q, d, Some(r), Some(mode));
    let mut all = Vec::new();
    let size = spec.size(cfg).ok();
    if let Some(size) = size.clone() {
        let dir = if d == 1 || size.is_zero() {
            Direction::Exact
        } else {
            Direction::Upper
        };
        all.push(BoundResult::size(Provenance::SpaceSize, dir, size, inputs));
    }
    if size.as_ref().is_some_and(Zero::is_zero) {
        // Nothing else applies to an empty space.
    } else if d > n {
        all.push(
            BoundResult::size(Provenance::Trivial, Direction::Exact, Count::one(), inputs)
                .with_note("no two words are farther apart than n"),
        );
    } else {
        collect_bounds(&spec, d, oracle, cfg, &mut all)?;
    }
    audit(&all)?;
    let lower = all
        .iter()
        .filter(|b| b.direction.bounds_below())
        .fold(None::<&BoundResult>, |best, b| match best {
            Some(x) if x.size_value() >= b.size_value() => Some(x),
            _ => Some(b),
        })
        .expect("shift or trivial bound present")
        .clone();
    let upper = all
        .iter()
        .filter(|b| b.direction.bounds_above())
        .fold(None::<&BoundResult>, |best, b| match best {
            Some(x) if x.size_value() <= b.size_value() => Some(x),
            _ => Some(b),
        })
        .expect("Singleton bound present")
        .clone();
    Ok(BestBounds { lower, upper, all })
}

fn collect_bounds(
    spec: &SpaceSpec,
    d: u32,
    oracle: &dyn CccOracle,
    cfg: &Config,
    all: &mut Vec<BoundResult>,
) -> Result<()> {
    let SpaceSpec { n, q, r, mode } = *spec;
    let inputs = BoundInputs::sized(n, q, d, Some(r), Some(mode));
    let with_inputs = |mut b: BoundResult| {
        b.inputs = inputs;
        b
    };
    all.push(with_inputs(singleton_upper(n, d, q)?));
    if mode == SpaceMode::Exact {
        all.extend(trivial_q_regime(n, d, r, q));
        if let Ok(b) = johnson_upper(n, d, r, q) {
            all.push(b);
        }
    }
    // Bounded weight 1 is exact weight 1.
    if r == 1 {
        if let Ok(b) = dukes_upper(n, d, q) {
            all.push(with_inputs(b));
        }
    }
    all.push(shift_lower(n, d, r, q, mode)?);
    if let Ok(b) = gv_lower(n, d, r, q, mode, cfg) {
        all.push(b);
    }
    all.push(match mode {
        SpaceMode::Exact => csw_lower_composed(n, q, d, r, oracle, cfg)?,
        SpaceMode::Bounded => bsw_lower_composed(n, q, d, r, oracle, cfg)?,
    });
    if q == r && n == r * (r + 1) / 2 {
        let count = perm_anticode_lower(r, d)?;
        let base = Composition::new((1..=r).collect()).expect("r >= 1");
        let ccc = ccc_lower(&base, d, oracle);
        let value = count.size_value().expect("size") * &ccc.value;
        all.push(
            BoundResult::size(Provenance::PermutationAnticode, Direction::Lower, value, inputs).with_note(format!(
                "{} rearrangements of {base}, CCC from {}",
                count.size_value().expect("size"),
                ccc.source
            )),
        );
    }
    if let Some(b) = greedy_anticode_sum(spec, d, oracle, cfg) {
        all.push(with_inputs(b));
    }
    if let Some(mut found) = exhaustive(spec, d, cfg) {
        all.append(&mut found);
    }
    Ok(())
}

/// Greedy anticode sum, maximised over the admissible weights; skipped when
/// a weight class has more compositions than the materialisation cap.
fn greedy_anticode_sum(spec: &SpaceSpec, d: u32, oracle: &dyn CccOracle, cfg: &Config) -> Option<BoundResult> {
    let weights = match spec.mode {
        SpaceMode::Exact => spec.r..=spec.r,
        SpaceMode::Bounded => spec.n.div_ceil(spec.q).max(1)..=spec.r,
    };
    let mut best: Option<BoundResult> = None;
    for s in weights {
        let size = count_compositions(spec.n, spec.q as usize, WeightFilter::Exact(s));
        if size > Count::from(cfg.materialize_cap) {
            return None;
        }
        let fam = search_anticode(spec.n, spec.q as usize, s, d, AnticodeStrategy::Greedy, cfg).ok()?;
        let b = anticode_sum_lower(&fam, d, oracle).ok()?;
        if best.as_ref().map_or(true, |x| b.size_value() > x.size_value()) {
            best = Some(b.with_note(format!(
                "greedy anticode at symbol weight {s} with {} compositions",
                fam.len()
            )));
        }
    }
    best
}

/// Clique search over the whole space: exact when it completes, otherwise
/// the witness size and the search's upper bound.
fn exhaustive(spec: &SpaceSpec, d: u32, cfg: &Config) -> Option<Vec<BoundResult>> {
    let space = match spec.mode {
        SpaceMode::Exact => WordSpace::ExactWeight(spec.r),
        SpaceMode::Bounded => WordSpace::BoundedWeight(spec.r),
    };
    let opt = exhaustive_optimum(spec.n as usize, spec.q, d, &space, cfg).ok()?;
    let inputs = BoundInputs::sized(spec.n, spec.q, d, Some(spec.r), Some(spec.mode));
    let note = format!("{} search nodes", opt.nodes);
    Some(if opt.proven {
        vec![BoundResult::size(Provenance::Exhaustive, Direction::Exact, Count::from(opt.size), inputs).with_note(note)]
    } else {
        vec![
            BoundResult::size(Provenance::Exhaustive, Direction::Lower, Count::from(opt.size), inputs)
                .with_note(format!("witness found within budget; {note}")),
            BoundResult::size(
                Provenance::Exhaustive,
                Direction::Upper,
                Count::from(opt.upper_bound),
                inputs,
            )
            .with_note(format!("search bound when the budget ran out; {note}")),
        ]
    })
}

/// Fails when some lower bound exceeds some upper bound.
fn audit(all: &[BoundResult]) -> Result<()> {
    for lo in all.iter().filter(|b| b.direction.bounds_below()) {
        for up in all.iter().filter(|b| b.direction.bounds_above()) {
            if lo.size_value() > up.size_value() {
                return Err(Error::InconsistentBounds {
                    lower: lo.value.to_string(),
                    lower_source: lo.provenance.to_string(),
                    upper: up.value.to_string(),
                    upper_source: up.provenance.to_string(),
                });
            }
        }
    }
    Ok(())
}
