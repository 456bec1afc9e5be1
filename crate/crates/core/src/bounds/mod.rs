//! Upper and lower bounds on the largest code with minimum distance `d`
//! inside `SW(n,q,r)` or `SW(n,q,<=r)`.
//!
//! Every result names the argument that produced it and its direction.
//! [`best_bounds`] evaluates everything applicable and audits that no lower
//! bound exceeds an upper bound.

mod best;
mod composed;
mod cw;
mod finite;
mod rate;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::spaces::SpaceMode;
use crate::Count;

pub use best::{best_bounds, BestBounds};
pub use composed::{
    anticode_sum_lower, bsw_lower_composed, ccc_lower, composed_sums, csw_lower_composed, near_uniform_composition,
    CccOracle, CccValue, CombinedOracle, ComposedSum, ComposedTerm, ExhaustiveCccOracle, LiteratureEntry,
    LiteratureOracle, NoOracle,
};
pub use cw::{cw_gv, cw_lower, cw_table, levenshtein_significance, CwExactness, CwTableEntry};
pub use finite::{
    dukes_upper, gv_lower, johnson_upper, perm_anticode_lower, perm_ball_volume, shift_lower, singleton_upper,
    trivial_q_regime,
};
pub use rate::{
    curve_samples, gv_rate_lower, large_r_rate_upper, lp_rate_upper, singleton_rate_upper, CurveAxis, CurveSample,
    QMode,
};

/// Argument that produced a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Averaging a Hamming-space GV code over translates.
    Gv,
    /// `q^{n-d+1}`.
    Singleton,
    /// Aaltonen's linear-programming rate bound.
    AaltonenLp,
    /// `A = q` when `d >= r > 2n/3`.
    LargeWeight,
    /// The `q` translates `x + a 1` of any word.
    Shift,
    /// Johnson-type puncturing recursion anchored at the large-weight regime.
    JohnsonRecursion,
    /// Rate bound from the Johnson recursion.
    LargeWeightRate,
    /// Dukes' falling-factorial bound for `r = 1`.
    Dukes,
    /// Binary constant-weight table or closed form.
    CwTable,
    /// Binary constant-weight GV quotient.
    CwGv,
    /// GV quotient for a permutation code on the weight classes of `[1, ..., r]`.
    PermutationAnticode,
    /// Near-uniform compositions indexed by a binary constant-weight code.
    ComposedConstant,
    /// The composed bound maximised over symbol weights `s <= r`.
    ComposedBounded,
    /// Sum of CCC bounds over an anticode of compositions.
    AnticodeSum,
    /// Maximum-clique search.
    Exhaustive,
    /// Size of the space itself.
    SpaceSize,
    /// A single word, or a distance no two words can reach.
    Trivial,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().expect("string tag"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    Lower,
    Upper,
    /// Both a lower and an upper bound.
    Exact,
}

impl Direction {
    pub fn bounds_below(self) -> bool {
        matches!(self, Direction::Lower | Direction::Exact)
    }

    pub fn bounds_above(self) -> bool {
        matches!(self, Direction::Upper | Direction::Exact)
    }
}

/// Exact code size or asymptotic rate.
#[derive(Clone, Debug, PartialEq)]
pub enum BoundValue {
    Size(Count),
    Rate(f64),
}

impl Serialize for BoundValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("BoundValue", 2)?;
        match self {
            BoundValue::Size(c) => {
                st.serialize_field("kind", "size")?;
                st.serialize_field("value", &c.to_string())?;
            }
            BoundValue::Rate(r) => {
                st.serialize_field("kind", "rate")?;
                st.serialize_field("value", r)?;
            }
        }
        st.end()
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Size(c) => write!(f, "{c}"),
            BoundValue::Rate(r) => write!(f, "{r:.12}"),
        }
    }
}

/// Parameters a bound was evaluated at.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct BoundInputs {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<SpaceMode>,
}

impl BoundInputs {
    pub fn sized(n: u32, q: u32, d: u32, r: Option<u32>, mode: Option<SpaceMode>) -> Self {
        BoundInputs {
            n: Some(n),
            q: Some(q),
            d: Some(d),
            r,
            mode,
            ..Default::default()
        }
    }
}

/// One bound with its provenance.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundResult {
    pub provenance: Provenance,
    pub direction: Direction,
    pub value: BoundValue,
    pub inputs: BoundInputs,
    /// True when a negative rate was raised to 0.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub clamped: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Terms of a composed bound, when it is one.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub terms: Vec<ComposedTerm>,
}

impl BoundResult {
    pub(crate) fn size(provenance: Provenance, direction: Direction, value: Count, inputs: BoundInputs) -> Self {
        BoundResult {
            provenance,
            direction,
            value: BoundValue::Size(value),
            inputs,
            clamped: false,
            note: None,
            terms: Vec::new(),
        }
    }

    pub(crate) fn rate(provenance: Provenance, direction: Direction, rate: f64, inputs: BoundInputs) -> Self {
        let clamped = rate < 0.0;
        BoundResult {
            provenance,
            direction,
            value: BoundValue::Rate(rate.max(0.0)),
            inputs,
            clamped,
            note: None,
            terms: Vec::new(),
        }
    }

    pub(crate) fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Size value, or `None` for rates.
    pub fn size_value(&self) -> Option<&Count> {
        match &self.value {
            BoundValue::Size(c) => Some(c),
            BoundValue::Rate(_) => None,
        }
    }

    /// Rate value, or `None` for sizes.
    pub fn rate_value(&self) -> Option<f64> {
        match self.value {
            BoundValue::Rate(r) => Some(r),
            BoundValue::Size(_) => None,
        }
    }
}
