//! Asymptotic rate bounds as functions of `rho = r/n` and `delta = d/n`.

use serde::Serialize;

use super::{BoundInputs, BoundResult, Direction, Provenance};
use crate::spaces::{entropy_unchecked, AsymptoticRegime, SpaceMode};
use crate::{Error, Result};

/// Constant alphabet or one growing with the length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QMode {
    Constant(u32),
    Growing,
}

impl QMode {
    fn q(self) -> Option<u32> {
        match self {
            QMode::Constant(q) => Some(q),
            QMode::Growing => None,
        }
    }

    fn check(self) -> Result<()> {
        match self {
            QMode::Constant(q) if q < 2 => Err(Error::invalid(format!("rate bounds need q >= 2, got {q}"))),
            _ => Ok(()),
        }
    }
}

fn inputs(q: Option<u32>, rho: Option<f64>, delta: Option<f64>, mode: Option<SpaceMode>) -> BoundInputs {
    BoundInputs {
        q,
        rho,
        delta,
        mode,
        ..Default::default()
    }
}

fn unit(name: &str, x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::invalid(format!("{name} = {x} outside [0, 1]")))
    }
}

/// GV-type lower bound.
///
/// Constant `q`: `h_q(1-rho) - h_q(delta)` for exact weight and
/// `1 - h_q(delta)` for bounded weight. Growing `q`: `1 - rho - delta` and
/// `1 - delta`. Negative values are clamped to 0 and flagged. Exact weight
/// with constant `q` needs `rho >= 1/q`, below which the space is empty.
pub fn gv_rate_lower(regime: &AsymptoticRegime, mode: SpaceMode) -> Result<BoundResult> {
    let regime = regime.validated()?;
    let (rho, delta) = (regime.rho, regime.delta);
    let q = regime.q();
    if let Some(q) = q {
        let max = (q - 1) as f64 / q as f64;
        if delta > max {
            return Err(Error::invalid(format!("delta = {delta} exceeds (q-1)/q = {max}")));
        }
        if mode == SpaceMode::Exact && rho * (q as f64) < 1.0 {
            return Err(Error::NotApplicable(format!(
                "rho = {rho} below 1/q leaves the space empty"
            )));
        }
    }
    let rate = match (q, mode) {
        (Some(q), SpaceMode::Exact) => entropy_unchecked(1.0 - rho, q as f64) - entropy_unchecked(delta, q as f64),
        (Some(q), SpaceMode::Bounded) => 1.0 - entropy_unchecked(delta, q as f64),
        (None, SpaceMode::Exact) => 1.0 - rho - delta,
        (None, SpaceMode::Bounded) => 1.0 - delta,
    };
    let rho_in = (mode == SpaceMode::Exact).then_some(rho);
    Ok(BoundResult::rate(
        Provenance::Gv,
        Direction::Lower,
        rate,
        inputs(q, rho_in, Some(delta), Some(mode)),
    ))
}

/// `k_q(x) = (q-1)/q - (q-2)x/q - (2/q) sqrt((q-1) x (1-x))`.
fn lp_k(x: f64, q: f64) -> f64 {
    let k = (q - 1.0) / q - (q - 2.0) * x / q - 2.0 / q * ((q - 1.0) * x * (1.0 - x)).max(0.0).sqrt();
    k.clamp(0.0, (q - 1.0) / q)
}

/// Aaltonen's linear-programming upper bound `h_q(k_q(delta))`, valid for
/// every symbol-weight space since each sits inside the Hamming space.
pub fn lp_rate_upper(delta: f64, q: u32) -> Result<BoundResult> {
    QMode::Constant(q).check()?;
    let qf = q as f64;
    if !(0.0..=(qf - 1.0) / qf).contains(&delta) {
        return Err(Error::invalid(format!("delta = {delta} outside [0, (q-1)/q]")));
    }
    let rate = entropy_unchecked(lp_k(delta, qf), qf);
    Ok(BoundResult::rate(
        Provenance::AaltonenLp,
        Direction::Upper,
        rate,
        inputs(Some(q), None, Some(delta), None),
    ))
}

/// Upper bound for constant symbol weight from the Johnson recursion.
///
/// Constant `q`: `h_q(1 - 3rho/2) - (1-rho) h_q((1 - 3rho/2)/(1-rho)) + 1 - 3rho/2`.
/// Growing `q`: `1 - 3rho/2`. Needs `rho <= 2/3` and `delta >= rho`; with a
/// constant alphabet also `rho >= 1/q`.
pub fn large_r_rate_upper(rho: f64, delta: f64, q_mode: QMode) -> Result<BoundResult> {
    q_mode.check()?;
    unit("rho", rho)?;
    unit("delta", delta)?;
    if rho > 2.0 / 3.0 {
        return Err(Error::NotApplicable(format!("rho = {rho} exceeds 2/3")));
    }
    if delta < rho {
        return Err(Error::NotApplicable(format!("delta = {delta} below rho = {rho}")));
    }
    let lam = 1.0 - 1.5 * rho;
    let rate = match q_mode {
        QMode::Growing => lam,
        QMode::Constant(q) => {
            if rho * (q as f64) < 1.0 {
                return Err(Error::NotApplicable(format!("rho = {rho} below 1/q")));
            }
            let qf = q as f64;
            entropy_unchecked(lam, qf) - (1.0 - rho) * entropy_unchecked(lam / (1.0 - rho), qf) + lam
        }
    };
    Ok(BoundResult::rate(
        Provenance::LargeWeightRate,
        Direction::Upper,
        rate,
        inputs(q_mode.q(), Some(rho), Some(delta), Some(SpaceMode::Exact)),
    ))
}

/// Singleton rate bound `1 - delta`.
pub fn singleton_rate_upper(delta: f64) -> Result<BoundResult> {
    unit("delta", delta)?;
    Ok(BoundResult::rate(
        Provenance::Singleton,
        Direction::Upper,
        1.0 - delta,
        inputs(None, None, Some(delta), None),
    ))
}

/// Which parameter a curve sweeps; the other is fixed.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CurveAxis {
    /// Sweep `rho` at fixed `delta`.
    Rho { delta: f64 },
    /// Sweep `delta` at fixed `rho`.
    Delta { rho: f64 },
}

/// Every rate bound at one point; `None` where a bound does not apply.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CurveSample {
    pub rho: f64,
    pub delta: f64,
    pub gv_exact: Option<f64>,
    pub gv_bounded: Option<f64>,
    pub lp: Option<f64>,
    pub large_r: Option<f64>,
    pub singleton: Option<f64>,
}

/// Samples every rate bound along `grid`.
pub fn curve_samples(q_mode: QMode, axis: CurveAxis, grid: &[f64]) -> Result<Vec<CurveSample>> {
    q_mode.check()?;
    grid.iter()
        .map(|&x| {
            let (rho, delta) = match axis {
                CurveAxis::Rho { delta } => (x, delta),
                CurveAxis::Delta { rho } => (rho, x),
            };
            unit("rho", rho)?;
            unit("delta", delta)?;
            let regime = AsymptoticRegime {
                theta: q_mode.q().map_or(1.0, f64::from),
                epsilon: if q_mode.q().is_some() { 0.0 } else { 1.0 },
                rho,
                delta,
            };
            let gv = |mode| gv_rate_lower(&regime, mode).ok().and_then(|b| b.rate_value());
            Ok(CurveSample {
                rho,
                delta,
                gv_exact: gv(SpaceMode::Exact),
                gv_bounded: gv(SpaceMode::Bounded),
                lp: q_mode
                    .q()
                    .and_then(|q| lp_rate_upper(delta, q).ok())
                    .and_then(|b| b.rate_value()),
                large_r: large_r_rate_upper(rho, delta, q_mode).ok().and_then(|b| b.rate_value()),
                singleton: singleton_rate_upper(delta).ok().and_then(|b| b.rate_value()),
            })
        })
        .collect()
}
