//! Recursive constructions that keep the symbol weight under control.

use serde::Serialize;

use super::Code;
use crate::{Config, Count, Error, Result};

/// A constructed code together with its audited parameters.
#[derive(Clone, Debug)]
pub struct Construction {
    pub code: Code,
    /// Symbol weight shared by every codeword.
    pub symbol_weight: u32,
    /// Audited minimum distance; `None` for a single codeword.
    pub min_distance: Option<u32>,
    /// Distance the construction guarantees; the audit checks `min_distance >= designed_distance`.
    pub designed_distance: Option<u32>,
}

/// Parameters of a [`Construction`], for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionSummary {
    pub n: usize,
    pub q: u32,
    #[serde(serialize_with = "crate::arith::ser_count")]
    pub size: Count,
    pub symbol_weight: u32,
    pub min_distance: Option<u32>,
    pub designed_distance: Option<u32>,
}

impl Construction {
    pub fn summary(&self) -> ConstructionSummary {
        ConstructionSummary {
            n: self.code.n(),
            q: self.code.q(),
            size: Count::from(self.code.len()),
            symbol_weight: self.symbol_weight,
            min_distance: self.min_distance,
            designed_distance: self.designed_distance,
        }
    }
}

/// Multiplicity `m` when every word has every symbol of `Z_q` exactly `m`
/// times, i.e. the code is a frequency permutation array.
pub fn fpa_multiplicity(code: &Code) -> Option<u32> {
    let q = code.q() as usize;
    if q == 0 || code.n() % q != 0 || code.is_empty() {
        return None;
    }
    let m = (code.n() / q) as u32;
    code.words()
        .iter()
        .all(|w| {
            let mut counts = vec![0u32; q];
            w.symbols().iter().for_each(|&s| counts[s as usize] += 1);
            counts.iter().all(|&c| c == m)
        })
        .then_some(m)
}

fn distance_or_none(code: &Code, cfg: &Config) -> Option<u32> {
    (code.len() >= 2).then(|| code.min_distance_with(cfg.exec).expect("at least two words"))
}

fn min_opt(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// `{(u, v) : u in c, v in fpa}` for a constant symbol-weight code `c` of
/// weight `r` and an FPA `fpa` of multiplicity `r'`: length `n + r'q`,
/// size `M M'`, symbol weight `r + r'` and distance `min(d, d')`.
pub fn uv_construct(c: &Code, fpa: &Code, cfg: &Config) -> Result<Construction> {
    if c.q() != fpa.q() {
        return Err(Error::invalid("both codes must share the alphabet"));
    }
    let r = c
        .constant_symbol_weight()
        .ok_or_else(|| Error::invalid("first code must have constant symbol weight"))?;
    let r2 = fpa_multiplicity(fpa).ok_or_else(|| Error::invalid("second code is not a frequency permutation array"))?;
    let (m1, m2) = (c.len(), fpa.len());
    let size = Count::from(m1) * m2;
    if size > Count::from(cfg.materialize_cap) {
        return Err(Error::cap("u|v construction", size, cfg.materialize_cap));
    }
    let words = cfg.exec.map_range(0..m1 * m2, |i| {
        let (u, v) = (&c.words()[i / m2], &fpa.words()[i % m2]);
        u.symbols().iter().chain(v.symbols()).copied().collect()
    });
    let code = Code::new(c.n() + fpa.n(), c.q(), words)?;
    let designed = min_opt(distance_or_none(c, cfg), distance_or_none(fpa, cfg));
    audit(code, r + r2, designed, true, cfg)
}

/// Replaces every symbol `i` of `outer` over `Z_q` by word `i` of the FPA
/// `inner` over `Z_p` with multiplicity `r`: length `n r p`, size `M`,
/// symbol weight `n r` and distance at least `d d'`.
pub fn concat_construct(outer: &Code, inner: &Code, cfg: &Config) -> Result<Construction> {
    if inner.len() < outer.q() as usize {
        return Err(Error::invalid(format!(
            "inner code has {} words, fewer than the outer alphabet {}",
            inner.len(),
            outer.q()
        )));
    }
    let r = fpa_multiplicity(inner).ok_or_else(|| Error::invalid("inner code is not a frequency permutation array"))?;
    let words = cfg.exec.map_slice(outer.words(), |w| {
        w.symbols()
            .iter()
            .flat_map(|&s| inner.words()[s as usize].symbols().iter().copied())
            .collect()
    });
    let code = Code::new(outer.n() * inner.n(), inner.q(), words)?;
    let inner_used = Code::new(
        inner.n(),
        inner.q(),
        inner.words()[..outer.q() as usize]
            .iter()
            .map(|w| w.symbols().to_vec())
            .collect(),
    )?;
    let designed = match (distance_or_none(outer, cfg), distance_or_none(&inner_used, cfg)) {
        (Some(d), Some(d2)) => Some(d * d2),
        _ => None,
    };
    audit(code, outer.n() as u32 * r, designed, false, cfg)
}

/// Verifies the claimed parameters on the output instead of trusting them.
fn audit(code: Code, weight: u32, designed: Option<u32>, exact: bool, cfg: &Config) -> Result<Construction> {
    if !code.is_empty() && code.constant_symbol_weight() != Some(weight) {
        return Err(Error::Verification(format!(
            "symbol weights {:?} differ from the claimed {weight}",
            code.symbol_weight_range()
        )));
    }
    let d = distance_or_none(&code, cfg);
    if let (Some(d), Some(want)) = (d, designed) {
        if d < want || (exact && d != want) {
            return Err(Error::Verification(format!(
                "minimum distance {d} contradicts the designed {want}"
            )));
        }
    }
    Ok(Construction {
        code,
        symbol_weight: weight,
        min_distance: d,
        designed_distance: designed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::RsCode;
    use crate::field::Field;

    fn code(n: usize, q: u32, words: &[&[u32]]) -> Code {
        Code::new(n, q, words.iter().map(|w| w.to_vec()).collect()).unwrap()
    }

    #[test]
    fn uv_on_permutation_words() {
        let cfg = Config::default();
        let c = code(3, 3, &[&[0, 1, 2]]);
        let out = uv_construct(&c, &c, &cfg).unwrap();
        assert_eq!(out.code.words()[0].symbols(), &[0, 1, 2, 0, 1, 2]);
        assert_eq!(out.symbol_weight, 2);
        assert_eq!(out.min_distance, None);
    }

    #[test]
    fn uv_distance_is_the_minimum() {
        let cfg = Config::default();
        let c = code(3, 3, &[&[0, 0, 1], &[1, 1, 2], &[2, 2, 0]]);
        let fpa = code(6, 3, &[&[0, 1, 2, 0, 1, 2], &[1, 2, 0, 1, 2, 0], &[2, 0, 1, 2, 0, 1]]);
        let out = uv_construct(&c, &fpa, &cfg).unwrap();
        assert_eq!(out.code.len(), 9);
        assert_eq!(out.symbol_weight, 4);
        assert_eq!(out.min_distance, Some(3));
        assert!(uv_construct(&fpa, &c, &cfg).is_err());
    }

    #[test]
    fn concatenation_with_rs_outer() {
        let cfg = Config::default();
        let outer = RsCode::new(&Field::from_order(5).unwrap(), 2)
            .unwrap()
            .materialize(&cfg)
            .unwrap();
        // Cyclic shifts of 0..4: pairwise distance 5.
        let inner = Code::new(5, 5, (0..5).map(|s| (0..5).map(|i| (i + s) % 5).collect()).collect()).unwrap();
        let out = concat_construct(&outer, &inner, &cfg).unwrap();
        assert_eq!(out.code.len(), 25);
        assert_eq!(out.code.n(), 20);
        assert_eq!(out.symbol_weight, 4);
        assert!(out.min_distance.unwrap() >= 15);
        assert_eq!(out.designed_distance, Some(15));
    }

    #[test]
    fn fpa_detection() {
        assert_eq!(fpa_multiplicity(&code(4, 2, &[&[0, 1, 1, 0], &[1, 0, 0, 1]])), Some(2));
        assert_eq!(fpa_multiplicity(&code(4, 2, &[&[0, 1, 1, 1]])), None);
        assert_eq!(fpa_multiplicity(&code(3, 2, &[&[0, 1, 1]])), None);
    }
}
