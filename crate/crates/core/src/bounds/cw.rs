//! Binary constant-weight codes `A_2(q, D, w)`: a small table of published
//! values, closed forms, and the GV quotient.

use num_traits::One;
use serde::Serialize;

use super::{BoundInputs, BoundResult, Direction, Provenance};
use crate::arith::{binomial, ceil_div};
use crate::{Count, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CwExactness {
    Exact,
    LowerBound,
}

/// A published value of `A_2(q, d, w)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CwTableEntry {
    pub q: u32,
    pub d: u32,
    pub w: u32,
    pub value: u64,
    pub exactness: CwExactness,
    pub source: &'static str,
}

const AGRELL: &str = "Agrell, Vardy and Zeger, Upper bounds for constant-weight codes, IEEE Trans. IT 2000";

/// Embedded table, stored with `w <= q/2`.
pub fn cw_table() -> Vec<CwTableEntry> {
    use CwExactness::*;
    let e = |q, d, w, value, exactness, source| CwTableEntry {
        q,
        d,
        w,
        value,
        exactness,
        source,
    };
    vec![
        e(8, 4, 4, 14, Exact, AGRELL),
        e(16, 14, 8, 2, Exact, AGRELL),
        e(16, 6, 8, 120, LowerBound, AGRELL),
        e(7, 4, 3, 7, Exact, "Steiner triple system S(2,3,7), the Fano plane"),
        e(9, 4, 3, 12, Exact, "Steiner triple system S(2,3,9)"),
        e(13, 4, 3, 26, Exact, "Steiner triple system S(2,3,13)"),
        e(15, 4, 3, 35, Exact, "Steiner triple system S(2,3,15)"),
        e(
            16,
            6,
            4,
            20,
            Exact,
            "Steiner system S(2,4,16), the affine plane AG(2,4)",
        ),
        e(9, 4, 4, 18, Exact, AGRELL),
        e(10, 4, 4, 30, Exact, AGRELL),
        e(11, 4, 5, 66, Exact, "Steiner system S(4,5,11)"),
        e(12, 4, 6, 132, Exact, "Steiner system S(5,6,12)"),
        e(24, 8, 8, 759, Exact, "Steiner system S(5,8,24), the Witt design"),
    ]
}

/// Smallest even distance at least `d2`.
fn even_up(d2: u32) -> u32 {
    d2 + (d2 & 1)
}

fn check(q: u32, k: u32) -> Result<()> {
    if k > q {
        return Err(Error::invalid(format!("weight {k} exceeds length {q}")));
    }
    Ok(())
}

/// GV quotient `ceil(C(q,k) / sum_{i=0}^{D-2} C(k,i) C(q-k,i))` with `D`
/// the distance rounded up to even. For `D <= 2` the sum is the single
/// term 1 and the value is `C(q,k)`.
pub fn cw_gv(q: u32, d2: u32, k: u32) -> Result<BoundResult> {
    check(q, k)?;
    let d = even_up(d2);
    let top = d.saturating_sub(2).min(k) as u64;
    let denom: Count = (0..=top)
        .map(|i| binomial(k as u64, i) * binomial((q - k) as u64, i))
        .sum();
    Ok(BoundResult::size(
        Provenance::CwGv,
        Direction::Lower,
        ceil_div(&binomial(q as u64, k as u64), &denom),
        cw_inputs(q, d2, k),
    ))
}

fn cw_inputs(q: u32, d2: u32, k: u32) -> BoundInputs {
    BoundInputs {
        q: Some(q),
        d: Some(d2),
        k: Some(k),
        ..Default::default()
    }
}

/// Closed forms: `C(q,w)` for `D <= 2`, 1 when `D` exceeds `2 min(w, q-w)`,
/// and `floor(q / w')` for `D = 2 w'` with `w' = min(w, q-w)` (disjoint supports).
fn closed_form(q: u32, d: u32, w: u32) -> Option<(Count, &'static str)> {
    let m = w.min(q - w);
    if d <= 2 {
        Some((binomial(q as u64, w as u64), "every word of the weight class"))
    } else if d > 2 * m {
        Some((Count::one(), "a single word"))
    } else if d == 2 * m {
        Some((Count::from(q / m), "pairwise disjoint supports"))
    } else {
        None
    }
}

/// Largest of the table or closed-form value and the GV quotient, with the
/// winning source as provenance. Odd distances are rounded up to even,
/// since distances in a constant-weight class are even.
pub fn cw_lower(q: u32, d2: u32, k: u32) -> Result<BoundResult> {
    let gv = cw_gv(q, d2, k)?;
    let d = even_up(d2);
    let w = k.min(q - k);
    let known = closed_form(q, d, k).map(|(v, s)| (v, s.to_string(), true)).or_else(|| {
        cw_table().into_iter().find(|e| (e.q, e.d, e.w) == (q, d, w)).map(|e| {
            let tag = match e.exactness {
                CwExactness::Exact => "exact",
                CwExactness::LowerBound => "lower bound",
            };
            (
                Count::from(e.value),
                format!("{} ({tag})", e.source),
                e.exactness == CwExactness::Exact,
            )
        })
    });
    match known {
        Some((v, source, exact)) if &v >= gv.size_value().expect("size") => {
            let dir = if exact { Direction::Exact } else { Direction::Lower };
            Ok(BoundResult::size(Provenance::CwTable, dir, v, cw_inputs(q, d2, k)).with_note(source))
        }
        _ => Ok(gv),
    }
}

/// Levenshtein's conditions under which the GV quotient grows
/// exponentially in `q`: `4d <= q`, `k` inside
/// `(q/2)(1 -+ sqrt(1 - 4d/q))`, and `d <= k(1 - k/q)`.
pub fn levenshtein_significance(q: u32, d: u32, k: u32) -> bool {
    if q == 0 || 4 * d as u64 > q as u64 {
        return false;
    }
    let (qf, df, kf) = (q as f64, d as f64, k as f64);
    let root = (1.0 - 4.0 * df / qf).sqrt();
    let window = qf / 2.0 * (1.0 - root) <= kf && kf <= qf / 2.0 * (1.0 + root);
    window && df <= kf * (1.0 - kf / qf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn v(b: &BoundResult) -> u64 {
        b.size_value().unwrap().to_u64().unwrap()
    }

    /// Exhaustive `A_2(q, d, w)` by clique search over the weight class.
    fn brute(q: u32, d: u32, w: u32) -> u64 {
        use crate::clique::{max_clique, Graph};
        let words: Vec<u32> = (0..1u32 << q).filter(|x| x.count_ones() == w).collect();
        let g = Graph::from_predicate(words.len(), crate::Exec::Sequential, |a, b| {
            (words[a] ^ words[b]).count_ones() >= d
        });
        max_clique(&g, None, crate::Exec::Sequential).clique.len() as u64
    }

    #[test]
    fn cited_values() {
        let b = cw_lower(8, 4, 4).unwrap();
        assert_eq!((v(&b), b.provenance), (14, Provenance::CwTable));
        assert_eq!(v(&cw_lower(16, 14, 8).unwrap()), 2);
        let b = cw_lower(16, 6, 8).unwrap();
        assert!(v(&b) >= 120);
        assert_eq!(v(&cw_lower(16, 5, 8).unwrap()), v(&b));
        for k in 0..=16 {
            assert_eq!(
                cw_lower(16, 2, k).unwrap().size_value().unwrap(),
                &binomial(16, k as u64)
            );
        }
    }

    #[test]
    fn table_and_closed_forms_match_search() {
        for e in cw_table().iter().filter(|e| e.q <= 9) {
            assert_eq!(brute(e.q, e.d, e.w), e.value, "{e:?}");
        }
        for q in 2..=8 {
            for w in 0..=q {
                for d in 1..=q + 1 {
                    let b = cw_lower(q, d, w).unwrap();
                    let opt = brute(q, d, w);
                    assert!(v(&b) <= opt, "A2({q},{d},{w}) lower {} > {opt}", v(&b));
                    if b.direction == Direction::Exact {
                        assert_eq!(v(&b), opt, "A2({q},{d},{w})");
                    }
                    assert!(v(&b) >= v(&cw_gv(q, d, w).unwrap()));
                }
            }
        }
    }

    #[test]
    fn levenshtein_examples() {
        assert!(levenshtein_significance(16, 2, 8));
        assert!(!levenshtein_significance(16, 5, 8));
        assert!(!levenshtein_significance(16, 2, 1));
        assert!(!levenshtein_significance(7, 2, 3));
    }
}
