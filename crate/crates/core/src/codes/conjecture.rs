//! Exploratory search: for an irreducible `g` of degree `k-1-r`, is there an
//! `r`-subset of nonzero roots making `(x - a_1)...(x - a_r) g(x)` have
//! symbol weight exactly `r`?

use serde::Serialize;

use super::symbol_weight;
use crate::arith::binomial;
use crate::field::{enumerate_monic_irreducibles, Fe, Field, Poly};
use crate::{Config, Error, Result};

/// Outcome for one `g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureEntry {
    /// Coefficient labels of `g`, constant term first.
    pub g: Poly,
    pub success: bool,
    /// First root subset in lexicographic order that works, as labels.
    pub witness: Option<Vec<u32>>,
}

/// Outcome for one `(q, k, r)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub schema: u32,
    pub q: u32,
    pub k: usize,
    pub r: usize,
    /// Degree `k-1-r` of the factors `g`.
    pub degree: usize,
    /// True when `(k-1)/2 <= r` and `g` is root-free (degree 0 or at least 2),
    /// the range in which no counterexample is expected. A linear `g` adds a
    /// root of its own and falls outside the root-free family.
    pub in_conjectured_range: bool,
    pub checked: usize,
    pub failures: usize,
    pub entries: Vec<ConjectureEntry>,
}

impl ConjectureReport {
    pub fn counterexamples(&self) -> impl Iterator<Item = &ConjectureEntry> {
        self.entries.iter().filter(|e| !e.success)
    }
}

/// Checks every monic irreducible `g` of degree `k-1-r` over `field`
/// (the constant 1 when the degree is 0). Needs `1 <= r < k < q-1`.
///
/// Root subsets are scanned lexicographically with early exit; the scan
/// over `g` runs in parallel. Refuses when `q^{deg g}` or `C(q-1, r)`
/// exceeds the enumeration cap.
pub fn conjecture_check(field: &Field, k: usize, r: usize, cfg: &Config) -> Result<ConjectureReport> {
    let n = field.q() as usize - 1;
    if !(1 <= r && r < k && k < n) {
        return Err(Error::invalid(format!("need 1 <= r < k < n; got r={r}, k={k}, n={n}")));
    }
    let degree = k - 1 - r;
    cfg.check_enumeration("root subset scan", &binomial(n as u64, r as u64))?;
    let gs: Vec<Poly> = if degree == 0 {
        vec![Poly::constant(field.one())]
    } else {
        enumerate_monic_irreducibles(field, degree, cfg)?.collect()
    };
    let points: Vec<Fe> = field.nonzero().collect();
    let entries = cfg.exec.map_slice(&gs, |g| {
        let base: Vec<Fe> = points.iter().map(|&x| g.eval(x, field)).collect();
        let witness = search_roots(field, &points, &base, r);
        ConjectureEntry {
            g: g.clone(),
            success: witness.is_some(),
            witness,
        }
    });
    let failures = entries.iter().filter(|e| !e.success).count();
    Ok(ConjectureReport {
        schema: 1,
        q: field.q(),
        k,
        r,
        degree,
        in_conjectured_range: 2 * r + 1 >= k && degree != 1,
        checked: entries.len(),
        failures,
        entries,
    })
}

/// Depth-first lexicographic scan of root subsets; `values` holds the
/// partial product at every evaluation point.
fn search_roots(field: &Field, points: &[Fe], base: &[Fe], r: usize) -> Option<Vec<u32>> {
    fn dfs(
        field: &Field,
        points: &[Fe],
        stack: &mut Vec<Vec<Fe>>,
        chosen: &mut Vec<usize>,
        from: usize,
        r: usize,
    ) -> bool {
        let depth = chosen.len();
        if depth == r {
            let word: Vec<u32> = stack[depth].iter().map(|v| v.label()).collect();
            return symbol_weight(&word) == r as u32;
        }
        for i in from..=points.len() - (r - depth) {
            let a = points[i];
            let next: Vec<Fe> = stack[depth]
                .iter()
                .zip(points)
                .map(|(&v, &x)| field.mul(v, field.sub(x, a)))
                .collect();
            stack.push(next);
            chosen.push(i);
            if dfs(field, points, stack, chosen, i + 1, r) {
                return true;
            }
            chosen.pop();
            stack.pop();
        }
        false
    }
    let mut stack = vec![base.to_vec()];
    let mut chosen = Vec::with_capacity(r);
    dfs(field, points, &mut stack, &mut chosen, 0, r).then(|| chosen.iter().map(|&i| points[i].label()).collect())
}

/// Runs [`conjecture_check`] for every field of order `4..=max_q` and every
/// `(k, r)` with `(k-1)/2 <= r < k < q-1`, skipping pairs whose factor
/// degree `k-1-r` exceeds `max_degree` when given.
pub fn conjecture_sweep(max_q: u32, max_degree: Option<usize>, cfg: &Config) -> Result<Vec<ConjectureReport>> {
    let mut out = Vec::new();
    for q in 4..=max_q {
        let Ok(field) = Field::from_order(q) else { continue };
        let n = q as usize - 1;
        for k in 2..n {
            for r in (k - 1).div_ceil(2).max(1)..k {
                if max_degree.is_some_and(|m| k - 1 - r > m) {
                    continue;
                }
                out.push(conjecture_check(&field, k, r, cfg)?);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf7_cubic_fails_for_r_one() {
        let cfg = Config::default();
        let f = Field::from_order(7).unwrap();
        let rep = conjecture_check(&f, 5, 1, &cfg).unwrap();
        assert!(!rep.in_conjectured_range);
        assert_eq!(rep.checked, 112);
        let g = Poly::from_labels(&f, &[2, 0, 0, 1]).unwrap();
        let entry = rep.entries.iter().find(|e| e.g == g).unwrap();
        assert!(!entry.success);
        for a in f.nonzero() {
            let word = Poly::linear_root(&f, a).mul(&g, &f).eval_all(&f);
            assert!(symbol_weight(&word) > 1);
        }
    }

    #[test]
    fn witnesses_are_genuine() {
        let cfg = Config::default();
        let f = Field::from_order(8).unwrap();
        let rep = conjecture_check(&f, 5, 2, &cfg).unwrap();
        for e in rep.entries.iter().filter(|e| e.success) {
            let mut p = e.g.clone();
            for &a in e.witness.as_ref().unwrap() {
                p = p.mul(&Poly::linear_root(&f, f.elem(a).unwrap()), &f);
            }
            assert_eq!(symbol_weight(&p.eval_all(&f)), 2);
        }
    }

    #[test]
    fn degree_zero_is_immediate_above_half() {
        let cfg = Config::default();
        let f = Field::from_order(7).unwrap();
        let rep = conjecture_check(&f, 5, 4, &cfg).unwrap();
        assert_eq!(rep.degree, 0);
        assert_eq!((rep.checked, rep.failures), (1, 0));
        assert_eq!(rep.entries[0].witness, Some(vec![1, 2, 3, 4]));
    }

    #[test]
    fn small_sweep_has_no_counterexample() {
        let cfg = Config::default();
        let reports = conjecture_sweep(9, None, &cfg).unwrap();
        assert!(!reports.is_empty());
        assert!(reports
            .iter()
            .filter(|r| r.in_conjectured_range)
            .all(|r| r.failures == 0));
        // Linear g with r = 1: a quadratic is never injective on GF(q)* for odd q.
        let linear = reports.iter().find(|r| (r.q, r.k, r.r) == (7, 3, 1)).unwrap();
        assert!(!linear.in_conjectured_range);
        assert_eq!(linear.failures, 7);
    }

    #[test]
    fn hypothesis_checked() {
        let f = Field::from_order(7).unwrap();
        let cfg = Config::default();
        assert!(conjecture_check(&f, 6, 2, &cfg).is_err());
        assert!(conjecture_check(&f, 3, 3, &cfg).is_err());
        assert!(conjecture_check(&f, 3, 0, &cfg).is_err());
    }
}
