use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{count_compositions, dplus, Composition, CompositionFamily, Compositions, FamilyKind, Order, WeightFilter};
use crate::clique::{max_clique_by_orbits, Graph};
use crate::{Config, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AnticodeStrategy {
    /// Single pass in descending colexicographic order, keeping every
    /// composition at distance at least `d` from all kept ones.
    Greedy,
    /// Maximum clique of the `d+ >= d` graph on `N(r)`.
    Exhaustive,
}

/// Family of weight-`r` compositions of `n` into `q` parts with pairwise `d+ >= d`.
pub fn search_anticode(
    n: u32,
    q: usize,
    r: u32,
    d: u32,
    strategy: AnticodeStrategy,
    cfg: &Config,
) -> Result<CompositionFamily> {
    if q == 0 || d == 0 {
        return Err(Error::invalid("anticode search needs q >= 1 and d >= 1"));
    }
    if (r as u64) * (q as u64) < n as u64 || r > n {
        return Err(Error::invalid(format!(
            "symbol weight {r} outside [ceil(n/q), n] for n={n}, q={q}"
        )));
    }
    let size = count_compositions(n, q, WeightFilter::Exact(r));
    let kind = FamilyKind::Anticode { r, d };
    match strategy {
        AnticodeStrategy::Greedy => {
            cfg.check_enumeration("weight-r composition family", &size)?;
            let mut kept: Vec<Composition> = Vec::new();
            for c in Compositions::new(n, q, WeightFilter::Exact(r), Order::Descending)? {
                if kept.iter().all(|k| dplus(k, &c).map_or(false, |x| x >= d)) {
                    kept.push(c);
                }
            }
            Ok(CompositionFamily {
                n,
                q,
                kind,
                members: kept,
            })
        }
        AnticodeStrategy::Exhaustive => {
            let vertices = cfg.check_enumeration("weight-r composition family", &size)?;
            if vertices > cfg.clique_vertex_cap as u64 {
                return Err(Error::cap(
                    "anticode clique graph",
                    vertices,
                    cfg.clique_vertex_cap as u64,
                ));
            }
            let members: Vec<Composition> =
                Compositions::new(n, q, WeightFilter::Exact(r), Order::Ascending)?.collect();
            let g = Graph::from_predicate(members.len(), cfg.exec, |a, b| {
                dplus(&members[a], &members[b]).map_or(false, |x| x >= d)
            });
            // Symbol permutations preserve d+ and the weight; orbits are sorted shapes.
            let mut orbits: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
            for (i, m) in members.iter().enumerate() {
                orbits.entry(m.sorted_desc()).or_default().push(i);
            }
            let orbits: Vec<Vec<usize>> = orbits.into_values().collect();
            let res = max_clique_by_orbits(&g, &orbits, true, cfg.clique_node_budget, cfg.exec);
            if !res.optimal {
                return Err(Error::cap(
                    "anticode clique search nodes",
                    res.nodes,
                    cfg.clique_node_budget.unwrap_or(u64::MAX),
                ));
            }
            let chosen = res.clique.into_iter().map(|i| members[i].clone()).collect();
            Ok(CompositionFamily {
                n,
                q,
                kind,
                members: chosen,
            })
        }
    }
}
