//! Maximum-clique search on dense bitset graphs.
//!
//! Branch and bound with greedy colouring bounds (the BBMC scheme): vertices
//! are renumbered by non-increasing degree, every node colours its candidate
//! set into independent classes and branches on the highest colours first.
//! Top-level branches run on the rayon pool and share the incumbent size.
//! When the node budget runs out, a seeded tabu swap local search with a
//! comparable step budget tries to improve the witness.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use rand::rngs::SmallRng;
use rand::{RngExt, SeedableRng};

use crate::Exec;

/// Undirected simple graph stored as adjacency bit rows.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        let stride = n.div_ceil(64).max(1);
        Graph {
            n,
            stride,
            rows: vec![0; n * stride],
        }
    }

    /// Builds the graph whose edges are the unordered pairs satisfying `adjacent`.
    pub fn from_predicate<F>(n: usize, exec: Exec, adjacent: F) -> Self
    where
        F: Fn(usize, usize) -> bool + Sync + Send,
    {
        let stride = n.div_ceil(64).max(1);
        let rows = exec.map_range(0..n, |u| {
            let mut row = vec![0u64; stride];
            for v in 0..n {
                if u != v && adjacent(u.min(v), u.max(v)) {
                    row[v / 64] |= 1 << (v % 64);
                }
            }
            row
        });
        Graph {
            n,
            stride,
            rows: rows.concat(),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.stride + v / 64] |= 1 << (v % 64);
        self.rows[v * self.stride + u / 64] |= 1 << (u % 64);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// True when every pair of `vertices` is adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    fn permuted(&self, order: &[usize]) -> Graph {
        let mut g = Graph::new(self.n);
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

/// Outcome of a clique search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueSearch {
    /// Largest clique found, as sorted vertex indices of the input graph.
    pub clique: Vec<usize>,
    /// True when the search ran to completion, so `clique` is maximum.
    pub optimal: bool,
    /// Proven upper bound on the clique number; equals `clique.len()` when optimal.
    pub upper_bound: usize,
    /// Search nodes expanded.
    pub nodes: u64,
}

/// Maximum clique of `g`.
pub fn max_clique(g: &Graph, node_budget: Option<u64>, exec: Exec) -> CliqueSearch {
    let all: Vec<usize> = (0..g.len()).collect();
    max_clique_by_orbits(g, &[all], false, node_budget, exec)
}

/// Maximum clique of `g`, exploiting a partition of the vertices into orbits
/// of a graph automorphism group.
///
/// With `rooted`, only cliques through the first vertex of each orbit are
/// searched, and vertices of earlier orbits are excluded from later roots.
/// This is exact whenever every orbit is a genuine automorphism orbit.
/// Without `rooted` the orbits are ignored.
pub fn max_clique_by_orbits(
    g: &Graph,
    orbits: &[Vec<usize>],
    rooted: bool,
    node_budget: Option<u64>,
    exec: Exec,
) -> CliqueSearch {
    let n = g.len();
    if n == 0 {
        return CliqueSearch {
            clique: vec![],
            optimal: true,
            upper_bound: 0,
            nodes: 0,
        };
    }
    let mut order: Vec<usize> = (0..n).collect();
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(degrees[v]), v));
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let h = g.permuted(&order);

    let initial = greedy_clique(&h);
    let shared = Shared {
        best_len: AtomicUsize::new(initial.len()),
        best: Mutex::new(initial),
        nodes: AtomicU64::new(0),
        budget: node_budget.unwrap_or(u64::MAX),
        aborted: AtomicBool::new(false),
    };

    let mut bound = 0;
    if rooted {
        let mut excluded = vec![0u64; h.stride];
        for orbit in orbits.iter().filter(|o| !o.is_empty()) {
            let root = position[orbit[0]];
            let mut cand: Vec<u64> = h.row(root).to_vec();
            for (c, e) in cand.iter_mut().zip(&excluded) {
                *c &= !e;
            }
            bound = bound.max(solve(&h, vec![root], cand, &shared, exec));
            for &v in orbit {
                let p = position[v];
                excluded[p / 64] |= 1 << (p % 64);
            }
        }
    } else {
        let mut all = vec![0u64; h.stride];
        for v in 0..n {
            all[v / 64] |= 1 << (v % 64);
        }
        bound = solve(&h, vec![], all, &shared, exec);
    }

    let mut best = shared.best.into_inner().expect("clique incumbent lock poisoned");
    let optimal = !shared.aborted.load(Ordering::Relaxed);
    if !optimal {
        let searched = local_search(&h, local_search_steps(node_budget.unwrap_or(0)));
        if searched.len() > best.len() {
            best = searched;
        }
    }
    let mut clique: Vec<usize> = best.iter().map(|&i| order[i]).collect();
    clique.sort_unstable();
    CliqueSearch {
        upper_bound: if optimal { clique.len() } else { bound.max(clique.len()) },
        clique,
        optimal,
        nodes: shared.nodes.load(Ordering::Relaxed),
    }
}

struct Shared {
    best_len: AtomicUsize,
    best: Mutex<Vec<usize>>,
    nodes: AtomicU64,
    budget: u64,
    aborted: AtomicBool,
}

impl Shared {
    fn offer(&self, clique: &[usize]) {
        let mut best = self.best.lock().expect("clique incumbent lock poisoned");
        if clique.len() > best.len() {
            *best = clique.to_vec();
            self.best_len.store(clique.len(), Ordering::Release);
        }
    }

    fn tick(&self) -> bool {
        if self.aborted.load(Ordering::Relaxed) {
            return false;
        }
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            self.aborted.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }
}

fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut clique: Vec<usize> = Vec::new();
    for v in 0..g.len() {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    clique
}

/// Local search steps spent after a branch and bound with `budget` nodes.
fn local_search_steps(budget: u64) -> usize {
    (budget / 4).clamp(1_000, 1_000_000) as usize
}

/// Tabu swap local search: add a vertex adjacent to the whole clique when
/// one exists, otherwise swap in a vertex missing exactly one clique member,
/// otherwise restart from a random vertex. Deterministic for a given graph.
fn local_search(g: &Graph, steps: usize) -> Vec<usize> {
    let n = g.len();
    let mut rng = SmallRng::seed_from_u64(0x5eed_c11c);
    let mut in_clique = vec![false; n];
    // Clique members each outside vertex is not adjacent to.
    let mut missing = vec![0usize; n];
    let mut tabu_until = vec![0usize; n];
    let mut clique: Vec<usize> = Vec::new();
    let mut best: Vec<usize> = Vec::new();
    let add = |v: usize, clique: &mut Vec<usize>, in_clique: &mut [bool], missing: &mut [usize]| {
        for (w, m) in missing.iter_mut().enumerate() {
            if w != v && !g.has_edge(v, w) {
                *m += 1;
            }
        }
        in_clique[v] = true;
        clique.push(v);
    };
    let remove = |u: usize, clique: &mut Vec<usize>, in_clique: &mut [bool], missing: &mut [usize]| {
        for (w, m) in missing.iter_mut().enumerate() {
            if w != u && !g.has_edge(u, w) {
                *m -= 1;
            }
        }
        in_clique[u] = false;
        clique.retain(|&x| x != u);
    };
    let mut pool = Vec::new();
    for step in 0..steps {
        pool.clear();
        pool.extend((0..n).filter(|&v| !in_clique[v] && missing[v] == 0));
        if !pool.is_empty() {
            let v = pool[rng.random_range(0..pool.len())];
            add(v, &mut clique, &mut in_clique, &mut missing);
            if clique.len() > best.len() {
                best.clone_from(&clique);
            }
            continue;
        }
        pool.extend((0..n).filter(|&v| !in_clique[v] && missing[v] == 1 && tabu_until[v] <= step));
        if !pool.is_empty() {
            let v = pool[rng.random_range(0..pool.len())];
            let u = *clique.iter().find(|&&u| !g.has_edge(u, v)).expect("one non-neighbour");
            remove(u, &mut clique, &mut in_clique, &mut missing);
            add(v, &mut clique, &mut in_clique, &mut missing);
            tabu_until[u] = step + 7;
            continue;
        }
        // Plateau exhausted: keep a random vertex's neighbourhood.
        let v = rng.random_range(0..n);
        for u in clique.clone() {
            if u != v && !g.has_edge(u, v) {
                remove(u, &mut clique, &mut in_clique, &mut missing);
            }
        }
        if !in_clique[v] {
            add(v, &mut clique, &mut in_clique, &mut missing);
        }
    }
    best.sort_unstable();
    best
}

/// Colours `p` greedily; returns vertices whose colour is at least `kmin`,
/// in non-decreasing colour order, with their colours.
fn colour(g: &Graph, p: &[u64], kmin: usize, out: &mut Vec<(usize, usize)>) {
    out.clear();
    let mut uncoloured = p.to_vec();
    let mut q = vec![0u64; p.len()];
    let mut k = 0;
    while uncoloured.iter().any(|&w| w != 0) {
        k += 1;
        q.copy_from_slice(&uncoloured);
        for wi in 0..q.len() {
            while q[wi] != 0 {
                let v = wi * 64 + q[wi].trailing_zeros() as usize;
                q[wi] &= q[wi] - 1;
                uncoloured[wi] &= !(1 << (v % 64));
                for (qw, a) in q.iter_mut().zip(g.row(v)).skip(wi) {
                    *qw &= !a;
                }
                if k >= kmin {
                    out.push((v, k));
                }
            }
        }
    }
}

/// Searches cliques extending `base` inside `p`; returns an upper bound on
/// the largest such clique that holds even if the search was aborted.
fn solve(g: &Graph, base: Vec<usize>, p: Vec<u64>, shared: &Shared, exec: Exec) -> usize {
    if base.len() > shared.best_len.load(Ordering::Acquire) {
        shared.offer(&base);
    }
    if p.iter().all(|&w| w == 0) {
        return base.len();
    }
    let mut list = Vec::new();
    colour(g, &p, 1, &mut list);
    let root_bound = base.len() + list.last().map_or(0, |&(_, k)| k);
    if root_bound <= shared.best_len.load(Ordering::Acquire) {
        return root_bound;
    }
    let branches: Vec<(usize, usize, Vec<u64>)> = (0..list.len())
        .rev()
        .map(|j| {
            let (v, k) = list[j];
            let mut cand = p.clone();
            for &(u, _) in &list[j..] {
                cand[u / 64] &= !(1 << (u % 64));
            }
            for (c, a) in cand.iter_mut().zip(g.row(v)) {
                *c &= a;
            }
            (v, k, cand)
        })
        .collect();
    let bounds = exec.map_slice(&branches, |(v, k, cand)| {
        let bound = base.len() + k;
        if bound <= shared.best_len.load(Ordering::Acquire) {
            return bound;
        }
        let mut clique = base.clone();
        clique.push(*v);
        let finished = expand(g, &mut clique, cand.clone(), shared);
        if finished {
            0
        } else {
            bound
        }
    });
    let unfinished = bounds.into_iter().max().unwrap_or(0);
    unfinished.max(shared.best_len.load(Ordering::Acquire))
}

/// Depth-first branch and bound; returns false if the node budget ran out.
fn expand(g: &Graph, clique: &mut Vec<usize>, mut p: Vec<u64>, shared: &Shared) -> bool {
    if !shared.tick() {
        return false;
    }
    if p.iter().all(|&w| w == 0) {
        if clique.len() > shared.best_len.load(Ordering::Acquire) {
            shared.offer(clique);
        }
        return true;
    }
    let best = shared.best_len.load(Ordering::Acquire);
    let kmin = (best + 1).saturating_sub(clique.len()).max(1);
    let mut list = Vec::new();
    colour(g, &p, kmin, &mut list);
    for &(v, k) in list.iter().rev() {
        if clique.len() + k <= shared.best_len.load(Ordering::Acquire) {
            return true;
        }
        let mut cand = p.clone();
        for (c, a) in cand.iter_mut().zip(g.row(v)) {
            *c &= a;
        }
        clique.push(v);
        let finished = expand(g, clique, cand, shared);
        clique.pop();
        if !finished {
            return false;
        }
        p[v / 64] &= !(1 << (v % 64));
    }
    true
}
