//! Reed-Solomon codes `RS[n = q-1, k]` evaluated on the nonzero field
//! elements, their cosets, and constant symbol-weight subcodes.

use num_bigint::{BigInt, Sign};
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::{symbol_weight, Code, WeightDistribution};
use crate::arith::{binomial, pow};
use crate::field::{products_of_irreducibles_min_deg2, Fe, Field, Poly};
use crate::{Config, Count, Error, Result};

/// `RS[q-1, k]` over a field.
#[derive(Clone, Debug)]
pub struct RsCode {
    field: Field,
    k: usize,
    /// `powers[j][x]` is the label of `x^j` for nonzero `x`, `j = 0..n`.
    powers: Vec<Vec<u8>>,
}

impl RsCode {
    pub fn new(field: &Field, k: usize) -> Result<Self> {
        let n = field.q() as usize - 1;
        if k == 0 || k > n {
            return Err(Error::invalid(format!("RS dimension {k} outside [1, {n}]")));
        }
        let powers = (0..=n)
            .map(|j| field.nonzero().map(|x| field.pow(x, j as u64).label() as u8).collect())
            .collect();
        Ok(RsCode {
            field: field.clone(),
            k,
            powers,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.field.q() as usize - 1
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Designed (and true) minimum distance `n - k + 1`.
    pub fn d(&self) -> usize {
        self.n() - self.k + 1
    }

    pub fn size(&self) -> Count {
        pow(self.field.q() as u64, self.k as u64)
    }

    /// Evaluation of a message polynomial of degree below `k`.
    pub fn encode(&self, f: &Poly) -> Result<Vec<u32>> {
        if f.degree().is_some_and(|d| d >= self.k) {
            return Err(Error::invalid(format!("message degree exceeds k-1 = {}", self.k - 1)));
        }
        Ok(f.eval_all(&self.field))
    }

    /// Codeword of message number `idx`: base-`q` digits of `idx` are the
    /// coefficients `f_0, f_1, ...` with `f_0` least significant.
    pub fn codeword(&self, idx: u64, out: &mut [u32]) {
        let q = self.field.q() as u64;
        out.iter_mut().for_each(|c| *c = 0);
        let mut x = idx;
        for j in 0..self.k {
            let fj = Fe::from_label_unchecked((x % q) as u32);
            x /= q;
            if fj.is_zero() {
                continue;
            }
            let row = self.field.mul_row(fj);
            for (c, &p) in out.iter_mut().zip(&self.powers[j]) {
                *c = self.field.add_row(Fe::from_label_unchecked(*c))[row[p as usize] as usize] as u32;
            }
        }
    }

    /// Syndrome `s_j = sum_x c_x x^j`, `j = 1..=n-k`; zero exactly on codewords.
    pub fn syndrome(&self, word: &[u32]) -> Vec<u32> {
        (1..=self.n() - self.k)
            .map(|j| {
                word.iter().zip(&self.powers[j]).fold(0u32, |acc, (&c, &p)| {
                    let t = self.field.mul_row(Fe::from_label_unchecked(c))[p as usize];
                    self.field.add_row(Fe::from_label_unchecked(acc))[t as usize] as u32
                })
            })
            .collect()
    }

    pub fn contains(&self, word: &[u32]) -> bool {
        word.len() == self.n() && self.syndrome(word).iter().all(|&s| s == 0)
    }

    /// Interpolating polynomial of degree below `n` through the word.
    pub fn interpolate(&self, word: &[u32]) -> Result<Poly> {
        let f = &self.field;
        if word.len() != self.n() {
            return Err(Error::invalid("word length differs from n"));
        }
        let points: Vec<Fe> = f.nonzero().collect();
        let mut acc = Poly::zero();
        for (i, &xi) in points.iter().enumerate() {
            let yi = f.elem(word[i])?;
            if yi.is_zero() {
                continue;
            }
            let mut basis = Poly::constant(f.one());
            let mut denom = f.one();
            for (j, &xj) in points.iter().enumerate() {
                if i != j {
                    basis = basis.mul(&Poly::linear_root(f, xj), f);
                    denom = f.mul(denom, f.sub(xi, xj));
                }
            }
            acc = acc.add(&basis.scale(f.div(yi, denom)?, f), f);
        }
        Ok(acc)
    }

    /// Message polynomial of a codeword, or `None` if the word is not in the code.
    pub fn decode_message(&self, word: &[u32]) -> Result<Option<Poly>> {
        let f = self.interpolate(word)?;
        Ok(f.degree().map_or(true, |d| d < self.k).then_some(f))
    }

    fn check_scan(&self, cfg: &Config) -> Result<u64> {
        cfg.check_enumeration("Reed-Solomon codeword scan", &self.size())
    }

    /// Every codeword as a materialised code; refuses beyond the materialisation cap.
    pub fn materialize(&self, cfg: &Config) -> Result<Code> {
        let total = self.size();
        if total > Count::from(cfg.materialize_cap) {
            return Err(Error::cap("Reed-Solomon code", total, cfg.materialize_cap));
        }
        let total = total.to_u64().expect("below the cap");
        let n = self.n();
        let words = cfg.exec.map_range(0..total as usize, |i| {
            let mut w = vec![0u32; n];
            self.codeword(i as u64, &mut w);
            w
        });
        Code::new(n, self.field.q(), words)
    }

    /// Folds over all codewords, possibly in parallel.
    pub fn fold_codewords<T, I, F, R>(&self, cfg: &Config, identity: I, fold: F, reduce: R) -> Result<T>
    where
        T: Send,
        I: Fn() -> T + Sync + Send,
        F: Fn(T, &[u32]) -> T + Sync + Send,
        R: Fn(T, T) -> T + Sync + Send,
    {
        let total = self.check_scan(cfg)?;
        let n = self.n();
        Ok(cfg
            .exec
            .fold_range(
                0..total,
                || (identity(), vec![0u32; n]),
                |(acc, mut buf), idx| {
                    self.codeword(idx, &mut buf);
                    (fold(acc, &buf), buf)
                },
                |(a, buf), (b, _)| (reduce(a, b), buf),
            )
            .0)
    }

    /// Exhaustive Hamming weight distribution.
    pub fn weight_distribution(&self, cfg: &Config) -> Result<WeightDistribution> {
        let n = self.n();
        let hist = self.fold_codewords(
            cfg,
            || vec![0u64; n + 1],
            |mut h, w| {
                h[w.iter().filter(|&&c| c != 0).count()] += 1;
                h
            },
            add_hist,
        )?;
        Ok(WeightDistribution {
            b: hist.into_iter().map(Count::from).collect(),
        })
    }
}

fn add_hist(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Histogram of symbol weights over all codewords of `RS[q-1, k]`:
/// entry `r` is `|S(r)|`. Constant codewords land in entry `n`.
pub fn enumerate_s_r(field: &Field, k: usize, cfg: &Config) -> Result<Vec<Count>> {
    let rs = RsCode::new(field, k)?;
    let n = rs.n();
    let hist = rs.fold_codewords(
        cfg,
        || vec![0u64; n + 1],
        |mut h, w| {
            h[symbol_weight(w) as usize] += 1;
            h
        },
        add_hist,
    )?;
    Ok(hist.into_iter().map(Count::from).collect())
}

/// Weight distribution of an `[n, k]` MDS code over `GF(q)`:
/// `B_0 = 1` and, for `w >= d = n-k+1`,
/// `B_w = C(n,w) sum_{j=0}^{w-d} (-1)^j C(w,j) (q^{w-d+1-j} - 1)`.
///
/// Fails if the expression turns negative (no such MDS code exists).
pub fn mds_weight_distribution(n: usize, k: usize, q: u64) -> Result<WeightDistribution> {
    if k == 0 || k > n {
        return Err(Error::invalid(format!("MDS dimension {k} outside [1, {n}]")));
    }
    let d = n - k + 1;
    let mut b = vec![Count::zero(); n + 1];
    b[0] = Count::from(1u32);
    for w in d..=n {
        let mut s = BigInt::zero();
        for j in 0..=w - d {
            let term = BigInt::from_biguint(Sign::Plus, binomial(w as u64, j as u64))
                * (BigInt::from_biguint(Sign::Plus, pow(q, (w - d + 1 - j) as u64)) - 1);
            if j % 2 == 0 {
                s += term;
            } else {
                s -= term;
            }
        }
        let v = BigInt::from_biguint(Sign::Plus, binomial(n as u64, w as u64)) * s;
        b[w] = v.to_biguint().ok_or_else(|| {
            Error::NotApplicable(format!("no [{n},{k}] MDS code over GF({q}): B_{w} would be negative"))
        })?;
    }
    Ok(WeightDistribution { b })
}

/// `C(n, n-r) (q^{k-r} - 1)`, the leading term bounding `B_{n-r}`; zero when `r >= k`.
pub fn mds_weight_upper(n: usize, k: usize, q: u64, r: usize) -> Count {
    if r >= k || r > n {
        return Count::zero();
    }
    binomial(n as u64, (n - r) as u64) * (pow(q, (k - r) as u64) - 1u32)
}

/// `q (q-1) B_{n-r}`, bounding the number of codewords of symbol weight `r`.
pub fn symbol_weight_class_bound(dist: &WeightDistribution, n: usize, q: u64, r: usize) -> Count {
    if r > n {
        return Count::zero();
    }
    dist.get(n - r) * (q * (q - 1))
}

/// Coset of `RS[q-1,k]` meeting `SW(n,q,r)` the most.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetReport {
    /// Lexicographically first word of the chosen coset.
    pub representative: Vec<u32>,
    /// `|coset ∩ SW(n,q,r)|`.
    #[serde(serialize_with = "crate::arith::ser_count")]
    pub count: Count,
    /// Number of cosets, `q^{n-k}`.
    #[serde(serialize_with = "crate::arith::ser_count")]
    pub cosets: Count,
    /// `|SW(n,q,r)|`, the sum of the intersection sizes over all cosets.
    #[serde(serialize_with = "crate::arith::ser_count")]
    pub total: Count,
}

/// Scans every word of `Z_q^n`, grouping by syndrome, and returns the coset
/// with the most words of symbol weight exactly `r` (first by syndrome order on ties).
pub fn best_coset_intersection(field: &Field, k: usize, r: u32, cfg: &Config) -> Result<CosetReport> {
    let rs = RsCode::new(field, k)?;
    let (n, q) = (rs.n(), field.q() as u64);
    let words = cfg.check_enumeration("Hamming space", &pow(q, n as u64))?;
    let cosets = q.pow((n - k) as u32) as usize;
    let syndrome_index = |w: &[u32]| {
        rs.syndrome(w)
            .iter()
            .fold(0usize, |acc, &s| acc * q as usize + s as usize)
    };
    let decode = |mut idx: u64, out: &mut [u32]| {
        for c in out.iter_mut().rev() {
            *c = (idx % q) as u32;
            idx /= q;
        }
    };
    let (hist, first) = cfg
        .exec
        .fold_range(
            0..words,
            || (vec![0u64; cosets], vec![u64::MAX; cosets], vec![0u32; n]),
            |(mut h, mut first, mut buf), idx| {
                decode(idx, &mut buf);
                let s = syndrome_index(&buf);
                first[s] = first[s].min(idx);
                if symbol_weight(&buf) == r {
                    h[s] += 1;
                }
                (h, first, buf)
            },
            |(mut h, mut f, buf), (h2, f2, _)| {
                for (x, y) in h.iter_mut().zip(h2) {
                    *x += y;
                }
                for (x, y) in f.iter_mut().zip(f2) {
                    *x = (*x).min(y);
                }
                (h, f, buf)
            },
        )
        .pipe(|(h, f, _)| (h, f));
    let best = (0..cosets)
        .max_by_key(|&s| (hist[s], std::cmp::Reverse(s)))
        .expect("at least one coset");
    let mut representative = vec![0u32; n];
    decode(first[best], &mut representative);
    Ok(CosetReport {
        representative,
        count: Count::from(hist[best]),
        cosets: Count::from(cosets),
        total: hist.iter().map(|&c| Count::from(c)).sum(),
    })
}

trait Pipe: Sized {
    fn pipe<T>(self, f: impl FnOnce(Self) -> T) -> T {
        f(self)
    }
}

impl<T> Pipe for T {}

/// Constant symbol-weight subcode of `RS[q-1, k]` from polynomials
/// `beta (x - a_1) ... (x - a_r) g(x)` with distinct nonzero roots `a_i` and
/// a root-free monic `g` of degree `k-1-r`.
///
/// For `k-1 >= r >= n/2` each such word vanishes exactly at the `a_i`, and no
/// nonzero value can occur more than `n - r <= r` times, so its symbol weight is `r`.
#[derive(Clone, Debug)]
pub struct RsCswSubcode {
    rs: RsCode,
    r: usize,
    /// Root-free factors with their values at the evaluation points.
    factors: Vec<(Poly, Vec<u8>)>,
    subsets: Vec<Vec<usize>>,
}

/// Result of streaming and checking every word of an [`RsCswSubcode`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CswAudit {
    pub q: u32,
    pub k: usize,
    pub r: usize,
    #[serde(serialize_with = "crate::arith::ser_count")]
    pub emitted: Count,
    /// Number of root-free monic `g` of degree `k-1-r`.
    #[serde(serialize_with = "crate::arith::ser_count")]
    pub factors: Count,
    /// Words whose symbol weight differs from `r`.
    pub weight_failures: u64,
    /// Words failing the parity checks of the Reed-Solomon code.
    pub membership_failures: u64,
}

impl CswAudit {
    pub fn passed(&self) -> bool {
        self.weight_failures == 0 && self.membership_failures == 0 && self.emitted >= self.factors
    }
}

impl RsCswSubcode {
    pub fn new(field: &Field, k: usize, r: usize, cfg: &Config) -> Result<Self> {
        let rs = RsCode::new(field, k)?;
        let n = rs.n();
        if r == 0 || r + 1 > k || 2 * r < n {
            return Err(Error::invalid(format!(
                "construction needs k-1 >= r >= n/2; got n={n}, k={k}, r={r}"
            )));
        }
        let factors = products_of_irreducibles_min_deg2(field, k - 1 - r, cfg)?
            .map(|g| {
                let vals = field.nonzero().map(|x| g.eval(x, field).label() as u8).collect();
                (g, vals)
            })
            .collect();
        let subsets = combinations(n, r);
        Ok(RsCswSubcode {
            rs,
            r,
            factors,
            subsets,
        })
    }

    pub fn code(&self) -> &RsCode {
        &self.rs
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of words the stream emits: `C(n, r) (q-1) #g`.
    pub fn len(&self) -> Count {
        binomial(self.rs.n() as u64, self.r as u64) * (self.rs.field.q() as u64 - 1) * self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    /// Values of `(x - a_1)...(x - a_r) g(x)` for subset `s` and factor `gi`.
    fn base_word(&self, gi: usize, s: usize, out: &mut [u8]) {
        let f = &self.rs.field;
        let gvals = &self.factors[gi].1;
        for (xi, x) in f.nonzero().enumerate() {
            let mut v = Fe::from_label_unchecked(gvals[xi] as u32);
            for &a in &self.subsets[s] {
                v = f.mul(v, f.sub(x, Fe::from_label_unchecked(a as u32 + 1)));
            }
            out[xi] = v.label() as u8;
        }
    }

    /// Streams every word in order: factor `g`, then root subset
    /// (lexicographic), then `beta` (canonical). The callback sees
    /// `(beta, roots, g, word)`.
    pub fn for_each(&self, mut visit: impl FnMut(Fe, &[u32], &Poly, &[u32])) {
        let f = &self.rs.field;
        let n = self.rs.n();
        let mut base = vec![0u8; n];
        let mut word = vec![0u32; n];
        for gi in 0..self.factors.len() {
            for s in 0..self.subsets.len() {
                self.base_word(gi, s, &mut base);
                let roots: Vec<u32> = self.subsets[s].iter().map(|&a| a as u32 + 1).collect();
                for beta in f.nonzero() {
                    let row = f.mul_row(beta);
                    for (w, &b) in word.iter_mut().zip(&base) {
                        *w = row[b as usize] as u32;
                    }
                    visit(beta, &roots, &self.factors[gi].0, &word);
                }
            }
        }
    }

    /// Materialises the subcode; refuses beyond the materialisation cap.
    pub fn materialize(&self, cfg: &Config) -> Result<Code> {
        let size = self.len();
        if size > Count::from(cfg.materialize_cap) {
            return Err(Error::cap("constant symbol-weight subcode", size, cfg.materialize_cap));
        }
        let mut words = Vec::new();
        self.for_each(|_, _, _, w| words.push(w.to_vec()));
        Code::new(self.rs.n(), self.rs.field.q(), words)
    }

    /// Checks every streamed word for symbol weight `r` and code membership,
    /// in parallel over `(g, roots)` pairs.
    pub fn audit(&self, cfg: &Config) -> CswAudit {
        let f = &self.rs.field;
        let n = self.rs.n();
        let r = self.r as u32;
        let pairs = (self.factors.len() * self.subsets.len()) as u64;
        let (emitted, weight_failures, membership_failures) = cfg.exec.fold_range(
            0..pairs,
            || (0u64, 0u64, 0u64),
            |(mut e, mut wf, mut mf), idx| {
                let (gi, s) = ((idx as usize) / self.subsets.len(), (idx as usize) % self.subsets.len());
                let mut base = [0u8; 64];
                self.base_word(gi, s, &mut base[..n]);
                let mut word = [0u32; 64];
                for beta in f.nonzero() {
                    let row = f.mul_row(beta);
                    for (w, &b) in word[..n].iter_mut().zip(&base[..n]) {
                        *w = row[b as usize] as u32;
                    }
                    e += 1;
                    if symbol_weight(&word[..n]) != r {
                        wf += 1;
                    }
                    if !self.rs.contains(&word[..n]) {
                        mf += 1;
                    }
                }
                (e, wf, mf)
            },
            |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2),
        );
        CswAudit {
            q: f.q(),
            k: self.rs.k,
            r: self.r,
            emitted: Count::from(emitted),
            factors: Count::from(self.factors.len()),
            weight_failures,
            membership_failures,
        }
    }
}

/// All `r`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if r > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..r).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..r).rev().find(|&i| cur[i] < n - r + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..r {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn gf(q: u32) -> Field {
        Field::from_order(q).unwrap()
    }

    #[test]
    fn rs_6_3_over_gf7() {
        let cfg = Config::default();
        let rs = RsCode::new(&gf(7), 3).unwrap();
        let code = rs.materialize(&cfg).unwrap();
        assert_eq!(code.len(), 343);
        assert_eq!(code.min_distance().unwrap(), 4);
        for w in code.words() {
            let sw = w.symbol_weight();
            assert!(sw == 6 || sw <= 2);
            assert!(rs.contains(w.symbols()));
        }
        let dist = rs.weight_distribution(&cfg).unwrap();
        assert_eq!(dist.get(4), Count::from(90u32));
        assert_eq!(dist, mds_weight_distribution(6, 3, 7).unwrap());
    }

    #[test]
    fn k_equal_one_is_the_repetition_code() {
        let cfg = Config::default();
        let code = RsCode::new(&gf(5), 1).unwrap().materialize(&cfg).unwrap();
        assert_eq!(code.len(), 5);
        assert_eq!(code.min_distance().unwrap(), 4);
    }

    #[test]
    fn syndromes_detect_non_codewords() {
        let rs = RsCode::new(&gf(7), 3).unwrap();
        let mut w = vec![0u32; 6];
        rs.codeword(123, &mut w);
        assert!(rs.contains(&w));
        let msg = rs.decode_message(&w).unwrap().unwrap();
        assert_eq!(rs.encode(&msg).unwrap(), w);
        w[2] = (w[2] + 1) % 7;
        assert!(!rs.contains(&w));
        assert!(rs.decode_message(&w).unwrap().is_none());
    }

    #[test]
    fn mds_distribution_matches_scans() {
        let cfg = Config::default();
        for q in [2, 3, 4, 5, 7, 8] {
            let f = gf(q);
            for k in 1..q as usize {
                let rs = RsCode::new(&f, k).unwrap();
                let scanned = rs.weight_distribution(&cfg).unwrap();
                let formula = mds_weight_distribution(q as usize - 1, k, q as u64).unwrap();
                assert_eq!(scanned, formula, "q={q} k={k}");
                assert_eq!(formula.total(), rs.size());
            }
        }
        assert!(mds_weight_distribution(10, 3, 2).is_err());
    }

    #[test]
    fn symbol_weight_classes_on_gf7() {
        let cfg = Config::default();
        let f = gf(7);
        let s = enumerate_s_r(&f, 3, &cfg).unwrap();
        let dist = mds_weight_distribution(6, 3, 7).unwrap();
        for r in 1..=6 {
            assert!(s[r] <= symbol_weight_class_bound(&dist, 6, 7, r), "r={r}");
        }
        let total: Count = s.iter().sum();
        assert_eq!(total, Count::from(343u32));
        assert_eq!(s[6], Count::from(7u32));
        for r in 0..3 {
            assert!(dist.get(6 - r) <= mds_weight_upper(6, 3, 7, r));
        }
    }

    #[test]
    fn coset_scan() {
        let cfg = Config::default();
        let rep = best_coset_intersection(&gf(5), 2, 1, &cfg).unwrap();
        assert_eq!(rep.total, Count::from(120u32));
        assert_eq!(rep.cosets, Count::from(25u32));
        assert!(rep.count >= Count::from(5u32));
        let whole = best_coset_intersection(&gf(5), 4, 2, &cfg).unwrap();
        assert_eq!(whole.count, whole.total);
    }

    #[test]
    fn csw_subcode_gf7_k6_r5() {
        let cfg = Config::default();
        let sub = RsCswSubcode::new(&gf(7), 6, 5, &cfg).unwrap();
        assert_eq!(sub.len(), Count::from(36u32));
        let code = sub.materialize(&cfg).unwrap();
        assert_eq!(code.constant_symbol_weight(), Some(5));
        assert!(sub.audit(&cfg).passed());
    }

    #[test]
    fn csw_subcode_gf8_k7_r4_is_distinct_and_in_code() {
        let cfg = Config::default();
        let sub = RsCswSubcode::new(&gf(8), 7, 4, &cfg).unwrap();
        assert_eq!(sub.factor_count(), 28);
        let mut seen = HashSet::new();
        sub.for_each(|_, _, _, w| {
            assert_eq!(symbol_weight(w), 4);
            assert!(sub.code().contains(w));
            assert!(seen.insert(w.to_vec()));
        });
        assert_eq!(Count::from(seen.len()), sub.len());
        for exec in [crate::Exec::Sequential, crate::Exec::Parallel] {
            let audit = sub.audit(&Config::default().with_exec(exec));
            assert!(audit.passed());
            assert_eq!(audit.emitted, sub.len());
        }
    }

    #[test]
    fn csw_hypothesis_is_enforced() {
        let cfg = Config::default();
        assert!(RsCswSubcode::new(&gf(7), 3, 2, &cfg).is_err());
        assert!(RsCswSubcode::new(&gf(7), 4, 2, &cfg).is_err());
        assert!(RsCswSubcode::new(&gf(7), 4, 3, &cfg).is_ok());
    }

    #[test]
    fn lexicographic_subsets() {
        assert_eq!(
            combinations(4, 2),
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(12, 6).len(), 924);
    }
}
