//! Finite fields `GF(p^m)` with small order, and polynomials over them.
//!
//! Elements are labelled by the base-`p` value of their coefficient vector
//! over `GF(p)` (constant coefficient least significant), so the labels are
//! exactly `0..q` and double as symbols of `Z_q`. The extension modulus is
//! the first monic irreducible of degree `m` in that same order.

mod irreducible;
mod poly;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use irreducible::{
    count_monic_irreducibles, enumerate_monic_irreducibles, mobius, products_of_irreducibles_min_deg2,
};
pub use poly::{monic_polys, Poly};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 64;

/// Field element, identified by its label in `0..q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Fe(u32);

impl Fe {
    pub fn label(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Element from a label the caller knows lies in `0..q`.
    #[inline]
    pub(crate) fn from_label_unchecked(label: u32) -> Fe {
        Fe(label)
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug)]
struct Tables {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

/// Immutable field with precomputed operation tables; cheap to clone.
#[derive(Clone, Debug)]
pub struct Field {
    t: Arc<Tables>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.t.p == other.t.p && self.t.modulus == other.t.modulus
    }
}

impl Eq for Field {}

/// Serialised form of a field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub m: u32,
    /// Monic modulus over `GF(p)`, ascending coefficients (degree `m`).
    pub modulus: Vec<u32>,
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Smallest prime power decomposition `q = p^m`, if any.
fn prime_power(q: u32) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut m = 0;
    let mut x = q;
    while x % p == 0 {
        x /= p;
        m += 1;
    }
    (x == 1).then_some((p, m))
}

/// Polynomials over `GF(p)` as ascending coefficient vectors, used only while
/// building tables.
mod prime {
    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        let db = b.len() - 1;
        let lead_inv = inv(b[db], p);
        while r.len() > db && !r.is_empty() {
            let c = r[r.len() - 1] * lead_inv % p;
            let shift = r.len() - 1 - db;
            for (i, &bc) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p * p - c * bc % p) % p;
            }
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        r
    }

    pub fn inv(a: u32, p: u32) -> u32 {
        (1..p).find(|x| a * x % p == 1).expect("nonzero residue is invertible")
    }

    pub fn digits(mut v: u32, p: u32, len: usize) -> Vec<u32> {
        (0..len)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    }

    /// Trial division by every monic polynomial of degree `1..=deg/2`.
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let deg = f.len() - 1;
        for d in 1..=deg / 2 {
            for low in 0..p.pow(d as u32) {
                let mut g = digits(low, p, d);
                g.push(1);
                if rem(f, &g, p).is_empty() {
                    return false;
                }
            }
        }
        deg >= 1
    }
}

impl Field {
    /// `GF(p^m)` with the canonical modulus.
    pub fn new(p: u32, m: u32) -> Result<Self> {
        if !is_prime(p) || m == 0 {
            return Err(Error::invalid(format!("GF({p}^{m}) needs a prime p and m >= 1")));
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or_else(|| Error::invalid(format!("field order {p}^{m} exceeds {MAX_ORDER}")))?;
        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            (0..q)
                .map(|low| {
                    let mut f = prime::digits(low, p, m as usize);
                    f.push(1);
                    f
                })
                .find(|f| prime::is_irreducible(f, p))
                .expect("an irreducible of every degree exists")
        };
        Ok(Self::build(p, m, q, modulus))
    }

    /// Field of order `q`, which must be a prime power.
    pub fn from_order(q: u32) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or_else(|| Error::invalid(format!("{q} is not a prime power")))?;
        Field::new(p, m)
    }

    /// `GF(p)[x] / (modulus)`; the modulus must be monic and irreducible.
    pub fn with_modulus(p: u32, modulus: &[u32]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        if modulus.len() < 2 || modulus.last() != Some(&1) || modulus.iter().any(|&c| c >= p) {
            return Err(Error::invalid(
                "modulus must be monic of degree >= 1 with coefficients below p",
            ));
        }
        let m = modulus.len() as u32 - 1;
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or_else(|| Error::invalid(format!("field order {p}^{m} exceeds {MAX_ORDER}")))?;
        if !prime::is_irreducible(modulus, p) {
            return Err(Error::invalid("modulus is reducible"));
        }
        let modulus = if m == 1 { vec![0, 1] } else { modulus.to_vec() };
        Ok(Self::build(p, m, q, modulus))
    }

    pub fn from_descriptor(d: &FieldDescriptor) -> Result<Self> {
        let f = Field::with_modulus(d.p, &d.modulus)?;
        if f.m() != d.m {
            return Err(Error::invalid("descriptor degree disagrees with its modulus"));
        }
        Ok(f)
    }

    fn build(p: u32, m: u32, q: u32, modulus: Vec<u32>) -> Self {
        let qs = q as usize;
        let mut add = vec![0u8; qs * qs];
        let mut mul = vec![0u8; qs * qs];
        let encode = |v: &[u32]| v.iter().rev().fold(0u32, |acc, &c| acc * p + c);
        for a in 0..q {
            let da = prime::digits(a, p, m as usize);
            for b in 0..q {
                let db = prime::digits(b, p, m as usize);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = encode(&sum) as u8;
                let mut prod = vec![0u32; 2 * m as usize - 1];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                while prod.last() == Some(&0) {
                    prod.pop();
                }
                let mut red = if m == 1 { prod } else { prime::rem(&prod, &modulus, p) };
                red.resize(m as usize, 0);
                mul[(a * q + b) as usize] = encode(&red) as u8;
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[(a * q + b) as usize] == 0).unwrap() as u8)
            .collect();
        let inv = (0..q)
            .map(|a| (1..q).find(|&b| mul[(a * q + b) as usize] == 1).unwrap_or(0) as u8)
            .collect();
        Field {
            t: Arc::new(Tables {
                p,
                m,
                q,
                modulus,
                add,
                mul,
                neg,
                inv,
            }),
        }
    }

    pub fn p(&self) -> u32 {
        self.t.p
    }

    pub fn m(&self) -> u32 {
        self.t.m
    }

    pub fn q(&self) -> u32 {
        self.t.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.t.modulus
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.p(),
            m: self.m(),
            modulus: self.t.modulus.clone(),
        }
    }

    pub fn zero(&self) -> Fe {
        Fe(0)
    }

    pub fn one(&self) -> Fe {
        Fe(1)
    }

    /// Element with the given label.
    pub fn elem(&self, label: u32) -> Result<Fe> {
        if label < self.q() {
            Ok(Fe(label))
        } else {
            Err(Error::invalid(format!("label {label} outside GF({})", self.q())))
        }
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.q()).map(Fe)
    }

    /// Nonzero elements in canonical order: the evaluation points of Reed-Solomon codes.
    pub fn nonzero(&self) -> impl Iterator<Item = Fe> {
        (1..self.q()).map(Fe)
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        Fe(self.t.add[(a.0 * self.t.q + b.0) as usize] as u32)
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        Fe(self.t.neg[a.0 as usize] as u32)
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        Fe(self.t.mul[(a.0 * self.t.q + b.0) as usize] as u32)
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            Err(Error::ZeroInverse)
        } else {
            Ok(Fe(self.t.inv[a.0 as usize] as u32))
        }
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Row of the multiplication table for `a`, indexed by label.
    pub(crate) fn mul_row(&self, a: Fe) -> &[u8] {
        let q = self.t.q as usize;
        &self.t.mul[a.0 as usize * q..(a.0 as usize + 1) * q]
    }

    /// Row of the addition table for `a`, indexed by label.
    pub(crate) fn add_row(&self, a: Fe) -> &[u8] {
        let q = self.t.q as usize;
        &self.t.add[a.0 as usize * q..(a.0 as usize + 1) * q]
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q())
    }
}
