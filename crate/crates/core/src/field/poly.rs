use std::fmt;

use serde::{Serialize, Serializer};

use super::{Fe, Field};
use crate::{Error, Result};

/// Univariate polynomial with ascending coefficients and no trailing zeros.
///
/// The zero polynomial has no coefficients and degree `None`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    coeffs: Vec<Fe>,
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

impl Poly {
    pub fn new(mut coeffs: Vec<Fe>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Polynomial from coefficient labels, validated against `field`.
    pub fn from_labels(field: &Field, labels: &[u32]) -> Result<Self> {
        labels
            .iter()
            .map(|&l| field.elem(l))
            .collect::<Result<Vec<_>>>()
            .map(Poly::new)
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: Fe) -> Self {
        Poly::new(vec![c])
    }

    /// `x - a`.
    pub fn linear_root(field: &Field, a: Fe) -> Self {
        Poly::new(vec![field.neg(a), field.one()])
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn labels(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.label()).collect()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lead(&self) -> Option<Fe> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(|c| c.label() == 1)
    }

    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or(Fe(0))
    }

    pub fn add(&self, other: &Poly, f: &Field) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..len).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Poly, f: &Field) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..len).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn scale(&self, c: Fe, f: &Field) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly, f: &Field) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Fe(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(out)
    }

    /// Quotient and remainder; the divisor must be nonzero.
    pub fn divrem(&self, divisor: &Poly, f: &Field) -> Result<(Poly, Poly)> {
        let db = divisor
            .degree()
            .ok_or_else(|| Error::invalid("polynomial division by zero"))?;
        let lead_inv = f.inv(divisor.coeffs[db])?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Fe(0); rem.len() - db];
        for i in (db..rem.len()).rev() {
            let c = f.mul(rem[i], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[i - db] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let k = i - db + j;
                rem[k] = f.sub(rem[k], f.mul(c, b));
            }
        }
        rem.truncate(db);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, divisor: &Poly, f: &Field) -> Result<Poly> {
        Ok(self.divrem(divisor, f)?.1)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: Fe, f: &Field) -> Fe {
        self.coeffs.iter().rev().fold(Fe(0), |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Values at every nonzero field element in canonical order, as labels.
    pub fn eval_all(&self, f: &Field) -> Vec<u32> {
        f.nonzero().map(|x| self.eval(x, f).label()).collect()
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly, f: &Field) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, f).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic(f)
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self, f: &Field) -> Poly {
        match self.lead() {
            None => Poly::zero(),
            Some(l) => self.scale(f.inv(l).expect("leading coefficient is nonzero"), f),
        }
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u64, m: &Poly, f: &Field) -> Result<Poly> {
        let mut base = self.rem(m, f)?;
        let mut acc = Poly::constant(f.one()).rem(m, f)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, f).rem(m, f)?;
            }
            base = base.mul(&base, f).rem(m, f)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// True when some field element is a root.
    pub fn has_root(&self, f: &Field) -> bool {
        f.elements().any(|x| self.eval(x, f).is_zero())
    }

    /// Irreducibility by Ben-Or's test: `gcd(g, x^{q^i} - x) = 1` for `i <= deg/2`.
    pub fn is_irreducible(&self, f: &Field) -> bool {
        let Some(deg) = self.degree() else { return false };
        if deg == 0 {
            return false;
        }
        let g = self.monic(f);
        let x = Poly::new(vec![Fe(0), f.one()]);
        let mut power = x.clone();
        for _ in 1..=deg / 2 {
            power = power.powmod(f.q() as u64, &g, f).expect("nonzero modulus");
            if g.gcd(&power.sub(&x, f), f).degree() != Some(0) {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return out.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                out.write_str(" + ")?;
            }
            first = false;
            match (i, c.label()) {
                (0, l) => write!(out, "{l}")?,
                (1, 1) => out.write_str("x")?,
                (1, l) => write!(out, "{l}x")?,
                (_, 1) => write!(out, "x^{i}")?,
                (_, l) => write!(out, "{l}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Every monic polynomial of `degree`, in canonical order: the lower
/// coefficients, read as base-`q` digits with the constant term least
/// significant, count upwards.
pub fn monic_polys(field: &Field, degree: usize) -> impl Iterator<Item = Poly> + '_ {
    let q = field.q() as u64;
    let total = q.pow(degree as u32);
    (0..total).map(move |mut idx| {
        let mut coeffs = Vec::with_capacity(degree + 1);
        for _ in 0..degree {
            coeffs.push(Fe((idx % q) as u32));
            idx /= q;
        }
        coeffs.push(field.one());
        Poly::new(coeffs)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(f: &Field, labels: &[u32]) -> Poly {
        Poly::from_labels(f, labels).unwrap()
    }

    #[test]
    fn trimming_and_degree() {
        let f = Field::from_order(5).unwrap();
        assert_eq!(p(&f, &[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(p(&f, &[0, 0]).degree(), None);
        assert!(Poly::from_labels(&f, &[5]).is_err());
    }

    #[test]
    fn evaluation_examples() {
        let f = Field::from_order(5).unwrap();
        assert_eq!(p(&f, &[0, 1]).eval_all(&f), vec![1, 2, 3, 4]);
        assert_eq!(p(&f, &[3]).eval_all(&f), vec![3; 4]);
        let g7 = Field::from_order(7).unwrap();
        // x^3 + 2 at 1..6: cubes are 1,1,6,1,6,6.
        assert_eq!(p(&g7, &[2, 0, 0, 1]).eval_all(&g7), vec![3, 3, 1, 3, 1, 1]);
    }

    #[test]
    fn division_identity() {
        let f = Field::from_order(9).unwrap();
        let a = p(&f, &[3, 8, 1, 0, 5, 2]);
        let b = p(&f, &[4, 0, 7]);
        let (q, r) = a.divrem(&b, &f).unwrap();
        assert_eq!(q.mul(&b, &f).add(&r, &f), a);
        assert!(r.degree().map_or(true, |d| d < 2));
        assert!(a.divrem(&Poly::zero(), &f).is_err());
    }

    #[test]
    fn gcd_and_irreducibility() {
        let f = Field::from_order(7).unwrap();
        assert!(p(&f, &[2, 0, 0, 1]).is_irreducible(&f));
        assert!(!p(&f, &[1, 0, 0, 1]).is_irreducible(&f));
        let a = p(&f, &[1, 1]).mul(&p(&f, &[1, 0, 1]), &f);
        let b = p(&f, &[1, 1]).mul(&p(&f, &[2, 1]), &f);
        assert_eq!(a.gcd(&b, &f), p(&f, &[1, 1]));
        let g2 = Field::from_order(2).unwrap();
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2 has no root but is reducible.
        let sq = p(&g2, &[1, 0, 1, 0, 1]);
        assert!(!sq.has_root(&g2));
        assert!(!sq.is_irreducible(&g2));
    }

    #[test]
    fn display_and_json() {
        let f = Field::from_order(7).unwrap();
        let g = p(&f, &[2, 0, 0, 1]);
        assert_eq!(g.to_string(), "x^3 + 2");
        assert_eq!(serde_json::to_string(&g).unwrap(), "[2,0,0,1]");
    }

    #[test]
    fn monic_enumeration_order() {
        let f = Field::from_order(3).unwrap();
        let all: Vec<Vec<u32>> = monic_polys(&f, 1).map(|g| g.labels()).collect();
        assert_eq!(all, vec![vec![0, 1], vec![1, 1], vec![2, 1]]);
        assert_eq!(monic_polys(&f, 0).count(), 1);
        assert_eq!(monic_polys(&f, 3).count(), 27);
    }
}
