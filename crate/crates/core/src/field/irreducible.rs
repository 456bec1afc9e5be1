use num_bigint::BigInt;
use num_traits::Zero;

use super::{monic_polys, Field, Poly};
use crate::arith::pow;
use crate::{Config, Count, Result};

/// Moebius function: 0 when a square divides `t`, else `(-1)^(number of prime factors)`.
pub fn mobius(t: u64) -> i8 {
    assert!(t >= 1, "mobius is defined for t >= 1");
    let mut x = t;
    let mut sign = 1i8;
    let mut p = 2;
    while p * p <= x {
        if x % p == 0 {
            x /= p;
            if x % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if x > 1 {
        sign = -sign;
    }
    sign
}

/// Number of monic irreducible polynomials of degree `t` over `GF(q)`:
/// `(1/t) sum_{s | t} mu(s) q^(t/s)`.
pub fn count_monic_irreducibles(q: u64, t: u64) -> Count {
    assert!(t >= 1, "degree must be at least 1");
    let mut acc = BigInt::zero();
    for s in (1..=t).filter(|s| t % s == 0) {
        let term = BigInt::from(pow(q, t / s));
        match mobius(s) {
            1 => acc += term,
            -1 => acc -= term,
            _ => {}
        }
    }
    let acc = acc / BigInt::from(t);
    acc.to_biguint().expect("irreducible count is non-negative")
}

/// Monic irreducibles of degree `t` in canonical order; refuses when `q^t`
/// candidates exceed the enumeration cap.
pub fn enumerate_monic_irreducibles<'a>(
    field: &'a Field,
    t: usize,
    cfg: &Config,
) -> Result<impl Iterator<Item = Poly> + 'a> {
    cfg.check_enumeration("monic polynomial scan", &pow(field.q() as u64, t as u64))?;
    Ok(monic_polys(field, t).filter(move |g| t >= 1 && g.is_irreducible(field)))
}

/// Monic polynomials of `degree` without a root in the field, which are
/// exactly the products of irreducibles of degree at least two.
///
/// Degree 0 yields the constant 1; degree 1 yields nothing.
pub fn products_of_irreducibles_min_deg2<'a>(
    field: &'a Field,
    degree: usize,
    cfg: &Config,
) -> Result<impl Iterator<Item = Poly> + 'a> {
    cfg.check_enumeration("monic polynomial scan", &pow(field.q() as u64, degree as u64))?;
    Ok(monic_polys(field, degree).filter(move |g| !g.has_root(field)))
}
