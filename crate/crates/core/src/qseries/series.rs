//! The truncated generalized power series type.

use std::fmt;

use num_integer::Integer;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// A truncated series `sum_j coeffs[j] q^(base + j/denom)`.
///
/// Exponents live on the lattice `(1/denom) Z`; `base * denom` is an integer.
/// All coefficients up to and including `base + (coeffs.len()-1)/denom` are
/// exact; arithmetic tracks the common guaranteed truncation of its operands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    denom: u64,
    base: Rational,
    coeffs: Vec<Rational>,
}

impl QSeries {
    /// A zero series carrying `steps + 1` known (zero) coefficients.
    pub fn zero(denom: u64, base: Rational, steps: usize) -> Self {
        let mut s = QSeries {
            denom,
            base,
            coeffs: vec![Rational::zero(); steps + 1],
        };
        s.normalize_base();
        s
    }

    /// The constant series 1, exact through `orders` integer powers.
    pub fn one(orders: u32) -> Self {
        let mut s = QSeries::zero(1, Rational::zero(), orders as usize);
        s.coeffs[0] = Rational::one();
        s
    }

    /// A single term `coeff * q^exp`, exact through `exp + orders`.
    pub fn monomial(exp: Rational, coeff: Rational, orders: u32) -> Self {
        let denom: u64 = exp.denom().try_into().unwrap_or(u64::MAX);
        let mut s = QSeries::zero(denom, exp, (orders as u64 * denom) as usize);
        s.coeffs[0] = coeff;
        s
    }

    /// Builds a series from `(exponent, coefficient)` terms, all of which
    /// must lie at or below the stated truncation `trunc_exp` (inclusive).
    pub fn from_terms(terms: &[(Rational, Rational)], trunc_exp: &Rational) -> Self {
        let mut denom: u64 = trunc_exp.denom().try_into().unwrap_or(u64::MAX);
        let mut base = trunc_exp.clone();
        for (e, _) in terms {
            let d: u64 = e.denom().try_into().unwrap_or(u64::MAX);
            denom = denom.lcm(&d);
            if e < &base {
                base = e.clone();
            }
        }
        let steps = (&(trunc_exp - &base) * &Rational::int(denom as i64))
            .to_i64()
            .expect("integral step count");
        assert!(steps >= 0, "truncation below every term");
        let mut s = QSeries::zero(denom, base, steps as usize);
        for (e, c) in terms {
            if e <= trunc_exp {
                let idx = s.index_of(e).expect("term on lattice");
                s.coeffs[idx] = &s.coeffs[idx] + c;
            }
        }
        s
    }

    fn normalize_base(&mut self) {
        let d: u64 = self.base.denom().try_into().unwrap_or(u64::MAX);
        if !self.denom.is_multiple_of(d) {
            let new = self.denom.lcm(&d);
            self.refine_in_place(new);
        }
    }

    pub fn denom(&self) -> u64 {
        self.denom
    }

    pub fn base(&self) -> &Rational {
        &self.base
    }

    /// Largest exponent whose coefficient is guaranteed exact.
    pub fn trunc_exp(&self) -> Rational {
        &self.base + &Rational::new((self.coeffs.len() as i64) - 1, self.denom as i64)
    }

    fn index_of(&self, exp: &Rational) -> Option<usize> {
        let rel = &(exp - &self.base) * &Rational::int(self.denom as i64);
        let idx = rel.to_i64()?;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            None
        } else {
            Some(idx as usize)
        }
    }

    /// Exact coefficient at `exp`; zero below the base or off the lattice,
    /// an error beyond the truncation.
    pub fn coeff_at(&self, exp: &Rational) -> Result<Rational> {
        if exp > &self.trunc_exp() {
            return Err(Error::BeyondTruncation {
                exp: exp.to_string(),
            });
        }
        if exp < &self.base {
            return Ok(Rational::zero());
        }
        match self.index_of(exp) {
            Some(i) => Ok(self.coeffs[i].clone()),
            None => Ok(Rational::zero()),
        }
    }

    /// Coefficient at `base + k` for integer `k`; convenience for reading
    /// "order k of the product part".
    pub fn coeff_at_order(&self, k: i64) -> Result<Rational> {
        self.coeff_at(&(&self.base + &Rational::int(k)))
    }

    /// Coefficient at `base + k/2`.
    pub fn coeff_at_half_order(&self, k: i64) -> Result<Rational> {
        self.coeff_at(&(&self.base + &Rational::new(k, 2)))
    }

    fn refine_in_place(&mut self, new_denom: u64) {
        assert!(new_denom.is_multiple_of(self.denom));
        let stride = (new_denom / self.denom) as usize;
        if stride == 1 {
            self.denom = new_denom;
            return;
        }
        let mut coeffs = vec![Rational::zero(); (self.coeffs.len() - 1) * stride + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * stride] = c.clone();
        }
        self.denom = new_denom;
        self.coeffs = coeffs;
    }

    /// The same series on a lattice refined to a multiple of `new_denom`.
    pub fn refined(&self, new_denom: u64) -> QSeries {
        let mut s = self.clone();
        let target = s.denom.lcm(&new_denom);
        s.refine_in_place(target);
        s
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let d = self.denom.lcm(&other.denom);
        let a = self.refined(d);
        let b = other.refined(d);
        let base = if a.base <= b.base {
            a.base.clone()
        } else {
            b.base.clone()
        };
        let trunc = if a.trunc_exp() <= b.trunc_exp() {
            a.trunc_exp()
        } else {
            b.trunc_exp()
        };
        let steps = (&(&trunc - &base) * &Rational::int(d as i64))
            .to_i64()
            .expect("integral steps");
        if steps < 0 {
            return QSeries::zero(d, base, 0);
        }
        let mut out = QSeries::zero(d, base.clone(), steps as usize);
        for i in 0..out.coeffs.len() {
            let exp = &base + &Rational::new(i as i64, d as i64);
            let av = a.index_of(&exp).map(|j| a.coeffs[j].clone());
            let bv = b.index_of(&exp).map(|j| b.coeffs[j].clone());
            out.coeffs[i] = &av.unwrap_or_else(Rational::zero) + &bv.unwrap_or_else(Rational::zero);
        }
        out
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.add(&other.scaled(&Rational::int(-1)))
    }

    pub fn scaled(&self, c: &Rational) -> QSeries {
        QSeries {
            denom: self.denom,
            base: self.base.clone(),
            coeffs: self.coeffs.iter().map(|v| v * c).collect(),
        }
    }

    /// Shifts every exponent by `delta`.
    pub fn shifted(&self, delta: &Rational) -> QSeries {
        let mut s = QSeries {
            denom: self.denom,
            base: &self.base + delta,
            coeffs: self.coeffs.clone(),
        };
        s.normalize_base();
        s
    }

    pub fn mul(&self, other: &QSeries) -> QSeries {
        let d = self.denom.lcm(&other.denom);
        let a = self.refined(d);
        let b = other.refined(d);
        let steps = (a.coeffs.len() - 1).min(b.coeffs.len() - 1);
        let mut out = QSeries::zero(d, &a.base + &b.base, steps);
        for (i, av) in a.coeffs.iter().enumerate().take(steps + 1) {
            if av.is_zero() {
                continue;
            }
            for (j, bv) in b.coeffs.iter().enumerate().take(steps + 1 - i) {
                if bv.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = &out.coeffs[i + j] + &(av * bv);
            }
        }
        out
    }

    /// Multiplicative inverse; requires a nonzero coefficient at the base.
    pub fn invert(&self) -> Result<QSeries> {
        let lead = &self.coeffs[0];
        if lead.is_zero() {
            return Err(Error::NonInvertibleSeries);
        }
        let n = self.coeffs.len();
        let mut inv = vec![Rational::zero(); n];
        inv[0] = lead.recip();
        for m in 1..n {
            let mut acc = Rational::zero();
            for i in 1..=m {
                if !self.coeffs[i].is_zero() {
                    acc = &acc + &(&self.coeffs[i] * &inv[m - i]);
                }
            }
            inv[m] = &(-&acc) / lead;
        }
        Ok(QSeries {
            denom: self.denom,
            base: -&self.base,
            coeffs: inv,
        })
    }

    /// Integer power via repeated squaring; negative powers invert first.
    pub fn pow(&self, exp: i64) -> Result<QSeries> {
        if exp == 0 {
            let steps = self.coeffs.len() - 1;
            let mut one = QSeries::zero(self.denom, Rational::zero(), steps);
            one.coeffs[0] = Rational::one();
            return Ok(one);
        }
        let mut b = if exp < 0 {
            self.invert()?
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc: Option<QSeries> = None;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => b.clone(),
                    Some(a) => a.mul(&b),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            b = b.mul(&b);
        }
        Ok(acc.expect("nonzero exponent"))
    }

    /// True iff the two series agree at every exponent up to the smaller of
    /// the two truncations.
    pub fn eq_to_truncation(&self, other: &QSeries) -> bool {
        self.first_difference(other).is_none()
    }

    /// First exponent (on the common lattice) where the two series differ
    /// within their common truncation window.
    pub fn first_difference(&self, other: &QSeries) -> Option<Rational> {
        let d = self.denom.lcm(&other.denom);
        let a = self.refined(d);
        let b = other.refined(d);
        let lo = if a.base <= b.base {
            a.base.clone()
        } else {
            b.base.clone()
        };
        let hi = if a.trunc_exp() <= b.trunc_exp() {
            a.trunc_exp()
        } else {
            b.trunc_exp()
        };
        let mut exp = lo;
        while exp <= hi {
            let av = a.coeff_at(&exp).unwrap_or_else(|_| Rational::zero());
            let bv = b.coeff_at(&exp).unwrap_or_else(|_| Rational::zero());
            if av != bv {
                return Some(exp);
            }
            exp = &exp + &Rational::new(1, d as i64);
        }
        None
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> Vec<(Rational, Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                (
                    &self.base + &Rational::new(i as i64, self.denom as i64),
                    c.clone(),
                )
            })
            .collect()
    }

    /// JSON form: ascending `[exponent, coefficient]` pairs, zeros omitted.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .into_iter()
                .map(|(e, c)| json!([e.to_string(), c.to_string()]))
                .collect(),
        )
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            write!(f, "0")?;
        } else {
            for (i, (e, c)) in terms.iter().enumerate() {
                if i > 0 {
                    write!(f, " + ")?;
                }
                if e.is_zero() {
                    write!(f, "{c}")?;
                } else {
                    write!(f, "{c}*q^({e})")?;
                }
            }
        }
        write!(f, " + O(q^({}))", self.trunc_exp())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn geometric_inverse() {
        // (1 - q) * (1 + q + q^2 + ...) = 1.
        let mut one_minus_q = QSeries::zero(1, Rational::zero(), 8);
        one_minus_q.coeffs[0] = Rational::one();
        one_minus_q.coeffs[1] = Rational::int(-1);
        let inv = one_minus_q.invert().unwrap();
        for k in 0..=8 {
            assert_eq!(inv.coeff_at_order(k).unwrap(), Rational::one());
        }
        assert!(one_minus_q.mul(&inv).eq_to_truncation(&QSeries::one(8)));
    }

    #[test]
    fn half_lattice_addition() {
        let a = QSeries::monomial(rat(1, 2), Rational::one(), 3);
        let b = QSeries::monomial(Rational::one(), Rational::one(), 3);
        let s = a.add(&b);
        assert_eq!(s.denom() % 2, 0);
        assert_eq!(s.coeff_at(&rat(1, 2)).unwrap(), Rational::one());
        assert_eq!(s.coeff_at(&Rational::one()).unwrap(), Rational::one());
        assert_eq!(s.coeff_at(&rat(3, 2)).unwrap(), Rational::zero());
    }

    #[test]
    fn truncation_tracks_products() {
        let a = QSeries::monomial(rat(-1, 12), Rational::one(), 4);
        let b = QSeries::one(2);
        let p = a.mul(&b);
        assert_eq!(p.trunc_exp(), &rat(-1, 12) + &rat(2, 1));
    }

    #[test]
    fn beyond_truncation_is_an_error() {
        let a = QSeries::one(2);
        assert!(a.coeff_at(&rat(3, 1)).is_err());
        assert_eq!(a.coeff_at(&rat(1, 2)).unwrap(), Rational::zero());
    }
}
