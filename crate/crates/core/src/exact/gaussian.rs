//! Gaussian rationals, the coefficient field of the Shapovalov machinery.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::Error;
use crate::exact::Rational;

/// A Gaussian rational `re + im*i` with exact arithmetic, `i^2 = -1`.
///
/// Serializes as `a/b+c/d*i` with zero parts omitted (`0` for zero).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

impl Gaussian {
    pub fn new(re: Rational, im: Rational) -> Self {
        Gaussian { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        Gaussian {
            re,
            im: Rational::zero(),
        }
    }

    pub fn zero() -> Self {
        Gaussian::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Gaussian::from_rational(Rational::one())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Gaussian::new(Rational::zero(), Rational::one())
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Gaussian::one(),
            1 => Gaussian::i(),
            2 => -Gaussian::one(),
            _ => -Gaussian::i(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Gaussian {
        Gaussian::new(self.re.clone(), -&self.im)
    }

    /// `re^2 + im^2`.
    pub fn norm_sq(&self) -> Rational {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Gaussian> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        Some(Gaussian::new(&self.re / &n, -&self.im / &n))
    }

    pub fn scale(&self, r: &Rational) -> Gaussian {
        Gaussian::new(&self.re * r, &self.im * r)
    }

    pub fn bit_size(&self) -> u64 {
        self.re.bit_size() + self.im.bit_size()
    }
}

impl Add for &Gaussian {
    type Output = Gaussian;
    fn add(self, rhs: &Gaussian) -> Gaussian {
        Gaussian::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &Gaussian {
    type Output = Gaussian;
    fn sub(self, rhs: &Gaussian) -> Gaussian {
        Gaussian::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &Gaussian {
    type Output = Gaussian;
    fn mul(self, rhs: &Gaussian) -> Gaussian {
        Gaussian::new(
            &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        )
    }
}

impl Div for &Gaussian {
    type Output = Gaussian;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Gaussian) -> Gaussian {
        self * &rhs.inv().expect("division by zero Gaussian rational")
    }
}

impl Neg for &Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian::new(-&self.re, -&self.im)
    }
}

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian::new(-self.re, -self.im)
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait<Gaussian> for Gaussian {
            type Output = Gaussian;
            fn $method(self, rhs: Gaussian) -> Gaussian {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a Gaussian> for Gaussian {
            type Output = Gaussian;
            fn $method(self, rhs: &'a Gaussian) -> Gaussian {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<Gaussian> for &'a Gaussian {
            type Output = Gaussian;
            fn $method(self, rhs: Gaussian) -> Gaussian {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl From<Rational> for Gaussian {
    fn from(r: Rational) -> Self {
        Gaussian::from_rational(r)
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}*i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{}-{}*i", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

impl fmt::Debug for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Gaussian {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if let Some(body) = s.strip_suffix("*i") {
            // Either pure imaginary or `re±im*i`; find the sign that splits
            // the real part from the imaginary part (skip a leading sign).
            for (idx, ch) in body.char_indices().skip(1) {
                if (ch == '+' || ch == '-') && !body[..idx].ends_with('/') {
                    let re: Rational = body[..idx].parse()?;
                    let im_str = &body[idx..];
                    let im: Rational = if let Some(rest) = im_str.strip_prefix('+') {
                        rest.parse()?
                    } else {
                        im_str.parse()?
                    };
                    return Ok(Gaussian::new(re, im));
                }
            }
            return Ok(Gaussian::new(Rational::zero(), body.parse()?));
        }
        Ok(Gaussian::from_rational(s.parse()?))
    }
}
