//! Normal-ordered PBW monomials and the compact adjoint.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::Gaussian;
use crate::finite::Gen;

use super::mode::Mode;

/// A normal-ordered word in affine modes: factors strictly increase in the
/// PBW total order, exponents of odd-generator modes are exactly one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PbwMonomial {
    factors: Vec<(Mode, u32)>,
}

impl PbwMonomial {
    pub fn one() -> Self {
        PbwMonomial::default()
    }

    /// Builds a monomial from factors that must already be normal-ordered.
    pub fn from_factors(factors: Vec<(Mode, u32)>) -> Result<Self> {
        for window in factors.windows(2) {
            if window[0].0 >= window[1].0 {
                return Err(Error::Parse(format!(
                    "factors not strictly increasing: {} then {}",
                    window[0].0, window[1].0
                )));
            }
        }
        for (m, e) in &factors {
            if *e == 0 || (m.gen.is_odd() && *e != 1) {
                return Err(Error::Parse(format!("invalid exponent {e} on {m}")));
            }
        }
        Ok(PbwMonomial { factors })
    }

    /// Builds a monomial from an already sorted word of single modes.
    pub fn from_sorted_word(word: &[Mode]) -> Result<Self> {
        let mut factors: Vec<(Mode, u32)> = Vec::new();
        for &m in word {
            match factors.last_mut() {
                Some((last, e)) if *last == m => *e += 1,
                _ => factors.push((m, 1)),
            }
        }
        PbwMonomial::from_factors(factors)
    }

    pub fn factors(&self) -> &[(Mode, u32)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of letters, counting exponents.
    pub fn len(&self) -> usize {
        self.factors.iter().map(|(_, e)| *e as usize).sum()
    }

    /// The word of single modes, left to right.
    pub fn to_word(&self) -> Vec<Mode> {
        let mut word = Vec::with_capacity(self.len());
        for (m, e) in &self.factors {
            for _ in 0..*e {
                word.push(*m);
            }
        }
        word
    }

    /// Total weight in Dynkin-label units.
    pub fn weight_t(&self) -> i64 {
        self.factors
            .iter()
            .map(|(m, e)| m.gen.weight_t() * *e as i64)
            .sum()
    }

    /// Twice the conformal grade (minus the sum of mode indices, doubled).
    pub fn grade2(&self) -> i64 {
        self.factors.iter().map(|(m, e)| -m.idx2 * *e as i64).sum()
    }

    /// Prepends a mode that must be strictly smaller than (or equal even to)
    /// the current first factor; panics otherwise. Used by the straightening
    /// engine once a mode has been commuted into place.
    pub fn prepended(&self, m: Mode) -> PbwMonomial {
        let mut factors = self.factors.clone();
        match factors.first_mut() {
            Some((first, e)) if *first == m => {
                debug_assert!(!m.gen.is_odd());
                *e += 1;
            }
            Some((first, _)) => {
                debug_assert!(m < *first);
                factors.insert(0, (m, 1));
            }
            None => factors.push((m, 1)),
        }
        PbwMonomial { factors }
    }

    /// Splits off one copy of the first factor, returning `(mode, tail)`.
    pub fn split_first(&self) -> Option<(Mode, PbwMonomial)> {
        let (&(m, e), rest) = self.factors.split_first()?;
        let mut factors = Vec::with_capacity(self.factors.len());
        if e > 1 {
            factors.push((m, e - 1));
        }
        factors.extend_from_slice(rest);
        Some((m, PbwMonomial { factors }))
    }

    /// The compact adjoint: returns the daggered word (in product order) and
    /// the accumulated scalar. Each `x_n` contributes `i*y_{-n}` and each
    /// `y_n` contributes `-i*x_{-n}`; even modes map to their partners at
    /// negated index with coefficient one.
    pub fn adjoint(&self) -> (Vec<Mode>, Gaussian) {
        dagger_word(&self.to_word())
    }
}

/// Dagger of an arbitrary word of modes: the reversed word of daggered
/// letters together with the accumulated power of `i`.
pub fn dagger_word(word: &[Mode]) -> (Vec<Mode>, Gaussian) {
    let mut out = Vec::with_capacity(word.len());
    let mut ipow: i64 = 0;
    for &m in word.iter().rev() {
        let (gen, di) = match m.gen {
            Gen::E => (Gen::F, 0),
            Gen::F => (Gen::E, 0),
            Gen::H => (Gen::H, 0),
            Gen::X => (Gen::Y, 1),
            Gen::Y => (Gen::X, -1),
        };
        ipow += di;
        out.push(Mode::new(gen, -m.idx2));
    }
    (out, Gaussian::i_pow(ipow))
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (m, e) in &self.factors {
            write!(f, "{m}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for PbwMonomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<PbwMonomial> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(PbwMonomial::one());
        }
        let mut factors = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("invalid monomial `{s}`")))?;
            let mode: Mode = rest[..=close].parse()?;
            rest = &rest[close + 1..];
            let mut exp = 1u32;
            if let Some(stripped) = rest.strip_prefix('^') {
                let end = stripped
                    .find(|c: char| !c.is_ascii_digit())
                    .unwrap_or(stripped.len());
                exp = stripped[..end]
                    .parse()
                    .map_err(|_| Error::Parse(format!("invalid exponent in `{s}`")))?;
                rest = &stripped[end..];
            }
            factors.push((mode, exp));
        }
        PbwMonomial::from_factors(factors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Gaussian;

    fn mono(s: &str) -> PbwMonomial {
        s.parse().unwrap()
    }

    #[test]
    fn weight_and_grade() {
        let m = mono("e(-1)f(0)^2");
        assert_eq!(m.weight_t(), -2);
        assert_eq!(m.grade2(), 2);
        let m = mono("x(-1/2)f(0)");
        assert_eq!(m.weight_t(), -1);
        assert_eq!(m.grade2(), 1);
    }

    #[test]
    fn adjoint_examples() {
        let (word, c) = mono("e(-1)f(0)^2").adjoint();
        assert_eq!(
            word,
            vec![
                Mode::new(Gen::E, 0),
                Mode::new(Gen::E, 0),
                Mode::new(Gen::F, 2)
            ]
        );
        assert!(c.is_one());

        let (word, c) = mono("h(-2)").adjoint();
        assert_eq!(word, vec![Mode::new(Gen::H, 4)]);
        assert!(c.is_one());

        let (word, c) = mono("x(-1)").adjoint();
        assert_eq!(word, vec![Mode::new(Gen::Y, 2)]);
        assert_eq!(c, Gaussian::i());
    }

    #[test]
    fn adjoint_involutive() {
        for s in ["e(-1)f(0)^2", "y(-1/2)x(-1/2)f(0)", "h(-2)e(-1)"] {
            let m = mono(s);
            let (word, c) = m.adjoint();
            // Dagger the daggered word again, letter by letter.
            let mut back = Vec::new();
            let mut ipow = 0i64;
            for &w in word.iter().rev() {
                let (gen, di) = match w.gen {
                    Gen::E => (Gen::F, 0),
                    Gen::F => (Gen::E, 0),
                    Gen::H => (Gen::H, 0),
                    Gen::X => (Gen::Y, 1),
                    Gen::Y => (Gen::X, -1),
                };
                ipow += di;
                back.push(Mode::new(gen, -w.idx2));
            }
            let c2 = Gaussian::i_pow(ipow);
            assert_eq!(back, m.to_word());
            assert!((&c * &c2).is_one());
        }
    }

    #[test]
    fn display_round_trip() {
        for s in ["1", "f(-1)", "e(-1)f(0)^2", "y(-1/2)x(-1/2)f(0)"] {
            assert_eq!(mono(s).to_string(), s);
        }
    }
}
