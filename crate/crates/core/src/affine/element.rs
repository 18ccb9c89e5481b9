//! Linear combinations of PBW monomials with Gaussian-rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::Gaussian;

use super::monomial::PbwMonomial;

/// An element of the level-reduced enveloping algebra in normal form. The
/// central element is already a scalar, so constants appear as a coefficient
/// on the empty monomial; no zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<PbwMonomial, Gaussian>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn monomial(m: PbwMonomial, coeff: Gaussian) -> Self {
        let mut el = AlgebraElement::zero();
        el.add_term(m, coeff);
        el
    }

    pub fn scalar(coeff: Gaussian) -> Self {
        AlgebraElement::monomial(PbwMonomial::one(), coeff)
    }

    pub fn add_term(&mut self, m: PbwMonomial, coeff: Gaussian) {
        use std::collections::btree_map::Entry;
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                let v = o.get() + &coeff;
                if v.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn add_assign(&mut self, other: &AlgebraElement) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn scaled(&self, c: &Gaussian) -> AlgebraElement {
        if c.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Gaussian {
        self.terms.get(m).cloned().unwrap_or_else(Gaussian::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PbwMonomial, &Gaussian)> {
        self.terms.iter()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| json!([m.to_string(), c.to_string()]))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("expected array of [monomial, coeff]".into()))?;
        let mut el = AlgebraElement::zero();
        for pair in arr {
            let pair = pair
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| Error::Parse("expected [monomial, coeff] pair".into()))?;
            let m: PbwMonomial = pair[0]
                .as_str()
                .ok_or_else(|| Error::Parse("monomial must be a string".into()))?
                .parse()?;
            let c: Gaussian = pair[1]
                .as_str()
                .ok_or_else(|| Error::Parse("coefficient must be a string".into()))?
                .parse()?;
            el.add_term(m, c);
        }
        Ok(el)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "({c}){m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;

    #[test]
    fn zero_coefficients_are_dropped() {
        let m: PbwMonomial = "f(-1)".parse().unwrap();
        let mut el = AlgebraElement::monomial(m.clone(), Gaussian::one());
        el.add_term(m, -Gaussian::one());
        assert!(el.is_zero());
    }

    #[test]
    fn json_round_trip() {
        let mut el = AlgebraElement::zero();
        el.add_term("f(-1)e(1)".parse().unwrap(), Gaussian::one());
        el.add_term("h(0)".parse().unwrap(), Gaussian::one());
        el.add_term(
            PbwMonomial::one(),
            Gaussian::from_rational(Rational::new(-1, 2)),
        );
        let back = AlgebraElement::from_json(&el.to_json()).unwrap();
        assert_eq!(el, back);
    }
}
